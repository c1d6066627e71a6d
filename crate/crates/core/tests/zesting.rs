//! The zesting master property: every corpus instance that satisfies the
//! obstruction equation assembles into a category passing all axiom suites,
//! and the verifiers detect every single-scalar defect.

use gcb_core::cochain::{self, Cochain};
use gcb_core::corpus;
use gcb_core::fingroup::{make_cyclic, FiniteAbelianGroup};
use gcb_core::gcrossed::{self, GCrossedPointedCategory};
use gcb_core::pointed::PointedBraidedCategory;
use gcb_core::report::{AxiomLabel, ReportOptions};

#[test]
fn zest_outputs_satisfy_every_axiom() {
    let corpus = corpus::zestable_corpus();
    assert!(!corpus.is_empty());
    for inst in &corpus {
        let c = inst.build();
        c.validate_typing()
            .unwrap_or_else(|e| panic!("{}: typing {e}", inst.name));
        let report = c.verify_all(ReportOptions::FirstHundred);
        assert!(report.passed(), "{}:\n{report}", inst.name);
    }
}

#[test]
fn obstructed_data_is_rejected_with_witness() {
    let obstructed = corpus::obstructed_corpus();
    assert!(!obstructed.is_empty());
    for inst in &obstructed {
        let omega = Cochain::zero(3, inst.grp.clone(), inst.b.scalars().clone());
        match gcrossed::zest(&inst.b, &inst.grp, &inst.mu, &omega) {
            Err(gcrossed::GcError::ObstructionNonvanishing { pushforward }) => {
                assert!(!pushforward.is_zero(), "{}", inst.name);
            }
            other => panic!("{}: expected obstruction, got {other:?}", inst.name),
        }
    }
}

/// Assembling the tables with an omega violating the obstruction equation
/// must fail the pentagon, with defect exactly `d(omega) - pushforward`.
#[test]
fn wrong_omega_breaks_pentagon_by_the_obstruction() {
    // Fermion base: alpha = 0, beta(1,1) = 2 over Z/4; mu(1,1) = 1 has a
    // solvable obstruction (omega(1,1,1) odd), so omega = 0 is wrong.
    let a = FiniteAbelianGroup::cyclic(2);
    let k = FiniteAbelianGroup::cyclic(4);
    let b = PointedBraidedCategory::new(
        a.clone(),
        k.clone(),
        vec![0; 8],
        vec![0, 0, 0, 2],
    )
    .unwrap();
    let grp = make_cyclic(2);
    let mut mu = Cochain::zero(2, grp.clone(), a.clone());
    mu.set(&[1, 1], 1);
    let omega = Cochain::zero(3, grp.clone(), k.clone());
    let ac = cochain::AbelianThreeCocycle::new(
        a.clone(),
        k.clone(),
        Cochain::new(3, a.to_group(), k.clone(), b.alpha_table().to_vec()).unwrap(),
        b.beta_table().to_vec(),
    )
    .unwrap();
    assert!(cochain::solve_obstruction(&mu, &ac).unwrap().is_some());
    assert!(gcrossed::zest(&b, &grp, &mu, &omega).is_err());

    let c = gcrossed::zest_unchecked(&b, &grp, &mu, &omega);
    c.validate_typing().unwrap();
    let report = c.verify_monoidal(ReportOptions::All);
    assert!(!report.passed());
    let push = cochain::pw_pushforward(&mu, &ac).unwrap();
    let domega = cochain::coboundary(&omega);
    // Pointwise: pentagon defect at graded objects equals (d omega - push)
    // at the grade tuple, for every object tuple.
    let defect_at = |w: usize, x: usize, y: usize, z: usize| {
        let mut d = c.a(x, y, z);
        d = k.sub(d, c.a(c.ten(w, x), y, z));
        d = k.add(d, c.a(w, c.ten(x, y), z));
        d = k.sub(d, c.a(w, x, c.ten(y, z)));
        d = k.add(d, c.a(w, x, y));
        d
    };
    for w in c.objects() {
        for x in c.objects() {
            for y in c.objects() {
                for z in c.objects() {
                    let grades = [
                        c.grade_of(w),
                        c.grade_of(x),
                        c.grade_of(y),
                        c.grade_of(z),
                    ];
                    let expected = k.sub(domega.value(&grades), push.value(&grades));
                    assert_eq!(
                        defect_at(w, x, y, z),
                        expected,
                        "at objects ({w},{x},{y},{z})"
                    );
                }
            }
        }
    }
    // At the failing grade tuple the defect equals the obstruction value.
    let f = &report.failures()[0];
    let grades: Vec<usize> = f.witness.iter().map(|&o| c.grade_of(o)).collect();
    assert_eq!(f.defect, Some(push.value(&grades)));
}

/// Single-scalar mutation testing: bump every structure scalar of a
/// nontrivial instance one at a time; every injection must be detected.
#[test]
fn verifiers_detect_every_single_scalar_defect() {
    let ac = cochain::AbelianThreeCocycle::semion();
    let b = ac.to_braided().unwrap();
    let grp = make_cyclic(2);
    let mu = Cochain::zero(2, grp.clone(), b.objects().clone());
    let mut omega = Cochain::zero(3, grp.clone(), b.scalars().clone());
    omega.set(&[1, 1, 1], 2);
    let base = gcrossed::zest(&b, &grp, &mu, &omega).unwrap();
    assert!(base.verify_all(ReportOptions::FirstHundred).passed());

    let bump = |c: &mut Vec<usize>, i: usize| {
        c[i] = if c[i] == 0 { 1 } else { 0 };
    };
    let mut mutants: Vec<(String, GCrossedPointedCategory)> = Vec::new();
    macro_rules! mutate_table {
        ($field:ident) => {
            for i in 0..base.$field.len() {
                let mut m = base.clone();
                bump(&mut m.$field, i);
                mutants.push((format!("{}[{}]", stringify!($field), i), m));
            }
        };
    }
    mutate_table!(assoc);
    mutate_table!(lam);
    mutate_table!(rho);
    mutate_table!(unit_iso);
    mutate_table!(tensorator);
    mutate_table!(act_comp);
    mutate_table!(unit_transf);
    mutate_table!(braid);
    assert!(mutants.len() > 100);
    for (name, m) in &mutants {
        let report = m.verify_all(ReportOptions::FirstHundred);
        assert!(!report.passed(), "undetected mutation {name}");
    }
}

/// Bumping the associator at one tuple is reported exactly at the pentagon
/// instances adjacent to it, as predicted by a delta-only oracle.
#[test]
fn pentagon_failures_localize_a_bumped_associator() {
    let b = PointedBraidedCategory::trivial(
        FiniteAbelianGroup::trivial(),
        FiniteAbelianGroup::cyclic(4),
    );
    let grp = make_cyclic(2);
    let mu = Cochain::zero(2, grp.clone(), b.objects().clone());
    let mut omega = Cochain::zero(3, grp.clone(), b.scalars().clone());
    omega.set(&[1, 1, 1], 2);
    let mut c = gcrossed::zest(&b, &grp, &mu, &omega).unwrap();
    let n = c.n_objects();
    let target = (1 * n + 1) * n + 1;
    c.assoc[target] = c.k.add(c.assoc[target], 1);
    // Oracle: a category with ONLY the delta as associator; its pentagon
    // defects predict exactly which tuples fail.
    let mut delta_only = gcrossed::GCrossedPointedCategory::trivial(
        grp.clone(),
        c.k.clone(),
    );
    delta_only.assoc[target] = 1;
    let predicted: Vec<Vec<usize>> = {
        let r = delta_only.verify_monoidal(ReportOptions::All);
        r.failures()
            .iter()
            .filter(|f| f.axiom == AxiomLabel::Pentagon)
            .map(|f| f.witness.clone())
            .collect()
    };
    let got: Vec<Vec<usize>> = {
        let r = c.verify_monoidal(ReportOptions::All);
        r.failures()
            .iter()
            .filter(|f| f.axiom == AxiomLabel::Pentagon)
            .map(|f| f.witness.clone())
            .collect()
    };
    assert_eq!(predicted, got);
    assert!(!got.is_empty());
    // The five pentagon terms touch the bumped tuple at five families of
    // adjacent 4-tuples; with |Ob| = 2 objects per grade here each family
    // is a single tuple, and overlaps cancel in pairs.
    for w in got {
        assert!(w.contains(&(n - 1)) || w.contains(&1));
    }
}

/// Tensorator and braiding defects hit the axioms the construction map says
/// they should.
#[test]
fn targeted_mutations_hit_named_axioms() {
    let b = PointedBraidedCategory::trivial(
        FiniteAbelianGroup::cyclic(2),
        FiniteAbelianGroup::cyclic(4),
    );
    let grp = make_cyclic(2);
    let mut mu = Cochain::zero(2, grp.clone(), b.objects().clone());
    mu.set(&[1, 1], 1);
    let omega = Cochain::zero(3, grp.clone(), b.scalars().clone());
    let base = gcrossed::zest(&b, &grp, &mu, &omega).unwrap();

    // psi bump -> (psi1) and (mu1) report failures.
    let mut m = base.clone();
    let n = m.n_objects();
    m.tensorator[(1 * n + 1) * n + 2] = 1;
    let r = m.verify_action(ReportOptions::All);
    let axioms = r.axioms_hit();
    assert!(axioms.contains(&AxiomLabel::Psi1), "{axioms:?}");
    assert!(axioms.contains(&AxiomLabel::Mu1), "{axioms:?}");

    // braiding bump -> (beta2)/(beta3) report failures.
    let mut m = base.clone();
    m.braid[1 * n + 2] = 1;
    let r = m.verify_braiding(ReportOptions::All);
    let axioms = r.axioms_hit();
    assert!(
        axioms.contains(&AxiomLabel::Beta2) || axioms.contains(&AxiomLabel::Beta3),
        "{axioms:?}"
    );
}

/// For the trivial group, the braiding verifier agrees with the pentagon
/// and hexagon checks of the extracted braided category.
#[test]
fn trivial_grading_cross_oracle() {
    for (name, b) in corpus::braided_catalog() {
        let grp = make_cyclic(1);
        let mu = Cochain::zero(2, grp.clone(), b.objects().clone());
        let omega = Cochain::zero(3, grp.clone(), b.scalars().clone());
        let c = gcrossed::zest(&b, &grp, &mu, &omega).unwrap();
        let extracted = gcrossed::extract_braided(&c).unwrap();
        // the extraction recovers the base category exactly
        assert_eq!(extracted.objects(), b.objects(), "{name}");
        assert_eq!(extracted.alpha_table(), b.alpha_table(), "{name}");
        assert_eq!(extracted.beta_table(), b.beta_table(), "{name}");
        let braid_ok = c.verify_braiding(ReportOptions::FirstHundred).passed()
            && c.verify_monoidal(ReportOptions::FirstHundred).passed();
        let base_ok = extracted.check_pentagon(ReportOptions::FirstHundred).passed()
            && extracted.check_hexagons(ReportOptions::FirstHundred).passed();
        assert_eq!(braid_ok, base_ok, "{name}");
        assert!(braid_ok, "{name}");
    }
}

/// Decategorification of every verified corpus category is a lawful
/// G-crossed monoid; with trivial grading its unit component is commutative.
#[test]
fn decategorification_of_corpus() {
    for inst in corpus::zestable_corpus() {
        let c = inst.build();
        let m = gcrossed::decategorify(&c);
        let report = m.verify(ReportOptions::FirstHundred);
        assert!(report.passed(), "{}:\n{report}", inst.name);
        // the unit-graded component has the cardinality of the object group
        assert_eq!(m.carrier_count[0], c.ob_count[0]);
    }
}

/// Every object of every corpus category has a right dual and a left dual
/// built by the crossed-braiding composites, with vanishing snakes.
#[test]
fn rigidity_over_the_corpus() {
    for inst in corpus::zestable_corpus() {
        let c = inst.build();
        for x in c.objects() {
            let d = gcrossed::right_dual(&c, x)
                .unwrap_or_else(|e| panic!("{} object {x}: {e}", inst.name));
            assert!(gcrossed::check_snake_right(&c, &d), "{} object {x}", inst.name);
            let l = gcrossed::left_dual_from_right(&c, x, &d)
                .unwrap_or_else(|e| panic!("{} object {x}: {e}", inst.name));
            assert!(gcrossed::check_snake_left(&c, &l), "{} object {x}", inst.name);
        }
    }
}
