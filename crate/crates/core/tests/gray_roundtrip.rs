//! Gray-monoid constructions: axiom checks over the strict corpus, the
//! on-the-nose round trip in both directions, and the cross-oracle between
//! the Gray verifier and the G-crossed verifier under scalar mutations.

use gcb_core::corpus;
use gcb_core::fingroup::FiniteAbelianGroup;
use gcb_core::gcrossed::{
    compose_functors, verify_functor, verify_transformation, GCrossedFunctor,
    GCrossedPointedCategory, GCrossedTransformation,
};
use gcb_core::gray;
use gcb_core::report::ReportOptions;

fn strict_corpus() -> Vec<(String, GCrossedPointedCategory)> {
    let out = corpus::strict_corpus();
    assert!(out.len() >= 5, "strict corpus too small: {}", out.len());
    // make sure it contains nontrivial tables: a twisted tensor and a
    // nontrivial braiding
    assert!(out
        .iter()
        .any(|(_, c)| c.braid.iter().any(|&v| v != 0)));
    out
}

#[test]
fn strict_corpus_round_trips_on_the_nose() {
    for (name, c) in strict_corpus() {
        let m = gray::from_gcrossed(&c).unwrap_or_else(|e| panic!("{name}: {e}"));
        let report = m.verify_gray(ReportOptions::FirstHundred);
        assert!(report.passed(), "{name}:\n{report}");
        // hom(g -> h) cardinality equals Ob_{hg^{-1}}
        for g in 0..c.grp.order() {
            for h in 0..c.grp.order() {
                let d = c.grp.mul(h, c.grp.inv(g));
                assert_eq!(m.hom(g, h), c.ob_count[d], "{name} hom({g},{h})");
            }
        }
        let id = gray::roundtrip_check(&c).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(verify_functor(&id, ReportOptions::FirstHundred).passed());
        // and the other direction: from(to(M)) == M bitwise
        let c2 = gray::to_gcrossed(&m).unwrap();
        let m2 = gray::from_gcrossed(&c2).unwrap();
        assert_eq!(m, m2, "{name}: Gray-monoid round trip is not the identity");
    }
}

#[test]
fn nonstrict_input_is_rejected() {
    for inst in corpus::zestable_corpus() {
        let c = inst.build();
        if c.is_strict() {
            continue;
        }
        assert!(matches!(
            gray::from_gcrossed(&c),
            Err(gray::GrayError::NotStrict)
        ));
    }
}

#[test]
fn perturbed_entry_is_localized() {
    let (name, c) = strict_corpus()
        .into_iter()
        .find(|(_, c)| c.n_objects() > c.grp.order())
        .expect("a corpus instance with several objects per grade");
    let mut perturbed = c.clone();
    // swap two entries of the braid table so typing still holds
    let n = perturbed.n_objects();
    perturbed.braid[n + 1] = perturbed.k.add(perturbed.braid[n + 1], 1);
    let m = gray::from_gcrossed(&perturbed).unwrap();
    let c2 = gray::to_gcrossed_unchecked(&m);
    let diff = gray::first_difference(&c, &c2).expect("must differ from the original");
    assert!(diff.contains("braid"), "{name}: got {diff}");
    assert!(
        gray::first_difference(&perturbed, &c2).is_none(),
        "round trip must reproduce the perturbed input exactly"
    );
}

/// Cross-oracle: M passes verify_gray iff to_gcrossed(M) passes verify_all,
/// over the corpus plus 50 single-scalar interchanger mutants.
#[test]
fn gray_and_gcrossed_verifiers_agree() {
    let corpus = strict_corpus();
    for (name, c) in &corpus {
        let m = gray::from_gcrossed(c).unwrap();
        let gray_ok = m.verify_gray(ReportOptions::FirstHundred).passed();
        let back = gray::to_gcrossed_unchecked(&m);
        let gcb_ok = back.validate_typing().is_ok()
            && back.verify_all(ReportOptions::FirstHundred).passed();
        assert_eq!(gray_ok, gcb_ok, "{name}");
        assert!(gray_ok, "{name}");
    }
    // deterministic linear-congruential positions for the mutants
    let mut seed: u64 = 0x5eed_cafe;
    let mut next = move |m: u64| {
        seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((seed >> 33) % m.max(1)) as usize
    };
    let nontrivial: Vec<&(String, GCrossedPointedCategory)> = corpus
        .iter()
        .filter(|(_, c)| c.k.order() > 1 && c.n_objects() > 1)
        .collect();
    let mut detected = 0;
    for i in 0..50 {
        let (name, c) = nontrivial[i % nontrivial.len()];
        let mut m = gray::from_gcrossed(c).unwrap();
        let cells = m.n_cells();
        let slot = next((cells * cells) as u64);
        m.phi[slot] = m.k.add(m.phi[slot], 1 + next((m.k.order() - 1) as u64));
        let gray_ok = m.verify_gray(ReportOptions::FirstHundred).passed();
        let back = gray::to_gcrossed_unchecked(&m);
        let gcb_ok = back.validate_typing().is_ok()
            && back.verify_all(ReportOptions::FirstHundred).passed();
        // A mutation on an interchanger slot that the rebuilt category does
        // not read (a cell outside hom(e -> .)) is invisible on the
        // G-crossed side; every defect must still be caught on at least one
        // side, and a rebuilt-side failure implies a Gray-side failure.
        assert!(!(gray_ok && gcb_ok), "{name} mutant {i}: undetected");
        if !gcb_ok {
            assert!(!gray_ok, "{name} mutant {i}: only the rebuilt side failed");
        }
        detected += 1;
    }
    assert_eq!(detected, 50);
}

/// Identity and scalar-twisted identity functors verify, compose, and admit
/// transformations; a bumped actionator is caught by (gamma1).
#[test]
fn functor_layer_over_a_strict_instance() {
    let (_, c) = strict_corpus()
        .into_iter()
        .find(|(_, c)| c.n_objects() > c.grp.order() && c.k.order() == 4)
        .expect("instance with several objects and Z/4 scalars");
    let id = GCrossedFunctor::identity(&c);
    id.validate_typing().unwrap();
    assert!(verify_functor(&id, ReportOptions::All).passed());

    // Twisted identity: A2(x,y) = kap(x) + kap(y) - kap(x(x)y),
    // a_g(x) = kap(x) - kap(F_g x), A1 = -kap(1) = 0 with kap(1) = 0.
    let twist = |c: &GCrossedPointedCategory, kap: &dyn Fn(usize) -> usize| {
        let n = c.n_objects();
        let k = c.k.clone();
        let mut f = GCrossedFunctor::identity(c);
        for x in 0..n {
            for y in 0..n {
                f.tensorator[x * n + y] =
                    k.sub(k.add(kap(x), kap(y)), kap(c.ten(x, y)));
            }
            for g in 0..c.grp.order() {
                f.actionator[g * n + x] = k.sub(kap(x), kap(c.f(g, x)));
            }
        }
        f
    };
    let kap1 = |x: usize| (3 * x + x * x) % 4;
    let kap1_fixed = move |x: usize| if x == 0 { 0 } else { kap1(x) };
    let f1 = twist(&c, &kap1_fixed);
    assert!(verify_functor(&f1, ReportOptions::All).passed());
    let kap2_fixed = move |x: usize| if x == 0 { 0 } else { (x + 2) % 4 };
    let f2 = twist(&c, &kap2_fixed);
    assert!(verify_functor(&f2, ReportOptions::All).passed());

    // composition of twists is the twist of the sum
    let f12 = compose_functors(&f1, &f2).unwrap();
    assert!(verify_functor(&f12, ReportOptions::All).passed());
    let ksum = move |x: usize| (kap1_fixed(x) + kap2_fixed(x)) % 4;
    let expected = twist(&c, &ksum);
    assert_eq!(f12.tensorator, expected.tensorator);
    assert_eq!(f12.actionator, expected.actionator);

    // composing with the identity is the identity on data
    let fid = compose_functors(&f1, &GCrossedFunctor::identity(&c)).unwrap();
    assert_eq!(fid, f1);

    // transformation between two twists: h(x) = kap1(x) - kap2(x)
    let comp: Vec<usize> = (0..c.n_objects())
        .map(|x| c.k.sub(kap1_fixed(x), kap2_fixed(x)))
        .collect();
    let t = GCrossedTransformation { from: f1.clone(), to: f2.clone(), component: comp };
    assert!(verify_transformation(&t, ReportOptions::All).passed());
    // a wrong component is rejected
    let mut bad = t.clone();
    bad.component[1] = c.k.add(bad.component[1], 1);
    assert!(!verify_transformation(&bad, ReportOptions::All).passed());

    // bumped actionator -> (gamma1) failure (an odd bump: an even one can
    // cancel in the gamma1 pattern over Z/4)
    let mut broken = f1.clone();
    broken.actionator[c.n_objects() + 1] = c.k.add(broken.actionator[c.n_objects() + 1], 1);
    let report = verify_functor(&broken, ReportOptions::All);
    assert!(!report.passed());
    assert!(report
        .axioms_hit()
        .iter()
        .any(|a| a.to_string() == "(gamma1)"));
}

#[test]
fn roundtrip_functor_for_every_strict_instance() {
    for (name, c) in strict_corpus() {
        let id = gray::roundtrip_check(&c).unwrap_or_else(|e| panic!("{name}: {e}"));
        let report = verify_functor(&id, ReportOptions::FirstHundred);
        assert!(report.passed(), "{name}:\n{report}");
    }
}

#[test]
fn left_duals_exist_in_gray_built_categories() {
    use gcb_core::gcrossed::{check_snake_left, check_snake_right, left_dual_from_right, right_dual};
    for (name, c) in strict_corpus() {
        let m = gray::from_gcrossed(&c).unwrap();
        let back = gray::to_gcrossed(&m).unwrap();
        for x in back.objects() {
            let d = right_dual(&back, x).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(check_snake_right(&back, &d), "{name} object {x}");
            let l = left_dual_from_right(&back, x, &d)
                .unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(check_snake_left(&back, &l), "{name} object {x}");
        }
    }
}

#[test]
fn gray_monoid_of_trivial_category_is_group_like() {
    let c = GCrossedPointedCategory::trivial(
        gcb_core::fingroup::make_dihedral(3),
        FiniteAbelianGroup::cyclic(2),
    );
    // nonabelian sanity: conjugation grading shows up in hom set sizes
    let m = gray::from_gcrossed(&c).unwrap();
    assert!(m.verify_gray(ReportOptions::All).passed());
    gray::roundtrip_check(&c).unwrap();
}
