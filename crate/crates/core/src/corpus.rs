//! The construction corpus: braided pointed categories over the supported
//! coefficient grid, twisting groups, all normalized 2-cocycles, compatible
//! 3-cochains, and the resulting zestable instances.
//!
//! Tests and the acceptance suite iterate this catalog; it is deterministic
//! and ordered.

use crate::cochain::{self, AbelianThreeCocycle, Cochain};
use crate::fingroup::{FiniteAbelianGroup, FiniteGroup, make_cyclic};
use crate::gcrossed::{zest, GCrossedPointedCategory};
use crate::pointed::PointedBraidedCategory;

/// One zestable tuple of construction data.
#[derive(Debug, Clone)]
pub struct ZestInstance {
    pub name: String,
    pub b: PointedBraidedCategory,
    pub grp: FiniteGroup,
    pub mu: Cochain,
    pub omega: Cochain,
}

impl ZestInstance {
    pub fn build(&self) -> GCrossedPointedCategory {
        zest(&self.b, &self.grp, &self.mu, &self.omega)
            .expect("corpus instances satisfy the zesting preconditions")
    }
}

/// A twisting datum whose obstruction class does not vanish.
#[derive(Debug, Clone)]
pub struct ObstructedInstance {
    pub name: String,
    pub b: PointedBraidedCategory,
    pub grp: FiniteGroup,
    pub mu: Cochain,
}

/// Braided pointed categories covering A in {Z2, Z3} and K in {Z2, Z4, Z3}:
/// one representative per abelian 3-cocycle class.
pub fn braided_catalog() -> Vec<(String, PointedBraidedCategory)> {
    let mut out = Vec::new();
    let z2 = FiniteAbelianGroup::cyclic(2);
    let z3 = FiniteAbelianGroup::cyclic(3);
    // (Z2, Z2): braidings are bilinear, beta(1,1) in {0,1}.
    for b11 in 0..2usize {
        let mut beta = vec![0; 4];
        beta[3] = b11;
        let cat = PointedBraidedCategory::new(
            z2.clone(),
            FiniteAbelianGroup::cyclic(2),
            vec![0; 8],
            beta,
        )
        .expect("valid");
        out.push((format!("B(Z2,Z2,b{b11})"), cat));
    }
    // (Z2, Z4): beta(1,1) = b, alpha(1,1,1) = 2b; b = 1 is the semion,
    // b = 2 the fermion.
    for b11 in 0..4usize {
        let mut alpha = vec![0; 8];
        alpha[7] = (2 * b11) % 4;
        let mut beta = vec![0; 4];
        beta[3] = b11;
        let cat = PointedBraidedCategory::new(
            z2.clone(),
            FiniteAbelianGroup::cyclic(4),
            alpha,
            beta,
        )
        .expect("valid");
        out.push((format!("B(Z2,Z4,b{b11})"), cat));
    }
    // (Z3, Z3): bilinear braidings beta(x,y) = t*x*y.
    for t in 0..3usize {
        let beta: Vec<usize> = (0..9).map(|i| (i / 3) * (i % 3) * t % 3).collect();
        let cat = PointedBraidedCategory::new(
            z3.clone(),
            FiniteAbelianGroup::cyclic(3),
            vec![0; 27],
            beta,
        )
        .expect("valid");
        out.push((format!("B(Z3,Z3,t{t})"), cat));
    }
    // Mixed coefficient pairs only admit the trivial class.
    out.push((
        "B(Z2,Z3,triv)".into(),
        PointedBraidedCategory::trivial(z2.clone(), FiniteAbelianGroup::cyclic(3)),
    ));
    out.push((
        "B(Z3,Z2,triv)".into(),
        PointedBraidedCategory::trivial(z3.clone(), FiniteAbelianGroup::cyclic(2)),
    ));
    out.push((
        "B(Z3,Z4,triv)".into(),
        PointedBraidedCategory::trivial(z3, FiniteAbelianGroup::cyclic(4)),
    ));
    // The pointed-trivial base with a nontrivial scalar group, for pure
    // associator twists.
    out.push((
        "B(1,Z4)".into(),
        PointedBraidedCategory::trivial(
            FiniteAbelianGroup::trivial(),
            FiniteAbelianGroup::cyclic(4),
        ),
    ));
    out
}

/// The twisting groups of the corpus.
pub fn group_catalog() -> Vec<(String, FiniteGroup)> {
    vec![
        ("Z2".into(), make_cyclic(2)),
        ("Z3".into(), make_cyclic(3)),
        ("Z2xZ2".into(), FiniteAbelianGroup::new(vec![2, 2]).to_group()),
    ]
}

/// All normalized 2-cocycles on `grp` valued in `a`.
pub fn normalized_two_cocycles(grp: &FiniteGroup, a: &FiniteAbelianGroup) -> Vec<Cochain> {
    let nz: Vec<usize> = (1..grp.order()).collect();
    let positions: Vec<[usize; 2]> =
        nz.iter().flat_map(|&x| nz.iter().map(move |&y| [x, y])).collect();
    let total = a.order().pow(positions.len() as u32);
    let mut out = Vec::new();
    for idx in 0..total {
        let mut mu = Cochain::zero(2, grp.clone(), a.clone());
        let mut rest = idx;
        for p in &positions {
            mu.set(p, rest % a.order());
            rest /= a.order();
        }
        if cochain::is_cocycle(&mu) {
            out.push(mu);
        }
    }
    out
}

/// All normalized 3-cocycles on `grp` valued in `k`, deduplicated to one
/// representative per cohomology class (lexicographic minimum over the
/// coboundary orbit). Only for groups of order at most 3; larger groups have
/// too many 2-cochains to orbit over exhaustively.
pub fn three_cocycle_class_reps(grp: &FiniteGroup, k: &FiniteAbelianGroup) -> Vec<Cochain> {
    assert!(grp.order() <= 3);
    let nz: Vec<usize> = (1..grp.order()).collect();
    let mut pos3: Vec<[usize; 3]> = Vec::new();
    let mut pos2: Vec<[usize; 2]> = Vec::new();
    for &x in &nz {
        for &y in &nz {
            pos2.push([x, y]);
            for &z in &nz {
                pos3.push([x, y, z]);
            }
        }
    }
    let total = k.order().pow(pos3.len() as u32);
    let shift_total = k.order().pow(pos2.len() as u32);
    let mut reps = std::collections::BTreeSet::new();
    for idx in 0..total {
        let mut omega = Cochain::zero(3, grp.clone(), k.clone());
        let mut rest = idx;
        for p in &pos3 {
            omega.set(p, rest % k.order());
            rest /= k.order();
        }
        if !cochain::is_cocycle(&omega) {
            continue;
        }
        let mut best = omega.values().to_vec();
        for cidx in 0..shift_total {
            let mut c = Cochain::zero(2, grp.clone(), k.clone());
            let mut rest = cidx;
            for p in &pos2 {
                c.set(p, rest % k.order());
                rest /= k.order();
            }
            let shifted = omega.add(&cochain::coboundary(&c)).expect("compatible");
            if shifted.values() < best.as_slice() {
                best = shifted.values().to_vec();
            }
        }
        reps.insert(best);
    }
    reps.into_iter()
        .map(|values| Cochain::new(3, grp.clone(), k.clone(), values).expect("sized"))
        .collect()
}

/// Every zestable corpus instance: for each braided base, group, and
/// normalized 2-cocycle whose obstruction vanishes, the solved omega plus
/// cohomologically distinct shifts (for small groups).
pub fn zestable_corpus() -> Vec<ZestInstance> {
    let mut out = Vec::new();
    for (bname, b) in braided_catalog() {
        let ac = AbelianThreeCocycle::new(
            b.objects().clone(),
            b.scalars().clone(),
            Cochain::new(
                3,
                b.objects().to_group(),
                b.scalars().clone(),
                b.alpha_table().to_vec(),
            )
            .expect("sized"),
            b.beta_table().to_vec(),
        )
        .expect("catalog categories are valid");
        for (gname, grp) in group_catalog() {
            let mut mus = normalized_two_cocycles(&grp, b.objects());
            // Keep the corpus a corpus, not a census: cap the cocycle list
            // deterministically while always retaining the zero cocycle.
            if mus.len() > 8 {
                let step = mus.len() / 8;
                mus = mus.into_iter().step_by(step).collect();
            }
            for (mi, mu) in mus.iter().enumerate() {
                let Some(omega0) = cochain::solve_obstruction(mu, &ac).expect("typed")
                else {
                    continue;
                };
                let mut omegas = vec![omega0.clone()];
                if grp.order() <= 3 {
                    for shift in three_cocycle_class_reps(&grp, b.scalars()) {
                        let candidate = omega0.add(&shift).expect("compatible");
                        if !omegas.contains(&candidate) {
                            omegas.push(candidate);
                        }
                    }
                }
                for (oi, omega) in omegas.into_iter().enumerate() {
                    out.push(ZestInstance {
                        name: format!("{bname}/{gname}/mu{mi}/omega{oi}"),
                        b: b.clone(),
                        grp: grp.clone(),
                        mu: mu.clone(),
                        omega,
                    });
                }
            }
        }
    }
    out
}

/// Twisting data whose obstruction class does not vanish.
pub fn obstructed_corpus() -> Vec<ObstructedInstance> {
    let mut out = Vec::new();
    for (bname, b) in braided_catalog() {
        let ac = AbelianThreeCocycle::new(
            b.objects().clone(),
            b.scalars().clone(),
            Cochain::new(
                3,
                b.objects().to_group(),
                b.scalars().clone(),
                b.alpha_table().to_vec(),
            )
            .expect("sized"),
            b.beta_table().to_vec(),
        )
        .expect("valid");
        for (gname, grp) in group_catalog() {
            for (mi, mu) in normalized_two_cocycles(&grp, b.objects()).iter().enumerate() {
                if cochain::solve_obstruction(mu, &ac).expect("typed").is_none() {
                    out.push(ObstructedInstance {
                        name: format!("{bname}/{gname}/mu{mi}"),
                        b: b.clone(),
                        grp: grp.clone(),
                        mu: mu.clone(),
                    });
                }
            }
        }
    }
    out
}

/// Strict corpus instances: all zestable instances whose tables happen to be
/// strict (trivial associator and action coherence), which includes every
/// mu-twisted extension of a trivially associated base with omega = 0.
pub fn strict_corpus() -> Vec<(String, GCrossedPointedCategory)> {
    let mut out = Vec::new();
    for inst in zestable_corpus() {
        let c = inst.build();
        if c.is_strict() {
            out.push((inst.name, c));
        }
    }
    // The conjugation skeleton over a nonabelian-free grid is covered above;
    // also include plain trivial categories explicitly.
    for (gname, grp) in group_catalog() {
        out.push((
            format!("trivial/{gname}"),
            GCrossedPointedCategory::trivial(grp, FiniteAbelianGroup::cyclic(4)),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_nonempty_and_varied() {
        let corpus = zestable_corpus();
        assert!(corpus.len() >= 20, "got {}", corpus.len());
        // It must contain a nontrivially braided base with nonzero mu.
        assert!(corpus.iter().any(|i| {
            !i.mu.is_zero() && i.b.beta_table().iter().any(|&v| v != 0)
        }));
        // And a nontrivial omega instance.
        assert!(corpus.iter().any(|i| !i.omega.is_zero()));
        // Obstructed data exists (the semion over Z2 with mu(1,1)=1).
        assert!(!obstructed_corpus().is_empty());
    }
}
