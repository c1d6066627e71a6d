//! Group cochains with trivial coefficient action, their coboundaries, the
//! degree-4 pushforward of a 2-cocycle along an abelian 3-cocycle, and the
//! extension obstruction.
//!
//! Coboundary solving (`is_coboundary`, `solve_obstruction`) reduces to an
//! integer linear system modulo each cyclic factor of the coefficient group
//! and runs through the Smith normal form solver, not enumeration.

use crate::fingroup::{FiniteAbelianGroup, FiniteGroup};
use crate::pointed::{Evaluator, PointedBraidedCategory, PointedError};
use crate::report::ReportOptions;
use crate::snf::{solve_mod, IntMatrix};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CochainError {
    #[error("cochains live over different groups")]
    GroupMismatch,
    #[error("coefficient groups do not match")]
    CoefficientMismatch,
    #[error("expected degree {want}, got {got}")]
    DegreeMismatch { want: usize, got: usize },
    #[error("value table has length {got}, expected {want}")]
    ValueSize { got: usize, want: usize },
    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("invalid abelian 3-cocycle: {0}")]
    InvalidAbelianCocycle(PointedError),
}

/// A dense `n`-cochain on a finite group with values in a finite abelian
/// coefficient group (trivial action). Degree 0 is a single value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    group: FiniteGroup,
    coeff: FiniteAbelianGroup,
    values: Vec<usize>,
}

impl Cochain {
    pub fn new(
        degree: usize,
        group: FiniteGroup,
        coeff: FiniteAbelianGroup,
        values: Vec<usize>,
    ) -> Result<Self, CochainError> {
        let want = group.order().pow(degree as u32);
        if values.len() != want {
            return Err(CochainError::ValueSize { got: values.len(), want });
        }
        if values.iter().any(|&v| v >= coeff.order()) {
            return Err(CochainError::ValueSize { got: values.len(), want });
        }
        Ok(Cochain { degree, group, coeff, values })
    }

    pub fn zero(degree: usize, group: FiniteGroup, coeff: FiniteAbelianGroup) -> Self {
        let len = group.order().pow(degree as u32);
        Cochain { degree, group, coeff, values: vec![0; len] }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn coeff(&self) -> &FiniteAbelianGroup {
        &self.coeff
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn index(&self, tuple: &[usize]) -> usize {
        assert_eq!(tuple.len(), self.degree);
        tuple.iter().fold(0, |acc, &t| acc * self.group.order() + t)
    }

    pub fn value(&self, tuple: &[usize]) -> usize {
        self.values[self.index(tuple)]
    }

    pub fn set(&mut self, tuple: &[usize], v: usize) {
        let i = self.index(tuple);
        self.values[i] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// True when the value vanishes whenever any argument is the identity.
    pub fn is_normalized(&self) -> bool {
        self.tuples().all(|t| !t.contains(&0) || self.value(&t) == 0)
    }

    pub fn tuples(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        let order = self.group.order();
        let degree = self.degree;
        (0..order.pow(degree as u32)).map(move |mut i| {
            let mut t = vec![0; degree];
            for slot in (0..degree).rev() {
                t[slot] = i % order;
                i /= order;
            }
            t
        })
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain, CochainError> {
        self.compatible(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| self.coeff.add(a, b))
            .collect();
        Ok(Cochain { degree: self.degree, group: self.group.clone(), coeff: self.coeff.clone(), values })
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain, CochainError> {
        self.compatible(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| self.coeff.sub(a, b))
            .collect();
        Ok(Cochain { degree: self.degree, group: self.group.clone(), coeff: self.coeff.clone(), values })
    }

    fn compatible(&self, other: &Cochain) -> Result<(), CochainError> {
        if self.group != other.group {
            return Err(CochainError::GroupMismatch);
        }
        if self.coeff != other.coeff {
            return Err(CochainError::CoefficientMismatch);
        }
        if self.degree != other.degree {
            return Err(CochainError::DegreeMismatch { want: self.degree, got: other.degree });
        }
        Ok(())
    }
}

/// The inhomogeneous bar-complex differential with trivial action:
/// `(dc)(g_1..g_{n+1}) = c(g_2..) + sum_i (-1)^i c(..g_i g_{i+1}..) +
/// (-1)^{n+1} c(..g_n)`.
pub fn coboundary(c: &Cochain) -> Cochain {
    let n = c.degree;
    let group = c.group.clone();
    let coeff = c.coeff.clone();
    let mut out = Cochain::zero(n + 1, group.clone(), coeff.clone());
    let tuples: Vec<Vec<usize>> = out.tuples().collect();
    for t in tuples {
        let mut acc = coeff.zero();
        // drop-first term
        let head: Vec<usize> = t[1..].to_vec();
        acc = coeff.add(acc, c.value(&head));
        // merge terms
        for i in 0..n {
            let mut merged = Vec::with_capacity(n);
            merged.extend_from_slice(&t[..i]);
            merged.push(group.mul(t[i], t[i + 1]));
            merged.extend_from_slice(&t[i + 2..]);
            let sign = if (i + 1) % 2 == 0 { 1 } else { -1 };
            let v = c.value(&merged);
            acc = coeff.add(acc, if sign > 0 { v } else { coeff.neg(v) });
        }
        // drop-last term
        let tail: Vec<usize> = t[..n].to_vec();
        let sign = if (n + 1) % 2 == 0 { 1 } else { -1 };
        let v = c.value(&tail);
        acc = coeff.add(acc, if sign > 0 { v } else { coeff.neg(v) });
        out.set(&t, acc);
    }
    out
}

pub fn is_cocycle(c: &Cochain) -> bool {
    coboundary(c).is_zero()
}

/// Builds the integer matrix of `d: C^{n-1} -> C^n` (rows indexed by
/// degree-n tuples, columns by degree-(n-1) tuples).
fn coboundary_matrix(group: &FiniteGroup, degree_target: usize) -> IntMatrix {
    let n = degree_target;
    assert!(n >= 1);
    let order = group.order();
    let rows = order.pow(n as u32);
    let cols = order.pow((n - 1) as u32);
    let mut m = IntMatrix::zeros(rows, cols);
    let col_index = |t: &[usize]| t.iter().fold(0usize, |acc, &x| acc * order + x);
    for row in 0..rows {
        let mut t = vec![0usize; n];
        let mut i = row;
        for slot in (0..n).rev() {
            t[slot] = i % order;
            i /= order;
        }
        let mut add = |tuple: &[usize], sign: i128| {
            let c = col_index(tuple);
            let v = m.at(row, c) + sign;
            m.set(row, c, v);
        };
        add(&t[1..], 1);
        for i in 0..n - 1 {
            let mut merged = Vec::with_capacity(n - 1);
            merged.extend_from_slice(&t[..i]);
            merged.push(group.mul(t[i], t[i + 1]));
            merged.extend_from_slice(&t[i + 2..]);
            let sign = if (i + 1) % 2 == 0 { 1 } else { -1 };
            add(&merged, sign);
        }
        let sign = if n % 2 == 0 { 1 } else { -1 };
        add(&t[..n - 1], sign);
    }
    m
}

/// Finds `b` with `db = c`, solving the linear system factor by factor of
/// the coefficient group via Smith normal form.
pub fn is_coboundary(c: &Cochain) -> Option<Cochain> {
    solve_coboundary(c, false)
}

/// Like [`is_coboundary`] but restricts the witness to normalized cochains
/// (zero whenever an argument is the identity). For a normalized target this
/// loses no solvability: any witness can be shifted to a normalized one.
pub fn is_coboundary_normalized(c: &Cochain) -> Option<Cochain> {
    solve_coboundary(c, true)
}

fn solve_coboundary(c: &Cochain, normalized_witness: bool) -> Option<Cochain> {
    if c.degree == 0 {
        // Degree 0 has no potentials; only the zero cochain qualifies.
        return if c.is_zero() {
            Some(Cochain::zero(0, c.group.clone(), c.coeff.clone()))
        } else {
            None
        };
    }
    let matrix = coboundary_matrix(&c.group, c.degree);
    // Optionally keep only the columns of non-degenerate tuples.
    let order = c.group.order();
    let all_cols = matrix.cols;
    let keep: Vec<usize> = (0..all_cols)
        .filter(|&col| {
            if !normalized_witness {
                return true;
            }
            let mut idx = col;
            for _ in 0..c.degree - 1 {
                if idx % order == 0 {
                    return false;
                }
                idx /= order;
            }
            true
        })
        .collect();
    let mut restricted = IntMatrix::zeros(matrix.rows, keep.len());
    for r in 0..matrix.rows {
        for (j, &col) in keep.iter().enumerate() {
            restricted.set(r, j, matrix.at(r, col));
        }
    }
    let factors = c.coeff.factors().to_vec();
    // One component per cyclic factor; recombine at the end.
    let mut solved: Vec<Vec<u64>> = Vec::with_capacity(factors.len());
    for (fi, &n) in factors.iter().enumerate() {
        let b: Vec<i128> =
            c.values.iter().map(|&v| c.coeff.decode(v)[fi] as i128).collect();
        let x = solve_mod(&restricted, &b, n as u64)?;
        solved.push(x);
    }
    let mut values = vec![0usize; all_cols];
    for (j, &col) in keep.iter().enumerate() {
        let tuple: Vec<usize> =
            factors.iter().enumerate().map(|(fi, _)| solved[fi][j] as usize).collect();
        values[col] = c.coeff.encode(&tuple);
    }
    let witness = Cochain {
        degree: c.degree - 1,
        group: c.group.clone(),
        coeff: c.coeff.clone(),
        values,
    };
    debug_assert_eq!(&coboundary(&witness), c);
    Some(witness)
}

/// An abelian 3-cocycle `(alpha, beta)` on a finite abelian group `A` with
/// scalars in `K`: a 3-cocycle together with a braiding function satisfying
/// both hexagon axioms of the associated skeletal braided category. The
/// hexagons are checked as the category axioms, never as transcribed
/// identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianThreeCocycle {
    a: FiniteAbelianGroup,
    k: FiniteAbelianGroup,
    pub alpha: Cochain,
    pub beta: Vec<usize>,
}

impl AbelianThreeCocycle {
    pub fn new(
        a: FiniteAbelianGroup,
        k: FiniteAbelianGroup,
        alpha: Cochain,
        beta: Vec<usize>,
    ) -> Result<Self, CochainError> {
        if alpha.degree() != 3 {
            return Err(CochainError::DegreeMismatch { want: 3, got: alpha.degree() });
        }
        if alpha.group() != &a.to_group() {
            return Err(CochainError::GroupMismatch);
        }
        if alpha.coeff() != &k {
            return Err(CochainError::CoefficientMismatch);
        }
        let ac = AbelianThreeCocycle { a, k, alpha, beta };
        ac.to_braided().map_err(CochainError::InvalidAbelianCocycle)?;
        Ok(ac)
    }

    /// Wraps raw `(alpha, beta)` data without the pentagon/hexagon gate.
    /// The pushforward formula is defined on arbitrary pairs; whether its
    /// output is a cocycle is then a checkable statement, not a premise.
    pub fn new_unchecked(
        a: FiniteAbelianGroup,
        k: FiniteAbelianGroup,
        alpha: Cochain,
        beta: Vec<usize>,
    ) -> Self {
        assert_eq!(alpha.degree(), 3);
        assert_eq!(beta.len(), a.order() * a.order());
        AbelianThreeCocycle { a, k, alpha, beta }
    }

    pub fn trivial(a: FiniteAbelianGroup, k: FiniteAbelianGroup) -> Self {
        let alpha = Cochain::zero(3, a.to_group(), k.clone());
        let beta = vec![0; a.order() * a.order()];
        AbelianThreeCocycle { a, k, alpha, beta }
    }

    /// The Z/2 -> Z/4 semion cocycle: `alpha(1,1,1) = 2`, `beta(1,1) = 1`.
    pub fn semion() -> Self {
        let a = FiniteAbelianGroup::cyclic(2);
        let k = FiniteAbelianGroup::cyclic(4);
        let mut alpha = Cochain::zero(3, a.to_group(), k.clone());
        alpha.set(&[1, 1, 1], 2);
        let beta = vec![0, 0, 0, 1];
        AbelianThreeCocycle::new(a, k, alpha, beta).expect("semion data is valid")
    }

    pub fn object_group(&self) -> &FiniteAbelianGroup {
        &self.a
    }

    pub fn scalar_group(&self) -> &FiniteAbelianGroup {
        &self.k
    }

    pub fn beta_at(&self, x: usize, y: usize) -> usize {
        self.beta[x * self.a.order() + y]
    }

    /// The associated skeletal braided category; building it runs the
    /// pentagon and hexagon verifiers.
    pub fn to_braided(&self) -> Result<PointedBraidedCategory, PointedError> {
        PointedBraidedCategory::new(
            self.a.clone(),
            self.k.clone(),
            self.alpha.values().to_vec(),
            self.beta.clone(),
        )
    }
}

/// The explicit degree-4 pushforward of a 2-cocycle `mu` along an abelian
/// 3-cocycle, written additively: one braiding term and six signed
/// associator terms evaluated on values of `mu`.
pub fn pw_pushforward(mu: &Cochain, ac: &AbelianThreeCocycle) -> Result<Cochain, CochainError> {
    if mu.degree() != 2 {
        return Err(CochainError::DegreeMismatch { want: 2, got: mu.degree() });
    }
    if mu.coeff() != ac.object_group() {
        return Err(CochainError::CoefficientMismatch);
    }
    let grp = mu.group().clone();
    let k = ac.scalar_group().clone();
    let a3 = |x: usize, y: usize, z: usize| ac.alpha.value(&[x, y, z]);
    let m = |x: usize, y: usize| mu.value(&[x, y]);
    let mut out = Cochain::zero(4, grp.clone(), k.clone());
    let tuples: Vec<Vec<usize>> = out.tuples().collect();
    for t in tuples {
        let (g, h, kk, l) = (t[0], t[1], t[2], t[3]);
        let gh = grp.mul(g, h);
        let hk = grp.mul(h, kk);
        let kl = grp.mul(kk, l);
        let ghk = grp.mul(gh, kk);
        let hkl = grp.mul(hk, l);
        let mut acc = ac.beta_at(m(kk, l), m(g, h));
        acc = k.sub(acc, a3(m(ghk, l), m(gh, kk), m(g, h)));
        acc = k.add(acc, a3(m(ghk, l), m(g, hk), m(h, kk)));
        acc = k.sub(acc, a3(m(g, hkl), m(hk, l), m(h, kk)));
        acc = k.add(acc, a3(m(g, hkl), m(h, kl), m(kk, l)));
        acc = k.sub(acc, a3(m(gh, kl), m(g, h), m(kk, l)));
        acc = k.add(acc, a3(m(gh, kl), m(kk, l), m(g, h)));
        out.set(&t, acc);
    }
    Ok(out)
}

/// Does `d omega = (alpha,beta)_* mu` hold exactly?
pub fn check_obstruction(
    omega: &Cochain,
    mu: &Cochain,
    ac: &AbelianThreeCocycle,
) -> Result<bool, CochainError> {
    if omega.degree() != 3 {
        return Err(CochainError::DegreeMismatch { want: 3, got: omega.degree() });
    }
    if omega.group() != mu.group() {
        return Err(CochainError::GroupMismatch);
    }
    if omega.coeff() != ac.scalar_group() {
        return Err(CochainError::CoefficientMismatch);
    }
    let push = pw_pushforward(mu, ac)?;
    Ok(coboundary(omega) == push)
}

/// Finds any 3-cochain with `d omega = (alpha,beta)_* mu`, or reports that
/// the obstruction class does not vanish.
pub fn solve_obstruction(
    mu: &Cochain,
    ac: &AbelianThreeCocycle,
) -> Result<Option<Cochain>, CochainError> {
    let push = pw_pushforward(mu, ac)?;
    // The pushforward of normalized data is normalized, so when the class
    // vanishes a normalized potential exists; prefer it, since the zesting
    // constructor requires one.
    if push.is_normalized() {
        if let Some(omega) = is_coboundary_normalized(&push) {
            return Ok(Some(omega));
        }
    }
    Ok(is_coboundary(&push))
}

/// Evaluates the quadratic form `q(b) = ev . beta_{b,-b} . coev` of an
/// abelian 3-cocycle through the skeletal word evaluator with the canonical
/// right-dual pairing.
pub fn quadratic_form(ac: &AbelianThreeCocycle, b: usize) -> Result<usize, CochainError> {
    let cat = ac.to_braided().map_err(CochainError::InvalidAbelianCocycle)?;
    let mut ev = Evaluator::new(&cat, vec![]);
    ev.pair_create_canonical(0, b);
    ev.braid(0, true);
    ev.pair_annihilate_canonical(0);
    Ok(ev.finish(&[]))
}

/// All quadratic forms `q: A -> K`: functions with `q(0) = 0`,
/// `q(-x) = q(x)`, and bilinear associated form
/// `b(x,y) = q(x+y) - q(x) - q(y)`. Each form is returned as its dense value
/// table.
pub fn enumerate_quadratic_forms(
    a: &FiniteAbelianGroup,
    k: &FiniteAbelianGroup,
    bound: usize,
) -> Result<Vec<Vec<usize>>, CochainError> {
    check_enumeration_bound(a, k, bound)?;
    let n = a.order();
    let kn = k.order();
    let free = n - 1;
    let total = checked_pow(kn, free)
        .ok_or_else(|| CochainError::BoundExceeded("quadratic form space".into()))?;
    let mut out = Vec::new();
    for idx in 0..total {
        let mut q = vec![0usize; n];
        let mut rest = idx;
        for x in 1..n {
            q[x] = rest % kn;
            rest /= kn;
        }
        let symmetric = (0..n).all(|x| q[a.neg(x)] == q[x]);
        if !symmetric {
            continue;
        }
        let b = |x: usize, y: usize| k.sub(k.sub(q[a.add(x, y)], q[x]), q[y]);
        let bilinear = (0..n).all(|x| {
            (0..n).all(|x2| {
                (0..n).all(|y| b(a.add(x, x2), y) == k.add(b(x, y), b(x2, y)))
            })
        });
        if bilinear {
            out.push(q);
        }
    }
    Ok(out)
}

/// Counts abelian 3-cocycles on `(A, K)` up to the coboundary action
/// `(alpha, beta) ~ (alpha + dc, beta + c^T - c)` over normalized 2-cochains
/// `c`. Must agree with the number of quadratic forms.
pub fn enumerate_abelian_cocycle_classes(
    a: &FiniteAbelianGroup,
    k: &FiniteAbelianGroup,
    bound: usize,
) -> Result<usize, CochainError> {
    check_enumeration_bound(a, k, bound)?;
    let n = a.order();
    let kn = k.order();
    let grp = a.to_group();
    let nz: Vec<usize> = (1..n).collect();
    let alpha_free = nz.len().pow(3);
    let beta_free = nz.len().pow(2);
    let alpha_total = checked_pow(kn, alpha_free)
        .ok_or_else(|| CochainError::BoundExceeded("3-cochain space".into()))?;
    let beta_total = checked_pow(kn, beta_free)
        .ok_or_else(|| CochainError::BoundExceeded("braiding space".into()))?;
    let cochain_total = checked_pow(kn, beta_free)
        .ok_or_else(|| CochainError::BoundExceeded("2-cochain space".into()))?;

    // Free positions of a normalized cochain, in a fixed order.
    let mut alpha_pos: Vec<[usize; 3]> = Vec::new();
    let mut beta_pos: Vec<[usize; 2]> = Vec::new();
    for &x in &nz {
        for &y in &nz {
            beta_pos.push([x, y]);
            for &z in &nz {
                alpha_pos.push([x, y, z]);
            }
        }
    }

    // Step 1: all normalized 3-cocycles.
    let mut cocycles: Vec<Cochain> = Vec::new();
    for idx in 0..alpha_total {
        let mut alpha = Cochain::zero(3, grp.clone(), k.clone());
        let mut rest = idx;
        for p in &alpha_pos {
            alpha.set(p, rest % kn);
            rest /= kn;
        }
        if is_cocycle(&alpha) {
            cocycles.push(alpha);
        }
    }

    // Step 2: pair each with the compatible braidings (hexagon axioms of the
    // associated pointed category).
    let mut valid: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for alpha in &cocycles {
        for bidx in 0..beta_total {
            let mut beta = vec![0usize; n * n];
            let mut rest = bidx;
            for p in &beta_pos {
                beta[p[0] * n + p[1]] = rest % kn;
                rest /= kn;
            }
            let cat = PointedBraidedCategory::new_unvalidated(
                a.clone(),
                k.clone(),
                alpha.values().to_vec(),
                beta.clone(),
            )
            .expect("enumerated tables are well-sized");
            if cat.check_hexagons(ReportOptions::FirstHundred).passed() {
                valid.push((alpha.values().to_vec(), beta));
            }
        }
    }

    // Step 3: canonical orbit representative under the coboundary action.
    let mut classes = std::collections::HashSet::new();
    for (alpha_vals, beta) in &valid {
        let mut canonical: Option<(Vec<usize>, Vec<usize>)> = None;
        for cidx in 0..cochain_total {
            let mut c = Cochain::zero(2, grp.clone(), k.clone());
            let mut rest = cidx;
            for p in &beta_pos {
                c.set(p, rest % kn);
                rest /= kn;
            }
            let dc = coboundary(&c);
            let alpha2: Vec<usize> = alpha_vals
                .iter()
                .zip(dc.values())
                .map(|(&v, &d)| k.add(v, d))
                .collect();
            // Transport along the identity functor with tensorator c:
            // alpha picks up +dc and beta picks up c(y,x) - c(x,y); the
            // matched signs keep the hexagons valid along the orbit.
            let beta2: Vec<usize> = (0..n * n)
                .map(|i| {
                    let (x, y) = (i / n, i % n);
                    k.add(beta[i], k.sub(c.value(&[y, x]), c.value(&[x, y])))
                })
                .collect();
            let cand = (alpha2, beta2);
            if canonical.as_ref().map_or(true, |best| &cand < best) {
                canonical = Some(cand);
            }
        }
        classes.insert(canonical.expect("orbit is nonempty"));
    }
    Ok(classes.len())
}

fn check_enumeration_bound(
    a: &FiniteAbelianGroup,
    k: &FiniteAbelianGroup,
    bound: usize,
) -> Result<(), CochainError> {
    let size = a.order().saturating_mul(k.order());
    if size > bound {
        return Err(CochainError::BoundExceeded(format!(
            "|A|*|K| = {size} exceeds bound {bound}"
        )));
    }
    Ok(())
}

fn checked_pow(base: usize, exp: usize) -> Option<usize> {
    let mut acc: usize = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
        if acc > 100_000_000 {
            return None;
        }
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::make_cyclic;

    fn z2() -> FiniteGroup {
        make_cyclic(2)
    }

    #[test]
    fn coboundary_of_zero_is_zero() {
        let c = Cochain::zero(2, z2(), FiniteAbelianGroup::cyclic(4));
        assert!(coboundary(&c).is_zero());
    }

    #[test]
    fn d_squared_vanishes_exhaustively_over_z2() {
        // every 1-cochain Z/2 -> Z/2 (not only normalized ones)
        let k = FiniteAbelianGroup::cyclic(2);
        for v0 in 0..2 {
            for v1 in 0..2 {
                let c = Cochain::new(1, z2(), k.clone(), vec![v0, v1]).unwrap();
                assert!(coboundary(&coboundary(&c)).is_zero());
            }
        }
        // and every 2-cochain
        for bits in 0..16 {
            let values = (0..4).map(|i| (bits >> i) & 1).collect();
            let c = Cochain::new(2, z2(), k.clone(), values).unwrap();
            assert!(coboundary(&coboundary(&c)).is_zero());
        }
    }

    #[test]
    fn hom_has_zero_coboundary() {
        // 1-cochain on Z/2 with c(1) = 1 is a homomorphism, so dc = 0.
        let k = FiniteAbelianGroup::cyclic(2);
        let c = Cochain::new(1, z2(), k, vec![0, 1]).unwrap();
        assert!(coboundary(&c).is_zero());
    }

    #[test]
    fn cocycle_and_coboundary_detection() {
        let k4 = FiniteAbelianGroup::cyclic(4);
        let zero = Cochain::zero(3, z2(), k4.clone());
        assert!(is_cocycle(&zero));
        let w = is_coboundary(&zero).unwrap();
        assert!(coboundary(&w).is_zero());

        // omega(1,1,1) = 1 in Z/4 is not a cocycle: d omega(1,1,1,1) = 2.
        let mut omega = Cochain::zero(3, z2(), k4.clone());
        omega.set(&[1, 1, 1], 1);
        assert!(!is_cocycle(&omega));
        assert_eq!(coboundary(&omega).value(&[1, 1, 1, 1]), 2);

        // omega(1,1,1) = 2 is a cocycle but not a coboundary.
        let mut omega2 = Cochain::zero(3, z2(), k4);
        omega2.set(&[1, 1, 1], 2);
        assert!(is_cocycle(&omega2));
        assert!(is_coboundary(&omega2).is_none());
    }

    #[test]
    fn coboundary_witness_is_exact() {
        // d of a random 1-cochain must be recognized with an exact witness.
        let k = FiniteAbelianGroup::cyclic(6);
        let c = Cochain::new(1, make_cyclic(3), k, vec![0, 4, 1]).unwrap();
        let dc = coboundary(&c);
        let witness = is_coboundary(&dc).expect("dc is a coboundary");
        assert_eq!(coboundary(&witness), dc);
    }

    #[test]
    fn pushforward_of_zero_mu_vanishes() {
        let ac = AbelianThreeCocycle::semion();
        let mu = Cochain::zero(2, z2(), ac.object_group().clone());
        let p = pw_pushforward(&mu, &ac).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn pushforward_beta_term_only() {
        // alpha = 0, beta(1,1) = 1 in Z/4, mu(1,1) = 1: the value is 1 at
        // (1,1,1,1) and 0 elsewhere. (This (alpha, beta) pair is not an
        // abelian cocycle; the formula is still defined on it.)
        let a = FiniteAbelianGroup::cyclic(2);
        let k = FiniteAbelianGroup::cyclic(4);
        let alpha = Cochain::zero(3, a.to_group(), k.clone());
        let ac = AbelianThreeCocycle::new_unchecked(a.clone(), k, alpha, vec![0, 0, 0, 1]);
        let mut mu = Cochain::zero(2, z2(), a);
        mu.set(&[1, 1], 1);
        let p = pw_pushforward(&mu, &ac).unwrap();
        for t in p.tuples() {
            let expected = if t == vec![1, 1, 1, 1] { 1 } else { 0 };
            assert_eq!(p.value(&t), expected, "at {t:?}");
        }
    }

    #[test]
    fn semion_pushforward_is_a_cocycle() {
        let ac = AbelianThreeCocycle::semion();
        let mut mu = Cochain::zero(2, z2(), ac.object_group().clone());
        mu.set(&[1, 1], 1);
        let p = pw_pushforward(&mu, &ac).unwrap();
        assert!(is_cocycle(&p));
    }

    #[test]
    fn obstruction_checks() {
        let ac = AbelianThreeCocycle::semion();
        let k4 = ac.scalar_group().clone();
        let mut mu = Cochain::zero(2, z2(), ac.object_group().clone());
        mu.set(&[1, 1], 1);
        // No omega works: 2*omega(1,1,1) can never be 1 in Z/4.
        assert!(solve_obstruction(&mu, &ac).unwrap().is_none());
        for w in 0..4 {
            let mut omega = Cochain::zero(3, z2(), k4.clone());
            omega.set(&[1, 1, 1], w);
            assert!(!check_obstruction(&omega, &mu, &ac).unwrap());
        }
        // Trivial pair: every 3-cocycle passes.
        let triv =
            AbelianThreeCocycle::trivial(ac.object_group().clone(), k4.clone());
        let mut omega = Cochain::zero(3, z2(), k4.clone());
        omega.set(&[1, 1, 1], 2);
        assert!(check_obstruction(&omega, &mu, &triv).unwrap());
        // Everything trivial.
        let zero = Cochain::zero(3, z2(), k4);
        let mu0 = Cochain::zero(2, z2(), ac.object_group().clone());
        assert!(check_obstruction(&zero, &mu0, &triv).unwrap());
    }

    #[test]
    fn obstruction_solvability_is_coboundary_invariant() {
        let ac = AbelianThreeCocycle::semion();
        let a = ac.object_group().clone();
        for grp in [make_cyclic(2), make_cyclic(3)] {
            let mut candidates: Vec<Cochain> = Vec::new();
            // all normalized 2-cochains valued in Z/2
            let nz = grp.order() - 1;
            for idx in 0..(1usize << (nz * nz)) {
                let mut mu = Cochain::zero(2, grp.clone(), a.clone());
                let mut rest = idx;
                for x in 1..grp.order() {
                    for y in 1..grp.order() {
                        mu.set(&[x, y], rest % 2);
                        rest /= 2;
                    }
                }
                if is_cocycle(&mu) {
                    candidates.push(mu);
                }
            }
            for mu in &candidates {
                let solvable = solve_obstruction(mu, &ac).unwrap().is_some();
                // shift by the coboundary of every normalized 1-cochain
                for v in 0..a.order().pow((grp.order() - 1) as u32) {
                    let mut c = Cochain::zero(1, grp.clone(), a.clone());
                    let mut rest = v;
                    for x in 1..grp.order() {
                        c.set(&[x], rest % a.order());
                        rest /= a.order();
                    }
                    let shifted = mu.add(&coboundary(&c)).unwrap();
                    assert_eq!(
                        solve_obstruction(&shifted, &ac).unwrap().is_some(),
                        solvable
                    );
                }
            }
        }
    }

    #[test]
    fn quadratic_form_values() {
        let triv = AbelianThreeCocycle::trivial(
            FiniteAbelianGroup::cyclic(2),
            FiniteAbelianGroup::cyclic(4),
        );
        assert_eq!(quadratic_form(&triv, 0).unwrap(), 0);
        assert_eq!(quadratic_form(&triv, 1).unwrap(), 0);
        // Golden value for the semion under the fixed dual convention:
        // q(1) = beta(1,1) - alpha(1,1,1) = 1 - 2 = 3 in Z/4.
        let ac = AbelianThreeCocycle::semion();
        assert_eq!(quadratic_form(&ac, 0).unwrap(), 0);
        let q1 = quadratic_form(&ac, 1).unwrap();
        assert_eq!(q1, 3);
        // q(1) must be an order-4 element of Z/4.
        let k = ac.scalar_group();
        assert_ne!(k.scale(2, q1), 0);
    }

    #[test]
    fn quadratic_form_scales_as_a_square() {
        // q(n*x) = n^2 * q(x) for every valid abelian cocycle in a small
        // catalog.
        let mut acs = vec![AbelianThreeCocycle::semion()];
        // fermion: alpha = 0, beta(1,1) = 2 over Z/4.
        let a = FiniteAbelianGroup::cyclic(2);
        let k = FiniteAbelianGroup::cyclic(4);
        acs.push(
            AbelianThreeCocycle::new(
                a.clone(),
                k.clone(),
                Cochain::zero(3, a.to_group(), k.clone()),
                vec![0, 0, 0, 2],
            )
            .unwrap(),
        );
        // Z/3 with bilinear braidings.
        let a3 = FiniteAbelianGroup::cyclic(3);
        let k3 = FiniteAbelianGroup::cyclic(3);
        for t in 0..3 {
            let beta: Vec<usize> =
                (0..9).map(|i| (i / 3) * (i % 3) * t % 3).collect();
            acs.push(
                AbelianThreeCocycle::new(
                    a3.clone(),
                    k3.clone(),
                    Cochain::zero(3, a3.to_group(), k3.clone()),
                    beta,
                )
                .unwrap(),
            );
        }
        for ac in &acs {
            let a = ac.object_group();
            let k = ac.scalar_group();
            for x in a.elements() {
                let qx = quadratic_form(ac, x).unwrap();
                for n in 0..=(a.order() as i64) {
                    let nx = a.scale(n, x);
                    assert_eq!(
                        quadratic_form(ac, nx).unwrap(),
                        k.scale(n * n, qx),
                        "q({n}*{x}) != {n}^2 q({x})"
                    );
                }
            }
        }
    }

    #[test]
    fn quadratic_form_counts() {
        let z2a = FiniteAbelianGroup::cyclic(2);
        let z4 = FiniteAbelianGroup::cyclic(4);
        let z2k = FiniteAbelianGroup::cyclic(2);
        let z3 = FiniteAbelianGroup::cyclic(3);
        assert_eq!(enumerate_quadratic_forms(&z2a, &z4, 4096).unwrap().len(), 4);
        assert_eq!(enumerate_quadratic_forms(&z2a, &z2k, 4096).unwrap().len(), 2);
        assert_eq!(enumerate_quadratic_forms(&z3, &z3, 4096).unwrap().len(), 3);
        let triv = FiniteAbelianGroup::trivial();
        assert_eq!(enumerate_quadratic_forms(&triv, &z4, 4096).unwrap().len(), 1);
    }

    #[test]
    fn cocycle_classes_match_quadratic_forms() {
        for (a, k) in [
            (FiniteAbelianGroup::cyclic(2), FiniteAbelianGroup::cyclic(2)),
            (FiniteAbelianGroup::cyclic(2), FiniteAbelianGroup::cyclic(4)),
            (FiniteAbelianGroup::cyclic(3), FiniteAbelianGroup::cyclic(3)),
            (FiniteAbelianGroup::cyclic(2), FiniteAbelianGroup::cyclic(3)),
        ] {
            let forms = enumerate_quadratic_forms(&a, &k, 4096).unwrap().len();
            let classes = enumerate_abelian_cocycle_classes(&a, &k, 4096).unwrap();
            assert_eq!(forms, classes, "A = {:?}, K = {:?}", a.factors(), k.factors());
        }
    }

    #[test]
    fn coboundary_action_preserves_hexagon_validity() {
        // Shifting the Z/3 bilinear braiding by any normalized 2-cochain
        // must stay a valid abelian cocycle under the matched signs.
        let a = FiniteAbelianGroup::cyclic(3);
        let k = FiniteAbelianGroup::cyclic(3);
        let beta: Vec<usize> = (0..9).map(|i| (i / 3) * (i % 3) % 3).collect();
        let alpha = Cochain::zero(3, a.to_group(), k.clone());
        for cidx in 0..81usize {
            let mut c = Cochain::zero(2, a.to_group(), k.clone());
            let mut rest = cidx;
            for x in 1..3 {
                for y in 1..3 {
                    c.set(&[x, y], rest % 3);
                    rest /= 3;
                }
            }
            let dc = coboundary(&c);
            let alpha2: Vec<usize> = alpha
                .values()
                .iter()
                .zip(dc.values())
                .map(|(&v, &d)| k.add(v, d))
                .collect();
            let beta2: Vec<usize> = (0..9)
                .map(|i| {
                    let (x, y) = (i / 3, i % 3);
                    k.add(beta[i], k.sub(c.value(&[y, x]), c.value(&[x, y])))
                })
                .collect();
            let cat = PointedBraidedCategory::new_unvalidated(
                a.clone(),
                k.clone(),
                alpha2,
                beta2,
            )
            .unwrap();
            assert!(
                cat.check_hexagons(ReportOptions::FirstHundred).passed(),
                "shift {cidx} broke the hexagons"
            );
        }
    }

    #[test]
    fn bound_is_enforced() {
        let a = FiniteAbelianGroup::cyclic(64);
        let k = FiniteAbelianGroup::cyclic(65);
        assert!(matches!(
            enumerate_quadratic_forms(&a, &k, 4096),
            Err(CochainError::BoundExceeded(_))
        ));
    }
}
