//! Finite groups as dense multiplication tables, group homomorphisms, and
//! finite abelian coefficient groups written additively.
//!
//! Elements are indices `0..order`, the identity is always index `0`, and
//! inverses are precomputed. This makes serialization canonical and keeps
//! every later verifier a plain loop over integer tuples.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("multiplication table is not square (row {row} has length {len}, order {order})")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("table entry {value} at ({a},{b}) is out of range for order {order}")]
    EntryOutOfRange { a: usize, b: usize, value: usize, order: usize },
    #[error("table violates the group axioms: {0}")]
    AxiomViolation(String),
    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),
}

/// One defect found by [`check_group_axioms`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupAxiomFailure {
    /// `(a*b)*c != a*(b*c)` at the given triple.
    Associativity { a: usize, b: usize, c: usize },
    /// No element acts as a two-sided identity.
    NoIdentity,
    /// Element `a` has no two-sided inverse.
    NoInverse { a: usize },
}

/// A finite group presented by its full multiplication table.
///
/// Invariants (checked on construction): the table is associative, index 0
/// is a two-sided identity, and every element has a two-sided inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Builds a group from a multiplication table, verifying all axioms and
    /// that index 0 is the identity.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        let order = rows.len();
        if order == 0 {
            return Err(GroupError::AxiomViolation("empty table".into()));
        }
        let mut table = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::NotSquare { row: i, len: row.len(), order });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(GroupError::EntryOutOfRange { a: i, b: j, value: v, order });
                }
                table.push(v);
            }
        }
        let failures = check_table_axioms(&table, order);
        if let Some(f) = failures.first() {
            return Err(GroupError::AxiomViolation(format!("{f:?}")));
        }
        // Identity must be index 0 by convention.
        for a in 0..order {
            if table[a] != a || table[a * order] != a {
                return Err(GroupError::AxiomViolation(
                    "identity element is not index 0".into(),
                ));
            }
        }
        let mut inverse = vec![0; order];
        for a in 0..order {
            inverse[a] = (0..order)
                .find(|&b| table[a * order + b] == 0 && table[b * order + a] == 0)
                .expect("axiom check guarantees inverses");
        }
        Ok(FiniteGroup { order, table, inverse })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Product of a slice of elements, left to right.
    pub fn prod(&self, xs: &[usize]) -> usize {
        xs.iter().fold(0, |acc, &x| self.mul(acc, x))
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| self.table[a * self.order..(a + 1) * self.order].to_vec())
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order)
            .all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Brute-force center.
    pub fn center(&self) -> Vec<usize> {
        self.elements()
            .filter(|&z| self.elements().all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// Direct product, indexed lexicographically (`a * |H| + b`).
    pub fn product(&self, other: &FiniteGroup) -> FiniteGroup {
        let n = self.order * other.order;
        let mut table = vec![0usize; n * n];
        for a1 in 0..self.order {
            for b1 in 0..other.order {
                for a2 in 0..self.order {
                    for b2 in 0..other.order {
                        let x = a1 * other.order + b1;
                        let y = a2 * other.order + b2;
                        table[x * n + y] =
                            self.mul(a1, a2) * other.order + other.mul(b1, b2);
                    }
                }
            }
        }
        let mut inverse = vec![0usize; n];
        for a in 0..self.order {
            for b in 0..other.order {
                inverse[a * other.order + b] = self.inv(a) * other.order + other.inv(b);
            }
        }
        FiniteGroup { order: n, table, inverse }
    }
}

/// Conjugation `g h g^{-1}`, the grading target of the categorical G-action.
pub fn conjugate(grp: &FiniteGroup, g: usize, h: usize) -> usize {
    grp.mul(grp.mul(g, h), grp.inv(g))
}

/// Cyclic group Z/n with addition mod n.
pub fn make_cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1, "cyclic group needs n >= 1");
    let mut table = vec![0usize; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = (a + b) % n;
        }
    }
    let inverse = (0..n).map(|a| (n - a) % n).collect();
    FiniteGroup { order: n, table, inverse }
}

/// Dihedral group of order 2n: indices `0..n` are rotations `r^i`, indices
/// `n..2n` are reflections `s r^i`, with `s r s = r^{-1}`.
pub fn make_dihedral(n: usize) -> FiniteGroup {
    assert!(n >= 3, "dihedral group needs n >= 3");
    let order = 2 * n;
    let mut table = vec![0usize; order * order];
    for i in 0..n {
        for j in 0..n {
            // r^i r^j = r^{i+j}
            table[i * order + j] = (i + j) % n;
            // r^i (s r^j) = s r^{j-i}
            table[i * order + (n + j)] = n + (j + n - i) % n;
            // (s r^i) r^j = s r^{i+j}
            table[(n + i) * order + j] = n + (i + j) % n;
            // (s r^i)(s r^j) = r^{j-i}
            table[(n + i) * order + (n + j)] = (j + n - i) % n;
        }
    }
    let mut inverse = vec![0usize; order];
    for i in 0..n {
        inverse[i] = (n - i) % n;
        inverse[n + i] = n + i;
    }
    FiniteGroup { order, table, inverse }
}

/// Scans a raw table for every violated group axiom instance. An empty
/// report means the table is a group (with some identity, not necessarily 0).
pub fn check_group_axioms(rows: &[Vec<usize>]) -> Vec<GroupAxiomFailure> {
    let order = rows.len();
    let mut flat = Vec::with_capacity(order * order);
    for row in rows {
        assert_eq!(row.len(), order, "axiom scan needs a square table");
        for &v in row {
            assert!(v < order, "axiom scan needs entries in range");
        }
        flat.extend_from_slice(row);
    }
    check_table_axioms(&flat, order)
}

fn check_table_axioms(table: &[usize], order: usize) -> Vec<GroupAxiomFailure> {
    let mut failures = Vec::new();
    let at = |a: usize, b: usize| table[a * order + b];
    for a in 0..order {
        for b in 0..order {
            for c in 0..order {
                if at(at(a, b), c) != at(a, at(b, c)) {
                    failures.push(GroupAxiomFailure::Associativity { a, b, c });
                }
            }
        }
    }
    let identity = (0..order).find(|&e| (0..order).all(|a| at(e, a) == a && at(a, e) == a));
    match identity {
        None => failures.push(GroupAxiomFailure::NoIdentity),
        Some(e) => {
            for a in 0..order {
                if !(0..order).any(|b| at(a, b) == e && at(b, a) == e) {
                    failures.push(GroupAxiomFailure::NoInverse { a });
                }
            }
        }
    }
    failures
}

/// A group homomorphism given by its value table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    pub source: FiniteGroup,
    pub target: FiniteGroup,
    pub image: Vec<usize>,
}

impl GroupHom {
    pub fn new(
        source: FiniteGroup,
        target: FiniteGroup,
        image: Vec<usize>,
    ) -> Result<Self, GroupError> {
        let hom = GroupHom { source, target, image };
        hom.validate()?;
        Ok(hom)
    }

    pub fn validate(&self) -> Result<(), GroupError> {
        if self.image.len() != self.source.order() {
            return Err(GroupError::InvalidHom(format!(
                "image table has length {}, source order is {}",
                self.image.len(),
                self.source.order()
            )));
        }
        if let Some(&v) = self.image.iter().find(|&&v| v >= self.target.order()) {
            return Err(GroupError::InvalidHom(format!("image value {v} out of range")));
        }
        if self.image[0] != 0 {
            return Err(GroupError::InvalidHom("identity is not preserved".into()));
        }
        for a in self.source.elements() {
            for b in self.source.elements() {
                let lhs = self.image[self.source.mul(a, b)];
                let rhs = self.target.mul(self.image[a], self.image[b]);
                if lhs != rhs {
                    return Err(GroupError::InvalidHom(format!(
                        "image[{a}*{b}] = {lhs} but image[{a}]*image[{b}] = {rhs}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Kernel of a homomorphism together with a normality flag.
///
/// Normality is verified by conjugating every kernel element by every group
/// element, never assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kernel {
    pub elements: Vec<usize>,
    pub normal: bool,
}

pub fn kernel_normal(hom: &GroupHom) -> Result<Kernel, GroupError> {
    hom.validate()?;
    let elements: Vec<usize> =
        hom.source.elements().filter(|&g| hom.image[g] == 0).collect();
    let in_kernel = |x: usize| elements.binary_search(&x).is_ok();
    let normal = hom.source.elements().all(|g| {
        elements.iter().all(|&k| in_kernel(conjugate(&hom.source, g, k)))
    });
    Ok(Kernel { elements, normal })
}

/// A finite abelian group `Z/n_1 x ... x Z/n_r` written additively.
///
/// Elements are indexed lexicographically by their residue tuples; all scalar
/// arithmetic in the category layers runs through `add`/`neg` on indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    factors: Vec<usize>,
    order: usize,
}

impl FiniteAbelianGroup {
    pub fn new(factors: Vec<usize>) -> Self {
        assert!(factors.iter().all(|&n| n >= 1), "cyclic factors must be positive");
        let order = factors.iter().product::<usize>().max(1);
        FiniteAbelianGroup { factors, order }
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup { factors: vec![], order: 1 }
    }

    pub fn cyclic(n: usize) -> Self {
        Self::new(vec![n])
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn decode(&self, mut idx: usize) -> Vec<usize> {
        let mut tuple = vec![0; self.factors.len()];
        for i in (0..self.factors.len()).rev() {
            tuple[i] = idx % self.factors[i];
            idx /= self.factors[i];
        }
        tuple
    }

    pub fn encode(&self, tuple: &[usize]) -> usize {
        assert_eq!(tuple.len(), self.factors.len());
        let mut idx = 0;
        for (i, &t) in tuple.iter().enumerate() {
            idx = idx * self.factors[i] + (t % self.factors[i]);
        }
        idx
    }

    pub fn add(&self, mut a: usize, mut b: usize) -> usize {
        // Mixed-radix componentwise addition, least significant factor last;
        // allocation-free because this sits in every verifier's inner loop.
        let mut out = 0;
        let mut mult = 1;
        for &n in self.factors.iter().rev() {
            let (da, db) = (a % n, b % n);
            a /= n;
            b /= n;
            out += ((da + db) % n) * mult;
            mult *= n;
        }
        out
    }

    pub fn neg(&self, mut a: usize) -> usize {
        let mut out = 0;
        let mut mult = 1;
        for &n in self.factors.iter().rev() {
            let da = a % n;
            a /= n;
            out += ((n - da) % n) * mult;
            mult *= n;
        }
        out
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `n * a` for an integer multiple (n may be negative).
    pub fn scale(&self, n: i64, mut a: usize) -> usize {
        let mut out = 0;
        let mut mult = 1;
        for &m in self.factors.iter().rev() {
            let da = (a % m) as i64;
            a /= m;
            let m_i = m as i64;
            out += ((((n * da) % m_i + m_i) % m_i) as usize) * mult;
            mult *= m;
        }
        out
    }

    /// The same group as a plain multiplication table.
    pub fn to_group(&self) -> FiniteGroup {
        let n = self.order;
        let mut table = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.add(a, b);
            }
        }
        let inverse = (0..n).map(|a| self.neg(a)).collect();
        FiniteGroup { order: n, table, inverse }
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_groups_pass_axioms() {
        for n in [1, 2, 6] {
            let g = make_cyclic(n);
            assert!(check_group_axioms(&g.rows()).is_empty(), "Z/{n} failed");
        }
        assert_eq!(make_cyclic(1).order(), 1);
        assert_eq!(make_cyclic(2).rows(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn dihedral_relations() {
        let d3 = make_dihedral(3);
        assert!(check_group_axioms(&d3.rows()).is_empty());
        // s r s^{-1} = r^{-1}: with r = 1, s = 3 this is element 2.
        let s = 3;
        let r = 1;
        assert_eq!(conjugate(&d3, s, r), d3.inv(r));
        assert_eq!(conjugate(&d3, s, r), 2);
        let d4 = make_dihedral(4);
        assert!(check_group_axioms(&d4.rows()).is_empty());
        assert_eq!(d4.center().len(), 2);
    }

    #[test]
    fn axiom_scan_reports_missing_inverse() {
        let bad = vec![vec![0, 1], vec![1, 1]];
        let failures = check_group_axioms(&bad);
        assert!(failures.contains(&GroupAxiomFailure::NoInverse { a: 1 }));
        // the same table also fails associativity somewhere? It does not need
        // to; the inverse failure is the required finding.
    }

    #[test]
    fn product_table_is_a_group() {
        let z2 = make_cyclic(2);
        let z3 = make_cyclic(3);
        let p = z2.product(&z3);
        assert!(check_group_axioms(&p.rows()).is_empty());
        assert_eq!(p.order(), 6);
        assert!(p.is_abelian());
    }

    #[test]
    fn conjugation_is_an_automorphism() {
        for grp in [make_cyclic(4), make_dihedral(3)] {
            for g in grp.elements() {
                for a in grp.elements() {
                    for b in grp.elements() {
                        assert_eq!(
                            conjugate(&grp, g, grp.mul(a, b)),
                            grp.mul(conjugate(&grp, g, a), conjugate(&grp, g, b))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn conjugation_in_abelian_groups_is_trivial() {
        let g = make_cyclic(5);
        for a in g.elements() {
            for h in g.elements() {
                assert_eq!(conjugate(&g, a, h), h);
            }
        }
        let t = make_cyclic(1);
        assert_eq!(conjugate(&t, 0, 0), 0);
    }

    #[test]
    fn kernel_of_reduction_mod_two() {
        let z4 = make_cyclic(4);
        let z2 = make_cyclic(2);
        let hom = GroupHom::new(z4, z2, vec![0, 1, 0, 1]).unwrap();
        let k = kernel_normal(&hom).unwrap();
        assert_eq!(k.elements, vec![0, 2]);
        assert!(k.normal);
    }

    #[test]
    fn kernel_edge_cases() {
        let z3 = make_cyclic(3);
        let id = GroupHom::new(z3.clone(), z3.clone(), vec![0, 1, 2]).unwrap();
        assert_eq!(kernel_normal(&id).unwrap().elements, vec![0]);
        let triv = make_cyclic(1);
        let constant = GroupHom::new(z3.clone(), triv, vec![0, 0, 0]).unwrap();
        let k = kernel_normal(&constant).unwrap();
        assert_eq!(k.elements, vec![0, 1, 2]);
        assert!(k.normal);
    }

    #[test]
    fn kernel_is_closed_under_conjugation_and_product() {
        // Nonabelian check: sign map D3 -> Z/2.
        let d3 = make_dihedral(3);
        let z2 = make_cyclic(2);
        let hom = GroupHom::new(d3.clone(), z2, vec![0, 0, 0, 1, 1, 1]).unwrap();
        let k = kernel_normal(&hom).unwrap();
        assert_eq!(k.elements, vec![0, 1, 2]);
        assert!(k.normal);
        for &a in &k.elements {
            for &b in &k.elements {
                assert!(k.elements.contains(&d3.mul(a, b)));
            }
        }
    }

    #[test]
    fn invalid_hom_is_rejected() {
        let z4 = make_cyclic(4);
        let z2 = make_cyclic(2);
        assert!(GroupHom::new(z4, z2, vec![0, 1, 1, 0]).is_err());
    }

    #[test]
    fn abelian_group_arithmetic() {
        let a = FiniteAbelianGroup::new(vec![2, 3]);
        assert_eq!(a.order(), 6);
        let x = a.encode(&[1, 2]);
        let y = a.encode(&[1, 1]);
        assert_eq!(a.decode(a.add(x, y)), vec![0, 0]);
        assert_eq!(a.add(x, a.neg(x)), 0);
        assert_eq!(a.scale(2, x), a.add(x, x));
        assert_eq!(a.scale(-1, x), a.neg(x));
        assert!(check_group_axioms(&a.to_group().rows()).is_empty());
    }

    #[test]
    fn identity_not_index_zero_is_rejected() {
        // Z/2 with swapped labels: identity would be index 1.
        let rows = vec![vec![1, 0], vec![0, 1]];
        assert!(FiniteGroup::from_table(&rows).is_err());
    }
}
