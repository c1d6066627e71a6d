//! Finite pointed G-crossed braided categories: the central type, its
//! exhaustive axiom verifiers, the zesting constructor, functor and
//! transformation verifiers, duality, and decategorification.
//!
//! Objects are pairs (grade, local index); every structure morphism is a
//! scalar in the coefficient group `K`, whiskering preserves scalars, tensor
//! and composition of morphisms are addition in `K`. Every axiom is a signed
//! sum of table entries evaluated over all object tuples.

use crate::cochain::{self, Cochain, CochainError};
use crate::crossed_monoid::GCrossedMonoid;
use crate::fingroup::{conjugate, FiniteAbelianGroup, FiniteGroup};
use crate::pointed::{Evaluator, ObjectWord, PointedBraidedCategory};
use crate::report::{AxiomLabel, Report, ReportOptions};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GcError {
    #[error("category data is ill-typed: {0}")]
    IllTyped(String),
    #[error("mu is not a normalized 2-cocycle")]
    NotACocycle,
    #[error("the obstruction class does not vanish: no omega satisfies d(omega) = pushforward")]
    ObstructionNonvanishing { pushforward: Cochain },
    #[error("omega does not satisfy d(omega) = pushforward (although some omega does)")]
    IncompatibleOmega,
    #[error("cochain data mismatch: {0}")]
    Cochain(#[from] CochainError),
    #[error("functor data does not preserve grading or scalars: {0}")]
    GradingMismatch(String),
    #[error("object {0} has no tensor-inverse object")]
    NoDual(usize),
    #[error("snake equations inconsistent for object {0}")]
    NoSolution(usize),
    #[error("unit-graded objects do not form a group under tensor: {0}")]
    NotAGroupOfObjects(String),
}

/// A finite pointed G-crossed braided category, all structure stored as
/// dense tables over global object indices.
///
/// Global object indices enumerate grade by grade: object `(g, i)` has index
/// `offset(g) + i`. All scalar tables are indexed by global indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GCrossedPointedCategory {
    pub grp: FiniteGroup,
    pub k: FiniteAbelianGroup,
    /// Number of objects in each grade.
    pub ob_count: Vec<usize>,
    /// Global index of the unit object (must be grade e).
    pub unit: usize,
    /// `tensor[x * n + y]`: global index of `x (x) y`.
    pub tensor: Vec<usize>,
    /// Associator scalar `a(x,y,z)`, dense over `n^3`.
    pub assoc: Vec<usize>,
    /// Left/right unitor scalars.
    pub lam: Vec<usize>,
    pub rho: Vec<usize>,
    /// `act[g * n + x]`: global index of `F_g(x)`.
    pub act: Vec<usize>,
    /// Unit-object isomorphism scalar `i_g` per group element.
    pub unit_iso: Vec<usize>,
    /// Tensorator `psi^g(x,y)`, `[g][x][y]`.
    pub tensorator: Vec<usize>,
    /// Action compositor `mu^{g,h}(x)`, `[g][h][x]`.
    pub act_comp: Vec<usize>,
    /// Unit transformation `iota(x)` per object.
    pub unit_transf: Vec<usize>,
    /// Crossed braiding scalar `c(x,y)`, `[x][y]`.
    pub braid: Vec<usize>,
}

impl GCrossedPointedCategory {
    pub fn n_objects(&self) -> usize {
        self.ob_count.iter().sum()
    }

    pub fn offset(&self, g: usize) -> usize {
        self.ob_count[..g].iter().sum()
    }

    pub fn grade_of(&self, x: usize) -> usize {
        let mut acc = 0;
        for (g, &c) in self.ob_count.iter().enumerate() {
            acc += c;
            if x < acc {
                return g;
            }
        }
        panic!("object index {x} out of range");
    }

    pub fn objects(&self) -> impl Iterator<Item = usize> {
        0..self.n_objects()
    }

    pub fn objects_of_grade(&self, g: usize) -> impl Iterator<Item = usize> {
        let off = self.offset(g);
        off..off + self.ob_count[g]
    }

    pub fn ten(&self, x: usize, y: usize) -> usize {
        self.tensor[x * self.n_objects() + y]
    }

    pub fn a(&self, x: usize, y: usize, z: usize) -> usize {
        let n = self.n_objects();
        self.assoc[(x * n + y) * n + z]
    }

    pub fn f(&self, g: usize, x: usize) -> usize {
        self.act[g * self.n_objects() + x]
    }

    pub fn psi(&self, g: usize, x: usize, y: usize) -> usize {
        let n = self.n_objects();
        self.tensorator[(g * n + x) * n + y]
    }

    pub fn muact(&self, g: usize, h: usize, x: usize) -> usize {
        let n = self.n_objects();
        self.act_comp[(g * self.grp.order() + h) * n + x]
    }

    pub fn iota(&self, x: usize) -> usize {
        self.unit_transf[x]
    }

    pub fn i_g(&self, g: usize) -> usize {
        self.unit_iso[g]
    }

    pub fn c(&self, x: usize, y: usize) -> usize {
        self.braid[x * self.n_objects() + y]
    }

    /// The trivial strict category with one object per grade and all
    /// structure zero (the crossed analog of `Vec(G)`).
    pub fn trivial(grp: FiniteGroup, k: FiniteAbelianGroup) -> Self {
        let n = grp.order();
        let mut tensor = vec![0; n * n];
        for g in 0..n {
            for h in 0..n {
                tensor[g * n + h] = grp.mul(g, h);
            }
        }
        let mut act = vec![0; n * n];
        for g in 0..n {
            for x in 0..n {
                act[g * n + x] = conjugate(&grp, g, x);
            }
        }
        GCrossedPointedCategory {
            k,
            ob_count: vec![1; n],
            unit: 0,
            tensor,
            assoc: vec![0; n * n * n],
            lam: vec![0; n],
            rho: vec![0; n],
            act,
            unit_iso: vec![0; n],
            tensorator: vec![0; n * n * n],
            act_comp: vec![0; n * n * n],
            unit_transf: vec![0; n],
            braid: vec![0; n * n],
            grp,
        }
    }

    /// Checks every object-level typing constraint that the scalar tables
    /// rely on: grading of tensor and action, unit laws, strict object-level
    /// associativity and action composition, and the crossed commutation
    /// `x (x) y = F_g(y) (x) x` that makes braiding scalars well-typed.
    pub fn validate_typing(&self) -> Result<(), GcError> {
        let n = self.n_objects();
        let ng = self.grp.order();
        if self.ob_count.len() != ng {
            return Err(GcError::IllTyped("one object set per group element required".into()));
        }
        if self.ob_count[0] == 0 {
            return Err(GcError::IllTyped("the unit grade has no objects".into()));
        }
        let sizes: [(usize, usize); 10] = [
            (self.tensor.len(), n * n),
            (self.assoc.len(), n * n * n),
            (self.lam.len(), n),
            (self.rho.len(), n),
            (self.act.len(), ng * n),
            (self.unit_iso.len(), ng),
            (self.tensorator.len(), ng * n * n),
            (self.act_comp.len(), ng * ng * n),
            (self.unit_transf.len(), n),
            (self.braid.len(), n * n),
        ];
        for (i, (got, want)) in sizes.iter().enumerate() {
            if got != want {
                return Err(GcError::IllTyped(format!(
                    "table {i} has length {got}, expected {want}"
                )));
            }
        }
        let kd = self.k.order();
        let scalars = self
            .assoc
            .iter()
            .chain(&self.lam)
            .chain(&self.rho)
            .chain(&self.unit_iso)
            .chain(&self.tensorator)
            .chain(&self.act_comp)
            .chain(&self.unit_transf)
            .chain(&self.braid);
        if let Some(&v) = scalars.clone().find(|&&v| v >= kd) {
            return Err(GcError::IllTyped(format!("scalar {v} out of range")));
        }
        if self.grade_of(self.unit) != 0 {
            return Err(GcError::IllTyped("unit object is not in the identity grade".into()));
        }
        for x in self.objects() {
            let g = self.grade_of(x);
            if self.ten(self.unit, x) != x || self.ten(x, self.unit) != x {
                return Err(GcError::IllTyped(format!("unit law fails at object {x}")));
            }
            for y in self.objects() {
                let h = self.grade_of(y);
                let t = self.ten(x, y);
                if t >= n {
                    return Err(GcError::IllTyped(format!("tensor out of range at ({x},{y})")));
                }
                if self.grade_of(t) != self.grp.mul(g, h) {
                    return Err(GcError::IllTyped(format!(
                        "tensor grading fails at ({x},{y})"
                    )));
                }
                for z in self.objects() {
                    if self.ten(self.ten(x, y), z) != self.ten(x, self.ten(y, z)) {
                        return Err(GcError::IllTyped(format!(
                            "object tensor is not associative at ({x},{y},{z})"
                        )));
                    }
                }
            }
        }
        for g in 0..ng {
            // F_g must be a grading-compatible bijection with F_e = id,
            // F_g F_h = F_{gh}, F_g(1) = 1, and F_g a strict tensor map on
            // objects; these equalities are what make the action scalars
            // well-typed.
            let mut seen = vec![false; n];
            for x in self.objects() {
                let fx = self.f(g, x);
                if fx >= n {
                    return Err(GcError::IllTyped(format!("action out of range at ({g},{x})")));
                }
                if seen[fx] {
                    return Err(GcError::IllTyped(format!("F_{g} is not injective")));
                }
                seen[fx] = true;
                if self.grade_of(fx) != conjugate(&self.grp, g, self.grade_of(x)) {
                    return Err(GcError::IllTyped(format!(
                        "action grading fails at ({g},{x})"
                    )));
                }
            }
            if self.f(g, self.unit) != self.unit {
                return Err(GcError::IllTyped(format!("F_{g}(1) != 1")));
            }
            if g == 0 {
                for x in self.objects() {
                    if self.f(0, x) != x {
                        return Err(GcError::IllTyped("F_e is not the identity".into()));
                    }
                }
            }
            for h in 0..ng {
                let gh = self.grp.mul(g, h);
                for x in self.objects() {
                    if self.f(g, self.f(h, x)) != self.f(gh, x) {
                        return Err(GcError::IllTyped(format!(
                            "F_{g} F_{h} != F_{gh} at object {x}"
                        )));
                    }
                }
            }
            for x in self.objects() {
                for y in self.objects() {
                    if self.f(g, self.ten(x, y)) != self.ten(self.f(g, x), self.f(g, y)) {
                        return Err(GcError::IllTyped(format!(
                            "F_{g} is not a strict tensor map at ({x},{y})"
                        )));
                    }
                }
            }
        }
        for x in self.objects() {
            let g = self.grade_of(x);
            for y in self.objects() {
                if self.ten(x, y) != self.ten(self.f(g, y), x) {
                    return Err(GcError::IllTyped(format!(
                        "crossed commutation x(x)y = F_g(y)(x)x fails at ({x},{y})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Pentagon and triangle over all object tuples.
    pub fn verify_monoidal(&self, opts: ReportOptions) -> Report {
        let mut report = Report::new(opts);
        let k = &self.k;
        for w in self.objects() {
            for x in self.objects() {
                for y in self.objects() {
                    for z in self.objects() {
                        let mut d = self.a(x, y, z);
                        d = k.sub(d, self.a(self.ten(w, x), y, z));
                        d = k.add(d, self.a(w, self.ten(x, y), z));
                        d = k.sub(d, self.a(w, x, self.ten(y, z)));
                        d = k.add(d, self.a(w, x, y));
                        report.record(AxiomLabel::Pentagon, &[w, x, y, z], d, 0);
                    }
                }
            }
        }
        for x in self.objects() {
            for y in self.objects() {
                let d = k.sub(
                    k.add(self.a(x, self.unit, y), self.lam[y]),
                    self.rho[x],
                );
                report.record(AxiomLabel::Triangle, &[x, y], d, 0);
            }
        }
        report
    }

    /// The six action coherence diagrams.
    pub fn verify_action(&self, opts: ReportOptions) -> Report {
        let mut report = Report::new(opts);
        let k = &self.k;
        let ng = self.grp.order();
        for g in 0..ng {
            // (psi1): associativity of the tensorator.
            for x in self.objects() {
                for y in self.objects() {
                    for z in self.objects() {
                        let lhs = [
                            self.a(self.f(g, x), self.f(g, y), self.f(g, z)),
                            self.psi(g, y, z),
                            self.psi(g, x, self.ten(y, z)),
                        ];
                        let rhs = [
                            self.psi(g, x, y),
                            self.psi(g, self.ten(x, y), z),
                            self.a(x, y, z),
                        ];
                        let d = k.sub(sum(k, &lhs), sum(k, &rhs));
                        report.record(AxiomLabel::Psi1, &[g, x, y, z], d, 0);
                    }
                }
            }
            // (psi2): unitality against i_g on both sides.
            for x in self.objects() {
                let left = k.sub(
                    sum(k, &[self.i_g(g), self.psi(g, self.unit, x), self.lam[x]]),
                    self.lam[self.f(g, x)],
                );
                report.record(AxiomLabel::Psi2, &[g, x, 0], left, 0);
                let right = k.sub(
                    sum(k, &[self.i_g(g), self.psi(g, x, self.unit), self.rho[x]]),
                    self.rho[self.f(g, x)],
                );
                report.record(AxiomLabel::Psi2, &[g, x, 1], right, 0);
            }
        }
        // (mu1): monoidality of the compositor.
        for g in 0..ng {
            for h in 0..ng {
                let gh = self.grp.mul(g, h);
                for x in self.objects() {
                    for y in self.objects() {
                        let lhs = [
                            self.psi(g, self.f(h, x), self.f(h, y)),
                            self.psi(h, x, y),
                            self.muact(g, h, self.ten(x, y)),
                        ];
                        let rhs = [
                            self.muact(g, h, x),
                            self.muact(g, h, y),
                            self.psi(gh, x, y),
                        ];
                        let d = k.sub(sum(k, &lhs), sum(k, &rhs));
                        report.record(AxiomLabel::Mu1, &[g, h, x, y], d, 0);
                    }
                }
            }
        }
        // (mu2): associativity of the compositor.
        for g in 0..ng {
            for h in 0..ng {
                for l in 0..ng {
                    let hl = self.grp.mul(h, l);
                    let gh = self.grp.mul(g, h);
                    for x in self.objects() {
                        let lhs = [self.muact(h, l, x), self.muact(g, hl, x)];
                        let rhs = [self.muact(g, h, self.f(l, x)), self.muact(gh, l, x)];
                        let d = k.sub(sum(k, &lhs), sum(k, &rhs));
                        report.record(AxiomLabel::Mu2, &[g, h, l, x], d, 0);
                    }
                }
            }
        }
        // (iota1): monoidality of the unit transformation.
        for x in self.objects() {
            for y in self.objects() {
                let lhs = k.sub(self.iota(self.ten(x, y)), self.psi(0, x, y));
                let rhs = k.add(self.iota(x), self.iota(y));
                report.record(AxiomLabel::Iota1, &[x, y], k.sub(lhs, rhs), 0);
            }
        }
        // (iota2): unitality against the compositor, both sides.
        for g in 0..ng {
            for x in self.objects() {
                let d1 = k.add(self.iota(self.f(g, x)), self.muact(0, g, x));
                report.record(AxiomLabel::Iota2, &[g, x, 0], d1, 0);
                let d2 = k.add(self.iota(x), self.muact(g, 0, x));
                report.record(AxiomLabel::Iota2, &[g, x, 1], d2, 0);
            }
        }
        report
    }

    /// The crossed hexagon and both heptagons.
    pub fn verify_braiding(&self, opts: ReportOptions) -> Report {
        let mut report = Report::new(opts);
        let k = &self.k;
        // (beta1)
        for y in self.objects() {
            let g_candidates = 0..self.grp.order();
            for g in g_candidates {
                for z in self.objects() {
                    let h = self.grade_of(y);
                    let ghg = conjugate(&self.grp, g, h);
                    let fy = self.f(g, y);
                    let fz = self.f(g, z);
                    let lhs = k.sub(self.muact(ghg, g, z), self.c(fy, fz));
                    let rhs_pos = [self.psi(g, y, z), self.muact(g, h, z)];
                    let rhs = k.sub(
                        k.sub(sum(k, &rhs_pos), self.c(y, z)),
                        self.psi(g, self.f(h, z), y),
                    );
                    let d = k.sub(lhs, rhs);
                    report.record(AxiomLabel::Beta1, &[g, y, z], d, 0);
                }
            }
        }
        // (beta2)
        for x in self.objects() {
            let g = self.grade_of(x);
            for y in self.objects() {
                for z in self.objects() {
                    let fy = self.f(g, y);
                    let fz = self.f(g, z);
                    let lhs = k.sub(
                        k.sub(
                            k.add(self.a(x, y, z), self.a(fy, fz, x)),
                            self.c(x, self.ten(y, z)),
                        ),
                        self.psi(g, y, z),
                    );
                    let rhs = k.sub(
                        self.a(fy, x, z),
                        k.add(self.c(x, y), self.c(x, z)),
                    );
                    report.record(AxiomLabel::Beta2, &[x, y, z], k.sub(lhs, rhs), 0);
                }
            }
        }
        // (beta3)
        for x in self.objects() {
            let g = self.grade_of(x);
            for y in self.objects() {
                let h = self.grade_of(y);
                for z in self.objects() {
                    let fhz = self.f(h, z);
                    let ffz = self.f(g, fhz);
                    let lhs = k.neg(sum(
                        k,
                        &[
                            self.c(self.ten(x, y), z),
                            self.a(x, y, z),
                            self.muact(g, h, z),
                            self.a(ffz, x, y),
                        ],
                    ));
                    let rhs = k.neg(sum(
                        k,
                        &[self.c(y, z), self.a(x, fhz, y), self.c(x, fhz)],
                    ));
                    report.record(AxiomLabel::Beta3, &[x, y, z], k.sub(lhs, rhs), 0);
                }
            }
        }
        report
    }

    /// Union of all three verifier suites.
    pub fn verify_all(&self, opts: ReportOptions) -> Report {
        let mut report = self.verify_monoidal(opts);
        report.merge(self.verify_action(opts));
        report.merge(self.verify_braiding(opts));
        report
    }

    /// Strictness: associator, unitors, and all action coherence scalars are
    /// identities. (The braiding may be anything.)
    pub fn is_strict(&self) -> bool {
        self.assoc.iter().all(|&v| v == 0)
            && self.lam.iter().all(|&v| v == 0)
            && self.rho.iter().all(|&v| v == 0)
            && self.unit_iso.iter().all(|&v| v == 0)
            && self.tensorator.iter().all(|&v| v == 0)
            && self.act_comp.iter().all(|&v| v == 0)
            && self.unit_transf.iter().all(|&v| v == 0)
    }
}

fn sum(k: &FiniteAbelianGroup, vals: &[usize]) -> usize {
    vals.iter().fold(k.zero(), |acc, &v| k.add(acc, v))
}

// ---------------------------------------------------------------------------
// Zesting
// ---------------------------------------------------------------------------

/// Builds the G-crossed extension of `b` twisted by `(mu, omega)` after
/// checking that `mu` is a normalized 2-cocycle and that
/// `d(omega) = pushforward(mu)` holds; the failure of the latter is reported
/// with the pushforward as witness.
pub fn zest(
    b: &PointedBraidedCategory,
    grp: &FiniteGroup,
    mu: &Cochain,
    omega: &Cochain,
) -> Result<GCrossedPointedCategory, GcError> {
    if mu.degree() != 2
        || mu.group() != grp
        || mu.coeff() != b.objects()
        || !mu.is_normalized()
        || !cochain::is_cocycle(mu)
    {
        return Err(GcError::NotACocycle);
    }
    if omega.degree() != 3 || omega.group() != grp || omega.coeff() != b.scalars() {
        return Err(GcError::Cochain(CochainError::CoefficientMismatch));
    }
    if !omega.is_normalized() {
        return Err(GcError::IllTyped("omega must be normalized".into()));
    }
    let ac = crate::cochain::AbelianThreeCocycle::new(
        b.objects().clone(),
        b.scalars().clone(),
        Cochain::new(3, b.objects().to_group(), b.scalars().clone(), b.alpha_table().to_vec())?,
        b.beta_table().to_vec(),
    )?;
    if !cochain::check_obstruction(omega, mu, &ac)? {
        let push = cochain::pw_pushforward(mu, &ac)?;
        return if cochain::is_coboundary(&push).is_none() {
            Err(GcError::ObstructionNonvanishing { pushforward: push })
        } else {
            Err(GcError::IncompatibleOmega)
        };
    }
    Ok(zest_unchecked(b, grp, mu, omega))
}

/// Assembles the zesting tables without checking the obstruction equation.
/// Used to demonstrate that an incompatible `omega` really breaks the
/// pentagon, with the defect equal to the obstruction.
pub fn zest_unchecked(
    b: &PointedBraidedCategory,
    grp: &FiniteGroup,
    mu: &Cochain,
    omega: &Cochain,
) -> GCrossedPointedCategory {
    ZestBuilder { b, grp, mu, omega }.build()
}

struct ZestBuilder<'x> {
    b: &'x PointedBraidedCategory,
    grp: &'x FiniteGroup,
    mu: &'x Cochain,
    omega: &'x Cochain,
}

impl<'x> ZestBuilder<'x> {
    fn m(&self, g: usize, h: usize) -> usize {
        self.mu.value(&[g, h])
    }

    fn mneg(&self, g: usize, h: usize) -> usize {
        self.b.objects().neg(self.m(g, h))
    }

    fn w(&self, g: usize, h: usize, k: usize) -> usize {
        self.omega.value(&[g, h, k])
    }

    /// Rewrites the adjacent leaf pair `(m(xy,z), m(x,y))` at position `i`
    /// into `(m(x,yz), m(y,z))`, the tensorator coherence of the twisting
    /// data, with scalar `+omega(x,y,z)`.
    fn omega_fwd(&self, ev: &mut Evaluator, i: usize, x: usize, y: usize, z: usize) {
        let xy = self.grp.mul(x, y);
        let yz = self.grp.mul(y, z);
        debug_assert_eq!(ev.leaves()[i], self.m(xy, z));
        debug_assert_eq!(ev.leaves()[i + 1], self.m(x, y));
        ev.apply_grouped(i, i + 2, &[self.m(x, yz), self.m(y, z)], self.w(x, y, z));
    }

    /// Object of grade `g` with twist component `a` as a global index.
    fn obj(&self, g: usize, a: usize) -> usize {
        g * self.b.objects().order() + a
    }

    /// Canonical expansion word of a tensor `X (x) Y`: `(m(gx,gy) . WX) . WY`.
    fn w_ten(&self, gx: usize, wx: ObjectWord, gy: usize, wy: ObjectWord) -> ObjectWord {
        ObjectWord::node(
            ObjectWord::node(ObjectWord::Leaf(self.m(gx, gy)), wx),
            wy,
        )
    }

    /// Canonical expansion word of `F_g(X)` for `X` of grade `h`:
    /// `((-m(ghg^{-1},g) . m(g,h)) . WX)`.
    fn w_act(&self, g: usize, h: usize, wx: ObjectWord) -> ObjectWord {
        let hp = conjugate(self.grp, g, h);
        ObjectWord::node(
            ObjectWord::node(
                ObjectWord::Leaf(self.mneg(hp, g)),
                ObjectWord::Leaf(self.m(g, h)),
            ),
            wx,
        )
    }

    fn part(&self, x: usize) -> (usize, usize) {
        let na = self.b.objects().order();
        (x / na, x % na)
    }

    /// Underlying component of `F_g` on an object of grade `h`:
    /// `mu(g,h) + b - mu(ghg^{-1}, g)`.
    fn f_component(&self, g: usize, h: usize, bb: usize) -> usize {
        let a = self.b.objects();
        let hp = conjugate(self.grp, g, h);
        a.sub(a.add(self.m(g, h), bb), self.m(hp, g))
    }

    fn build(&self) -> GCrossedPointedCategory {
        let na = self.b.objects().order();
        let ng = self.grp.order();
        let n = ng * na;
        let a_grp = self.b.objects();

        let mut tensor = vec![0usize; n * n];
        for x in 0..n {
            let (g, xa) = self.part(x);
            for y in 0..n {
                let (h, ya) = self.part(y);
                tensor[x * n + y] =
                    self.obj(self.grp.mul(g, h), a_grp.add(self.m(g, h), a_grp.add(xa, ya)));
            }
        }
        let mut act = vec![0usize; ng * n];
        for g in 0..ng {
            for x in 0..n {
                let (h, bb) = self.part(x);
                act[g * n + x] =
                    self.obj(conjugate(self.grp, g, h), self.f_component(g, h, bb));
            }
        }

        let mut assoc = vec![0usize; n * n * n];
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    assoc[(x * n + y) * n + z] = self.assoc_scalar(x, y, z);
                }
            }
        }
        let mut lam = vec![0usize; n];
        let mut rho = vec![0usize; n];
        for x in 0..n {
            lam[x] = self.lam_scalar(x);
            rho[x] = self.rho_scalar(x);
        }
        let mut unit_iso = vec![0usize; ng];
        for (g, slot) in unit_iso.iter_mut().enumerate() {
            *slot = self.unit_iso_scalar(g);
        }
        let mut unit_transf = vec![0usize; n];
        for (x, slot) in unit_transf.iter_mut().enumerate() {
            *slot = self.iota_scalar(x);
        }
        let mut braid = vec![0usize; n * n];
        for x in 0..n {
            for y in 0..n {
                braid[x * n + y] = self.braid_scalar(x, y);
            }
        }

        let mut out = GCrossedPointedCategory {
            grp: self.grp.clone(),
            k: self.b.scalars().clone(),
            ob_count: vec![na; ng],
            unit: 0,
            tensor,
            assoc,
            lam,
            rho,
            act,
            unit_iso,
            tensorator: vec![0usize; ng * n * n],
            act_comp: vec![0usize; ng * ng * n],
            unit_transf,
            braid,
        };
        // The tensorator and compositor are the unique fillers of the two
        // crossed heptagons once tensor, action, associator, and braiding
        // are fixed; solve each from a grade representative. Independence
        // of the representative is exactly what the verifiers check.
        let k_grp = self.b.scalars().clone();
        for g in 0..ng {
            let xr = self.obj(g, 0);
            for y in 0..n {
                let fy = out.f(g, y);
                for z in 0..n {
                    let fz = out.f(g, z);
                    let lhs = k_grp.sub(
                        k_grp.add(out.a(xr, y, z), out.a(fy, fz, xr)),
                        out.c(xr, out.ten(y, z)),
                    );
                    let rhs = k_grp.sub(
                        out.a(fy, xr, z),
                        k_grp.add(out.c(xr, y), out.c(xr, z)),
                    );
                    let psi = k_grp.sub(lhs, rhs);
                    out.tensorator[(g * n + y) * n + z] = psi;
                }
            }
        }
        for g in 0..ng {
            let xr = self.obj(g, 0);
            for h in 0..ng {
                let yr = self.obj(h, 0);
                for z in 0..n {
                    let fhz = out.f(h, z);
                    let ffz = out.f(g, fhz);
                    let lhs: usize = [
                        out.c(out.ten(xr, yr), z),
                        out.a(xr, yr, z),
                        out.a(ffz, xr, yr),
                    ]
                    .iter()
                    .fold(0, |acc, &v| k_grp.add(acc, v));
                    let rhs: usize = [
                        out.c(yr, z),
                        out.a(xr, fhz, yr),
                        out.c(xr, fhz),
                    ]
                    .iter()
                    .fold(0, |acc, &v| k_grp.add(acc, v));
                    // -c(xy,z) - a - muact - a' = -c(y,z) - a'' - c(x,Fz)
                    let muact = k_grp.sub(rhs, lhs);
                    out.act_comp[(g * ng + h) * n + z] = muact;
                }
            }
        }
        out
    }

    /// Associator `(x(x)y)(x)z -> x(x)(y(x)z)`: normalize from the nested
    /// source expansion, rewrite the twisting pair by omega, braid the twist
    /// `m(h,k)` past the component of `x`, and denormalize into the nested
    /// target expansion.
    fn assoc_scalar(&self, x: usize, y: usize, z: usize) -> usize {
        let (g, xa) = self.part(x);
        let (h, ya) = self.part(y);
        let (kk, za) = self.part(z);
        let gh = self.grp.mul(g, h);
        let hk = self.grp.mul(h, kk);
        let src = self.w_ten(
            gh,
            self.w_ten(g, ObjectWord::Leaf(xa), h, ObjectWord::Leaf(ya)),
            kk,
            ObjectWord::Leaf(za),
        );
        let tgt = self.w_ten(
            g,
            ObjectWord::Leaf(xa),
            hk,
            self.w_ten(h, ObjectWord::Leaf(ya), kk, ObjectWord::Leaf(za)),
        );
        let mut ev = Evaluator::new(
            self.b,
            vec![self.m(gh, kk), self.m(g, h), xa, ya, za],
        );
        ev.charge_from(&src);
        self.omega_fwd(&mut ev, 0, g, h, kk);
        ev.braid(1, true);
        ev.discharge_to(&tgt);
        ev.finish(&[self.m(g, hk), xa, self.m(h, kk), ya, za])
    }

    fn lam_scalar(&self, x: usize) -> usize {
        let (g, xa) = self.part(x);
        let src = self.w_ten(0, ObjectWord::Leaf(0), g, ObjectWord::Leaf(xa));
        let mut ev = Evaluator::new(self.b, vec![0, 0, xa]);
        ev.charge_from(&src);
        ev.drop_unit(0);
        ev.drop_unit(0);
        ev.finish(&[xa])
    }

    fn rho_scalar(&self, x: usize) -> usize {
        let (g, xa) = self.part(x);
        let src = self.w_ten(g, ObjectWord::Leaf(xa), 0, ObjectWord::Leaf(0));
        let mut ev = Evaluator::new(self.b, vec![0, xa, 0]);
        ev.charge_from(&src);
        ev.drop_unit(2);
        ev.drop_unit(0);
        ev.finish(&[xa])
    }

    fn unit_iso_scalar(&self, g: usize) -> usize {
        let tgt = self.w_act(g, 0, ObjectWord::Leaf(0));
        let mut ev = Evaluator::new(self.b, vec![0]);
        ev.insert_unit(0);
        ev.insert_unit(0);
        ev.discharge_to(&tgt);
        ev.finish(&[0, 0, 0])
    }

    fn iota_scalar(&self, x: usize) -> usize {
        let (h, xa) = self.part(x);
        let tgt = self.w_act(0, h, ObjectWord::Leaf(xa));
        let mut ev = Evaluator::new(self.b, vec![xa]);
        ev.insert_unit(0);
        ev.insert_unit(0);
        ev.discharge_to(&tgt);
        ev.finish(&[0, 0, xa])
    }

    /// Crossed braiding `x (x) y -> F_g(y) (x) x`: the interchanger of the
    /// two components followed by the dual-pair split of the action block.
    fn braid_scalar(&self, x: usize, y: usize) -> usize {
        let grp = self.grp;
        let (g, xa) = self.part(x);
        let (h, ya) = self.part(y);
        let hp = conjugate(grp, g, h);
        let src = self.w_ten(g, ObjectWord::Leaf(xa), h, ObjectWord::Leaf(ya));
        let tgt = self.w_ten(
            hp,
            self.w_act(g, h, ObjectWord::Leaf(ya)),
            g,
            ObjectWord::Leaf(xa),
        );
        let mut ev = Evaluator::new(self.b, vec![self.m(g, h), xa, ya]);
        ev.charge_from(&src);
        // Relative to the associator's twist braiding, the heptagons pin the
        // inverse interchanger here; the stored scalar is the opposite
        // orientation of that composite, so the trivial extension restricts
        // to the base braiding on the unit component.
        ev.braid(1, false);
        ev.pair_create_canonical(0, self.m(hp, g));
        ev.discharge_to(&tgt);
        let composite = ev.finish(&[
            self.m(hp, g),
            self.mneg(hp, g),
            self.m(g, h),
            ya,
            xa,
        ]);
        self.b.scalars().neg(composite)
    }
}

// ---------------------------------------------------------------------------
// Duality
// ---------------------------------------------------------------------------

/// Duality data for an object of a G-crossed pointed category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GDualData {
    pub object: usize,
    pub dual: usize,
    pub ev: usize,
    pub coev: usize,
}

/// Right dual: the unique tensor-inverse object, coevaluation fixed to zero,
/// evaluation solved from the first snake equation and the second verified.
pub fn right_dual(c: &GCrossedPointedCategory, x: usize) -> Result<GDualData, GcError> {
    let dual = c
        .objects()
        .find(|&y| c.ten(x, y) == c.unit && c.ten(y, x) == c.unit)
        .ok_or(GcError::NoDual(x))?;
    let k = &c.k;
    let coev = 0;
    // snake1: -lam(x) + coev + a(x, dual, x) + ev + rho(x) = 0
    let ev = k.neg(sum(
        k,
        &[k.neg(c.lam[x]), coev, c.a(x, dual, x), c.rho[x]],
    ));
    let d = GDualData { object: x, dual, ev, coev };
    if !check_snake_right(c, &d) {
        return Err(GcError::NoSolution(x));
    }
    Ok(d)
}

/// Both right-dual zig-zags.
pub fn check_snake_right(c: &GCrossedPointedCategory, d: &GDualData) -> bool {
    let k = &c.k;
    let s1 = sum(
        k,
        &[
            k.neg(c.lam[d.object]),
            d.coev,
            c.a(d.object, d.dual, d.object),
            d.ev,
            c.rho[d.object],
        ],
    );
    let s2 = sum(
        k,
        &[
            k.neg(c.rho[d.dual]),
            d.coev,
            k.neg(c.a(d.dual, d.object, d.dual)),
            d.ev,
            c.lam[d.dual],
        ],
    );
    s1 == k.zero() && s2 == k.zero()
}

/// Both left-dual zig-zags (for data where `dual` is a left dual of
/// `object`).
pub fn check_snake_left(c: &GCrossedPointedCategory, d: &GDualData) -> bool {
    let k = &c.k;
    let s1 = sum(
        k,
        &[
            k.neg(c.rho[d.object]),
            d.coev,
            k.neg(c.a(d.object, d.dual, d.object)),
            d.ev,
            c.lam[d.object],
        ],
    );
    let s2 = sum(
        k,
        &[
            k.neg(c.lam[d.dual]),
            d.coev,
            c.a(d.dual, d.object, d.dual),
            d.ev,
            c.rho[d.dual],
        ],
    );
    s1 == k.zero() && s2 == k.zero()
}

/// Builds a left dual from a right dual by the crossed-braiding composites:
/// evaluation `ev_x . (mu^{g,g^-1} , iota^{-1}) . c_{x, F_{g^-1}(dual)}` and
/// coevaluation `c^{-1} . psi^{-1} . F_{g^-1}(coev_x) . i_{g^-1}`.
pub fn left_dual_from_right(
    c: &GCrossedPointedCategory,
    x: usize,
    d: &GDualData,
) -> Result<GDualData, GcError> {
    if d.object != x || !check_snake_right(c, d) {
        return Err(GcError::NoSolution(x));
    }
    let k = &c.k;
    let g = c.grade_of(x);
    let ginv = c.grp.inv(g);
    let left = c.f(ginv, d.dual);
    let ev = sum(
        k,
        &[
            c.c(x, left),
            c.muact(g, ginv, d.dual),
            k.neg(c.iota(d.dual)),
            d.ev,
        ],
    );
    let coev = sum(
        k,
        &[
            c.i_g(ginv),
            d.coev,
            k.neg(c.psi(ginv, x, d.dual)),
            k.neg(c.c(left, x)),
        ],
    );
    let ld = GDualData { object: x, dual: left, ev, coev };
    if !check_snake_left(c, &ld) {
        return Err(GcError::NoSolution(x));
    }
    Ok(ld)
}

// ---------------------------------------------------------------------------
// Functors and transformations
// ---------------------------------------------------------------------------

/// A G-crossed braided functor between two categories over the same group
/// and scalar group: grade-preserving object maps with unitor, tensorator,
/// and actionator scalars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GCrossedFunctor {
    pub source: GCrossedPointedCategory,
    pub target: GCrossedPointedCategory,
    /// `obj_map[x]`: image of the source object `x`.
    pub obj_map: Vec<usize>,
    /// Unitor scalar `A^1 : 1' -> A(1)`.
    pub unitor: usize,
    /// Tensorator `A^2(x,y) : A(x)(x)A(y) -> A(x(x)y)`, `[x][y]`.
    pub tensorator: Vec<usize>,
    /// Actionator `a_g(x) : F'_g(A(x)) -> A(F_g(x))`, `[g][x]`.
    pub actionator: Vec<usize>,
}

impl GCrossedFunctor {
    pub fn identity(c: &GCrossedPointedCategory) -> Self {
        let n = c.n_objects();
        GCrossedFunctor {
            source: c.clone(),
            target: c.clone(),
            obj_map: (0..n).collect(),
            unitor: 0,
            tensorator: vec![0; n * n],
            actionator: vec![0; c.grp.order() * n],
        }
    }

    pub fn a2(&self, x: usize, y: usize) -> usize {
        self.tensorator[x * self.source.n_objects() + y]
    }

    pub fn actc(&self, g: usize, x: usize) -> usize {
        self.actionator[g * self.source.n_objects() + x]
    }

    pub fn validate_typing(&self) -> Result<(), GcError> {
        let s = &self.source;
        let t = &self.target;
        if s.grp != t.grp {
            return Err(GcError::GradingMismatch("different groups".into()));
        }
        if s.k != t.k {
            return Err(GcError::GradingMismatch("different scalar groups".into()));
        }
        if self.obj_map.len() != s.n_objects() {
            return Err(GcError::GradingMismatch("object map has wrong length".into()));
        }
        for x in s.objects() {
            let ax = self.obj_map[x];
            if ax >= t.n_objects() || t.grade_of(ax) != s.grade_of(x) {
                return Err(GcError::GradingMismatch(format!(
                    "object map does not preserve grading at {x}"
                )));
            }
        }
        if self.obj_map[s.unit] != t.unit {
            return Err(GcError::GradingMismatch("unit object is not preserved".into()));
        }
        if self.tensorator.len() != s.n_objects() * s.n_objects()
            || self.actionator.len() != s.grp.order() * s.n_objects()
        {
            return Err(GcError::GradingMismatch("scalar table has wrong length".into()));
        }
        // Object maps must strictly intertwine tensor and action for the
        // scalar data to be well-typed in the pointed setting.
        for x in s.objects() {
            for y in s.objects() {
                if self.obj_map[s.ten(x, y)] != t.ten(self.obj_map[x], self.obj_map[y]) {
                    return Err(GcError::GradingMismatch(format!(
                        "tensor is not preserved at ({x},{y})"
                    )));
                }
            }
            for g in 0..s.grp.order() {
                if self.obj_map[s.f(g, x)] != t.f(g, self.obj_map[x]) {
                    return Err(GcError::GradingMismatch(format!(
                        "action is not preserved at ({g},{x})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Monoidal, unit, actionator, and both crossed functor axioms over all
/// tuples.
pub fn verify_functor(f: &GCrossedFunctor, opts: ReportOptions) -> Report {
    let mut report = Report::new(opts);
    let s = &f.source;
    let t = &f.target;
    let k = &s.k;
    let a = |x: usize| f.obj_map[x];
    // monoidal associativity hexagon
    for x in s.objects() {
        for y in s.objects() {
            for z in s.objects() {
                let lhs = sum(
                    k,
                    &[f.a2(x, y), f.a2(s.ten(x, y), z), s.a(x, y, z)],
                );
                let rhs = sum(
                    k,
                    &[t.a(a(x), a(y), a(z)), f.a2(y, z), f.a2(x, s.ten(y, z))],
                );
                report.record(AxiomLabel::FunctorAssoc, &[x, y, z], k.sub(lhs, rhs), 0);
            }
        }
    }
    // unit squares
    for x in s.objects() {
        let dl = k.sub(
            sum(k, &[f.unitor, f.a2(s.unit, x), s.lam[x]]),
            t.lam[a(x)],
        );
        report.record(AxiomLabel::FunctorUnit, &[x, 0], dl, 0);
        let dr = k.sub(
            sum(k, &[f.unitor, f.a2(x, s.unit), s.rho[x]]),
            t.rho[a(x)],
        );
        report.record(AxiomLabel::FunctorUnit, &[x, 1], dr, 0);
    }
    // (gamma1)
    for g in 0..s.grp.order() {
        for h in 0..s.grp.order() {
            let gh = s.grp.mul(g, h);
            for x in s.objects() {
                let lhs = k.add(t.muact(g, h, a(x)), f.actc(gh, x));
                let rhs = sum(
                    k,
                    &[f.actc(h, x), f.actc(g, s.f(h, x)), s.muact(g, h, x)],
                );
                report.record(AxiomLabel::Gamma1, &[g, h, x], k.sub(lhs, rhs), 0);
            }
        }
    }
    // (gamma2)
    for x in s.objects() {
        let g = s.grade_of(x);
        for y in s.objects() {
            let lhs = k.add(f.a2(x, y), s.c(x, y));
            let rhs = sum(
                k,
                &[t.c(a(x), a(y)), f.actc(g, y), f.a2(s.f(g, y), x)],
            );
            report.record(AxiomLabel::Gamma2, &[x, y], k.sub(lhs, rhs), 0);
        }
    }
    // actionator monoidality
    for g in 0..s.grp.order() {
        for x in s.objects() {
            for y in s.objects() {
                let lhs = sum(
                    k,
                    &[
                        t.psi(g, a(x), a(y)),
                        f.a2(x, y),
                        f.actc(g, s.ten(x, y)),
                    ],
                );
                let rhs = sum(
                    k,
                    &[
                        f.actc(g, x),
                        f.actc(g, y),
                        f.a2(s.f(g, x), s.f(g, y)),
                        s.psi(g, x, y),
                    ],
                );
                report.record(
                    AxiomLabel::ActionatorMonoidal,
                    &[g, x, y],
                    k.sub(lhs, rhs),
                    0,
                );
            }
        }
        // actionator unit compatibility
        let d = k.sub(k.add(t.i_g(g), f.actc(g, s.unit)), s.i_g(g));
        report.record(AxiomLabel::ActionatorUnit, &[g], d, 0);
    }
    report
}

/// A G-crossed natural transformation between parallel functors: one scalar
/// component per source object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GCrossedTransformation {
    pub from: GCrossedFunctor,
    pub to: GCrossedFunctor,
    pub component: Vec<usize>,
}

pub fn verify_transformation(t: &GCrossedTransformation, opts: ReportOptions) -> Report {
    let mut report = Report::new(opts);
    let s = &t.from.source;
    let k = &s.k;
    // parallel functors with matching object maps (pointed setting: the
    // component is a scalar, so images must agree objectwise)
    if t.from.obj_map != t.to.obj_map || t.component.len() != s.n_objects() {
        report.push(crate::report::Failure {
            axiom: AxiomLabel::TransfMonoidal,
            witness: vec![],
            defect: None,
        });
        return report;
    }
    let h = |x: usize| t.component[x];
    // monoidality square
    for x in s.objects() {
        for y in s.objects() {
            let lhs = k.add(t.from.a2(x, y), h(s.ten(x, y)));
            let rhs = sum(k, &[h(x), h(y), t.to.a2(x, y)]);
            report.record(AxiomLabel::TransfMonoidal, &[x, y], k.sub(lhs, rhs), 0);
        }
    }
    // unit triangle
    let du = k.sub(k.add(t.from.unitor, h(s.unit)), t.to.unitor);
    report.record(AxiomLabel::TransfUnit, &[], du, 0);
    // action square
    for g in 0..s.grp.order() {
        for x in s.objects() {
            let lhs = k.add(t.from.actc(g, x), h(s.f(g, x)));
            let rhs = k.add(h(x), t.to.actc(g, x));
            report.record(AxiomLabel::TransfAction, &[g, x], k.sub(lhs, rhs), 0);
        }
    }
    report
}

/// Composite `outer . inner` of G-crossed functors; scalars combine
/// additively because outer functors preserve morphism scalars.
pub fn compose_functors(
    outer: &GCrossedFunctor,
    inner: &GCrossedFunctor,
) -> Result<GCrossedFunctor, GcError> {
    if inner.target != outer.source {
        return Err(GcError::GradingMismatch(
            "functors are not composable".into(),
        ));
    }
    let s = &inner.source;
    let k = &s.k;
    let n = s.n_objects();
    let obj_map: Vec<usize> = (0..n).map(|x| outer.obj_map[inner.obj_map[x]]).collect();
    let mut tensorator = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            tensorator[x * n + y] = k.add(
                outer.a2(inner.obj_map[x], inner.obj_map[y]),
                inner.a2(x, y),
            );
        }
    }
    let mut actionator = vec![0; s.grp.order() * n];
    for g in 0..s.grp.order() {
        for x in 0..n {
            actionator[g * n + x] =
                k.add(outer.actc(g, inner.obj_map[x]), inner.actc(g, x));
        }
    }
    Ok(GCrossedFunctor {
        source: inner.source.clone(),
        target: outer.target.clone(),
        obj_map,
        unitor: k.add(outer.unitor, inner.unitor),
        tensorator,
        actionator,
    })
}

// ---------------------------------------------------------------------------
// Decategorification and the braided core
// ---------------------------------------------------------------------------

/// Forgets all scalars: the graded object monoid with its conjugation
/// action.
pub fn decategorify(c: &GCrossedPointedCategory) -> GCrossedMonoid {
    GCrossedMonoid {
        grp: c.grp.clone(),
        carrier_count: c.ob_count.clone(),
        mult: c.tensor.clone(),
        unit: c.unit,
        action: c.act.clone(),
    }
}

/// For a trivially graded category whose objects form an abelian group under
/// tensor, returns the underlying braided pointed category.
pub fn extract_braided(
    c: &GCrossedPointedCategory,
) -> Result<PointedBraidedCategory, GcError> {
    if c.grp.order() != 1 {
        return Err(GcError::NotAGroupOfObjects("the group must be trivial".into()));
    }
    if c.unit != 0 {
        return Err(GcError::NotAGroupOfObjects("unit must be object 0".into()));
    }
    let n = c.n_objects();
    let rows: Vec<Vec<usize>> =
        (0..n).map(|x| (0..n).map(|y| c.ten(x, y)).collect()).collect();
    let table = FiniteGroup::from_table(&rows)
        .map_err(|e| GcError::NotAGroupOfObjects(e.to_string()))?;
    if !table.is_abelian() {
        return Err(GcError::NotAGroupOfObjects("tensor is not commutative".into()));
    }
    let (ab, relabel) = recognize_abelian(&table)
        .ok_or_else(|| GcError::NotAGroupOfObjects("no abelian presentation found".into()))?;
    // relabel[x] is the abelian-group index of table element x
    let mut inverse_label = vec![0usize; n];
    for x in 0..n {
        inverse_label[relabel[x]] = x;
    }
    let mut alpha = vec![0usize; n * n * n];
    let mut beta = vec![0usize; n * n];
    for x in 0..n {
        for y in 0..n {
            beta[x * n + y] = c.c(inverse_label[x], inverse_label[y]);
            for z in 0..n {
                alpha[(x * n + y) * n + z] =
                    c.a(inverse_label[x], inverse_label[y], inverse_label[z]);
            }
        }
    }
    PointedBraidedCategory::new_unvalidated(ab, c.k.clone(), alpha, beta)
        .map_err(|e| GcError::NotAGroupOfObjects(e.to_string()))
}

/// Finds cyclic factors and a relabeling identifying an abelian table group
/// with the lexicographically indexed product of cyclic groups. The identity
/// relabeling is preferred so round trips through zesting are literal.
fn recognize_abelian(g: &FiniteGroup) -> Option<(FiniteAbelianGroup, Vec<usize>)> {
    let n = g.order();
    if n == 1 {
        return Some((FiniteAbelianGroup::trivial(), vec![0]));
    }
    let candidates = factor_lists(n);
    // Pass 1: identity relabeling.
    for factors in &candidates {
        let ab = FiniteAbelianGroup::new(factors.clone());
        if ab.to_group() == *g {
            return Some((ab, (0..n).collect()));
        }
    }
    // Pass 2: search for an isomorphism by choosing generator images.
    for factors in &candidates {
        let ab = FiniteAbelianGroup::new(factors.clone());
        if let Some(relabel) = find_isomorphism(g, &ab) {
            return Some((ab, relabel));
        }
    }
    None
}

/// All ordered lists of factors >= 2 with the given product.
fn factor_lists(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, min: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 1 {
            if !prefix.is_empty() {
                out.push(prefix.clone());
            }
            return;
        }
        for d in min..=n {
            if n % d == 0 {
                prefix.push(d);
                go(n / d, 2, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, 2, &mut Vec::new(), &mut out);
    out
}

/// Brute-force isomorphism search from `g` onto the product group: choose an
/// image for each standard generator, extend multiplicatively, check
/// bijectivity.
fn find_isomorphism(g: &FiniteGroup, ab: &FiniteAbelianGroup) -> Option<Vec<usize>> {
    let factors = ab.factors();
    let r = factors.len();
    // standard generators of ab: e_i
    let gens: Vec<usize> = (0..r)
        .map(|i| {
            let mut t = vec![0; r];
            t[i] = 1;
            ab.encode(&t)
        })
        .collect();
    // try assigning each generator a preimage in g
    let mut choice = vec![0usize; r];
    fn rec(
        g: &FiniteGroup,
        ab: &FiniteAbelianGroup,
        gens: &[usize],
        choice: &mut Vec<usize>,
        idx: usize,
    ) -> Option<Vec<usize>> {
        if idx == gens.len() {
            // build map ab -> g: tuple (t_0..t_r) -> prod choice_i^{t_i}
            let n = g.order();
            let mut to_g = vec![0usize; n];
            for a in 0..n {
                let t = ab.decode(a);
                let mut acc = 0usize;
                for (i, &ti) in t.iter().enumerate() {
                    for _ in 0..ti {
                        acc = g.mul(acc, choice[i]);
                    }
                }
                to_g[a] = acc;
            }
            let mut seen = vec![false; n];
            for &v in &to_g {
                if seen[v] {
                    return None;
                }
                seen[v] = true;
            }
            let mut relabel = vec![0usize; n];
            for (a, &v) in to_g.iter().enumerate() {
                relabel[v] = a;
            }
            return Some(relabel);
        }
        for cand in 0..g.order() {
            // the image of e_idx must have order dividing factors[idx]
            let mut acc = 0usize;
            let mut ord_ok = true;
            for _ in 0..ab.factors()[idx] {
                acc = g.mul(acc, cand);
            }
            if acc != 0 {
                ord_ok = false;
            }
            if !ord_ok {
                continue;
            }
            choice[idx] = cand;
            if let Some(res) = rec(g, ab, gens, choice, idx + 1) {
                return Some(res);
            }
        }
        None
    }
    rec(g, ab, &gens, &mut choice, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::make_cyclic;

    #[test]
    fn trivial_category_verifies_and_is_strict() {
        let c = GCrossedPointedCategory::trivial(
            make_cyclic(3),
            FiniteAbelianGroup::cyclic(4),
        );
        c.validate_typing().unwrap();
        assert!(c.verify_all(ReportOptions::All).passed());
        assert!(c.is_strict());
    }

    #[test]
    fn trivial_zest_is_the_trivial_extension() {
        let b = PointedBraidedCategory::trivial(
            FiniteAbelianGroup::trivial(),
            FiniteAbelianGroup::cyclic(4),
        );
        let grp = make_cyclic(2);
        let mu = Cochain::zero(2, grp.clone(), b.objects().clone());
        let omega = Cochain::zero(3, grp.clone(), b.scalars().clone());
        let c = zest(&b, &grp, &mu, &omega).unwrap();
        c.validate_typing().unwrap();
        assert!(c.verify_all(ReportOptions::All).passed());
        assert!(c.is_strict());
        assert!(c.assoc.iter().all(|&v| v == 0));
        assert!(c.braid.iter().all(|&v| v == 0));
    }

    #[test]
    fn omega_twisted_zest_has_omega_as_associator() {
        let b = PointedBraidedCategory::trivial(
            FiniteAbelianGroup::trivial(),
            FiniteAbelianGroup::cyclic(4),
        );
        let grp = make_cyclic(2);
        let mu = Cochain::zero(2, grp.clone(), b.objects().clone());
        let mut omega = Cochain::zero(3, grp.clone(), b.scalars().clone());
        omega.set(&[1, 1, 1], 2);
        let c = zest(&b, &grp, &mu, &omega).unwrap();
        c.validate_typing().unwrap();
        let report = c.verify_all(ReportOptions::All);
        assert!(report.passed(), "{report}");
        assert!(!c.is_strict());
        for g in 0..2 {
            for h in 0..2 {
                for kk in 0..2 {
                    assert_eq!(c.a(g, h, kk), omega.value(&[g, h, kk]));
                }
            }
        }
    }

    #[test]
    fn semion_zest_with_twisting_cocycle_is_obstructed() {
        let ac = crate::cochain::AbelianThreeCocycle::semion();
        let b = ac.to_braided().unwrap();
        let grp = make_cyclic(2);
        let mut mu = Cochain::zero(2, grp.clone(), b.objects().clone());
        mu.set(&[1, 1], 1);
        let omega = Cochain::zero(3, grp.clone(), b.scalars().clone());
        match zest(&b, &grp, &mu, &omega) {
            Err(GcError::ObstructionNonvanishing { pushforward }) => {
                assert_eq!(pushforward.value(&[1, 1, 1, 1]), 1);
            }
            other => panic!("expected obstruction, got {other:?}"),
        }
    }

    #[test]
    fn factor_lists_cover_known_orders() {
        assert!(factor_lists(6).contains(&vec![6]));
        assert!(factor_lists(6).contains(&vec![2, 3]));
        assert!(factor_lists(4).contains(&vec![2, 2]));
    }
}
