//! Pointed Gray-monoids: semi-strict monoidal 2-categories whose 0-cells
//! form the group `G`, whose hom categories are finite sets of 1-cells with
//! scalar 2-cells, and whose only weak datum is the interchanger.
//!
//! The two constructions `from_gcrossed` / `to_gcrossed` realize the
//! equivalence with strict pointed G-crossed braided categories; the round
//! trip is the literal identity on tables thanks to the shared canonical
//! indexing.

use crate::fingroup::{FiniteAbelianGroup, FiniteGroup};
use crate::gcrossed::{verify_functor, GCrossedFunctor, GCrossedPointedCategory};
use crate::report::{AxiomLabel, Failure, Report, ReportOptions};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GrayError {
    #[error("the category is not strict")]
    NotStrict,
    #[error("category data is ill-typed: {0}")]
    IllTyped(String),
    #[error("Gray-monoid axioms fail:\n{0}")]
    GrayAxiomFailure(String),
    #[error("round trip mismatch: {0}")]
    RoundTripMismatch(String),
}

/// A pointed Gray-monoid: 0-cells are the group elements, `hom(g -> h)` is a
/// finite set of 1-cells, 2-cells between equal 1-cells are scalars in `K`,
/// and the interchanger is a scalar per 1-cell pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedGrayMonoid {
    pub grp: FiniteGroup,
    pub k: FiniteAbelianGroup,
    /// `hom_count[g * ng + h]`: number of 1-cells `g -> h`.
    pub hom_count: Vec<usize>,
    /// Local index of `id_g` inside `hom(g -> g)`.
    pub id_cell: Vec<usize>,
    /// Vertical composition: for each `(g, h, k)` a block mapping
    /// `(b in hom(h,k), a in hom(g,h))` to a local index in `hom(g,k)`;
    /// entry `comp[block(g,h,k) + b * hom_count(g,h) + a]`.
    pub comp: Vec<usize>,
    /// Left tensor `L_a: hom(g,h) -> hom(ag,ah)`;
    /// entry `l_act[(a*ng+g)*ng+h block + x]`.
    pub l_act: Vec<usize>,
    /// Right tensor `R_a: hom(g,h) -> hom(ga,ha)`.
    pub r_act: Vec<usize>,
    /// Interchanger scalar over global 1-cell indices.
    pub phi: Vec<usize>,
}

impl PointedGrayMonoid {
    pub fn ng(&self) -> usize {
        self.grp.order()
    }

    pub fn hom(&self, g: usize, h: usize) -> usize {
        self.hom_count[g * self.ng() + h]
    }

    /// Global index base of `hom(g -> h)` in row-major (g,h) order.
    pub fn cell_offset(&self, g: usize, h: usize) -> usize {
        self.hom_count[..g * self.ng() + h].iter().sum()
    }

    pub fn n_cells(&self) -> usize {
        self.hom_count.iter().sum()
    }

    pub fn cell_source_target(&self, global: usize) -> (usize, usize, usize) {
        let mut acc = 0;
        for g in 0..self.ng() {
            for h in 0..self.ng() {
                let c = self.hom(g, h);
                if global < acc + c {
                    return (g, h, global - acc);
                }
                acc += c;
            }
        }
        panic!("cell index {global} out of range");
    }

    fn comp_block(&self, g: usize, h: usize, k: usize) -> usize {
        let ng = self.ng();
        let mut acc = 0;
        for gg in 0..ng {
            for hh in 0..ng {
                for kk in 0..ng {
                    if (gg, hh, kk) == (g, h, k) {
                        return acc;
                    }
                    acc += self.hom(hh, kk) * self.hom(gg, hh);
                }
            }
        }
        unreachable!()
    }

    pub fn compose(&self, g: usize, h: usize, k: usize, b: usize, a: usize) -> usize {
        let base = self.comp_block(g, h, k);
        self.comp[base + b * self.hom(g, h) + a]
    }

    fn act_block(&self, a: usize, g: usize, h: usize) -> usize {
        let ng = self.ng();
        let mut acc = 0;
        for aa in 0..ng {
            for gg in 0..ng {
                for hh in 0..ng {
                    if (aa, gg, hh) == (a, g, h) {
                        return acc;
                    }
                    acc += self.hom(gg, hh);
                }
            }
        }
        unreachable!()
    }

    pub fn l(&self, a: usize, g: usize, h: usize, x: usize) -> usize {
        self.l_act[self.act_block(a, g, h) + x]
    }

    pub fn r(&self, a: usize, g: usize, h: usize, x: usize) -> usize {
        self.r_act[self.act_block(a, g, h) + x]
    }

    pub fn phi_at(&self, x_global: usize, y_global: usize) -> usize {
        self.phi[x_global * self.n_cells() + y_global]
    }

    pub fn global(&self, g: usize, h: usize, local: usize) -> usize {
        self.cell_offset(g, h) + local
    }

    fn check_sizes(&self) -> Result<(), GrayError> {
        let ng = self.ng();
        if self.hom_count.len() != ng * ng || self.id_cell.len() != ng {
            return Err(GrayError::IllTyped("hom table sizes".into()));
        }
        let mut comp_len = 0;
        for g in 0..ng {
            for h in 0..ng {
                for k in 0..ng {
                    comp_len += self.hom(h, k) * self.hom(g, h);
                }
            }
        }
        if self.comp.len() != comp_len {
            return Err(GrayError::IllTyped("composition table size".into()));
        }
        let act_len: usize = (0..ng)
            .map(|_| self.hom_count.iter().sum::<usize>())
            .sum();
        if self.l_act.len() != act_len || self.r_act.len() != act_len {
            return Err(GrayError::IllTyped("tensor action table size".into()));
        }
        let n = self.n_cells();
        if self.phi.len() != n * n {
            return Err(GrayError::IllTyped("interchanger table size".into()));
        }
        if self.phi.iter().any(|&v| v >= self.k.order()) {
            return Err(GrayError::IllTyped("interchanger scalar out of range".into()));
        }
        for g in 0..ng {
            if self.id_cell[g] >= self.hom(g, g) {
                return Err(GrayError::IllTyped(format!("id cell {g} out of range")));
            }
        }
        Ok(())
    }

    /// Evaluates the Gray-monoid conditions (C0)-(C6) over all applicable
    /// tuples, with the tensor of 1-cells expanded by nudging. (C5) is
    /// naturality of the interchanger against 2-cells; with scalar 2-cells
    /// in an abelian group it holds identically and contributes no checks.
    pub fn verify_gray(&self, opts: ReportOptions) -> Report {
        let mut report = Report::new(opts);
        if let Err(e) = self.check_sizes() {
            report.push(Failure {
                axiom: AxiomLabel::GrayTyping,
                witness: vec![],
                defect: None,
            });
            let _ = e;
            return report;
        }
        let ng = self.ng();
        let k_grp = &self.k;
        // (C0) strict 2-category: associative composition with identities.
        for g in 0..ng {
            for h in 0..ng {
                for a in 0..self.hom(g, h) {
                    let ia = self.compose(g, g, h, a, self.id_cell[g]);
                    let ai = self.compose(g, h, h, self.id_cell[h], a);
                    if ia != a || ai != a {
                        report.push(Failure {
                            axiom: AxiomLabel::C0Composition,
                            witness: vec![g, h, a],
                            defect: None,
                        });
                    }
                }
                for k in 0..ng {
                    for l in 0..ng {
                        for a in 0..self.hom(g, h) {
                            for b in 0..self.hom(h, k) {
                                for c in 0..self.hom(k, l) {
                                    let ba = self.compose(g, h, k, b, a);
                                    let cb = self.compose(h, k, l, c, b);
                                    if self.compose(g, k, l, c, ba)
                                        != self.compose(g, h, l, cb, a)
                                    {
                                        report.push(Failure {
                                            axiom: AxiomLabel::C0Composition,
                                            witness: vec![g, h, k, l, a, b, c],
                                            defect: None,
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        // (C2) tensor 2-functors: unit, composition laws, functoriality.
        for g in 0..ng {
            for h in 0..ng {
                for x in 0..self.hom(g, h) {
                    if self.l(0, g, h, x) != x || self.r(0, g, h, x) != x {
                        report.push(Failure {
                            axiom: AxiomLabel::C2Tensor,
                            witness: vec![0, g, h, x],
                            defect: None,
                        });
                    }
                    for a in 0..ng {
                        for b in 0..ng {
                            let ab = self.grp.mul(a, b);
                            // L_a L_b = L_{ab}
                            let lb = self.l(b, g, h, x);
                            let lalb = self.l(a, self.grp.mul(b, g), self.grp.mul(b, h), lb);
                            if lalb != self.l(ab, g, h, x) {
                                report.push(Failure {
                                    axiom: AxiomLabel::C2Tensor,
                                    witness: vec![a, b, g, h, x, 0],
                                    defect: None,
                                });
                            }
                            // R_b R_a = R_{ab}
                            let ra = self.r(a, g, h, x);
                            let rbra = self.r(b, self.grp.mul(g, a), self.grp.mul(h, a), ra);
                            if rbra != self.r(ab, g, h, x) {
                                report.push(Failure {
                                    axiom: AxiomLabel::C2Tensor,
                                    witness: vec![a, b, g, h, x, 1],
                                    defect: None,
                                });
                            }
                            // L_a R_b = R_b L_a
                            let lr = self.l(a, self.grp.mul(g, b), self.grp.mul(h, b), self.r(b, g, h, x));
                            let rl = self.r(b, self.grp.mul(a, g), self.grp.mul(a, h), self.l(a, g, h, x));
                            if lr != rl {
                                report.push(Failure {
                                    axiom: AxiomLabel::C2Tensor,
                                    witness: vec![a, b, g, h, x, 2],
                                    defect: None,
                                });
                            }
                        }
                    }
                }
                // functoriality of L_a and R_a on composition and identities
                for a in 0..ng {
                    if self.l(a, g, g, self.id_cell[g]) != self.id_cell[self.grp.mul(a, g)]
                        && g == h
                    {
                        report.push(Failure {
                            axiom: AxiomLabel::C2Tensor,
                            witness: vec![a, g, 3],
                            defect: None,
                        });
                    }
                    if self.r(a, g, g, self.id_cell[g]) != self.id_cell[self.grp.mul(g, a)]
                        && g == h
                    {
                        report.push(Failure {
                            axiom: AxiomLabel::C2Tensor,
                            witness: vec![a, g, 4],
                            defect: None,
                        });
                    }
                    for k in 0..ng {
                        for x in 0..self.hom(g, h) {
                            for y in 0..self.hom(h, k) {
                                let yx = self.compose(g, h, k, y, x);
                                let l_yx = self.l(a, g, k, yx);
                                let ly = self.l(a, h, k, y);
                                let lx = self.l(a, g, h, x);
                                let comp_l = self.compose(
                                    self.grp.mul(a, g),
                                    self.grp.mul(a, h),
                                    self.grp.mul(a, k),
                                    ly,
                                    lx,
                                );
                                if l_yx != comp_l {
                                    report.push(Failure {
                                        axiom: AxiomLabel::C2Tensor,
                                        witness: vec![a, g, h, k, x, y, 5],
                                        defect: None,
                                    });
                                }
                                let r_yx = self.r(a, g, k, yx);
                                let ry = self.r(a, h, k, y);
                                let rx = self.r(a, g, h, x);
                                let comp_r = self.compose(
                                    self.grp.mul(g, a),
                                    self.grp.mul(h, a),
                                    self.grp.mul(k, a),
                                    ry,
                                    rx,
                                );
                                if r_yx != comp_r {
                                    report.push(Failure {
                                        axiom: AxiomLabel::C2Tensor,
                                        witness: vec![a, g, h, k, x, y, 6],
                                        defect: None,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        // Interchanger endpoint typing: (x (x) id) . (id (x) y) must equal
        // (id (x) y) . (x (x) id) as 1-cells.
        let mut endpoints_ok = true;
        for g in 0..ng {
            for h in 0..ng {
                for kk in 0..ng {
                    for l in 0..ng {
                        for x in 0..self.hom(g, h) {
                            for y in 0..self.hom(kk, l) {
                                let rx = self.r(kk, g, h, x); // x (x) id_k : gk -> hk
                                let rxl = self.r(l, g, h, x); // x (x) id_l : gl -> hl
                                let lg = self.l(g, kk, l, y); // id_g (x) y : gk -> gl
                                let lh = self.l(h, kk, l, y); // id_h (x) y : hk -> hl
                                let gk = self.grp.mul(g, kk);
                                let gl = self.grp.mul(g, l);
                                let hk = self.grp.mul(h, kk);
                                let hl = self.grp.mul(h, l);
                                let nudge1 = self.compose(gk, gl, hl, rxl, lg);
                                let nudge2 = self.compose(gk, hk, hl, lh, rx);
                                if nudge1 != nudge2 {
                                    endpoints_ok = false;
                                    report.push(Failure {
                                        axiom: AxiomLabel::GrayTyping,
                                        witness: vec![g, h, kk, l, x, y],
                                        defect: None,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        if !endpoints_ok {
            return report;
        }
        // (C3) interchanger respects identity 1-cells.
        for (gx, hx, x) in self.all_cells() {
            let xg = self.global(gx, hx, x);
            for a in 0..ng {
                let ida = self.global(a, a, self.id_cell[a]);
                let d1 = self.phi_at(xg, ida);
                report.record(AxiomLabel::C3PhiIdentity, &[xg, a, 0], d1, 0);
                let d2 = self.phi_at(ida, xg);
                report.record(AxiomLabel::C3PhiIdentity, &[xg, a, 1], d2, 0);
            }
        }
        // (C4) interchanger respects composition in both arguments.
        for (g, h, x) in self.all_cells() {
            for hp in 0..ng {
                for xp in 0..self.hom(h, hp) {
                    let xx = self.compose(g, h, hp, xp, x);
                    for (kk, l, y) in self.all_cells() {
                        let yg = self.global(kk, l, y);
                        let lhs = self.phi_at(self.global(g, hp, xx), yg);
                        let rhs = k_grp.add(
                            self.phi_at(self.global(h, hp, xp), yg),
                            self.phi_at(self.global(g, h, x), yg),
                        );
                        report.record(
                            AxiomLabel::C4PhiComposition,
                            &[g, h, hp, x, xp, yg, 0],
                            k_grp.sub(lhs, rhs),
                            0,
                        );
                    }
                }
            }
            let xg = self.global(g, h, x);
            for (kk, l, y) in self.all_cells() {
                for lp in 0..ng {
                    for yp in 0..self.hom(l, lp) {
                        let yy = self.compose(kk, l, lp, yp, y);
                        let lhs = self.phi_at(xg, self.global(kk, lp, yy));
                        let rhs = k_grp.add(
                            self.phi_at(xg, self.global(kk, l, y)),
                            self.phi_at(xg, self.global(l, lp, yp)),
                        );
                        report.record(
                            AxiomLabel::C4PhiComposition,
                            &[kk, l, lp, y, yp, xg, 1],
                            k_grp.sub(lhs, rhs),
                            0,
                        );
                    }
                }
            }
        }
        // (C6) interchanger respects tensor.
        for (g, h, x) in self.all_cells() {
            let xg = self.global(g, h, x);
            for (kk, l, y) in self.all_cells() {
                let yg = self.global(kk, l, y);
                for a in 0..ng {
                    // phi(id_a (x) y, z) = phi(y, z) for all z: here z = x.
                    let lay = self.global(
                        self.grp.mul(a, kk),
                        self.grp.mul(a, l),
                        self.l(a, kk, l, y),
                    );
                    let d1 = k_grp.sub(self.phi_at(lay, xg), self.phi_at(yg, xg));
                    report.record(AxiomLabel::C6PhiTensor, &[a, yg, xg, 0], d1, 0);
                    // phi(x (x) id_a, z) = phi(x, id_a (x) z)
                    let rax = self.global(
                        self.grp.mul(g, a),
                        self.grp.mul(h, a),
                        self.r(a, g, h, x),
                    );
                    let laz = self.global(
                        self.grp.mul(a, kk),
                        self.grp.mul(a, l),
                        self.l(a, kk, l, y),
                    );
                    let d2 = k_grp.sub(self.phi_at(rax, yg), self.phi_at(xg, laz));
                    report.record(AxiomLabel::C6PhiTensor, &[a, xg, yg, 1], d2, 0);
                    // phi(x, y (x) id_a) = phi(x, y)
                    let ray = self.global(
                        self.grp.mul(kk, a),
                        self.grp.mul(l, a),
                        self.r(a, kk, l, y),
                    );
                    let d3 = k_grp.sub(self.phi_at(xg, ray), self.phi_at(xg, yg));
                    report.record(AxiomLabel::C6PhiTensor, &[a, xg, yg, 2], d3, 0);
                }
            }
        }
        report
    }

    fn all_cells(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for g in 0..self.ng() {
            for h in 0..self.ng() {
                for x in 0..self.hom(g, h) {
                    out.push((g, h, x));
                }
            }
        }
        out
    }
}

/// Builds the Gray-monoid of a strict pointed G-crossed braided category:
/// `hom(g -> h) = Ob_{h g^{-1}}`, composition is the tensor product, right
/// tensor is the identity on carriers, left tensor is the G-action, and the
/// interchanger is the crossed braiding.
pub fn from_gcrossed(c: &GCrossedPointedCategory) -> Result<PointedGrayMonoid, GrayError> {
    c.validate_typing().map_err(|e| GrayError::IllTyped(e.to_string()))?;
    if !c.is_strict() {
        return Err(GrayError::NotStrict);
    }
    let ng = c.grp.order();
    let grade = |g: usize, h: usize| c.grp.mul(h, c.grp.inv(g));
    let mut hom_count = vec![0usize; ng * ng];
    for g in 0..ng {
        for h in 0..ng {
            hom_count[g * ng + h] = c.ob_count[grade(g, h)];
        }
    }
    let id_cell = vec![c.unit; ng];
    let mut comp = Vec::new();
    for g in 0..ng {
        for h in 0..ng {
            for k in 0..ng {
                let d_bh = grade(h, k);
                let d_ag = grade(g, h);
                for b in 0..c.ob_count[d_bh] {
                    let bg = c.offset(d_bh) + b;
                    for a in 0..c.ob_count[d_ag] {
                        let ag = c.offset(d_ag) + a;
                        let t = c.ten(bg, ag);
                        comp.push(t - c.offset(grade(g, k)));
                    }
                }
            }
        }
    }
    let mut l_act = Vec::new();
    let mut r_act = Vec::new();
    for a in 0..ng {
        for g in 0..ng {
            for h in 0..ng {
                let d = grade(g, h);
                for x in 0..c.ob_count[d] {
                    let xg = c.offset(d) + x;
                    let fx = c.f(a, xg);
                    l_act.push(fx - c.offset(grade(c.grp.mul(a, g), c.grp.mul(a, h))));
                    r_act.push(x);
                }
            }
        }
    }
    let m_probe = PointedGrayMonoid {
        grp: c.grp.clone(),
        k: c.k.clone(),
        hom_count,
        id_cell,
        comp,
        l_act,
        r_act,
        phi: vec![],
    };
    let n = m_probe.n_cells();
    let mut phi = vec![0usize; n * n];
    for (g, h, x) in m_probe.all_cells() {
        let xg = m_probe.global(g, h, x);
        let x_obj = c.offset(grade(g, h)) + x;
        for (kk, l, y) in m_probe.all_cells() {
            let yg = m_probe.global(kk, l, y);
            let y_obj = c.offset(grade(kk, l)) + y;
            // phi_{x,y} = braiding of x with F_g(y), g the source of x.
            phi[xg * n + yg] = c.c(x_obj, c.f(g, y_obj));
        }
    }
    Ok(PointedGrayMonoid { phi, ..m_probe })
}

/// Rebuilds the strict G-crossed braided category of a Gray-monoid:
/// `Ob_g = hom(e -> g)`, tensor by nudging, action by the cup construction
/// `L_g R_{g^{-1}}`, braiding by the interchanger.
pub fn to_gcrossed(m: &PointedGrayMonoid) -> Result<GCrossedPointedCategory, GrayError> {
    let report = m.verify_gray(ReportOptions::FirstHundred);
    if !report.passed() {
        return Err(GrayError::GrayAxiomFailure(report.to_string()));
    }
    Ok(to_gcrossed_unchecked(m))
}

/// The same construction without the Gray-axiom gate; used by the
/// cross-oracle tests that compare verdicts on deliberately broken data.
pub fn to_gcrossed_unchecked(m: &PointedGrayMonoid) -> GCrossedPointedCategory {
    let ng = m.ng();
    let ob_count: Vec<usize> = (0..ng).map(|g| m.hom(0, g)).collect();
    let offset = |g: usize| -> usize { ob_count[..g].iter().sum() };
    let n: usize = ob_count.iter().sum();
    let unit = offset(0) + m.id_cell[0];
    let mut tensor = vec![0usize; n * n];
    let mut braid = vec![0usize; n * n];
    let mut act = vec![0usize; ng * n];
    for g in 0..ng {
        for x in 0..ob_count[g] {
            let xg = offset(g) + x;
            for h in 0..ng {
                for y in 0..ob_count[h] {
                    let yg = offset(h) + y;
                    // x (x) y = (x (x) id_h) . y by nudging
                    let rx = m.r(h, 0, g, x); // in hom(h, gh)
                    let t = m.compose(0, h, m.grp.mul(g, h), rx, y);
                    tensor[xg * n + yg] = offset(m.grp.mul(g, h)) + t;
                    braid[xg * n + yg] =
                        m.phi_at(m.global(0, g, x), m.global(0, h, y));
                }
            }
            for a in 0..ng {
                // F_a = L_a R_{a^{-1}}
                let ai = m.grp.inv(a);
                let r1 = m.r(ai, 0, g, x); // hom(a^{-1}, g a^{-1})
                let l1 = m.l(a, ai, m.grp.mul(g, ai), r1); // hom(e, a g a^{-1})
                act[a * n + (offset(g) + x)] =
                    offset(crate::fingroup::conjugate(&m.grp, a, g)) + l1;
            }
        }
    }
    GCrossedPointedCategory {
        grp: m.grp.clone(),
        k: m.k.clone(),
        ob_count,
        unit,
        tensor,
        assoc: vec![0; n * n * n],
        lam: vec![0; n],
        rho: vec![0; n],
        act,
        unit_iso: vec![0; ng],
        tensorator: vec![0; ng * n * n],
        act_comp: vec![0; ng * ng * n],
        unit_transf: vec![0; n],
        braid,
    }
}

/// Human-readable first difference between two categories, for round-trip
/// diagnostics.
pub fn first_difference(
    a: &GCrossedPointedCategory,
    b: &GCrossedPointedCategory,
) -> Option<String> {
    if a.grp != b.grp {
        return Some("group".into());
    }
    if a.k != b.k {
        return Some("scalar group".into());
    }
    if a.ob_count != b.ob_count {
        return Some("object counts".into());
    }
    if a.unit != b.unit {
        return Some("unit object".into());
    }
    let tables: [(&str, &Vec<usize>, &Vec<usize>); 10] = [
        ("tensor", &a.tensor, &b.tensor),
        ("assoc", &a.assoc, &b.assoc),
        ("lam", &a.lam, &b.lam),
        ("rho", &a.rho, &b.rho),
        ("act", &a.act, &b.act),
        ("unit_iso", &a.unit_iso, &b.unit_iso),
        ("tensorator", &a.tensorator, &b.tensorator),
        ("act_comp", &a.act_comp, &b.act_comp),
        ("unit_transf", &a.unit_transf, &b.unit_transf),
        ("braid", &a.braid, &b.braid),
    ];
    for (name, ta, tb) in tables {
        if let Some(i) = ta.iter().zip(tb.iter()).position(|(x, y)| x != y) {
            return Some(format!("table {name} entry {i}: {} vs {}", ta[i], tb[i]));
        }
        if ta.len() != tb.len() {
            return Some(format!("table {name} length"));
        }
    }
    None
}

/// Checks `to_gcrossed(from_gcrossed(c)) == c` bitwise and returns the
/// verified identity functor that witnesses the equivalence.
pub fn roundtrip_check(c: &GCrossedPointedCategory) -> Result<GCrossedFunctor, GrayError> {
    let m = from_gcrossed(c)?;
    let c2 = to_gcrossed(&m)?;
    if let Some(diff) = first_difference(c, &c2) {
        return Err(GrayError::RoundTripMismatch(diff));
    }
    let id = GCrossedFunctor::identity(c);
    let report = verify_functor(&id, ReportOptions::FirstHundred);
    if !report.passed() {
        return Err(GrayError::RoundTripMismatch(format!(
            "identity functor fails verification:\n{report}"
        )));
    }
    Ok(id)
}
