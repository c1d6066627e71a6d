//! G-crossed monoids: the decategorified structure. A G-graded monoid with a
//! conjugation-compatible G-action satisfying the crossed commutation law
//! `m_g . n_h = pi_g(n_h) . m_g`.

use crate::fingroup::{conjugate, FiniteGroup};
use crate::report::{AxiomLabel, Report, ReportOptions};

/// A finite G-graded monoid with G-action. Elements carry global indices,
/// grade by grade, exactly like category objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GCrossedMonoid {
    pub grp: FiniteGroup,
    pub carrier_count: Vec<usize>,
    /// `mult[x * n + y]`, global indices.
    pub mult: Vec<usize>,
    pub unit: usize,
    /// `action[g * n + x]`, global indices.
    pub action: Vec<usize>,
}

impl GCrossedMonoid {
    pub fn n_elements(&self) -> usize {
        self.carrier_count.iter().sum()
    }

    pub fn grade_of(&self, x: usize) -> usize {
        let mut acc = 0;
        for (g, &c) in self.carrier_count.iter().enumerate() {
            acc += c;
            if x < acc {
                return g;
            }
        }
        panic!("element index {x} out of range");
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mult[x * self.n_elements() + y]
    }

    pub fn pi(&self, g: usize, x: usize) -> usize {
        self.action[g * self.n_elements() + x]
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.n_elements()
    }

    /// The group acting on itself: `M_g = {g}` with conjugation action.
    pub fn conjugation_monoid(grp: FiniteGroup) -> Self {
        let n = grp.order();
        let mut mult = vec![0; n * n];
        let mut action = vec![0; n * n];
        for g in 0..n {
            for h in 0..n {
                mult[g * n + h] = grp.mul(g, h);
                action[g * n + h] = conjugate(&grp, g, h);
            }
        }
        GCrossedMonoid { grp, carrier_count: vec![1; n], mult, unit: 0, action }
    }

    /// Checks associativity, unit, grading, the action axioms, and crossed
    /// commutation over all tuples.
    pub fn verify(&self, opts: ReportOptions) -> Report {
        let mut report = Report::new(opts);
        let n = self.n_elements();
        let ng = self.grp.order();
        let ok_sizes = self.carrier_count.len() == ng
            && self.mult.len() == n * n
            && self.action.len() == ng * n
            && self.mult.iter().all(|&v| v < n)
            && self.action.iter().all(|&v| v < n)
            && self.unit < n;
        if !ok_sizes {
            report.push(crate::report::Failure {
                axiom: AxiomLabel::MonoidGrading,
                witness: vec![],
                defect: None,
            });
            return report;
        }
        for x in self.elements() {
            for y in self.elements() {
                let gx = self.grade_of(x);
                let gy = self.grade_of(y);
                if self.grade_of(self.mul(x, y)) != self.grp.mul(gx, gy) {
                    report.push(crate::report::Failure {
                        axiom: AxiomLabel::MonoidGrading,
                        witness: vec![x, y],
                        defect: None,
                    });
                }
                for z in self.elements() {
                    if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                        report.push(crate::report::Failure {
                            axiom: AxiomLabel::MonoidAssoc,
                            witness: vec![x, y, z],
                            defect: None,
                        });
                    }
                }
            }
            if self.mul(self.unit, x) != x || self.mul(x, self.unit) != x {
                report.push(crate::report::Failure {
                    axiom: AxiomLabel::MonoidUnit,
                    witness: vec![x],
                    defect: None,
                });
            }
        }
        if self.grade_of(self.unit) != 0 {
            report.push(crate::report::Failure {
                axiom: AxiomLabel::MonoidUnit,
                witness: vec![self.unit],
                defect: None,
            });
        }
        for g in 0..ng {
            for x in self.elements() {
                let bad_grade = self.grade_of(self.pi(g, x))
                    != conjugate(&self.grp, g, self.grade_of(x));
                let not_identity = g == 0 && self.pi(0, x) != x;
                if bad_grade || not_identity {
                    report.push(crate::report::Failure {
                        axiom: AxiomLabel::MonoidAction,
                        witness: vec![g, x],
                        defect: None,
                    });
                }
                for h in 0..ng {
                    if self.pi(g, self.pi(h, x)) != self.pi(self.grp.mul(g, h), x) {
                        report.push(crate::report::Failure {
                            axiom: AxiomLabel::MonoidAction,
                            witness: vec![g, h, x],
                            defect: None,
                        });
                    }
                }
                for y in self.elements() {
                    if self.pi(g, self.mul(x, y)) != self.mul(self.pi(g, x), self.pi(g, y)) {
                        report.push(crate::report::Failure {
                            axiom: AxiomLabel::MonoidAction,
                            witness: vec![g, x, y],
                            defect: None,
                        });
                    }
                }
            }
            if self.pi(g, self.unit) != self.unit {
                report.push(crate::report::Failure {
                    axiom: AxiomLabel::MonoidAction,
                    witness: vec![g, self.unit],
                    defect: None,
                });
            }
        }
        for x in self.elements() {
            let g = self.grade_of(x);
            for y in self.elements() {
                if self.mul(x, y) != self.mul(self.pi(g, y), x) {
                    report.push(crate::report::Failure {
                        axiom: AxiomLabel::MonoidCrossed,
                        witness: vec![x, y],
                        defect: None,
                    });
                }
            }
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::{make_cyclic, make_dihedral};

    #[test]
    fn group_with_conjugation_is_a_crossed_monoid() {
        for grp in [make_cyclic(4), make_dihedral(3)] {
            let m = GCrossedMonoid::conjugation_monoid(grp);
            let report = m.verify(ReportOptions::All);
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn eckmann_hilton_rejects_noncommutative_unit_component() {
        // Trivial group, left-zero monoid adjoined with a unit:
        // 0 = unit, 1*x = 1, 2*x = 2 for x != 0.
        let grp = make_cyclic(1);
        let mult = vec![
            0, 1, 2, //
            1, 1, 1, //
            2, 2, 2,
        ];
        let m = GCrossedMonoid {
            grp,
            carrier_count: vec![3],
            mult,
            unit: 0,
            action: vec![0, 1, 2],
        };
        let report = m.verify(ReportOptions::All);
        assert!(!report.passed());
        assert!(report
            .failures()
            .iter()
            .any(|f| f.axiom == AxiomLabel::MonoidCrossed));
        // With the trivial group, crossed commutation is exactly
        // commutativity; the monoid itself is associative and unital.
        assert!(report.failures().iter().all(|f| f.axiom == AxiomLabel::MonoidCrossed));
    }
}
