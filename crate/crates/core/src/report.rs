//! Failure reports shared by every axiom verifier.
//!
//! A verifier walks all tuples of an axiom class and records each violated
//! instance with its witness tuple and defect scalar. Reports keep the first
//! 100 failures by default; callers can ask for exhaustive reporting.

use std::fmt;

/// Which axiom an instance violated. Display strings follow the labels used
/// in the report output of the command line tool.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AxiomLabel {
    Pentagon,
    Triangle,
    Psi1,
    Psi2,
    Mu1,
    Mu2,
    Iota1,
    Iota2,
    Beta1,
    Beta2,
    Beta3,
    Hexagon1,
    Hexagon2,
    C0Composition,
    C2Tensor,
    C3PhiIdentity,
    C4PhiComposition,
    C5PhiNaturality,
    C6PhiTensor,
    GrayTyping,
    FunctorAssoc,
    FunctorUnit,
    Gamma1,
    Gamma2,
    ActionatorMonoidal,
    ActionatorUnit,
    TransfMonoidal,
    TransfUnit,
    TransfAction,
    MonoidAssoc,
    MonoidUnit,
    MonoidGrading,
    MonoidAction,
    MonoidCrossed,
    Snake,
}

impl fmt::Display for AxiomLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AxiomLabel::Pentagon => "pentagon",
            AxiomLabel::Triangle => "triangle",
            AxiomLabel::Psi1 => "(psi1)",
            AxiomLabel::Psi2 => "(psi2)",
            AxiomLabel::Mu1 => "(mu1)",
            AxiomLabel::Mu2 => "(mu2)",
            AxiomLabel::Iota1 => "(iota1)",
            AxiomLabel::Iota2 => "(iota2)",
            AxiomLabel::Beta1 => "(beta1)",
            AxiomLabel::Beta2 => "(beta2)",
            AxiomLabel::Beta3 => "(beta3)",
            AxiomLabel::Hexagon1 => "hexagon1",
            AxiomLabel::Hexagon2 => "hexagon2",
            AxiomLabel::C0Composition => "(C0)",
            AxiomLabel::C2Tensor => "(C2)",
            AxiomLabel::C3PhiIdentity => "(C3)",
            AxiomLabel::C4PhiComposition => "(C4)",
            AxiomLabel::C5PhiNaturality => "(C5)",
            AxiomLabel::C6PhiTensor => "(C6)",
            AxiomLabel::GrayTyping => "(gray-typing)",
            AxiomLabel::FunctorAssoc => "(functor-assoc)",
            AxiomLabel::FunctorUnit => "(functor-unit)",
            AxiomLabel::Gamma1 => "(gamma1)",
            AxiomLabel::Gamma2 => "(gamma2)",
            AxiomLabel::ActionatorMonoidal => "(actionator-monoidal)",
            AxiomLabel::ActionatorUnit => "(actionator-unit)",
            AxiomLabel::TransfMonoidal => "(transf-monoidal)",
            AxiomLabel::TransfUnit => "(transf-unit)",
            AxiomLabel::TransfAction => "(transf-action)",
            AxiomLabel::MonoidAssoc => "(monoid-assoc)",
            AxiomLabel::MonoidUnit => "(monoid-unit)",
            AxiomLabel::MonoidGrading => "(monoid-grading)",
            AxiomLabel::MonoidAction => "(monoid-action)",
            AxiomLabel::MonoidCrossed => "(monoid-crossed)",
            AxiomLabel::Snake => "snake",
        };
        f.write_str(s)
    }
}

/// A single violated axiom instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub axiom: AxiomLabel,
    /// The tuple of element/object indices the axiom was evaluated at.
    pub witness: Vec<usize>,
    /// The defect scalar (index into the coefficient group), when meaningful.
    pub defect: Option<usize>,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {:?}", self.axiom, self.witness)?;
        if let Some(d) = self.defect {
            write!(f, " defect {d}")?;
        }
        Ok(())
    }
}

/// How many failures a verifier records.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportOptions {
    /// Keep only the first 100 failures (still counts the rest).
    FirstHundred,
    /// Keep every failure.
    All,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions::FirstHundred
    }
}

impl ReportOptions {
    fn cap(self) -> usize {
        match self {
            ReportOptions::FirstHundred => 100,
            ReportOptions::All => usize::MAX,
        }
    }
}

/// The outcome of a verifier run: empty means every instance passed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    failures: Vec<Failure>,
    total_failures: usize,
    cap: usize,
}

impl Report {
    pub fn new(opts: ReportOptions) -> Self {
        Report { failures: Vec::new(), total_failures: 0, cap: opts.cap() }
    }

    pub fn push(&mut self, failure: Failure) {
        self.total_failures += 1;
        if self.failures.len() < self.cap {
            self.failures.push(failure);
        }
    }

    pub fn record(
        &mut self,
        axiom: AxiomLabel,
        witness: &[usize],
        defect: usize,
        zero: usize,
    ) {
        if defect != zero {
            self.push(Failure { axiom, witness: witness.to_vec(), defect: Some(defect) });
        }
    }

    pub fn merge(&mut self, other: Report) {
        let kept = other.failures.len();
        for f in other.failures {
            self.push(f);
        }
        // Failures the other report dropped at its cap are still counted.
        self.total_failures += other.total_failures - kept;
    }

    pub fn passed(&self) -> bool {
        self.total_failures == 0
    }

    pub fn failures(&self) -> &[Failure] {
        &self.failures
    }

    pub fn total_failures(&self) -> usize {
        self.total_failures
    }

    /// True when some failures were dropped by the cap.
    pub fn truncated(&self) -> bool {
        self.total_failures > self.failures.len()
    }

    pub fn failures_for(&self, axiom: AxiomLabel) -> Vec<&Failure> {
        self.failures.iter().filter(|f| f.axiom == axiom).collect()
    }

    pub fn axioms_hit(&self) -> Vec<AxiomLabel> {
        let mut labels: Vec<AxiomLabel> = Vec::new();
        for f in &self.failures {
            if !labels.contains(&f.axiom) {
                labels.push(f.axiom);
            }
        }
        labels
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "all axioms hold");
        }
        writeln!(f, "{} failing instance(s)", self.total_failures)?;
        for failure in &self.failures {
            writeln!(f, "  {failure}")?;
        }
        if self.truncated() {
            writeln!(
                f,
                "  ... {} more (rerun with exhaustive reporting)",
                self.total_failures - self.failures.len()
            )?;
        }
        Ok(())
    }
}
