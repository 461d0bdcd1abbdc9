//! Finite decision procedures for the colour classes of periodic decompositions.
//!
//! A class is classified from the closed trajectories it traces in the
//! `Up^p`-quotient (see [`quotient_components`]). A trajectory with winding
//! `w = 0` lifts to finitely long cycles; one with `w != 0` lifts to `|w|`
//! double-rays, each drifting monotonically from one end of `G(k,l)` to the
//! other. Since every 4-regular `G(k,l)` is two-ended, a spanning class is a
//! Hamiltonian double-ray iff the windings sum to 1 in absolute value, and a
//! Hamiltonian circle iff two such double-rays span it (total `|w| = 2`).

mod cuts;
mod oracle;
mod prevalence;
mod quotient;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use cuts::{enumerate_small_cuts, CutCensus, MAX_CUT_EDGES, MAX_CUT_WINDOW};
pub use oracle::{window_oracle, OracleClass, OracleVerdict};
pub use prevalence::{prevalence, ClassPrevalence, PrevalenceReport};
pub use quotient::{quotient_components, ComponentReport, QuotientCycle};

use crate::error::Error;
use crate::group::{GklParams, Vertex};
use crate::periodic::{Color, Decomposition, DegreeViolation, PeriodicEdgeSet};

/// Target shape of a decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Mode {
    #[serde(rename = "rays")]
    DoubleRays,
    #[serde(rename = "circles")]
    Circles,
    #[serde(rename = "mixed")]
    Mixed,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::DoubleRays, Mode::Circles, Mode::Mixed];

    pub fn name(self) -> &'static str {
        match self {
            Mode::DoubleRays => "rays",
            Mode::Circles => "circles",
            Mode::Mixed => "mixed",
        }
    }

    /// Whether the mode is compatible with condition (P) holding (`true`) or failing.
    pub fn needs_parity(self) -> bool {
        self != Mode::Mixed
    }

    fn accepts(self, a: Shape, b: Shape) -> bool {
        match self {
            Mode::DoubleRays => a == Shape::Ray && b == Shape::Ray,
            Mode::Circles => a == Shape::Circle && b == Shape::Circle,
            Mode::Mixed => {
                (a == Shape::Ray && b == Shape::Circle) || (a == Shape::Circle && b == Shape::Ray)
            }
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "rays" | "double-rays" => Ok(Mode::DoubleRays),
            "circles" => Ok(Mode::Circles),
            "mixed" => Ok(Mode::Mixed),
            other => Err(Error::Malformed(format!("unknown mode `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FailureReason {
    FiniteCycle,
    TooManyComponents,
    NotSpanning,
    NotTwoRegular,
}

/// Concrete evidence attached to a negative verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A vertex with the wrong number of incident class edges.
    Vertex { vertex: Vertex, degree: usize },
    /// A quotient cycle, identified by its first vertex.
    Cycle { start: Vertex, length: usize, winding: i64 },
    /// A window vertex no member edge touches.
    Uncovered { vertex: Vertex },
    /// Windings of all quotient cycles when they do not add up to 1 or 2.
    Windings { windings: Vec<i64> },
    /// A path component of a truncation with the given endpoints.
    Path { ends: (Vertex, Vertex) },
    /// A count of end-to-end paths in a truncation.
    ThroughPaths { count: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum ClassVerdict {
    HamiltonianDoubleRay,
    HamiltonianCircle,
    Other { reason: FailureReason, witness: Witness },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Ray,
    Circle,
    Neither,
}

impl ClassVerdict {
    fn shape(&self) -> Shape {
        match self {
            ClassVerdict::HamiltonianDoubleRay => Shape::Ray,
            ClassVerdict::HamiltonianCircle => Shape::Circle,
            ClassVerdict::Other { .. } => Shape::Neither,
        }
    }

    pub fn is_ray(&self) -> bool {
        self.shape() == Shape::Ray
    }

    pub fn is_circle(&self) -> bool {
        self.shape() == Shape::Circle
    }

    /// Same tag and, for failures, the same reason (witnesses may differ).
    pub fn same_kind(&self, other: &ClassVerdict) -> bool {
        match (self, other) {
            (ClassVerdict::Other { reason: a, .. }, ClassVerdict::Other { reason: b, .. }) => a == b,
            _ => self.shape() == other.shape(),
        }
    }
}

impl fmt::Display for ClassVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassVerdict::HamiltonianDoubleRay => f.write_str("Hamiltonian double-ray"),
            ClassVerdict::HamiltonianCircle => f.write_str("Hamiltonian circle"),
            ClassVerdict::Other { reason, .. } => write!(f, "neither ({reason:?})"),
        }
    }
}

pub fn classify_class(s: &PeriodicEdgeSet) -> ClassVerdict {
    let report = match quotient_components(s) {
        Ok(r) => r,
        Err(Error::NotTwoRegular(v)) => {
            return ClassVerdict::Other {
                reason: FailureReason::NotTwoRegular,
                witness: Witness::Vertex {
                    vertex: v,
                    degree: s.degree(v),
                },
            }
        }
        Err(e) => unreachable!("quotient tracing only fails on degree: {e}"),
    };
    if let Some(c) = report.cycles.iter().find(|c| c.winding == 0) {
        return ClassVerdict::Other {
            reason: FailureReason::FiniteCycle,
            witness: Witness::Cycle {
                start: c.covered[0],
                length: c.length,
                winding: 0,
            },
        };
    }
    if let Some(v) = report.first_uncovered(s) {
        return ClassVerdict::Other {
            reason: FailureReason::NotSpanning,
            witness: Witness::Uncovered { vertex: v },
        };
    }
    match report.total_abs_winding() {
        1 => ClassVerdict::HamiltonianDoubleRay,
        2 => ClassVerdict::HamiltonianCircle,
        _ => ClassVerdict::Other {
            reason: FailureReason::TooManyComponents,
            witness: Witness::Windings {
                windings: report.cycles.iter().map(|c| c.winding).collect(),
            },
        },
    }
}

/// Outcome of checking a decomposition against a mode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub mode: Mode,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_violation: Option<DegreeViolation>,
    pub class1: ClassVerdict,
    pub class2: ClassVerdict,
}

impl Verdict {
    pub fn class(&self, c: Color) -> &ClassVerdict {
        match c {
            Color::One => &self.class1,
            Color::Two => &self.class2,
        }
    }

    /// The mode the two class verdicts realise, if any.
    pub fn realised_mode(&self) -> Option<Mode> {
        if self.degree_violation.is_some() {
            return None;
        }
        Mode::ALL
            .into_iter()
            .find(|m| m.accepts(self.class1.shape(), self.class2.shape()))
    }
}

pub fn verify(d: &Decomposition, mode: Mode) -> Verdict {
    let degree_violation = d.check_degrees().err();
    let class1 = classify_class(&d.class_edges(Color::One));
    let class2 = classify_class(&d.class_edges(Color::Two));
    let passed = degree_violation.is_none() && mode.accepts(class1.shape(), class2.shape());
    Verdict {
        mode,
        passed,
        degree_violation,
        class1,
        class2,
    }
}

/// The mode a decomposition realises, if it realises one.
pub fn detect_mode(d: &Decomposition) -> Option<Mode> {
    verify(d, Mode::DoubleRays).realised_mode()
}

/// Machine-readable certificate: verdict plus prevalence, as written by
/// `hamcay verify` and stored next to every fixture.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub k: i64,
    pub l: i64,
    pub period: i64,
    pub verdict: Verdict,
    pub prevalence: PrevalenceReport,
}

pub fn report(d: &Decomposition, mode: Mode) -> Report {
    let g: GklParams = d.params();
    Report {
        k: g.k(),
        l: g.l(),
        period: d.period(),
        verdict: verify(d, mode),
        prevalence: prevalence(d),
    }
}
