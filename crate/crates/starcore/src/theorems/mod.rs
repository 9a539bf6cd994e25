//! Hypothesis checkers, equivalence verifiers, and seeded instance
//! generators for the additive and block-matrix core-invertibility
//! statements.
//!
//! Each checker evaluates named hypotheses first and never throws on a
//! mathematically meaningful failure: a failed hypothesis produces a
//! `HypothesisFailed` report. Only when every hypothesis holds are the two
//! sides of the statement evaluated, conjunct by conjunct, so a failing
//! equivalence pinpoints the first differing conjunct. A `VIOLATION`
//! verdict means the hypotheses held and the sides disagreed, which
//! indicates an implementation bug, never an accepted outcome.

mod check;
pub mod generate;
pub mod suite;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use check::{
    check_corollary_3_2, check_corollary_3_3, check_corollary_4_4, check_lemma_2_1,
    check_lemma_2_2, check_lemma_2_3, check_lemma_2_4, check_lemma_4_1, check_lemma_4_2,
    check_theorem_3_1, check_theorem_4_3,
};
pub use generate::{Family, GenError, Instance, SeededRng};
pub use suite::{run_suite, Reproducer, SuiteConfig, SuiteOutcome, SuiteReportDoc, TheoremSummary};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("lambda must be nonzero")]
    ZeroLambda,
}

/// The closed catalog of checkable statements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "L2.1")]
    L21,
    #[serde(rename = "L2.2")]
    L22,
    #[serde(rename = "L2.3")]
    L23,
    #[serde(rename = "L2.4")]
    L24,
    #[serde(rename = "T3.1")]
    T31,
    #[serde(rename = "C3.2")]
    C32,
    #[serde(rename = "C3.3")]
    C33,
    #[serde(rename = "L4.1")]
    L41,
    #[serde(rename = "L4.2")]
    L42,
    #[serde(rename = "T4.3")]
    T43,
    #[serde(rename = "C4.4")]
    C44,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::L21,
        TheoremId::L22,
        TheoremId::L23,
        TheoremId::L24,
        TheoremId::T31,
        TheoremId::C32,
        TheoremId::C33,
        TheoremId::L41,
        TheoremId::L42,
        TheoremId::T43,
        TheoremId::C44,
    ];

    /// Two-sided statements compare condition (1) against condition (2);
    /// one-sided statements only verify a conclusion.
    pub fn is_two_sided(self) -> bool {
        matches!(self, TheoremId::L22 | TheoremId::L24 | TheoremId::T31 | TheoremId::C33)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            TheoremId::L21 => "L2.1",
            TheoremId::L22 => "L2.2",
            TheoremId::L23 => "L2.3",
            TheoremId::L24 => "L2.4",
            TheoremId::T31 => "T3.1",
            TheoremId::C32 => "C3.2",
            TheoremId::C33 => "C3.3",
            TheoremId::L41 => "L4.1",
            TheoremId::L42 => "L4.2",
            TheoremId::T43 => "T4.3",
            TheoremId::C44 => "C4.4",
        };
        write!(f, "{name}")
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let id = match s.to_ascii_uppercase().as_str() {
            "L2.1" => TheoremId::L21,
            "L2.2" => TheoremId::L22,
            "L2.3" => TheoremId::L23,
            "L2.4" => TheoremId::L24,
            "T3.1" => TheoremId::T31,
            "C3.2" => TheoremId::C32,
            "C3.3" => TheoremId::C33,
            "L4.1" => TheoremId::L41,
            "L4.2" => TheoremId::L42,
            "T4.3" => TheoremId::T43,
            "C4.4" => TheoremId::C44,
            other => return Err(format!("unknown theorem id {other:?}")),
        };
        Ok(id)
    }
}

/// A single named condition with its exact evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn of(name: &str, holds: bool) -> Self {
        Check { name: name.to_string(), holds, note: None }
    }

    /// A hypothesis that holds for structural reasons over this field.
    pub fn vacuous(name: &str, why: &str) -> Self {
        Check { name: name.to_string(), holds: true, note: Some(why.to_string()) }
    }

    pub fn skipped(name: &str, why: &str) -> Self {
        Check { name: name.to_string(), holds: false, note: Some(format!("skipped: {why}")) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    EquivalenceHolds,
    HypothesisFailed,
    #[serde(rename = "VIOLATION")]
    Violation,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Verdict::EquivalenceHolds => "EquivalenceHolds",
            Verdict::HypothesisFailed => "HypothesisFailed",
            Verdict::Violation => "VIOLATION",
        };
        write!(f, "{name}")
    }
}

/// Per-instance record: hypothesis results, per-conjunct side evaluations,
/// and the verdict. One-sided statements leave `side1` empty and use
/// `side2` as the conclusion; `VIOLATION` then means hypotheses true,
/// conclusion false.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub hypotheses: Vec<Check>,
    pub side1: Vec<Check>,
    pub side2: Vec<Check>,
    pub verdict: Verdict,
}

fn all_hold(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.holds)
}

impl TheoremReport {
    pub(crate) fn hypothesis_failure(theorem: TheoremId, hypotheses: Vec<Check>) -> Self {
        debug_assert!(!all_hold(&hypotheses));
        TheoremReport {
            theorem,
            hypotheses,
            side1: Vec::new(),
            side2: Vec::new(),
            verdict: Verdict::HypothesisFailed,
        }
    }

    pub(crate) fn conclude(
        theorem: TheoremId,
        hypotheses: Vec<Check>,
        side1: Vec<Check>,
        side2: Vec<Check>,
    ) -> Self {
        debug_assert!(all_hold(&hypotheses));
        let verdict = if side1.is_empty() {
            // One-sided: side2 is the conclusion.
            if all_hold(&side2) { Verdict::EquivalenceHolds } else { Verdict::Violation }
        } else if all_hold(&side1) == all_hold(&side2) {
            Verdict::EquivalenceHolds
        } else {
            Verdict::Violation
        };
        TheoremReport { theorem, hypotheses, side1, side2, verdict }
    }

    pub fn first_failed_hypothesis(&self) -> Option<&str> {
        self.hypotheses.iter().find(|c| !c.holds).map(|c| c.name.as_str())
    }
}
