//! Seeded verification suite: generates hypothesis-satisfying instances,
//! runs the checkers, and aggregates verdicts.
//!
//! Trials are independent and may fan out across threads; every trial owns
//! an RNG stream derived from (seed, theorem, trial index), and results are
//! merged by trial index, so the outcome is byte-identical for any job
//! count. Any `VIOLATION` fails the suite and surfaces a reproducer bundle
//! sufficient to re-run the offending trial.

use std::thread;

use serde::{Deserialize, Serialize};

use super::generate::{generate_for_theorem, GenError, Instance, SeededRng};
use super::{TheoremId, TheoremReport, Verdict};

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub theorems: Vec<TheoremId>,
    pub trials: usize,
    pub size: usize,
    pub seed: u64,
    pub jobs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremSummary {
    pub theorem: TheoremId,
    pub trials: usize,
    pub equivalence_holds: usize,
    pub hypothesis_failed: usize,
    pub violations: usize,
}

/// Everything needed to replay a failing trial.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Reproducer {
    pub theorem: TheoremId,
    pub seed: u64,
    pub size: usize,
    pub trial: usize,
    /// The instance matrices, keyed by checker argument role.
    #[serde(rename = "instances")]
    pub instance: Instance,
    pub report: TheoremReport,
}

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub summaries: Vec<TheoremSummary>,
    /// First violation in (theorem, trial) order, if any.
    pub violation: Option<Reproducer>,
}

/// The printable suite report; deliberately excludes the job count so runs
/// with different `--jobs` values are byte-identical.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteReportDoc {
    pub seed: u64,
    pub trials: usize,
    pub size: usize,
    pub theorems: Vec<TheoremSummary>,
}

impl SuiteOutcome {
    pub fn report_doc(&self, cfg: &SuiteConfig) -> SuiteReportDoc {
        SuiteReportDoc {
            seed: cfg.seed,
            trials: cfg.trials,
            size: cfg.size,
            theorems: self.summaries.clone(),
        }
    }
}

type TrialResult = Result<(Instance, TheoremReport), GenError>;

fn run_trials(theorem: TheoremId, salt: u64, cfg: &SuiteConfig, jobs: usize) -> Vec<TrialResult> {
    let trials = cfg.trials;
    if jobs <= 1 {
        return (0..trials)
            .map(|t| {
                let mut rng = SeededRng::for_trial(cfg.seed, salt, t as u64);
                generate_for_theorem(theorem, cfg.size, &mut rng)
            })
            .collect();
    }
    let mut slots: Vec<Option<TrialResult>> = (0..trials).map(|_| None).collect();
    thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|worker| {
                let cfg = &*cfg;
                scope.spawn(move || {
                    let mut out = Vec::new();
                    let mut t = worker;
                    while t < trials {
                        let mut rng = SeededRng::for_trial(cfg.seed, salt, t as u64);
                        out.push((t, generate_for_theorem(theorem, cfg.size, &mut rng)));
                        t += jobs;
                    }
                    out
                })
            })
            .collect();
        for handle in handles {
            for (t, result) in handle.join().expect("suite worker panicked") {
                slots[t] = Some(result);
            }
        }
    });
    slots.into_iter().map(|s| s.expect("every trial slot filled")).collect()
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome, GenError> {
    assert!(cfg.trials >= 1, "trials must be at least 1");
    assert!(cfg.size >= 1, "size bound must be at least 1");
    let jobs = cfg.jobs.max(1);
    let mut summaries = Vec::with_capacity(cfg.theorems.len());
    let mut violation: Option<Reproducer> = None;
    for &theorem in &cfg.theorems {
        // Salt by catalog position, not request position, so a single-theorem
        // run replays exactly the instances of a full run.
        let salt = TheoremId::ALL
            .iter()
            .position(|t| *t == theorem)
            .expect("catalog is closed") as u64;
        let results = run_trials(theorem, salt, cfg, jobs);
        let mut summary = TheoremSummary {
            theorem,
            trials: cfg.trials,
            equivalence_holds: 0,
            hypothesis_failed: 0,
            violations: 0,
        };
        for (trial, result) in results.into_iter().enumerate() {
            let (instance, report) = result?;
            match report.verdict {
                Verdict::EquivalenceHolds => summary.equivalence_holds += 1,
                Verdict::HypothesisFailed => summary.hypothesis_failed += 1,
                Verdict::Violation => {
                    summary.violations += 1;
                    if violation.is_none() {
                        violation = Some(Reproducer {
                            theorem,
                            seed: cfg.seed,
                            size: cfg.size,
                            trial,
                            instance,
                            report,
                        });
                    }
                }
            }
        }
        summaries.push(summary);
    }
    Ok(SuiteOutcome { summaries, violation })
}
