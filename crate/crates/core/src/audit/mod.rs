//! Registry of identity checks, each run by exact coefficient comparison over a
//! finite seeded grid.
//!
//! A case either holds on its whole grid (`PASS`), has a first counterexample
//! (`FAIL`), or is a capped evaluation of a non-convergent expression for which
//! no equality is asserted (`INCONCLUSIVE`). Cases marked as documented
//! inconsistencies may fail without making the run fail.

mod cases;
pub mod grid;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::exact::Rational;
use crate::{Error, Result};

pub const DEFAULT_ORDER: usize = 10;
pub const DEFAULT_SEED: u64 = 0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuditConfig {
    pub seed: u64,
    /// Highest coefficient index compared for generating-function identities.
    pub order: usize,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            seed: DEFAULT_SEED,
            order: DEFAULT_ORDER,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// What the registry expects of a case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    /// Must pass; a failure is an error in the implementation or the claim.
    Holds,
    /// Known not to hold as written; a failure is recorded but tolerated.
    DocumentedInconsistency,
    /// Capped evaluation, always `INCONCLUSIVE`.
    Exploratory,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub params: BTreeMap<String, String>,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub id: String,
    pub variant: Option<String>,
    pub grid_size: u64,
    pub verdict: Verdict,
    pub counterexample: Option<Counterexample>,
    pub notes: String,
}

impl CaseReport {
    pub fn label(&self) -> String {
        match &self.variant {
            Some(v) => format!("{}[{}]", self.id, v),
            None => self.id.clone(),
        }
    }

    /// A non-`PASS` verdict on a case that is expected to hold.
    pub fn is_unexpected(&self) -> bool {
        let expectation = lookup(&self.id, self.variant.as_deref())
            .map(|case| case.expectation)
            .unwrap_or(Expectation::Holds);
        match expectation {
            Expectation::Holds => self.verdict != Verdict::Pass,
            Expectation::DocumentedInconsistency => false,
            Expectation::Exploratory => self.verdict == Verdict::Fail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub seed: u64,
    pub order: usize,
    pub cases: Vec<CaseReport>,
}

impl AuditReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is plain data")
    }

    pub fn unexpected_failures(&self) -> Vec<&CaseReport> {
        self.cases.iter().filter(|c| c.is_unexpected()).collect()
    }
}

/// One registered identity (or one variant of it).
pub struct IdentityCase {
    pub id: &'static str,
    pub variant: Option<&'static str>,
    pub expectation: Expectation,
    pub summary: &'static str,
    run: fn(&AuditConfig) -> Outcome,
}

impl IdentityCase {
    pub fn run(&self, config: &AuditConfig) -> CaseReport {
        let outcome = (self.run)(config);
        CaseReport {
            id: self.id.to_string(),
            variant: self.variant.map(str::to_string),
            grid_size: outcome.grid_size,
            verdict: outcome.verdict,
            counterexample: outcome.counterexample,
            notes: outcome.notes,
        }
    }
}

/// Result of a check before it is labelled with its case.
pub(crate) struct Outcome {
    grid_size: u64,
    verdict: Verdict,
    counterexample: Option<Counterexample>,
    notes: String,
}

/// Accumulates exact comparisons over a grid and keeps the first mismatch.
pub(crate) struct Tally {
    grid_size: u64,
    mismatches: u64,
    first: Option<Counterexample>,
}

impl Tally {
    pub(crate) fn new() -> Self {
        Tally {
            grid_size: 0,
            mismatches: 0,
            first: None,
        }
    }

    /// Records one grid point; `params` is only built for the first mismatch.
    pub(crate) fn check<F>(&mut self, expected: &Rational, actual: &Rational, params: F)
    where
        F: FnOnce() -> Vec<(&'static str, String)>,
    {
        self.grid_size += 1;
        if expected != actual {
            self.mismatches += 1;
            if self.first.is_none() {
                self.first = Some(Counterexample {
                    params: params()
                        .into_iter()
                        .map(|(k, v)| (k.to_string(), v))
                        .collect(),
                    expected: expected.to_string(),
                    actual: actual.to_string(),
                });
            }
        }
    }

    pub(crate) fn finish(self, notes: impl Into<String>) -> Outcome {
        let mut notes = notes.into();
        if self.mismatches > 0 {
            let summary = format!(
                "{} of {} comparisons differ",
                self.mismatches, self.grid_size
            );
            notes = if notes.is_empty() {
                summary
            } else {
                format!("{notes}; {summary}")
            };
        }
        Outcome {
            grid_size: self.grid_size,
            verdict: if self.first.is_none() {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
            counterexample: self.first,
            notes,
        }
    }
}

pub fn registry() -> &'static [IdentityCase] {
    cases::REGISTRY
}

fn lookup(id: &str, variant: Option<&str>) -> Option<&'static IdentityCase> {
    registry()
        .iter()
        .find(|c| c.id == id && c.variant == variant)
}

/// Runs every variant of `id`, or just `variant` when given.
pub fn run_identity(
    id: &str,
    variant: Option<&str>,
    config: &AuditConfig,
) -> Result<Vec<CaseReport>> {
    let selected: Vec<&IdentityCase> = registry()
        .iter()
        .filter(|c| c.id == id && (variant.is_none() || c.variant == variant))
        .collect();
    if selected.is_empty() {
        let label = match variant {
            Some(v) => format!("{id}[{v}]"),
            None => id.to_string(),
        };
        return Err(Error::UnknownIdentity(label));
    }
    Ok(selected.into_iter().map(|c| c.run(config)).collect())
}

/// Runs the whole registry; cases are sorted by `(id, variant)`.
pub fn run_all(config: &AuditConfig) -> AuditReport {
    let mut cases: Vec<CaseReport> = registry().iter().map(|c| c.run(config)).collect();
    cases.sort_by(|a, b| (&a.id, &a.variant).cmp(&(&b.id, &b.variant)));
    AuditReport {
        seed: config.seed,
        order: config.order,
        cases,
    }
}
