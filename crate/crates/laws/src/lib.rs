//! An executable registry of the equational laws behind the segsum library.
//!
//! Each [`Law`] is a named property with an expected outcome: most laws are
//! expected to hold, a few are expected to fail and must produce a concrete
//! witness. Runs are deterministic in `(seed, id, trials)`: every check
//! draws from a ChaCha stream keyed by a SHA-256 digest of those values, so
//! running laws in parallel never changes a report.

pub mod engine;
pub mod gen;
pub mod oracles;
mod registry;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use engine::{Ctx, Expectation, Stop, Witness, SEARCH_LIMIT};
pub use registry::{OPERATIONS, REGISTRY};

/// Default number of random cases per check.
pub const DEFAULT_TRIALS: u32 = 500;

/// One registered law.
pub struct Law {
    pub id: &'static str,
    pub description: &'static str,
    /// Library operations the law exercises.
    pub covers: &'static [&'static str],
    pub expectation: Expectation,
    /// Optional laws are skipped by [`run_all`] unless requested by id.
    pub optional: bool,
    run: fn(&mut Ctx) -> engine::Checked,
}

impl std::fmt::Debug for Law {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Law")
            .field("id", &self.id)
            .field("expectation", &self.expectation)
            .field("optional", &self.optional)
            .finish_non_exhaustive()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    /// Every case passed.
    Holds,
    /// A counterexample was found.
    FailsWithWitness,
    /// Generation gave up (too many rejected cases).
    Aborted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub id: String,
    /// Cases actually evaluated, over all checks of the law.
    pub trials: u64,
    pub expectation: Expectation,
    pub outcome: Outcome,
    pub witness: Option<Witness>,
    /// Whether the outcome is the expected one.
    pub met: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LawError {
    UnknownId(String),
}

impl std::fmt::Display for LawError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LawError::UnknownId(id) => write!(f, "unknown law id `{id}`"),
        }
    }
}

impl std::error::Error for LawError {}

pub fn find(id: &str) -> Option<&'static Law> {
    REGISTRY.iter().find(|l| l.id == id)
}

impl Law {
    pub fn run(&self, seed: u64, trials: u32) -> LawReport {
        let mut ctx = Ctx::new(self.id, seed, trials, self.expectation);
        let result = (self.run)(&mut ctx);
        let (outcome, witness, note) = match result {
            Ok(()) => (Outcome::Holds, None, None),
            Err(Stop::Witness(w)) => (Outcome::FailsWithWitness, Some(w), None),
            Err(Stop::Aborted(msg)) => (Outcome::Aborted, None, Some(msg)),
        };
        let met = matches!(
            (self.expectation, outcome),
            (Expectation::Holds, Outcome::Holds) | (Expectation::FailsWithWitness, Outcome::FailsWithWitness)
        );
        LawReport {
            id: self.id.to_string(),
            trials: ctx.cases_run,
            expectation: self.expectation,
            outcome,
            witness,
            met,
            note,
        }
    }
}

/// Runs a single law by id.
pub fn run_law(id: &str, seed: u64, trials: u32) -> Result<LawReport, LawError> {
    find(id)
        .map(|l| l.run(seed, trials))
        .ok_or_else(|| LawError::UnknownId(id.to_string()))
}

/// Runs the given laws in parallel, reporting in the order given.
pub fn run_laws(laws: &[&'static Law], seed: u64, trials: u32) -> Vec<LawReport> {
    laws.par_iter().map(|l| l.run(seed, trials)).collect()
}

/// Runs every non-optional law, in registry order.
pub fn run_all(seed: u64, trials: u32) -> Vec<LawReport> {
    let laws: Vec<&'static Law> = REGISTRY.iter().filter(|l| !l.optional).collect();
    run_laws(&laws, seed, trials)
}

/// Resolves ids to laws, failing on the first unknown one.
pub fn select(ids: &[String]) -> Result<Vec<&'static Law>, LawError> {
    ids.iter()
        .map(|id| find(id).ok_or_else(|| LawError::UnknownId(id.clone())))
        .collect()
}

/// True iff every report met its expectation.
pub fn all_met(reports: &[LawReport]) -> bool {
    reports.iter().all(|r| r.met)
}
