//! Running one law: seeded proptest runners, exhaustive sweeps, and the
//! witness that stops a run.

use std::cell::Cell;
use std::fmt::Debug;

use proptest::strategy::Strategy;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestError, TestRng, TestRunner};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Upper bound on cases tried when a law is expected to fail.
pub const SEARCH_LIMIT: u32 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Expectation {
    Holds,
    FailsWithWitness,
}

/// A concrete input that violates a law.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Which check within the law failed.
    pub check: String,
    /// The (shrunk) input, printed.
    pub input: String,
    pub reason: String,
    /// Whether re-running the check on `input` alone fails again.
    pub replayed: bool,
}

/// Why a law run stopped early.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stop {
    Witness(Witness),
    Aborted(String),
}

pub type Checked = Result<(), Stop>;

/// The failure message without the source location the assertion macros
/// append, so reports do not change when code moves.
fn reason_text(reason: &str) -> String {
    match reason.rsplit_once(" at ") {
        Some((head, loc)) if loc.contains(".rs:") && !loc.contains(' ') => head.to_string(),
        _ => reason.to_string(),
    }
}

/// Builds a failure from a message. Used inside properties.
pub fn fail(msg: impl Into<String>) -> TestCaseError {
    TestCaseError::fail(msg.into())
}

/// Per-run state shared by the checks of one law.
pub struct Ctx {
    seed: u64,
    id: &'static str,
    trials: u32,
    expectation: Expectation,
    stream: u32,
    pub(crate) cases_run: u64,
}

impl Ctx {
    pub(crate) fn new(id: &'static str, seed: u64, trials: u32, expectation: Expectation) -> Self {
        Ctx {
            seed,
            id,
            trials,
            expectation,
            stream: 0,
            cases_run: 0,
        }
    }

    pub fn trials(&self) -> u32 {
        self.trials
    }

    fn default_cases(&self) -> u32 {
        match self.expectation {
            Expectation::Holds => self.trials,
            Expectation::FailsWithWitness => SEARCH_LIMIT,
        }
    }

    /// A runner whose random stream depends only on the seed, the law id
    /// and the position of this check within the law.
    fn runner(&mut self, cases: u32) -> TestRunner {
        let mut h = Sha256::new();
        h.update(self.seed.to_le_bytes());
        h.update(self.id.as_bytes());
        h.update(self.stream.to_le_bytes());
        self.stream += 1;
        let digest = h.finalize();
        let config = Config {
            cases,
            max_local_rejects: 1 << 20,
            max_global_rejects: cases.saturating_mul(8).max(1024),
            max_flat_map_regens: 1_000_000,
            failure_persistence: None,
            source_file: None,
            test_name: None,
            fork: false,
            timeout: 0,
            max_shrink_time: 0,
            max_shrink_iters: 100_000,
            max_default_size_range: 100,
            verbose: 0,
            rng_algorithm: RngAlgorithm::ChaCha,
            ..Config::default()
        };
        TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &digest))
    }

    /// Runs `prop` on the law's default number of random cases.
    pub fn check<S>(
        &mut self,
        label: &str,
        strategy: S,
        prop: impl Fn(&S::Value) -> Result<(), TestCaseError>,
    ) -> Checked
    where
        S: Strategy,
        S::Value: Debug,
    {
        let cases = self.default_cases();
        self.check_n(label, cases, strategy, prop)
    }

    /// Runs `prop` on `cases` random cases, shrinking any failure.
    pub fn check_n<S>(
        &mut self,
        label: &str,
        cases: u32,
        strategy: S,
        prop: impl Fn(&S::Value) -> Result<(), TestCaseError>,
    ) -> Checked
    where
        S: Strategy,
        S::Value: Debug,
    {
        let mut runner = self.runner(cases);
        let counted = Cell::new(0u64);
        let failed = Cell::new(false);
        let result = runner.run(&strategy, |v| {
            let r = prop(&v);
            if !failed.get() {
                match &r {
                    Ok(()) => counted.set(counted.get() + 1),
                    Err(TestCaseError::Fail(_)) => {
                        counted.set(counted.get() + 1);
                        failed.set(true);
                    }
                    Err(TestCaseError::Reject(_)) => {}
                }
            }
            r
        });
        self.cases_run += counted.get();
        match result {
            Ok(()) => Ok(()),
            Err(TestError::Fail(reason, value)) => {
                let replayed = matches!(prop(&value), Err(TestCaseError::Fail(_)));
                Err(Stop::Witness(Witness {
                    check: label.to_string(),
                    input: format!("{value:?}"),
                    reason: reason_text(reason.message()),
                    replayed,
                }))
            }
            Err(TestError::Abort(reason)) => Err(Stop::Aborted(format!("{label}: {}", reason.message()))),
        }
    }

    /// Runs `prop` on every item, stopping at the first failure.
    pub fn exhaustive<T: Debug>(
        &mut self,
        label: &str,
        items: impl IntoIterator<Item = T>,
        prop: impl Fn(&T) -> Result<(), TestCaseError>,
    ) -> Checked {
        for item in items {
            match prop(&item) {
                Ok(()) => self.cases_run += 1,
                Err(TestCaseError::Reject(_)) => {}
                Err(TestCaseError::Fail(reason)) => {
                    self.cases_run += 1;
                    return Err(Stop::Witness(Witness {
                        check: label.to_string(),
                        input: format!("{item:?}"),
                        reason: reason_text(reason.message()),
                        replayed: matches!(prop(&item), Err(TestCaseError::Fail(_))),
                    }));
                }
            }
        }
        Ok(())
    }
}
