//! Wall-clock comparison of the list algorithms.

use std::hint::black_box;
use std::time::{Duration, Instant};

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use segsum::horner::{max_prefix_sum, mss_linear, mss_quadratic, mss_spec};
use segsum::ArithError;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Repetitions per row; the median is reported.
pub const REPETITIONS: usize = 3;
/// Refuse runs whose estimated inner-loop steps exceed this.
pub const OPS_BUDGET: f64 = 2e10;
/// Each repetition loops the algorithm until at least this much time passes,
/// so fast algorithms are not lost in timer noise.
const MIN_SAMPLE: Duration = Duration::from_millis(20);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algo {
    Spec,
    Quadratic,
    Linear,
    Prefix,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Spec => "spec",
            Algo::Quadratic => "quadratic",
            Algo::Linear => "linear",
            Algo::Prefix => "prefix",
        }
    }

    pub fn run(self, xs: &[i64]) -> Result<i64, ArithError> {
        match self {
            Algo::Spec => mss_spec(xs),
            Algo::Quadratic => mss_quadratic(xs),
            Algo::Linear => mss_linear(xs),
            Algo::Prefix => max_prefix_sum(xs),
        }
    }

    /// Rough count of inner-loop steps for one call on `n` elements.
    pub fn ops(self, n: usize) -> f64 {
        let n = n as f64;
        match self {
            Algo::Spec => n * (n + 1.0) * (n + 2.0) / 6.0,
            Algo::Quadratic => n * (n + 1.0) / 2.0,
            Algo::Linear | Algo::Prefix => n,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub algo: Algo,
    pub n: usize,
    /// Median seconds per call.
    pub seconds: f64,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub seed: u64,
    pub rows: Vec<Row>,
}

impl BenchReport {
    pub fn time(&self, algo: Algo, n: usize) -> Option<f64> {
        self.rows.iter().find(|r| r.algo == algo && r.n == n).map(|r| r.seconds)
    }
}

pub fn validate_sizes(sizes: &[usize]) -> Result<(), CliError> {
    if sizes.is_empty() {
        return Err(CliError::Usage("--sizes needs at least one size".into()));
    }
    if sizes.contains(&0) {
        return Err(CliError::Usage("sizes must be positive".into()));
    }
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Usage("sizes must be strictly ascending".into()));
    }
    Ok(())
}

/// A seeded list of `n` labels in [-100, 100].
pub fn random_list(seed: u64, n: usize) -> Vec<i64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ n as u64);
    (0..n).map(|_| rng.random_range(-100..=100)).collect()
}

fn time_one(algo: Algo, xs: &[i64]) -> Result<(f64, i64), CliError> {
    let mut samples = Vec::with_capacity(REPETITIONS);
    let mut value = 0;
    for _ in 0..REPETITIONS {
        let start = Instant::now();
        let mut calls = 0u32;
        while calls == 0 || start.elapsed() < MIN_SAMPLE {
            value = black_box(algo.run(black_box(xs)))?;
            calls += 1;
        }
        samples.push(start.elapsed().as_secs_f64() / f64::from(calls));
    }
    samples.sort_by(f64::total_cmp);
    Ok((samples[REPETITIONS / 2], value))
}

pub fn run(algos: &[Algo], sizes: &[usize], seed: u64) -> Result<BenchReport, CliError> {
    validate_sizes(sizes)?;
    let estimate: f64 = algos
        .iter()
        .flat_map(|a| sizes.iter().map(move |&n| a.ops(n)))
        .sum::<f64>()
        * REPETITIONS as f64;
    if estimate > OPS_BUDGET {
        return Err(CliError::Budget(format!(
            "about {estimate:.2e} steps requested, over the budget of {OPS_BUDGET:.0e}"
        )));
    }
    let mut rows = Vec::new();
    for &algo in algos {
        for &n in sizes {
            let xs = random_list(seed, n);
            let (seconds, value) = time_one(algo, &xs)?;
            rows.push(Row {
                algo,
                n,
                seconds,
                value,
            });
        }
    }
    Ok(BenchReport { seed, rows })
}

/// At the largest size, the slower-growing algorithm must be faster:
/// spec > quadratic > linear, for whichever of them were run.
pub fn check_ordering(report: &BenchReport) -> Result<(), String> {
    let n = report.rows.iter().map(|r| r.n).max().unwrap_or(0);
    let ranked: Vec<(Algo, f64)> = [Algo::Spec, Algo::Quadratic, Algo::Linear]
        .into_iter()
        .filter_map(|a| report.time(a, n).map(|t| (a, t)))
        .collect();
    for w in ranked.windows(2) {
        let ((a, ta), (b, tb)) = (w[0], w[1]);
        if ta <= tb {
            return Err(format!(
                "at n = {n}, {} took {ta:.3e}s but {} took {tb:.3e}s",
                a.name(),
                b.name()
            ));
        }
    }
    Ok(())
}

pub fn render(report: &BenchReport) -> String {
    let mut out = format!("{:<10} {:>9} {:>14} {:>8}\n", "algo", "n", "median (s)", "ratio");
    for (i, r) in report.rows.iter().enumerate() {
        let ratio = match i.checked_sub(1).map(|j| &report.rows[j]) {
            Some(prev) if prev.algo == r.algo => format!("{:.2}", r.seconds / prev.seconds),
            _ => "-".into(),
        };
        out.push_str(&format!(
            "{:<10} {:>9} {:>14.6e} {:>8}\n",
            r.algo.name(),
            r.n,
            r.seconds,
            ratio
        ));
    }
    out
}
