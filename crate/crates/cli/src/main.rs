//! `segsum`: maximum segment sums on lists and trees, prunings, the law
//! suite, and a benchmark of the list algorithms.

mod bench;
mod input;

use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use segsum::horner::{mss_generic, HornerError, MssOptions, Via};
use segsum::pruning::{prune_count, prune_with_guard, PruneError, DEFAULT_GUARD};
use segsum::{ArithError, CollectionKind, Semiring, ShapeKind};
use segsum_laws::{LawReport, Outcome};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use bench::Algo;
use input::Source;

/// Stack for the worker thread. Folds over deep terms recurse once per
/// level, and trees may have up to 10^5 nodes.
const STACK_BYTES: usize = 1 << 30;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Gate(String),
    #[error("integer overflow")]
    Overflow,
    #[error("{0}")]
    Guard(String),
    #[error("{0}")]
    Budget(String),
    #[error("assertion failed: {0}")]
    Assert(String),
    #[error("{0} law(s) did not meet their expectation")]
    Unmet(usize),
    #[error("{0}")]
    Mismatch(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Unmet(_) | CliError::Mismatch(_) | CliError::Internal(_) => 1,
            CliError::Usage(_) | CliError::Parse(_) | CliError::Domain(_) => 2,
            CliError::Gate(_) => 3,
            CliError::Overflow => 4,
            CliError::Guard(_) => 5,
            CliError::Budget(_) | CliError::Assert(_) => 6,
        }
    }
}

impl From<ArithError> for CliError {
    fn from(e: ArithError) -> Self {
        match e {
            ArithError::Overflow => CliError::Overflow,
            ArithError::Domain(_) => CliError::Domain(e.to_string()),
        }
    }
}

impl From<PruneError> for CliError {
    fn from(e: PruneError) -> Self {
        match e {
            PruneError::GuardExceeded { .. } => CliError::Guard(e.to_string()),
            PruneError::Collection(_) => CliError::Internal(e.to_string()),
        }
    }
}

impl From<HornerError> for CliError {
    fn from(e: HornerError) -> Self {
        match e {
            HornerError::Arith(a) => a.into(),
            HornerError::Prune(p) => p.into(),
            HornerError::DistributivityViolation { .. } => CliError::Gate(e.to_string()),
            HornerError::Reduce(_) => CliError::Domain(e.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "segsum", version, about = "Maximum segment sums, generically")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Maximum segment sum (or maximum prefix sum) of an integer list.
    Mss(MssArgs),
    /// The generic segment problem on a term of any shape.
    Tree(TreeArgs),
    /// Enumerate or count the prunings of a term.
    Prune(PruneArgs),
    /// Run the law suite.
    Laws(LawsArgs),
    /// Time the list algorithms against each other.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
struct MssArgs {
    #[arg(long, value_enum, default_value = "linear")]
    algo: Algo,
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct TreeArgs {
    #[arg(long)]
    shape: ShapeKind,
    #[arg(long, default_value = "max-plus")]
    semiring: Semiring,
    #[arg(long, default_value = "bag")]
    monad: CollectionKind,
    #[arg(long, default_value = "scan")]
    via: Via,
    /// Evaluate both sides and require them to agree.
    #[arg(long)]
    check: bool,
    /// The constant `b`; defaults to the multiplicative unit.
    #[arg(long, allow_negative_numbers = true)]
    b: Option<i64>,
    /// Run even when the semiring does not distribute over the monad.
    #[arg(long)]
    force: bool,
    #[arg(long, default_value_t = DEFAULT_GUARD)]
    guard: usize,
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct PruneArgs {
    #[arg(long)]
    shape: ShapeKind,
    #[arg(long, default_value = "bag")]
    monad: CollectionKind,
    /// Print only the number of prunings.
    #[arg(long)]
    count: bool,
    #[arg(long, default_value_t = DEFAULT_GUARD)]
    guard: usize,
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct LawsArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = segsum_laws::DEFAULT_TRIALS)]
    trials: u32,
    /// Run only these laws (repeatable). Optional laws run only when named.
    #[arg(long)]
    id: Vec<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "spec,quadratic,linear")]
    algos: Vec<Algo>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Fail unless spec > quadratic > linear in time at the largest size.
    #[arg(long)]
    assert: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MssReport {
    pub algo: String,
    pub value: i64,
    pub n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeReport {
    pub shape: String,
    pub semiring: String,
    pub monad: String,
    pub b: i64,
    pub via: String,
    pub value: i64,
    pub n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PruneReport {
    pub shape: String,
    pub monad: String,
    pub count: u128,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub prunings: Option<Vec<String>>,
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("reports serialize")
}

fn cmd_mss(args: &MssArgs) -> Result<String, CliError> {
    let xs = input::parse_list(&args.source.text()?)?;
    let value = args.algo.run(&xs)?;
    Ok(if args.json {
        json(&MssReport {
            algo: args.algo.name().into(),
            value,
            n: xs.len(),
        })
    } else {
        value.to_string()
    })
}

fn cmd_tree(args: &TreeArgs) -> Result<String, CliError> {
    let t = input::parse_tree(&args.source.text()?, args.shape)?;
    let s = args.semiring;
    let b = args.b.unwrap_or(s.default_b());
    let opts = MssOptions {
        kind: args.monad,
        force: args.force,
        guard: args.guard,
    };
    let report = |via: &str, value| TreeReport {
        shape: args.shape.to_string(),
        semiring: s.to_string(),
        monad: args.monad.to_string(),
        b,
        via: via.into(),
        value,
        n: t.size(),
    };
    if args.check {
        let scan = mss_generic(s, b, &t, Via::Scan, opts)?;
        let brute = mss_generic(s, b, &t, Via::Brute, opts)?;
        if scan != brute {
            return Err(CliError::Mismatch(format!(
                "scan gave {scan} but brute force gave {brute}"
            )));
        }
        return Ok(if args.json {
            json(&report("both", scan))
        } else {
            format!("scan  {scan}\nbrute {brute}")
        });
    }
    let value = mss_generic(s, b, &t, args.via, opts)?;
    let via = match args.via {
        Via::Scan => "scan",
        Via::Brute => "brute",
    };
    Ok(if args.json {
        json(&report(via, value))
    } else {
        value.to_string()
    })
}

fn cmd_prune(args: &PruneArgs) -> Result<String, CliError> {
    let t = input::parse_tree(&args.source.text()?, args.shape)?;
    let (count, prunings) = if args.count {
        // `prune` never produces the same pruning twice, so the count is
        // the same in every monad and needs no enumeration.
        (prune_count(&t), None)
    } else {
        let ps = prune_with_guard(&t, args.monad, args.guard)?;
        (ps.len() as u128, Some(ps))
    };
    Ok(match (args.json, prunings) {
        (false, None) => count.to_string(),
        (false, Some(ps)) => ps.to_string(),
        (true, ps) => json(&PruneReport {
            shape: args.shape.to_string(),
            monad: args.monad.to_string(),
            count,
            prunings: ps.map(|ps| ps.iter().map(ToString::to_string).collect()),
        }),
    })
}

fn render_laws(reports: &[LawReport]) -> String {
    let outcome = |o: Outcome| match o {
        Outcome::Holds => "holds",
        Outcome::FailsWithWitness => "fails",
        Outcome::Aborted => "aborted",
    };
    let mut out = format!(
        "{:<28} {:>8} {:>9} {:>8}  {}\n",
        "law", "expected", "outcome", "trials", "met"
    );
    for r in reports {
        let expected = match r.expectation {
            segsum_laws::Expectation::Holds => "holds",
            segsum_laws::Expectation::FailsWithWitness => "fails",
        };
        let met = if r.met { "yes" } else { "NO" };
        out.push_str(&format!(
            "{:<28} {:>8} {:>9} {:>8}  {met}\n",
            r.id,
            expected,
            outcome(r.outcome),
            r.trials
        ));
        if let Some(w) = &r.witness {
            out.push_str(&format!("    witness [{}]: {}\n", w.check, w.input));
            for line in w.reason.lines() {
                out.push_str(&format!("      {}\n", line.trim_end()));
            }
        }
        if let Some(note) = &r.note {
            out.push_str(&format!("    note: {note}\n"));
        }
    }
    let met = reports.iter().filter(|r| r.met).count();
    out.push_str(&format!("{met}/{} laws met their expectation", reports.len()));
    out
}

fn cmd_laws(args: &LawsArgs) -> Result<String, CliError> {
    let reports = if args.id.is_empty() {
        segsum_laws::run_all(args.seed, args.trials)
    } else {
        let laws = segsum_laws::select(&args.id).map_err(|e| CliError::Usage(e.to_string()))?;
        segsum_laws::run_laws(&laws, args.seed, args.trials)
    };
    let text = if args.json {
        json(&reports)
    } else {
        render_laws(&reports)
    };
    let unmet = reports.iter().filter(|r| !r.met).count();
    if unmet > 0 {
        print_out(&text);
        return Err(CliError::Unmet(unmet));
    }
    Ok(text)
}

fn cmd_bench(args: &BenchArgs) -> Result<String, CliError> {
    let report = bench::run(&args.algos, &args.sizes, args.seed)?;
    let text = if args.json {
        json(&report)
    } else {
        bench::render(&report)
    };
    if args.assert {
        if let Err(msg) = bench::check_ordering(&report) {
            print_out(&text);
            return Err(CliError::Assert(msg));
        }
    }
    Ok(text)
}

fn print_out(text: &str) {
    let mut stdout = std::io::stdout().lock();
    // A closed pipe is not worth a panic.
    let _ = writeln!(stdout, "{}", text.trim_end());
}

fn run(cli: Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Mss(a) => cmd_mss(a),
        Command::Tree(a) => cmd_tree(a),
        Command::Prune(a) => cmd_prune(a),
        Command::Laws(a) => cmd_laws(a),
        Command::Bench(a) => cmd_bench(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let worker = std::thread::Builder::new()
        .stack_size(STACK_BYTES)
        .spawn(move || run(cli))
        .expect("spawn worker thread");
    match worker.join() {
        Ok(Ok(text)) => {
            print_out(&text);
            ExitCode::SUCCESS
        }
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
        Err(_) => ExitCode::from(1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde::de::DeserializeOwned;

    fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(value: T) {
        let text = json(&value);
        assert_eq!(serde_json::from_str::<T>(&text).unwrap(), value);
    }

    #[test]
    fn reports_round_trip() {
        round_trip(MssReport {
            algo: "linear".into(),
            value: 6,
            n: 10,
        });
        round_trip(TreeReport {
            shape: "htree".into(),
            semiring: "max-plus".into(),
            monad: "bag".into(),
            b: 0,
            via: "both".into(),
            value: 11,
            n: 5,
        });
        round_trip(PruneReport {
            shape: "list".into(),
            monad: "set".into(),
            count: u128::MAX,
            prunings: None,
        });
        round_trip(PruneReport {
            shape: "htree".into(),
            monad: "bag".into(),
            count: 2,
            prunings: Some(vec!["E".into(), "(leaf 2)".into()]),
        });
        round_trip(bench::BenchReport {
            seed: 7,
            rows: vec![bench::Row {
                algo: bench::Algo::Spec,
                n: 3,
                seconds: 1.5e-7,
                value: -1,
            }],
        });
    }

    #[test]
    fn exit_codes_are_distinct_per_kind() {
        assert_eq!(CliError::Usage(String::new()).exit_code(), 2);
        assert_eq!(CliError::Budget(String::new()).exit_code(), 6);
    }
}
