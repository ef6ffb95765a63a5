use std::path::PathBuf;
use std::process::{Command, Output};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use segsum_laws::LawReport;
use serde_json::Value;

const LIST: &str = "4,-5,6,-3,2,0,-4,5,-6,5";
const FORK: &str = "(fork 1 (leaf 2) (fork 3 (leaf 1) (leaf 4)))";

fn segsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_segsum"))
        .args(args)
        .output()
        .expect("run segsum")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

/// Runs and returns (exit code, trimmed stdout).
fn run(args: &[&str]) -> (i32, String) {
    let o = segsum(args);
    (o.status.code().expect("exited normally"), stdout(&o))
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("segsum-{}-{name}", std::process::id()));
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn negative_leading_inputs_are_not_flags() {
    assert_eq!(run(&["mss", "--input", "-5,3,-1,4"]), (0, "6".into()));
    assert_eq!(run(&["mss", "--input", "-5"]), (0, "0".into()));
}

#[test]
fn mss_algorithms_on_the_fixed_list() {
    for algo in ["spec", "quadratic", "linear"] {
        assert_eq!(run(&["mss", "--algo", algo, "--input", LIST]), (0, "6".into()));
    }
    assert_eq!(run(&["mss", "--algo", "prefix", "--input", LIST]), (0, "5".into()));
    assert_eq!(run(&["mss", "--algo", "linear", "--input", ""]), (0, "0".into()));
}

#[test]
fn mss_json_report() {
    let (code, out) = run(&["mss", "--algo", "quadratic", "--input", LIST, "--json"]);
    assert_eq!(code, 0);
    assert_eq!(out, r#"{"algo":"quadratic","value":6,"n":10}"#);
}

#[test]
fn mss_reads_files() {
    let p = temp_file("list.txt", "4 -5 6\n-3 2 0 -4 5 -6 5\n");
    assert_eq!(run(&["mss", "--file", p.to_str().unwrap()]), (0, "6".into()));
    let (code, _) = run(&["mss", "--file", "/nonexistent/segsum"]);
    assert_eq!(code, 2);
}

#[test]
fn algorithms_agree_on_random_lists() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..100 {
        let n = rng.random_range(0..=40);
        let xs: Vec<String> = (0..n).map(|_| rng.random_range(-50..=50).to_string()).collect();
        let input = xs.join(",");
        let outs: Vec<(i32, String)> = ["spec", "quadratic", "linear"]
            .iter()
            .map(|a| run(&["mss", "--algo", a, "--input", &input]))
            .collect();
        assert_eq!(outs[0].0, 0);
        assert!(outs.iter().all(|o| *o == outs[0]), "{input}: {outs:?}");
    }
}

#[test]
fn mss_errors_have_their_statuses() {
    assert_eq!(run(&["mss", "--input", "1,two"]).0, 2);
    assert_eq!(run(&["mss", "--input", "9223372036854775807,1"]).0, 4);
    assert_eq!(run(&["mss"]).0, 2);
    assert_eq!(run(&["mss", "--algo", "quartic", "--input", "1"]).0, 2);
    assert_eq!(run(&["mss", "--input", "1", "--file", "x"]).0, 2);
}

#[test]
fn tree_examples() {
    assert_eq!(
        run(&["tree", "--shape", "htree", "--semiring", "max-plus", "--input", FORK]),
        (0, "11".into())
    );
    assert_eq!(
        run(&[
            "tree",
            "--shape",
            "htree",
            "--semiring",
            "max-plus",
            "--input",
            "(leaf -7)"
        ]),
        (0, "0".into())
    );
    assert_eq!(
        run(&[
            "tree",
            "--shape",
            "htree",
            "--semiring",
            "max-plus",
            "--via",
            "brute",
            "--input",
            FORK
        ]),
        (0, "11".into())
    );
    assert_eq!(
        run(&["tree", "--shape", "htree", "--check", "--input", FORK]),
        (0, "scan  11\nbrute 11".into())
    );
}

#[test]
fn tree_json_report() {
    let (code, out) = run(&[
        "tree",
        "--shape",
        "list",
        "--input",
        "(cons 2 (cons -1 (cons 3 nil)))",
        "--json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], 4);
    assert_eq!(v["n"], 4);
    assert_eq!(v["semiring"], "max-plus");
    assert_eq!(v["monad"], "bag");
    assert_eq!(v["via"], "scan");
}

#[test]
fn the_distributivity_gate_needs_force() {
    let args = [
        "tree",
        "--shape",
        "htree",
        "--semiring",
        "plus-times",
        "--monad",
        "set",
        "--input",
        FORK,
    ];
    let o = segsum(&args);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("does not distribute"));
    let mut forced = args.to_vec();
    forced.push("--force");
    assert_eq!(run(&forced).0, 0);
    for s in ["max-plus", "min-plus"] {
        assert_eq!(
            run(&[
                "tree",
                "--shape",
                "htree",
                "--semiring",
                s,
                "--monad",
                "set",
                "--input",
                FORK
            ])
            .0,
            0
        );
    }
}

#[test]
fn tree_errors_have_their_statuses() {
    assert_eq!(run(&["tree", "--shape", "list", "--input", "(leaf 1)"]).0, 2);
    assert_eq!(run(&["tree", "--shape", "htree", "--input", "(leaf"]).0, 2);
    assert_eq!(
        run(&["tree", "--shape", "htree", "--semiring", "bool-or-and", "--input", FORK]).0,
        2
    );
    assert_eq!(
        run(&["tree", "--shape", "htree", "--via", "brute", "--guard", "10", "--input", FORK]).0,
        5
    );
    assert_eq!(
        run(&[
            "tree",
            "--shape",
            "htree",
            "--semiring",
            "plus-times",
            "--input",
            "(leaf 9223372036854775807)",
            "--b",
            "2"
        ])
        .0,
        4
    );
    assert_eq!(run(&["tree", "--shape", "squiggle", "--input", "nil"]).0, 2);
}

#[test]
fn the_constant_b_is_configurable() {
    assert_eq!(
        run(&["tree", "--shape", "htree", "--b", "-3", "--input", "(leaf 5)"]),
        (0, "2".into())
    );
    assert_eq!(
        run(&["tree", "--shape", "htree", "--input", "(leaf 5)"]),
        (0, "5".into())
    );
}

#[test]
fn prune_examples() {
    assert_eq!(
        run(&["prune", "--shape", "htree", "--count", "--input", FORK]),
        (0, "11".into())
    );
    assert_eq!(
        run(&["prune", "--shape", "htree", "--input", "(leaf 2)"]),
        (0, "<E,(leaf 2)>".into())
    );
    assert_eq!(
        run(&[
            "prune",
            "--shape",
            "list",
            "--count",
            "--input",
            "(cons 1 (cons 2 nil))"
        ]),
        (0, "4".into())
    );
    assert_eq!(
        run(&["prune", "--shape", "list", "--monad", "list", "--input", "(cons 1 nil)"]),
        (0, "[E,(cons 1 E),(cons 1 nil)]".into())
    );
    assert_eq!(
        run(&[
            "prune",
            "--shape",
            "etree",
            "--monad",
            "set",
            "--input",
            "(bin (tip 1) (tip 1))"
        ]),
        (
            0,
            "{E,(bin E E),(bin E (tip 1)),(bin (tip 1) E),(bin (tip 1) (tip 1))}".into()
        )
    );
}

#[test]
fn prune_guard_and_json() {
    assert_eq!(
        run(&["prune", "--shape", "htree", "--guard", "5", "--input", FORK]).0,
        5
    );
    let (code, out) = run(&["prune", "--shape", "htree", "--input", "(leaf 2)", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        r#"{"shape":"htree","monad":"bag","count":2,"prunings":["E","(leaf 2)"]}"#
    );
    let (_, out) = run(&["prune", "--shape", "htree", "--count", "--input", FORK, "--json"]);
    assert_eq!(out, r#"{"shape":"htree","monad":"bag","count":11}"#);
}

#[test]
fn large_inputs_within_the_limits_work() {
    let n = 100_000;
    let mut tree = "(cons 1 ".repeat(n - 1);
    tree.push_str("nil");
    tree.push_str(&")".repeat(n - 1));
    let p = temp_file("deep.txt", &tree);
    assert_eq!(
        run(&["tree", "--shape", "list", "--file", p.to_str().unwrap()]),
        (0, (n - 1).to_string())
    );
    assert_eq!(
        run(&["prune", "--shape", "list", "--count", "--file", p.to_str().unwrap()]),
        (0, (n + 1).to_string())
    );
}

#[test]
fn oversized_inputs_are_usage_errors() {
    let big = "0,".repeat(1_000_001);
    let p = temp_file("big-list.txt", &big);
    assert_eq!(run(&["mss", "--file", p.to_str().unwrap()]).0, 2);

    let n = 100_001;
    let mut tree = "(cons 1 ".repeat(n - 1);
    tree.push_str("nil");
    tree.push_str(&")".repeat(n - 1));
    let p = temp_file("big-tree.txt", &tree);
    assert_eq!(run(&["tree", "--shape", "list", "--file", p.to_str().unwrap()]).0, 2);
}

#[test]
fn laws_by_id() {
    let (code, out) = run(&["laws", "--id", "set-plus-nonidempotent"]);
    assert_eq!(code, 0);
    assert!(out.contains("witness"), "{out}");
    assert!(out.contains("{1}"), "{out}");
    assert_eq!(run(&["laws", "--id", "nosuch"]).0, 2);
    let (code, out) = run(&["laws", "--id", "join-zero-axiom", "--trials", "20"]);
    assert_eq!(code, 0);
    assert!(out.contains("join-zero-axiom"));
}

#[test]
fn law_reports_round_trip_through_json() {
    let (code, out) = run(&[
        "laws",
        "--id",
        "poly-horner",
        "--id",
        "set-plus-nonidempotent",
        "--json",
        "--trials",
        "30",
    ]);
    assert_eq!(code, 0);
    let reports: Vec<LawReport> = serde_json::from_str(&out).unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(serde_json::to_string(&reports).unwrap(), out);
    let v: Value = serde_json::from_str(&out).unwrap();
    for r in v.as_array().unwrap() {
        for key in ["id", "trials", "outcome", "witness"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn json_outputs_round_trip() {
    let outputs = [
        run(&["mss", "--input", LIST, "--json"]).1,
        run(&["tree", "--shape", "htree", "--input", FORK, "--json", "--check"]).1,
        run(&["prune", "--shape", "htree", "--input", FORK, "--json"]).1,
        run(&["bench", "--sizes", "50", "--algos", "linear", "--json"]).1,
    ];
    for out in outputs {
        let v: Value = serde_json::from_str(&out).unwrap();
        let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(again, v);
    }
}

#[test]
fn bench_validation_and_budget() {
    assert_eq!(run(&["bench", "--sizes", "800,400"]).0, 2);
    assert_eq!(run(&["bench", "--sizes", "0"]).0, 2);
    assert_eq!(run(&["bench", "--sizes", "100000", "--algos", "spec"]).0, 6);
    let (code, out) = run(&["bench", "--sizes", "100", "--algos", "linear"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2, "{out}");
    assert!(out.lines().nth(1).unwrap().starts_with("linear"));
}

#[test]
fn bench_json_has_one_row_per_algorithm_and_size() {
    let (code, out) = run(&["bench", "--sizes", "20,40", "--algos", "quadratic,linear", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0]["algo"], "quadratic");
    assert_eq!(rows[3]["n"], 40);
    assert_eq!(rows[0]["value"], rows[2]["value"]);
}
