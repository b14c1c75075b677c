mod common;

use std::io::Write;
use std::process::{Command, Output};

use common::{canonical_matrix_text, CYCLE_MATRIX};
use serde_json::Value;

fn quadpres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadpres"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn matrix_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn classify_json(args: &[&str]) -> Value {
    let o = quadpres(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn classify_prime_set_json() {
    let v = classify_json(&["classify", "--p", "3", "--primes", "31,37,43,67", "--json"]);
    assert_eq!(v["orbit"], 1);
    assert_eq!(v["mild"], true);
    assert_eq!(v["methods"]["agree"], true);
    let o = quadpres(&["classify", "--p", "3", "--primes", "31,37,43,67", "--json"]);
    let text = stdout(&o);
    let keys: Vec<&str> = text
        .lines()
        .filter_map(|l| l.strip_prefix("  \""))
        .filter_map(|l| l.split('"').next())
        .collect();
    assert_eq!(
        keys,
        [
            "input",
            "p",
            "orbit",
            "mild",
            "dims",
            "witness",
            "complement",
            "linking",
            "methods",
            "notes"
        ]
    );
}

#[test]
fn classify_prime_set_text() {
    let o = quadpres(&["classify", "--p", "3", "--primes", "67,79,97,127"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("orbit: 2"), "{s}");
    assert!(s.contains("mild: no"), "{s}");
}

#[test]
fn classify_all_examples_with_verify() {
    for (primes, orbit) in [
        ("31,37,43,67", 1),
        ("67,79,97,127", 2),
        ("61,73,79,97", 3),
        ("31,37,61,67", 4),
    ] {
        let v = classify_json(&[
            "classify", "--p", "3", "--primes", primes, "--verify", "--json",
        ]);
        assert_eq!(v["orbit"], orbit);
        for route in ["reduction", "invariants", "quadric"] {
            assert_eq!(v["methods"][route], orbit);
        }
    }
}

#[test]
fn classify_cycle_matrix() {
    let f = matrix_file(CYCLE_MATRIX);
    let v = classify_json(&["classify", "--matrix", f.path().to_str().unwrap(), "--json"]);
    assert_eq!(v["orbit"], 1);
    assert_eq!(v["mild"], true);
}

#[test]
fn classify_rank_deficient_matrix() {
    let f = matrix_file("p 3\n1 0 0 0 0 0\n2 0 0 0 0 0\n0 1 0 0 0 0\n0 0 1 0 0 0\n");
    let v = classify_json(&["classify", "--matrix", f.path().to_str().unwrap(), "--json"]);
    assert_eq!(v["orbit"], Value::Null);
    assert_eq!(v["mild"], false);
    assert!(v["notes"][0]
        .as_str()
        .unwrap()
        .contains("CupProductNotSurjective"));
}

#[test]
fn json_is_byte_identical_across_runs() {
    let args = [
        "classify",
        "--p",
        "3",
        "--primes",
        "61,73,79,97",
        "--verify",
        "--json",
    ];
    assert_eq!(quadpres(&args).stdout, quadpres(&args).stdout);
}

#[test]
fn input_errors_exit_1() {
    let o = quadpres(&["classify", "--p", "3", "--primes", "31,37,41,67"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("q3 = 41"));
    let o = quadpres(&["classify", "--p", "3", "--primes", "31,31,43,67"]);
    assert_eq!(o.status.code(), Some(1));
    let o = quadpres(&["classify", "--p", "4", "--primes", "31,37,43,67"]);
    assert_eq!(o.status.code(), Some(1));
    let f = matrix_file("p 3\n1 0 0\n");
    let o = quadpres(&["classify", "--matrix", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let o = quadpres(&["classify", "--matrix", "/nonexistent/relators.txt"]);
    assert_eq!(o.status.code(), Some(1));
    let o = quadpres(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn dims_examples() {
    for (orbit, c, line, verdict) in [
        (1, "4", "4 2 4 6", "yes"),
        (3, "4", "4 2 4 7", "no"),
        (2, "3", "4 2 5", "no"),
    ] {
        let f = matrix_file(canonical_matrix_text(orbit));
        let o = quadpres(&[
            "dims",
            "--matrix",
            f.path().to_str().unwrap(),
            "--max-degree",
            c,
        ]);
        assert_eq!(o.status.code(), Some(0));
        let s = stdout(&o);
        let mut lines = s.lines();
        assert_eq!(lines.next(), Some(line));
        assert_eq!(
            lines.next(),
            Some(format!("strongly-free: {verdict}").as_str())
        );
    }
    let f = matrix_file(canonical_matrix_text(1));
    let o = quadpres(&[
        "dims",
        "--matrix",
        f.path().to_str().unwrap(),
        "--max-degree",
        "7",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn search_examples() {
    let o = quadpres(&["search", "--p", "3", "--max-prime", "70", "--orbit", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "31 37 61 67 orbit 4"));

    let o = quadpres(&["search", "--p", "3", "--max-prime", "20"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());

    let o = quadpres(&[
        "search",
        "--p",
        "3",
        "--max-prime",
        "100",
        "--orbit",
        "3",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let hits: Vec<Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert!(hits
        .iter()
        .any(|h| h["primes"]["q"] == serde_json::json!([61, 73, 79, 97])));
    assert!(hits.iter().all(|h| h["orbit"] == 3));

    let o = quadpres(&["search", "--p", "3", "--max-prime", "130", "--limit", "5"]);
    assert_eq!(stdout(&o).lines().count(), 5);

    let o = quadpres(&["search", "--p", "3", "--max-prime", "1000000"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn enumerate_examples() {
    for (p, dim, orbits) in [("3", "2", 4), ("3", "1", 2), ("5", "1", 2)] {
        let o = quadpres(&["enumerate", "--p", p, "--dim", dim]);
        assert_eq!(o.status.code(), Some(0));
        let s = stdout(&o);
        assert!(s.contains(&format!("orbits: {orbits}")), "{s}");
    }
    let o = quadpres(&["enumerate", "--p", "3", "--dim", "2"]);
    assert!(stdout(&o).contains("subspaces: 11011"));
    let o = quadpres(&["enumerate", "--p", "13", "--dim", "2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn poincare_examples() {
    let run = |orbit, c: &str| {
        let f = matrix_file(canonical_matrix_text(orbit));
        let o = quadpres(&[
            "poincare",
            "--matrix",
            f.path().to_str().unwrap(),
            "--max-degree",
            c,
        ]);
        assert_eq!(o.status.code(), Some(0));
        stdout(&o)
    };
    assert!(run(1, "5").contains("residual: 0 0 0 0 0 0"));
    assert!(run(2, "3").contains("first nonzero: t^3"));
    assert!(run(3, "4").contains("first nonzero: t^4"));
}
