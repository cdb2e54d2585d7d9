//! Shared helpers for the CLI integration tests.

use std::process::{Command, Output};

pub fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_daehee"))
}

pub fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

pub fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("reading {path}: {e}"))
}

/// Every committed golden rendering and the invocation that must reproduce it
/// byte-for-byte with exit status 0.
pub const GOLDEN_CASES: &[(&[&str], &str)] = &[
    (
        &["table", "--family", "daehee1", "--n", "3", "--k", "3"],
        "table_daehee1_numbers.csv",
    ),
    (
        &["table", "--family", "bernoulli", "--n", "3", "--k", "3"],
        "table_bernoulli_numbers.csv",
    ),
    (
        &["table", "--family", "daehee2", "--n", "3", "--k", "3"],
        "table_daehee2_numbers.csv",
    ),
    (
        &[
            "table", "--family", "daehee1", "--n", "3", "--k", "3", "--x", "sym",
        ],
        "table_daehee1_poly.csv",
    ),
    (
        &[
            "table",
            "--family",
            "bernoulli",
            "--n",
            "3",
            "--k",
            "3",
            "--x",
            "sym",
        ],
        "table_bernoulli_poly.csv",
    ),
    (
        &[
            "table",
            "--family",
            "lambda-daehee1",
            "--n",
            "3",
            "--k",
            "3",
            "--x",
            "sym",
        ],
        "table_lambda_daehee1_poly.csv",
    ),
    (
        &[
            "table",
            "--family",
            "twisted-daehee1",
            "--n",
            "3",
            "--k",
            "3",
            "--x",
            "sym",
        ],
        "table_twisted_daehee1_poly.csv",
    ),
    (
        &[
            "table", "--family", "daehee1", "--n", "3", "--k", "3", "--format", "json",
        ],
        "table_daehee1_numbers.json",
    ),
    (
        &[
            "table", "--family", "daehee1", "--n", "3", "--k", "3", "--format", "markdown",
        ],
        "table_daehee1_numbers.md",
    ),
    (&["matrix", "--kind", "s1", "--n", "5"], "matrix_s1.csv"),
    (
        &["matrix", "--kind", "pascal", "--n", "3"],
        "matrix_pascal.csv",
    ),
    (
        &[
            "matrix", "--kind", "lambda1", "--n", "3", "--format", "json",
        ],
        "matrix_lambda1.json",
    ),
    (
        &["series", "--name", "log1p-over-t", "--order", "3"],
        "series_log1p_over_t.txt",
    ),
    (
        &[
            "series", "--name", "daehee2", "--order", "4", "--k", "2", "--format", "csv",
        ],
        "series_daehee2_k2.csv",
    ),
    (
        &[
            "series",
            "--name",
            "bernoulli",
            "--order",
            "4",
            "--format",
            "json",
        ],
        "series_bernoulli.json",
    ),
    (
        &["verify", "stirling-inverse", "--n", "10"],
        "verify_stirling_inverse.txt",
    ),
    (&["verify", "original-54"], "verify_original_54.txt"),
    (&["verify", "original-67"], "verify_original_67.txt"),
    (
        &[
            "verify",
            "daehee-threeway",
            "--n",
            "6",
            "--k",
            "3",
            "--format",
            "json",
        ],
        "verify_daehee_threeway.json",
    ),
];
