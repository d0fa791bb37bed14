use std::process::Command as Process;

use clap::Parser;

use chordcount::args::Cli;
use chordcount::report::CountJson;
use chordcount::{bfile, run, CmdOutput, ExitCode};

fn exec(args: &[&str]) -> CmdOutput {
    let cli = Cli::try_parse_from(std::iter::once("chordcount").chain(args.iter().copied()))
        .expect("arguments parse");
    run(&cli)
}

#[test]
fn count_examples() {
    let out = exec(&[
        "count", "--n", "20", "--k", "3", "--q", "3", "--method", "paired",
    ]);
    assert_eq!(out.code, ExitCode::Success);
    assert_eq!(out.stdout, "P(C_20^(3), 3) = 120  [paired]\n");

    let out = exec(&[
        "count",
        "--n",
        "33",
        "--method",
        "closed_form",
        "--format",
        "json",
    ]);
    let rows: Vec<CountJson> = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(rows[0].count, "7279668");
    assert_eq!(rows[0].method, "closed_form");

    let out = exec(&["count", "--n", "7", "--q", "1", "--method", "brute"]);
    assert!(out.stdout.contains("= 0  [brute]"));
}

#[test]
fn count_threshold_errors_name_an_engine() {
    let out = exec(&["count", "--n", "12", "--method", "window"]);
    assert_eq!(out.code, ExitCode::Parameter);
    assert!(out.stderr.contains("use paired"), "{}", out.stderr);

    let out = exec(&["count", "--n", "12", "--k", "2", "--method", "closed_form"]);
    assert_eq!(out.code, ExitCode::Parameter);
    assert!(out.stderr.contains("use dp"), "{}", out.stderr);

    let out = exec(&["count", "--n", "6", "--method", "paired"]);
    assert_eq!(out.code, ExitCode::Parameter);
    assert!(out.stderr.contains("use brute"), "{}", out.stderr);

    let out = exec(&["count", "--n", "40", "--method", "brute"]);
    assert_eq!(out.code, ExitCode::Parameter);

    let out = exec(&[
        "count",
        "--n",
        "19",
        "--method",
        "brute",
        "--limits",
        "brute_n=19",
    ]);
    assert_eq!(out.code, ExitCode::Success);
    assert!(out.stdout.contains("= 6498"));
}

#[test]
fn series_first_twelve_with_all_methods() {
    let out = exec(&[
        "series", "--range", "6..17", "--method", "all", "--format", "bfile",
    ]);
    assert_eq!(out.code, ExitCode::Success, "{}", out.stderr);
    let values: Vec<String> = bfile::parse(&out.stdout)
        .unwrap()
        .into_iter()
        .map(|(_, a)| a.to_string())
        .collect();
    assert_eq!(
        values,
        ["42", "0", "0", "18", "186", "66", "0", "234", "930", "750", "0", "2244"]
    );
    assert!(out.stderr.contains("note: n=6: skipped window"));
}

#[test]
fn series_csv_keeps_zeros() {
    let out = exec(&["series", "--range", "6-9", "--format", "csv"]);
    let mut lines = out.stdout.lines();
    assert_eq!(lines.next(), Some("n,k,q,count,method,residue_mod4"));
    assert_eq!(lines.next(), Some("6,3,3,42,brute,2"));
    assert_eq!(lines.next(), Some("7,3,3,0,closed_form,3"));
    assert_eq!(lines.next(), Some("8,3,3,0,paired,0"));
}

#[test]
fn series_reference_check_agrees() {
    let out = exec(&["series", "--range", "6..12", "--check-reference"]);
    assert_eq!(out.code, ExitCode::Success);
    let out = exec(&[
        "series",
        "--range",
        "6..8",
        "--k",
        "2",
        "--q",
        "3",
        "--check-reference",
    ]);
    assert_eq!(out.code, ExitCode::Success);
    assert!(!out.stdout.contains("MISMATCH"));
}

#[test]
fn series_other_parameters_cross_check() {
    let out = exec(&[
        "series", "--range", "5..14", "--k", "2", "--q", "4", "--method", "all",
    ]);
    assert_eq!(out.code, ExitCode::Success, "{}{}", out.stdout, out.stderr);
    assert!(!out.stdout.contains("MISMATCH"));
}

#[test]
fn spectrum_reports() {
    let out = exec(&["spectrum", "--k", "3", "--q", "3"]);
    assert_eq!(out.code, ExitCode::Success);
    assert!(out.stdout.contains("factor x^2 - x - 1: divides"));
    assert!(out.stdout.contains("factor x^2 + x + 1: divides"));
    assert!(out.stdout.contains("factor (x^3 + x^2 + 1)^2: divides"));
    assert!(out.stdout.contains("cofactor: x^2 - 2x + 1"));
    assert!(out
        .stdout
        .contains("minimal recurrence order of tr(A^n), odd n: 8"));

    let out = exec(&["spectrum", "--k", "2", "--q", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["states"], 6);
    assert_eq!(v["char_poly"], "x^6 - 2x^3 + 1");
    assert_eq!(v["recurrence_holds"], true);

    let out = exec(&["spectrum", "--paired", "--format", "json"]);
    assert_eq!(out.code, ExitCode::Success);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["states"], 54);
    assert_eq!(v["recurrence_order"], 54);
    assert_eq!(v["recurrence_holds"], true);
    assert_eq!(v["coefficients"].as_array().unwrap().len(), 55);
}

#[test]
fn spectrum_dump_is_stable() {
    let a = exec(&["spectrum", "--dump"]).stdout;
    assert_eq!(a.lines().next(), Some("0: 0,1,0 -> 4 5"));
    assert_eq!(a, exec(&["spectrum", "--dump"]).stdout);
    let p = exec(&["spectrum", "--paired", "--dump"]).stdout;
    assert_eq!(p.lines().count(), 54);
}

#[test]
fn schedule_ranks_and_validates() {
    let out = exec(&[
        "schedule", "--n", "20", "--k", "3", "--index", "119", "--format", "json",
    ]);
    assert_eq!(out.code, ExitCode::Success, "{}", out.stderr);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["feasible_configurations"], "120");
    assert_eq!(v["labels"].as_str().unwrap().len(), 20);

    let out = exec(&[
        "schedule",
        "--n",
        "20",
        "--assignment",
        "ABABABCBCACABABCBCAC",
    ]);
    assert_eq!(out.code, ExitCode::Success);
    assert!(out.stdout.contains("valid: proper on C_20^(3)"));

    let out = exec(&["schedule", "--n", "20", "--assignment", "ABAB"]);
    assert_eq!(out.code, ExitCode::Parameter);

    let out = exec(&["schedule", "--n", "12", "--index", "0"]);
    assert_eq!(out.code, ExitCode::Infeasible);

    let out = exec(&["schedule", "--n", "20", "--index", "120"]);
    assert_eq!(out.code, ExitCode::Parameter);
}

#[test]
fn bounds_examples() {
    let out = exec(&["bounds", "--n", "7", "--k", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["chi"], 4);
    assert_eq!(v["alpha"], 2);
    let notes = v["annotations"].to_string();
    assert!(notes.contains("reported alpha = 3"), "{notes}");
    assert!(notes.contains("{0, 4} is an edge"), "{notes}");

    let out = exec(&["bounds", "--n", "9"]);
    assert!(out.stdout.contains("reported chi = 3 confirmed"));

    let out = exec(&["bounds", "--n", "10", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["bipartite"], true);
    assert_eq!(v["chi"], 2);

    let out = exec(&["bounds", "--n", "61"]);
    assert_eq!(out.code, ExitCode::Parameter);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_chordcount");
    let status = |args: &[&str]| Process::new(bin).args(args).output().unwrap();

    let ok = status(&["count", "--n", "10"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(
        String::from_utf8_lossy(&ok.stdout),
        "P(C_10^(3), 3) = 186  [paired]\n"
    );

    assert_eq!(
        status(&["count", "--n", "8", "--method", "closed_form"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        status(&["count", "--n", "8", "--method", "nope"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(status(&["schedule", "--n", "16"]).status.code(), Some(4));
}
