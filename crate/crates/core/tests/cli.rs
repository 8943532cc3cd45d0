//! End-to-end runs of the `wtrans` binary.

use std::process::{Command, Output};

use wtrans::report::ReportDocument;

fn wtrans(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wtrans"))
        .args(args)
        .env_remove("WTRANS_WORKERS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> ReportDocument {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = wtrans(&full);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let doc = ReportDocument::from_json(&text).unwrap();
    assert_eq!(doc.to_json().unwrap(), text.trim_end());
    doc
}

#[test]
fn orbit_weights_lists_ten_solutions() {
    let doc = json(&["orbit-weights", "--order", "1092", "--periods", "2,3,7", "--target", "2730"]);
    let text = serde_json::to_string(&doc.sections).unwrap();
    assert!(text.contains(r#""label":"count","value":{"integer":10}"#), "{text}");
}

#[test]
fn every_command_round_trips() {
    json(&["hyperelliptic", "--max-genus", "14"]);
    json(&["hurwitz", "--max-q", "1000"]);
    json(&["psl-verdict", "--q", "13", "--t", "7"]);
    json(&["psl-verdict", "--q", "997", "--t", "499"]);
    json(&["modular", "--p", "7"]);
    json(&["bielliptic-scan", "--to", "1000"]);
    json(&["fermat", "--n", "6"]);
    json(&["validate-tables"]);
    json(&["census", "--q", "9"]);
}

#[test]
fn text_output_is_default() {
    let out = wtrans(&["fermat", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("fermat"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["fermat"],
        &["fermat", "--n", "3"],
        &["census", "--q", "12"],
        &["census", "--q", "64"],
        &["psl-verdict", "--q", "997", "--t", "7"],
        &["orbit-weights", "--order", "1092", "--periods", "2,3,7", "--target", "2730", "--mask", "w9=0"],
    ] {
        let out = wtrans(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn worker_count_from_environment() {
    let run = |workers: &str| {
        Command::new(env!("CARGO_BIN_EXE_wtrans"))
            .args(["--format", "json", "bielliptic-scan", "--to", "2000"])
            .env("WTRANS_WORKERS", workers)
            .output()
            .unwrap()
    };
    let one = run("1");
    let four = run("4");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(run("zero").status.code(), Some(2));
}
