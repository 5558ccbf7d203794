//! End-to-end tests of the command-line front end: cache semantics, exit
//! codes, and output plumbing through the real binary.

use braidrep::cli::{run, Command, KindFilter, OutputFormat, RunConfig};
use braidrep::golden::{K3_S3_TABLE, K4_S4_EXTENSION};
use std::fs;
use std::process::Command as Proc;

fn bin() -> Proc {
    Proc::new(env!("CARGO_BIN_EXE_braidrep"))
}

fn cached_cfg(command: Command, dir: &std::path::Path) -> RunConfig {
    let mut cfg = RunConfig::new(command, OutputFormat::Json);
    cfg.cache_dir = Some(dir.to_path_buf());
    cfg
}

#[test]
fn second_run_is_served_from_cache_bit_identical() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = cached_cfg(
        Command::Cycles {
            r: 4,
            kind: KindFilter::All,
        },
        tmp.path(),
    );
    let first = run(&cfg).unwrap();
    let entries: Vec<_> = fs::read_dir(tmp.path()).unwrap().collect();
    assert_eq!(entries.len(), 1, "one cache entry after the first run");
    let mtime = fs::metadata(tmp.path().join("cycles-n3-r4.cache"))
        .unwrap()
        .modified()
        .unwrap();
    let second = run(&cfg).unwrap();
    assert_eq!(first.output, second.output);
    let mtime_after = fs::metadata(tmp.path().join("cycles-n3-r4.cache"))
        .unwrap()
        .modified()
        .unwrap();
    assert_eq!(mtime, mtime_after, "cache entry untouched on a hit");
}

#[test]
fn no_cache_leaves_directory_untouched() {
    let tmp = tempfile::tempdir().unwrap();
    let mut cfg = cached_cfg(
        Command::Cycles {
            r: 3,
            kind: KindFilter::All,
        },
        tmp.path(),
    );
    cfg.no_cache = true;
    run(&cfg).unwrap();
    assert_eq!(fs::read_dir(tmp.path()).unwrap().count(), 0);
}

#[test]
fn corrupt_cache_entry_recomputed_and_overwritten() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = cached_cfg(
        Command::Census { n: 3, r: 3 },
        tmp.path(),
    );
    let first = run(&cfg).unwrap();
    let path = tmp.path().join("census-n3-r3.cache");
    let body = fs::read_to_string(&path).unwrap();
    fs::write(&path, body.replace("26", "27")).unwrap();
    let second = run(&cfg).unwrap();
    assert_eq!(first.output, second.output, "recomputed, not trusted");
    let healed = fs::read_to_string(&path).unwrap();
    assert_eq!(healed, body, "entry overwritten with a valid one");
}

#[test]
fn stale_version_entry_recomputed() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = cached_cfg(
        Command::Cycles {
            r: 2,
            kind: KindFilter::All,
        },
        tmp.path(),
    );
    run(&cfg).unwrap();
    let path = tmp.path().join("cycles-n3-r2.cache");
    let body = fs::read_to_string(&path).unwrap();
    let stale = body.replacen(
        concat!("braidrep-cache v", env!("CARGO_PKG_VERSION")),
        "braidrep-cache v0.0.0",
        1,
    );
    fs::write(&path, &stale).unwrap();
    let out = run(&cfg).unwrap();
    assert_eq!(out.status, 0);
    let healed = fs::read_to_string(&path).unwrap();
    assert_eq!(healed, body, "stale entry replaced by a current one");
}

#[test]
fn binary_cycles_type2_paper_matches_fixture() {
    let out = bin()
        .args(["cycles", "--r", "3", "--type", "II", "--format", "paper", "--no-cache"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), K3_S3_TABLE);
}

#[test]
fn binary_extend_paper_matches_fixture() {
    let out = bin()
        .args(["extend", "--n", "4", "--r", "4", "--format", "paper", "--no-cache"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), K4_S4_EXTENSION);
}

#[test]
fn binary_verify_paper_exits_zero() {
    let out = bin().args(["verify-paper", "--no-cache"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("checks passed"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn binary_invalid_args_exit_2() {
    // r beyond the supported ceiling
    let out = bin()
        .args(["cycles", "--r", "12", "--no-cache"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // unknown flag
    let out = bin().args(["cycles", "--degree", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    // cycles pinned to level 3
    let out = bin()
        .args(["cycles", "--r", "3", "--n", "4", "--no-cache"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn binary_census_json() {
    let out = bin()
        .args(["census", "--n", "3", "--r", "3", "--format", "json", "--no-cache"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report =
        braidrep::json::census_report_from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(report.transitive_reps, 26);
    assert_eq!(report.subgroup_count, 13);
}

#[test]
fn binary_graph_emits_dot() {
    let out = bin()
        .args(["graph", "--r", "2", "--no-cache"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("digraph"));
    assert!(text.contains("\"(1, 1)\" -> \"(1, 1)\";"));
}

#[test]
fn binary_respects_cache_dir_env() {
    let tmp = tempfile::tempdir().unwrap();
    let out = bin()
        .args(["cycles", "--r", "2"])
        .env("BRAIDREP_CACHE_DIR", tmp.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(fs::read_dir(tmp.path()).unwrap().count(), 1);
}
