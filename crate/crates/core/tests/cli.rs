use std::collections::BTreeSet;
use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;
use tunedfs::bench::read_csv;

fn tunedfs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tunedfs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf-8 temp path")
}

#[test]
fn gen_writes_header_for_edgeless_graph() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("g.txt");
    let r = tunedfs(&[
        "gen",
        "--nodes",
        "4",
        "--edges",
        "0",
        "--seed",
        "1",
        "--out",
        path_str(&out),
    ]);
    assert_eq!(code(&r), 0);
    assert_eq!(fs::read_to_string(&out).unwrap(), "4 0\n");
}

#[test]
fn gen_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let (a, b) = (dir.path().join("a.txt"), dir.path().join("b.txt"));
    for p in [&a, &b] {
        let args = [
            "gen",
            "--nodes",
            "50",
            "--edges",
            "200",
            "--seed",
            "9",
            "--out",
            path_str(p),
        ];
        assert_eq!(code(&tunedfs(&args)), 0);
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn gen_without_nodes_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("g.txt");
    let r = tunedfs(&[
        "gen",
        "--nodes",
        "0",
        "--edges",
        "5",
        "--seed",
        "1",
        "--out",
        path_str(&out),
    ]);
    assert_eq!(code(&r), 2);
    assert!(!r.stderr.is_empty());
}

#[test]
fn every_scc_algorithm_finds_one_component_in_a_cycle() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("cycle.txt");
    fs::write(&g, "3 3\n0 1\n1 2\n2 0\n").unwrap();
    for algo in ["ks", "tarjan", "cmg", "tarjan-tuned", "cmg-tuned"] {
        for engine in ["recursive", "recursive-edge-stack", "iterative"] {
            let r = tunedfs(&[
                "scc",
                "--algo",
                algo,
                "--in",
                path_str(&g),
                "--engine",
                engine,
            ]);
            assert_eq!(code(&r), 0, "{algo} {engine}");
            assert_eq!(stdout(&r).trim(), "sccCount=1", "{algo} {engine}");
        }
    }
}

#[test]
fn scc_algorithms_agree_on_a_random_graph() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("g.txt");
    let r = tunedfs(&[
        "gen",
        "--nodes",
        "300",
        "--edges",
        "450",
        "--seed",
        "4",
        "--out",
        path_str(&g),
    ]);
    assert_eq!(code(&r), 0);
    let counts: BTreeSet<String> = ["ks", "tarjan", "cmg", "tarjan-tuned", "cmg-tuned"]
        .iter()
        .map(|algo| stdout(&tunedfs(&["scc", "--algo", algo, "--in", path_str(&g)])))
        .collect();
    assert_eq!(counts.len(), 1, "{counts:?}");
}

#[test]
fn scc_writes_one_label_per_node() {
    let dir = TempDir::new().unwrap();
    let (g, labels) = (dir.path().join("g.txt"), dir.path().join("labels.txt"));
    fs::write(&g, "5 6\n0 1\n1 2\n2 0\n2 3\n3 4\n4 3\n").unwrap();
    let r = tunedfs(&[
        "scc",
        "--algo",
        "ks",
        "--in",
        path_str(&g),
        "--out",
        path_str(&labels),
    ]);
    assert_eq!(code(&r), 0);
    assert_eq!(stdout(&r).trim(), "sccCount=2");
    assert_eq!(fs::read_to_string(&labels).unwrap(), "0\n0\n0\n1\n1\n");
}

#[test]
fn scc_on_missing_or_malformed_input_fails() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("missing.txt");
    assert_eq!(
        code(&tunedfs(&[
            "scc",
            "--algo",
            "cmg",
            "--in",
            path_str(&missing)
        ])),
        1
    );
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "2 1\n0 7\n").unwrap();
    let r = tunedfs(&["scc", "--algo", "cmg", "--in", path_str(&bad)]);
    assert_eq!(code(&r), 1);
    assert!(String::from_utf8_lossy(&r.stderr).contains("bad.txt:2:"));
}

#[test]
fn bcc_base_and_tuned_agree() {
    let dir = TempDir::new().unwrap();
    let bowtie = dir.path().join("bowtie.txt");
    fs::write(&bowtie, "5 6\n0 1\n1 2\n2 0\n2 3\n3 4\n4 2\n").unwrap();
    let labels = |algo: &str| {
        let out = dir.path().join(format!("{algo}.txt"));
        let r = tunedfs(&[
            "bcc",
            "--algo",
            algo,
            "--in",
            path_str(&bowtie),
            "--out",
            path_str(&out),
        ]);
        assert_eq!(code(&r), 0);
        assert_eq!(stdout(&r).trim(), "bccCount=2");
        fs::read_to_string(out).unwrap()
    };
    assert_eq!(labels("base"), labels("tuned"));
    let missing = dir.path().join("missing.txt");
    assert_eq!(
        code(&tunedfs(&[
            "bcc",
            "--algo",
            "tuned",
            "--in",
            path_str(&missing)
        ])),
        1
    );
}

#[test]
fn verify_passes_and_enforces_oracle_caps() {
    let ok = tunedfs(&["verify", "--trials", "1000", "--max-n", "32", "--seed", "1"]);
    assert_eq!(code(&ok), 0);
    assert_eq!(
        code(&tunedfs(&[
            "verify", "--trials", "0", "--max-n", "32", "--seed", "1"
        ])),
        0
    );
    assert_eq!(
        code(&tunedfs(&[
            "verify", "--trials", "10", "--max-n", "300", "--seed", "1"
        ])),
        2
    );
    let bcc = tunedfs(&[
        "verify", "--trials", "200", "--max-n", "10", "--seed", "3", "--bcc",
    ]);
    assert_eq!(code(&bcc), 0);
    assert_eq!(
        code(&tunedfs(&[
            "verify", "--trials", "1", "--max-n", "11", "--seed", "1", "--bcc"
        ])),
        2
    );
}

#[test]
fn bench_density_suite_covers_default_grid() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("out.csv");
    let r = tunedfs(&[
        "bench",
        "--suite",
        "density",
        "--m-total",
        "1048576",
        "--repeats",
        "3",
        "--csv",
        path_str(&csv),
    ]);
    assert_eq!(code(&r), 0, "{}", String::from_utf8_lossy(&r.stderr));
    let text = fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("algo,n,m,run,elapsed_ns,ns_per_edge\n"));
    let records = read_csv(&csv).unwrap();
    let densities: BTreeSet<usize> = records.iter().map(|r| r.m / r.n).collect();
    assert_eq!(densities, BTreeSet::from([2, 4, 8, 16, 32]));
    assert!(records
        .iter()
        .all(|r| r.m == 1 << 20 && r.ns_per_edge > 0.0));
}

#[test]
fn bench_rejects_too_few_repeats() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("out.csv");
    let r = tunedfs(&[
        "bench",
        "--suite",
        "density",
        "--repeats",
        "2",
        "--csv",
        path_str(&csv),
    ]);
    assert_eq!(code(&r), 2);
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    assert_eq!(code(&tunedfs(&["frobnicate"])), 2);
    assert_eq!(code(&tunedfs(&[])), 2);
}
