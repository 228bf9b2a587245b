use std::io::Write;
use std::process::{Command, Output};

use vizbound::cli::{run_with, EXIT_LIMIT, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION};
use vizbound::graph6::parse_graph6;
use vizbound::harness::CSV_HEADER;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vizbound"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn in_process(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("vizbound").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn gamma_human_output() {
    let (code, out, _) = in_process(&["gamma", "path:3", "--format", "human"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "gamma 1\nwitness {1}\n");
    let (code, out, _) = in_process(&["gamma", "Ch", "--format", "human", "--oracle"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("gamma 2\n"));
}

#[test]
fn check_csv_row() {
    let (code, out, _) = in_process(&["check", "path:4", "path:4"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines, [CSV_HEADER, "Ch,Ch,2,2,4,2,3,4,3,1,true"]);
}

#[test]
fn product_graph6_parses_back() {
    let (code, out, _) = in_process(&["product", "path:2", "cycle:3"]);
    assert_eq!(code, EXIT_OK);
    let g = parse_graph6(out.trim()).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (6, 9));
    let (_, out, _) = in_process(&["product", "path:2", "path:2", "--as", "edgelist"]);
    assert!(out.starts_with("4 4\n"));
}

#[test]
fn trace_with_dom_set_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "0,1 1,3\n2,0 3,2").unwrap();
    let path = f.path().to_str().unwrap();
    let (code, out, _) = in_process(&[
        "trace",
        "path:4",
        "path:4",
        "--dom-set",
        path,
        "--format",
        "jsonl",
    ]);
    assert_eq!(code, EXIT_OK, "{out}");
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["passed"], true);

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "0").unwrap();
    let path = bad.path().to_str().unwrap();
    let (code, _, err) = in_process(&["trace", "path:4", "path:4", "--dom-set", path]);
    assert_eq!(code, EXIT_USAGE);
    assert!(!err.is_empty());
}

#[test]
fn remark_reports_none_for_p4_square() {
    let (code, out, _) = in_process(&["remark", "path:4", "path:4", "--format", "jsonl"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert!(v["found"].is_null());
    assert_eq!(v["truncated"], false);
    assert_eq!(v["gamma_product"], 4);
}

#[test]
fn enumerate_counts() {
    for (n, count) in [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)] {
        let (code, out, _) = in_process(&["enumerate", &n.to_string()]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().count(), count);
    }
    let (code, _, _) = in_process(&["enumerate", "7"]);
    assert_ne!(code, EXIT_OK);
}

#[test]
fn exit_codes() {
    assert_eq!(in_process(&["gamma", "not a graph"]).0, EXIT_USAGE);
    assert_eq!(in_process(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(
        in_process(&["gamma", "grid:6x6", "--node-budget", "3"]).0,
        EXIT_LIMIT
    );
    assert_eq!(
        in_process(&["check", "path:30", "path:30", "--max-vertices", "100"]).0,
        EXIT_LIMIT
    );
    assert_eq!(
        in_process(&["sweep", "--family", "paths:1..3", "--inject-fault"]).0,
        EXIT_VIOLATION
    );
}

#[test]
fn sweep_output_is_byte_identical_across_runs_and_jobs() {
    let args = ["sweep", "--family", "connected:1..4", "--format", "jsonl"];
    let a = bin(&[&args[..], &["--jobs", "1"]].concat());
    let b = bin(&[&args[..], &["--jobs", "4"]].concat());
    let c = bin(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(a.status.code(), Some(EXIT_OK));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(b.stdout, c.stdout);
    assert_eq!(stdout(&a).lines().count(), 55);
}

#[test]
fn sweep_graph6_file_and_out_flag() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, ">>graph6<<A_\nBw\nCh").unwrap();
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("rows.csv");
    let o = bin(&[
        "sweep",
        "--graph6",
        f.path().to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let rows = std::fs::read_to_string(out_path).unwrap();
    let lines: Vec<&str> = rows.lines().collect();
    assert_eq!(lines[0], CSV_HEADER);
    assert_eq!(lines.len(), 1 + 6);
    assert!(lines[1..].iter().all(|l| l.ends_with(",true")));
}

#[test]
fn seeded_random_specs_are_reproducible() {
    let a = bin(&["gamma", "gnp:10:0.3", "--seed", "7"]);
    let b = bin(&["gamma", "gnp:10:0.3", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(EXIT_OK));
}
