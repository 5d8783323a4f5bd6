use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use pclist::io::{parse_edge_list, read_bench_csv, BENCH_HEADER};

fn pclist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pclist")).args(args).output().unwrap()
}

fn golden(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name).display().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn tmp_file(dir: &tempfile::TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

#[test]
fn gen_complete_graph() {
    let o = pclist(&["gen", "--model", "gnp", "--n", "4", "--p", "1.0", "--seed", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("4 6 u\n"));
    assert_eq!(parse_edge_list(&text).unwrap().m(), 12);
}

#[test]
fn gen_complement_of_sparse_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = tmp_file(&dir, "g.el");
    let o = pclist(&[
        "gen", "--model", "complement_of_sparse", "--n", "100", "--avg-degree", "4", "--seed", "7", "-o",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.lines().count() - 1 >= 4750);
}

#[test]
fn gen_rejects_bad_parameters() {
    assert_eq!(pclist(&["gen", "--model", "gnp", "--n", "0", "--p", "0.5", "--seed", "1"]).status.code(), Some(2));
    assert_eq!(pclist(&["gen", "--model", "gnp", "--n", "5", "--seed", "1"]).status.code(), Some(2));
    assert_eq!(pclist(&["gen", "--model", "nope", "--n", "5", "--seed", "1"]).status.code(), Some(2));
    assert_eq!(pclist(&["gen", "--model", "gnp", "--n", "5", "--p", "0.5"]).status.code(), Some(2));
}

#[test]
fn run_prints_results() {
    let o = pclist(&["run", "--algo", "diameter", "--input", &golden("p4.el")]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("diameter 3"));
    let o = pclist(&["run", "--algo", "hk", "--input", &golden("k33.el"), "--verify"]);
    assert_eq!(stdout(&o).lines().next(), Some("matching 3; verified"));
    assert!(stdout(&o).contains("m_tilde"));
}

#[test]
fn baseline_levels_agree() {
    let o = pclist(&["run", "--algo", "bfs", "--input", &golden("comp_p4.el"), "--source", "0", "--baseline"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let levels = |prefix: &str| {
        text.lines()
            .find_map(|l| l.strip_prefix(prefix))
            .map(str::to_string)
            .unwrap()
    };
    assert_eq!(levels("levels "), levels("baseline levels "));
}

#[test]
fn run_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = tmp_file(&dir, "bad.el");
    std::fs::write(&bad, "3 1 u\n0 0\n").unwrap();
    let o = pclist(&["run", "--algo", "bfs", "--input", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let o = pclist(&["run", "--algo", "bfs", "--input", &golden("p4.el"), "--repr", "seidel"]);
    assert_eq!(o.status.code(), Some(2));
    let o = pclist(&["run", "--algo", "hk", "--input", &golden("c5.el")]);
    assert_eq!(o.status.code(), Some(2));
    let o = pclist(&["run", "--algo", "bfs", "--input", &golden("p4.el"), "--source", "9"]);
    assert_eq!(o.status.code(), Some(2));
    let o = pclist(&["run", "--algo", "sort", "--input", &golden("p4.el")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bench_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = tmp_file(&dir, "out.csv");
    let o = pclist(&["bench", "--suite", "density-sweep", "--algos", "diameter", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().next().unwrap(), BENCH_HEADER.join(","));
    let rows = read_bench_csv(text.as_bytes()).unwrap();
    assert_eq!(rows.len(), 4);
    assert!(rows.windows(2).all(|w| w[1].ledger_total <= w[0].ledger_total));

    let again = tmp_file(&dir, "again.csv");
    pclist(&["bench", "--suite", "density-sweep", "--algos", "diameter", "--out", again.to_str().unwrap()]);
    let strip = |rows: Vec<pclist::io::BenchRow>| -> Vec<_> {
        rows.into_iter().map(|r| (r.instance_id, r.m, r.ledger_total, r.result)).collect()
    };
    let second = read_bench_csv(std::fs::File::open(&again).unwrap()).unwrap();
    assert_eq!(strip(read_bench_csv(text.as_bytes()).unwrap()), strip(second));
}

#[test]
fn bench_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = tmp_file(&dir, "out.csv");
    let p = path.to_str().unwrap();
    assert_eq!(pclist(&["bench", "--suite", "density-sweep", "--algos", "", "--out", p]).status.code(), Some(2));
    assert_eq!(pclist(&["bench", "--suite", "density-sweep", "--out", p]).status.code(), Some(2));
    assert_eq!(pclist(&["bench", "--suite", "other", "--algos", "bfs", "--out", p]).status.code(), Some(2));
    let unwritable = dir.path().join("missing/out.csv");
    let o = pclist(&["bench", "--suite", "size-sweep", "--algos", "bfs", "--out", unwritable.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}
