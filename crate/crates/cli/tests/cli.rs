use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn reslat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reslat"))
        .args(args)
        .env_remove("RESLAT_JOBS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn validate_exit_codes() {
    assert_eq!(reslat(&["validate", &fixture("size2.lat")]).status.code(), Some(0));
    let bad = reslat(&["validate", &fixture("ex31_verbatim.lat")]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("unit law violated at (a,1)"));
    assert_eq!(reslat(&["validate", "/no/such/file.lat"]).status.code(), Some(2));
    assert_eq!(reslat(&["validate"]).status.code(), Some(2));
    assert_eq!(
        reslat(&["graph", &fixture("size2.lat"), "--kind", "ring"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn syntax_errors_carry_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.lat");
    std::fs::write(&path, "size 2\norder\n1 1\n0 1\nmult\n0 0\n0 x\n").unwrap();
    let out = reslat(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("line 7"), "{}", stdout(&out));
}

#[test]
fn iso_is_a_predicate() {
    let (g1, g2) = (fixture("g1.lat"), fixture("g2.lat"));
    assert_eq!(reslat(&["iso", &g1, &g2]).status.code(), Some(1));
    let graphs = reslat(&["iso", &g1, &g2, "--graphs"]);
    assert_eq!(graphs.status.code(), Some(0));
    assert!(stdout(&graphs).starts_with("comaximal filter graphs are isomorphic"));
    assert_eq!(reslat(&["iso", &g1, &g1]).status.code(), Some(0));
}

#[test]
fn dot_to_file_and_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.dot");
    let run = reslat(&[
        "graph",
        &fixture("ex38.lat"),
        "--kind",
        "comaximal",
        "--dot",
        out.to_str().unwrap(),
    ]);
    assert!(run.status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("graph G {\n") && text.contains("n0 -- n1;"));
    let again = reslat(&["graph", &fixture("ex38.lat"), "--kind", "comaximal", "--dot", "-"]);
    assert_eq!(stdout(&again), text);
}

#[test]
fn zero_divisor_graph_listing() {
    let out = reslat(&["graph", &fixture("ex38.lat"), "--kind", "zerodiv", "--nonzero-only"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("vertices: 8\n"), "{text}");
    assert!(text.contains("edges: 12\n"));
}

#[test]
fn invariants_are_json() {
    let out = reslat(&["invariants", &fixture("ex31_corrected.lat"), "--kind", "comaximal"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["diameter"], 3);
    assert_eq!(v["girth"], 3);
    assert_eq!(v["max_filter_count"], 3);
    let tree = reslat(&["invariants", &fixture("g1.lat"), "--kind", "comaximal"]);
    let v: serde_json::Value = serde_json::from_slice(&tree.stdout).unwrap();
    assert_eq!(v["girth"], "inf");
}

#[test]
fn classify_and_filters() {
    let out = reslat(&["classify", &fixture("rem312.lat"), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["prelinear"], false);
    assert_eq!(v["heyting"], true);
    let filters = stdout(&reslat(&["filters", &fixture("ex31_corrected.lat")]));
    assert!(filters.contains("F5 = {a,c,e,1} = <a> [maximal, prime]"), "{filters}");
    assert!(filters.contains("maximal: F5 F6 F7"));
    assert!(filters.contains("radical: F1 = {1}"));
}

#[test]
fn enumerate_with_class_filter_and_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path().join("c.jsonl");
    let out = reslat(&[
        "enumerate",
        "--size",
        "6",
        "--class",
        "heyting",
        "-q",
        "--catalog",
        cat.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "size 6, class heyting: 5 algebras\n");
    let records = reslat::io::read_catalog(std::io::BufReader::new(std::fs::File::open(&cat).unwrap())).unwrap();
    assert_eq!(records.len(), 5);
    assert!(records.iter().all(|r| r.flags.heyting && r.size == 6));
    assert_eq!(reslat(&["enumerate", "--size", "0"]).status.code(), Some(2));
    assert_eq!(
        reslat(&["enumerate", "--size", "4", "--class", "boolean"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn census_table_rows() {
    let out = reslat(&["census", "--max", "6", "-q"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.contains("       6      129       99       20        5        3        2\n"),
        "{text}"
    );
    assert!(text.contains("       6        6        2        2        2        1        1\n"));
    assert!(text.contains("       6 heyting        K2:1 P3:1\n"));
}

#[test]
fn census_budget_exceeded() {
    let out = reslat(&["census", "--max", "9", "--budget", "0", "-q"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("skipped (budget exceeded)"));
    let jobs_env = Command::new(env!("CARGO_BIN_EXE_reslat"))
        .args(["census", "--max", "4", "-q"])
        .env("RESLAT_JOBS", "2")
        .output()
        .unwrap();
    assert!(jobs_env.status.success());
}
