use std::path::Path;
use std::process::{Command, Output};

fn dconsec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dconsec"))
        .args(args)
        .env_remove("DCONSEC_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> &str {
    std::str::from_utf8(&output.stdout).unwrap()
}

#[test]
fn count_examples() {
    for (n, d, want) in [("8", "2", "9512\n"), ("1", "0", "1\n"), ("13", "3", "1565107248\n")] {
        let out = dconsec(&["count", "--n", n, "--d", d]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out), want);
    }
    let out = dconsec(&["count", "--n", "9", "--d", "1", "--method", "oracle"]);
    assert_eq!(stdout(&out), "47622\n");
}

#[test]
fn exit_codes() {
    assert_eq!(dconsec(&["count", "--n", "0", "--d", "1"]).status.code(), Some(2));
    assert_eq!(dconsec(&["count", "--n", "5"]).status.code(), Some(2));
    assert_eq!(dconsec(&["count", "--n", "5", "--d", "x"]).status.code(), Some(2));
    assert_eq!(dconsec(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(dconsec(&["--help"]).status.code(), Some(0));

    let refused = dconsec(&["count", "--n", "14", "--d", "2", "--method", "oracle"]);
    assert_eq!(refused.status.code(), Some(3));
    assert!(refused.stdout.is_empty());

    let io = dconsec(&["bfile", "--d", "1", "--n-max", "3", "--out", "/nonexistent-dir/b.txt"]);
    assert_eq!(io.status.code(), Some(4));
}

#[test]
fn table_csv_and_markdown() {
    let out = dconsec(&["table", "--n-max", "5", "--d-list", "0,1,2,3"]);
    assert_eq!(
        stdout(&out),
        "n,d0,d1,d2,d3\n1,1,1,1,1\n2,0,0,2,2\n3,0,0,4,6\n4,0,2,16,20\n5,10,14,44,80\n"
    );
    let out = dconsec(&["table", "--n-max", "2", "--d-list", "1", "--format", "markdown"]);
    assert_eq!(stdout(&out), "| n | a(n,1) |\n|--:|-------:|\n| 1 |      1 |\n| 2 |      0 |\n");
}

#[test]
fn table_rows_reparse() {
    let out = dconsec(&["table", "--n-max", "16", "--d-list", "2,3"]);
    let last = stdout(&out).lines().last().unwrap();
    let cells: Vec<u64> = last.split(',').map(|c| c.parse().unwrap()).collect();
    assert_eq!(cells, vec![16, 3648471927912, 4669727780624]);
}

#[test]
fn bfile_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.txt");
    let out = dconsec(&["bfile", "--d", "1", "--n-max", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "1 1\n2 0\n3 0\n4 2\n");
}

#[test]
fn verify_grid() {
    let out = dconsec(&["verify", "--n-max", "7", "--d-max", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "verified 35 cells: all match\n");
}

#[test]
fn asym_rows() {
    let out = dconsec(&["asym", "--d", "3", "--n-list", "8,16"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,scaled_ratio,e_n,target,distance"));
    let distances: Vec<f64> = lines
        .map(|l| {
            let cells: Vec<&str> = l.split(',').collect();
            assert_eq!(cells[3], "8");
            cells[4].parse().unwrap()
        })
        .collect();
    assert!(distances[1] < distances[0]);
}

fn cached_count(cache: &Path, n: &str, d: &str) -> String {
    let out = dconsec(&["count", "--n", n, "--d", d, "--cache", cache.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    stdout(&out).to_string()
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.json");
    assert_eq!(cached_count(&cache, "10", "2"), "744360\n");
    let json = std::fs::read_to_string(&cache).unwrap();
    assert!(json.contains("\"10:2\": \"744360\""));

    // a hit is served from the file
    std::fs::write(&cache, "{\"10:2\": \"5\"}\n").unwrap();
    assert_eq!(cached_count(&cache, "10", "2"), "5\n");

    std::fs::write(&cache, "not json").unwrap();
    let out = dconsec(&["count", "--n", "3", "--d", "1", "--cache", cache.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn cache_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("env.json");
    let out = Command::new(env!("CARGO_BIN_EXE_dconsec"))
        .args(["count", "--n", "6", "--d", "0"])
        .env("DCONSEC_CACHE", &cache)
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "36\n");
    assert!(std::fs::read_to_string(&cache).unwrap().contains("\"6:0\": \"36\""));
}
