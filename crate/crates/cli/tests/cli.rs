use std::path::PathBuf;
use std::process::{Command, Output};

fn indgen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_indgen")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn catalog(file: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("catalog");
    p.push(file);
    p.display().to_string()
}

#[test]
fn classify_prints_the_four_lists() {
    let o = indgen(&["sym", "classify", "--max", "50"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("offset 0: 1 2 3 4 5 8 10 11 16 17 18 19 25 30 31\n"));
    assert!(text.contains("offset 1: 6 7 12 13 20 26 42 43 48\n"));
    assert!(text.contains("offset 2: 14 21 44 45\n"));
    assert!(text.contains("offset 3: 15 22 23 24 46 47\n"));
    assert!(text.contains("offset < 0: 16 values\n"));
}

#[test]
fn delta_row_for_one() {
    let o = indgen(&["sym", "delta", "--from", "1", "--to", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n,delta,offset,lower_ok,upper_tight_ok,chain_ok\n1,0,0,na,na,na\n");
}

#[test]
fn delta_rows_in_range() {
    let o = indgen(&["sym", "delta", "--from", "5", "--to", "7"]);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows, ["5,4,0,true,true,true", "6,6,1,true,true,true", "7,7,1,true,true,true"]);
}

#[test]
fn stop_bounds_to_a_million() {
    assert_eq!(indgen(&["sym", "verify-stop", "--max", "1000000"]).status.code(), Some(0));
}

#[test]
fn prime_bound_commands() {
    assert_eq!(indgen(&["primes", "rs", "--max", "1000000"]).status.code(), Some(0));
    assert_eq!(indgen(&["primes", "pk", "--max", "5"]).status.code(), Some(0));
    let o = indgen(&["primes", "stup", "--eta", "2", "--max", "1000"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("empirical c = 2.000000 at n = 2"));
}

#[test]
fn zsigmondy_queries() {
    let o = indgen(&["zsigmondy", "2", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("none (exception: a=2, n=6)\n"));
    let o = indgen(&["zsigmondy", "2", "11"]);
    assert_eq!(stdout(&o), "23 89\nresidues mod 11: ok\n");
    assert_eq!(indgen(&["zsigmondy", "--sweep", "30", "16"]).status.code(), Some(0));
}

#[test]
fn pi_star_table() {
    let o = indgen(&["zsigmondy", "--pi-star"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("A5,60,2,2 3 5,3 5,true\n"));
}

#[test]
fn profile_of_s4() {
    let o = indgen(&["group", "profile", &catalog("s4.grp")]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order"], 24);
    assert_eq!(v["d"], 2);
    assert_eq!(v["m"], 3);
    assert_eq!(v["delta"], 3);
    assert_eq!(v["alpha_p"]["2"], 2);
    assert_eq!(v["alpha_p"]["3"], 1);
}

#[test]
fn m_of_trivial_group() {
    let o = indgen(&["group", "m", &catalog("trivial.grp")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("0"));
}

#[test]
fn sweep_passes_and_is_stable() {
    let dir = catalog("");
    let a = indgen(&["group", "sweep", &dir, "--sigma", "1", "--eta", "1"]);
    assert_eq!(a.status.code(), Some(0));
    let b = indgen(&["group", "sweep", &dir, "--sigma", "1", "--eta", "1"]);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let labels: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').next().unwrap()).collect();
    let mut sorted = labels.clone();
    sorted.sort();
    assert_eq!(labels, sorted);
    assert_eq!(labels.len(), 45);
    let j1 = indgen(&["group", "sweep", &dir, "--format", "json"]);
    let j2 = indgen(&["group", "sweep", &dir, "--format", "json"]);
    assert_eq!(j1.stdout, j2.stdout);
    let v: serde_json::Value = serde_json::from_slice(&j1.stdout).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 45);
}

#[test]
fn sweep_reports_skipped_files() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("good.grp"), "degree 3\n(1 2 3)\n").unwrap();
    std::fs::write(dir.path().join("bad.grp"), "degree 3\n(1 9)\n").unwrap();
    let o = indgen(&["group", "sweep", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("bad,") && l.len() > 20));
    assert!(text.lines().any(|l| l.starts_with("good,3,")));
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(indgen(&["sym", "classify"]).status.code(), Some(2));
    assert_eq!(indgen(&["sym", "delta", "--from", "5", "--to", "2"]).status.code(), Some(2));
    assert_eq!(indgen(&["group", "m", "/nonexistent/x.grp"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.grp");
    std::fs::write(&path, "(1 2)\n").unwrap();
    assert_eq!(indgen(&["group", "profile", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn budget_errors_exit_three() {
    let o = indgen(&["group", "profile", &catalog("a6.grp"), "--max-order", "100"]);
    assert_eq!(o.status.code(), Some(3));
    let o = indgen(&["group", "profile", &catalog("a6.grp"), "--time-budget-ms", "0"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn wreath_commands() {
    let o = indgen(&["wreath", "verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 19);
    let o = indgen(&["wreath", "pablo"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches(": holds").count(), 4);
}

#[test]
fn pablo_with_given_groups() {
    let o = indgen(&[
        "wreath",
        "pablo",
        "--s",
        &catalog("a5.grp"),
        "--out-order",
        "2",
        "--k",
        &catalog("c2.grp"),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("sum 4 vs t = 1: holds"));
}
