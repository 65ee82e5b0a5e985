use std::path::PathBuf;
use std::process::{Command, Output};

fn spaceform(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spaceform")).args(args).env_remove("SPACEFORM_MAX_ORDER").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn write_table(name: &str, tuple: &str) -> PathBuf {
    let path = tmp(name);
    let o = spaceform(&["build", "--tuple", tuple, "--out", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

#[test]
fn build_then_classify() {
    let tuple = "TYPE=II;g=24;a=3;Gbar=[1,2];b=1;t=8";
    let path = write_table("bd24.txt", tuple);
    let o = spaceform(&["classify", "--in", path.to_str().unwrap(), "--paranoid"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), format!("{tuple}\n"));
}

#[test]
fn classify_rejects_with_exit_1() {
    let path = tmp("klein.txt");
    std::fs::write(&path, "4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n").unwrap();
    let o = spaceform(&["classify", "--in", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "REJECT multiple-involutions: three involutions: ids 1, 2, 3\n");
}

#[test]
fn malformed_table_is_a_domain_error() {
    let path = tmp("bad.txt");
    std::fs::write(&path, "2\n0 1\n1 1\n").unwrap();
    let o = spaceform(&["classify", "--in", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error: NotLatinSquare:"));
}

#[test]
fn iso_of_distinct_and_equal_groups() {
    let a = write_table("iso_a.txt", "TYPE=II;g=24;a=3;Gbar=[1];b=1;t=8");
    let b = write_table("iso_b.txt", "TYPE=II;g=24;a=3;Gbar=[1,2];b=1;t=8");
    let o = spaceform(&["iso", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(1), "NOT ISOMORPHIC\n"));
    let o = spaceform(&["iso", a.to_str().unwrap(), a.to_str().unwrap()]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "ISOMORPHIC\n"));
}

#[test]
fn wolf_presentation_against_a_table() {
    let t = write_table("wolf.txt", "TYPE=II;g=120;a=15;Gbar=[1,4,11,14];b=1;t=8");
    let o = spaceform(&["wolf2", "3", "20", "-1", "-1", "1", "--iso", t.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("ISOMORPHIC\n"));
    let o = spaceform(&["wolf2", "--duplication"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("isomorphic pairs: 15/15"));
}

#[test]
fn output_is_deterministic() {
    let args = ["rep", "--tuple", "TYPE=V;g=120;a=1;Gbar=[];b=1"];
    let (a, b) = (spaceform(&args), spaceform(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.contains("dimension 4\n"));
    assert!(text.ends_with("verdict free\n"));
}

#[test]
fn help_and_usage() {
    let o = spaceform(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("enumerate"));
    assert_eq!(spaceform(&["count", "--max-order", "x"]).status.code(), Some(2));
}

#[test]
fn order_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_spaceform"))
        .args(["count", "--max-order", "100"])
        .env("SPACEFORM_MAX_ORDER", "50")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error: TooLarge:"));
}
