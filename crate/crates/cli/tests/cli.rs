use std::io::Write;
use std::process::{Command, Output, Stdio};

// path 1-2-3 as an ambient graph
const PATH3: &str = "3\n0-+\n-0-\n+-0\n";

fn seidel(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_seidel"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn census_row() {
    let o = seidel(&["census", "8"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("243 total, 21 gamma, 19 self-compl, 8 lambda-min-5"));
}

#[test]
fn nonexist_verdict() {
    let o = seidel(&["nonexist", "{[-5]^26,[7]^7,[9]^9}"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: nonexistent"));
    let o = seidel(&["nonexist", "{[-5]^24,[7]^15,[15]^1}", "--format", "json"], None);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "inconclusive");
}

#[test]
fn feasible_rows_for_fourteen() {
    let o = seidel(&["feasible", "--d", "14", "--lambda0", "-5", "--format", "csv"], None);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[1], "28,14,\"{[-5]^14,[3]^7,[7]^7}\",Y,ex415");
    assert_eq!(lines[2], "30,14,\"{[-5]^16,[5]^9,[7]^5}\",N,");
}

#[test]
fn matrix_commands_on_stdin() {
    let o = seidel(&["det"], Some(PATH3));
    assert!(stdout(&o).starts_with("det = 2\n"));
    let o = seidel(&["spectrum"], Some(PATH3));
    assert!(stdout(&o).starts_with("{[-1]^2,[2]^1}"));
    let o = seidel(&["certify", "--claim", "{[-1]^2,[2]^1}"], Some(PATH3));
    assert_eq!(o.status.code(), Some(0));
    let o = seidel(&["certify", "--claim", "{[-2]^1,[1]^2}"], Some(PATH3));
    assert_eq!(o.status.code(), Some(1));
    let o = seidel(&["switch", "--subset", "0"], Some(PATH3));
    assert_eq!(stdout(&o), "3\n0+-\n+0-\n--0\n");
}

#[test]
fn exit_codes() {
    assert_eq!(seidel(&["validate"], Some("2\n0+\n-0\n")).status.code(), Some(1));
    assert_eq!(seidel(&["validate"], Some(PATH3)).status.code(), Some(0));
    assert_eq!(seidel(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(seidel(&["construct", "nope"], None).status.code(), Some(2));
    assert_eq!(seidel(&["nonexist", "not a spectrum"], None).status.code(), Some(2));
    assert_eq!(seidel(&["det", "--format", "csv"], Some(PATH3)).status.code(), Some(2));
}

#[test]
fn construct_json() {
    let o = seidel(&["construct", "hadamard16", "--format", "json"], None);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n"], 16);
    assert_eq!(v["dimension"], 10);
    assert_eq!(v["spectrum"], "{[-5]^6,[3]^10}");
    assert_eq!(v["lines"]["angle_inv"], 5);
}

#[test]
fn enumeration_independent_of_workers() {
    let a = seidel(&["enumerate", "7", "--jobs", "1"], None);
    let b = seidel(&["enumerate", "7", "--jobs", "3"], None);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 54);
}

#[test]
fn tables() {
    let o = seidel(&["bounds", "--format", "csv"], None);
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("16,40-41,40,41,srg40,")));
    assert!(out.lines().any(|l| l.starts_with("23-41,276,")));
    let o = seidel(&["n5table"], None);
    assert!(stdout(&o).lines().any(|l| l.starts_with("61-136") && l.contains("276-B(d)")));
}

#[test]
fn repro_subset() {
    let o = seidel(&["repro", "--criterion", "8,11"], None);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.contains("PASS")).count(), 2);
}
