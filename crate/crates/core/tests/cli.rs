use std::io::Write;
use std::process::{Command, Output, Stdio};

fn coadjoint(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_coadjoint"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn coadjoint");
    child
        .stdin
        .take()
        .expect("stdin")
        .write_all(stdin.as_bytes())
        .expect("write stdin");
    child.wait_with_output().expect("wait")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

#[test]
fn complete_table_matches_golden() {
    let o = coadjoint(&["table", "kn", "--max", "8", "--format", "text"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), include_str!("golden/table_kn_8.txt"));
}

#[test]
fn bipartite_table_matches_golden() {
    let o = coadjoint(&["table", "knn", "--max", "5"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), include_str!("golden/table_knn_5.txt"));
}

#[test]
fn poly_of_named_graph() {
    let o = coadjoint(&["poly", "--kind", "coadjoint", "--graph", "K4"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x^4-6x^3+7x^2-2x\n");
}

#[test]
fn poly_from_stdin_as_json() {
    let o = coadjoint(&["poly", "--kind", "coadjoint", "--stdin", "--format", "json"], "Bw\nCF\n");
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).expect("json line"))
        .collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["graph"], "Bw");
    assert_eq!(lines[0]["coeffs"], serde_json::json!(["0", "1", "-3", "1"]));
    assert_eq!(lines[1]["kind"], "coadjoint");
}

#[test]
fn tutte_and_partition_function() {
    let o = coadjoint(&["poly", "--kind", "tutte", "--graph", "C4"], "");
    assert_eq!(stdout(&o), "x^3+x^2+x+y\n");
    let o = coadjoint(&["poly", "--kind", "z", "--graph", "K2"], "");
    assert_eq!(stdout(&o), "q^2+qv\n");
}

#[test]
fn check_suite_passes() {
    let o = coadjoint(&["check", "all", "--max-n", "4"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("0 failed\n"), "{}", stdout(&o));
    let again = coadjoint(&["check", "all", "--max-n", "4"], "");
    assert_eq!(o.stdout, again.stdout);
}

#[test]
fn sequences_and_constants() {
    let o = coadjoint(&["zigzag", "--max", "7"], "");
    assert_eq!(stdout(&o), "0 1\n1 1\n2 1\n3 2\n4 5\n5 16\n6 61\n7 272\n");
    let o = coadjoint(&["egf", "--order", "2"], "");
    assert_eq!(stdout(&o), "p_0(x)=1\np_1(x)=x\np_2(x)=x^2+x\n");
    let o = coadjoint(&["sokal-k"], "");
    let first = stdout(&o).lines().next().unwrap_or_default().to_string();
    let value: f64 = first.trim_start_matches("K = ").parse().expect("number");
    assert!((value - 7.963907).abs() < 1e-5);
    let o = coadjoint(&["roots", "--graph", "K3"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("P(x)=x^3-3x^2+x\n"));
}

#[test]
fn exit_codes_for_bad_input() {
    assert_eq!(coadjoint(&["poly", "--kind", "coadjoint", "--graph", "X9"], "").status.code(), Some(2));
    assert_eq!(coadjoint(&["poly", "--kind", "coadjoint", "--graph6", "A"], "").status.code(), Some(2));
    assert_eq!(coadjoint(&["poly", "--kind", "coadjoint", "--stdin"], "Bw\n!!\n").status.code(), Some(2));
    assert_eq!(coadjoint(&["check", "all", "--max-n", "9"], "").status.code(), Some(2));
    assert_eq!(coadjoint(&["egf", "--order", "11"], "").status.code(), Some(2));
    assert_eq!(coadjoint(&["poly", "--graph", "K3"], "").status.code(), Some(2));
    let o = coadjoint(&["poly", "--kind", "coadjoint", "--graph", "C2"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}
