use std::io::Write;
use std::process::{Command, Output, Stdio};

use tempfile::NamedTempFile;

const WORKED_EXAMPLE: &str = "j -> k\nk -> l\nl -- r\nq -> r\nq -> h\n";

fn file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn cmg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cmg")).args(args).output().unwrap()
}

fn cmg_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cmg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn classify_reports_flags() {
    let cg = file("a -- b\nb -> c\n");
    let out = cmg(&["classify", path(&cg)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "CG CMG AnG\n");
    let ang = file("a <-> b\nb -> c\n");
    assert_eq!(stdout(&cmg(&["classify", path(&ang)])), "CMG AnG\n");
    let cmg_only = file("a -> b\na <-> b\n");
    assert_eq!(stdout(&cmg(&["classify", path(&cmg_only)])), "CMG\n");
}

#[test]
fn parse_errors_exit_two_with_line_numbers() {
    let bad = file("a -- b\na -- a\n");
    let out = cmg(&["classify", path(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(cmg(&["classify", "/nonexistent/graph.txt"]).status.code(), Some(2));
    assert_eq!(cmg(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn worked_example_is_connected_through_a_collider_section() {
    let g = file(WORKED_EXAMPLE);
    for method in ["c", "moral", "oracle"] {
        let out = cmg(&["separate", path(&g), "--a", "j", "--b", "h", "--given", "l", "--method", method]);
        assert_eq!(out.status.code(), Some(0));
        let text = stdout(&out);
        assert!(text.starts_with("connected\n"), "{method}: {text}");
        assert!(text.contains("walk: j -> k -> l -- r <- q -> h"), "{text}");
    }
    let out = cmg(&["separate", path(&g), "--a", "j", "--b", "h", "--given", "k"]);
    assert_eq!(stdout(&out), "separated\n");
}

#[test]
fn separate_methods_agree_and_validate() {
    let g = file("a <-> b\nb -- c\nd -> c\n");
    for given in ["", "b", "c", "b,c"] {
        let verdicts: Vec<String> = ["c", "oracle"]
            .iter()
            .map(|m| stdout(&cmg(&["separate", path(&g), "--a", "a", "--b", "d", "--given", given, "--method", m])))
            .map(|s| s.lines().next().unwrap().to_string())
            .collect();
        assert_eq!(verdicts[0], verdicts[1], "given {given}");
    }
    assert_eq!(cmg(&["separate", path(&g), "--a", "a", "--b", "a"]).status.code(), Some(2));
    let moral = cmg(&["separate", path(&g), "--a", "a", "--b", "d", "--method", "moral"]);
    assert_eq!(moral.status.code(), Some(2));
    let disjoint = file("a -- b\nc -- d\n");
    assert_eq!(stdout(&cmg(&["separate", path(&disjoint), "--a", "a", "--b", "d"])), "separated\n");
}

#[test]
fn transform_outputs_canonical_files() {
    let g = file("# unsorted\nb -> c\na -- b\n");
    let echo = cmg(&["transform", path(&g), "-M", "", "-C", ""]);
    assert_eq!(stdout(&echo), "nodes: a b c\na -- b\nb -> c\n");
    let row = file("m -> i\nj -> m\n");
    assert_eq!(stdout(&cmg(&["transform", path(&row), "-M", "m"])), "nodes: i j\nj -> i\n");
    let overlap = cmg(&["transform", path(&row), "-M", "m", "-C", "m"]);
    assert_eq!(overlap.status.code(), Some(2));
}

#[test]
fn ang_transform_of_a_chain_graph_is_anterial() {
    let cg = file("a -> b\nc -> b\nb -- d\nd -> e\n");
    let out = cmg(&["transform", path(&cg), "-M", "a", "--ang"]);
    assert_eq!(out.status.code(), Some(0));
    let classified = cmg_stdin(&["classify", "-"], &stdout(&out));
    assert!(stdout(&classified).trim_end().ends_with("AnG"));
}

#[test]
fn model_and_equality() {
    let g = file("nodes: a b\n");
    assert_eq!(stdout(&cmg(&["model", path(&g)])), "a ⊥ b | {}\n");
    let chain = file("a -> b\nb -> c\n");
    assert_eq!(stdout(&cmg(&["model", path(&chain)])), "a ⊥ c | {b}\n");
    assert_eq!(stdout(&cmg(&["equal", path(&chain), path(&chain)])), "equal\n");
    let line = file("a -- b\nb -- c\n");
    assert_eq!(stdout(&cmg(&["equal", path(&chain), path(&line)])), "equal\n");
    let collider = file("a -> b\nc -> b\n");
    assert_eq!(stdout(&cmg(&["equal", path(&chain), path(&collider)])), "different\n");
}

#[test]
fn oversize_models_exit_three() {
    let names: Vec<String> = (0..9).map(|k| format!("v{k}")).collect();
    let big = file(&format!("nodes: {}\n", names.join(" ")));
    assert_eq!(cmg(&["model", path(&big)]).status.code(), Some(3));
}

#[test]
fn check_prints_reports_and_flags_failures() {
    let ok = cmg(&["check", "--suite", "conditioning", "--seed", "7", "--count", "50"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(
        stdout(&ok),
        "property=conditioning instances=50 failures=0 skipped=0 status=ok\n"
    );
    let demo = cmg(&["check", "--suite", "cg-unrepresentability"]);
    assert!(stdout(&demo).starts_with("property=cg-unrepresentability "));
    assert_eq!(demo.status.code(), Some(0));
    let red = cmg(&["check", "--suite", "marginalization", "--seed", "7", "--count", "500"]);
    assert_eq!(red.status.code(), Some(4));
    assert!(stdout(&red).contains("status=FAIL graph="));
    assert_eq!(cmg(&["check", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn dot_marks_edge_kinds() {
    let g = file("a -- b\nb -> c\nc <-> a\n");
    let dot = stdout(&cmg(&["dot", path(&g)]));
    assert!(dot.starts_with("digraph G {\n"));
    assert!(dot.contains("\"a\" -> \"b\" [dir=none];"));
    assert!(dot.contains("\"b\" -> \"c\";"));
    assert!(dot.contains("\"a\" -> \"c\" [dir=both];"));
}
