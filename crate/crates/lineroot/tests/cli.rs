//! Black-box checks of the command-line contract: exit codes, stream
//! discipline (results on standard output, diagnostics on standard error,
//! standard output empty on failure), `-` for standard input, per-component
//! labeling, and byte-for-byte determinism.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lineroot"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin is piped")
        .write_all(stdin.as_bytes())
        .expect("input fits in the pipe");
    child.wait_with_output().expect("binary runs to completion")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).expect("stdout is text")
}

fn stderr(out: &Output) -> &str {
    std::str::from_utf8(&out.stderr).expect("stderr is text")
}

const CLAW: &str = "graph 4 3\ne 0 1\ne 0 2\ne 0 3\n";
const TRIANGLE: &str = "graph 3 3\ne 0 1\ne 1 2\ne 0 2\n";
const TRIANGLE_PAIR: &str = "graph 6 6\ne 0 1\ne 1 2\ne 0 2\ne 3 4\ne 4 5\ne 3 5\n";

#[test]
fn generated_line_graphs_root_back_with_a_verified_certificate() {
    let gen = run(&["gen", "--vertices", "6", "--edges", "9", "--seed", "1", "--connected"], "");
    assert_eq!(code(&gen), 0, "gen failed: {}", stderr(&gen));

    let gamma = run(&["linegraph", "--mode", "l1", "-"], stdout(&gen));
    assert_eq!(code(&gamma), 0, "linegraph failed: {}", stderr(&gamma));
    assert!(stdout(&gamma).starts_with("graph 9 "));

    let root = run(&["root", "--mode", "l1", "--verify", "-"], stdout(&gamma));
    assert_eq!(code(&root), 0, "root failed: {}", stderr(&root));
    let text = stdout(&root);
    assert_eq!(text.lines().next(), Some("root 6 9 mode=l1"));
    assert_eq!(text.lines().filter(|l| l.starts_with("map ")).count(), 9);
}

#[test]
fn negative_answers_exit_one_with_stdout_empty() {
    let out = run(&["root", "--mode", "ge1", "-"], CLAW);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).is_empty(), "stdout must stay empty on failure");
    assert!(stderr(&out).contains("not a line graph"));

    let glg = run(&["check-glg", "-"], CLAW);
    assert_eq!(code(&glg), 1);
    assert!(stdout(&glg).is_empty());
    assert!(stderr(&glg).contains("not-glg"));

    let gen = run(&["gen", "--vertices", "1", "--edges", "1", "--seed", "0"], "");
    assert_eq!(code(&gen), 1);
    assert!(stdout(&gen).is_empty());
}

#[test]
fn malformed_input_and_bad_usage_exit_two() {
    let out = run(&["root", "--mode", "l1", "-"], "hello world\n");
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).is_empty());
    assert!(stderr(&out).contains("line 1"));

    let usage = run(&["root", "--mode", "bogus", "-"], "");
    assert_eq!(code(&usage), 2);
    assert!(stdout(&usage).is_empty());
}

#[test]
fn empty_or_disconnected_input_exits_three_where_connectivity_is_required() {
    let empty = run(&["root", "--mode", "l1", "-"], "graph 0 0\n");
    assert_eq!(code(&empty), 3);
    assert!(stdout(&empty).is_empty());

    let split = run(&["root", "--mode", "l1", "-"], TRIANGLE_PAIR);
    assert_eq!(code(&split), 3);
    assert!(stdout(&split).is_empty());
    assert!(stderr(&split).contains("not connected"));
}

#[test]
fn components_are_rooted_separately_and_keep_their_original_labels() {
    let out = run(&["root", "--mode", "l1", "--components", "-"], TRIANGLE_PAIR);
    assert_eq!(code(&out), 0, "components run failed: {}", stderr(&out));
    let blocks: Vec<&str> = stdout(&out).trim_end().split("\n\n").collect();
    assert_eq!(blocks.len(), 2, "one block per component:\n{}", stdout(&out));
    for block in &blocks {
        assert!(block.starts_with("root 3 3 mode=l1"), "triangle roots to a triangle: {block}");
    }
    for v in 0..3 {
        assert!(blocks[0].contains(&format!("\nmap {v} ")));
    }
    for v in 3..6 {
        assert!(blocks[1].contains(&format!("\nmap {v} ")), "second block keeps labels 3..6");
    }
}

#[test]
fn identical_invocations_produce_identical_bytes() {
    let first = run(&["root", "--mode", "ge1", "-"], TRIANGLE);
    let second = run(&["root", "--mode", "ge1", "-"], TRIANGLE);
    assert_eq!(code(&first), 0, "triangle run failed: {}", stderr(&first));
    assert_eq!(first.stdout, second.stdout);

    let ga = run(&["gen", "--vertices", "8", "--edges", "14", "--seed", "42", "--connected"], "");
    let gb = run(&["gen", "--vertices", "8", "--edges", "14", "--seed", "42", "--connected"], "");
    assert_eq!(code(&ga), 0);
    assert_eq!(ga.stdout, gb.stdout);
}

#[test]
fn selftest_reports_on_stderr_and_keeps_stdout_empty() {
    let out = run(&["selftest"], "");
    assert_eq!(code(&out), 0, "self-checks failed:\n{}", stderr(&out));
    assert!(stdout(&out).is_empty());
    let lines: Vec<&str> = stderr(&out).lines().collect();
    assert_eq!(lines.len(), 8);
    assert!(lines.iter().all(|l| l.starts_with("check ")));
}

#[test]
fn check_glg_certifies_the_diamond_with_a_four_vertex_root() {
    let diamond = "graph 4 5\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\n";
    let out = run(&["check-glg", "-"], diamond);
    assert_eq!(code(&out), 0, "diamond rejected: {}", stderr(&out));
    assert!(stdout(&out).starts_with("mgraph 4 4\n"));
}

#[test]
fn delta0_traces_each_move_and_prints_the_collapsed_graph() {
    let out = run(&["delta0", "-"], "mgraph 3 2\ne 0 1\ne 1 2\n");
    assert_eq!(code(&out), 0, "collapse failed: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("# move 1: witness x=0 z=1 y=2"));
    assert!(text.ends_with("mgraph 2 2\ne 0 1\ne 0 1\n"), "path collapses to a doubled edge:\n{text}");
}

#[test]
fn input_may_be_a_file_path_instead_of_stdin() {
    let path = std::env::temp_dir().join(format!("lineroot-cli-{}.graph", std::process::id()));
    std::fs::write(&path, CLAW).expect("temp file is writable");
    let from_file = run(&["root", "--mode", "l1", path.to_str().expect("temp path is unicode")], "");
    let from_stdin = run(&["root", "--mode", "l1", "-"], CLAW);
    std::fs::remove_file(&path).ok();
    assert_eq!(code(&from_file), 0, "claw has a one-share root: {}", stderr(&from_file));
    assert_eq!(from_file.stdout, from_stdin.stdout);
    assert_eq!(stdout(&from_file).lines().next(), Some("root 3 4 mode=l1"));
}
