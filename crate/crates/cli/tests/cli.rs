use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

const H7: &str = "7 9\n0 1\n0 3\n0 4\n1 5\n1 6\n2 3\n2 4\n2 5\n2 6\n";
const K4: &str = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
const C4: &str = "4 4\n0 1\n0 3\n1 2\n2 3\n";
const C5: &str = "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n";
const P4: &str = "4 3\n0 1\n1 2\n2 3\n";

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_chordless"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn check_reports_verdicts_and_witnesses() {
    let o = run(&["check", "-"], H7);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "chordless: yes\n2-sparse: no (0,1)\n");

    let o = run(&["check", "-"], K4);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("chordless: no ("));

    let o = run(&["--machine", "check", "-"], H7);
    assert_eq!(stdout(&o), "chordless=yes two_sparse=no dense_edge=0,1\n");
}

#[test]
fn malformed_and_missing_inputs() {
    let o = run(&["check", "-"], "3 1\n0 zebra\n");
    assert_eq!(o.status.code(), Some(64));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let o = run(&["check", "/definitely/not/here.txt"], "");
    assert_eq!(o.status.code(), Some(66));

    let o = run(&["frobnicate"], "");
    assert_eq!(o.status.code(), Some(64));

    let o = run(&["--help"], "");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn color_headers_and_refusals() {
    let o = run(&["color", "-"], C5);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("3\n"));
    assert_eq!(stdout(&o).lines().count(), 6);

    let o = run(&["color", "-"], H7);
    assert!(stdout(&o).starts_with("4\n"));

    let o = run(&["color", "-"], K4);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
}

#[test]
fn verify_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "c4.txt", C4);
    let good = write(dir.path(), "good.txt", "3\n0 1 1\n0 3 3\n1 2 2\n2 3 1\n");
    let o = run(&["verify", &graph, &good], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "proper: yes\nacyclic: yes\n");

    let bad = write(dir.path(), "bad.txt", "2\n0 1 1\n0 3 2\n1 2 2\n2 3 1\n");
    let o = run(&["verify", &graph, &bad], "");
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(
        stdout(&o),
        "proper: yes\nacyclic: no (colors 1 and 2 on cycle 0-1-2-3)\n"
    );

    let improper = write(
        dir.path(),
        "improper.txt",
        "2\n0 1 1\n0 3 1\n1 2 2\n2 3 2\n",
    );
    let o = run(&["verify", &graph, &improper], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("acyclic: not checked"));

    let partial = write(dir.path(), "partial.txt", "3\n0 1 1\n");
    assert_eq!(
        run(&["verify", &graph, &partial], "").status.code(),
        Some(65)
    );
    let stray = write(
        dir.path(),
        "stray.txt",
        "3\n0 1 1\n0 2 2\n0 3 3\n1 2 2\n2 3 1\n",
    );
    assert_eq!(run(&["verify", &graph, &stray], "").status.code(), Some(65));
}

#[test]
fn color_output_verifies() {
    let dir = tempfile::tempdir().unwrap();
    for (name, text) in [("h7", H7), ("c5", C5), ("p4", P4)] {
        let graph = write(dir.path(), &format!("{name}.txt"), text);
        let coloring = stdout(&run(&["color", &graph], ""));
        let coloring = write(dir.path(), &format!("{name}.col"), &coloring);
        let o = run(&["verify", &graph, &coloring], "");
        assert_eq!(o.status.code(), Some(0), "{name}");
    }
}

#[test]
fn arboricity_listing() {
    let o = run(&["arboricity", "-"], P4);
    assert_eq!(stdout(&o), "forest 1: 0 1, 1 2, 2 3\n");
    let o = run(&["arboricity", "-"], C5);
    assert_eq!(stdout(&o).lines().count(), 2);
    let o = run(&["arboricity", "-"], H7);
    assert_eq!(stdout(&o).lines().count(), 2);
    let o = run(&["--machine", "arboricity", "-"], P4);
    assert_eq!(stdout(&o), "forest=1 edges=0-1,1-2,2-3\n");
    assert_eq!(run(&["arboricity", "-"], K4).status.code(), Some(2));
}

#[test]
fn oracle_output() {
    let o = run(&["oracle", "-"], K4);
    let text = stdout(&o);
    assert!(text.starts_with("aci=5\n5\n"), "{text}");
    let o = run(&["oracle", "--max-k", "4", "-"], K4);
    assert_eq!(o.status.code(), Some(65));
    let o = run(&["oracle", "--max-edges", "5", "-"], K4);
    assert_eq!(o.status.code(), Some(65));
}

#[test]
fn split_output() {
    let o = run(&["split", "-"], H7);
    assert_eq!(stdout(&o), "2 0 | 1 5 6 | 3 4\n");
    let o = run(&["split", "--slow-checks", "-"], H7);
    assert_eq!(stdout(&o), "2 0 | 1 5 6 | 3 4\nminimal: yes\n");
    let o = run(&["--machine", "split", "-"], H7);
    assert_eq!(stdout(&o), "a=2 b=0 x=1,5,6 y=3,4\n");
    assert_eq!(run(&["split", "-"], C5).status.code(), Some(65));
}

#[test]
fn gen_is_deterministic_and_chordless() {
    let a = stdout(&run(&["gen", "60", "--seed", "4"], ""));
    let b = stdout(&run(&["gen", "60", "--seed", "4"], ""));
    assert_eq!(a, b);
    assert!(a.starts_with("60 "));
    let o = run(&["check", "-"], &a);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(run(&["gen", "2"], "").status.code(), Some(64));
}

#[test]
fn repeated_colorings_are_byte_identical() {
    let g = stdout(&run(&["gen", "500", "--seed", "8"], ""));
    let first = run(&["color", "-"], &g);
    let second = run(&["color", "-"], &g);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn bench_rows() {
    let o = run(&["--machine", "bench", "100", "200", "400"], "");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 4);
    assert!(rows[..3]
        .iter()
        .all(|r| r.starts_with("n=") && r.ends_with("verified=yes")));
    assert!(rows[3].starts_with("exponent="));

    let o = run(&["bench"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
}
