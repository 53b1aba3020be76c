use std::io::Write;
use std::process::{Command, Output, Stdio};

use active_bijection::Limits;
use active_bijection_cli::corpus::random_multigraphs;
use active_bijection_cli::document::{parse_document, parse_graph, GraphDocument};
use active_bijection_cli::table::{build_table, render_json, TableRow};
use active_bijection_cli::CliError;

const BIN: &str = env!("CARGO_BIN_EXE_active-bijection");

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn k4_tutte_all_passes() {
    let o = run(&["tutte", &fixture("k4.json"), "--method", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("trees: x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3"));
    assert!(s.ends_with("PASS\n"));
}

#[test]
fn k3_and_loop_polynomials() {
    let o = run(&["tutte", &fixture("k3.json")]);
    assert!(stdout(&o).ends_with("t = x^2 + x + y\n"));
    let o = run(&["tutte", &fixture("loop.json"), "--method", "filtrations"]);
    assert!(stdout(&o).ends_with("t = y\n"));
}

#[test]
fn k4_alpha_of_reference_and_opposite() {
    for reorient in ["", "1,2,3,4,5,6"] {
        let o = run(&[
            "alpha",
            &fixture("k4.json"),
            "--reorient",
            reorient,
            "--route",
            "both",
        ]);
        assert_eq!(o.status.code(), Some(0));
        let s = stdout(&o);
        assert!(s.contains("tree: 124\n"), "{s}");
        assert!(s.contains("partition: 1+23+456\n"), "{s}");
    }
}

#[test]
fn refined_alpha_reports_both_routes() {
    let o = run(&["alpha", &fixture("k4.json"), "--reorient", "2,3", "--refined", "--route", "both"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    // O* = {1,2,4} and A = {2,3}, so the refined image drops 2 from 124.
    assert!(s.contains("tree: 124\n"), "{s}");
    assert!(s.contains("refined: 14\n"), "{s}");
}

#[test]
fn table_of_single_edge_has_one_row() {
    let o = run(&["table", &fixture("edge.json"), "--json"]);
    let rows: Vec<TableRow> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0].tree, vec![1]);
    assert_eq!(rows[0].class, vec![vec![], vec![1]]);
}

#[test]
fn stdin_is_accepted() {
    let o = run_stdin(&["table", "-"], r#"{"vertices":3,"edges":[[0,1],[0,2],[1,2]]}"#);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 4);
}

#[test]
fn input_errors_exit_with_2() {
    let cases = [
        r#"{"vertices":2,"edges":[[0,5]]}"#,
        r#"{"vertices":2,"edges":[]}"#,
        r#"{"vertices":4,"edges":[[0,1],[2,3]]}"#,
        r#"{"vertices":3,"edges":[[0,1],[1,2]"#,
    ];
    for c in cases {
        let o = run_stdin(&["table", "-"], c);
        assert_eq!(o.status.code(), Some(2), "{c}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    }
    let o = run(&["alpha", &fixture("k3.json"), "--reorient", "7"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["verify"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn parse_errors_carry_position() {
    match parse_document("{\"vertices\":3,\n \"edges\": [[0,1],, [1,2]]}") {
        Err(CliError::Parse { line, column, .. }) => {
            assert_eq!(line, 2);
            assert!(column > 0);
        }
        other => panic!("{other:?}"),
    }
    assert!(matches!(
        parse_graph(r#"{"vertices":2,"edges":[[0,1]],"extra":1}"#, Limits::default()),
        Err(CliError::Parse { .. })
    ));
}

#[test]
fn disconnected_and_isolated_are_rejected() {
    for doc in [
        r#"{"vertices":4,"edges":[[0,1],[2,3]]}"#,
        r#"{"vertices":3,"edges":[[0,1]]}"#,
    ] {
        assert!(matches!(
            parse_graph(doc, Limits::default()),
            Err(CliError::Input(_))
        ));
    }
}

#[test]
fn verify_k4_and_random_batch() {
    let o = run(&["verify", &fixture("k4.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("all checks passed\n"));
    let o = run(&["--threads", "2", "verify", "--random", "40", "--seed", "11"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn corrupted_signs_exit_with_1() {
    let o = run(&["verify", &fixture("k4.json"), "--corrupt-signs"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL orthogonality"));
}

#[test]
fn orientation_cap_is_an_input_error() {
    let o = run(&["--max-edges", "4", "tutte", &fixture("k4.json"), "--method", "orientations"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn documents_round_trip() {
    for g in random_multigraphs(30, 5, 8) {
        let doc = GraphDocument::from_graph(&g);
        let back = parse_document(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        let (h, _) = back.build(Limits::default()).unwrap();
        assert_eq!(h, g);
    }
}

#[test]
fn table_rows_round_trip() {
    for g in random_multigraphs(30, 6, 6) {
        let rows = build_table(&g).unwrap();
        let back: Vec<TableRow> = serde_json::from_str(&render_json(&rows)).unwrap();
        assert_eq!(back, rows);
    }
}
