//! End-to-end checks of the `daisy` binary: exit-code verdicts, stream
//! discipline, pipelines, and JSON that faithfully mirrors library calls.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

fn golden(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
        .to_str()
        .unwrap()
        .to_owned()
}

fn daisy(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_daisy"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child.stdin.as_mut().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().expect("no signal"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn verdicts_become_exit_codes() {
    let (code, out, _) = daisy(&["check", &golden("star.adg")], "");
    assert_eq!(code, 0);
    assert!(out.starts_with("gradable\n"));

    let (code, out, _) = daisy(&["check", &golden("conflict.adg")], "");
    assert_eq!(code, 1);
    assert!(out.starts_with("not gradable:"));

    let (code, _, err) = daisy(&["check", &golden("single_edge.dg")], "");
    assert_eq!(code, 2, "plain dg has no arrows to grade");
    assert!(err.contains("needs an arrowed document"));

    let (code, _, _) = daisy(&["realizable", "--manifold", "periodic-closed", &golden("db_star.adg")], "");
    assert_eq!(code, 1, "DB values block closed classes");
    let (code, _, _) = daisy(&["realizable", "--manifold", "infinite-bounded", &golden("db_star.adg")], "");
    assert_eq!(code, 0);

    let (code, _, _) = daisy(&[], "");
    assert_eq!(code, 2, "missing subcommand is a usage error");
    let (code, _, _) = daisy(&["--help"], "");
    assert_eq!(code, 0);
}

#[test]
fn lift_pipes_into_check_and_realizable() {
    let (code, lifted, _) = daisy(&["lift", &golden("two_triple_cycle.dg")], "");
    assert_eq!(code, 0);
    assert!(lifted.starts_with("adg\n"));

    let (code, out, _) = daisy(&["check"], &lifted);
    assert_eq!(code, 0, "a lifted document is gradable: {out}");
    assert!(out.contains("edge a 0\n") && out.contains("edge b 1\n"), "{out}");

    let (code, _, _) = daisy(&["realizable", "--manifold", "periodic-closed"], &lifted);
    assert_eq!(code, 0, "gradable and DB-free realizes in periodic-closed");

    let (code, _, err) = daisy(&["lift", &golden("consecutive_loop.dg")], "");
    assert_eq!(code, 1);
    assert!(err.contains("odd closed arc"));
}

#[test]
fn json_mirrors_the_library() {
    use daisy::textio::{parse, Document};

    let text = std::fs::read_to_string(golden("star.adg")).unwrap();
    let Document::Adg(g) = parse(&text).unwrap() else { panic!() };
    let grading = daisy::grading::grade(&g).unwrap();

    let (code, out, _) = daisy(&["grade", "--json", &golden("star.adg")], "");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    for (e, g) in &grading.grades {
        assert_eq!(v["grades"][e.to_string()], serde_json::json!(*g), "grade of {e}");
    }
    for (vertex, a) in &grading.bases {
        assert_eq!(v["bases"][vertex.to_string()], serde_json::json!(*a), "base of {vertex}");
    }

    let (code, out, _) = daisy(
        &["realizable", "--manifold", "periodic-closed", "--json", &golden("db_star.adg")],
        "",
    );
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["realizable"], serde_json::json!(false));
    assert_eq!(v["reasons"][0]["kind"], serde_json::json!("has-DB-values"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        vec!["census", "--max-triples", "1"],
        vec!["export-dot", &golden("gen_random.adg")],
        vec!["gen", "--seed", "42", "--max-triples", "3", "--db-prob", "0.3"],
        vec!["arcs", &golden("theta_chain.dg")],
    ] {
        let (code_a, out_a, _) = daisy(&args, "");
        let (code_b, out_b, _) = daisy(&args, "");
        assert_eq!((code_a, &out_a), (code_b, &out_b), "{args:?}");
        assert!(!out_a.is_empty(), "{args:?}");
    }
}

#[test]
fn census_csv_has_the_documented_columns() {
    let (code, out, err) = daisy(&["census", "--max-triples", "1", "--oracle-check"], "");
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(
        lines.next().unwrap(),
        "instance,gradable,db_count,periodic_closed,periodic_bounded,infinite_closed,infinite_bounded"
    );
    let first = lines.next().unwrap();
    assert_eq!(first.split(',').count(), 7, "{first}");
    assert!(err.contains("0 disagreements"));
}

#[test]
fn euler_prints_exact_half_integers() {
    let (code, out, _) = daisy(&["euler", "--chi-f", "0", "--t", "3", "--b", "1"], "");
    assert_eq!((code, out.as_str()), (0, "7/2\n"));
    let (code, out, _) = daisy(&["euler", "--chi-f", "2", "--t", "0", "--b", "0"], "");
    assert_eq!((code, out.as_str()), (0, "2\n"));
}
