use std::io::Cursor;
use std::process::Command;

use tdgame_cli::{play, run, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION};
use tdgame_core::graph::named;
use tdgame_core::Mover;

const C8: &str = "0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 0\n";
const F10: &str = "# path 0..8 with a leaf at 4\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n4 9\n";
const P4: &str = "0 1\n1 2\n2 3\n";
const P5: &str = "0 1\n1 2\n2 3\n3 4\n";
const K15: &str = "0 1\n0 2\n0 3\n0 4\n0 5\n";

/// Runs the CLI with `graph` on stdin (addressed as `-`).
fn tdgame(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut argv = vec!["tdgame"];
    argv.extend_from_slice(args);
    let mut input = Cursor::new(stdin.as_bytes().to_vec());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut input, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn solve_cycle_and_f10() {
    let (code, out, _) = tdgame(&["solve", "-"], C8);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("dtg=5 stg=4"), "{out}");
    let (_, out, _) = tdgame(&["solve", "-"], F10);
    assert!(out.starts_with("gamma_t=6 dtg=6"), "{out}");
    assert!(out.contains("optimal_dominator=1,7\n"));
}

#[test]
fn solve_partial_states() {
    let (code, out, _) = tdgame(&["solve", "-", "--dominated", "0,1,2,3"], P4);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "dtg=0 stg=0\n");
    let (_, out, _) = tdgame(&["solve", "-", "--start", "staller"], P4);
    assert_eq!(out.lines().next(), Some("stg=3"));
    let (_, out, _) = tdgame(&["solve", "-", "--dominated", "1,2", "--json"], P4);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dominated"], serde_json::json!([1, 2]));
    assert!(v["dtg"].as_u64().unwrap() >= 1);
}

#[test]
fn output_is_byte_stable() {
    for args in [&["solve", "-", "--json"][..], &["recognize", "-", "--json"], &["solve", "-"]] {
        let a = tdgame(args, F10);
        let b = tdgame(args, F10);
        assert_eq!(a, b);
    }
}

#[test]
fn recognize_examples() {
    let (_, out, _) = tdgame(&["recognize", "-"], P5);
    assert_eq!(out, "in_fstar=true\nvia=reduced removed_leaves=0 base=F1\ncenter=2 k=(2,0,0,0)\n");
    let (_, out, _) = tdgame(&["recognize", "-"], P4);
    assert_eq!(out, "in_fstar=false\n");
    let (_, out, _) = tdgame(&["recognize", "-"], K15);
    assert_eq!(out, "in_fstar=true\nvia=star\n");
    let (code, _, err) = tdgame(&["recognize", "-"], C8);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("not a tree"), "{err}");
}

#[test]
fn recognize_reports_input_ids_after_reduction() {
    // P5 with two extra leaves on vertex 1: reduction renumbers vertices
    let (_, out, _) = tdgame(&["recognize", "-", "--json"], "0 1\n1 2\n2 3\n3 4\n1 5\n1 6\n");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["in_fstar"], true);
    assert_eq!(v["certificate"]["removed_leaves"], 2);
    assert_eq!(v["certificate"]["base"]["decomposition"]["center"], 2);
}

#[test]
fn gammat_and_enum() {
    let (_, out, _) = tdgame(&["gammat", "-"], F10);
    assert!(out.starts_with("gamma_t=6\n"));
    let (_, out, _) = tdgame(&["enum", "6"], "");
    assert_eq!(out.lines().count(), 6);
    let (_, out, _) = tdgame(&["enum", "4", "--forests"], "");
    assert_eq!(out.lines().count(), 3);
    let (code, _, _) = tdgame(&["enum", "30"], "");
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(tdgame(&["solve"], "").0, EXIT_USAGE);
    assert_eq!(tdgame(&["solve", "-"], "0 0\n").0, EXIT_USAGE);
    assert_eq!(tdgame(&["solve", "-"], "0 1\n0 x\n").0, EXIT_USAGE);
    assert_eq!(tdgame(&["solve", "-", "--dominated", "0,9"], P4).0, EXIT_USAGE);
    assert_eq!(tdgame(&["solve", "-", "--dominated", "0, 1"], P4).0, EXIT_USAGE);
    assert_eq!(tdgame(&["solve", "-", "--start", "nobody"], P4).0, EXIT_USAGE);
    assert_eq!(tdgame(&["verify", "--theorem", "7"], "").0, EXIT_USAGE);
    assert_eq!(tdgame(&["verify", "--theorem", "2", "--max-n", "40"], "").0, EXIT_USAGE);
    assert_eq!(tdgame(&["solve", "/nonexistent/graph.txt"], "").0, EXIT_USAGE);
}

#[test]
fn verify_passes_and_writes_reports() {
    let dir = std::env::temp_dir().join(format!("tdgame-reports-{}", std::process::id()));
    let d = dir.to_str().unwrap();
    let (code, out, _) = tdgame(&["verify", "--theorem", "2", "--max-n", "9", "--jobs", "2", "--reports", d], "");
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.starts_with("theorem2 PASS max_n=9 instances=94 "), "{out}");
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.join("theorem2.json")).unwrap()).unwrap();
    assert_eq!(report["passed"], true);
    assert_eq!(report["instances"], 94);
    for theorem in ["1", "gap"] {
        let (code, out, _) = tdgame(&["verify", "--theorem", theorem, "--max-n", "8", "--jobs", "2"], "");
        assert_eq!(code, EXIT_OK, "{out}");
    }
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_violation_exits_1() {
    // the F* characterization first fails at order 12
    let (code, out, _) = tdgame(&["verify", "--theorem", "2", "--max-n", "12", "--json"], "");
    assert_eq!(code, EXIT_VIOLATION);
    let reports: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(reports[0]["violations"][0]["code"], "(((((()))()))((((())))))");
}

#[test]
fn play_staller_on_c8_lasts_at_most_five() {
    let g = named::cycle(8);
    // the human tries junk first, then always takes the smallest legal move
    let mut script = String::from("junk\n99\n");
    script.push_str(&(0..8).map(|v| format!("{v}\n")).collect::<String>().repeat(8));
    let mut out = Vec::new();
    let summary = play(&g, Mover::Staller, Mover::Dominator, &mut Cursor::new(script), &mut out).unwrap();
    let text = String::from_utf8(out).unwrap();
    assert!(summary.moves.len() <= 5);
    assert_eq!(summary.optimal, 5);
    assert!(text.contains("`junk` is not a vertex id"));
    assert!(text.contains("vertex 99 is out of range"));
}

#[test]
fn play_never_accepts_illegal_moves() {
    let g = named::complete(2);
    // 0 then 0 again: the second is illegal once 1 is dominated
    let mut out = Vec::new();
    let summary = play(&g, Mover::Dominator, Mover::Dominator, &mut Cursor::new("0\n0\n1\n"), &mut out).unwrap();
    assert_eq!(summary.moves.len(), 2);
    assert_eq!(summary.optimal, 2);
}

#[test]
fn play_ends_cleanly_when_input_runs_out() {
    let g = named::path(4);
    let mut out = Vec::new();
    let err = play(&g, Mover::Dominator, Mover::Dominator, &mut Cursor::new(""), &mut out).unwrap_err();
    assert_eq!(err.code, EXIT_USAGE);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_tdgame");
    let status = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(status.status.code(), Some(0));
    let status = Command::new(bin).arg("bogus").output().unwrap();
    assert_eq!(status.status.code(), Some(2));
    let path = std::env::temp_dir().join(format!("tdgame-c8-{}.txt", std::process::id()));
    std::fs::write(&path, C8).unwrap();
    let o = Command::new(bin).arg("solve").arg(&path).output().unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).contains("dtg=5 stg=4"));
}
