mod common;

use common::*;
use convwam::algebra::{PolyMatrix, StructuredMatrix};

fn path(name: &str) -> String {
    fixture(name).to_str().unwrap().to_string()
}

#[test]
fn output_is_deterministic() {
    let cases: [&[&str]; 5] = [
        &["conv", "wam"],
        &["conv", "total", "--dmax", "6"],
        &["quantum", "state-diagram", "--format", "dot"],
        &["quantum", "sd"],
        &["block", "dual"],
    ];
    let files = [
        "example1.cc",
        "ternary.cc",
        "u1.qcc",
        "u2-qcc.qcc",
        "hexacode.blk",
    ];
    for (args, file) in cases.iter().zip(files) {
        let p = path(file);
        let mut argv = args.to_vec();
        argv.push(&p);
        let first = run_cli(&argv);
        assert_eq!(first.0, 0, "{argv:?}: {}", first.2);
        assert_eq!(first, run_cli(&argv), "{argv:?}");
    }
}

#[test]
fn structured_matrix_round_trips() {
    for file in ["example1-nonsys.cc", "u2-ea.qcc"] {
        let group = if file.ends_with(".cc") {
            "conv"
        } else {
            "quantum"
        };
        let (code, out, _) = run_cli(&[group, "dual-wam", "--format", "structured", &path(file)]);
        assert_eq!(code, 0);
        let s: StructuredMatrix = serde_json::from_str(&out).unwrap();
        let m = PolyMatrix::from_structured(&s).unwrap();
        assert_eq!(m.to_structured(), s);
        let (_, text, _) = run_cli(&[group, "dual-wam", &path(file)]);
        assert_eq!(m.render(), text);
    }
}

#[test]
fn parse_errors_name_line_and_column() {
    let dir = std::env::temp_dir().join(format!("convwam-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.blk");
    std::fs::write(&bad, "q 2 1\nn 3\nk 1\n1 0 x\n").unwrap();
    let (code, out, err) = run_cli(&["block", "hwgf", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("bad.blk:4:5:"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn input_errors_exit_two() {
    let (code, _, err) = run_cli(&["--budget", "4", "block", "hwgf", &path("hamming7.blk")]);
    assert_eq!(code, 2);
    assert!(err.contains("limit of 4"), "{err}");
    let (code, _, _) = run_cli(&["conv", "wam", &path("missing.cc")]);
    assert_eq!(code, 2);
    let (code, _, _) = run_cli(&["conv", "wam", "--bogus", &path("example1.cc")]);
    assert_eq!(code, 2);
    let (code, _, _) = run_cli(&["conv", "wam", "--format", "dot", &path("example1.cc")]);
    assert_eq!(code, 2);
    let (code, _, _) = run_cli(&["conv"]);
    assert_eq!(code, 2);
}

#[test]
fn known_outputs() {
    let (_, out, _) = run_cli(&["quantum", "dual-wam", "--collapse", "y", &path("u2-ea.qcc")]);
    assert_eq!(
        out,
        matrix_text(
            &["I", "X", "Y", "Z"],
            &[
                ["1 + y + 2*y^2", "0", "0", "0"],
                ["0", "y + 3*y^2", "0", "0"],
                ["0", "0", "y + 3*y^2", "0"],
                ["0", "0", "0", "1 + y + 2*y^2"],
            ]
        )
    );
    let (_, out, _) = run_cli(&["quantum", "sd", &path("u2-qcc.qcc")]);
    assert!(out.contains("SZ[1] = IZ + D*ZI"), "{out}");
    let (code, out, _) = run_cli(&["conv", "dfree", &path("example1.cc")]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "5");
    // series are taken at x = 1
    let (_, out, _) = run_cli(&["conv", "total", "--dmax", "3", &path("example1.cc")]);
    assert_eq!(out, "1 + D + D^2 + D^3 + y^5*D^3\n");
}

#[test]
fn dot_export_lists_every_edge() {
    let (code, out, _) = run_cli(&[
        "quantum",
        "state-diagram",
        "--format",
        "dot",
        &path("u1.qcc"),
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph"));
    // 4^m 4^k 2^a group elements, one edge each
    assert_eq!(out.matches(" -> ").count(), 16);
    assert!(out.contains("[label=\"X,XZ\"]"), "{out}");
}

#[test]
fn check_commands_pass_on_fixtures() {
    let (code, out, _) = run_cli(&["conv", "check-dual", &path("example1.cc")]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = run_cli(&["quantum", "check-seed", &path("u2-ea.qcc")]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn invalid_seed_fails_check() {
    let dir = std::env::temp_dir().join(format!("convwam-seed-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let text = fixture_text("u1.qcc").replace("X1 -> XXX", "X1 -> ZIX");
    let bad = dir.join("bad.qcc");
    std::fs::write(&bad, text).unwrap();
    let (code, out, _) = run_cli(&["quantum", "check-seed", bad.to_str().unwrap()]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("FAIL"));
    std::fs::remove_dir_all(&dir).unwrap();
}
