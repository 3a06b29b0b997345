use std::path::PathBuf;
use std::process::Command;

use rootadj::basis::table_diff;
use rootadj::cli::run;
use rootadj::document::table_from_json;

fn rootadj(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(args.iter().copied(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Compares against `tests/golden/<name>`; `UPDATE_GOLDEN=1` rewrites it.
fn assert_golden(name: &str, actual: &str) {
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "output differs from {}", path.display());
}

#[test]
fn adjoin_golden() {
    let (code, out, _) = rootadj(&["adjoin", "--preset", "ell", "--p", "5", "--m", "4", "--window", "0", "40", "--format", "text"]);
    assert_eq!(code, 0);
    assert_golden("adjoin_ell5_m4.txt", &out);
}

#[test]
fn tc_orbits_golden() {
    let (code, out, _) = rootadj(&["tc-orbits", "--m", "4", "--p", "5"]);
    assert_eq!(code, 0);
    assert_golden("tc_orbits_4_5.txt", &out);
}

#[test]
fn ku_table_golden() {
    let (_, classes, _) = rootadj(&["ku-table", "--p", "5"]);
    assert_golden("ku_classes_p5.txt", &classes);
    let (code, out, _) = rootadj(&["ku-table", "--p", "5", "--window", "0", "200"]);
    assert_eq!(code, 0);
    assert_golden("ku_table_p5_0_200.txt", &out);
}

#[test]
fn ko_check_line() {
    let (code, out, _) = rootadj(&["ko-check", "--p", "5", "--window", "0", "200"]);
    assert_eq!(code, 0);
    assert_golden("ko_check_p5.txt", &out);
    assert!(out.starts_with("PASS: even-weight reassembly of K(ku_5) table matches K(ko_5) table at all "));
}

#[test]
fn t2_golden() {
    let (code, out, _) = rootadj(&["t2", "--p", "5"]);
    assert_eq!(code, 0);
    assert_golden("t2_p5.txt", &out);
    let (_, ko7, _) = rootadj(&["t2", "--p", "7", "--preset", "ko"]);
    assert!(ko7.contains("relation: (b^2)^3 + v2 = 0"));
}

#[test]
fn basis_json_round_trip() {
    for preset in ["ell", "ku", "ko"] {
        let (code, out, _) = rootadj(&["basis", "--preset", preset, "--p", "7", "--window", "0", "60", "--format", "json"]);
        assert_eq!(code, 0);
        let table = table_from_json(&out).unwrap();
        let (_, again, _) = rootadj(&["basis", "--preset", preset, "--p", "7", "--window", "0", "60", "--format", "json"]);
        assert!(table_diff(&table, &table_from_json(&again).unwrap()).unwrap().is_empty());
        assert!(table.total_rank() > 0);
    }
}

#[test]
fn checks_report_failures_with_exit_one() {
    let (code, out, _) = rootadj(&["hhmap-check", "--m", "3", "--k", "2", "--p", "3", "--window", "0", "100", "--format", "json"]);
    assert_eq!(code, 1);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["verdict"], "FAIL");
    assert!(doc["perBidegree"].as_array().unwrap().iter().any(|r| r["ok"] == false));
    assert!(doc["notes"][0].as_str().unwrap().contains("3 ≡ 0 mod 3"));

    // determinant 2 is a unit mod 5
    let (code, _, _) = rootadj(&["hhmap-check", "--m", "4", "--k", "2", "--p", "5", "--window", "0", "100"]);
    assert_eq!(code, 0);
}

#[test]
fn passing_checks_exit_zero() {
    for args in [
        vec!["cofiber-check", "--preset", "ell", "--p", "5", "--window", "0", "60"],
        vec!["logetale-check", "--preset", "ell", "--p", "5", "--m", "4", "--window", "0", "60"],
        vec!["split-thh", "--preset", "ell", "--p", "7", "--m", "6", "--window", "0", "80"],
        vec!["props", "--seed", "3", "--pairs", "100"],
    ] {
        let (code, out, err) = rootadj(&args);
        assert_eq!(code, 0, "{args:?}: {out}{err}");
        assert!(out.starts_with("PASS"), "{args:?}: {out}");
    }
}

#[test]
fn module_errors_exit_two_with_their_name() {
    let cases: [(&[&str], &str); 5] = [
        (&["logetale-check", "--preset", "ell", "--p", "5", "--m", "5", "--window", "0", "60"], "WildPrime"),
        (&["ku-table", "--p", "3"], "SmallPrime"),
        (&["basis", "--preset", "nope", "--p", "5", "--window", "0", "4"], "UnknownPreset"),
        (&["loghh", "--preset", "ell", "--p", "5", "--gen", "w", "--window", "0", "4"], "UnknownGenerator"),
        (&["basis", "--preset", "ell", "--p", "5", "--window", "4", "0"], "InvalidWindow"),
    ];
    for (args, name) in cases {
        let (code, _, err) = rootadj(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(err.contains(name), "{args:?}: {err}");
    }
}

#[test]
fn usage_errors_name_the_flag() {
    let (code, _, err) = rootadj(&["hh", "--preset", "ell", "--p", "5"]);
    assert_eq!(code, 2);
    assert!(err.contains("--window"), "{err}");
    let (code, _, err) = rootadj(&["basis", "--window", "0"]);
    assert_eq!(code, 2);
    assert!(err.contains("--window"), "{err}");
}

#[test]
fn input_documents_and_out_files() {
    let dir = std::env::temp_dir().join(format!("rootadj-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("ell.json");
    std::fs::write(
        &input,
        r#"{"coeffs": {"kind": "ZpLocal", "p": 5}, "gens": [{"name": "v1", "deg": 8, "wt": 0, "kind": "polynomial"}], "root": {"a": "v1", "m": 4}}"#,
    )
    .unwrap();
    let out = dir.join("ku.json");
    let (code, stdout, err) = rootadj(&[
        "adjoin",
        "--input",
        input.to_str().unwrap(),
        "--window",
        "0",
        "40",
        "--format",
        "json",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(stdout.is_empty());
    let from_file = table_from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let (_, preset_json, _) = rootadj(&["adjoin", "--preset", "ell", "--p", "5", "--m", "4", "--window", "0", "40", "--format", "json"]);
    assert!(table_diff(&from_file, &table_from_json(&preset_json).unwrap()).unwrap().is_empty());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_rootadj");
    let ok = Command::new(bin).args(["tc-orbits", "--m", "4", "--p", "3"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).starts_with("blocks {0} {1,3} {2}"));
    let fail = Command::new(bin)
        .args(["hhmap-check", "--m", "3", "--k", "2", "--p", "3", "--window", "0", "30"])
        .output()
        .unwrap();
    assert_eq!(fail.status.code(), Some(1));
    let usage = Command::new(bin).arg("frobnicate").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}
