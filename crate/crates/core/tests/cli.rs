//! The `gkmcheck` binary: exit codes, output formats, environment
//! overrides and reproducible output.

use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

fn gkmcheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gkmcheck"))
        .args(args)
        .env_remove("GKMCHECK_P_TRUNC")
        .env_remove("GKMCHECK_Q_TRUNC")
        .env_remove("GKMCHECK_SERIES_TRUNC")
        .env_remove("GKMCHECK_TOL")
        .env_remove("GKMCHECK_DETERMINISTIC")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_codes() {
    let a1 = data("a1.txt");
    let hyper = data("hyperbolic.txt");
    let one_a = data("1A.txt");
    let cases: Vec<(Vec<&str>, i32)> = vec![
        (vec!["--help"], 0),
        (vec!["--version"], 0),
        (vec!["verify", "mid", "--p-trunc", "3", "--q-trunc", "3"], 0),
        (
            vec!["verify", "fmid", "--p-trunc", "3", "--q-trunc", "3"],
            0,
        ),
        (vec!["verify", "j-product", "--trunc", "8"], 0),
        (
            vec!["verify", "twisted", "--data", one_a.to_str().unwrap()],
            0,
        ),
        (
            vec![
                "verify",
                "twisted",
                "--class",
                "1A",
                "--p-trunc",
                "3",
                "--q-trunc",
                "3",
            ],
            0,
        ),
        (vec!["verify", "phi"], 0),
        (vec!["verify", "phi", "--tol", "1e-30"], 1),
        (vec!["lattice", "check", "--seed", "3"], 0),
        (vec!["km", "denominator", "--gcm", a1.to_str().unwrap()], 0),
        (
            vec!["km", "denominator", "--gcm", hyper.to_str().unwrap()],
            2,
        ),
        (
            vec![
                "km",
                "character",
                "--gcm",
                a1.to_str().unwrap(),
                "--weight",
                "2",
            ],
            0,
        ),
        (
            vec!["moonshine", "solve", "--known", "5", "--target", "7"],
            0,
        ),
        (
            vec!["moonshine", "solve", "--known", "4", "--target", "6"],
            1,
        ),
        (vec!["modforms", "table", "--trunc", "5"], 0),
        (vec!["verify", "mid", "--p-trunc", "0"], 2),
        (vec!["verify", "twisted", "--data", "/nonexistent/file"], 2),
        (vec!["nope"], 2),
        (vec!["verify", "mid", "--tol", "abc"], 2),
    ];
    for (args, code) in cases {
        let o = gkmcheck(&args);
        assert_eq!(
            o.status.code(),
            Some(code),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
    }
}

#[test]
fn corrupted_data_fails_with_location() {
    let text = std::fs::read_to_string(data("1A.txt")).unwrap();
    let bad = text.replacen("1: 1 0 196884", "1: 1 0 196885", 1);
    assert_ne!(bad, text);
    let path = std::env::temp_dir().join(format!("gkmcheck-bad-{}.txt", std::process::id()));
    std::fs::write(&path, bad).unwrap();
    let o = gkmcheck(&[
        "--format",
        "json",
        "verify",
        "twisted",
        "--data",
        path.to_str().unwrap(),
    ]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["equal"], false);
    assert_eq!(v["first_discrepancy"]["at"], "p^1 q^2");
    assert_eq!(v["params"]["integral"], "false");
}

#[test]
fn json_report_shape() {
    let o = gkmcheck(&[
        "--format",
        "json",
        "verify",
        "mid",
        "--p-trunc",
        "2",
        "--q-trunc",
        "2",
    ]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["name"], "mid");
    assert_eq!(v["equal"], true);
    assert_eq!(v["p_trunc"], 2);
    assert!(v["first_discrepancy"].is_null());
    assert!(v["timings_ms"].is_object());
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn deterministic_output_is_byte_identical() {
    for args in [
        vec![
            "--deterministic",
            "verify",
            "fmid",
            "--p-trunc",
            "3",
            "--q-trunc",
            "3",
        ],
        vec![
            "--deterministic",
            "--format",
            "json",
            "lattice",
            "check",
            "--seed",
            "9",
        ],
        vec![
            "--deterministic",
            "--format",
            "json",
            "moonshine",
            "solve",
            "--known",
            "5",
            "--target",
            "7",
        ],
    ] {
        let a = gkmcheck(&args);
        let b = gkmcheck(&args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn environment_overrides_defaults() {
    let o = Command::new(env!("CARGO_BIN_EXE_gkmcheck"))
        .args(["--format", "json", "verify", "mid"])
        .env("GKMCHECK_P_TRUNC", "2")
        .env("GKMCHECK_Q_TRUNC", "3")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(
        (v["p_trunc"].as_i64(), v["q_trunc"].as_i64()),
        (Some(2), Some(3))
    );
    // Flags win over the environment.
    let o = Command::new(env!("CARGO_BIN_EXE_gkmcheck"))
        .args(["--format", "json", "verify", "mid", "--p-trunc", "1"])
        .env("GKMCHECK_P_TRUNC", "2")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["p_trunc"].as_i64(), Some(1));
}

#[test]
fn text_report_mentions_discrepancy() {
    let o = gkmcheck(&["verify", "phi", "--tol", "1e-30"]);
    let s = stdout(&o);
    assert!(s.starts_with("name: phi\nequal: false\n"), "{s}");
    assert!(s.contains("first_discrepancy"));
}
