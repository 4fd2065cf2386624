use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn kahler(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kahler"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn kahler_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kahler"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn golden(name: &str) -> Vec<u8> {
    std::fs::read(
        Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("tests/golden")
            .join(name),
    )
    .unwrap()
}

#[test]
fn dump_matches_golden_files() {
    for (args, file) in [
        (
            &["dump", "--case", "poly", "--n", "1", "--m", "2"][..],
            "poly_1_2.json",
        ),
        (
            &["dump", "--case", "ext", "--n", "2", "--m", "2"][..],
            "ext_2_2.json",
        ),
        (
            &["dump", "--case", "ext-usual", "--n", "2"][..],
            "ext-usual_2.json",
        ),
    ] {
        let out = kahler(args);
        assert!(out.status.success());
        assert_eq!(out.stdout, golden(file), "{file}");
    }
}

#[test]
fn dump_to_file_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let out = kahler(&[
            "dump",
            "--case",
            "ext",
            "--n",
            "1",
            "--m",
            "1",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let bytes = std::fs::read(&a).unwrap();
    assert_eq!(bytes, std::fs::read(&b).unwrap());
    let v: Value = serde_json::from_slice(&bytes).unwrap();
    assert_eq!(v["total_dim"], 2);
}

/// `L(1⊗x²) = 2 d⊗x` and `L(d⊗x) = d²⊗1`.
#[test]
fn dump_poly_line_operator() {
    let v = json(&kahler(&["dump", "--case", "poly", "--n", "1", "--m", "2"]));
    let l = v["operators"]["L"].as_array().unwrap();
    assert_eq!(l[0]["entries"][0][0], "2/1");
    assert_eq!(l[1]["entries"][0][0], "1/1");
    assert_eq!(v["total_dim"], 3);
}

#[test]
fn verify_grid_passes() {
    let out = kahler(&["verify", "--case", "poly", "--n", "1..3", "--m", "0..4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["reports"].as_array().unwrap().len(), 15);
}

#[test]
fn verify_usual_grading_reports_signatures() {
    let out = kahler(&["verify", "--case", "ext-usual", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let report = &v["reports"][0];
    let sig = |d: i64| {
        let s = report["lefschetz_signatures"]
            .as_array()
            .unwrap()
            .iter()
            .find(|s| s["degree"] == d)
            .unwrap();
        let s = &s["signature"];
        (
            s["positive"].as_u64().unwrap(),
            s["negative"].as_u64().unwrap(),
            s["zero"].as_u64().unwrap(),
        )
    };
    assert_eq!(sig(-1), (2, 2, 0));
    assert_eq!(sig(0), (3, 3, 0));
    let hr = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "hr-expected-failure")
        .unwrap();
    assert_eq!(hr["pass"], true);
    assert_eq!(hr["expected_failure"], true);
}

#[test]
fn markdown_carries_the_same_numbers() {
    let out = kahler(&[
        "verify",
        "--case",
        "ext-usual",
        "--n",
        "2",
        "--format",
        "markdown",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("| -1 | 2 | 2 | 0 |"));
    assert!(text.contains("| 0 | 3 | 3 | 0 |"));
}

#[test]
fn preconditions_exit_with_two() {
    assert_eq!(
        kahler(&["verify", "--case", "ext", "--n", "2", "--m", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        kahler(&["schur", "nonneg", "--lambda", "2", "--mu", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        kahler(&["schur", "line", "--start", "1,0", "--step", "-1,1", "--count", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        kahler(&["logconcavity", "--target", "coinvariant", "--n", "9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        kahler(&[
            "logconcavity",
            "--target",
            "novak",
            "--n",
            "2..3",
            "--format",
            "csv"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        kahler(&["verify", "--case", "poly", "--n", "3..1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn cap_override_from_environment() {
    let args = ["verify", "--case", "poly", "--n", "2", "--m", "2"];
    assert_eq!(
        kahler_env(&args, "KAHLER_DIM_CAP", "2").status.code(),
        Some(2)
    );
    assert_eq!(
        kahler_env(&args, "KAHLER_DIM_CAP", "100").status.code(),
        Some(0)
    );
    assert_eq!(
        kahler(&[&args[..], &["--cap-degree", "1"]].concat())
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn logconcavity_targets() {
    let out = kahler(&["logconcavity", "--target", "poly", "--n", "2", "--m", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let step = &v["jobs"][0]["verdicts"]["strong_chain"]["details"]["steps"][0];
    assert_eq!(step["step"], "0->1");
    assert_eq!(step["slack"]["(1,1)"], 1);
    assert_eq!(
        kahler(&["logconcavity", "--target", "novak", "--n", "3"])
            .status
            .code(),
        Some(0)
    );
    let out = kahler(&[
        "logconcavity",
        "--target",
        "coinvariant",
        "--n",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "degree,(2),\"(1,1)\"\n0,1,0\n1,0,1\n"
    );
}

#[test]
fn schur_commands() {
    let v = json(&kahler(&[
        "schur", "pieri", "--lambda", "2,1", "--k", "1", "--row",
    ]));
    assert_eq!(v["pass"], true);
    assert_eq!(
        v["details"]["strips"],
        serde_json::json!(["(3,1)", "(2,2)", "(2,1,1)"])
    );
    let out = kahler(&["schur", "nonneg", "--max-size", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["pairs"].as_array().unwrap().len() > 30);
    let out = kahler(&[
        "schur", "nonneg", "--lambda", "3,1", "--mu", "1,1", "--format", "csv",
    ]);
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("lambda,mu,nu,coefficient\n"));
    let out = kahler(&[
        "schur", "line", "--start", "2,1", "--step", "1,1", "--count", "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
}
