use std::fs;
use std::process::{Command, Output};

use ybgate::MatrixDocument;

fn ybgate(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ybgate"))
        .args(args)
        .env_remove("YBG_SEED")
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    ybgate(args).status.code().expect("exited normally")
}

fn stdout(args: &[&str]) -> String {
    let out = ybgate(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn matrix(args: &[&str]) -> Vec<[f64; 2]> {
    MatrixDocument::from_json(&stdout(args)).unwrap().data
}

#[test]
fn verify_passes_on_the_families() {
    assert_eq!(
        code(&[
            "verify",
            "braid",
            "--sign",
            "-",
            "--phi-grid",
            "32",
            "--tol",
            "1e-12"
        ]),
        0
    );
    assert_eq!(
        code(&["verify", "qybe", "--sign", "+", "--grid", "8", "--tol", "1e-10"]),
        0
    );
    assert_eq!(code(&["verify", "unitarity"]), 0);
    assert_eq!(code(&["verify", "schrodinger", "--grid", "3"]), 0);
    assert_eq!(code(&["verify", "exponential"]), 0);
}

#[test]
fn verify_rejects_perturbed_matrix_file() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    let bad = dir.path().join("bad.json");
    let text = stdout(&["matrix", "bphi", "--sign", "-", "--phi", "0"]);
    fs::write(&good, &text).unwrap();
    let mut doc = MatrixDocument::from_json(&text).unwrap();
    doc.data[0][0] += 0.1;
    fs::write(&bad, doc.to_json()).unwrap();

    let run = |p: &std::path::Path| {
        code(&[
            "verify",
            "braid",
            "--matrix-file",
            p.to_str().unwrap(),
            "--tol",
            "1e-12",
        ])
    };
    assert_eq!(run(&good), 0);
    assert_eq!(run(&bad), 1);
}

#[test]
fn malformed_files_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("missing.json", None),
        ("garbage.json", Some("not json")),
        (
            "short.json",
            Some(r#"{"dim": 4, "data": [[1.0, 0.0]], "meta": {}}"#),
        ),
        ("dim3.json", Some(r#"{"dim": 3, "data": [], "meta": {}}"#)),
        (
            "two.json",
            Some(r#"{"dim": 2, "data": [[1,0],[0,0],[0,0],[1,0]], "meta": {}}"#),
        ),
        (
            "huge.json",
            Some(r#"{"dim": 2, "data": [[1e999,0],[0,0],[0,0],[1,0]], "meta": {}}"#),
        ),
    ];
    for (name, content) in cases {
        let path = dir.path().join(name);
        if let Some(c) = content {
            fs::write(&path, c).unwrap();
        }
        let out = ybgate(&["verify", "braid", "--matrix-file", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(2), "{name}");
        assert!(
            !String::from_utf8_lossy(&out.stderr).contains("panicked"),
            "{name}"
        );
    }
}

#[test]
fn matrix_examples() {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let b = matrix(&["matrix", "bphi", "--sign", "-", "--phi", "0"]);
    let expect = [
        h, 0.0, 0.0, h, 0.0, h, -h, 0.0, 0.0, h, h, 0.0, -h, 0.0, 0.0, h,
    ];
    for (got, want) in b.iter().zip(expect) {
        assert!((got[0] - want).abs() < 1e-15 && got[1].abs() < 1e-15);
    }

    let r = matrix(&["matrix", "Rx", "--sign", "-", "--q", "1", "--x", "1"]);
    for (k, z) in r.iter().enumerate() {
        let want = if k % 5 == 0 { 2.0 } else { 0.0 };
        assert_eq!((z[0], z[1].abs()), (want, 0.0));
    }

    let c = matrix(&["matrix", "cnot"]);
    let ones = [0, 5, 11, 14];
    for (k, z) in c.iter().enumerate() {
        assert_eq!(z[0], if ones.contains(&k) { 1.0 } else { 0.0 });
    }

    for family in ["b", "bphi", "Rx", "Rtheta", "H", "Hx", "U", "cnot"] {
        assert_eq!(
            code(&["matrix", family, "--sign", "+", "--phi", "0.3"]),
            0,
            "{family}"
        );
    }
}

#[test]
fn matrix_usage_errors() {
    assert_eq!(
        code(&["matrix", "Rtheta", "--theta", "0.1", "--x", "0.2"]),
        2
    );
    assert_eq!(code(&["matrix", "b", "--q", "1,0", "--phi", "0.2"]), 2);
    assert_eq!(code(&["matrix", "b", "--q", "0"]), 2);
    assert_eq!(code(&["matrix", "bphi", "--q", "2"]), 2);
    assert_eq!(code(&["matrix", "bphi", "--sign", "*"]), 2);
    assert_eq!(code(&["matrix", "nope"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&[]), 2);
}

#[test]
fn synthesize_examples() {
    let out = stdout(&["synthesize", "theorem1", "--tol", "1e-12"]);
    assert!(out.contains("\"residual\"") && out.contains("\"verdict\": \"exact\""));
    assert_eq!(
        code(&["synthesize", "evolution", "--phi", "0.7", "--tol", "1e-12"]),
        0
    );

    let out = ybgate(&["synthesize", "evolution", "--phi", "0.7", "--theta", "0.3"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["residual"].as_f64().unwrap() > 0.1);
}

#[test]
fn sweep_examples() {
    let csv = stdout(&[
        "sweep",
        "concurrence",
        "--param",
        "theta",
        "--from",
        "0",
        "--to",
        "1.5708",
        "--steps",
        "65",
        "--format",
        "csv",
    ]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("param,value,quantity"));
    let rows: Vec<_> = lines.collect();
    assert_eq!(rows.len(), 65);
    for row in rows {
        let f: Vec<&str> = row.split(',').collect();
        assert_eq!(f[0], "theta");
        let (theta, c): (f64, f64) = (f[1].parse().unwrap(), f[2].parse().unwrap());
        assert!((c - (2.0 * theta).cos().abs()).abs() < 1e-12, "{row}");
    }

    let json = stdout(&[
        "sweep",
        "unitarity",
        "--param",
        "x",
        "--from",
        "-3",
        "--to",
        "3",
        "--steps",
        "61",
        "--sign",
        "-",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["values"].as_array().unwrap().len(), 61);
    assert!(v["values"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r.as_f64().unwrap() < 1e-12));

    assert_eq!(
        code(&["sweep", "braid", "--param", "phi", "--from", "0", "--to", "6", "--steps", "7"]),
        0
    );
    assert_eq!(
        code(&[
            "sweep", "qybe", "--param", "x", "--from", "0.1", "--to", "2", "--steps", "5", "--y",
            "1.5"
        ]),
        0
    );
    assert_eq!(
        code(&[
            "sweep",
            "unitarity",
            "--param",
            "x",
            "--from",
            "-3",
            "--to",
            "3",
            "--steps",
            "1"
        ]),
        2
    );
    assert_eq!(
        code(&["sweep", "braid", "--param", "x", "--from", "0", "--to", "1", "--steps", "3"]),
        2
    );
}

#[test]
fn sweep_writes_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.csv");
    let args = [
        "sweep",
        "concurrence",
        "--from",
        "0",
        "--to",
        "1",
        "--steps",
        "3",
        "--format",
        "csv",
    ];
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    assert_eq!(stdout(&with_out), "");
    assert_eq!(fs::read_to_string(&path).unwrap(), stdout(&args));
    let unwritable = dir.path().join("no/such/dir.csv");
    assert_eq!(
        code(&[
            "sweep",
            "concurrence",
            "--from",
            "0",
            "--to",
            "1",
            "--steps",
            "3",
            "--out",
            unwritable.to_str().unwrap()
        ]),
        2
    );
}

#[test]
fn runs_are_byte_identical() {
    let cases: [&[&str]; 4] = [
        &[
            "sweep",
            "concurrence",
            "--from",
            "-1",
            "--to",
            "1",
            "--steps",
            "9",
            "--phi",
            "0.4",
        ],
        &["verify", "schrodinger", "--grid", "2", "--phi-grid", "2"],
        &[
            "matrix", "U", "--sign", "-", "--phi", "1.1", "--theta", "0.2",
        ],
        &["synthesize", "evolution", "--phi", "-2.5"],
    ];
    for args in cases {
        assert_eq!(ybgate(args).stdout, ybgate(args).stdout, "{args:?}");
    }
}

#[test]
fn seed_override() {
    let run = |seed: &str| {
        Command::new(env!("CARGO_BIN_EXE_ybgate"))
            .args(["verify", "schrodinger", "--grid", "2", "--phi-grid", "1"])
            .env("YBG_SEED", seed)
            .output()
            .unwrap()
    };
    let default = run("0x5EED");
    assert_eq!(default.status.code(), Some(0));
    assert_eq!(
        default.stdout,
        ybgate(&["verify", "schrodinger", "--grid", "2", "--phi-grid", "1"]).stdout
    );
    assert_ne!(run("7").stdout, default.stdout);
    assert_eq!(run("not-a-seed").status.code(), Some(2));
}
