use std::path::Path;
use std::process::{Command, Output};

fn ovalcodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ovalcodes"))
        .args(args)
        .env_remove("OVALCODES_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn build(dir: &Path, name: &str, args: &[&str]) -> String {
    let out = dir.join(name);
    let out = out.to_str().unwrap().to_string();
    let mut full = vec!["code", "build"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &out]);
    let o = ovalcodes(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    out
}

#[test]
fn list_counts_rows() {
    let o = ovalcodes(&["opoly", "list", "--m", "3"]);
    assert!(o.status.success());
    let rows = stdout(&o).lines().skip(1).count();
    assert_eq!(rows, 8);
    let m4 = stdout(&ovalcodes(&["opoly", "list", "--m", "4"]));
    assert!(m4.contains("adelaide") && m4.contains("subiaco") && !m4.contains("segre"));
    assert_eq!(
        ovalcodes(&["opoly", "list", "--m", "1"]).status.code(),
        Some(2)
    );
}

#[test]
fn list_json_is_deterministic() {
    let a = ovalcodes(&["opoly", "list", "--m", "6", "--json"]);
    let b = ovalcodes(&["opoly", "list", "--m", "6", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v[0]["family"], "translation");
    assert_eq!(v[0]["params"]["h"], 1);
}

#[test]
fn opoly_verify_verdicts() {
    let o = ovalcodes(&["opoly", "verify", "--family", "segre", "--m", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("PASS").count(), 5);

    let o = ovalcodes(&["opoly", "verify", "--family", "segre", "--m", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness"));

    let o = ovalcodes(&[
        "opoly",
        "verify",
        "--family",
        "translation",
        "--h",
        "2",
        "--m",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("gcd"));
}

#[test]
fn build_and_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let c = build(
        dir.path(),
        "c.json",
        &["--construction", "cf", "--family", "segre", "--m", "3"],
    );
    let file: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&c).unwrap()).unwrap();
    assert_eq!((file["k"].as_u64(), file["n"].as_u64()), (Some(3), Some(9)));
    assert_eq!(file["label"], "Gf/segre/m=3");
    let o = ovalcodes(&["code", "analyze", &c]);
    assert!(stdout(&o).contains("[9,3,6] NMDS, Griesmer almost-optimal"));

    let e = build(
        dir.path(),
        "e.json",
        &[
            "--construction",
            "extended",
            "--family",
            "segre",
            "--m",
            "3",
        ],
    );
    assert!(
        stdout(&ovalcodes(&["code", "analyze", &e])).contains("[11,3,8] NMDS, distance-optimal")
    );

    let t = build(
        dir.path(),
        "t.json",
        &[
            "--construction",
            "extended",
            "--family",
            "translation",
            "--h",
            "1",
            "--m",
            "4",
        ],
    );
    let file: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&t).unwrap()).unwrap();
    assert_eq!(file["n"], 19);
}

#[test]
fn analyze_formats() {
    let dir = tempfile::tempdir().unwrap();
    let c = build(
        dir.path(),
        "c.json",
        &["--construction", "cfbar", "--family", "segre", "--m", "3"],
    );
    let csv = stdout(&ovalcodes(&["code", "analyze", &c, "--csv"]));
    assert!(csv.starts_with("weight,count\n0,1\n"));
    assert!(csv.contains("\n7,42\n"));
    let a = ovalcodes(&["code", "analyze", &c, "--json"]);
    let b = ovalcodes(&["code", "analyze", &c, "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["class"], "NMDS");
    assert_eq!(v["weights"][10], 154);
    assert_eq!(v["dual_weights"][3], 42);
}

#[test]
fn build_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "--construction",
        "hyperoval-mds",
        "--family",
        "adelaide",
        "--m",
        "4",
    ];
    let a = build(dir.path(), "a.json", &args);
    let b = build(dir.path(), "b.json", &args);
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let c = build(
        dir.path(),
        "c.json",
        &["--construction", "cf", "--family", "segre", "--m", "3"],
    );
    let text = std::fs::read_to_string(&c).unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, &text[..text.len() / 2]).unwrap();
    assert_eq!(
        ovalcodes(&["code", "analyze", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );

    let o = ovalcodes(&[
        "code",
        "build",
        "--construction",
        "nope",
        "--family",
        "segre",
        "--m",
        "3",
        "--out",
        "x",
    ]);
    assert_eq!(o.status.code(), Some(2));

    assert_eq!(
        ovalcodes(&["--max-budget", "100", "code", "analyze", &c])
            .status
            .code(),
        Some(3)
    );
    let o = Command::new(env!("CARGO_BIN_EXE_ovalcodes"))
        .args(["code", "analyze", &c])
        .env("OVALCODES_BUDGET", "511")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_theorem_cases() {
    let o = ovalcodes(&[
        "verify", "theorem", "--id", "4.1", "--family", "segre", "--m", "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for count in ["42", "126", "189", "154"] {
        assert!(out.contains(count));
    }
    assert!(out.contains("result: PASS"));

    let o = ovalcodes(&[
        "verify",
        "theorem",
        "--id",
        "3.1",
        "--family",
        "translation",
        "--h",
        "1",
        "--m",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(0));

    let o = ovalcodes(&[
        "verify", "theorem", "--id", "4.1", "--family", "segre", "--m", "4",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("m must be odd"));
}

#[test]
fn verify_theorem_sweep_at_one_degree() {
    let o = ovalcodes(&["verify", "theorem", "--id", "5.1", "--m", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("9 checked, 0 failed"), "{out}");
    assert!(out.contains("subiaco(a=1): skipped"));
}

#[test]
fn counterexample_outside_hypotheses_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let p = build(
        dir.path(),
        "p.json",
        &[
            "--construction",
            "cf",
            "--family",
            "translation",
            "--h",
            "1",
            "--m",
            "4",
        ],
    );
    let out = stdout(&ovalcodes(&["code", "analyze", &p]));
    assert!(out.contains("[17,3,13] other"), "{out}");
}
