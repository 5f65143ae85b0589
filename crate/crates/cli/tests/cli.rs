use std::process::{Command, Output};

fn habiro(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_habiro"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn jones_golden_values() {
    let o = habiro(&["jones", "--builtin", "unknot", "--colors", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "v^-3 + v^-1 + v + v^3");
    let o = habiro(&["jones", "--builtin", "hopf", "--colors", "2,2"]);
    assert_eq!(
        stdout(&o).trim(),
        "q^-4 + q^-3 + q^-2 + q^-1 + 1 + q + q^2 + q^3 + q^4"
    );
}

#[test]
fn bad_diagram_is_an_input_error() {
    let dir = std::env::temp_dir().join("habiro-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("bad.txt");
    std::fs::write(&f, "U(0)\n|0 |0 Q(1)\n").unwrap();
    let o = habiro(&["jones", "--diagram", f.to_str().unwrap(), "--colors", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2"), "{}", err);
    let o = habiro(&["jones", "--diagram", "/nonexistent/file", "--colors", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sphere_presentations_give_one() {
    for args in [
        vec!["jm", "--surgery", r#"{"diagram": "", "framings": []}"#],
        vec!["jm", "--builtin", "unknot", "--framings", "1"],
        vec!["jm", "--builtin", "unknot-1", "--framings", "-1"],
    ] {
        let o = habiro(&args);
        assert!(o.status.success(), "{:?}", args);
        assert!(
            stdout(&o).starts_with("J_M = (1)  [mod (q)_10]"),
            "{}",
            stdout(&o)
        );
    }
    for r in 1..=8 {
        let rs = r.to_string();
        let o = habiro(&["wrt", "--builtin", "unknot", "--framings", "-1", "--r", &rs]);
        assert!(stdout(&o).starts_with("1 (mod Phi_"), "r = {}", r);
    }
}

#[test]
fn poincare_sphere_values() {
    let o = habiro(&["eval", "--borromean", "1,1,1", "root", "6"]);
    assert_eq!(stdout(&o).trim(), "1 (mod Phi_6(q))");
    let o = habiro(&["eval", "--borromean", "1,1,1", "root", "1"]);
    assert_eq!(stdout(&o).trim(), "1 (mod Phi_1(q))");
    let r = habiro(&[
        "--format",
        "json",
        "eval",
        "--borromean",
        "1,1,1",
        "rational",
        "2",
        "1",
        "5",
    ]);
    let p = habiro(&[
        "--format",
        "json",
        "eval",
        "--borromean",
        "1,1,1",
        "padic",
        "2",
        "5",
        "1",
    ]);
    let rv: serde_json::Value = serde_json::from_slice(&r.stdout).unwrap();
    let pv: serde_json::Value = serde_json::from_slice(&p.stdout).unwrap();
    assert_eq!(rv["value"], pv["value"]);
    let o = habiro(&["ohtsuki", "--borromean", "1,1,1", "--d", "5"]);
    let s = stdout(&o);
    assert!(s.starts_with("λ = (1, -6, 45, -464, 6224)"), "{}", s);
    assert!(!s.contains("FAILS"));
}

#[test]
fn domain_errors_exit_one() {
    let o = habiro(&["wrt", "--borromean", "2,1,1", "--r", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let o = habiro(&["wrt", "--builtin", "hopf", "--framings", "1,1", "--r", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let o = habiro(&["--depth", "3", "eval", "--borromean", "1,1,1", "root", "5"]);
    assert_eq!(o.status.code(), Some(1));
    let o = habiro(&["jones", "--builtin", "nosuch", "--colors", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn machine_output_is_deterministic() {
    let args = [
        "--format",
        "json",
        "--depth",
        "6",
        "jm",
        "--borromean",
        "1,-1,2",
    ];
    let a = habiro(&args);
    let b = habiro(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    serde_json::from_slice::<serde_json::Value>(&a.stdout).unwrap();
}

#[test]
fn check_suite() {
    let o = habiro(&["check", "spec-accept", "--only", "1"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("[PASS]  1."));
    let o = habiro(&["check", "nosuch"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn kashaev_and_scan() {
    let o = habiro(&["--depth", "5", "kashaev", "0", "0", "--r", "3"]);
    assert!(stdout(&o).contains("at ζ_3: 1"));
    let o = habiro(&[
        "eval",
        "--borromean",
        "1,1,1",
        "scan",
        "--primes",
        "5",
        "--orders",
        "1,2,3",
    ]);
    let s = stdout(&o);
    assert_eq!(
        s.lines().next(),
        Some("modulus-type,p,r,value,nonvanishing")
    );
    assert_eq!(s.lines().count(), 4);
}
