use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_anticyclic")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn char_schur_table() {
    let out = run(&["char", "PERM_AC", "--max-degree", "3", "--basis", "schur"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "degree 2: s_(1,1)\ndegree 3: s_(2,1)\n");
}

#[test]
fn char_p_table_and_json() {
    for name in ["DIAS_AC", "PRELIE_CONJ"] {
        let out = run(&["char", name, "--max-degree", "2"]);
        assert_eq!(stdout(&out), "degree 2: -1/2*p2 + 1/2*p1^2\n");
    }
    let out = run(&["char", "dias_ac", "--max-degree", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["max_degree"], 2);
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn unknown_names_fail() {
    assert!(!run(&["char", "NOT_A_SERIES"]).status.success());
    assert!(!run(&["verify", "not-an-identity"]).status.success());
    assert!(!run(&["dims", "assoc"]).status.success());
}

#[test]
fn verify_single_identities() {
    for args in [
        ["verify", "legendre-dias-dend", "--max-degree", "12"],
        ["verify", "tau-dias-closed-form", "--max-arity", "7"],
        ["verify", "bizarre", "--max-degree", "15"],
    ] {
        let out = run(&args);
        assert!(out.status.success(), "{args:?}");
        assert!(stdout(&out).starts_with(&format!("PASS {}", args[1])));
    }
}

#[test]
fn verify_all_passes() {
    let out = run(&["verify", "all"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().count() >= 20);
    assert!(text.lines().all(|l| l.starts_with("PASS ")), "{text}");
}

#[test]
fn tau_exports() {
    let out = run(&["tau", "dend", "--arity", "2"]);
    assert_eq!(stdout(&out), "-1/1,1/1\n-1/1,0/1\n");
    let out = run(&["tau", "dias", "--arity", "3"]);
    assert_eq!(stdout(&out), "0/1,1/1,0/1\n0/1,0/1,1/1\n-1/1,-1/1,-1/1\n");
    let out = run(&["tau", "dend", "--arity", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dimension"], 42);
    assert_eq!(v["matrix"].as_array().unwrap().len(), 42);
}

#[test]
fn tau_respects_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_anticyclic"))
        .args(["tau", "dend", "--arity", "4"])
        .env("OPERAD_MAX_ARITY", "3")
        .output()
        .unwrap();
    assert!(!out.status.success());
}

#[test]
fn dims_tables() {
    let cases = [
        ("prelie", "5", vec![1, 2, 9, 64, 625]),
        ("dend", "6", vec![1, 2, 5, 14, 42, 132]),
        ("perm", "5", vec![1, 2, 3, 4, 5]),
    ];
    for (op, n, want) in cases {
        let out = run(&["dims", op, "--max-n", n]);
        assert!(out.status.success());
        let got: Vec<u64> = stdout(&out).lines().skip(1).map(|l| l.split_whitespace().nth(1).unwrap().parse().unwrap()).collect();
        assert_eq!(got, want, "{op}");
    }
}

#[test]
fn conjecture_small() {
    let out = run(&["conjecture", "--max-n", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.contains("yes") && !l.contains('-')).count(), 5, "{text}");
}
