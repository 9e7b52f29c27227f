use std::process::{Command, Output};

fn data(file: &str) -> String {
    format!("{}/data/{file}", env!("CARGO_MANIFEST_DIR"))
}

fn taubound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_taubound"))
        .args(args)
        .env_remove("TAUBOUND_SEED")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn report_json_is_tight() {
    let exa = data("exA.alg");
    let reg = data("known.reg");
    let o = taubound(&[
        "report",
        "--algebra",
        &exa,
        "--module",
        "P(1)+S(1)",
        "--registry",
        &reg,
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "tight");
    assert_eq!(v["r"], 2);
    assert_eq!(v["rhs"]["value"], 1);
    assert_eq!(v["lhs"]["value"], 1);
}

#[test]
fn tau_of_simple() {
    let o = taubound(&["tau", "--algebra", &data("exA.alg"), "--module", "S(1)"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("τM ≅ P2\ndims (0,2)\n"), "{out}");
}

#[test]
fn enumerate_dot() {
    let o = taubound(&["enumerate", "--algebra", &data("exA.alg"), "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.contains("->")).count(), 5);
    assert_eq!(
        out.lines()
            .filter(|l| l.trim_end().ends_with(';') && !l.contains("->"))
            .count(),
        5
    );
    assert!(out.contains("\"P1+S1\" [color=red, fontcolor=red];"));
}

#[test]
fn other_commands() {
    let exa = data("exA.alg");
    let mods = data("exA.mod");
    let run = |args: &[&str]| {
        let o = taubound(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        stdout(&o)
    };
    assert_eq!(
        run(&["validate", "--algebra", &exa]),
        "algebra exA: dimension 4, 2 vertices, 2 arrows\n"
    );
    assert_eq!(
        run(&["validate", "--algebra", &exa, "--module", "S1", "--support", "2"]),
        "valid-stt\n"
    );
    assert_eq!(
        run(&["rigid", "--algebra", &exa, "--module", "S2"]),
        "tau-rigid: false\n"
    );
    assert_eq!(
        run(&["classify", "--algebra", &exa, "--module", "T", "--modules", &mods]),
        "tau-tilting-not-tilting\n"
    );
    assert!(run(&["endo", "--algebra", &exa, "--module", "T", "--modules", &mods]).contains("dynkin: A2"));
    assert!(run(&["annihilator", "--algebra", &exa, "--module", "P1+S1"]).starts_with("dim 1\n  β\n"));
    assert!(run(&["loewy", "--algebra", &exa]).starts_with("loewy length 2\n"));
    assert!(run(&["proxy", "--algebra", &exa, "--module", "P1+S1"]).contains("End_C(M) = End_A(M)  ok"));
}

#[test]
fn input_errors_exit_2() {
    let exa = data("exA.alg");
    let o = taubound(&["tau", "--algebra", &exa, "--module", "P(9)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("parse_module_expr"), "{}", stderr(&o));
    let o = taubound(&["loewy", "--algebra", &data("missing.alg")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("load"));
    let o = taubound(&["report", "--algebra", &exa, "--module", "P1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("bound_report"));
    assert_eq!(taubound(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn budget_exits_3() {
    let o = taubound(&["enumerate", "--algebra", &data("a3.alg"), "--max-nodes", "4"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("enumerate_stt"));
}

#[test]
fn seed_from_environment() {
    let args = ["enumerate", "--algebra", &data("nakayama2.alg"), "--format", "json"];
    let plain = stdout(&taubound(&args));
    let o = Command::new(env!("CARGO_BIN_EXE_taubound"))
        .args(args)
        .env("TAUBOUND_SEED", "99")
        .output()
        .unwrap();
    assert_eq!(stdout(&o), plain);
    let bad = Command::new(env!("CARGO_BIN_EXE_taubound"))
        .args(args)
        .env("TAUBOUND_SEED", "x")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
