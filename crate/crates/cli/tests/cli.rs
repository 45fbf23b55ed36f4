use std::process::{Command, Output};

fn limweight(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_limweight"))
        .args(args)
        .output()
        .expect("spawn limweight")
}

#[test]
fn classify_golden() {
    let out = limweight(&["classify", "--alg", "sl", "--mu", "[1,2,g0; tail=-1]"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        r#"{"family":"XSlInf","integrable":false,"annihilator":"I(1,0;[];[])"}"#
    );
}

#[test]
fn degree_golden() {
    let out = limweight(&["degree", "--lambda", "2,1,0"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        r#"{"dim":8,"deg":2}"#
    );
}

#[test]
fn verify_branching_seed_7_passes() {
    let out = limweight(&["verify", "--suite", "branching", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn parse_error_exits_2() {
    let out = limweight(&["classify", "--alg", "sl", "--mu", "[[oops"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn hypothesis_violation_exits_3() {
    // rank-one sl comparison is refused, not answered
    let out = limweight(&["iso", "--alg", "sl", "--a", "(1,0)", "--b", "(1,0)", "--rank", "2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn output_is_byte_stable() {
    let args = ["classify", "--alg", "sp", "--mu", "[1; tail=0]"];
    let a = limweight(&args);
    let b = limweight(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stderr, b.stderr);
}

#[test]
fn annihilator_constant_on_iso_class() {
    // two spinor modules differing by a finite set perturbation are isomorphic
    let a = limweight(&[
        "annihilator", "--alg", "o-b", "--module", "SpinB{; period=2, pattern=10, start=1}",
    ]);
    let b = limweight(&[
        "annihilator", "--alg", "o-b", "--module", "SpinB{2; period=2, pattern=10, start=1}",
    ]);
    assert!(a.status.success() && b.status.success());
    let label = |out: &Output| {
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        v["annihilator"].as_str().unwrap().to_owned()
    };
    assert_eq!(label(&a), label(&b));
    assert_eq!(label(&a), "OSpinorIdeal");
}
