//! End-to-end tests of the g2jac binary: subcommand output, exit codes,
//! and instance-file handling.

use std::path::PathBuf;
use std::process::{Command, Output};

fn g2jac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2jac"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn instance_path(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.pop();
    p.pop();
    p.push("instances");
    p.push(name);
    p.to_str().unwrap().to_owned()
}

#[test]
fn verify_paper_exits_zero_and_concludes() {
    let out = g2jac(&["verify-paper"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert_eq!(text.matches("conclusion: torsion_impossible").count(), 3);
    assert!(text.contains("all checks passed"));
}

#[test]
fn verify_paper_kv_is_machine_readable() {
    let out = g2jac(&["verify-paper", "--kv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.matches("report = verification").count(), 3);
    let concluded = text
        .lines()
        .filter(|l| *l == "conclusion = torsion_impossible")
        .count();
    assert_eq!(concluded, 3);
    assert!(text.lines().any(|l| l == "structure = Z3 + Z21"));
    assert!(text.contains("witness = p:5 order:441"));
}

#[test]
fn badprimes_output() {
    let out = g2jac(&["badprimes", "c1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("bad primes of c1: 2, 13"));
    let out = g2jac(&["badprimes", "c2"]);
    assert!(stdout(&out).contains("bad primes of c2: 2, 3"));
}

#[test]
fn count_matches_library() {
    let expected = g2jac_core::zeta::count_points(
        &g2jac_core::pipeline::curve_c1(),
        &g2jac_core::finfield::FqDesc::prime(11).unwrap(),
    )
    .unwrap();
    let out = g2jac(&["count", "c1", "--p", "11"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains(&format!("= {}", expected)));

    // Extension count with an explicit radicand.
    let out = g2jac(&["count", "c1", "--p", "11", "--ext", "2", "--d", "-1"]);
    assert!(out.status.success());
    let expected2 = g2jac_core::zeta::count_points(
        &g2jac_core::pipeline::curve_c1(),
        &g2jac_core::finfield::FqDesc::quadratic(11, -1).unwrap(),
    )
    .unwrap();
    assert!(stdout(&out).contains(&format!("= {}", expected2)));
}

#[test]
fn jacorder_and_lpoly() {
    let out = g2jac(&["jacorder", "c1", "--p", "11", "--ext", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("17689 = 7^2 * 19^2"));

    let out = g2jac(&["lpoly", "c2", "--p", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("c1 = "), "{}", text);
    // P(1) * P(-1) = 441 over F_25.
    let lp = g2jac_core::zeta::l_polynomial(&g2jac_core::pipeline::curve_c2(), 5).unwrap();
    assert_eq!(lp.eval_at_one() * lp.eval_at_minus_one(), 441);
}

#[test]
fn torsion_bound_human_and_kv() {
    let out = g2jac(&["torsion-bound", "c1", "--d", "-1", "--primes", "11,23,31"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("bound = 19"));

    let out = g2jac(&["torsion-bound", "c2", "--d", "-3", "--primes", "5,11", "--kv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("report = torsion-bound"));
    assert!(text.contains("witness = p:11 order:13104 factored:2^4*3^2*7*13 prime_to_p:13104"));
    assert!(text.contains("bound = 63"));
}

#[test]
fn torsion_bound_rejects_bad_witnesses() {
    let out = g2jac(&["torsion-bound", "c1", "--d", "-1", "--primes", "13"]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("good reduction"), "{}", err);

    let out = g2jac(&["torsion-bound", "c1", "--d", "-1", "--primes", "9"]);
    assert!(!out.status.success());

    let out = g2jac(&["torsion-bound", "c1", "--d", "-1", "--primes", "5"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("inert"));
}

#[test]
fn group_lists_all_elements() {
    let out = g2jac(&["group", "c1", "--d", "-1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("19 elements"));
    assert!(text.contains("(x^2, -2*x + 1, 2)"));
    assert!(text.contains("(1, x^3 - x^2, 2)"));
    assert!(text.contains("structure: Z19"));

    let out = g2jac(&["group", "c2", "--d", "-3", "--kv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("order = 63"));
    assert!(text.contains("element = a: 1,1,1 | b: "));
}

#[test]
fn points_builtin_and_from_file() {
    let out = g2jac(&["points", "c2", "--d", "-3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("10 points"));
    assert!(text.contains("(-1/2 - 1/2*sqrt(-3), -3/2 - 1/2*sqrt(-3))"));

    // The shipped instance file reproduces the built-in run.
    let out_file = g2jac(&["points", &instance_path("c2_eisenstein.conf")]);
    assert!(
        out_file.status.success(),
        "{}",
        String::from_utf8_lossy(&out_file.stderr)
    );
    assert_eq!(stdout(&out), stdout(&out_file));

    let out = g2jac(&["points", &instance_path("c1_gaussian.conf"), "--kv"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("count = 6"));
}

#[test]
fn missing_instance_or_file_fails() {
    let out = g2jac(&["points", "c2", "--d", "-1"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("no built-in instance"));

    let out = g2jac(&["badprimes", "/nonexistent/path.conf"]);
    assert!(!out.status.success());

    let out = g2jac(&["points", "c1"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("--d"));
}

#[test]
fn runs_are_deterministic() {
    let a = g2jac(&["verify-paper", "--kv"]);
    let b = g2jac(&["verify-paper", "--kv"]);
    assert_eq!(stdout(&a), stdout(&b));
}
