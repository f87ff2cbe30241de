use std::process::{Command, Output};

use spk_cli::RunReport;

fn spk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spk")).args(args).env_remove("SPK_BUDGET").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn report(args: &[&str]) -> (RunReport, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "structured"]);
    let o = spk(&all);
    (serde_json::from_str(&stdout(&o)).unwrap(), o.status.code().unwrap())
}

#[test]
fn classical_example_agrees_across_methods() {
    let (r, code) = report(&["prove", "--logic", "classical", "--method", "all", "~A, B->A => ~B"]);
    assert_eq!(code, 0);
    assert!(r.agreement);
    assert_eq!(r.methods.len(), 3);
    assert_eq!(r.verdict(), Some(true));
}

#[test]
fn nl_example_fails_on_a_boundary() {
    let (r, code) = report(&["prove", "--logic", "nl", "--method", "net", "((A , (A\\B)/C) , C) => B"]);
    assert_eq!(code, 1);
    assert_eq!(r.verdict(), Some(false));
    assert_eq!(r.methods[0].failure.as_ref().map(|f| f.name()), Some("boundary"));
}

#[test]
fn identity_by_matrix() {
    let o = spk(&["prove", "--logic", "mll", "--method", "matrix", "A => A"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("provable"));
}

#[test]
fn unprovable_exits_one() {
    let o = spk(&["prove", "--logic", "mll", "A => B"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn report_round_trips() {
    let (r, _) = report(&["prove", "--logic", "mll", "A@B, (B*C)^ => C-oA"]);
    let text = serde_json::to_string(&r).unwrap();
    let back: RunReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, r);
    let (r, _) = report(&["prove", "--logic", "classical", "A => B"]);
    let back: RunReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(back, r);
}

#[test]
fn classical_refutation_by_net_is_a_limit() {
    let (r, code) = report(&["prove", "--logic", "classical", "A => B"]);
    assert_eq!(code, 2);
    assert!(r.agreement);
    assert_eq!(r.verdict(), Some(false));
}

#[test]
fn matrix_export_is_canonical() {
    let o = spk(&["export", "--logic", "classical", "--kind", "matrix", "~A, B->A => ~B"]);
    assert_eq!(stdout(&o), "[[A+] [B+ ; A-]] [B-]\n");
}

#[test]
fn net_export_checks_back() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("net.txt");
    let path = path.to_str().unwrap();
    let o = spk(&["export", "--logic", "mll", "--kind", "net", "--out", path, "A@B, (B*C)^ => C-oA"]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(path).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("axlink")).count(), 3);
    for criterion in ["switching", "contraction"] {
        let o = spk(&["check-structure", path, "--criterion", criterion]);
        assert_eq!(o.status.code(), Some(0), "{criterion}");
    }
    let relabeled = text.replace("axlink 9 1", "axlink 9 2").replace("axlink 5 2", "axlink 5 1");
    std::fs::write(path, relabeled).unwrap();
    // A and B swap partners, so links join different atoms
    let o = spk(&["check-structure", path]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn structure_that_is_not_a_net() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.txt");
    let text = "logic mll\nsequent A*B => A@B\n0 - A*B\n1 - A\n2 - B\n3 + A@B\n4 + A\n5 + B\n\
                dlink par 0 1 2\ndlink par 3 4 5\naxlink 4 1\naxlink 5 2\n";
    std::fs::write(&path, text).unwrap();
    let path = path.to_str().unwrap();
    for criterion in ["switching", "contraction"] {
        let o = spk(&["check-structure", path, "--criterion", criterion, "--format", "structured"]);
        assert_eq!(o.status.code(), Some(1), "{criterion}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["is_net"], false);
    }
}

#[test]
fn derivation_export() {
    let o = spk(&["export", "--logic", "mll", "--kind", "derivation", "A => A"]);
    assert_eq!(stdout(&o), "[Axiom] A => A\n");
    let o = spk(&["export", "--logic", "mll", "--kind", "derivation", "A => B"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not provable"));
    let o = spk(&["export", "--logic", "l", "--kind", "net", "B/A => A\\B"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dot_export() {
    let o = spk(&["export", "--logic", "l", "--kind", "dot", "A, A\\B => B"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("digraph") || stdout(&o).starts_with("graph"));
}

#[test]
fn budget_comes_from_the_environment() {
    let args = ["prove", "--logic", "mll", "--method", "net", "A-oA, A => A"];
    let o = Command::new(env!("CARGO_BIN_EXE_spk")).args(args).env("SPK_BUDGET", "1").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("limit"));
    assert_eq!(spk(&args).status.code(), Some(0));
    // the flag beats the environment
    let mut flagged = args.to_vec();
    flagged.extend(["--budget", "1000"]);
    let o = Command::new(env!("CARGO_BIN_EXE_spk")).args(flagged).env("SPK_BUDGET", "1").output().unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn planar_only_restricts_mll() {
    let args = ["prove", "--logic", "mll", "--method", "net", "A, B => A*B"];
    assert_eq!(spk(&args).status.code(), Some(0));
    let mut planar = args.to_vec();
    planar.push("--planar-only");
    assert_eq!(spk(&planar).status.code(), Some(1));
}

#[test]
fn crosscheck_exit_codes() {
    let o = spk(&["crosscheck", "--logic", "mill", "--connectives", "2", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["disagreements"], 0);
    assert!(v["sequents"].as_u64().unwrap() > 0);
    let o = spk(&["crosscheck", "--logic", "nl", "--atoms", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("sequents        0"));
}

#[test]
fn sampled_crosscheck_is_seeded() {
    let run = |seed: &str| {
        stdout(&spk(&["crosscheck", "--logic", "l", "--sample", "30", "--seed", seed, "--format", "structured"]))
    };
    let a = run("4");
    assert_eq!(a, run("4"));
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["sequents"], 30);
}

#[test]
fn parse_lists_positions() {
    let o = spk(&["parse", "--logic", "l", "C.(C\\A)/B => A/B", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["sequent"], "C.((C\\A)/B) => A/B");
    assert_eq!(v["positions"].as_array().unwrap().len(), 10);
    let o = spk(&["parse", "--logic", "mill", "A => B, C"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_usage_exits_two() {
    assert_eq!(spk(&["prove", "--logic", "nope", "A => A"]).status.code(), Some(2));
    assert_eq!(spk(&["prove", "--logic", "mll", "A => (A"]).status.code(), Some(2));
    assert_eq!(spk(&["prove", "--logic", "l", "--method", "matrix", "A => A"]).status.code(), Some(2));
}
