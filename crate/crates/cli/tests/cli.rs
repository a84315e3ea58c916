use std::process::{Command, Output};

fn weylgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn e7_matches_sp6() {
    let o = weylgraph(&["iso", "weyl:E7", "sp:3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("isomorphic"));
}

#[test]
fn twisted_copy_is_not_wf4() {
    let o = weylgraph(&["iso", "weyl:F4", "twist(weyl:F4)"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "not isomorphic");
}

#[test]
fn classify_twist() {
    let o = weylgraph(&["classify", "twist(weyl:F4)"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("verdict: twisted_WF4"));
    let o = weylgraph(&["classify", "--format", "kv", "weyl:F4"]);
    assert!(stdout(&o).lines().any(|l| l == "verdict = WF4"));
    assert!(stdout(&o).lines().any(|l| l == "hypothesis.mu_3 = true"));
}

#[test]
fn classify_rejects_non_f4_input() {
    let o = weylgraph(&["classify", "weyl:B4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("structure violation"));
}

#[test]
fn aut_of_wf4() {
    let o = weylgraph(&["aut", "weyl:F4"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "order: 576"));
    assert!(out.lines().any(|l| l == "orbits: 12 12"));
}

#[test]
fn build_read_back_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for expr in ["weyl:F4", "f4build(product(cycle:4,cycle:4,cycle:4))", "contract(weyl:F4)", "quadric:3,-"] {
        let file = dir.path().join("g.bcg");
        let o = weylgraph(&["build", expr, "-o", file.to_str().unwrap()]);
        assert!(o.status.success(), "{expr}");
        let o = weylgraph(&["iso", expr, file.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{expr}");
    }
}

#[test]
fn strong_markers_survive_a_file() {
    // the contraction of W(F4), written out, rebuilds a 24-vertex graph
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("lambda.bcg");
    weylgraph(&["build", "contract(weyl:F4)", "-o", file.to_str().unwrap()]);
    let expr = format!("f4build({})", file.display());
    let o = weylgraph(&["classify", &expr]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("verdict: WF4"));
}

#[test]
fn dot_export() {
    let o = weylgraph(&["build", "--format", "dot", "weyl:G2"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("graph"));
}

#[test]
fn parse_errors() {
    for bad in ["weyl:D3", "weyl:E9", "join(cycle:4)", "double(weyl:F4", "frobnicate(cycle:4)", "kneser:5"] {
        let o = weylgraph(&["build", bad]);
        assert_eq!(o.status.code(), Some(2), "{bad}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("error"), "{bad}");
    }
    let o = weylgraph(&["build", "weyl:D3"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("column 6"));
}

#[test]
fn check_reports_witness() {
    let o = weylgraph(&["check", "path:3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("vertices 0 and 1"));
    let o = weylgraph(&["check", "--cotriangular", "cycle:5"]);
    assert_eq!(o.status.code(), Some(1));
    let o = weylgraph(&["check", "--local", "--cotriangular", "kneser:7,2"]);
    assert_eq!(o.status.code(), Some(0));
    let o = weylgraph(&["check", "--like", "weyl:F4", "swapcolors(twist(weyl:F4))"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn report_is_deterministic_and_passes() {
    let a = weylgraph(&["report", "--seed", "3"]);
    let b = weylgraph(&["report", "--seed", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    for line in [
        "summary.status = PASS",
        "summary.failed = 0",
        "identity.E8.quadric_plus = true",
        "f4.aut.order = 576",
        "family.C6xC4xC4.vertices = 384",
        "b4.k7_subdivision.vertices = 112",
        "cotriangular.C5 = false",
    ] {
        assert!(out.lines().any(|l| l == line), "missing {line}");
    }
    // the seed only affects the self-test section
    let c = stdout(&weylgraph(&["report", "--seed", "4"]));
    let differing: Vec<_> = out.lines().zip(c.lines()).filter(|(x, y)| x != y).collect();
    assert_eq!(differing, vec![("selftest.seed = 3", "selftest.seed = 4")]);
}
