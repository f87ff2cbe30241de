//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Run with `cargo test -p spk-core --test acceptance`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use spk_core::matrix::{build_matrix, linear_spanning_set, spanning_set};
use spk_core::net::{
    boundary_crossing_check, build_skeleton, check_classical_structure, contract, dr_check, enumerate_linkings,
    find_proof_net, nl_boundaries, parse_structure_file, planarity_check, subnet_check, ContractionGraph, Failure,
    ProofStructure,
};
use spk_core::{
    crosscheck_family, decompose, parse_sequent, prove, CrossConfig, FamilySpec, LogicId, Sequent, Summary,
};

type Check = Result<String, String>;

fn seq(text: &str, logic: LogicId) -> Sequent {
    parse_sequent(text, logic).unwrap_or_else(|e| panic!("{text}: {e}"))
}

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn quick(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, format!("took {took:?}, limit {limit:?}"))
}

fn provable(text: &str, logic: LogicId) -> bool {
    prove(&seq(text, logic)).unwrap().provable
}

fn net(text: &str, logic: LogicId) -> Option<ProofStructure> {
    find_proof_net(&seq(text, logic)).unwrap().net
}

fn golden_classical() -> Check {
    let start = Instant::now();
    let s = "~A, B->A => ~B";
    ensure(provable(s, LogicId::Classical), "prover")?;
    let m = build_matrix(&decompose(&seq(s, LogicId::Classical))).unwrap();
    ensure(m.render() == "[[A+] [B+ ; A-]] [B-]", format!("rendering {}", m.render()))?;
    let set = spanning_set(&m).ok_or("no spanning set")?;
    let shown = m.render_connections(&set);
    ensure(shown == "{<A+, A->, <B+, B->}", format!("spanning set {shown}"))?;
    ensure(net(s, LogicId::Classical).is_some(), "no proof net")?;
    quick(start, Duration::from_secs(1))?;
    Ok(format!("{shown} in {:?}", start.elapsed()))
}

/// The ten-vertex graph a..j of the contraction figure.
fn figure_graph() -> ContractionGraph {
    let mut g = ContractionGraph::new();
    for name in ["a", "b", "c", "d", "e", "f", "g", "h", "i", "j"] {
        g.add_vertex(name);
    }
    let v = |n: &str| (n.as_bytes()[0] - b'a') as usize;
    for (x, y) in [("a", "b"), ("a", "c"), ("e", "f"), ("e", "g"), ("d", "e")] {
        g.add_times(v(x), v(y));
    }
    g.add_par_link(&[(v("h"), v("i")), (v("h"), v("j"))]);
    for (x, y) in [("c", "f"), ("i", "g"), ("b", "j")] {
        g.add_times(v(x), v(y));
    }
    g
}

fn golden_mll() -> Check {
    let start = Instant::now();
    let s = "A@B, (B*C)^ => C-oA";
    ensure(provable(s, LogicId::Mll), "prover")?;
    let m = build_matrix(&decompose(&seq(s, LogicId::Mll))).unwrap();
    ensure(m.render() == "[A- ; B-] [B+ ; C+] [C- A+]", format!("rendering {}", m.render()))?;
    let set = linear_spanning_set(&m).ok_or("no linear spanning set")?;
    let shown = m.render_connections(&set);
    ensure(shown == "{<B+, B->, <C+, C->, <A+, A->}", format!("connections {shown}"))?;
    let ps = net(s, LogicId::Mll).ok_or("no proof net")?;
    ensure(dr_check(&ps).is_net, "DR rejects the net")?;
    ensure(contract(&ps).verdict.is_net, "contraction rejects the net")?;
    let mut g = figure_graph();
    ensure(g.edge_count() == 10, "figure graph")?;
    g.reduce();
    ensure(g.is_single_vertex(), "a..j does not contract to a vertex")?;
    quick(start, Duration::from_secs(1))?;
    Ok(format!("a..j contracted in {} steps", g.steps()))
}

fn golden_mill() -> Check {
    ensure(net("X => Y-o(X*Y)", LogicId::Mill).is_some(), "X => Y-o(X*Y) has no net")?;
    let bad = seq("X => (Y-oX)*Y", LogicId::Mill);
    let all: Vec<_> = enumerate_linkings(&build_skeleton(&bad), false).collect();
    ensure(!all.is_empty(), "no linkings")?;
    for ps in &all {
        ensure(matches!(dr_check(ps).failure, Some(Failure::Cycle { .. })), "a linking fails without a cycle")?;
    }
    ensure(find_proof_net(&bad).unwrap().net.is_none(), "X => (Y-oX)*Y has a net")?;
    Ok(format!("{} linking(s), each with a cycle", all.len()))
}

fn golden_l() -> Check {
    let ps = net("C.(C\\A)/B, B => A", LogicId::LambekL).ok_or("no net")?;
    ensure(dr_check(&ps).is_net, "DR")?;
    ensure(planarity_check(&ps).unwrap().is_net, "planarity")?;
    ensure(subnet_check(&ps).unwrap().is_net, "subnets")?;
    let swap = seq("A.B => B.A", LogicId::LambekL);
    ensure(!prove(&swap).unwrap().provable, "A.B => B.A provable")?;
    let mut dr_passing = 0;
    for ps in enumerate_linkings(&build_skeleton(&swap), false) {
        if dr_check(&ps).is_net {
            dr_passing += 1;
            ensure(!planarity_check(&ps).unwrap().is_net, "a DR-correct linking is planar")?;
        }
    }
    ensure(dr_passing > 0, "no DR-correct linking to reject")?;
    Ok(format!("{dr_passing} DR-correct linking(s) of A.B => B.A, all crossing"))
}

fn golden_nl() -> Check {
    let cases = [
        ("(A , ((A\\B)/C , C)) => B", true),
        ("((A , (A\\B)/C) , C) => B", false),
        ("((D , D\\A) , ((A\\B)/C , C)) => B", true),
        ("(A , ((A\\B)/(C/D) , C/D)) => B", true),
    ];
    for (i, (text, expected)) in cases.iter().enumerate() {
        let start = Instant::now();
        let s = seq(text, LogicId::Nl);
        ensure(prove(&s).unwrap().provable == *expected, format!("example {}: prover", i + 1))?;
        let found = find_proof_net(&s).unwrap();
        ensure(found.net.is_some() == *expected, format!("example {}: net", i + 1))?;
        quick(start, Duration::from_secs(1))?;
    }
    let ex2 = find_proof_net(&seq(cases[1].0, LogicId::Nl)).unwrap();
    let Some(Failure::Boundary { atom, .. }) = ex2.verdict.failure else {
        return Err(format!("example 2 fails with {:?}", ex2.verdict.failure));
    };
    let shown = build_skeleton(&seq(cases[1].0, LogicId::Nl)).render(atom);
    ensure(shown == "C+", format!("example 2 witness {shown}"))?;

    // Example 4 without the closure: drop what it drew into the inner boundary
    let ex4 = net(cases[3].0, LogicId::Nl).unwrap();
    let forest = ex4.forest();
    let mut bounds = nl_boundaries(&ex4).unwrap();
    let functor = *bounds[0]
        .members
        .iter()
        .find(|&&p| ex4.render(p) == "((A\\B)/(C/D))-")
        .ok_or("functor not in the inner boundary")?;
    let arg = forest.get(functor).children[1];
    bounds[0].members.retain(|&p| forest.get(p).parent != Some(arg));
    ensure(!boundary_crossing_check(&ex4, &bounds).is_net, "example 4 passes without the closure")?;
    Ok("verdicts (provable, unprovable, provable, provable); witness C+".into())
}

const CLASSICAL_NET: &str = "\
logic classical
sequent C, ~A, B->A => ~B, D
0 - C
1 - ~A
2 + A
3 - B->A
4 + B
5 - A
6 + ~B
7 - B
8 + D
9 + A
10 - B
dlink unary 1 2
dlink times 3 4 5
dlink unary 6 7
wlink 2 0 9
wlink 7 8 10
axlink 9 5
axlink 4 10
";

fn classical_structure() -> Check {
    let ps = parse_structure_file(CLASSICAL_NET).map_err(|e| e.to_string())?;
    ensure(check_classical_structure(&ps).unwrap().is_net, "the net is rejected")?;
    let axlinks: Vec<&str> = CLASSICAL_NET.lines().filter(|l| l.starts_with("axlink")).collect();
    for line in &axlinks {
        let text = CLASSICAL_NET.replace(&format!("{line}\n"), "");
        let v = check_classical_structure(&parse_structure_file(&text).unwrap()).unwrap();
        ensure(!v.is_net, format!("still a net without `{line}`"))?;
    }
    Ok(format!("net accepted; each of {} axiom-link deletions rejected", axlinks.len()))
}

struct Suite {
    spec: FamilySpec,
    summary: Summary,
    took: Duration,
}

fn run_suite(logic: LogicId) -> Suite {
    let spec = FamilySpec::new(logic);
    let start = Instant::now();
    let summary = crosscheck_family(&spec, &CrossConfig::default());
    Suite { spec, summary, took: start.elapsed() }
}

fn describe(s: &Suite) -> String {
    let f = &s.spec;
    format!(
        "{} (atoms {}, depth {}, {}+{} formulae, <={} connectives): {} sequents, {} provable, {} disagreements, {} limits, {:.1?}",
        f.logic,
        f.atoms,
        f.depth,
        f.antecedent,
        f.succedent,
        f.connectives,
        s.summary.sequents,
        s.summary.provable,
        s.summary.disagreements,
        s.summary.limits,
        s.took
    )
}

fn equivalence(suites: &[&Suite]) -> Check {
    let mut lines = Vec::new();
    for s in suites {
        let sum = &s.summary;
        ensure(sum.sequents > 0, format!("{}: empty family", s.spec.logic))?;
        ensure(
            sum.disagreements == 0 && sum.limits == 0 && sum.bad_witnesses == 0,
            format!("{}; first: {:?}", describe(s), sum.notable.first()),
        )?;
        lines.push(describe(s));
    }
    Ok(lines.join("; "))
}

/// Structures checked outside the families: every linking of the golden
/// sequents, plus the golden nets themselves.
fn golden_structures() -> Vec<ProofStructure> {
    let mut out = Vec::new();
    for (text, logic) in [
        ("A@B, (B*C)^ => C-oA", LogicId::Mll),
        ("X => Y-o(X*Y)", LogicId::Mill),
        ("X => (Y-oX)*Y", LogicId::Mill),
        ("C.(C\\A)/B, B => A", LogicId::LambekL),
        ("A.B => B.A", LogicId::LambekL),
        ("(A , ((A\\B)/(C/D) , C/D)) => B", LogicId::Nl),
    ] {
        out.extend(enumerate_linkings(&build_skeleton(&seq(text, logic)), false));
    }
    out.push(parse_structure_file(CLASSICAL_NET).unwrap());
    out
}

fn dr_contraction(suites: &[Suite]) -> Check {
    let total: u64 = suites.iter().map(|s| s.summary.structures).sum();
    let mismatches: u64 = suites.iter().map(|s| s.summary.dr_contraction_mismatches).sum();
    ensure(mismatches == 0, format!("{mismatches} mismatches in {total} structures"))?;
    ensure(total >= 10_000, format!("only {total} structures"))?;
    for ps in golden_structures() {
        let dr = if ps.logic() == LogicId::Classical {
            check_classical_structure(&ps).unwrap().is_net
        } else {
            dr_check(&ps).is_net
        };
        ensure(dr == contract(&ps).verdict.is_net, format!("mismatch on {}", ps.sequent()))?;
    }
    Ok(format!("{total} structures, 0 mismatches"))
}

fn cost_bound(suites: &[Suite]) -> Check {
    let violations: u64 = suites.iter().map(|s| s.summary.step_bound_violations).sum();
    ensure(violations == 0, format!("{violations} structures exceed the bound"))?;
    let mut golden = 0;
    for ps in golden_structures() {
        let run = contract(&ps);
        ensure(run.steps <= run.edges, format!("{} steps on {} edges", run.steps, run.edges))?;
        golden += 1;
    }
    let mut g = figure_graph();
    let edges = g.edge_count();
    g.reduce();
    ensure(g.steps() <= edges, "figure graph over budget")?;
    Ok(format!("steps <= edges on every family structure and {golden} golden structures"))
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |n: u32, name: &str, check: &dyn Fn() -> Check| {
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match result {
            Ok(detail) => println!("criterion {n:>2} PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {n:>2} FAIL  {name}: {why}");
            }
        }
    };
    report(1, "golden classical", &golden_classical);
    report(2, "golden MLL", &golden_mll);
    report(3, "golden MILL", &golden_mill);
    report(4, "golden L", &golden_l);
    report(5, "golden NL", &golden_nl);

    let suites: Vec<Suite> =
        [LogicId::Classical, LogicId::Mll, LogicId::Mill, LogicId::LambekLEps, LogicId::LambekL, LogicId::Nl]
            .into_iter()
            .map(run_suite)
            .collect();
    report(6, "classical equivalence", &|| equivalence(&[&suites[0]]));
    report(7, "MLL and MILL equivalence", &|| equivalence(&[&suites[1], &suites[2]]));
    report(8, "Lambek equivalence", &|| equivalence(&[&suites[3], &suites[4], &suites[5]]));
    report(9, "DR and contraction agree", &|| dr_contraction(&suites));
    report(10, "classical structure file", &classical_structure);
    report(11, "contraction cost bound", &|| cost_bound(&suites));
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criterion(s) failed");
        ExitCode::FAILURE
    }
}
