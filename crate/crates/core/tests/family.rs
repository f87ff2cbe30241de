use std::collections::BTreeSet;

use spk_core::family::{connective_count, enumerate_family, sample_family, FamilySpec};
use spk_core::{parse_sequent, LogicId, Sequent};

/// Formula texts of depth at most `depth`, with their connective counts,
/// built as strings so the family generator is not reused.
fn texts(ops: &[&str], postfix: &[&str], atoms: &[&str], depth: usize, max: usize) -> Vec<(String, usize)> {
    let base: Vec<(String, usize)> = atoms.iter().map(|a| (a.to_string(), 0)).collect();
    let mut level = base.clone();
    for _ in 0..depth {
        let mut next = base.clone();
        for (f, k) in &level {
            for p in postfix {
                if *k < max {
                    next.push((format!("({f}){p}"), k + 1));
                }
            }
            for (g, l) in &level {
                for op in ops {
                    if k + l < max {
                        next.push((format!("({f}){op}({g})"), k + l + 1));
                    }
                }
            }
        }
        level = next;
    }
    level
}

/// Ordered tuples of `len` formulae using at most `budget` connectives.
fn tuples(pool: &[(String, usize)], len: usize, budget: usize) -> Vec<Vec<(String, usize)>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for f in pool.iter().filter(|f| f.1 <= budget) {
        for mut rest in tuples(pool, len - 1, budget - f.1) {
            rest.insert(0, f.clone());
            out.push(rest);
        }
    }
    out
}

fn rename(text: &str, perm: &[char]) -> String {
    text.chars()
        .map(|c| match c {
            'A'..='C' => perm[(c as u8 - b'A') as usize],
            c => c,
        })
        .collect()
}

/// Every permutation of the first `n` names, as a map from `A`, `B`, `C`.
fn perms(n: usize) -> Vec<Vec<char>> {
    fn go(n: usize, cur: &mut Vec<char>, out: &mut Vec<Vec<char>>) {
        if cur.len() == n {
            let mut p = cur.clone();
            p.extend("ABC".chars().skip(n));
            out.push(p);
            return;
        }
        for c in "ABC".chars().take(n) {
            if !cur.contains(&c) {
                cur.push(c);
                go(n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

/// The sequent up to renaming atoms and, unless `ordered`, reordering sides.
fn key(s: &Sequent, atoms: usize, ordered: bool) -> String {
    perms(atoms)
        .iter()
        .map(|p| {
            if ordered {
                return rename(&s.to_string(), p);
            }
            let mut ant: Vec<String> = s.antecedent_formulas().iter().map(|f| rename(&f.to_string(), p)).collect();
            let mut suc: Vec<String> = s.succedent().iter().map(|f| rename(&f.to_string(), p)).collect();
            ant.sort();
            suc.sort();
            format!("{} => {}", ant.join(", "), suc.join(", "))
        })
        .min()
        .unwrap()
}

fn brute(logic: LogicId, ops: &[&str], postfix: &[&str], spec: &FamilySpec, ordered: bool) -> BTreeSet<String> {
    let brackets = logic == LogicId::Nl;
    let atoms: Vec<&str> = ["A", "B", "C"][..spec.atoms].to_vec();
    let pool = texts(ops, postfix, &atoms, spec.depth, spec.connectives);
    let single = logic.single_conclusion();
    let mut keys = BTreeSet::new();
    let ant_lo = usize::from(!logic.allows_empty_antecedent());
    for na in ant_lo..=spec.antecedent {
        for ant in tuples(&pool, na, spec.connectives) {
            let succ_range = if single { 1..=1 } else { 0..=spec.succedent };
            for ns in succ_range {
                for suc in tuples(&pool, ns, spec.connectives) {
                    let used: usize = ant.iter().chain(&suc).map(|f| f.1).sum();
                    if used > spec.connectives {
                        continue;
                    }
                    let names: Vec<String> = ant.iter().map(|f| f.0.clone()).collect();
                    let right = suc.iter().map(|f| f.0.clone()).collect::<Vec<_>>().join(", ");
                    let lefts = if brackets { bracket(&names) } else { vec![names.join(", ")] };
                    for left in lefts {
                        if let Ok(s) = parse_sequent(&format!("{left} => {right}"), logic) {
                            keys.insert(key(&s, spec.atoms, ordered));
                        }
                    }
                }
            }
        }
    }
    keys
}

fn bracket(fs: &[String]) -> Vec<String> {
    if fs.len() == 1 {
        return vec![fs[0].clone()];
    }
    let mut out = Vec::new();
    for i in 1..fs.len() {
        for l in bracket(&fs[..i]) {
            for r in bracket(&fs[i..]) {
                out.push(format!("({l} , {r})"));
            }
        }
    }
    out
}

fn check_complete(logic: LogicId, ops: &[&str], postfix: &[&str], spec: FamilySpec, ordered: bool) {
    let fam = enumerate_family(&spec);
    let printed: BTreeSet<String> = fam.iter().map(|s| s.to_string()).collect();
    assert_eq!(printed.len(), fam.len(), "{logic}: a sequent is generated twice");
    for s in &fam {
        assert!(connective_count(s) <= spec.connectives);
    }
    let got: BTreeSet<String> = fam.iter().map(|s| key(s, spec.atoms, ordered)).collect();
    let want = brute(logic, ops, postfix, &spec, ordered);
    assert_eq!(got, want, "{logic}");
}

#[test]
fn mll_family_is_complete_up_to_renaming() {
    let spec = FamilySpec { logic: LogicId::Mll, atoms: 2, depth: 2, antecedent: 2, succedent: 2, connectives: 2 };
    check_complete(LogicId::Mll, &["*", "@", "-o"], &["^"], spec, false);
}

#[test]
fn mill_family_is_complete_up_to_renaming() {
    let spec = FamilySpec { logic: LogicId::Mill, atoms: 2, depth: 2, antecedent: 3, succedent: 1, connectives: 2 };
    check_complete(LogicId::Mill, &["*", "-o"], &[], spec, false);
}

#[test]
fn nl_family_has_every_bracketing() {
    let spec = FamilySpec { logic: LogicId::Nl, atoms: 2, depth: 1, antecedent: 3, succedent: 1, connectives: 1 };
    check_complete(LogicId::Nl, &["/", "\\"], &[], spec, true);
}

#[test]
fn lambek_family_keeps_order() {
    let spec = FamilySpec { logic: LogicId::LambekL, atoms: 2, depth: 1, antecedent: 2, succedent: 1, connectives: 1 };
    check_complete(LogicId::LambekL, &["/", "\\", "."], &[], spec, true);
}

#[test]
fn sampling_is_seeded() {
    let spec = FamilySpec::new(LogicId::Mill);
    let a = sample_family(&spec, 50, 9);
    assert_eq!(a.len(), 50);
    assert_eq!(a, sample_family(&spec, 50, 9));
    assert_ne!(a, sample_family(&spec, 50, 10));
    let all = enumerate_family(&spec);
    assert!(a.iter().all(|s| all.contains(s)));
}

#[test]
fn degenerate_bounds_give_an_empty_family() {
    let spec = FamilySpec { logic: LogicId::Mill, atoms: 0, depth: 2, antecedent: 2, succedent: 1, connectives: 2 };
    assert!(enumerate_family(&spec).is_empty());
}
