//! Bounded families of sequents for cross-checking.
//!
//! A family holds every sequent of a logic whose formulae have depth at
//! most `depth` over the first `atoms` atom names, with at most `antecedent`
//! and `succedent` formulae and at most `connectives` connectives in total.
//! Sequents equal up to renaming atoms are generated once: atoms must first
//! occur in alphabetical order. Sides that are sets or multisets are
//! generated in one canonical order; NL antecedents come in every
//! bracketing.

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::logic::{Antecedent, AntecedentKind, Formula, LogicId, Sequent, Structure};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub logic: LogicId,
    pub atoms: usize,
    pub depth: usize,
    pub antecedent: usize,
    pub succedent: usize,
    pub connectives: usize,
}

impl FamilySpec {
    /// Default bounds: depth 2 throughout, at most 4 connectives per
    /// sequent (3 for the associative Lambek calculi, whose families grow
    /// fastest). Each family checks in under a minute.
    pub fn new(logic: LogicId) -> FamilySpec {
        let (atoms, antecedent, succedent, connectives) = match logic {
            LogicId::Classical | LogicId::Mll => (2, 2, 2, 4),
            LogicId::Mill => (2, 3, 1, 4),
            LogicId::LambekL | LogicId::LambekLEps => (3, 3, 1, 3),
            LogicId::Nl => (3, 3, 1, 4),
        };
        FamilySpec { logic, atoms, depth: 2, antecedent, succedent, connectives }
    }
}

const NAMES: [&str; 6] = ["A", "B", "C", "D", "E", "F"];

/// Formulae of depth at most `depth`, each paired with its connective count.
fn formulas(logic: LogicId, atoms: usize, depth: usize, max_conn: usize) -> Vec<(Formula, usize)> {
    let base: Vec<(Formula, usize)> = NAMES[..atoms.min(NAMES.len())].iter().map(|n| (Formula::atom(n), 0)).collect();
    let mut level = base.clone();
    for _ in 0..depth {
        let mut next = base.clone();
        for &c in logic.connectives() {
            if c.arity() == 1 {
                for (f, k) in &level {
                    if *k < max_conn {
                        next.push((Formula::unary(c, f.clone()), k + 1));
                    }
                }
            } else {
                for (f, k) in &level {
                    for (g, l) in &level {
                        if k + l < max_conn {
                            next.push((Formula::binary(c, f.clone(), g.clone()), k + l + 1));
                        }
                    }
                }
            }
        }
        level = next;
    }
    level.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
    level
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Sequence,
    Multiset,
    Set,
}

/// Index tuples of length `lo..=hi` into `pool` within a connective budget.
fn tuples(pool: &[(Formula, usize)], lo: usize, hi: usize, budget: usize, side: Side) -> Vec<(Vec<usize>, usize)> {
    fn go(
        pool: &[(Formula, usize)],
        len: usize,
        budget: usize,
        side: Side,
        cur: &mut Vec<usize>,
        used: usize,
        out: &mut Vec<(Vec<usize>, usize)>,
    ) {
        if cur.len() == len {
            out.push((cur.clone(), used));
            return;
        }
        let start = match (side, cur.last()) {
            (Side::Multiset, Some(&i)) => i,
            (Side::Set, Some(&i)) => i + 1,
            _ => 0,
        };
        for i in start..pool.len() {
            let k = pool[i].1;
            if used + k > budget {
                // pool is sorted by connective count
                break;
            }
            cur.push(i);
            go(pool, len, budget, side, cur, used + k, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for len in lo..=hi {
        go(pool, len, budget, side, &mut Vec::new(), 0, &mut out);
    }
    out
}

fn bracketings(fs: &[Formula]) -> Vec<Structure> {
    if fs.len() == 1 {
        return vec![Structure::Leaf(fs[0].clone())];
    }
    let mut out = Vec::new();
    for split in 1..fs.len() {
        for l in bracketings(&fs[..split]) {
            for r in bracketings(&fs[split..]) {
                out.push(Structure::pair(l.clone(), r.clone()));
            }
        }
    }
    out
}

fn canonical_names(ant: &[&Formula], succ: &[&Formula]) -> bool {
    let mut seen: Vec<&str> = Vec::new();
    for f in ant.iter().chain(succ) {
        for sub in f.subformulas() {
            if let Some(name) = sub.atom_name() {
                if !seen.contains(&name) {
                    if NAMES.get(seen.len()) != Some(&name) {
                        return false;
                    }
                    seen.push(name);
                }
            }
        }
    }
    true
}

/// Calls `visit` on every sequent of the family, in a fixed order.
pub fn visit_family(spec: &FamilySpec, mut visit: impl FnMut(Sequent)) {
    let logic = spec.logic;
    let pool = formulas(logic, spec.atoms, spec.depth, spec.connectives);
    if pool.is_empty() {
        return;
    }
    let side = match logic.antecedent_kind() {
        AntecedentKind::Set => Side::Set,
        AntecedentKind::Multiset => Side::Multiset,
        _ => Side::Sequence,
    };
    let ant_lo = usize::from(!logic.allows_empty_antecedent());
    let (succ_lo, succ_hi) = if logic.single_conclusion() { (1, 1) } else { (0, spec.succedent) };
    let succ_side = if side == Side::Sequence { Side::Multiset } else { side };
    let succs = tuples(&pool, succ_lo, succ_hi, spec.connectives, succ_side);
    let ants = tuples(&pool, ant_lo, spec.antecedent, spec.connectives, side);
    for (a, ka) in &ants {
        let ant: Vec<&Formula> = a.iter().map(|&i| &pool[i].0).collect();
        for (s, ks) in &succs {
            if ka + ks > spec.connectives {
                continue;
            }
            let succ: Vec<&Formula> = s.iter().map(|&i| &pool[i].0).collect();
            if !canonical_names(&ant, &succ) {
                continue;
            }
            let owned: Vec<Formula> = ant.iter().map(|&f| f.clone()).collect();
            let succ: Vec<Formula> = succ.into_iter().cloned().collect();
            if logic == LogicId::Nl {
                for tree in bracketings(&owned) {
                    if let Ok(s) = Sequent::new(logic, Antecedent::Tree(tree), succ.clone()) {
                        visit(s);
                    }
                }
            } else if let Ok(s) = Sequent::new(logic, Antecedent::List(owned), succ) {
                visit(s);
            }
        }
    }
}

/// Every sequent of the family, in a fixed order.
pub fn enumerate_family(spec: &FamilySpec) -> Vec<Sequent> {
    let mut out = Vec::new();
    visit_family(spec, |s| out.push(s));
    out
}

/// `count` members of the family chosen uniformly with a seeded generator,
/// kept in family order.
pub fn sample_family(spec: &FamilySpec, count: usize, seed: u64) -> Vec<Sequent> {
    let all = enumerate_family(spec);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picks = index::sample(&mut rng, all.len(), count.min(all.len())).into_vec();
    picks.sort_unstable();
    picks.into_iter().map(|i| all[i].clone()).collect()
}

/// Connectives occurring anywhere in the sequent.
pub fn connective_count(sequent: &Sequent) -> usize {
    sequent.antecedent_formulas().into_iter().chain(sequent.succedent()).map(Formula::size).sum()
}
