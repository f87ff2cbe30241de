//! Forward checking of derivations, rule instance by rule instance.
//!
//! Classical derivations are checked modulo the structural rules: sides are
//! read as sets, a premise may keep the principal formula (Contraction) and
//! may omit context formulae (Weakening). All other logics are checked
//! exactly.

use std::collections::BTreeSet;
use std::fmt;

use super::{components, Derivation, Rule};
use crate::logic::{Antecedent, Connective, Formula, LogicId, Sequent, Sign, Structure};

/// The first incorrect node, reached from the root by premise indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckFailure {
    pub path: Vec<usize>,
    pub reason: String,
}

impl fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at node {:?}: {}", self.path, self.reason)
    }
}

pub fn check_derivation(derivation: &Derivation) -> bool {
    check_derivation_report(derivation).is_ok()
}

pub fn check_derivation_report(derivation: &Derivation) -> Result<(), CheckFailure> {
    let mut path = Vec::new();
    walk(derivation, &mut path)
}

fn walk(d: &Derivation, path: &mut Vec<usize>) -> Result<(), CheckFailure> {
    let fail = |reason: String| CheckFailure { path: path.clone(), reason };
    let logic = d.sequent.logic();
    if let Some(p) = d.premises.iter().find(|p| p.sequent.logic() != logic) {
        return Err(fail(format!("premise `{}` belongs to another logic", p.sequent)));
    }
    let premises: Vec<&Sequent> = d.premises.iter().map(|p| &p.sequent).collect();
    if !instance(&d.sequent, d.rule, &premises) {
        return Err(fail(format!("`{}` is not a correct {} instance", d.sequent, d.rule)));
    }
    for (i, p) in d.premises.iter().enumerate() {
        path.push(i);
        walk(p, path)?;
        path.pop();
    }
    Ok(())
}

fn instance(concl: &Sequent, rule: Rule, premises: &[&Sequent]) -> bool {
    let logic = concl.logic();
    match rule {
        Rule::Axiom => {
            premises.is_empty()
                && concl.succedent().len() == 1
                && match concl.antecedent() {
                    Antecedent::List(fs) => fs.len() == 1 && fs[0] == concl.succedent()[0],
                    Antecedent::Tree(t) => *t == Structure::Leaf(concl.succedent()[0].clone()),
                }
        }
        Rule::Weakening => {
            logic == LogicId::Classical && premises.len() == 1 && {
                let (cl, cr) = sets(concl);
                let (pl, pr) = sets(premises[0]);
                pl.is_subset(&cl) && pr.is_subset(&cr)
            }
        }
        Rule::Left(c) | Rule::Right(c) => {
            let sign = if matches!(rule, Rule::Left(_)) { Sign::Neg } else { Sign::Pos };
            if !logic.allows(c) {
                return false;
            }
            match logic {
                LogicId::Classical => classical(concl, sign, c, premises),
                LogicId::Mll | LogicId::Mill => linear(concl, sign, c, premises),
                LogicId::LambekL | LogicId::LambekLEps => lambek(concl, sign, c, premises),
                LogicId::Nl => nonassoc(concl, sign, c, premises),
            }
        }
    }
}

fn sets(s: &Sequent) -> (BTreeSet<&Formula>, BTreeSet<&Formula>) {
    (s.antecedent_formulas().into_iter().collect(), s.succedent().iter().collect())
}

fn side_formulas(s: &Sequent, sign: Sign) -> Vec<&Formula> {
    match sign {
        Sign::Neg => s.antecedent_formulas(),
        Sign::Pos => s.succedent().iter().collect(),
    }
}

fn classical(concl: &Sequent, sign: Sign, c: Connective, premises: &[&Sequent]) -> bool {
    let (cl, cr) = sets(concl);
    side_formulas(concl, sign).into_iter().filter(|f| f.connective() == Some(c)).any(|principal| {
        let comps = components(principal, sign);
        // Gentzen's ∧L and ∨R keep a single component.
        let partial = matches!((c, sign), (Connective::And, Sign::Neg) | (Connective::Or, Sign::Pos));
        comps.len() == premises.len()
            && comps.iter().zip(premises).all(|((lc, rc), p)| {
                let (pl, pr) = sets(p);
                let within = pl.iter().all(|f| cl.contains(f) || lc.contains(f))
                    && pr.iter().all(|f| cr.contains(f) || rc.contains(f));
                let present = |f: &Formula| if lc.contains(f) { pl.contains(f) } else { pr.contains(f) };
                let used = if partial { lc.iter().chain(rc).any(present) } else { lc.iter().chain(rc).all(present) };
                within && used
            })
    })
}

/// `whole` minus the multiset `part`, or `None` if `part` is not contained.
fn minus<'a>(whole: &[&'a Formula], part: &[Formula]) -> Option<Vec<&'a Formula>> {
    let mut rest = whole.to_vec();
    for f in part {
        let i = rest.iter().position(|g| *g == f)?;
        rest.remove(i);
    }
    Some(rest)
}

fn same_multiset(mut a: Vec<&Formula>, mut b: Vec<&Formula>) -> bool {
    a.sort();
    b.sort();
    a == b
}

fn linear(concl: &Sequent, sign: Sign, c: Connective, premises: &[&Sequent]) -> bool {
    let left = concl.antecedent_formulas();
    let right: Vec<&Formula> = concl.succedent().iter().collect();
    let own = side_formulas(concl, sign);
    let mut tried = BTreeSet::new();
    own.iter().filter(|f| f.connective() == Some(c)).any(|principal| {
        if !tried.insert(*principal) {
            return false;
        }
        let comps = components(principal, sign);
        if comps.len() != premises.len() {
            return false;
        }
        let (mut ctx_l, mut ctx_r) = (left.clone(), right.clone());
        let ctx = if sign == Sign::Neg { &mut ctx_l } else { &mut ctx_r };
        let i = ctx.iter().position(|f| f == principal).expect("principal occurs");
        ctx.remove(i);
        let mut rest_l = Vec::new();
        let mut rest_r = Vec::new();
        for ((lc, rc), p) in comps.iter().zip(premises) {
            let pr: Vec<&Formula> = p.succedent().iter().collect();
            match (minus(&p.antecedent_formulas(), lc), minus(&pr, rc)) {
                (Some(l), Some(r)) => {
                    rest_l.extend(l);
                    rest_r.extend(r);
                }
                _ => return false,
            }
        }
        same_multiset(rest_l, ctx_l) && same_multiset(rest_r, ctx_r)
    })
}

fn lambek(concl: &Sequent, sign: Sign, c: Connective, premises: &[&Sequent]) -> bool {
    let ant: Vec<Formula> = concl.antecedent_formulas().into_iter().cloned().collect();
    let succ = &concl.succedent()[0];
    let p_ant = |i: usize| -> Vec<Formula> { premises[i].antecedent_formulas().into_iter().cloned().collect() };
    let p_succ = |i: usize| &premises[i].succedent()[0];
    let cat = |parts: &[&[Formula]]| -> Vec<Formula> { parts.iter().flat_map(|p| p.iter().cloned()).collect() };
    match (sign, c, succ) {
        (Sign::Pos, Connective::Over, Formula::Binary(_, a, b)) if succ.connective() == Some(c) => {
            premises.len() == 1 && p_ant(0) == cat(&[&ant, &[(**b).clone()]]) && p_succ(0) == &**a
        }
        (Sign::Pos, Connective::Under, Formula::Binary(_, b, a)) if succ.connective() == Some(c) => {
            premises.len() == 1 && p_ant(0) == cat(&[&[(**b).clone()], &ant]) && p_succ(0) == &**a
        }
        (Sign::Pos, Connective::Product, Formula::Binary(_, a, b)) if succ.connective() == Some(c) => {
            premises.len() == 2 && p_succ(0) == &**a && p_succ(1) == &**b && cat(&[&p_ant(0), &p_ant(1)]) == ant
        }
        (Sign::Pos, _, _) => false,
        (Sign::Neg, Connective::Product, _) => {
            premises.len() == 1
                && p_succ(0) == succ
                && ant.iter().enumerate().any(|(i, f)| match f {
                    Formula::Binary(Connective::Product, a, b) => {
                        p_ant(0) == cat(&[&ant[..i], &[(**a).clone(), (**b).clone()], &ant[i + 1..]])
                    }
                    _ => false,
                })
        }
        (Sign::Neg, Connective::Over | Connective::Under, _) => {
            if premises.len() != 2 || p_succ(1) != succ {
                return false;
            }
            let delta = p_ant(0);
            let main = p_ant(1);
            ant.iter().enumerate().any(|(i, f)| match f {
                Formula::Binary(Connective::Over, a, b) if c == Connective::Over => {
                    let j = i + 1 + delta.len();
                    j <= ant.len()
                        && ant[i + 1..j] == delta[..]
                        && p_succ(0) == &**b
                        && main == cat(&[&ant[..i], &[(**a).clone()], &ant[j..]])
                }
                Formula::Binary(Connective::Under, b, a) if c == Connective::Under => {
                    delta.len() <= i && {
                        let k = i - delta.len();
                        ant[k..i] == delta[..]
                            && p_succ(0) == &**b
                            && main == cat(&[&ant[..k], &[(**a).clone()], &ant[i + 1..]])
                    }
                }
                _ => false,
            })
        }
        _ => false,
    }
}

fn tree(s: &Sequent) -> &Structure {
    match s.antecedent() {
        Antecedent::Tree(t) => t,
        Antecedent::List(_) => unreachable!("NL sequents have tree antecedents"),
    }
}

fn nonassoc(concl: &Sequent, sign: Sign, c: Connective, premises: &[&Sequent]) -> bool {
    let ant = tree(concl);
    let succ = &concl.succedent()[0];
    match (sign, succ) {
        (Sign::Pos, Formula::Binary(sc, x, y)) if *sc == c && premises.len() == 1 => {
            let p = premises[0];
            let expected = match c {
                Connective::Over => Structure::pair(ant.clone(), Structure::Leaf((**y).clone())),
                _ => Structure::pair(Structure::Leaf((**x).clone()), ant.clone()),
            };
            let result = if c == Connective::Over { x } else { y };
            *tree(p) == expected && p.succedent()[0] == **result
        }
        (Sign::Pos, _) => false,
        (Sign::Neg, _) => {
            if premises.len() != 2 || premises[1].succedent()[0] != *succ {
                return false;
            }
            let (delta, main) = (tree(premises[0]), tree(premises[1]));
            let arg = &premises[0].succedent()[0];
            ant.subtrees().into_iter().any(|(path, sub)| {
                let Structure::Pair(l, r) = sub else { return false };
                let (functor, d) = match c {
                    Connective::Over => (&**l, &**r),
                    _ => (&**r, &**l),
                };
                match (c, functor) {
                    (Connective::Over, Structure::Leaf(Formula::Binary(Connective::Over, a, b)))
                    | (Connective::Under, Structure::Leaf(Formula::Binary(Connective::Under, b, a))) => {
                        d == delta && **b == *arg && ant.replace(&path, Structure::Leaf((**a).clone())) == *main
                    }
                    _ => false,
                }
            })
        }
    }
}
