//! Classical search over set-like sequents. Every rule is invertible once
//! the principal formula is dropped from the premises, so the search never
//! backtracks; Weakening is only used to reach axiom leaves.

use std::collections::BTreeSet;

use super::{components, Calculus, Derivation, Rule, Step};
use crate::logic::{Formula, LogicId, Sequent, Sign};

#[derive(Clone, Debug)]
pub(crate) struct Goal {
    left: Vec<Formula>,
    right: Vec<Formula>,
}

pub(crate) fn goal(sequent: &Sequent) -> Goal {
    Goal { left: sequent.antecedent_formulas().into_iter().cloned().collect(), right: sequent.succedent().to_vec() }
}

pub(crate) struct Classical;

impl Goal {
    fn shared(&self) -> Option<&Formula> {
        self.left.iter().find(|f| self.right.contains(f))
    }
}

/// Replaces every copy of `principal` in `side` by the components, keeping
/// the order of the remaining formulae and skipping duplicates.
fn substitute(side: &[Formula], principal: &Formula, comps: &[Formula]) -> Vec<Formula> {
    let mut out: Vec<Formula> = Vec::with_capacity(side.len() + comps.len());
    let mut placed = false;
    for f in side {
        if f == principal {
            if !placed {
                placed = true;
                for c in comps {
                    if !out.contains(c) && !side.contains(c) {
                        out.push(c.clone());
                    }
                }
            }
        } else if !out.contains(f) {
            out.push(f.clone());
        }
    }
    out
}

fn add(side: &[Formula], comps: &[Formula]) -> Vec<Formula> {
    let mut out: Vec<Formula> = Vec::with_capacity(side.len() + comps.len());
    for f in side.iter().chain(comps) {
        if !out.contains(f) {
            out.push(f.clone());
        }
    }
    out
}

impl Calculus for Classical {
    type Goal = Goal;
    type Key = (BTreeSet<Formula>, BTreeSet<Formula>);

    fn key(&self, g: &Goal) -> Self::Key {
        (g.left.iter().cloned().collect(), g.right.iter().cloned().collect())
    }

    fn sequent(&self, g: &Goal) -> Sequent {
        Sequent::list(LogicId::Classical, g.left.clone(), g.right.clone()).expect("classical goals are well formed")
    }

    fn closes(&self, g: &Goal) -> bool {
        g.shared().is_some()
    }

    fn leaf(&self, g: &Goal) -> Derivation {
        let d = g.shared().expect("closing goal").clone();
        let axiom = Derivation::leaf(Sequent::list(LogicId::Classical, vec![d.clone()], vec![d]).expect("axiom"));
        if g.left.len() == 1 && g.right.len() == 1 {
            axiom
        } else {
            Derivation::node(self.sequent(g), Rule::Weakening, vec![axiom])
        }
    }

    fn invertible(&self, g: &Goal) -> Option<Step<Goal>> {
        let (principal, sign) = g
            .left
            .iter()
            .find(|f| !f.is_atom())
            .map(|f| (f, Sign::Neg))
            .or_else(|| g.right.iter().find(|f| !f.is_atom()).map(|f| (f, Sign::Pos)))?;
        let premises = components(principal, sign)
            .into_iter()
            .map(|(l, r)| match sign {
                Sign::Neg => Goal { left: substitute(&g.left, principal, &l), right: add(&g.right, &r) },
                Sign::Pos => Goal { left: add(&g.left, &l), right: substitute(&g.right, principal, &r) },
            })
            .collect();
        let c = principal.connective().expect("compound principal");
        let rule = if sign == Sign::Neg { Rule::Left(c) } else { Rule::Right(c) };
        Some(Step { rule, premises })
    }

    fn alternatives(&self, _g: &Goal) -> Vec<Step<Goal>> {
        Vec::new()
    }
}
