//! MLL and MILL search over two-sided multiset sequents. MILL is the same
//! calculus restricted to sequents with exactly one succedent formula.

use super::{balanced, components, Calculus, Derivation, Rule, Step};
use crate::logic::{Connective, Formula, LogicId, Sequent, Sign};

#[derive(Clone, Debug)]
pub(crate) struct Goal {
    left: Vec<Formula>,
    right: Vec<Formula>,
}

pub(crate) fn goal(sequent: &Sequent) -> Goal {
    Goal { left: sequent.antecedent_formulas().into_iter().cloned().collect(), right: sequent.succedent().to_vec() }
}

pub(crate) struct Linear {
    pub logic: LogicId,
}

fn sorted(v: &[Formula]) -> Vec<Formula> {
    let mut v = v.to_vec();
    v.sort();
    v
}

/// `side` with the element at `at` (if any) replaced by `comps`, then `extra` appended.
fn rebuild(side: &[Formula], at: Option<usize>, comps: &[Formula], extra: &[Formula]) -> Vec<Formula> {
    let mut out = Vec::with_capacity(side.len() + comps.len() + extra.len());
    for (i, f) in side.iter().enumerate() {
        if Some(i) == at {
            out.extend_from_slice(comps);
        } else {
            out.push(f.clone());
        }
    }
    out.extend_from_slice(extra);
    out
}

impl Linear {
    /// The premises for `principal` at (`sign`, `idx`), with the remaining
    /// context distributed by `mask` (bit set: second premise).
    fn premises(&self, g: &Goal, sign: Sign, idx: usize, mask: u64) -> Vec<Goal> {
        let principal = match sign {
            Sign::Neg => &g.left[idx],
            Sign::Pos => &g.right[idx],
        };
        let comps = components(principal, sign);
        let mut bit = 0;
        let mut split = |side: &[Formula], own: bool| -> [Vec<(usize, Formula)>; 2] {
            let mut parts = [Vec::new(), Vec::new()];
            for (i, f) in side.iter().enumerate() {
                if own && i == idx {
                    continue;
                }
                let which = ((mask >> bit) & 1) as usize;
                bit += 1;
                parts[which].push((i, f.clone()));
            }
            parts
        };
        let lparts = split(&g.left, sign == Sign::Neg);
        let rparts = split(&g.right, sign == Sign::Pos);
        comps
            .into_iter()
            .enumerate()
            .map(|(k, (lc, rc))| {
                let assemble = |part: &[(usize, Formula)], own: bool, cs: &[Formula]| {
                    let mut out = Vec::new();
                    let mut placed = !own;
                    for (i, f) in part {
                        if !placed && *i > idx {
                            out.extend_from_slice(cs);
                            placed = true;
                        }
                        out.push(f.clone());
                    }
                    if !placed || !own {
                        out.extend_from_slice(cs);
                    }
                    out
                };
                Goal {
                    left: assemble(&lparts[k], sign == Sign::Neg, &lc),
                    right: assemble(&rparts[k], sign == Sign::Pos, &rc),
                }
            })
            .collect()
    }

    fn admissible(&self, g: &Goal) -> bool {
        (self.logic != LogicId::Mill || g.right.len() == 1) && balanced(&g.left, &g.right)
    }
}

impl Calculus for Linear {
    type Goal = Goal;
    type Key = (Vec<Formula>, Vec<Formula>);

    fn key(&self, g: &Goal) -> Self::Key {
        (sorted(&g.left), sorted(&g.right))
    }

    fn sequent(&self, g: &Goal) -> Sequent {
        Sequent::list(self.logic, g.left.clone(), g.right.clone()).expect("linear goals are well formed")
    }

    fn closes(&self, g: &Goal) -> bool {
        g.left.len() == 1 && g.right.len() == 1 && g.left[0] == g.right[0]
    }

    fn leaf(&self, g: &Goal) -> Derivation {
        Derivation::leaf(self.sequent(g))
    }

    fn hopeless(&self, g: &Goal) -> bool {
        !balanced(&g.left, &g.right)
    }

    fn invertible(&self, g: &Goal) -> Option<Step<Goal>> {
        use Connective::*;
        let left = g.left.iter().position(|f| matches!(f.connective(), Some(Perp | Tensor))).map(|i| (Sign::Neg, i));
        let right =
            || g.right.iter().position(|f| matches!(f.connective(), Some(Perp | Par | Lolli))).map(|i| (Sign::Pos, i));
        let (sign, idx) = left.or_else(right)?;
        let (principal, rule) = match sign {
            Sign::Neg => (&g.left[idx], Rule::Left(g.left[idx].connective()?)),
            Sign::Pos => (&g.right[idx], Rule::Right(g.right[idx].connective()?)),
        };
        let (lc, rc) = components(principal, sign).pop()?;
        let premise = match sign {
            Sign::Neg => Goal { left: rebuild(&g.left, Some(idx), &lc, &[]), right: rebuild(&g.right, None, &[], &rc) },
            Sign::Pos => Goal { left: rebuild(&g.left, None, &[], &lc), right: rebuild(&g.right, Some(idx), &rc, &[]) },
        };
        Some(Step { rule, premises: vec![premise] })
    }

    fn alternatives(&self, g: &Goal) -> Vec<Step<Goal>> {
        use Connective::*;
        let mut out = Vec::new();
        let n = (g.left.len() + g.right.len()).saturating_sub(1);
        let principals = g
            .left
            .iter()
            .enumerate()
            .filter(|(_, f)| matches!(f.connective(), Some(Par | Lolli)))
            .map(|(i, f)| (Sign::Neg, i, Rule::Left(f.connective().unwrap())))
            .chain(
                g.right
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| f.connective() == Some(Tensor))
                    .map(|(i, _)| (Sign::Pos, i, Rule::Right(Tensor))),
            );
        for (sign, idx, rule) in principals {
            for mask in 0..(1u64 << n) {
                let premises = self.premises(g, sign, idx, mask);
                if premises.iter().all(|p| self.admissible(p)) {
                    out.push(Step { rule, premises });
                }
            }
        }
        out
    }
}
