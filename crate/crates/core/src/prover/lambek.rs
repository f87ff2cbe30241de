//! Associative Lambek calculus over sequence antecedents, with or without
//! empty antecedents.

use super::{balanced, Calculus, Derivation, Rule, Step};
use crate::logic::{Connective, Formula, LogicId, Sequent};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Goal {
    ant: Vec<Formula>,
    succ: Formula,
}

pub(crate) fn goal(sequent: &Sequent) -> Goal {
    Goal { ant: sequent.antecedent_formulas().into_iter().cloned().collect(), succ: sequent.succedent()[0].clone() }
}

pub(crate) struct Lambek {
    pub logic: LogicId,
}

impl Lambek {
    /// Smallest admissible length of a premise antecedent.
    fn min(&self) -> usize {
        usize::from(self.logic == LogicId::LambekL)
    }

    fn push(&self, out: &mut Vec<Step<Goal>>, rule: Rule, premises: Vec<Goal>) {
        if premises.iter().all(|p| p.ant.len() >= self.min() && balanced(&p.ant, [&p.succ])) {
            out.push(Step { rule, premises });
        }
    }
}

fn concat(parts: &[&[Formula]]) -> Vec<Formula> {
    parts.iter().flat_map(|p| p.iter().cloned()).collect()
}

impl Calculus for Lambek {
    type Goal = Goal;
    type Key = Goal;

    fn key(&self, g: &Goal) -> Goal {
        g.clone()
    }

    fn sequent(&self, g: &Goal) -> Sequent {
        Sequent::list(self.logic, g.ant.clone(), vec![g.succ.clone()]).expect("Lambek goals are well formed")
    }

    fn closes(&self, g: &Goal) -> bool {
        g.ant.len() == 1 && g.ant[0] == g.succ
    }

    fn leaf(&self, g: &Goal) -> Derivation {
        Derivation::leaf(self.sequent(g))
    }

    fn hopeless(&self, g: &Goal) -> bool {
        !balanced(&g.ant, [&g.succ])
    }

    fn invertible(&self, g: &Goal) -> Option<Step<Goal>> {
        if let Some(i) = g.ant.iter().position(|f| f.connective() == Some(Connective::Product)) {
            let Formula::Binary(_, a, b) = &g.ant[i] else { unreachable!() };
            let ant = concat(&[&g.ant[..i], &[(**a).clone(), (**b).clone()], &g.ant[i + 1..]]);
            return Some(Step {
                rule: Rule::Left(Connective::Product),
                premises: vec![Goal { ant, succ: g.succ.clone() }],
            });
        }
        match &g.succ {
            Formula::Binary(Connective::Over, a, b) => {
                let ant = concat(&[&g.ant, &[(**b).clone()]]);
                Some(Step { rule: Rule::Right(Connective::Over), premises: vec![Goal { ant, succ: (**a).clone() }] })
            }
            Formula::Binary(Connective::Under, b, a) => {
                let ant = concat(&[&[(**b).clone()], &g.ant]);
                Some(Step { rule: Rule::Right(Connective::Under), premises: vec![Goal { ant, succ: (**a).clone() }] })
            }
            _ => None,
        }
    }

    fn alternatives(&self, g: &Goal) -> Vec<Step<Goal>> {
        let mut out = Vec::new();
        let n = g.ant.len();
        let min = self.min();
        for (i, f) in g.ant.iter().enumerate() {
            match f {
                // Γ1, A/B, Δ, Γ2 ⇒ C  from  Δ ⇒ B  and  Γ1, A, Γ2 ⇒ C
                Formula::Binary(Connective::Over, a, b) => {
                    for j in (i + 1 + min)..=n {
                        let delta = Goal { ant: g.ant[i + 1..j].to_vec(), succ: (**b).clone() };
                        let main =
                            Goal { ant: concat(&[&g.ant[..i], &[(**a).clone()], &g.ant[j..]]), succ: g.succ.clone() };
                        self.push(&mut out, Rule::Left(Connective::Over), vec![delta, main]);
                    }
                }
                // Γ1, Δ, B\A, Γ2 ⇒ C  from  Δ ⇒ B  and  Γ1, A, Γ2 ⇒ C
                Formula::Binary(Connective::Under, b, a) => {
                    for k in (0..=i).filter(|k| i - k >= min) {
                        let delta = Goal { ant: g.ant[k..i].to_vec(), succ: (**b).clone() };
                        let main = Goal {
                            ant: concat(&[&g.ant[..k], &[(**a).clone()], &g.ant[i + 1..]]),
                            succ: g.succ.clone(),
                        };
                        self.push(&mut out, Rule::Left(Connective::Under), vec![delta, main]);
                    }
                }
                _ => {}
            }
        }
        if let Formula::Binary(Connective::Product, a, b) = &g.succ {
            for k in 0..=n {
                let left = Goal { ant: g.ant[..k].to_vec(), succ: (**a).clone() };
                let right = Goal { ant: g.ant[k..].to_vec(), succ: (**b).clone() };
                self.push(&mut out, Rule::Right(Connective::Product), vec![left, right]);
            }
        }
        out
    }
}
