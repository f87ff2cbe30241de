//! Nonassociative Lambek calculus over binary antecedent trees; left rules
//! apply inside any tree context.

use super::{balanced, Calculus, Derivation, Rule, Step};
use crate::logic::{Antecedent, Connective, Formula, LogicId, Sequent, Structure};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Goal {
    ant: Structure,
    succ: Formula,
}

pub(crate) fn goal(sequent: &Sequent) -> Goal {
    let Antecedent::Tree(ant) = sequent.antecedent() else { unreachable!("NL antecedents are trees") };
    Goal { ant: ant.clone(), succ: sequent.succedent()[0].clone() }
}

pub(crate) struct NonAssoc;

fn admissible(g: &Goal) -> bool {
    balanced(g.ant.leaves(), [&g.succ])
}

impl Calculus for NonAssoc {
    type Goal = Goal;
    type Key = Goal;

    fn key(&self, g: &Goal) -> Goal {
        g.clone()
    }

    fn sequent(&self, g: &Goal) -> Sequent {
        Sequent::new(LogicId::Nl, Antecedent::Tree(g.ant.clone()), vec![g.succ.clone()])
            .expect("NL goals are well formed")
    }

    fn closes(&self, g: &Goal) -> bool {
        matches!(&g.ant, Structure::Leaf(f) if *f == g.succ)
    }

    fn leaf(&self, g: &Goal) -> Derivation {
        Derivation::leaf(self.sequent(g))
    }

    fn hopeless(&self, g: &Goal) -> bool {
        !admissible(g)
    }

    fn invertible(&self, g: &Goal) -> Option<Step<Goal>> {
        match &g.succ {
            // Γ ⇒ A/B  from  (Γ ⋄ B) ⇒ A
            Formula::Binary(Connective::Over, a, b) => {
                let ant = Structure::pair(g.ant.clone(), Structure::Leaf((**b).clone()));
                Some(Step { rule: Rule::Right(Connective::Over), premises: vec![Goal { ant, succ: (**a).clone() }] })
            }
            // Γ ⇒ B\A  from  (B ⋄ Γ) ⇒ A
            Formula::Binary(Connective::Under, b, a) => {
                let ant = Structure::pair(Structure::Leaf((**b).clone()), g.ant.clone());
                Some(Step { rule: Rule::Right(Connective::Under), premises: vec![Goal { ant, succ: (**a).clone() }] })
            }
            _ => None,
        }
    }

    fn alternatives(&self, g: &Goal) -> Vec<Step<Goal>> {
        let mut out = Vec::new();
        for (path, sub) in g.ant.subtrees() {
            let Structure::Pair(l, r) = sub else { continue };
            // Γ[(A/B ⋄ Δ)] ⇒ C  from  Δ ⇒ B  and  Γ[A] ⇒ C
            if let Structure::Leaf(Formula::Binary(Connective::Over, a, b)) = &**l {
                let delta = Goal { ant: (**r).clone(), succ: (**b).clone() };
                let main = Goal { ant: g.ant.replace(&path, Structure::Leaf((**a).clone())), succ: g.succ.clone() };
                if admissible(&delta) && admissible(&main) {
                    out.push(Step { rule: Rule::Left(Connective::Over), premises: vec![delta, main] });
                }
            }
            // Γ[(Δ ⋄ B\A)] ⇒ C  from  Δ ⇒ B  and  Γ[A] ⇒ C
            if let Structure::Leaf(Formula::Binary(Connective::Under, b, a)) = &**r {
                let delta = Goal { ant: (**l).clone(), succ: (**b).clone() };
                let main = Goal { ant: g.ant.replace(&path, Structure::Leaf((**a).clone())), succ: g.succ.clone() };
                if admissible(&delta) && admissible(&main) {
                    out.push(Step { rule: Rule::Left(Connective::Under), premises: vec![delta, main] });
                }
            }
        }
        out
    }
}
