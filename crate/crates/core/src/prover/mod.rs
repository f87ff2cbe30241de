//! Backward Cut-free proof search, one calculus per logic.
//!
//! Each calculus supplies its invertible rule (applied eagerly, without
//! backtracking) and its non-invertible alternatives; the shared engine
//! memoises verdicts per sequent and rebuilds a derivation on success.

mod check;
mod classical;
mod lambek;
mod linear;
mod nonassoc;

pub use check::{check_derivation, check_derivation_report, CheckFailure};

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::logic::{Connective, Formula, LogicId, Sequent, Sign};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Axiom,
    /// Thinning, only in classical derivations.
    Weakening,
    Left(Connective),
    Right(Connective),
}

impl Rule {
    pub fn name(self) -> String {
        match self {
            Rule::Axiom => "Axiom".into(),
            Rule::Weakening => "W".into(),
            Rule::Left(c) => format!("{}L", c.symbol()),
            Rule::Right(c) => format!("{}R", c.symbol()),
        }
    }

    pub fn from_name(name: &str) -> Option<Rule> {
        match name {
            "Axiom" => Some(Rule::Axiom),
            "W" => Some(Rule::Weakening),
            _ => {
                let (sym, side) = name.split_at(name.len().checked_sub(1)?);
                let c = Connective::from_symbol(sym)?;
                match side {
                    "L" => Some(Rule::Left(c)),
                    "R" => Some(Rule::Right(c)),
                    _ => None,
                }
            }
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Serialize for Rule {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

impl<'de> Deserialize<'de> for Rule {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let name = String::deserialize(d)?;
        Rule::from_name(&name).ok_or_else(|| serde::de::Error::custom(format!("unknown rule `{name}`")))
    }
}

/// A derivation tree; the conclusion sits at the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub sequent: Sequent,
    pub rule: Rule,
    pub premises: Vec<Derivation>,
}

impl Derivation {
    pub fn leaf(sequent: Sequent) -> Derivation {
        Derivation { sequent, rule: Rule::Axiom, premises: Vec::new() }
    }

    pub fn node(sequent: Sequent, rule: Rule, premises: Vec<Derivation>) -> Derivation {
        Derivation { sequent, rule, premises }
    }

    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(Derivation::size).sum::<usize>()
    }

    pub fn height(&self) -> usize {
        1 + self.premises.iter().map(Derivation::height).max().unwrap_or(0)
    }

    /// Every node, root first.
    pub fn nodes(&self) -> Vec<&Derivation> {
        let mut out = vec![self];
        let mut i = 0;
        while i < out.len() {
            let d = out[i];
            out.extend(d.premises.iter());
            i += 1;
        }
        out
    }

    /// One line per rule application, premises indented under their conclusion.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write_text(0, &mut out);
        out
    }

    fn write_text(&self, depth: usize, out: &mut String) {
        use std::fmt::Write;
        let _ = writeln!(out, "{:indent$}[{}] {}", "", self.rule, self.sequent, indent = 2 * depth);
        for p in &self.premises {
            p.write_text(depth + 1, out);
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub expanded: u64,
    pub max_depth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub provable: bool,
    pub witness: Option<Derivation>,
    pub stats: SearchStats,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProverConfig {
    /// Maximum number of distinct sequents expanded before giving up.
    pub budget: u64,
}

impl Default for ProverConfig {
    fn default() -> Self {
        ProverConfig { budget: DEFAULT_BUDGET }
    }
}

pub fn prove(sequent: &Sequent) -> Result<Verdict> {
    prove_with(sequent, &ProverConfig::default())
}

pub fn prove_with(sequent: &Sequent, config: &ProverConfig) -> Result<Verdict> {
    match sequent.logic() {
        LogicId::Classical => run(&classical::Classical, classical::goal(sequent), config),
        LogicId::Mll | LogicId::Mill => {
            let calc = linear::Linear { logic: sequent.logic() };
            run(&calc, linear::goal(sequent), config)
        }
        LogicId::LambekL | LogicId::LambekLEps => {
            let calc = lambek::Lambek { logic: sequent.logic() };
            run(&calc, lambek::goal(sequent), config)
        }
        LogicId::Nl => run(&nonassoc::NonAssoc, nonassoc::goal(sequent), config),
    }
}

pub(crate) struct Step<G> {
    pub rule: Rule,
    pub premises: Vec<G>,
}

pub(crate) trait Calculus {
    type Goal: Clone;
    type Key: Eq + Hash;

    fn key(&self, goal: &Self::Goal) -> Self::Key;
    fn sequent(&self, goal: &Self::Goal) -> Sequent;
    fn closes(&self, goal: &Self::Goal) -> bool;
    /// Leaf derivation for a goal on which `closes` holds.
    fn leaf(&self, goal: &Self::Goal) -> Derivation;
    /// Cheap necessary condition; `true` means certainly unprovable.
    fn hopeless(&self, _goal: &Self::Goal) -> bool {
        false
    }
    fn invertible(&self, goal: &Self::Goal) -> Option<Step<Self::Goal>>;
    fn alternatives(&self, goal: &Self::Goal) -> Vec<Step<Self::Goal>>;
}

struct Search<'c, C: Calculus> {
    calc: &'c C,
    memo: HashMap<C::Key, bool>,
    budget: u64,
    stats: SearchStats,
    depth: usize,
}

impl<C: Calculus> Search<'_, C> {
    fn decide(&mut self, goal: &C::Goal) -> Result<bool> {
        let key = self.calc.key(goal);
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        self.stats.expanded += 1;
        if self.stats.expanded > self.budget {
            return Err(Error::ResourceLimit { what: "proof search expansions", limit: self.budget });
        }
        self.depth += 1;
        self.stats.max_depth = self.stats.max_depth.max(self.depth);
        let verdict = self.expand(goal);
        self.depth -= 1;
        let verdict = verdict?;
        self.memo.insert(key, verdict);
        Ok(verdict)
    }

    fn expand(&mut self, goal: &C::Goal) -> Result<bool> {
        if self.calc.closes(goal) {
            return Ok(true);
        }
        if self.calc.hopeless(goal) {
            return Ok(false);
        }
        if let Some(step) = self.calc.invertible(goal) {
            return self.all(&step.premises);
        }
        for step in self.calc.alternatives(goal) {
            if self.all(&step.premises)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn all(&mut self, goals: &[C::Goal]) -> Result<bool> {
        for g in goals {
            if !self.decide(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Rebuilds the derivation of a goal already decided provable.
    fn build(&mut self, goal: &C::Goal) -> Result<Derivation> {
        if self.calc.closes(goal) {
            return Ok(self.calc.leaf(goal));
        }
        let step = match self.calc.invertible(goal) {
            Some(step) => step,
            None => {
                let mut found = None;
                for step in self.calc.alternatives(goal) {
                    if self.all(&step.premises)? {
                        found = Some(step);
                        break;
                    }
                }
                found.expect("goal was decided provable")
            }
        };
        let premises = step.premises.iter().map(|p| self.build(p)).collect::<Result<Vec<_>>>()?;
        Ok(Derivation::node(self.calc.sequent(goal), step.rule, premises))
    }
}

fn run<C: Calculus>(calc: &C, goal: C::Goal, config: &ProverConfig) -> Result<Verdict> {
    let mut search =
        Search { calc, memo: HashMap::new(), budget: config.budget, stats: SearchStats::default(), depth: 0 };
    let provable = search.decide(&goal)?;
    let witness = if provable { Some(search.build(&goal)?) } else { None };
    Ok(Verdict { provable, witness, stats: search.stats })
}

/// Active formulae of the premises of a rule, as (antecedent, succedent)
/// per premise, in premise order. The same table serves classical and
/// linear two-sided calculi, reading ¬ as ⊥, ∧ as ⊗, ∨ as ⅋ and → as ⊸.
pub(crate) fn components(principal: &Formula, side: Sign) -> Vec<(Vec<Formula>, Vec<Formula>)> {
    use Connective::*;
    match principal {
        Formula::Atom(_) => vec![],
        Formula::Unary(_, a) => {
            let a = (**a).clone();
            match side {
                Sign::Neg => vec![(vec![], vec![a])],
                Sign::Pos => vec![(vec![a], vec![])],
            }
        }
        Formula::Binary(c, a, b) => {
            let (a, b) = ((**a).clone(), (**b).clone());
            match (c, side) {
                (And | Tensor, Sign::Neg) => vec![(vec![a, b], vec![])],
                (And | Tensor, Sign::Pos) => vec![(vec![], vec![a]), (vec![], vec![b])],
                (Or | Par, Sign::Neg) => vec![(vec![a], vec![]), (vec![b], vec![])],
                (Or | Par, Sign::Pos) => vec![(vec![], vec![a, b])],
                (Implies | Lolli, Sign::Neg) => vec![(vec![], vec![a]), (vec![b], vec![])],
                (Implies | Lolli, Sign::Pos) => vec![(vec![a], vec![b])],
                _ => vec![],
            }
        }
    }
}

/// Parity filter for linear logics: every atom name must occur equally
/// often with each sign.
pub(crate) fn balanced<'a>(
    antecedent: impl IntoIterator<Item = &'a Formula>,
    succedent: impl IntoIterator<Item = &'a Formula>,
) -> bool {
    fn walk<'f>(f: &'f Formula, sign: Sign, acc: &mut Vec<(&'f str, i32)>) {
        match f {
            Formula::Atom(name) => {
                let d = if sign == Sign::Pos { 1 } else { -1 };
                match acc.iter_mut().find(|(n, _)| *n == &**name) {
                    Some(e) => e.1 += d,
                    None => acc.push((name, d)),
                }
            }
            _ => {
                for (child, s) in child_refs(f, sign) {
                    walk(child, s, acc);
                }
            }
        }
    }
    let mut acc = Vec::new();
    for f in antecedent {
        walk(f, Sign::Neg, &mut acc);
    }
    for f in succedent {
        walk(f, Sign::Pos, &mut acc);
    }
    acc.iter().all(|(_, c)| *c == 0)
}

fn child_refs(f: &Formula, sign: Sign) -> Vec<(&Formula, Sign)> {
    use Connective::*;
    match f {
        Formula::Atom(_) => vec![],
        Formula::Unary(_, a) => vec![(&**a, !sign)],
        Formula::Binary(c, a, b) => match c {
            Implies | Lolli => vec![(&**a, !sign), (&**b, sign)],
            Over => vec![(&**a, sign), (&**b, !sign)],
            Under => vec![(&**a, !sign), (&**b, sign)],
            _ => vec![(&**a, sign), (&**b, sign)],
        },
    }
}
