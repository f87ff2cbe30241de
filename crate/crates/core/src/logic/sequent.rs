use std::fmt;

use super::{AntecedentKind, Formula, LogicId};
use crate::error::{Error, Result};

/// A nonassociative antecedent: a binary tree with formula leaves.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Structure {
    Leaf(Formula),
    Pair(Box<Structure>, Box<Structure>),
}

impl Structure {
    pub fn pair(left: Structure, right: Structure) -> Structure {
        Structure::Pair(Box::new(left), Box::new(right))
    }

    /// Formula leaves, left to right.
    pub fn leaves(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a Formula>) {
        match self {
            Structure::Leaf(f) => out.push(f),
            Structure::Pair(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Structure::Leaf(_) => 1,
            Structure::Pair(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Structure::Leaf(f) => f.size(),
            Structure::Pair(l, r) => l.size() + r.size(),
        }
    }

    /// Every subtree with its path from the root (`false` = left), pre-order.
    pub fn subtrees(&self) -> Vec<(Vec<bool>, &Structure)> {
        let mut out = Vec::new();
        let mut stack = vec![(Vec::new(), self)];
        while let Some((path, s)) = stack.pop() {
            if let Structure::Pair(l, r) = s {
                let mut rp = path.clone();
                rp.push(true);
                stack.push((rp, &**r));
                let mut lp = path.clone();
                lp.push(false);
                stack.push((lp, &**l));
            }
            out.push((path, s));
        }
        out
    }

    /// Copy of `self` with the subtree at `path` replaced by `new`.
    pub fn replace(&self, path: &[bool], new: Structure) -> Structure {
        match (path.split_first(), self) {
            (None, _) => new,
            (Some((false, rest)), Structure::Pair(l, r)) => Structure::pair(l.replace(rest, new), (**r).clone()),
            (Some((true, rest)), Structure::Pair(l, r)) => Structure::pair((**l).clone(), r.replace(rest, new)),
            (Some(_), Structure::Leaf(_)) => panic!("path leaves the tree"),
        }
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Structure::Leaf(a) => write!(f, "{a}"),
            Structure::Pair(l, r) => write!(f, "({l} , {r})"),
        }
    }
}

impl fmt::Debug for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Antecedent {
    /// Set, multiset or sequence, depending on the logic.
    List(Vec<Formula>),
    Tree(Structure),
}

impl Antecedent {
    pub fn formulas(&self) -> Vec<&Formula> {
        match self {
            Antecedent::List(fs) => fs.iter().collect(),
            Antecedent::Tree(t) => t.leaves(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Antecedent::List(fs) => fs.len(),
            Antecedent::Tree(t) => t.leaf_count(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Sequent {
    logic: LogicId,
    antecedent: Antecedent,
    succedent: Vec<Formula>,
}

impl Sequent {
    /// Builds a sequent, rejecting anything that is not well formed for `logic`.
    pub fn new(logic: LogicId, antecedent: Antecedent, succedent: Vec<Formula>) -> Result<Sequent> {
        let shape_ok = match (&antecedent, logic.antecedent_kind()) {
            (Antecedent::Tree(_), AntecedentKind::Tree) => true,
            (Antecedent::List(_), AntecedentKind::Tree) => false,
            (Antecedent::List(_), _) => true,
            (Antecedent::Tree(t), _) => matches!(t, Structure::Leaf(_)),
        };
        if !shape_ok {
            return Err(Error::AntecedentShape(logic));
        }
        let antecedent = match antecedent {
            Antecedent::Tree(Structure::Leaf(f)) if logic != LogicId::Nl => Antecedent::List(vec![f]),
            other => other,
        };
        for f in antecedent.formulas().into_iter().chain(&succedent) {
            if let Some(c) = f.connectives().find(|c| !logic.allows(*c)) {
                return Err(Error::IllegalConnective { connective: c, logic, span: None });
            }
        }
        if antecedent.is_empty() && !logic.allows_empty_antecedent() {
            return Err(Error::EmptyAntecedent(logic));
        }
        if logic.single_conclusion() && succedent.len() != 1 {
            return Err(Error::MultipleSuccedents { logic, found: succedent.len() });
        }
        Ok(Sequent { logic, antecedent, succedent })
    }

    pub fn list(logic: LogicId, antecedent: Vec<Formula>, succedent: Vec<Formula>) -> Result<Sequent> {
        Sequent::new(logic, Antecedent::List(antecedent), succedent)
    }

    pub fn logic(&self) -> LogicId {
        self.logic
    }

    pub fn antecedent(&self) -> &Antecedent {
        &self.antecedent
    }

    pub fn succedent(&self) -> &[Formula] {
        &self.succedent
    }

    /// Antecedent formulae in left-to-right order (tree leaves for NL).
    pub fn antecedent_formulas(&self) -> Vec<&Formula> {
        self.antecedent.formulas()
    }

    /// Total number of connective occurrences.
    pub fn size(&self) -> usize {
        self.antecedent_formulas().iter().map(|f| f.size()).sum::<usize>()
            + self.succedent.iter().map(Formula::size).sum::<usize>()
    }

    /// Reinterprets the same formulae in another logic, revalidating them.
    pub fn reinterpret(&self, logic: LogicId) -> Result<Sequent> {
        let antecedent = match (&self.antecedent, logic) {
            (Antecedent::Tree(t), LogicId::Nl) => Antecedent::Tree(t.clone()),
            (Antecedent::Tree(t), _) => Antecedent::List(t.leaves().into_iter().cloned().collect()),
            (Antecedent::List(fs), LogicId::Nl) => {
                let mut it = fs.iter().cloned().map(Structure::Leaf);
                let first = it.next().ok_or(Error::EmptyAntecedent(logic))?;
                Antecedent::Tree(it.fold(first, Structure::pair))
            }
            (Antecedent::List(fs), _) => Antecedent::List(fs.clone()),
        };
        Sequent::new(logic, antecedent, self.succedent.clone())
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn comma_list(fs: &[&Formula], f: &mut fmt::Formatter<'_>) -> fmt::Result {
            for (i, g) in fs.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{g}")?;
            }
            Ok(())
        }
        match &self.antecedent {
            Antecedent::List(fs) => comma_list(&fs.iter().collect::<Vec<_>>(), f)?,
            Antecedent::Tree(t) => write!(f, "{t}")?,
        }
        if self.antecedent.is_empty() {
            f.write_str("=>")?;
        } else {
            f.write_str(" =>")?;
        }
        if !self.succedent.is_empty() {
            f.write_str(" ")?;
            comma_list(&self.succedent.iter().collect::<Vec<_>>(), f)?;
        }
        Ok(())
    }
}
