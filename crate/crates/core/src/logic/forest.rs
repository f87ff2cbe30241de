use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Antecedent, Connective, Formula, LogicId, Sequent, Sign, Structure};

/// Index of a position inside its forest. Ids are assigned in pre-order, so
/// sorting atoms by id yields their left-to-right leaf order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PosId(pub usize);

impl fmt::Display for PosId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Class {
    Alpha,
    Beta,
    Unary,
    Atom,
}

impl Class {
    /// Smullyan classification of a connective occurring with `sign`.
    pub fn of(connective: Connective, sign: Sign) -> Class {
        use Connective::*;
        use Sign::*;
        match (connective, sign) {
            (Not | Perp, _) => Class::Unary,
            (And, Neg) | (Or, Pos) | (Implies, Pos) => Class::Alpha,
            (And, Pos) | (Or, Neg) | (Implies, Neg) => Class::Beta,
            (Tensor, Neg) | (Par, Pos) | (Lolli, Pos) | (Product, Neg) => Class::Alpha,
            (Over, Pos) | (Under, Pos) => Class::Alpha,
            (Tensor, Pos) | (Par, Neg) | (Lolli, Neg) | (Product, Pos) => Class::Beta,
            (Over, Neg) | (Under, Neg) => Class::Beta,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Antecedent,
    Succedent,
}

/// The sequent formula a position descends from. For NL, `index` is the
/// left-to-right index of the antecedent tree leaf.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Origin {
    pub side: Side,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Position {
    pub id: PosId,
    pub label: Formula,
    pub sign: Sign,
    pub class: Class,
    pub parent: Option<PosId>,
    pub children: Vec<PosId>,
    pub origin: Origin,
}

impl Position {
    pub fn is_atom(&self) -> bool {
        self.class == Class::Atom
    }

    /// Signed rendering such as `A+` or `(A/B)-`.
    pub fn signed(&self) -> String {
        match &self.label {
            Formula::Atom(name) => format!("{name}{}", self.sign),
            other => format!("({other}){}", self.sign),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionForest {
    logic: LogicId,
    positions: Vec<Position>,
    roots: Vec<PosId>,
    atoms: Vec<PosId>,
    antecedent_len: usize,
}

/// Children of a compound signed formula, in link order.
fn signed_children(formula: &Formula, sign: Sign) -> Vec<(Formula, Sign)> {
    use Connective::*;
    match formula {
        Formula::Atom(_) => vec![],
        Formula::Unary(_, a) => vec![((**a).clone(), !sign)],
        Formula::Binary(c, a, b) => {
            let (a, b) = ((**a).clone(), (**b).clone());
            match (c, sign) {
                (Implies | Lolli, _) => vec![(a, !sign), (b, sign)],
                (Over, Sign::Neg) => vec![(a, sign), (b, !sign)],
                (Over, Sign::Pos) => vec![(b, !sign), (a, sign)],
                (Under, Sign::Neg) => vec![(a, !sign), (b, sign)],
                (Under, Sign::Pos) => vec![(b, sign), (a, !sign)],
                (Product, Sign::Pos) => vec![(b, sign), (a, sign)],
                _ => vec![(a, sign), (b, sign)],
            }
        }
    }
}

/// Signed decomposition of every formula of the sequent.
pub fn decompose(sequent: &Sequent) -> DecompositionForest {
    let mut forest = DecompositionForest {
        logic: sequent.logic(),
        positions: Vec::new(),
        roots: Vec::new(),
        atoms: Vec::new(),
        antecedent_len: 0,
    };
    let antecedent = sequent.antecedent_formulas();
    forest.antecedent_len = antecedent.len();
    for (index, f) in antecedent.into_iter().enumerate() {
        let origin = Origin { side: Side::Antecedent, index };
        let id = forest.push(f.clone(), Sign::Neg, None, origin);
        forest.roots.push(id);
    }
    for (index, f) in sequent.succedent().iter().enumerate() {
        let origin = Origin { side: Side::Succedent, index };
        let id = forest.push(f.clone(), Sign::Pos, None, origin);
        forest.roots.push(id);
    }
    forest
}

/// Atoms in the left-to-right order used for planarity.
pub fn leaf_order(forest: &DecompositionForest) -> Vec<PosId> {
    forest.atoms.clone()
}

impl DecompositionForest {
    fn push(&mut self, label: Formula, sign: Sign, parent: Option<PosId>, origin: Origin) -> PosId {
        let id = PosId(self.positions.len());
        let class = match label.connective() {
            None => Class::Atom,
            Some(c) => Class::of(c, sign),
        };
        if class == Class::Atom {
            self.atoms.push(id);
        }
        let kids = signed_children(&label, sign);
        self.positions.push(Position {
            id,
            label,
            sign,
            class,
            parent,
            children: Vec::with_capacity(kids.len()),
            origin,
        });
        for (child, child_sign) in kids {
            let c = self.push(child, child_sign, Some(id), origin);
            self.positions[id.0].children.push(c);
        }
        id
    }

    pub fn logic(&self) -> LogicId {
        self.logic
    }

    pub fn positions(&self) -> &[Position] {
        &self.positions
    }

    pub fn get(&self, id: PosId) -> &Position {
        &self.positions[id.0]
    }

    pub fn try_get(&self, id: PosId) -> Option<&Position> {
        self.positions.get(id.0)
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn roots(&self) -> &[PosId] {
        &self.roots
    }

    pub fn antecedent_roots(&self) -> &[PosId] {
        &self.roots[..self.antecedent_len]
    }

    pub fn succedent_roots(&self) -> &[PosId] {
        &self.roots[self.antecedent_len..]
    }

    pub fn atoms(&self) -> &[PosId] {
        &self.atoms
    }

    pub fn classify(&self, id: PosId) -> Class {
        self.get(id).class
    }

    /// All positions strictly below `id`, in pre-order.
    pub fn descendants(&self, id: PosId) -> Vec<PosId> {
        // pre-order numbering makes every subtree a contiguous id range
        let end = self.subtree_end(id);
        (id.0 + 1..end).map(PosId).collect()
    }

    /// One past the last id of the subtree rooted at `id`.
    pub fn subtree_end(&self, id: PosId) -> usize {
        let mut cur = id;
        while let Some(&last) = self.get(cur).children.last() {
            cur = last;
        }
        cur.0 + 1
    }

    pub fn is_ancestor(&self, ancestor: PosId, id: PosId) -> bool {
        ancestor.0 <= id.0 && id.0 < self.subtree_end(ancestor)
    }

    /// Atoms inside the subtree rooted at `id` (including `id` itself).
    pub fn subtree_atoms(&self, id: PosId) -> Vec<PosId> {
        let end = self.subtree_end(id);
        self.atoms.iter().copied().filter(|a| a.0 >= id.0 && a.0 < end).collect()
    }

    pub fn root_of(&self, mut id: PosId) -> PosId {
        while let Some(p) = self.get(id).parent {
            id = p;
        }
        id
    }

    /// Whether two positions carry the same label with opposite signs.
    pub fn dual(&self, a: PosId, b: PosId) -> bool {
        let (pa, pb) = (self.get(a), self.get(b));
        pa.sign != pb.sign && pa.label == pb.label
    }

    /// For each atom name, (#positive, #negative) occurrences.
    pub fn atom_balance(&self) -> BTreeMap<&str, (usize, usize)> {
        let mut out: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
        for &a in &self.atoms {
            let p = self.get(a);
            let entry = out.entry(p.label.atom_name().unwrap_or_default()).or_default();
            match p.sign {
                Sign::Pos => entry.0 += 1,
                Sign::Neg => entry.1 += 1,
            }
        }
        out
    }

    /// Necessary condition for linear provability: every atom name occurs
    /// equally often with each sign.
    pub fn atoms_balanced(&self) -> bool {
        self.atom_balance().values().all(|(p, n)| p == n)
    }
}

/// Mirror of an NL antecedent tree whose leaves are root position ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootTree {
    Leaf(PosId),
    Pair(Box<RootTree>, Box<RootTree>),
}

impl RootTree {
    pub fn from_sequent(sequent: &Sequent, forest: &DecompositionForest) -> Option<RootTree> {
        fn walk(s: &Structure, roots: &mut std::slice::Iter<'_, PosId>) -> RootTree {
            match s {
                Structure::Leaf(_) => RootTree::Leaf(*roots.next().expect("leaf count matches roots")),
                Structure::Pair(l, r) => {
                    let l = walk(l, roots);
                    let r = walk(r, roots);
                    RootTree::Pair(Box::new(l), Box::new(r))
                }
            }
        }
        match sequent.antecedent() {
            Antecedent::Tree(t) => Some(walk(t, &mut forest.antecedent_roots().iter())),
            Antecedent::List(_) => None,
        }
    }

    pub fn leaves(&self) -> Vec<PosId> {
        match self {
            RootTree::Leaf(p) => vec![*p],
            RootTree::Pair(l, r) => {
                let mut v = l.leaves();
                v.extend(r.leaves());
                v
            }
        }
    }
}
