//! Matrices of signed atoms for classical and multiplicative linear sequents.
//!
//! A matrix is a nested arrangement of rows (conjunctive nodes) and columns
//! (disjunctive nodes). An atomic path picks every element of a row and one
//! element of each column it enters; a sequent is classically provable iff
//! every path holds a connection, and MLL-provable iff a set of connections
//! spans the matrix linearly.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::logic::{Class, DecompositionForest, LogicId, PosId, Sign};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Matrix {
    Atom(PosId),
    Row(Vec<Matrix>),
    Col(Vec<Matrix>),
}

impl Matrix {
    /// Number of atomic paths through this matrix.
    pub fn path_count(&self) -> u128 {
        match self {
            Matrix::Atom(_) => 1,
            Matrix::Row(ms) => ms.iter().map(Matrix::path_count).product(),
            Matrix::Col(ms) => ms.iter().map(Matrix::path_count).sum(),
        }
    }

    pub fn atoms(&self) -> Vec<PosId> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut Vec<PosId>) {
        match self {
            Matrix::Atom(p) => out.push(*p),
            Matrix::Row(ms) | Matrix::Col(ms) => ms.iter().for_each(|m| m.collect_atoms(out)),
        }
    }
}

/// The matrix of a sequent together with the forest it was built from.
#[derive(Clone, Debug)]
pub struct SequentMatrix {
    pub root: Matrix,
    forest: DecompositionForest,
}

/// A connection between a positive and a negative atom with the same label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Connection {
    pub positive: PosId,
    pub negative: PosId,
}

impl Connection {
    /// Orders an unordered pair by sign; `None` unless the signs differ.
    pub fn new(forest: &DecompositionForest, a: PosId, b: PosId) -> Option<Connection> {
        let (pa, pb) = (forest.try_get(a)?, forest.try_get(b)?);
        match (pa.sign, pb.sign) {
            (Sign::Pos, Sign::Neg) => Some(Connection { positive: a, negative: b }),
            (Sign::Neg, Sign::Pos) => Some(Connection { positive: b, negative: a }),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ConnectionSet {
    pub connections: BTreeSet<Connection>,
    pub spans: bool,
    pub linear: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Classical,
    Linear,
}

pub type AtomicPath = Vec<PosId>;

pub fn build_matrix(forest: &DecompositionForest) -> Result<SequentMatrix> {
    match forest.logic() {
        LogicId::Classical | LogicId::Mll | LogicId::Mill => {}
        logic => return Err(Error::UnsupportedLogic { logic, operation: "the matrix method" }),
    }
    fn node(forest: &DecompositionForest, id: PosId) -> Matrix {
        let p = forest.get(id);
        let kids = || p.children.iter().map(|&c| node(forest, c)).collect();
        match p.class {
            Class::Atom => Matrix::Atom(id),
            Class::Alpha | Class::Unary => Matrix::Row(kids()),
            Class::Beta => Matrix::Col(kids()),
        }
    }
    let root = Matrix::Row(forest.roots().iter().map(|&r| node(forest, r)).collect());
    Ok(SequentMatrix { root, forest: forest.clone() })
}

impl SequentMatrix {
    pub fn forest(&self) -> &DecompositionForest {
        &self.forest
    }

    pub fn atomic_paths(&self) -> AtomicPaths<'_> {
        AtomicPaths { root: &self.root, choices: Vec::new(), done: false }
    }

    pub fn path_count(&self) -> u128 {
        self.root.path_count()
    }

    /// Whether two distinct atoms lie on a common atomic path, i.e. their
    /// lowest common ancestor in the matrix is a row.
    pub fn co_occur(&self, a: PosId, b: PosId) -> bool {
        fn trail(m: &Matrix, target: PosId, out: &mut Vec<(bool, usize)>) -> bool {
            match m {
                Matrix::Atom(p) => *p == target,
                Matrix::Row(ms) | Matrix::Col(ms) => {
                    for (i, c) in ms.iter().enumerate() {
                        out.push((matches!(m, Matrix::Row(_)), i));
                        if trail(c, target, out) {
                            return true;
                        }
                        out.pop();
                    }
                    false
                }
            }
        }
        if a == b {
            return false;
        }
        let (mut ta, mut tb) = (Vec::new(), Vec::new());
        if !trail(&self.root, a, &mut ta) || !trail(&self.root, b, &mut tb) {
            return false;
        }
        let split = ta.iter().zip(&tb).position(|(x, y)| x != y).expect("distinct atoms diverge");
        ta[split].0
    }

    /// Every pair of dual atoms that co-occur on some path, in id order.
    pub fn candidate_connections(&self) -> Vec<Connection> {
        let atoms = self.forest.atoms();
        let mut out = Vec::new();
        for (i, &a) in atoms.iter().enumerate() {
            for &b in &atoms[i + 1..] {
                if self.forest.dual(a, b) && self.co_occur(a, b) {
                    out.extend(Connection::new(&self.forest, a, b));
                }
            }
        }
        out
    }

    pub fn render_atom(&self, id: PosId) -> String {
        self.forest.get(id).signed()
    }

    /// Canonical text: atoms as `A+`, columns as `[x ; y]`, rows as `[x y]`.
    /// A row with a single compound element is shown as that element; the
    /// outermost row is unbracketed. Classical sequents read as the signed
    /// formula `(⋀Γ → ⋁Δ)+`, so a side with several formulae is grouped.
    pub fn render(&self) -> String {
        let Matrix::Row(tops) = &self.root else { unreachable!("matrix root is a row") };
        let parts: Vec<String> = tops.iter().map(|m| self.render_inner(m)).collect();
        if self.forest.logic() != LogicId::Classical {
            return parts.join(" ");
        }
        let k = self.forest.antecedent_roots().len();
        let group = |xs: &[String]| match xs.len() {
            0 => None,
            1 => Some(xs[0].clone()),
            _ => Some(format!("[{}]", xs.join(" "))),
        };
        [group(&parts[..k]), group(&parts[k..])].into_iter().flatten().collect::<Vec<_>>().join(" ")
    }

    fn render_inner(&self, m: &Matrix) -> String {
        match m {
            Matrix::Atom(p) => self.render_atom(*p),
            Matrix::Row(ms) if ms.len() == 1 && !matches!(ms[0], Matrix::Atom(_)) => self.render_inner(&ms[0]),
            Matrix::Row(ms) => {
                format!("[{}]", ms.iter().map(|x| self.render_inner(x)).collect::<Vec<_>>().join(" "))
            }
            Matrix::Col(ms) => {
                format!("[{}]", ms.iter().map(|x| self.render_inner(x)).collect::<Vec<_>>().join(" ; "))
            }
        }
    }

    pub fn render_connection(&self, c: &Connection) -> String {
        format!("<{}, {}>", self.render_atom(c.positive), self.render_atom(c.negative))
    }

    pub fn render_connections(&self, set: &ConnectionSet) -> String {
        let inner: Vec<String> = set.connections.iter().map(|c| self.render_connection(c)).collect();
        format!("{{{}}}", inner.join(", "))
    }

    fn covers(path: &[PosId], c: &Connection) -> bool {
        path.binary_search(&c.positive).is_ok() && path.binary_search(&c.negative).is_ok()
    }

    fn spans(&self, set: &BTreeSet<Connection>) -> bool {
        self.atomic_paths().all(|p| set.iter().any(|c| Self::covers(&p, c)))
    }

    /// Galmiche's conditions: every atom in exactly one connection, and each
    /// connection is the only one on some path (no connection is redundant).
    fn linear_conditions(&self, set: &BTreeSet<Connection>) -> bool {
        let mut used: Vec<PosId> = set.iter().flat_map(|c| [c.positive, c.negative]).collect();
        used.sort();
        let before = used.len();
        used.dedup();
        if used.len() != before || used != self.forest.atoms() {
            return false;
        }
        let mut essential: BTreeSet<Connection> = BTreeSet::new();
        for p in self.atomic_paths() {
            let mut on = set.iter().filter(|c| Self::covers(&p, c));
            if let (Some(c), None) = (on.next(), on.next()) {
                essential.insert(*c);
            }
        }
        essential.len() == set.len()
    }
}

pub fn atomic_paths(matrix: &SequentMatrix) -> AtomicPaths<'_> {
    matrix.atomic_paths()
}

/// Classical spanning: a set exists iff every path holds some connection,
/// so one connection per uncovered path, first in path order, suffices.
pub fn spanning_set(matrix: &SequentMatrix) -> Option<ConnectionSet> {
    let forest = &matrix.forest;
    let mut chosen: BTreeSet<Connection> = BTreeSet::new();
    for path in matrix.atomic_paths() {
        if chosen.iter().any(|c| SequentMatrix::covers(&path, c)) {
            continue;
        }
        let found = path.iter().enumerate().find_map(|(i, &a)| {
            path[i + 1..].iter().find(|&&b| forest.dual(a, b)).map(|&b| Connection::new(forest, a, b))
        })??;
        chosen.insert(found);
    }
    Some(ConnectionSet { connections: chosen, spans: true, linear: false })
}

/// Searches the perfect dual matchings over co-occurring atoms for one
/// that spans linearly. Returns the first in lexicographic order.
pub fn linear_spanning_set(matrix: &SequentMatrix) -> Option<ConnectionSet> {
    let mut found = None;
    matrix.for_each_perfect_matching(|set| {
        if matrix.spans(set) && matrix.linear_conditions(set) {
            found = Some(set.clone());
            false
        } else {
            true
        }
    });
    found.map(|connections| ConnectionSet { connections, spans: true, linear: true })
}

impl SequentMatrix {
    /// Calls `visit` on every perfect matching of atoms into co-occurring
    /// dual pairs until it returns `false`.
    pub fn for_each_perfect_matching(&self, mut visit: impl FnMut(&BTreeSet<Connection>) -> bool) {
        let atoms = self.forest.atoms().to_vec();
        if !self.forest.atoms_balanced() {
            return;
        }
        let mut partners: Vec<Vec<usize>> = vec![Vec::new(); atoms.len()];
        for i in 0..atoms.len() {
            for j in 0..atoms.len() {
                if i != j && self.forest.dual(atoms[i], atoms[j]) && self.co_occur(atoms[i], atoms[j]) {
                    partners[i].push(j);
                }
            }
        }
        let mut matched = vec![false; atoms.len()];
        let mut set = BTreeSet::new();
        self.matchings(&atoms, &partners, &mut matched, &mut set, &mut visit);
    }

    fn matchings(
        &self,
        atoms: &[PosId],
        partners: &[Vec<usize>],
        matched: &mut [bool],
        set: &mut BTreeSet<Connection>,
        visit: &mut impl FnMut(&BTreeSet<Connection>) -> bool,
    ) -> bool {
        let Some(i) = matched.iter().position(|m| !m) else {
            return visit(set);
        };
        matched[i] = true;
        for &j in &partners[i] {
            if matched[j] {
                continue;
            }
            matched[j] = true;
            let c = Connection::new(&self.forest, atoms[i], atoms[j]).expect("dual pair");
            set.insert(c);
            let go_on = self.matchings(atoms, partners, matched, set, visit);
            set.remove(&c);
            matched[j] = false;
            if !go_on {
                matched[i] = false;
                return false;
            }
        }
        matched[i] = false;
        true
    }
}

/// Re-checks an externally supplied connection set.
pub fn verify_connections(matrix: &SequentMatrix, set: &ConnectionSet, mode: Mode) -> Result<bool> {
    let forest = &matrix.forest;
    for c in &set.connections {
        for p in [c.positive, c.negative] {
            if forest.try_get(p).is_none_or(|pos| !pos.is_atom()) {
                return Err(Error::ForeignPosition(p.0));
            }
        }
    }
    let valid = set.connections.iter().all(|c| {
        forest.dual(c.positive, c.negative)
            && forest.get(c.positive).sign == Sign::Pos
            && matrix.co_occur(c.positive, c.negative)
    });
    if !valid || !matrix.spans(&set.connections) {
        return Ok(false);
    }
    Ok(match mode {
        Mode::Classical => true,
        Mode::Linear => matrix.linear_conditions(&set.connections),
    })
}

/// Lazy enumeration of atomic paths. The state is one choice per column
/// entered, in traversal order; advancing works like an odometer whose
/// later digits are reset whenever an earlier one moves.
pub struct AtomicPaths<'m> {
    root: &'m Matrix,
    choices: Vec<usize>,
    done: bool,
}

impl AtomicPaths<'_> {
    fn walk(m: &Matrix, choices: &mut Vec<usize>, cursor: &mut usize, arities: &mut Vec<usize>, out: &mut Vec<PosId>) {
        match m {
            Matrix::Atom(p) => out.push(*p),
            Matrix::Row(ms) => ms.iter().for_each(|c| Self::walk(c, choices, cursor, arities, out)),
            Matrix::Col(ms) => {
                if *cursor == choices.len() {
                    choices.push(0);
                }
                let pick = choices[*cursor];
                *cursor += 1;
                arities.push(ms.len());
                Self::walk(&ms[pick], choices, cursor, arities, out);
            }
        }
    }
}

impl Iterator for AtomicPaths<'_> {
    type Item = AtomicPath;

    fn next(&mut self) -> Option<AtomicPath> {
        if self.done {
            return None;
        }
        let mut path = Vec::new();
        let mut arities = Vec::new();
        let mut cursor = 0;
        Self::walk(self.root, &mut self.choices, &mut cursor, &mut arities, &mut path);
        self.choices.truncate(cursor);
        match (0..cursor).rev().find(|&i| self.choices[i] + 1 < arities[i]) {
            Some(i) => {
                self.choices[i] += 1;
                self.choices.truncate(i + 1);
            }
            None => self.done = true,
        }
        path.sort();
        Some(path)
    }
}

impl fmt::Display for SequentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::decompose;
    use crate::syntax::parse_sequent;

    fn matrix(text: &str, logic: LogicId) -> SequentMatrix {
        build_matrix(&decompose(&parse_sequent(text, logic).unwrap())).unwrap()
    }

    /// Paths by brute-force expansion: rows take the product of their
    /// elements' path sets, columns their union.
    fn brute_paths(m: &Matrix) -> Vec<Vec<PosId>> {
        match m {
            Matrix::Atom(p) => vec![vec![*p]],
            Matrix::Col(ms) => ms.iter().flat_map(brute_paths).collect(),
            Matrix::Row(ms) => ms.iter().fold(vec![vec![]], |acc, x| {
                let xs = brute_paths(x);
                acc.iter().flat_map(|a| xs.iter().map(move |b| a.iter().chain(b).copied().collect())).collect()
            }),
        }
    }

    #[test]
    fn odometer_matches_brute_force() {
        for (text, logic) in [
            ("~A, B->A => ~B", LogicId::Classical),
            ("(A|B)&(C|D), (A->B)->(C&D) => (A&B)|~C", LogicId::Classical),
            ("A@B, (B*C)^ => C-oA", LogicId::Mll),
            ("A => A", LogicId::Mll),
        ] {
            let m = matrix(text, logic);
            let mut lazy: Vec<_> = m.atomic_paths().collect();
            let mut brute: Vec<_> = brute_paths(&m.root)
                .into_iter()
                .map(|mut p| {
                    p.sort();
                    p
                })
                .collect();
            lazy.sort();
            brute.sort();
            assert_eq!(lazy, brute, "{text}");
            assert_eq!(lazy.len() as u128, m.path_count());
        }
    }

    #[test]
    fn two_independent_columns_give_four_paths() {
        let m = matrix("A|B, C|D =>", LogicId::Classical);
        assert_eq!(m.atomic_paths().count(), 4);
        assert_eq!(m.path_count(), 4);
    }

    #[test]
    fn co_occurrence_follows_lowest_common_ancestor() {
        let m = matrix("A|B => A", LogicId::Classical);
        let atoms = m.forest().atoms().to_vec();
        assert!(!m.co_occur(atoms[0], atoms[1]));
        assert!(m.co_occur(atoms[0], atoms[2]));
    }
}
