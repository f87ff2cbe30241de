//! Enumeration of axiom linkings.

use std::collections::BTreeMap;

use super::ProofStructure;
use crate::logic::{PosId, Sign};

/// Lazily enumerates every perfect matching of the linkable atoms of
/// `skeleton` that pairs dual atoms. Atoms are matched in id order, the first
/// unmatched atom trying its candidates in id order, so the stream is
/// lexicographic. With `planar_only`, crossing matchings are pruned.
pub fn enumerate_linkings(skeleton: &ProofStructure, planar_only: bool) -> Linkings {
    Linkings::new(skeleton, planar_only)
}

pub struct Linkings {
    base: ProofStructure,
    atoms: Vec<PosId>,
    labels: Vec<usize>,
    positive: Vec<bool>,
    candidates: Vec<Vec<usize>>,
    mate: Vec<Option<usize>>,
    /// (atom index, next candidate cursor) per open choice.
    stack: Vec<(usize, usize)>,
    planar: bool,
    started: bool,
    done: bool,
}

impl Linkings {
    fn new(skeleton: &ProofStructure, planar: bool) -> Linkings {
        let atoms = skeleton.linkable_atoms();
        let mut names: BTreeMap<&str, usize> = BTreeMap::new();
        let mut labels = Vec::with_capacity(atoms.len());
        for &a in &atoms {
            let name = skeleton.node(a).label.atom_name().unwrap_or_default();
            let next = names.len();
            labels.push(*names.entry(name).or_insert(next));
        }
        let positive: Vec<bool> = atoms.iter().map(|&a| skeleton.node(a).sign == Sign::Pos).collect();
        let candidates = (0..atoms.len())
            .map(|i| (0..atoms.len()).filter(|&j| labels[j] == labels[i] && positive[j] != positive[i]).collect())
            .collect();
        let mut balance = vec![0i64; names.len()];
        for (i, &l) in labels.iter().enumerate() {
            balance[l] += if positive[i] { 1 } else { -1 };
        }
        let done = balance.iter().any(|&b| b != 0);
        Linkings {
            base: skeleton.with_axioms_unchecked(Vec::new()),
            mate: vec![None; atoms.len()],
            atoms,
            labels,
            positive,
            candidates,
            stack: Vec::new(),
            planar,
            started: false,
            done,
        }
    }

    fn first_unmatched(&self) -> Option<usize> {
        self.mate.iter().position(Option::is_none)
    }

    /// With `u` the first unmatched atom, pairing it with `v` must not cross
    /// an existing link and must leave a balanced interval between them.
    fn admissible(&self, u: usize, v: usize) -> bool {
        if !self.planar {
            return true;
        }
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        for a in 0..u {
            if let Some(b) = self.mate[a] {
                let (a, b) = if a < b { (a, b) } else { (b, a) };
                if (a < lo && lo < b && b < hi) || (lo < a && a < hi && hi < b) {
                    return false;
                }
            }
        }
        let mut balance: BTreeMap<usize, i64> = BTreeMap::new();
        for k in lo + 1..hi {
            if self.mate[k].is_some() {
                return false;
            }
            *balance.entry(self.labels[k]).or_default() += if self.positive[k] { 1 } else { -1 };
        }
        balance.values().all(|&b| b == 0)
    }

    fn current(&self) -> ProofStructure {
        let pairs = self
            .mate
            .iter()
            .enumerate()
            .filter(|&(i, _)| self.positive[i])
            .filter_map(|(i, m)| m.map(|j| (self.atoms[i], self.atoms[j])))
            .collect();
        self.base.with_axioms_unchecked(pairs)
    }
}

impl Iterator for Linkings {
    type Item = ProofStructure;

    fn next(&mut self) -> Option<ProofStructure> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            match self.first_unmatched() {
                Some(u) => self.stack.push((u, 0)),
                None => {
                    self.done = true;
                    return Some(self.current());
                }
            }
        }
        loop {
            let Some(&mut (u, ref mut cursor)) = self.stack.last_mut() else {
                self.done = true;
                return None;
            };
            let start = *cursor;
            if let Some(v) = self.mate[u].take() {
                self.mate[v] = None;
            }
            let found =
                self.candidates[u][start..].iter().position(|&v| self.mate[v].is_none() && self.admissible(u, v));
            let Some(offset) = found else {
                self.stack.pop();
                continue;
            };
            let v = self.candidates[u][start + offset];
            if let Some(top) = self.stack.last_mut() {
                top.1 = start + offset + 1;
            }
            self.mate[u] = Some(v);
            self.mate[v] = Some(u);
            match self.first_unmatched() {
                Some(w) => self.stack.push((w, 0)),
                None => return Some(self.current()),
            }
        }
    }
}
