//! Parenthetical boundaries for NL structures.
//!
//! Every pair of parentheses in the antecedent owns a boundary. It encloses
//! the formulae of the bracketed substructure, the boundaries nested inside
//! it, and the premises of the first link of the formula each side stands
//! for: a formula directly under the pair stands for itself, a nested pair
//! for the result of the functor applied inside it. Whenever two compound
//! occurrences of one formula with opposite signs lie inside, their whole
//! decompositions are drawn in as well. No positive atom inside a boundary
//! may be linked to an atom outside it.
//!
//! A functor heading one side of a pair is applied to the other side when
//! its argument is linked into that side. The side and the argument must
//! then be closed under the linking, as the premise of the left rule
//! demands; the boundary alone misses this in `((A , B) , B\(A\C)) => C`,
//! where every positive atom stays inside the outer boundary.
//!
//! A succedent `X/Y` or `Y\X` is read through its invertible right rule:
//! the negative `Y` joins the antecedent as a hypothesis on the matching
//! side and the check continues with `X`. Without this, bracketing demanded
//! by the succedent would go unchecked.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{Failure, NetVerdict, ProofStructure};
use crate::error::{Error, Result};
use crate::logic::{Connective, DecompositionForest, LogicId, PosId, RootTree, Sign};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Boundary {
    /// Route from the root of the antecedent tree, `false` for left.
    pub path: Vec<bool>,
    pub owner: String,
    pub members: BTreeSet<PosId>,
}

/// Antecedent tree extended with the hypotheses of the succedent.
fn hypothesis_tree(ps: &ProofStructure) -> Option<(RootTree, PosId)> {
    let forest = ps.forest();
    let mut tree = RootTree::from_sequent(ps.sequent(), forest)?;
    let mut goal = *forest.succedent_roots().first()?;
    loop {
        let pos = forest.get(goal);
        if pos.sign != Sign::Pos {
            break;
        }
        match pos.label.connective() {
            // positive children are stored as [argument-, result+] for `/`
            Some(Connective::Over) => {
                tree = RootTree::Pair(Box::new(tree), Box::new(RootTree::Leaf(pos.children[0])));
                goal = pos.children[1];
            }
            // and as [result+, argument-] for `\`
            Some(Connective::Under) => {
                tree = RootTree::Pair(Box::new(RootTree::Leaf(pos.children[1])), Box::new(tree));
                goal = pos.children[0];
            }
            _ => break,
        }
    }
    Some((tree, goal))
}

fn render(ps: &ProofStructure, t: &RootTree) -> String {
    match t {
        RootTree::Leaf(p) => ps.render(*p),
        RootTree::Pair(l, r) => format!("({} , {})", render(ps, l), render(ps, r)),
    }
}

/// Draws in the whole decompositions of two dual compounds whose atoms are
/// linked to each other.
fn close(ps: &ProofStructure, members: &mut BTreeSet<PosId>) {
    let forest = ps.forest();
    let linked = |x: PosId, y: PosId| {
        let under_y: BTreeSet<PosId> = atoms_under(forest, y).collect();
        atoms_under(forest, x).all(|a| ps.partner(a).is_some_and(|q| under_y.contains(&q)))
    };
    loop {
        let compounds: Vec<PosId> = members.iter().copied().filter(|&p| !forest.get(p).is_atom()).collect();
        let open = compounds.iter().enumerate().find_map(|(i, &x)| {
            compounds[i + 1..]
                .iter()
                .find(|&&y| {
                    forest.dual(x, y)
                        && forest.descendants(x).iter().chain(&forest.descendants(y)).any(|d| !members.contains(d))
                        && linked(x, y)
                })
                .map(|&y| (x, y))
        });
        let Some((x, y)) = open else { return };
        members.extend(forest.descendants(x));
        members.extend(forest.descendants(y));
    }
}

fn atoms_under(forest: &DecompositionForest, p: PosId) -> impl Iterator<Item = PosId> + '_ {
    std::iter::once(p).chain(forest.descendants(p)).filter(|&q| forest.get(q).is_atom())
}

/// A subtree of the antecedent: the formula it stands for, if any, and the
/// atoms of its decomposition.
struct Side {
    head: Option<PosId>,
    region: BTreeSet<PosId>,
}

/// Applies a functor heading one side to the other side. Returns the
/// result, or the first atom escaping an applied argument when no
/// application closes.
fn apply(ps: &ProofStructure, l: &Side, r: &Side) -> Result<Option<PosId>, PosId> {
    let forest = ps.forest();
    let functor = |h: Option<PosId>, c: Connective| {
        h.map(|f| forest.get(f)).filter(|f| f.sign == Sign::Neg && f.label.connective() == Some(c))
    };
    // (argument, result, consumed side)
    let mut candidates = Vec::new();
    if let Some(f) = functor(r.head, Connective::Under) {
        candidates.push((f.children[0], f.children[1], &l.region));
    }
    if let Some(f) = functor(l.head, Connective::Over) {
        candidates.push((f.children[1], f.children[0], &r.region));
    }
    let mut leak = None;
    for (arg, result, consumed) in candidates {
        let arg_atoms: BTreeSet<PosId> = atoms_under(forest, arg).collect();
        if !arg_atoms.iter().any(|&a| ps.partner(a).is_some_and(|q| consumed.contains(&q))) {
            continue;
        }
        let escaped = consumed
            .iter()
            .chain(&arg_atoms)
            .copied()
            .find(|&a| !ps.partner(a).is_some_and(|q| consumed.contains(&q) || arg_atoms.contains(&q)));
        match escaped {
            None => return Ok(Some(result)),
            Some(atom) => {
                leak.get_or_insert(atom);
            }
        }
    }
    leak.map_or(Ok(None), Err)
}

struct Walk<'a> {
    ps: &'a ProofStructure,
    boundaries: Vec<Boundary>,
    /// First failed application, with the pair it happened at.
    broken: Option<(String, PosId)>,
}

impl Walk<'_> {
    fn visit(&mut self, t: &RootTree, path: &mut Vec<bool>) -> (Side, BTreeSet<PosId>) {
        let forest = self.ps.forest();
        match t {
            RootTree::Leaf(p) => {
                let side = Side { head: Some(*p), region: atoms_under(forest, *p).collect() };
                (side, BTreeSet::from([*p]))
            }
            RootTree::Pair(l, r) => {
                path.push(false);
                let (left, mut members) = self.visit(l, path);
                path.pop();
                path.push(true);
                let (right, inner) = self.visit(r, path);
                path.pop();
                members.extend(inner);
                for head in [left.head, right.head].into_iter().flatten() {
                    members.extend(forest.get(head).children.iter().copied());
                }
                close(self.ps, &mut members);
                let owner = render(self.ps, t);
                // without product, only an application turns a pair into a formula
                let head = match apply(self.ps, &left, &right) {
                    Ok(Some(head)) => Some(head),
                    Ok(None) => {
                        let atom = left.region.iter().next().copied().unwrap_or(PosId(0));
                        self.broken.get_or_insert((owner.clone(), atom));
                        None
                    }
                    Err(atom) => {
                        self.broken.get_or_insert((owner.clone(), atom));
                        None
                    }
                };
                self.boundaries.push(Boundary { path: path.clone(), owner, members: members.clone() });
                let mut region = left.region;
                region.extend(right.region);
                (Side { head, region }, members)
            }
        }
    }
}

fn walk(ps: &ProofStructure) -> Result<Walk<'_>> {
    if ps.logic() != LogicId::Nl {
        return Err(Error::UnsupportedLogic { logic: ps.logic(), operation: "parenthetical boundaries" });
    }
    let mut w = Walk { ps, boundaries: Vec::new(), broken: None };
    if let Some((tree, goal)) = hypothesis_tree(ps) {
        let (root, _) = w.visit(&tree, &mut Vec::new());
        if root.head.is_some() && root.head != ps.partner(goal) {
            w.broken.get_or_insert((render(ps, &tree), goal));
        }
    }
    Ok(w)
}

/// Boundaries of every internal node of the antecedent tree, innermost
/// first. Which formula a nested pair stands for depends on the linking.
pub fn nl_boundaries(ps: &ProofStructure) -> Result<Vec<Boundary>> {
    walk(ps).map(|w| w.boundaries)
}

/// The crossing rule alone: the first positive atom, boundary by boundary,
/// whose axiom link leaves the boundary containing it.
pub fn boundary_crossing_check(ps: &ProofStructure, boundaries: &[Boundary]) -> NetVerdict {
    for b in boundaries {
        for &a in &b.members {
            let node = ps.node(a);
            if node.is_atom() && node.sign == Sign::Pos && !ps.partner(a).is_some_and(|q| b.members.contains(&q)) {
                return NetVerdict::fail(Failure::Boundary { owner: b.owner.clone(), atom: a });
            }
        }
    }
    NetVerdict::pass()
}

/// The crossing rule, then the applications: the first pair whose
/// functor's argument leaks, that no functor reduces, or, at the root,
/// that does not stand for the goal's partner.
pub fn nl_boundary_check(ps: &ProofStructure, boundaries: &[Boundary]) -> NetVerdict {
    let v = boundary_crossing_check(ps, boundaries);
    if !v.is_net {
        return v;
    }
    if let Ok(Walk { broken: Some((owner, atom)), .. }) = walk(ps) {
        return NetVerdict::fail(Failure::Boundary { owner, atom });
    }
    NetVerdict::pass()
}
