//! Contraction and Weakening links for classical structures.
//!
//! Structural links attach to atom occurrences. A Contraction link concludes
//! an atom from two fresh copies of it; a Weakening link concludes both an
//! atom (the host) and the weakened formula from one fresh copy of the host,
//! through an auxiliary vertex joined to all three by times edges. The
//! weakened formula keeps its vertex but loses its decomposition.

use std::sync::Arc;

use super::switching::dr_check;
use super::{Frame, Link, LinkKind, NetVerdict, Node, ProofStructure};
use crate::error::{Error, Result};
use crate::logic::{LogicId, PosId};

fn malformed(msg: String) -> Error {
    Error::MalformedStructuralLink(msg)
}

/// Arity and labelling conditions of structural links.
pub fn validate_structural_links(ps: &ProofStructure) -> Result<()> {
    let same = |a: PosId, b: PosId| {
        let (x, y) = (ps.node(a), ps.node(b));
        x.label == y.label && x.sign == y.sign
    };
    let known = |ids: &[PosId]| ids.iter().all(|p| p.0 < ps.nodes().len() && ps.node(*p).active);
    for link in ps.links() {
        match link.kind {
            LinkKind::Contraction | LinkKind::Weakening if ps.logic() != LogicId::Classical => {
                return Err(malformed(format!("{} links exist only in classical structures", link.kind.name())));
            }
            LinkKind::Contraction => {
                if link.conclusions.len() != 1 || link.premises.len() != 2 {
                    return Err(malformed("a contraction link has one conclusion and two premises".into()));
                }
                if !known(&link.conclusions) || !known(&link.premises) {
                    return Err(malformed("a contraction link names an unknown node".into()));
                }
                let c = link.conclusions[0];
                if !link.premises.iter().all(|&p| same(c, p)) {
                    return Err(malformed(format!("contraction premises must repeat {}", ps.render(c))));
                }
            }
            LinkKind::Weakening => {
                if link.conclusions.len() != 2 || link.premises.len() != 1 {
                    return Err(malformed("a weakening link has a host, a weakened formula and one premise".into()));
                }
                if !known(&link.conclusions) || !known(&link.premises) {
                    return Err(malformed("a weakening link names an unknown node".into()));
                }
                let host = link.conclusions[0];
                if !same(host, link.premises[0]) {
                    return Err(malformed(format!("the weakening premise must repeat {}", ps.render(host))));
                }
            }
            _ => {}
        }
    }
    Ok(())
}

/// Switching criterion over a classical structure, structural links
/// included.
pub fn check_classical_structure(ps: &ProofStructure) -> Result<NetVerdict> {
    if ps.logic() != LogicId::Classical {
        return Err(Error::UnsupportedLogic { logic: ps.logic(), operation: "classical structure checking" });
    }
    validate_structural_links(ps)?;
    Ok(dr_check(ps))
}

fn rebuild(ps: &ProofStructure, edit: impl FnOnce(&mut Vec<Node>, &mut Vec<Link>)) -> ProofStructure {
    let frame = &ps.frame;
    let (mut nodes, mut links) = (frame.nodes.clone(), frame.links.clone());
    edit(&mut nodes, &mut links);
    let frame = Frame { sequent: frame.sequent.clone(), forest: frame.forest.clone(), nodes, links };
    ProofStructure { frame: Arc::new(frame), axioms: Vec::new() }
}

/// Contracts `atom`, or the first linkable copy below it if it is already
/// contracted.
pub(crate) fn add_contraction(ps: &ProofStructure, mut atom: PosId) -> ProofStructure {
    while let Some(l) = ps.links().iter().find(|l| l.kind == LinkKind::Contraction && l.conclusions[0] == atom) {
        atom = l.premises[0];
    }
    rebuild(ps, |nodes, links| {
        let copy = nodes[atom.0].clone();
        let first = PosId(nodes.len());
        nodes.push(copy.clone());
        nodes.push(copy);
        links.push(Link {
            kind: LinkKind::Contraction,
            conclusions: vec![atom],
            premises: vec![first, PosId(first.0 + 1)],
        });
    })
}

pub(crate) fn add_weakening(ps: &ProofStructure, host: PosId, weakened: PosId) -> ProofStructure {
    let below = ps.forest().descendants(weakened);
    rebuild(ps, |nodes, links| {
        for d in &below {
            nodes[d.0].active = false;
        }
        links.retain(|l| !(l.conclusions[0] == weakened || below.contains(&l.conclusions[0])));
        let copy = PosId(nodes.len());
        nodes.push(nodes[host.0].clone());
        links.push(Link { kind: LinkKind::Weakening, conclusions: vec![host, weakened], premises: vec![copy] });
    })
}

/// Structures with up to `max_weak` weakenings and `max_contr` contractions,
/// fewest structural links first. Only variants whose linkable atoms are
/// balanced are returned.
pub(crate) fn structural_variants(skeleton: &ProofStructure, max_weak: usize, max_contr: usize) -> Vec<ProofStructure> {
    let forest = skeleton.forest();
    let atoms: Vec<PosId> = forest.atoms().to_vec();
    let mut weak_choices = Vec::new();
    for &h in &atoms {
        for p in forest.positions() {
            if !forest.is_ancestor(p.id, h) {
                weak_choices.push((h, p.id));
            }
        }
    }
    let mut out = Vec::new();
    for total in 0..=max_weak + max_contr {
        for c in 0..=total.min(max_contr) {
            let w = total - c;
            if w > max_weak {
                continue;
            }
            for contracted in multisets(&atoms, c) {
                for weakenings in combinations(&weak_choices, w) {
                    if !compatible(skeleton, &contracted, &weakenings) {
                        continue;
                    }
                    let mut ps = skeleton.clone();
                    for &a in &contracted {
                        ps = add_contraction(&ps, a);
                    }
                    for &(h, x) in &weakenings {
                        ps = add_weakening(&ps, h, x);
                    }
                    if balanced(&ps) {
                        out.push(ps);
                    }
                }
            }
        }
    }
    out
}

fn compatible(ps: &ProofStructure, contracted: &[PosId], weakenings: &[(PosId, PosId)]) -> bool {
    let forest = ps.forest();
    for (i, &(h, x)) in weakenings.iter().enumerate() {
        for &(h2, x2) in &weakenings[i + 1..] {
            let nested = forest.is_ancestor(x, x2) || forest.is_ancestor(x2, x);
            if h == h2 || nested || forest.is_ancestor(x, h2) || forest.is_ancestor(x2, h) {
                return false;
            }
        }
        if contracted.iter().any(|&a| a == h || forest.is_ancestor(x, a)) {
            return false;
        }
    }
    true
}

fn balanced(ps: &ProofStructure) -> bool {
    let mut count = std::collections::BTreeMap::new();
    for a in ps.linkable_atoms() {
        let n = ps.node(a);
        *count.entry(n.label.clone()).or_insert(0i64) += if n.sign == crate::logic::Sign::Pos { 1 } else { -1 };
    }
    count.values().all(|&v| v == 0)
}

fn multisets<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in multisets(&items[i..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

fn combinations<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}
