//! Order-sensitive conditions for the Lambek systems.

use super::{Failure, NetVerdict, ProofStructure};
use crate::error::{Error, Result};
use crate::logic::{LogicId, PosId};

/// No two axiom links interleave in leaf order.
pub fn planarity_check(ps: &ProofStructure) -> Result<NetVerdict> {
    if !ps.logic().is_planar() {
        return Err(Error::UnsupportedLogic { logic: ps.logic(), operation: "planarity checking" });
    }
    // ids are pre-order, so they already follow the leaf order
    let spans: Vec<(PosId, PosId)> = ps.axioms().iter().map(|&(p, n)| (p.min(n), p.max(n))).collect();
    for i in 0..spans.len() {
        for j in i + 1..spans.len() {
            let ((a, b), (c, d)) = (spans[i], spans[j]);
            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                let pairs = [ps.axioms()[i], ps.axioms()[j]];
                return Ok(NetVerdict::fail(Failure::NonPlanar { pairs }));
            }
        }
    }
    Ok(NetVerdict::pass())
}

/// Every subnet must have at least two conclusions.
///
/// A subnet with a single conclusion `p` contains everything above `p` (it
/// is closed under premises) and nothing else, so it is exactly the subtree
/// of `p`; an atom cannot be one since its axiom partner lies elsewhere.
/// Hence the condition fails iff some compound position has all atoms of
/// its subtree linked among themselves. The smallest such subtree is the
/// witness.
pub fn subnet_check(ps: &ProofStructure) -> Result<NetVerdict> {
    if !matches!(ps.logic(), LogicId::LambekL | LogicId::Nl) {
        return Err(Error::UnsupportedLogic { logic: ps.logic(), operation: "the subnet condition" });
    }
    let forest = ps.forest();
    let mut witness: Option<(usize, PosId)> = None;
    for pos in forest.positions().iter().filter(|p| !p.is_atom()) {
        let end = forest.subtree_end(pos.id);
        let inside = |a: PosId| pos.id.0 <= a.0 && a.0 < end;
        let closed = forest.subtree_atoms(pos.id).into_iter().all(|a| ps.partner(a).is_some_and(inside));
        let size = end - pos.id.0;
        if closed && witness.is_none_or(|(s, _)| size < s) {
            witness = Some((size, pos.id));
        }
    }
    Ok(match witness {
        Some((size, root)) => {
            let members = (root.0..root.0 + size).map(PosId).collect();
            NetVerdict::fail(Failure::Subnet { members })
        }
        None => NetVerdict::pass(),
    })
}
