//! Correctness stacks per logic and the search for a proof net.

use serde::{Deserialize, Serialize};

use super::boundary::{nl_boundaries, nl_boundary_check};
use super::classical::{structural_variants, validate_structural_links};
use super::contraction::contract;
use super::geometry::{planarity_check, subnet_check};
use super::linking::enumerate_linkings;
use super::switching::dr_run;
use super::{build_skeleton, Failure, NetVerdict, ProofStructure};
use crate::error::{Error, Result};
use crate::logic::{LogicId, Sequent};
use crate::prover::DEFAULT_BUDGET;

/// Graph criterion used at the bottom of every stack.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Criterion {
    #[default]
    Switching,
    Contraction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetConfig {
    /// Maximum number of linkings examined.
    pub budget: u64,
    /// Restrict to non-crossing linkings; defaults to the logic's planarity.
    pub planar_only: Option<bool>,
    pub criterion: Criterion,
    pub max_weakenings: usize,
    pub max_contractions: usize,
}

impl Default for NetConfig {
    fn default() -> Self {
        NetConfig {
            budget: DEFAULT_BUDGET,
            planar_only: None,
            criterion: Criterion::Switching,
            max_weakenings: 2,
            max_contractions: 2,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetStats {
    pub linkings: u64,
    pub switchings: u64,
    pub contraction_steps: u64,
}

#[derive(Clone, Debug)]
pub struct NetSearch {
    pub net: Option<ProofStructure>,
    /// Verdict on the net found, or the most advanced failure otherwise.
    pub verdict: NetVerdict,
    pub stats: NetStats,
}

fn graph_check(ps: &ProofStructure, criterion: Criterion, stats: &mut NetStats) -> NetVerdict {
    match criterion {
        Criterion::Switching => {
            let (v, n) = dr_run(ps);
            stats.switchings += n;
            v
        }
        Criterion::Contraction => {
            let run = contract(ps);
            stats.contraction_steps += run.steps as u64;
            run.verdict
        }
    }
}

fn stack(ps: &ProofStructure, criterion: Criterion, stats: &mut NetStats) -> Result<NetVerdict> {
    let logic = ps.logic();
    if logic == LogicId::Classical {
        validate_structural_links(ps)?;
    }
    let v = graph_check(ps, criterion, stats);
    if !v.is_net || !logic.is_planar() {
        return Ok(v);
    }
    let v = planarity_check(ps)?;
    if !v.is_net || logic == LogicId::LambekLEps {
        return Ok(v);
    }
    let v = subnet_check(ps)?;
    if !v.is_net || logic != LogicId::Nl {
        return Ok(v);
    }
    Ok(nl_boundary_check(ps, &nl_boundaries(ps)?))
}

/// The full condition stack of the structure's logic: the graph criterion,
/// then planarity (L_eps, L, NL), subnets (L, NL) and boundaries (NL).
pub fn check_stack(ps: &ProofStructure, criterion: Criterion) -> Result<NetVerdict> {
    stack(ps, criterion, &mut NetStats::default())
}

fn stage(f: &Failure) -> u8 {
    match f {
        Failure::NoLinking => 0,
        Failure::Cycle { .. } | Failure::Disconnected { .. } | Failure::Irreducible { .. } => 1,
        Failure::NonPlanar { .. } => 2,
        Failure::Subnet { .. } => 3,
        Failure::Boundary { .. } => 4,
    }
}

pub fn find_proof_net(sequent: &Sequent) -> Result<NetSearch> {
    find_proof_net_with(sequent, &NetConfig::default())
}

/// Streams linkings and returns the first structure passing the stack.
/// Classical search also inserts structural links within the configured
/// bounds and reports `ResourceLimit` when no net lies within them.
pub fn find_proof_net_with(sequent: &Sequent, config: &NetConfig) -> Result<NetSearch> {
    let logic = sequent.logic();
    let skeleton = build_skeleton(sequent);
    let planar = config.planar_only.unwrap_or(logic.is_planar());
    let candidates = if logic == LogicId::Classical {
        structural_variants(&skeleton, config.max_weakenings, config.max_contractions)
    } else {
        vec![skeleton.clone()]
    };
    let mut stats = NetStats::default();
    let mut best: Option<Failure> = None;
    for base in &candidates {
        for ps in enumerate_linkings(base, planar) {
            stats.linkings += 1;
            if stats.linkings > config.budget {
                return Err(Error::ResourceLimit { what: "proof-net linkings", limit: config.budget });
            }
            let v = stack(&ps, config.criterion, &mut stats)?;
            match v.failure {
                None => return Ok(NetSearch { net: Some(ps), verdict: v, stats }),
                Some(f) => {
                    if best.as_ref().is_none_or(|b| stage(&f) > stage(b)) {
                        best = Some(f);
                    }
                }
            }
        }
    }
    if logic == LogicId::Classical {
        return Err(Error::ResourceLimit {
            what: "classical structural links per candidate",
            limit: (config.max_weakenings + config.max_contractions) as u64,
        });
    }
    if best.is_none() && planar && logic.is_planar() {
        // say why no planar linking exists rather than just that none does
        if let Some(ps) = enumerate_linkings(&skeleton, false).next() {
            best = planarity_check(&ps)?.failure;
        }
    }
    let failure = best.unwrap_or(Failure::NoLinking);
    Ok(NetSearch { net: None, verdict: NetVerdict::fail(failure), stats })
}
