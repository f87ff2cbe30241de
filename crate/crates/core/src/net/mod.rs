//! Proof structures and the criteria that make them proof nets.
//!
//! A structure is the decomposition forest of a sequent with one link per
//! compound position, plus axiom links pairing dual atoms. Classical
//! structures may additionally carry Contraction and Weakening links, whose
//! premises are fresh copies appended after the forest positions.

mod boundary;
mod classical;
mod contraction;
mod format;
mod geometry;
mod linking;
mod search;
mod switching;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::logic::{decompose, Class, DecompositionForest, Formula, LogicId, PosId, Sequent, Sign};

pub use boundary::{boundary_crossing_check, nl_boundaries, nl_boundary_check, Boundary};
pub use classical::{check_classical_structure, validate_structural_links};
pub use contraction::{contract, contraction_check, ContractError, ContractionGraph, ContractionRun, VertexId};
pub use format::{parse_structure_file, to_dot, to_structure_file};
pub use geometry::{planarity_check, subnet_check};
pub use linking::{enumerate_linkings, Linkings};
pub use search::{check_stack, find_proof_net, find_proof_net_with, Criterion, NetConfig, NetSearch, NetStats};
pub use switching::{dr_check, switching_count};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LinkKind {
    Times,
    Par,
    Unary,
    Contraction,
    Weakening,
}

impl LinkKind {
    /// Par-kind links lose all but one premise edge under a switching.
    pub fn is_par(self) -> bool {
        matches!(self, LinkKind::Par | LinkKind::Contraction)
    }

    pub fn name(self) -> &'static str {
        match self {
            LinkKind::Times => "times",
            LinkKind::Par => "par",
            LinkKind::Unary => "unary",
            LinkKind::Contraction => "contraction",
            LinkKind::Weakening => "weakening",
        }
    }
}

/// A decomposition or structural link. Weakening links conclude the host and
/// the weakened formula from a single premise copy of the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Link {
    pub kind: LinkKind,
    pub conclusions: Vec<PosId>,
    pub premises: Vec<PosId>,
}

/// A vertex of a structure. Forest positions keep their ids; copies made by
/// structural links follow them. Inactive nodes lie under a weakened formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub label: Formula,
    pub sign: Sign,
    pub active: bool,
}

impl Node {
    pub fn is_atom(&self) -> bool {
        self.label.is_atom()
    }

    pub fn signed(&self) -> String {
        match &self.label {
            Formula::Atom(name) => format!("{name}{}", self.sign),
            other => format!("({other}){}", self.sign),
        }
    }
}

#[derive(Debug)]
struct Frame {
    sequent: Sequent,
    forest: DecompositionForest,
    nodes: Vec<Node>,
    links: Vec<Link>,
}

/// Links plus an axiom linking over a sequent's decomposition. The link
/// frame is shared between all linkings of one skeleton.
#[derive(Clone, Debug)]
pub struct ProofStructure {
    frame: Arc<Frame>,
    axioms: Vec<(PosId, PosId)>,
}

/// One decomposition link per compound position and no axiom links.
pub fn build_skeleton(sequent: &Sequent) -> ProofStructure {
    let forest = decompose(sequent);
    let nodes =
        forest.positions().iter().map(|p| Node { label: p.label.clone(), sign: p.sign, active: true }).collect();
    let links = forest
        .positions()
        .iter()
        .filter(|p| !p.is_atom())
        .map(|p| Link {
            kind: match p.class {
                Class::Alpha => LinkKind::Par,
                Class::Beta => LinkKind::Times,
                _ => LinkKind::Unary,
            },
            conclusions: vec![p.id],
            premises: p.children.clone(),
        })
        .collect();
    let frame = Frame { sequent: sequent.clone(), forest, nodes, links };
    ProofStructure { frame: Arc::new(frame), axioms: Vec::new() }
}

impl ProofStructure {
    pub fn sequent(&self) -> &Sequent {
        &self.frame.sequent
    }

    pub fn forest(&self) -> &DecompositionForest {
        &self.frame.forest
    }

    pub fn logic(&self) -> LogicId {
        self.frame.sequent.logic()
    }

    pub fn nodes(&self) -> &[Node] {
        &self.frame.nodes
    }

    pub fn node(&self, id: PosId) -> &Node {
        &self.frame.nodes[id.0]
    }

    pub fn links(&self) -> &[Link] {
        &self.frame.links
    }

    /// Axiom links as (positive, negative) pairs, sorted.
    pub fn axioms(&self) -> &[(PosId, PosId)] {
        &self.axioms
    }

    pub fn partner(&self, atom: PosId) -> Option<PosId> {
        self.axioms.iter().find_map(|&(p, n)| {
            if p == atom {
                Some(n)
            } else if n == atom {
                Some(p)
            } else {
                None
            }
        })
    }

    pub fn active(&self) -> impl Iterator<Item = PosId> + '_ {
        self.frame.nodes.iter().enumerate().filter(|(_, n)| n.active).map(|(i, _)| PosId(i))
    }

    /// Atoms that must be closed by an axiom link: active atoms that do not
    /// already conclude a structural link.
    pub fn linkable_atoms(&self) -> Vec<PosId> {
        let structural: Vec<PosId> = self
            .links()
            .iter()
            .filter(|l| matches!(l.kind, LinkKind::Contraction | LinkKind::Weakening))
            .flat_map(|l| l.conclusions.iter().copied())
            .collect();
        self.active().filter(|&id| self.node(id).is_atom() && !structural.contains(&id)).collect()
    }

    /// Graph size: active nodes plus one auxiliary vertex per Weakening link.
    pub fn vertex_count(&self) -> usize {
        let weak = self.links().iter().filter(|l| l.kind == LinkKind::Weakening).count();
        self.active().count() + weak
    }

    pub fn edge_count(&self) -> usize {
        let link_edges: usize = self
            .links()
            .iter()
            .map(|l| match l.kind {
                LinkKind::Weakening => 3,
                _ => l.premises.len(),
            })
            .sum();
        link_edges + self.axioms.len()
    }

    /// Replaces the axiom links. Each pair must join active dual atoms.
    pub fn with_axioms(&self, pairs: impl IntoIterator<Item = (PosId, PosId)>) -> Result<ProofStructure> {
        let mut axioms = Vec::new();
        for (a, b) in pairs {
            let (na, nb) = match (self.frame.nodes.get(a.0), self.frame.nodes.get(b.0)) {
                (Some(x), Some(y)) => (x, y),
                _ => return Err(Error::MalformedStructure(format!("axiom link {a}-{b} names an unknown node"))),
            };
            if !(na.active && nb.active && na.is_atom() && na.label == nb.label && na.sign != nb.sign) {
                return Err(Error::MalformedStructure(format!(
                    "axiom link {a}-{b} does not join dual atoms ({} and {})",
                    na.signed(),
                    nb.signed()
                )));
            }
            axioms.push(if na.sign == Sign::Pos { (a, b) } else { (b, a) });
        }
        axioms.sort();
        Ok(ProofStructure { frame: Arc::clone(&self.frame), axioms })
    }

    pub(crate) fn with_axioms_unchecked(&self, mut axioms: Vec<(PosId, PosId)>) -> ProofStructure {
        axioms.sort();
        ProofStructure { frame: Arc::clone(&self.frame), axioms }
    }

    /// The proof-structure conditions: every active node concludes exactly
    /// one link (axiom links included) and is the premise of at most one.
    pub fn check_well_formed(&self) -> Result<()> {
        let n = self.frame.nodes.len();
        let mut concluded = vec![0usize; n];
        let mut premised = vec![0usize; n];
        for l in self.links() {
            for c in &l.conclusions {
                concluded[c.0] += 1;
            }
            for p in &l.premises {
                premised[p.0] += 1;
            }
        }
        for &(p, q) in &self.axioms {
            concluded[p.0] += 1;
            concluded[q.0] += 1;
        }
        for id in self.active() {
            let label = self.node(id).signed();
            if concluded[id.0] != 1 {
                return Err(Error::MalformedStructure(format!("{label} at {id} concludes {} links", concluded[id.0])));
            }
            if premised[id.0] > 1 {
                return Err(Error::MalformedStructure(format!(
                    "{label} at {id} is the premise of {} links",
                    premised[id.0]
                )));
            }
        }
        Ok(())
    }

    pub fn render(&self, id: PosId) -> String {
        self.node(id).signed()
    }
}

/// Why a structure is not a proof net.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Failure {
    /// A switched graph has a cycle. `switching` holds the kept premise
    /// index of every par-kind link, in link order.
    Cycle {
        switching: Vec<usize>,
    },
    Disconnected {
        switching: Vec<usize>,
    },
    /// Contraction stopped with more than one vertex.
    Irreducible {
        vertices: usize,
        edges: usize,
    },
    NonPlanar {
        pairs: [(PosId, PosId); 2],
    },
    Subnet {
        members: Vec<PosId>,
    },
    Boundary {
        owner: String,
        atom: PosId,
    },
    /// No axiom linking exists at all.
    NoLinking,
}

impl Failure {
    pub fn name(&self) -> &'static str {
        match self {
            Failure::Cycle { .. } => "cycle",
            Failure::Disconnected { .. } => "disconnected",
            Failure::Irreducible { .. } => "irreducible",
            Failure::NonPlanar { .. } => "nonplanar",
            Failure::Subnet { .. } => "subnet",
            Failure::Boundary { .. } => "boundary",
            Failure::NoLinking => "nolinking",
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Cycle { switching } => write!(f, "cycle under switching {switching:?}"),
            Failure::Disconnected { switching } => write!(f, "disconnected under switching {switching:?}"),
            Failure::Irreducible { vertices, edges } => {
                write!(f, "contraction stops at {vertices} vertices and {edges} edges")
            }
            Failure::NonPlanar { pairs: [(a, b), (c, d)] } => {
                write!(f, "axiom links {a}-{b} and {c}-{d} cross")
            }
            Failure::Subnet { members } => write!(f, "subnet {members:?} has a single conclusion"),
            Failure::Boundary { owner, atom } => {
                write!(f, "positive atom {atom} leaves the boundary of {owner}")
            }
            Failure::NoLinking => write!(f, "no axiom linking exists"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetVerdict {
    pub is_net: bool,
    pub failure: Option<Failure>,
}

impl NetVerdict {
    pub fn pass() -> NetVerdict {
        NetVerdict { is_net: true, failure: None }
    }

    pub fn fail(failure: Failure) -> NetVerdict {
        NetVerdict { is_net: false, failure: Some(failure) }
    }
}
