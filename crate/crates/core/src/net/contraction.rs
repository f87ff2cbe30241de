//! Danos contraction: a structure is a net iff these rules shrink it to a
//! single vertex.
//!
//! 1. a times edge between distinct vertices is contracted, merging them;
//! 2. the two par edges of one link, once both join the same two distinct
//!    vertices, become a single times edge.

use std::fmt;

use super::switching::net_graph;
use super::{Failure, NetVerdict, ProofStructure};

pub type VertexId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum EdgeKind {
    Times,
    Par(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Edge {
    a: VertexId,
    b: VertexId,
    kind: EdgeKind,
}

impl Edge {
    fn joins(&self, u: VertexId, v: VertexId) -> bool {
        (self.a == u && self.b == v) || (self.a == v && self.b == u)
    }
}

/// A graph under contraction. Merged vertices keep the name of the vertex
/// that absorbed them.
#[derive(Clone, Debug, Default)]
pub struct ContractionGraph {
    names: Vec<String>,
    alive: Vec<bool>,
    edges: Vec<Edge>,
    par_links: usize,
    steps: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContractError {
    NoTimesEdge(VertexId, VertexId),
    NoParPair(VertexId, VertexId),
}

impl fmt::Display for ContractError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContractError::NoTimesEdge(u, v) => write!(f, "no times edge joins {u} and {v}"),
            ContractError::NoParPair(u, v) => write!(f, "no par link has both edges between {u} and {v}"),
        }
    }
}

impl std::error::Error for ContractError {}

impl ContractionGraph {
    pub fn new() -> ContractionGraph {
        ContractionGraph::default()
    }

    pub fn add_vertex(&mut self, name: impl Into<String>) -> VertexId {
        self.names.push(name.into());
        self.alive.push(true);
        self.names.len() - 1
    }

    pub fn add_times(&mut self, a: VertexId, b: VertexId) {
        self.edges.push(Edge { a, b, kind: EdgeKind::Times });
    }

    /// Adds the premise edges of one par link.
    pub fn add_par_link(&mut self, edges: &[(VertexId, VertexId)]) {
        let link = self.par_links;
        self.par_links += 1;
        for &(a, b) in edges {
            self.edges.push(Edge { a, b, kind: EdgeKind::Par(link) });
        }
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.names.iter().position(|n| n == name).filter(|&i| self.alive[i])
    }

    pub fn vertex_count(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Rule applications so far.
    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn survivors(&self) -> Vec<&str> {
        self.names.iter().zip(&self.alive).filter(|(_, &a)| a).map(|(n, _)| n.as_str()).collect()
    }

    pub fn is_single_vertex(&self) -> bool {
        self.vertex_count() == 1 && self.edges.is_empty()
    }

    /// Rule 1: `keep` absorbs `absorb` along a times edge joining them.
    pub fn contract_times(&mut self, keep: VertexId, absorb: VertexId) -> Result<(), ContractError> {
        let i = self
            .edges
            .iter()
            .position(|e| e.kind == EdgeKind::Times && keep != absorb && e.joins(keep, absorb))
            .ok_or(ContractError::NoTimesEdge(keep, absorb))?;
        self.edges.swap_remove(i);
        for e in &mut self.edges {
            if e.a == absorb {
                e.a = keep;
            }
            if e.b == absorb {
                e.b = keep;
            }
        }
        self.alive[absorb] = false;
        self.steps += 1;
        Ok(())
    }

    /// Rule 2: both edges of a par link join `u` and `v`.
    pub fn merge_par(&mut self, u: VertexId, v: VertexId) -> Result<(), ContractError> {
        let link = self.mergeable().find(|&(_, a, b)| (a, b) == (u, v) || (a, b) == (v, u));
        let (link, _, _) = link.ok_or(ContractError::NoParPair(u, v))?;
        self.edges.retain(|e| e.kind != EdgeKind::Par(link));
        self.add_times(u, v);
        self.steps += 1;
        Ok(())
    }

    /// Par links whose edges all join the same two distinct vertices.
    fn mergeable(&self) -> impl Iterator<Item = (usize, VertexId, VertexId)> + '_ {
        (0..self.par_links).filter_map(move |link| {
            let mut edges = self.edges.iter().filter(|e| e.kind == EdgeKind::Par(link));
            let first = edges.next()?;
            let (u, v) = (first.a, first.b);
            let mut count = 1;
            for e in edges {
                if !e.joins(u, v) {
                    return None;
                }
                count += 1;
            }
            (u != v && count >= 2).then_some((link, u, v))
        })
    }

    /// Applies the rules until neither fires; rule 1 takes precedence.
    pub fn reduce(&mut self) {
        loop {
            let times = self.edges.iter().find(|e| e.kind == EdgeKind::Times && e.a != e.b).copied();
            if let Some(e) = times {
                self.contract_times(e.a, e.b).expect("edge exists");
                continue;
            }
            let pair = self.mergeable().next();
            match pair {
                Some((_, u, v)) => self.merge_par(u, v).expect("pair exists"),
                None => return,
            }
        }
    }
}

/// Outcome of contracting a structure's graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionRun {
    pub verdict: NetVerdict,
    pub steps: usize,
    pub edges: usize,
}

pub fn contract(ps: &ProofStructure) -> ContractionRun {
    let g = net_graph(ps);
    let mut cg = ContractionGraph::new();
    for v in 0..g.vertices {
        cg.add_vertex(v.to_string());
    }
    for &(a, b) in &g.times {
        cg.add_times(a, b);
    }
    for group in &g.par {
        cg.add_par_link(group);
    }
    let edges = cg.edge_count();
    cg.reduce();
    let verdict = if cg.is_single_vertex() {
        NetVerdict::pass()
    } else {
        NetVerdict::fail(Failure::Irreducible { vertices: cg.vertex_count(), edges: cg.edge_count() })
    };
    ContractionRun { verdict, steps: cg.steps(), edges }
}

pub fn contraction_check(ps: &ProofStructure) -> NetVerdict {
    contract(ps).verdict
}
