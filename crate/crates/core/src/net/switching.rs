//! The Danos-Regnier switching criterion.

use super::{Failure, LinkKind, NetVerdict, ProofStructure};

/// Undirected multigraph of a structure. Par-kind links keep their premise
/// edges grouped so a switching can pick one per group.
#[derive(Clone, Debug, Default)]
pub(crate) struct NetGraph {
    pub vertices: usize,
    pub times: Vec<(usize, usize)>,
    pub par: Vec<Vec<(usize, usize)>>,
}

pub(crate) fn net_graph(ps: &ProofStructure) -> NetGraph {
    let mut index = vec![usize::MAX; ps.nodes().len()];
    let mut vertices = 0;
    for id in ps.active() {
        index[id.0] = vertices;
        vertices += 1;
    }
    let mut g = NetGraph { vertices, ..NetGraph::default() };
    for link in ps.links() {
        match link.kind {
            LinkKind::Weakening => {
                let aux = g.vertices;
                g.vertices += 1;
                for id in link.conclusions.iter().chain(&link.premises) {
                    g.times.push((aux, index[id.0]));
                }
            }
            kind => {
                let c = index[link.conclusions[0].0];
                let edges = link.premises.iter().map(|p| (c, index[p.0]));
                if kind.is_par() {
                    g.par.push(edges.collect());
                } else {
                    g.times.extend(edges);
                }
            }
        }
    }
    for &(p, n) in ps.axioms() {
        g.times.push((index[p.0], index[n.0]));
    }
    g
}

#[derive(Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    pub components: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect(), components: n }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// False if `a` and `b` were already connected.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        self.components -= 1;
        true
    }
}

/// Number of switchings `dr_check` inspects for a structure.
pub fn switching_count(ps: &ProofStructure) -> u128 {
    net_graph(ps).par.iter().map(|g| g.len() as u128).product()
}

/// Every switching must leave a connected acyclic graph. Switchings are
/// visited lexicographically, first par link most significant.
pub fn dr_check(ps: &ProofStructure) -> NetVerdict {
    dr_run(ps).0
}

/// `dr_check` plus the number of switchings inspected.
pub(crate) fn dr_run(ps: &ProofStructure) -> (NetVerdict, u64) {
    let g = net_graph(ps);
    let mut seen = 0u64;
    let mut base = UnionFind::new(g.vertices);
    let mut times_cycle = false;
    for &(a, b) in &g.times {
        times_cycle |= !base.union(a, b);
    }
    let mut switching = vec![0usize; g.par.len()];
    loop {
        seen += 1;
        if times_cycle {
            return (NetVerdict::fail(Failure::Cycle { switching }), seen);
        }
        let mut uf = base.clone();
        let acyclic = switching.iter().zip(&g.par).all(|(&k, group)| {
            let (a, b) = group[k];
            uf.union(a, b)
        });
        if !acyclic {
            return (NetVerdict::fail(Failure::Cycle { switching }), seen);
        }
        if uf.components != 1 {
            return (NetVerdict::fail(Failure::Disconnected { switching }), seen);
        }
        // odometer, last link least significant
        let mut i = switching.len();
        loop {
            if i == 0 {
                return (NetVerdict::pass(), seen);
            }
            i -= 1;
            switching[i] += 1;
            if switching[i] < g.par[i].len() {
                break;
            }
            switching[i] = 0;
        }
    }
}
