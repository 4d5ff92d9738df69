//! Detour machinery shared by every algorithm: the split graph, detour
//! candidates, the candidate list and the successor sweep that turns the
//! list into per-edge replacement distances.
//!
//! Candidate positions are 1-based path positions (`v_1 = s`); a candidate
//! `(j, k, d)` covers path edges `j..k-1`, edge `p` being `(v_p, v_{p+1})`.
//! Replacement vectors are indexed from 0.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Path, PrefixTable};
use crate::{Dist, Graph};

/// `G'`: the input graph with the path edges removed and every path node
/// `v_i` split into an in-copy (incoming edges only) and an out-copy
/// (outgoing edges only).
///
/// Node ids `0..n` are kept: a path node's own id becomes its in-copy and
/// the out-copy of 0-based position `i` is `n + i`.
#[derive(Debug, Clone)]
pub struct SplitGraph {
    pub graph: Graph,
    pub in_of: Vec<usize>,
    pub out_of: Vec<usize>,
    pub off_path: Vec<usize>,
}

pub fn build_split_graph(g: &Graph, p: &Path) -> SplitGraph {
    let n = g.n();
    let pos = p.positions(n);
    let k = p.len();
    let mut adj = vec![Vec::new(); n + k];
    for (u, v, w) in g.edges() {
        if let (Some(i), Some(j)) = (pos[u], pos[v]) {
            if j == i + 1 {
                continue;
            }
        }
        let from = pos[u].map_or(u, |i| n + i);
        adj[from].push((v, w));
    }
    let graph = Graph::from_adjacency(adj);
    let off_path = (0..n).filter(|&v| pos[v].is_none()).collect();
    SplitGraph {
        graph,
        in_of: p.nodes().to_vec(),
        out_of: (n..n + k).collect(),
        off_path,
    }
}

/// A candidate replacement length `d` for every path edge in `j..k-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DetourCandidate {
    pub j: usize,
    pub k: usize,
    pub d: i64,
}

impl DetourCandidate {
    pub fn new(j: usize, k: usize, d: i64) -> DetourCandidate {
        assert!(1 <= j && j < k, "candidate positions must satisfy 1 <= j < k, got ({j}, {k})");
        DetourCandidate { j, k, d }
    }

    /// Whether the candidate covers 1-based edge `p`.
    pub fn covers(&self, p: usize) -> bool {
        self.j <= p && p < self.k
    }
}

/// Full replacement length of `s ~> v_j`, a detour of length `detour_len`,
/// then `v_k ~> t`.
pub fn candidate_from_detour(
    j: usize,
    k: usize,
    detour_len: i64,
    pt: &PrefixTable,
) -> DetourCandidate {
    DetourCandidate::new(j, k, pt.from_start(j - 1) + detour_len + pt.to_end(k - 1))
}

/// Append-only list of candidates with an optional size budget.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CandidateList {
    items: Vec<DetourCandidate>,
    budget: Option<usize>,
}

impl CandidateList {
    pub fn new() -> CandidateList {
        CandidateList::default()
    }

    /// A list that panics once it would grow beyond `budget` items.
    pub fn with_budget(budget: usize) -> CandidateList {
        CandidateList { items: Vec::new(), budget: Some(budget) }
    }

    pub fn push(&mut self, c: DetourCandidate) {
        if let Some(budget) = self.budget {
            assert!(
                self.items.len() < budget,
                "candidate list exceeded its budget of {budget}"
            );
        }
        self.items.push(c);
    }

    /// Moves every candidate of `other` into `self`.
    pub fn append(&mut self, other: &mut CandidateList) {
        for c in other.items.drain(..) {
            self.push(c);
        }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, DetourCandidate> {
        self.items.iter()
    }

    pub fn as_slice(&self) -> &[DetourCandidate] {
        &self.items
    }
}

impl FromIterator<DetourCandidate> for CandidateList {
    fn from_iter<I: IntoIterator<Item = DetourCandidate>>(iter: I) -> Self {
        CandidateList { items: iter.into_iter().collect(), budget: None }
    }
}

impl Extend<DetourCandidate> for CandidateList {
    fn extend<I: IntoIterator<Item = DetourCandidate>>(&mut self, iter: I) {
        for c in iter {
            self.push(c);
        }
    }
}

/// Replacement distance of every path edge, indexed from 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReplacementResult {
    pub dist: Vec<Dist>,
}

impl ReplacementResult {
    pub fn all_infinite(edges: usize) -> ReplacementResult {
        ReplacementResult { dist: vec![Dist::INF; edges] }
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    pub fn as_slice(&self) -> &[Dist] {
        &self.dist
    }
}

/// Resolves a candidate list into replacement distances.
///
/// Candidates are taken in nondecreasing order of `d`; each one claims every
/// still-unassigned edge it covers, found by successor queries on an ordered
/// set. `path_len` is the number of nodes on the path.
pub fn sweep_assign(l: &CandidateList, path_len: usize) -> ReplacementResult {
    let edges = path_len.saturating_sub(1);
    let mut result = ReplacementResult::all_infinite(edges);
    let mut open: BTreeSet<usize> = (1..=edges).collect();
    let mut order: Vec<&DetourCandidate> = l.iter().collect();
    order.sort_by_key(|c| c.d);
    for c in order {
        debug_assert!(c.k <= path_len, "candidate beyond the path end");
        while let Some(&p) = open.range(c.j..c.k).next() {
            result.dist[p - 1] = Dist::finite(c.d);
            open.remove(&p);
        }
        if open.is_empty() {
            break;
        }
    }
    result
}

/// Reference resolution by a double loop over candidates and covered edges.
pub fn direct_assign(l: &CandidateList, path_len: usize) -> ReplacementResult {
    let mut result = ReplacementResult::all_infinite(path_len.saturating_sub(1));
    for c in l.iter() {
        for p in c.j..c.k {
            let slot = &mut result.dist[p - 1];
            *slot = (*slot).min(Dist::finite(c.d));
        }
    }
    result
}
