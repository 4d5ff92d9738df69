//! Directed weighted graphs, single-source shortest paths and the shortest
//! `s`-`t` path with its prefix-length table.

use alloc::collections::{BinaryHeap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::{Dist, GraphError, RpError};

/// A directed graph on nodes `0..n` with integer weights in `[-M, M]`.
///
/// Self-loops are rejected and parallel edges are merged keeping the
/// smaller weight, so each ordered pair carries at most one weight.
/// Adjacency lists are sorted by target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<(usize, i64)>>,
    weight_bound: i64,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from `(u, v, w)` triples.
    pub fn from_edges<I>(n: usize, weight_bound: i64, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        if weight_bound <= 0 {
            return Err(GraphError::NonPositiveBound(weight_bound));
        }
        // two bits of slack over the largest possible path length
        if (n.max(1) as i128) * (weight_bound as i128) > (Dist::FINITE_LIMIT >> 2) as i128 {
            return Err(GraphError::Overflow { n, bound: weight_bound });
        }
        let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
        for (u, v, w) in edges {
            for id in [u, v] {
                if id >= n {
                    return Err(GraphError::IdOutOfRange { id, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if w < -weight_bound || w > weight_bound {
                return Err(GraphError::WeightOutOfRange { u, v, w, bound: weight_bound });
            }
            adj[u].push((v, w));
        }
        Ok(Self::normalize(adj, weight_bound))
    }

    /// Builds a derived graph whose bound is the largest absolute weight.
    /// Self-loops are dropped instead of rejected.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<(usize, i64)>>) -> Graph {
        let mut bound = 1;
        for list in adj.iter_mut().enumerate() {
            let (u, list) = list;
            list.retain(|&(v, _)| v != u);
            for &(_, w) in list.iter() {
                bound = bound.max(w.abs());
            }
        }
        Self::normalize(adj, bound)
    }

    fn normalize(mut adj: Vec<Vec<(usize, i64)>>, weight_bound: i64) -> Graph {
        let mut edge_count = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            // sorted by (target, weight): the first of each run is the minimum
            list.dedup_by_key(|e| e.0);
            edge_count += list.len();
        }
        Graph { adj, weight_bound, edge_count }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn weight_bound(&self) -> i64 {
        self.weight_bound
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn out_edges(&self, u: usize) -> &[(usize, i64)] {
        &self.adj[u]
    }

    /// All edges as `(u, v, w)`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&(v, w)| (u, v, w)))
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<i64> {
        let list = self.adj.get(u)?;
        list.binary_search_by_key(&v, |e| e.0).ok().map(|i| list[i].1)
    }

    pub fn has_negative_weight(&self) -> bool {
        self.edges().any(|(_, _, w)| w < 0)
    }

    /// The graph with every edge reversed.
    pub fn reversed(&self) -> Graph {
        let mut adj = vec![Vec::new(); self.n()];
        for (u, v, w) in self.edges() {
            adj[v].push((u, w));
        }
        Self::normalize(adj, self.weight_bound)
    }
}

/// Distances from one source plus a shortest-path tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceVector {
    pub source: usize,
    pub dist: Vec<Dist>,
    pub parent: Vec<Option<usize>>,
}

impl DistanceVector {
    /// Node sequence from the source to `v`, or `None` when unreachable.
    pub fn path_to(&self, v: usize) -> Option<Vec<usize>> {
        if self.dist[v].is_inf() {
            return None;
        }
        let mut nodes = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            nodes.push(p);
            cur = p;
        }
        nodes.reverse();
        Some(nodes)
    }
}

/// Single-source shortest paths.
///
/// Dijkstra when every weight is nonnegative, round-based Bellman-Ford
/// otherwise. The parent of a node is the smallest-id predecessor among
/// those lying on a fewest-hop shortest path, so both methods return the
/// same tree.
pub fn sssp(g: &Graph, source: usize) -> Result<DistanceVector, RpError> {
    sssp_without(g, source, None)
}

/// [`sssp`] on `g` with the edge `skip` treated as absent.
pub(crate) fn sssp_without(
    g: &Graph,
    source: usize,
    skip: Option<(usize, usize)>,
) -> Result<DistanceVector, RpError> {
    if source >= g.n() {
        return Err(RpError::NodeOutOfRange(source));
    }
    let dist = if g.has_negative_weight() {
        bellman_ford(g, source, skip)?
    } else {
        dijkstra(g, source, skip)
    };
    let parent = tight_tree(g, source, &dist, skip);
    Ok(DistanceVector { source, dist, parent })
}

fn edge_allowed(skip: Option<(usize, usize)>, u: usize, v: usize) -> bool {
    skip != Some((u, v))
}

fn dijkstra(g: &Graph, source: usize, skip: Option<(usize, usize)>) -> Vec<Dist> {
    let mut dist = vec![Dist::INF; g.n()];
    let mut heap = BinaryHeap::new();
    dist[source] = Dist::ZERO;
    heap.push(Reverse((0i64, source)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if Dist::finite(d) > dist[u] {
            continue;
        }
        for &(v, w) in g.out_edges(u) {
            if !edge_allowed(skip, u, v) {
                continue;
            }
            let nd = d + w;
            if Dist::finite(nd) < dist[v] {
                dist[v] = Dist::finite(nd);
                heap.push(Reverse((nd, v)));
            }
        }
    }
    dist
}

fn bellman_ford(
    g: &Graph,
    source: usize,
    skip: Option<(usize, usize)>,
) -> Result<Vec<Dist>, RpError> {
    let n = g.n();
    let mut dist = vec![Dist::INF; n];
    dist[source] = Dist::ZERO;
    let mut active = vec![source];
    let mut queued = vec![false; n];
    // after round r every distance realised by a walk of <= r edges is final
    for _round in 0..n {
        if active.is_empty() {
            return Ok(dist);
        }
        let mut next = Vec::new();
        for &u in &active {
            let du = dist[u];
            for &(v, w) in g.out_edges(u) {
                if !edge_allowed(skip, u, v) {
                    continue;
                }
                let nd = du + w;
                if nd < dist[v] {
                    dist[v] = nd;
                    if !queued[v] {
                        queued[v] = true;
                        next.push(v);
                    }
                }
            }
        }
        for &v in &next {
            queued[v] = false;
        }
        next.sort_unstable();
        active = next;
    }
    if active.is_empty() {
        Ok(dist)
    } else {
        Err(RpError::NegativeCycle)
    }
}

/// Fewest-hop shortest-path tree over tight edges, smallest parent id first.
fn tight_tree(
    g: &Graph,
    source: usize,
    dist: &[Dist],
    skip: Option<(usize, usize)>,
) -> Vec<Option<usize>> {
    let n = g.n();
    let tight = |u: usize, v: usize, w: i64| {
        edge_allowed(skip, u, v) && dist[u].is_finite() && dist[u] + w == dist[v]
    };
    let mut hops = vec![usize::MAX; n];
    hops[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &(v, w) in g.out_edges(u) {
            if hops[v] == usize::MAX && tight(u, v, w) {
                hops[v] = hops[u] + 1;
                queue.push_back(v);
            }
        }
    }
    let mut parent = vec![None; n];
    for (u, v, w) in g.edges() {
        if v != source
            && parent[v].is_none()
            && hops[u] != usize::MAX
            && hops[v] == hops[u] + 1
            && tight(u, v, w)
        {
            parent[v] = Some(u);
        }
    }
    parent
}

/// A simple path together with its edge weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    nodes: Vec<usize>,
    weights: Vec<i64>,
    total_length: i64,
}

impl Path {
    /// Validates `nodes` as a simple path of `g`.
    pub fn from_nodes(g: &Graph, nodes: Vec<usize>) -> Option<Path> {
        if nodes.is_empty() || nodes.iter().any(|&v| v >= g.n()) {
            return None;
        }
        let mut seen = vec![false; g.n()];
        for &v in &nodes {
            if core::mem::replace(&mut seen[v], true) {
                return None;
            }
        }
        let weights = nodes
            .windows(2)
            .map(|e| g.weight(e[0], e[1]))
            .collect::<Option<Vec<_>>>()?;
        let total_length = weights.iter().sum();
        Some(Path { nodes, weights, total_length })
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    /// Weight of edge `i`, i.e. `(nodes[i], nodes[i + 1])`.
    pub fn edge_weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn total_length(&self) -> i64 {
        self.total_length
    }

    /// Number of nodes on the path.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn source(&self) -> usize {
        self.nodes[0]
    }

    pub fn target(&self) -> usize {
        self.nodes[self.nodes.len() - 1]
    }

    /// Position of every node on the path, `None` for off-path nodes.
    pub fn positions(&self, n: usize) -> Vec<Option<usize>> {
        let mut pos = vec![None; n];
        for (i, &v) in self.nodes.iter().enumerate() {
            pos[v] = Some(i);
        }
        pos
    }
}

/// The shortest `s`-`t` path, with deterministic tie-breaking (see [`sssp`]).
pub fn shortest_st_path(g: &Graph, s: usize, t: usize) -> Result<Path, RpError> {
    if t >= g.n() {
        return Err(RpError::NodeOutOfRange(t));
    }
    let tree = sssp(g, s)?;
    let nodes = tree.path_to(t).ok_or(RpError::Unreachable { s, t })?;
    Ok(Path::from_nodes(g, nodes).expect("tree paths are simple graph paths"))
}

/// Prefix lengths of a path: `prefix[i]` is the length of `v_0..v_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixTable {
    prefix: Vec<i64>,
}

impl PrefixTable {
    /// Wraps raw prefix lengths; `prefix[0]` must be 0.
    pub fn from_prefix(prefix: Vec<i64>) -> PrefixTable {
        assert_eq!(prefix.first(), Some(&0), "prefix table must start at 0");
        PrefixTable { prefix }
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.prefix
    }

    /// `d_P(v_i, v_j)` for 0-based positions `i <= j`.
    pub fn between(&self, i: usize, j: usize) -> i64 {
        debug_assert!(i <= j);
        self.prefix[j] - self.prefix[i]
    }

    /// `d_P(s, v_i)`.
    pub fn from_start(&self, i: usize) -> i64 {
        self.prefix[i]
    }

    /// `d_P(v_i, t)`.
    pub fn to_end(&self, i: usize) -> i64 {
        self.total() - self.prefix[i]
    }

    pub fn total(&self) -> i64 {
        self.prefix[self.prefix.len() - 1]
    }

    pub fn len(&self) -> usize {
        self.prefix.len()
    }

    pub fn is_empty(&self) -> bool {
        self.prefix.is_empty()
    }
}

pub fn prefix_distances(p: &Path) -> PrefixTable {
    let mut prefix = Vec::with_capacity(p.len());
    prefix.push(0);
    let mut acc = 0;
    for &w in p.edge_weights() {
        acc += w;
        prefix.push(acc);
    }
    PrefixTable { prefix }
}
