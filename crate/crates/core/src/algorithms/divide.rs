use alloc::vec;
use alloc::vec::Vec;

use crate::detour::{candidate_from_detour, CandidateList, DetourCandidate};
use crate::graph::Path;
use crate::minplus::{minplus_closure, MinPlusMatrix};
use crate::{Graph, RpError};

use super::{candidate_budget, finish, prepare, RpRun};

/// `G_{P'}` for the subpath `P'` spanning 1-based positions `lo..=hi`.
///
/// Nodes left of the interior (`v_1..=v_lo`) keep only their incoming path
/// edges, nodes right of it (`v_hi..=v_k`) keep only their outgoing path
/// edges, the edges of `P'` are gone and every interior node is split. Ids
/// `0..n` are kept (an interior node's id is its in-copy); the out-copy of
/// the `i`-th interior node is `n + i`.
#[derive(Debug, Clone)]
pub struct RestrictedGraph {
    pub graph: Graph,
    pub lo: usize,
    pub hi: usize,
    /// In-copies of positions `lo + 1..hi`.
    pub in_of: Vec<usize>,
    /// Out-copies of positions `lo + 1..hi`.
    pub out_of: Vec<usize>,
}

pub fn build_restricted_graph(g: &Graph, p: &Path, lo: usize, hi: usize) -> RestrictedGraph {
    assert!(1 <= lo && lo < hi && hi <= p.len(), "bad subpath {lo}..={hi}");
    let n = g.n();
    // 1-based positions
    let pos: Vec<Option<usize>> = p.positions(n).into_iter().map(|x| x.map(|i| i + 1)).collect();
    let interior = |q: usize| lo < q && q < hi;
    let mut adj = vec![Vec::new(); n + (hi - lo - 1)];
    for (u, v, w) in g.edges() {
        let (pu, pv) = (pos[u], pos[v]);
        if let (Some(a), Some(b)) = (pu, pv) {
            if b == a + 1 {
                if a < lo || a >= hi {
                    adj[u].push((v, w));
                }
                continue;
            }
        }
        if pv.is_some_and(|b| b <= lo) || pu.is_some_and(|a| a >= hi) {
            continue;
        }
        let from = match pu {
            Some(a) if interior(a) => n + (a - lo - 1),
            _ => u,
        };
        adj[from].push((v, w));
    }
    let nodes = p.nodes();
    RestrictedGraph {
        graph: Graph::from_adjacency(adj),
        lo,
        hi,
        in_of: (lo + 1..hi).map(|q| nodes[q - 1]).collect(),
        out_of: (0..hi - lo - 1).map(|i| n + i).collect(),
    }
}

/// Divide and conquer over consecutive pieces of `bucket_size` path edges.
///
/// Pieces share their endpoint nodes, so each path edge lies in exactly one
/// piece. Per piece, distances in `G_{P'}` among `s`, `t` and the interior
/// copies give the four detour shapes: interior to interior, `s` side to
/// interior, interior to `t` side and `s` to `t`.
pub fn divide_conquer_rp(g: &Graph, s: usize, t: usize, bucket_size: usize) -> Result<RpRun, RpError> {
    if bucket_size == 0 {
        return Err(RpError::InvalidParameter("bucket size must be at least 1"));
    }
    let (path, pt) = prepare(g, s, t)?;
    let k = path.len();
    let mut l = CandidateList::with_budget(candidate_budget(g.n()));
    for lo in (1..k).step_by(bucket_size) {
        let hi = (lo + bucket_size).min(k);
        let rg = build_restricted_graph(g, &path, lo, hi);
        let dist = minplus_closure(&MinPlusMatrix::from_graph(&rg.graph))?;
        let interior = lo + 1..hi;

        if let Some(d) = dist.get(s, t).value() {
            l.push(DetourCandidate::new(lo, hi, d));
        }
        for (q, (&vin, &vout)) in interior.zip(rg.in_of.iter().zip(&rg.out_of)) {
            if let Some(d) = dist.get(s, vin).value() {
                l.push(DetourCandidate::new(lo, q, d + pt.to_end(q - 1)));
            }
            if let Some(d) = dist.get(vout, t).value() {
                l.push(DetourCandidate::new(q, hi, pt.from_start(q - 1) + d));
            }
        }
        for (a, &vout) in rg.out_of.iter().enumerate() {
            for (b, &vin) in rg.in_of.iter().enumerate().skip(a + 1) {
                if let Some(d) = dist.get(vout, vin).value() {
                    l.push(candidate_from_detour(lo + 1 + a, lo + 1 + b, d, &pt));
                }
            }
        }
    }
    let count = l.len();
    Ok(finish(path, l, vec![count]))
}
