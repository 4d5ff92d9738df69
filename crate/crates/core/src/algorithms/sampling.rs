use alloc::vec;
use alloc::vec::Vec;

use rand::seq::index;

use crate::detour::{build_split_graph, candidate_from_detour, CandidateList, DetourCandidate, SplitGraph};
use crate::graph::PrefixTable;
use crate::minplus::{bounded_distance_matrix, minplus_closure, MinPlusMatrix};
use crate::{seed, Dist, Graph, RpError};

use super::flank::{contract_flank, FlankChain, FlankSide};
use super::{candidate_budget, ceil_count, finish, prepare, RpRun, SamplingParams};

/// Uniform sample without replacement of `min(|pool|, ⌈(C + 3) n^ε ln N⌉)`
/// nodes of `pool`, returned sorted. Deterministic in `params.seed`.
pub fn sample_hitting_set(pool: &[usize], n: usize, params: &SamplingParams, big_n: usize) -> Vec<usize> {
    debug_assert!(big_n >= n);
    let want = (params.c + 3.0) * libm::pow(n as f64, params.epsilon) * libm::log(big_n as f64);
    let size = ceil_count(want, 1).min(pool.len());
    sample_nodes(pool, size, params.seed)
}

pub(crate) fn sample_nodes(pool: &[usize], size: usize, seed: u64) -> Vec<usize> {
    if size >= pool.len() {
        return pool.to_vec();
    }
    let mut rng = seed::rng(seed);
    let mut picked: Vec<usize> = index::sample(&mut rng, pool.len(), size)
        .into_iter()
        .map(|i| pool[i])
        .collect();
    picked.sort_unstable();
    picked
}

/// Replacement paths by capped short detours plus a hitting set.
///
/// Detours on fewer than `n^(1-ε)` edges show up directly in the capped
/// all-pairs matrix of the split graph. Longer ones are hit by a random
/// sample `B` of off-path nodes, which cuts them into capped pieces; those
/// are reassembled in one small graph per path piece, made of `B`, the
/// piece's split copies and the two contracted flanks.
pub fn sampling_rp(g: &Graph, s: usize, t: usize, params: &SamplingParams) -> Result<RpRun, RpError> {
    params.validate()?;
    let (path, pt) = prepare(g, s, t)?;
    let n = g.n();
    let k = path.len();
    let split = build_split_graph(g, &path);
    let reach = ceil_count(libm::pow(n as f64, 1.0 - params.epsilon), 1);
    let threshold = 2 * g.weight_bound() * reach as i64;
    let w = bounded_distance_matrix(&split.graph, Dist::finite(threshold))?;

    let mut l = CandidateList::with_budget(candidate_budget(n));
    for i in 0..k {
        for j in i + 1..k {
            if let Some(len) = w.get(split.out_of[i], split.in_of[j]).value() {
                l.push(candidate_from_detour(i + 1, j + 1, len, &pt));
            }
        }
    }

    let hubs = sample_hitting_set(&split.off_path, n, params, n.max(2));
    if !hubs.is_empty() && k >= 2 {
        let pieces = (k - 1).min(n.div_ceil(hubs.len()));
        let piece_edges = (k - 1).div_ceil(pieces);
        let piece = Piece { split: &split, w: &w, pt: &pt, hubs: &hubs, chunk: reach };
        for lo in (1..k).step_by(piece_edges) {
            let hi = (lo + piece_edges).min(k);
            piece.solve(lo, hi, &mut l)?;
        }
    }
    let count = l.len();
    Ok(finish(path, l, vec![count]))
}

struct Piece<'a> {
    split: &'a SplitGraph,
    w: &'a MinPlusMatrix,
    pt: &'a PrefixTable,
    hubs: &'a [usize],
    chunk: usize,
}

impl Piece<'_> {
    /// Builds the contracted graph for the piece `lo..=hi` (1-based) and
    /// emits candidates of all four detour shapes.
    fn solve(&self, lo: usize, hi: usize, l: &mut CandidateList) -> Result<(), RpError> {
        let (split, w, pt) = (self.split, self.w, self.pt);
        let k = pt.len();
        let nb = self.hubs.len();
        let interior: Vec<usize> = (lo + 1..hi).collect();
        let left_pos: Vec<usize> = (1..=lo).collect();
        let right_pos: Vec<usize> = (hi..=k).collect();

        let left_w = MinPlusMatrix::from_fn(left_pos.len(), nb, |q, b| {
            w.get(split.out_of[left_pos[q] - 1], self.hubs[b])
        });
        let right_w = MinPlusMatrix::from_fn(nb, right_pos.len(), |b, q| {
            w.get(self.hubs[b], split.in_of[right_pos[q] - 1])
        });
        let left = contract_flank(&left_pos, self.chunk, &left_w, pt, FlankSide::Left);
        let right = contract_flank(&right_pos, self.chunk, &right_w, pt, FlankSide::Right);

        // layout: hubs | interior in | interior out | left chain | right chain
        let m = interior.len();
        let in_at = |i: usize| nb + i;
        let out_at = |i: usize| nb + m + i;
        let left_at = |i: usize| nb + 2 * m + i;
        let right_at = |i: usize| nb + 2 * m + left.len() + i;
        let size = nb + 2 * m + left.len() + right.len();

        let mut adj = vec![Vec::new(); size];
        let mut link = |from: usize, to: usize, d: Dist| {
            if let Some(x) = d.value() {
                adj[from].push((to, x));
            }
        };
        // sources: hubs and out-copies; sinks: hubs and in-copies
        let sources: Vec<(usize, usize)> = (0..nb)
            .map(|b| (b, self.hubs[b]))
            .chain(interior.iter().enumerate().map(|(i, &q)| (out_at(i), split.out_of[q - 1])))
            .collect();
        let sinks: Vec<(usize, usize)> = (0..nb)
            .map(|b| (b, self.hubs[b]))
            .chain(interior.iter().enumerate().map(|(i, &q)| (in_at(i), split.in_of[q - 1])))
            .collect();
        for &(from, gu) in &sources {
            for &(to, gv) in &sinks {
                if from != to {
                    link(from, to, w.get(gu, gv));
                }
            }
        }
        attach_chain(&left, nb, left_at, &mut link);
        attach_chain(&right, nb, right_at, &mut link);

        let graph = Graph::from_adjacency(adj);
        let dist = minplus_closure(&MinPlusMatrix::from_graph(&graph))?;
        let (src, dst) = (left_at(0), right_at(right.len() - 1));

        if let Some(d) = dist.get(src, dst).value() {
            l.push(DetourCandidate::new(lo, hi, d));
        }
        for (i, &q) in interior.iter().enumerate() {
            if let Some(d) = dist.get(src, in_at(i)).value() {
                l.push(DetourCandidate::new(lo, q, d + pt.to_end(q - 1)));
            }
            if let Some(d) = dist.get(out_at(i), dst).value() {
                l.push(DetourCandidate::new(q, hi, pt.from_start(q - 1) + d));
            }
            for (r, &q2) in interior.iter().enumerate().skip(i + 1) {
                if let Some(d) = dist.get(out_at(i), in_at(r)).value() {
                    l.push(candidate_from_detour(q, q2, d, pt));
                }
            }
        }
        Ok(())
    }
}

/// Adds chain edges and the hub connections of a contracted flank. Hubs
/// occupy local ids `0..hubs`.
pub(crate) fn attach_chain(
    chain: &FlankChain,
    hubs: usize,
    at: impl Fn(usize) -> usize,
    link: &mut impl FnMut(usize, usize, Dist),
) {
    for (i, &cw) in chain.chain_weights.iter().enumerate() {
        link(at(i), at(i + 1), Dist::finite(cw));
    }
    for b in 0..hubs {
        for (i, &ew) in chain.entry_weights[b].iter().enumerate() {
            match chain.side {
                FlankSide::Right => link(b, at(i), ew),
                FlankSide::Left => link(at(i), b, ew),
            }
        }
    }
}
