//! Recursive circumventing-paths algorithm.
//!
//! An instance holds a graph whose designated nodes come in (in-copy,
//! out-copy) pairs for consecutive path positions `i_1 < ... < i_T`, and asks
//! for every cut `x` the cheapest `d_P(s, v_{i_j}) + d(v_{i_j}^out,
//! v_{i_k}^in) + d_P(v_{i_k}, t)` with `j <= x < k`. Small instances are
//! solved exactly. Larger ones emit every pair whose distance survives a cap
//! of `N·Z`, sample a hub set `B` off the tuples, and split the tuples into
//! `Z` buckets. Each bucket gets a graph over `B`, its own copies and the
//! two contracted flanks (for detours with an endpoint outside the bucket),
//! and then recurses on `B` plus its copies with bound `N·Z`.

use alloc::vec;
use alloc::vec::Vec;

use crate::detour::{build_split_graph, CandidateList, DetourCandidate};
use crate::graph::{sssp, PrefixTable};
use crate::minplus::{cap_entries, minplus_closure, minplus_product, MinPlusMatrix};
use crate::{seed, Dist, Graph, RpError};

use super::flank::{contract_flank, FlankSide};
use super::sampling::{attach_chain, sample_nodes};
use super::{candidate_budget, ceil_count, finish, prepare, RpRun, SamplingParams};

/// One circumventing-paths instance.
#[derive(Debug, Clone)]
pub struct CircumventInstance {
    pub graph: Graph,
    /// `(in-copy, out-copy)` node ids, ordered along the path.
    pub tuples: Vec<(usize, usize)>,
    /// 1-based path position of each tuple; consecutive.
    pub positions: Vec<usize>,
    /// `d_P(s, v)` per tuple.
    pub ds: Vec<i64>,
    /// `d_P(v, t)` per tuple.
    pub dt: Vec<i64>,
    /// Weight bound `N` of this level.
    pub weight_bound: i64,
    pub level: usize,
}

impl CircumventInstance {
    /// Checks the instance invariants: in-copies have no outgoing edges,
    /// out-copies no incoming edges, and no weight exceeds `2N`.
    fn check(&self) {
        let mut indeg = vec![false; self.graph.n()];
        for (_, v, w) in self.graph.edges() {
            indeg[v] = true;
            assert!(
                w <= 2 * self.weight_bound,
                "level {} weight {w} exceeds 2N = {}",
                self.level,
                2 * self.weight_bound
            );
        }
        for &(vin, vout) in &self.tuples {
            assert!(self.graph.out_edges(vin).is_empty(), "in-copy {vin} has outgoing edges");
            assert!(!indeg[vout], "out-copy {vout} has incoming edges");
        }
    }

    fn len(&self) -> usize {
        self.tuples.len()
    }
}

/// Per-run bookkeeping.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RecursionStats {
    /// Candidates appended at each recursion level.
    pub per_level: Vec<usize>,
    /// `(T, appended)` for every subpath-processing call.
    pub subpath_calls: Vec<(usize, usize)>,
    pub instances: usize,
    pub base_cases: usize,
}

impl RecursionStats {
    fn bump(&mut self, level: usize) {
        if self.per_level.len() <= level {
            self.per_level.resize(level + 1, 0);
        }
        self.per_level[level] += 1;
    }
}

/// Fixed parameters shared by every instance of one run.
#[derive(Debug, Clone, Copy)]
pub struct Recursion {
    /// Branching factor `Z`.
    pub z: usize,
    /// Instances with at most this many nodes are solved directly.
    pub base_limit: usize,
    /// `⌈ln n⌉` for hub-set sizes.
    pub log_factor: usize,
}

impl Recursion {
    /// Settings for an `n`-node input.
    pub fn new(n: usize, params: &SamplingParams) -> Recursion {
        let z = params.z_for(n);
        let lg = libm::ceil(libm::log2(n.max(2) as f64)) as usize;
        Recursion {
            z,
            base_limit: z * lg.max(1),
            log_factor: ceil_count(libm::log(n.max(2) as f64), 1),
        }
    }

    /// Solves `inst`, appending its candidates to `l`.
    pub fn circumvent(
        &self,
        inst: &CircumventInstance,
        seed: u64,
        l: &mut CandidateList,
        stats: &mut RecursionStats,
    ) -> Result<(), RpError> {
        inst.check();
        stats.instances += 1;
        let size = inst.graph.n();
        let dist = minplus_closure(&MinPlusMatrix::from_graph(&inst.graph))?;

        if size <= self.base_limit || inst.len() <= 2 {
            stats.base_cases += 1;
            self.emit_pairs(inst, &dist, l, stats);
            return Ok(());
        }

        let capped = cap_entries(&dist, Dist::finite(inst.weight_bound * self.z as i64));
        let w = minplus_product(&capped, &capped)?;
        self.emit_pairs(inst, &w, l, stats);

        let mut on_tuple = vec![false; size];
        for &(a, b) in &inst.tuples {
            on_tuple[a] = true;
            on_tuple[b] = true;
        }
        let pool: Vec<usize> = (0..size).filter(|&v| !on_tuple[v]).collect();
        let want = (size * self.log_factor).div_ceil(self.z);
        let hubs = sample_nodes(&pool, want, seed::child(seed, u64::MAX));
        self.process_subpath(inst, &hubs, &w, seed, l, stats)
    }

    fn emit_pairs(
        &self,
        inst: &CircumventInstance,
        dist: &MinPlusMatrix,
        l: &mut CandidateList,
        stats: &mut RecursionStats,
    ) {
        for (j, &(_, out)) in inst.tuples.iter().enumerate() {
            for (k, &(vin, _)) in inst.tuples.iter().enumerate().skip(j + 1) {
                if let Some(d) = dist.get(out, vin).value() {
                    l.push(DetourCandidate::new(
                        inst.positions[j],
                        inst.positions[k],
                        inst.ds[j] + d + inst.dt[k],
                    ));
                    stats.bump(inst.level);
                }
            }
        }
    }

    /// Splits the tuples into `Z` buckets sharing endpoints and handles
    /// detours with at least one endpoint outside each bucket; detours
    /// inside a bucket go to a recursive call on `hubs` plus the bucket.
    ///
    /// `w` holds the capped distances of `inst.graph`.
    pub fn process_subpath(
        &self,
        inst: &CircumventInstance,
        hubs: &[usize],
        w: &MinPlusMatrix,
        seed: u64,
        l: &mut CandidateList,
        stats: &mut RecursionStats,
    ) -> Result<(), RpError> {
        let t_len = inst.len();
        let edges = t_len - 1;
        let per = edges.div_ceil(self.z.min(edges));
        let before = l.len();
        let pt = inst_prefix(inst);
        let nb = hubs.len();

        for (bucket, a) in (0..edges).step_by(per).enumerate() {
            let b = (a + per).min(edges);
            let own: Vec<usize> = (a..=b).collect();
            let m = own.len();
            // layout: hubs | bucket in-copies | bucket out-copies | left chain | right chain
            let in_at = |i: usize| nb + i;
            let out_at = |i: usize| nb + m + i;

            let left_idx: Vec<usize> = (0..=a).collect();
            let right_idx: Vec<usize> = (b..t_len).collect();
            let left_w = MinPlusMatrix::from_fn(left_idx.len(), nb, |q, h| {
                w.get(inst.tuples[left_idx[q]].1, hubs[h])
            });
            let right_w = MinPlusMatrix::from_fn(nb, right_idx.len(), |h, q| {
                w.get(hubs[h], inst.tuples[right_idx[q]].0)
            });
            let chunk = self.z + 1;
            let left = contract_flank(&local(&left_idx), chunk, &left_w, &pt, FlankSide::Left);
            let right = contract_flank(&local(&right_idx), chunk, &right_w, &pt, FlankSide::Right);
            let left_at = |i: usize| nb + 2 * m + i;
            let right_at = |i: usize| nb + 2 * m + left.len() + i;

            let core_size = nb + 2 * m;
            let mut core = vec![Vec::new(); core_size];
            {
                let sources = (0..nb)
                    .map(|h| (h, hubs[h]))
                    .chain(own.iter().enumerate().map(|(i, &x)| (out_at(i), inst.tuples[x].1)));
                for (from, gu) in sources {
                    let sinks = (0..nb)
                        .map(|h| (h, hubs[h]))
                        .chain(own.iter().enumerate().map(|(i, &x)| (in_at(i), inst.tuples[x].0)));
                    for (to, gv) in sinks {
                        if let Some(d) = w.get(gu, gv).value() {
                            if from != to {
                                core[from].push((to, d));
                            }
                        }
                    }
                }
            }

            let mut full = core.clone();
            full.resize(core_size + left.len() + right.len(), Vec::new());
            let mut link = |from: usize, to: usize, d: Dist| {
                if let Some(x) = d.value() {
                    full[from].push((to, x));
                }
            };
            attach_chain(&left, nb, left_at, &mut link);
            attach_chain(&right, nb, right_at, &mut link);
            let graph = Graph::from_adjacency(full);
            let (src, dst) = (left_at(0), right_at(right.len() - 1));
            let from_src = sssp(&graph, src)?;
            let to_dst = sssp(&graph.reversed(), dst)?;

            let (first, last) = (0, t_len - 1);
            let mut push = |j: usize, k: usize, d: Dist| {
                if let Some(x) = d.value() {
                    l.push(DetourCandidate::new(
                        inst.positions[j],
                        inst.positions[k],
                        inst.ds[first] + x + inst.dt[last],
                    ));
                    stats.bump(inst.level);
                }
            };
            push(a, b, from_src.dist[dst]);
            for (i, &x) in own.iter().enumerate() {
                if x > a {
                    // s-side entry: shift the suffix from v_{i_T} back to v_x
                    let d = from_src.dist[in_at(i)] + (inst.dt[x] - inst.dt[last]);
                    push(a, x, d);
                }
                if x < b {
                    let d = to_dst.dist[out_at(i)] + (inst.ds[x] - inst.ds[first]);
                    push(x, b, d);
                }
            }

            let sub = CircumventInstance {
                graph: Graph::from_adjacency(core),
                tuples: (0..m).map(|i| (in_at(i), out_at(i))).collect(),
                positions: own.iter().map(|&x| inst.positions[x]).collect(),
                ds: own.iter().map(|&x| inst.ds[x]).collect(),
                dt: own.iter().map(|&x| inst.dt[x]).collect(),
                weight_bound: inst.weight_bound * self.z as i64,
                level: inst.level + 1,
            };
            self.circumvent(&sub, seed::child(seed, bucket as u64), l, stats)?;
        }
        let appended = l.len() - before;
        stats.subpath_calls.push((t_len, appended));
        Ok(())
    }
}

/// Prefix table over the instance's tuples, indexed by 1-based local
/// tuple position.
fn inst_prefix(inst: &CircumventInstance) -> PrefixTable {
    let base = inst.ds[0];
    PrefixTable::from_prefix(inst.ds.iter().map(|&d| d - base).collect())
}

fn local(idx: &[usize]) -> Vec<usize> {
    idx.iter().map(|&i| i + 1).collect()
}

/// Solves `inst` with the settings derived from an `n`-node input, seeding
/// its hub samples from `params.seed`.
pub fn recursive_circumvent(
    inst: &CircumventInstance,
    params: &SamplingParams,
    n: usize,
    l: &mut CandidateList,
) -> Result<RecursionStats, RpError> {
    params.validate()?;
    let mut stats = RecursionStats::default();
    Recursion::new(n, params).circumvent(inst, params.seed, l, &mut stats)?;
    Ok(stats)
}

/// Replacement paths by the recursive circumventing-paths method.
pub fn recursive_rp(g: &Graph, s: usize, t: usize, params: &SamplingParams) -> Result<RpRun, RpError> {
    Ok(recursive_rp_with_stats(g, s, t, params)?.0)
}

/// [`recursive_rp`] plus its recursion statistics.
pub fn recursive_rp_with_stats(
    g: &Graph,
    s: usize,
    t: usize,
    params: &SamplingParams,
) -> Result<(RpRun, RecursionStats), RpError> {
    params.validate()?;
    let (path, pt) = prepare(g, s, t)?;
    let n = g.n();
    let k = path.len();
    let mut l = CandidateList::with_budget(candidate_budget(n));
    let mut stats = RecursionStats::default();
    if k >= 2 {
        let split = build_split_graph(g, &path);
        let root = CircumventInstance {
            graph: split.graph,
            tuples: split.in_of.iter().copied().zip(split.out_of.iter().copied()).collect(),
            positions: (1..=k).collect(),
            ds: (0..k).map(|i| pt.from_start(i)).collect(),
            dt: (0..k).map(|i| pt.to_end(i)).collect(),
            weight_bound: g.weight_bound(),
            level: 0,
        };
        Recursion::new(n, params).circumvent(&root, params.seed, &mut l, &mut stats)?;
    }
    let run = finish(path, l, stats.per_level.clone());
    Ok((run, stats))
}
