//! The replacement-path algorithms and their shared setup.

use alloc::vec::Vec;

use crate::detour::{CandidateList, ReplacementResult};
use crate::graph::{prefix_distances, shortest_st_path, Path, PrefixTable};
use crate::{Graph, RpError};

mod apsp;
mod divide;
pub mod flank;
mod oracle;
pub mod recursive;
mod sampling;

pub use apsp::apsp_rp;
pub use divide::{build_restricted_graph, divide_conquer_rp, RestrictedGraph};
pub use flank::{contract_flank, FlankChain, FlankSide};
pub use oracle::{oracle_rp, OracleOutput};
pub use recursive::{
    recursive_circumvent, recursive_rp, recursive_rp_with_stats, CircumventInstance, Recursion,
    RecursionStats,
};
pub use sampling::{sample_hitting_set, sampling_rp};

/// Tuning knobs of the randomized algorithms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplingParams {
    /// Exponent splitting detours into short (`< n^(1-ε)` edges) and long.
    pub epsilon: f64,
    /// Confidence constant of the hitting-set size `(C + 3) n^ε ln N`.
    pub c: f64,
    pub seed: u64,
    /// Branching factor of the recursive algorithm; `None` picks
    /// `max(2, ⌈(log₂ n)²⌉)`.
    pub z: Option<usize>,
}

impl Default for SamplingParams {
    fn default() -> Self {
        SamplingParams { epsilon: 0.5, c: 3.0, seed: 0, z: None }
    }
}

impl SamplingParams {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_z(mut self, z: usize) -> Self {
        self.z = Some(z);
        self
    }

    pub fn with_epsilon(mut self, epsilon: f64) -> Self {
        self.epsilon = epsilon;
        self
    }

    /// The branching factor used on an `n`-node graph.
    pub fn z_for(&self, n: usize) -> usize {
        self.z.unwrap_or_else(|| {
            let lg = libm::log2(n.max(2) as f64);
            (libm::ceil(lg * lg) as usize).max(2)
        })
    }

    pub(crate) fn validate(&self) -> Result<(), RpError> {
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return Err(RpError::InvalidParameter("epsilon must lie in (0, 1)"));
        }
        if self.c.is_nan() || self.c <= 0.0 {
            return Err(RpError::InvalidParameter("C must be positive"));
        }
        if self.z.is_some_and(|z| z < 2) {
            return Err(RpError::InvalidParameter("Z must be at least 2"));
        }
        Ok(())
    }
}

/// Output of one replacement-path run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RpRun {
    pub path: Path,
    pub result: ReplacementResult,
    /// Every candidate fed to the sweep.
    pub candidates: CandidateList,
    /// Candidates appended per recursion level (one entry for the
    /// non-recursive algorithms).
    pub level_counts: Vec<usize>,
}

/// Size budget for a candidate list on an `n`-node graph.
pub fn candidate_budget(n: usize) -> usize {
    32 * n.max(1) * n.max(1)
}

pub(crate) fn prepare(g: &Graph, s: usize, t: usize) -> Result<(Path, PrefixTable), RpError> {
    if s >= g.n() {
        return Err(RpError::NodeOutOfRange(s));
    }
    let path = shortest_st_path(g, s, t)?;
    let pt = prefix_distances(&path);
    Ok((path, pt))
}

pub(crate) fn finish(path: Path, candidates: CandidateList, level_counts: Vec<usize>) -> RpRun {
    let result = crate::detour::sweep_assign(&candidates, path.len());
    RpRun { path, result, candidates, level_counts }
}

/// `⌈x⌉` as a count, at least `min`.
pub(crate) fn ceil_count(x: f64, min: usize) -> usize {
    let c = libm::ceil(x);
    if c.is_finite() && c > min as f64 {
        c as usize
    } else {
        min
    }
}
