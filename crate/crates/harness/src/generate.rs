//! Seeded random instances.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rpaths_core::graph::sssp;
use rpaths_core::{Graph, RpError};
use thiserror::Error;

use crate::format::Instance;

/// How many times mixed mode redraws a graph that has a negative cycle.
pub const MAX_ATTEMPTS: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum WeightMode {
    /// Weights in `{0, ..., M}`.
    Nonnegative,
    /// Weights in `{-M, ..., M}` without negative cycles.
    Mixed,
}

impl fmt::Display for WeightMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeightMode::Nonnegative => "nonnegative",
            WeightMode::Mixed => "mixed",
        })
    }
}

impl FromStr for WeightMode {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "nonnegative" => Ok(WeightMode::Nonnegative),
            "mixed" => Ok(WeightMode::Mixed),
            _ => Err(GenError::InvalidParameter("mode must be `nonnegative` or `mixed`")),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("no graph without a negative cycle after {attempts} attempts")]
    GenerationExhausted { attempts: usize },
}

/// Random digraph with `s = 0`, `t = n - 1` and a planted Hamiltonian path
/// `0 -> ... -> n-1` through all nodes in random order; every other ordered
/// pair becomes an edge with probability `prob`.
///
/// In mixed mode each node gets a potential `phi` in `[0, M]` and an edge
/// `u -> v` draws its weight from `[max(-M, phi(v) - phi(u)), M]`, so
/// reduced costs are nonnegative. The graph is still checked for negative
/// cycles and redrawn on failure.
pub fn generate_graph(
    n: usize,
    prob: f64,
    bound: i64,
    mode: WeightMode,
    seed: u64,
) -> Result<Instance, GenError> {
    if n < 2 {
        return Err(GenError::InvalidParameter("n must be at least 2"));
    }
    if !(prob > 0.0 && prob <= 1.0) {
        return Err(GenError::InvalidParameter("edge probability must lie in (0, 1]"));
    }
    if bound < 1 {
        return Err(GenError::InvalidParameter("M must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let graph = draw(&mut rng, n, prob, bound, mode)?;
        if mode == WeightMode::Nonnegative || !has_negative_cycle(&graph) {
            return Ok(Instance { graph, s: 0, t: n - 1 });
        }
    }
    Err(GenError::GenerationExhausted { attempts: MAX_ATTEMPTS })
}

fn draw(rng: &mut ChaCha8Rng, n: usize, prob: f64, bound: i64, mode: WeightMode) -> Result<Graph, GenError> {
    let mixed = mode == WeightMode::Mixed;
    let phi: Vec<i64> = (0..n).map(|_| if mixed { rng.gen_range(0..=bound) } else { 0 }).collect();
    let weight = |rng: &mut ChaCha8Rng, u: usize, v: usize| {
        let lo = if mixed { (phi[v] - phi[u]).max(-bound) } else { 0 };
        rng.gen_range(lo..=bound)
    };
    let mut order: Vec<usize> = (1..n - 1).collect();
    order.shuffle(rng);
    order.insert(0, 0);
    order.push(n - 1);
    let mut edges = Vec::new();
    for w in order.windows(2) {
        let x = weight(rng, w[0], w[1]);
        edges.push((w[0], w[1], x));
    }
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(prob) {
                let x = weight(rng, u, v);
                edges.push((u, v, x));
            }
        }
    }
    Graph::from_edges(n, bound, edges).map_err(|_| GenError::InvalidParameter("n * M too large"))
}

/// Bellman-Ford from a virtual source joined to every node.
pub fn has_negative_cycle(g: &Graph) -> bool {
    let n = g.n();
    let edges = g.edges().chain((0..n).map(|v| (n, v, 0)));
    let with_root = Graph::from_edges(n + 1, g.weight_bound(), edges).expect("same bound, one more node");
    matches!(sssp(&with_root, n), Err(RpError::NegativeCycle))
}
