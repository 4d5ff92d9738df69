//! Contraction of a path flank into a short weighted chain.
//!
//! A right flank `p_1..p_t` is cut into chunks of `c` consecutive nodes and
//! each chunk becomes one chain node standing for the chunk's last node. An
//! entry edge `b -> u_i` gets the cheapest way to enter the chunk from `b`
//! and walk along the path to its representative; chain edges carry the path
//! distance between consecutive representatives. Paths that enter a right
//! flank never leave it, so the distance from any `b` to the flank's end is
//! preserved.
//!
//! A left flank is the mirror image: representatives are chunk starts, the
//! chain starts at `p_1` and exit edges `u_i -> b` carry the cheapest walk
//! from the representative to an exit node plus the exit weight.

use alloc::vec::Vec;

use crate::graph::PrefixTable;
use crate::minplus::MinPlusMatrix;
use crate::Dist;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlankSide {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlankChain {
    pub side: FlankSide,
    /// Path position represented by each chain node, left to right.
    pub representatives: Vec<usize>,
    /// `chain_weights[i]` is the weight of `u_i -> u_{i+1}`.
    pub chain_weights: Vec<i64>,
    /// `entry_weights[b][i]`: weight of `b -> u_i` (right flank) or
    /// `u_i -> b` (left flank).
    pub entry_weights: Vec<Vec<Dist>>,
}

impl FlankChain {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }
}

/// Contracts the flank at consecutive 1-based path positions `positions`.
///
/// For a right flank `w` is `|B| x t` with `w[b][q]` the weight from `b` into
/// flank node `q`; for a left flank it is `t x |B|` with `w[q][b]` the weight
/// from flank node `q` to `b`.
pub fn contract_flank(
    positions: &[usize],
    c: usize,
    w: &MinPlusMatrix,
    pt: &PrefixTable,
    side: FlankSide,
) -> FlankChain {
    assert!(c >= 1, "chunk size must be positive");
    debug_assert!(positions.windows(2).all(|p| p[1] == p[0] + 1));
    let t = positions.len();
    let hubs = match side {
        FlankSide::Right => {
            assert_eq!(w.cols(), t);
            w.rows()
        }
        FlankSide::Left => {
            assert_eq!(w.rows(), t);
            w.cols()
        }
    };
    // d_P between flank indices
    let along = |from: usize, to: usize| pt.between(positions[from] - 1, positions[to] - 1);

    let chunks: Vec<(usize, usize)> = (0..t).step_by(c).map(|a| (a, (a + c).min(t))).collect();
    let rep_index: Vec<usize> = chunks
        .iter()
        .map(|&(a, b)| match side {
            FlankSide::Right => b - 1,
            FlankSide::Left => a,
        })
        .collect();

    let mut entry_weights = alloc::vec![alloc::vec![Dist::INF; chunks.len()]; hubs];
    for (b, row) in entry_weights.iter_mut().enumerate() {
        for (slot, (&(lo, hi), &rep)) in row.iter_mut().zip(chunks.iter().zip(&rep_index)) {
            for q in lo..hi {
                let cand = match side {
                    FlankSide::Right => w.get(b, q) + along(q, rep),
                    FlankSide::Left => w.get(q, b) + along(rep, q),
                };
                *slot = (*slot).min(cand);
            }
        }
    }
    FlankChain {
        side,
        representatives: rep_index.iter().map(|&i| positions[i]).collect(),
        chain_weights: rep_index.windows(2).map(|r| along(r[0], r[1])).collect(),
        entry_weights,
    }
}
