//! Replacement paths on directed graphs with integer weights in `{-M, ..., M}`.
//!
//! Given a shortest `s`-`t` path `P`, the replacement distance of an edge
//! `e` on `P` is the length of a shortest `s`-`t` path that avoids `e`. This
//! crate provides a per-edge re-run oracle plus four detour-based algorithms
//! that all funnel their candidates into one sorted successor sweep:
//!
//! | function | strategy |
//! |----------|----------|
//! | [`oracle_rp`] | delete each path edge and re-run single-source shortest paths |
//! | [`apsp_rp`] | split path nodes into in/out copies and run all-pairs distances |
//! | [`divide_conquer_rp`] | bucket the path and solve one restricted graph per bucket |
//! | [`sampling_rp`] | capped short detours plus a random hitting set over long ones |
//! | [`recursive_rp`] | recursive circumventing-paths with flank contraction |
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod algorithms;
pub mod detour;
mod dist;
mod error;
pub mod graph;
pub mod minplus;
mod seed;

pub use algorithms::{
    apsp_rp, divide_conquer_rp, oracle_rp, recursive_rp, sampling_rp, OracleOutput, RpRun,
    SamplingParams,
};
pub use detour::{CandidateList, DetourCandidate, ReplacementResult};
pub use dist::Dist;
pub use error::{GraphError, RpError};
pub use graph::{DistanceVector, Graph, Path, PrefixTable};
pub use minplus::MinPlusMatrix;
