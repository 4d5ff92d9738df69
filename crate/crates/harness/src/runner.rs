//! Uniform dispatch over the algorithms.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use rpaths_core::algorithms::recursive_rp_with_stats;
use rpaths_core::detour::sweep_assign;
use rpaths_core::{
    apsp_rp, divide_conquer_rp, oracle_rp, sampling_rp, DetourCandidate, Path, ReplacementResult,
    RpError, RpRun, SamplingParams,
};
use serde_json::{json, Value};

use crate::format::Instance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Algo {
    Oracle,
    Apsp,
    Dc,
    Sampling,
    Recursive,
    /// Every algorithm except the oracle.
    All,
}

impl Algo {
    pub const SOLVERS: [Algo; 4] = [Algo::Apsp, Algo::Dc, Algo::Sampling, Algo::Recursive];

    pub fn expand(self) -> Vec<Algo> {
        match self {
            Algo::All => Self::SOLVERS.to_vec(),
            one => vec![one],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Algo::Oracle => "oracle",
            Algo::Apsp => "apsp",
            Algo::Dc => "dc",
            Algo::Sampling => "sampling",
            Algo::Recursive => "recursive",
            Algo::All => "all",
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameters shared by all runs of one command.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Settings {
    pub seed: u64,
    pub epsilon: f64,
    pub c: f64,
    pub z: Option<usize>,
    /// Path edges per piece for `dc`; `None` picks `⌈√(|P| - 1)⌉`.
    pub bucket_size: Option<usize>,
    pub with_paths: bool,
    /// Test hook: plants a candidate shorter than any genuine replacement
    /// into the `apsp` list.
    pub inject_fault: bool,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            seed: 0,
            epsilon: 0.5,
            c: 3.0,
            z: None,
            bucket_size: None,
            with_paths: false,
            inject_fault: false,
        }
    }
}

impl Settings {
    fn sampling(&self) -> SamplingParams {
        SamplingParams { epsilon: self.epsilon, c: self.c, seed: self.seed, z: self.z }
    }
}

/// Result of one algorithm on one instance.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub algo: Algo,
    pub path: Path,
    pub result: ReplacementResult,
    pub candidates: usize,
    pub level_counts: Vec<usize>,
    pub millis: f64,
    pub params: BTreeMap<String, Value>,
    pub witnesses: Option<Vec<Option<Vec<usize>>>>,
}

pub fn run_one(algo: Algo, inst: &Instance, settings: &Settings) -> Result<Outcome, RpError> {
    let (g, s, t) = (&inst.graph, inst.s, inst.t);
    let mut params = BTreeMap::new();
    let start = Instant::now();
    let (mut run, witnesses) = match algo {
        Algo::Oracle => {
            let out = oracle_rp(g, s, t, settings.with_paths)?;
            let run = RpRun {
                path: out.path,
                result: out.result,
                candidates: Default::default(),
                level_counts: Vec::new(),
            };
            (run, out.witnesses)
        }
        Algo::Apsp => (apsp_rp(g, s, t)?, None),
        Algo::Dc => {
            let edges = rpaths_core::graph::shortest_st_path(g, s, t)?.len().saturating_sub(1);
            let bucket = settings.bucket_size.unwrap_or_else(|| ((edges as f64).sqrt().ceil() as usize).max(1));
            params.insert("bucket_size".into(), json!(bucket));
            (divide_conquer_rp(g, s, t, bucket)?, None)
        }
        Algo::Sampling => {
            let p = settings.sampling();
            params.insert("epsilon".into(), json!(p.epsilon));
            params.insert("C".into(), json!(p.c));
            params.insert("seed".into(), json!(p.seed));
            (sampling_rp(g, s, t, &p)?, None)
        }
        Algo::Recursive => {
            let p = settings.sampling();
            params.insert("Z".into(), json!(p.z_for(g.n())));
            params.insert("seed".into(), json!(p.seed));
            (recursive_rp_with_stats(g, s, t, &p)?.0, None)
        }
        Algo::All => return Err(RpError::InvalidParameter("`all` expands to several algorithms")),
    };
    let millis = start.elapsed().as_secs_f64() * 1e3;

    if algo == Algo::Apsp && settings.inject_fault && run.path.len() >= 2 {
        run.candidates.push(DetourCandidate::new(1, 2, run.path.total_length() - 1));
        run.result = sweep_assign(&run.candidates, run.path.len());
        params.insert("fault_injected".into(), json!(true));
    }

    Ok(Outcome {
        algo,
        candidates: run.candidates.len(),
        path: run.path,
        result: run.result,
        level_counts: run.level_counts,
        millis,
        params,
        witnesses,
    })
}
