//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Every check compares against an independent oracle with
//! zero tolerance unless the line says otherwise.

use std::time::Instant;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rpaths::{generate_graph, Instance, WeightMode};
use rpaths_core::algorithms::{candidate_budget, recursive_rp_with_stats, sample_hitting_set};
use rpaths_core::detour::{candidate_from_detour, direct_assign, sweep_assign};
use rpaths_core::graph::prefix_distances;
use rpaths_core::minplus::{
    bounded_distance_matrix, minplus_closure, minplus_product, minplus_via_scaling,
};
use rpaths_core::{
    apsp_rp, divide_conquer_rp, oracle_rp, sampling_rp, CandidateList, DetourCandidate, Dist,
    Graph, MinPlusMatrix, SamplingParams,
};

struct Case {
    seed: u64,
    n: usize,
    prob: f64,
    m: i64,
    mode: WeightMode,
    inst: Instance,
}

impl Case {
    fn describe(&self) -> String {
        format!(
            "rpaths gen --n {} --prob {} --M {} --mode {} --seed {}",
            self.n, self.prob, self.m, self.mode, self.seed
        )
    }
}

const PROBS: [f64; 3] = [0.1, 0.3, 0.7];
const BOUNDS: [i64; 3] = [1, 4, 10];
const MODES: [WeightMode; 2] = [WeightMode::Nonnegative, WeightMode::Mixed];

/// 540 instances: every (prob, M, mode) combination 30 times with n drawn
/// from 5..=60.
fn corpus() -> Vec<Case> {
    let mut r = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut cases = Vec::new();
    for rep in 0..30u64 {
        for (pi, &prob) in PROBS.iter().enumerate() {
            for (mi, &m) in BOUNDS.iter().enumerate() {
                for (wi, &mode) in MODES.iter().enumerate() {
                    let n = r.gen_range(5..=60);
                    let seed = rep * 100 + (pi * 18 + mi * 6 + wi) as u64;
                    let inst = generate_graph(n, prob, m, mode, seed).expect("corpus instance");
                    cases.push(Case { seed, n, prob, m, mode, inst });
                }
            }
        }
    }
    cases
}

/// One criterion's verdict and its report line.
type Verdict = (u32, bool, String);

fn line(id: u32, name: &str, tolerance: &str, pass: bool, detail: &str) -> Verdict {
    let tag = if pass { "PASS" } else { "FAIL" };
    (id, pass, format!("[{tag}] {id}. {name} | tolerance: {tolerance} | {detail}"))
}

fn first_failures(failures: &[String]) -> String {
    failures.iter().take(5).map(|f| format!("\n    {f}")).collect()
}

fn deterministic_equivalence(corpus: &[Case]) -> Verdict {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut runs = 0;
    for c in corpus {
        let g = &c.inst.graph;
        let (s, t) = (c.inst.s, c.inst.t);
        let oracle = oracle_rp(g, s, t, false).unwrap();
        let k = oracle.path.len();
        let sqrt_n = (c.n as f64).sqrt().ceil() as usize;
        let mut check = |name: String, got: &rpaths_core::ReplacementResult| {
            runs += 1;
            if got != &oracle.result {
                failures.push(format!("{name} differs on `{}`", c.describe()));
            }
        };
        check("apsp".into(), &apsp_rp(g, s, t).unwrap().result);
        for bucket in [1, 3, sqrt_n, k] {
            check(format!("dc bucket {bucket}"), &divide_conquer_rp(g, s, t, bucket).unwrap().result);
        }
    }
    line(
        1,
        "apsp and dc (buckets 1, 3, ceil(sqrt n), |P|) equal the oracle",
        "exact",
        failures.is_empty() && corpus.len() >= 500,
        &format!(
            "{} instances, {runs} runs, {} mismatches, {:.1} s{}",
            corpus.len(),
            failures.len(),
            start.elapsed().as_secs_f64(),
            first_failures(&failures)
        ),
    )
}

/// Criteria 2 and 6 share the randomized runs.
fn randomized_equivalence(corpus: &[Case]) -> (Verdict, Verdict) {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut over_budget = Vec::new();
    let mut runs = 0;
    let mut worst_ratio: f64 = 0.0;
    let mut max_levels = 0;
    for c in corpus {
        let g = &c.inst.graph;
        let (s, t) = (c.inst.s, c.inst.t);
        let oracle = oracle_rp(g, s, t, false).unwrap();
        for seed in 0..3 {
            let p = SamplingParams { epsilon: 0.5, c: 3.0, seed, z: None };
            runs += 1;
            if sampling_rp(g, s, t, &p).unwrap().result != oracle.result {
                failures.push(format!("sampling seed {seed} differs on `{}`", c.describe()));
            }
            for z in [2, 4, 8] {
                runs += 1;
                let (run, stats) = recursive_rp_with_stats(g, s, t, &p.with_z(z)).unwrap();
                if run.result != oracle.result {
                    failures.push(format!("recursive Z {z} seed {seed} differs on `{}`", c.describe()));
                }
                let total: usize = stats.per_level.iter().sum();
                worst_ratio = worst_ratio.max(total as f64 / (c.n * c.n) as f64);
                max_levels = max_levels.max(stats.per_level.len());
                if total > candidate_budget(c.n) || total != run.candidates.len() {
                    over_budget.push(format!("|L| = {total} for Z {z} seed {seed} on `{}`", c.describe()));
                }
            }
        }
    }
    let ok2 = line(
        2,
        "sampling (eps 0.5, C 3) and recursive (Z 2, 4, 8), 3 seeds each, equal the oracle",
        "exact, zero mismatches",
        failures.is_empty(),
        &format!(
            "{} instances, {runs} runs, {} mismatches, {:.1} s{}",
            corpus.len(),
            failures.len(),
            start.elapsed().as_secs_f64(),
            first_failures(&failures)
        ),
    );
    let ok6 = line(
        6,
        "recursive candidate list, summed over levels, stays within 32 n^2",
        "|L| <= 32 n^2",
        over_budget.is_empty(),
        &format!(
            "max |L|/n^2 = {worst_ratio:.3}, deepest run {max_levels} levels{}",
            first_failures(&over_budget)
        ),
    );
    (ok2, ok6)
}

fn random_matrix(r: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> MinPlusMatrix {
    MinPlusMatrix::from_fn(rows, cols, |_, _| {
        if r.gen_bool(0.2) {
            Dist::INF
        } else {
            Dist::finite(r.gen_range(-bound..=bound))
        }
    })
}

/// Textbook Bellman-Ford over the edge list.
fn bellman_ford(g: &Graph, source: usize) -> Vec<Option<i64>> {
    let edges: Vec<_> = g.edges().collect();
    let mut d = vec![None; g.n()];
    d[source] = Some(0);
    for _ in 0..g.n() {
        for &(u, v, w) in &edges {
            if let Some(du) = d[u] {
                if d[v].map_or(true, |dv| du + w < dv) {
                    d[v] = Some(du + w);
                }
            }
        }
    }
    d
}

fn kernel() -> Verdict {
    let mut r = ChaCha8Rng::seed_from_u64(3);
    let mut product_failures = 0;
    for _ in 0..1000 {
        let (rows, inner, cols) = (r.gen_range(1..=16), r.gen_range(1..=16), r.gen_range(1..=16));
        let bound = r.gen_range(1..=12);
        let a = random_matrix(&mut r, rows, inner, bound);
        let b = random_matrix(&mut r, inner, cols, bound);
        if minplus_via_scaling(&a, &b, bound).unwrap() != minplus_product(&a, &b).unwrap() {
            product_failures += 1;
        }
    }
    let mut closure_failures = 0;
    for i in 0..200u64 {
        let n = r.gen_range(2..=20);
        let mode = MODES[i as usize % 2];
        let inst = generate_graph(n, PROBS[i as usize % 3], 8, mode, 10_000 + i).unwrap();
        let d = minplus_closure(&MinPlusMatrix::from_graph(&inst.graph)).unwrap();
        for s in 0..n {
            if d.row(s).map(Dist::value).collect::<Vec<_>>() != bellman_ford(&inst.graph, s) {
                closure_failures += 1;
                break;
            }
        }
    }
    line(
        3,
        "scaling product equals min-plus product; closure equals per-source Bellman-Ford",
        "exact",
        product_failures == 0 && closure_failures == 0,
        &format!(
            "1000 products (dims <= 16, bound <= 12): {product_failures} mismatches; \
             200 closures (n <= 20): {closure_failures} mismatches"
        ),
    )
}

fn capping() -> Verdict {
    let mut failures = 0;
    let mut checked = 0usize;
    for i in 0..200u64 {
        let n = 2 + (i as usize * 13) % 29;
        let m = BOUNDS[i as usize % 3];
        let inst = generate_graph(n, PROBS[(i / 3) as usize % 3], m, MODES[i as usize % 2], 20_000 + i).unwrap();
        let g = &inst.graph;
        let truth: Vec<_> = (0..n).map(|s| bellman_ford(g, s)).collect();
        let sqrt_n = (n as f64).sqrt().ceil() as i64;
        for threshold in [1, m, 2 * m * sqrt_n, n as i64 * m] {
            let d = bounded_distance_matrix(g, Dist::finite(threshold)).unwrap();
            for s in 0..n {
                for v in 0..n {
                    if let Some(x) = truth[s][v].filter(|&x| x <= threshold) {
                        checked += 1;
                        if d.get(s, v) != Dist::finite(x) {
                            failures += 1;
                        }
                    }
                }
            }
        }
    }
    line(
        4,
        "bounded distances are exact below thresholds 1, M, 2M ceil(sqrt n), nM",
        "exact",
        failures == 0,
        &format!("200 graphs, {checked} short pairs checked, {failures} wrong"),
    )
}

fn hitting_set() -> Verdict {
    let n = 256;
    let pool: Vec<usize> = (0..n).collect();
    let mut below = 0;
    let mut worst: f64 = 1.0;
    let mut size = 0;
    for seed in 0..20u64 {
        let params = SamplingParams { epsilon: 0.5, c: 2.0, seed, z: None };
        let b = sample_hitting_set(&pool, n, &params, 256);
        size = b.len();
        let mut member = vec![false; n];
        for &v in &b {
            member[v] = true;
        }
        let mut r = ChaCha8Rng::seed_from_u64(1_000 + seed);
        let hits = (0..1000)
            .filter(|_| index::sample(&mut r, n, 16).iter().any(|v| member[v]))
            .count();
        let rate = hits as f64 / 1000.0;
        worst = worst.min(rate);
        if rate < 0.99 {
            below += 1;
        }
    }
    line(
        5,
        "sampled hub set meets random 16-node sequences (n 256, eps 0.5, C 2, N 256)",
        ">= 99.0% per seed, at most 1 of 20 seeds below",
        below <= 1,
        &format!("|B| = {size} of 256, worst seed {:.1}%, {below} seeds below 99%", worst * 100.0),
    )
}

fn sweep() -> Verdict {
    let mut r = ChaCha8Rng::seed_from_u64(7);
    let mut failures = 0;
    let mut largest = 0;
    for _ in 0..500 {
        let len = r.gen_range(2..=200);
        let size = r.gen_range(0..=10_000);
        largest = largest.max(size);
        let l: CandidateList = (0..size)
            .map(|_| {
                let j = r.gen_range(1..len);
                let k = r.gen_range(j + 1..=len);
                DetourCandidate::new(j, k, r.gen_range(-1000..1000))
            })
            .collect();
        if sweep_assign(&l, len) != direct_assign(&l, len) {
            failures += 1;
        }
    }
    line(
        7,
        "sorted successor sweep equals the direct per-edge minimum",
        "exact",
        failures == 0,
        &format!("500 lists (|L| <= {largest}, path length <= 200), {failures} mismatches"),
    )
}

/// Shortest simple `path[i]` -> `path[j]` paths whose interior avoids `P`,
/// by exhaustive search; the path edge itself is not a detour.
fn brute_detours(g: &Graph, path: &[usize]) -> Vec<Vec<Option<i64>>> {
    fn dfs(
        g: &Graph,
        pos: &[Option<usize>],
        start: usize,
        u: usize,
        len: i64,
        seen: &mut [bool],
        best: &mut [Option<i64>],
    ) {
        for &(v, w) in g.out_edges(u) {
            match pos[v] {
                Some(j) => {
                    let direct = pos[u] == Some(start) && j == start + 1;
                    if j != start && !direct && best[j].map_or(true, |b| len + w < b) {
                        best[j] = Some(len + w);
                    }
                }
                None if !seen[v] => {
                    seen[v] = true;
                    dfs(g, pos, start, v, len + w, seen, best);
                    seen[v] = false;
                }
                None => {}
            }
        }
    }
    let mut pos = vec![None; g.n()];
    for (i, &v) in path.iter().enumerate() {
        pos[v] = Some(i);
    }
    (0..path.len())
        .map(|i| {
            let mut seen = vec![false; g.n()];
            seen[path[i]] = true;
            let mut best = vec![None; path.len()];
            dfs(g, &pos, i, path[i], 0, &mut seen, &mut best);
            best
        })
        .collect()
}

fn detours() -> Verdict {
    let mut failures = Vec::new();
    let mut graphs = 0;
    let mut edges = 0;
    for i in 0..150u64 {
        let n = 3 + (i as usize % 8);
        let inst = generate_graph(n, PROBS[i as usize % 3], 5, MODES[(i / 3) as usize % 2], 30_000 + i).unwrap();
        let g = &inst.graph;
        let oracle = oracle_rp(g, inst.s, inst.t, false).unwrap();
        let p = &oracle.path;
        let pt = prefix_distances(p);
        let d = brute_detours(g, p.nodes());
        let mut best = vec![Dist::INF; p.len() - 1];
        for j in 0..p.len() {
            for k in j + 1..p.len() {
                if let Some(len) = d[j][k] {
                    let c = candidate_from_detour(j + 1, k + 1, len, &pt);
                    for e in &mut best[j..k] {
                        *e = (*e).min(Dist::finite(c.d));
                    }
                }
            }
        }
        graphs += 1;
        edges += best.len();
        if best != oracle.result.dist {
            failures.push(format!("n {n}, seed {}", 30_000 + i));
        }
    }
    line(
        8,
        "brute-force detours combined with path prefixes reproduce the oracle",
        "exact",
        failures.is_empty() && graphs >= 100,
        &format!("{graphs} graphs (n <= 10), {edges} path edges, {} mismatches{}", failures.len(), first_failures(&failures)),
    )
}

fn scaling_smoke() -> Verdict {
    let inst = generate_graph(1000, 0.05, 10, WeightMode::Nonnegative, 1000).unwrap();
    let start = Instant::now();
    let (run, stats) = recursive_rp_with_stats(&inst.graph, inst.s, inst.t, &SamplingParams::default()).unwrap();
    let recursive_s = start.elapsed().as_secs_f64();
    let oracle = oracle_rp(&inst.graph, inst.s, inst.t, false).unwrap();
    line(
        9,
        "recursive completes on n 1000, p 0.05, M 10 and agrees with the oracle",
        "exact; timing informational",
        run.result == oracle.result,
        &format!(
            "|P| = {} edges, |L| = {}, {} levels, {recursive_s:.1} s",
            run.path.len() - 1,
            run.candidates.len(),
            stats.per_level.len()
        ),
    )
}

fn main() {
    let start = Instant::now();
    let corpus = corpus();
    let (v2, v6) = randomized_equivalence(&corpus);
    let mut verdicts = vec![
        deterministic_equivalence(&corpus),
        v2,
        kernel(),
        capping(),
        hitting_set(),
        v6,
        sweep(),
        detours(),
        scaling_smoke(),
    ];
    verdicts.sort_by_key(|v| v.0);
    for (_, _, text) in &verdicts {
        println!("{text}");
    }
    let passed = verdicts.iter().filter(|v| v.1).count();
    println!(
        "acceptance: {passed}/{} criteria passed in {:.1} s",
        verdicts.len(),
        start.elapsed().as_secs_f64()
    );
    if passed != verdicts.len() {
        std::process::exit(1);
    }
}
