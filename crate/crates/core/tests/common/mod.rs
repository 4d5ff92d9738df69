//! Graph generators and brute-force oracles shared by the integration tests.
//! None of the oracles call into the library's shortest-path code.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rpaths_core::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random digraph on `n` nodes with an `0 -> ... -> n-1` backbone through a
/// random subset of the other nodes. In mixed mode weights are drawn above
/// `phi(v) - phi(u)` for a potential `phi` in `[0, M]`, so every cycle has
/// nonnegative length.
pub fn random_graph(seed: u64, n: usize, prob: f64, m: i64, mixed: bool) -> Graph {
    assert!(n >= 2);
    let mut r = rng(seed);
    let phi: Vec<i64> = (0..n).map(|_| if mixed { r.gen_range(0..=m) } else { 0 }).collect();
    let weight = |r: &mut ChaCha8Rng, u: usize, v: usize| {
        let lo = if mixed { (phi[v] - phi[u]).max(-m) } else { 0 };
        r.gen_range(lo..=m)
    };
    let mut edges = Vec::new();
    let mut middle: Vec<usize> = (1..n - 1).collect();
    middle.shuffle(&mut r);
    let keep = r.gen_range(0..=middle.len());
    let mut backbone = vec![0];
    backbone.extend_from_slice(&middle[..keep]);
    backbone.push(n - 1);
    for w in backbone.windows(2) {
        let x = weight(&mut r, w[0], w[1]);
        edges.push((w[0], w[1], x));
    }
    for u in 0..n {
        for v in 0..n {
            if u != v && r.gen_bool(prob) {
                let x = weight(&mut r, u, v);
                edges.push((u, v, x));
            }
        }
    }
    Graph::from_edges(n, m, edges).expect("generated graph is valid")
}

/// Random digraph whose extra edges only join nodes at most four ids apart,
/// while a cheap backbone runs through about half of the nodes in id order.
/// Shortest paths are long and most detours are short, with occasional long
/// ones through the skipped nodes. Weights follow the same potential rule as
/// [`random_graph`].
pub fn long_path_graph(seed: u64, n: usize, prob: f64, m: i64, mixed: bool) -> Graph {
    assert!(n >= 2);
    let mut r = rng(seed);
    let phi: Vec<i64> = (0..n).map(|_| if mixed { r.gen_range(0..=m) } else { 0 }).collect();
    let floor = |u: usize, v: usize| if mixed { (phi[v] - phi[u]).max(-m) } else { 0 };
    let mut backbone = vec![0];
    backbone.extend((1..n - 1).filter(|_| r.gen_bool(0.5)));
    backbone.push(n - 1);
    let mut edges = Vec::new();
    for w in backbone.windows(2) {
        let lo = floor(w[0], w[1]);
        let x = r.gen_range(lo..=(lo + 1).min(m));
        edges.push((w[0], w[1], x));
    }
    for u in 0..n {
        for v in u.saturating_sub(4)..(u + 5).min(n) {
            if u != v && r.gen_bool(prob) {
                let x = r.gen_range(floor(u, v)..=m);
                edges.push((u, v, x));
            }
        }
    }
    Graph::from_edges(n, m, edges).expect("generated graph is valid")
}

/// Both generators, picked by `long`.
pub fn any_graph(seed: u64, n: usize, prob: f64, m: i64, mixed: bool, long: bool) -> Graph {
    if long {
        long_path_graph(seed, n, prob, m, mixed)
    } else {
        random_graph(seed, n, prob, m, mixed)
    }
}

/// Textbook Bellman-Ford over the edge list: `n - 1` full passes. Returns
/// `None` entries for unreachable nodes and panics on a negative cycle.
pub fn bellman_ford(n: usize, edges: &[(usize, usize, i64)], source: usize) -> Vec<Option<i64>> {
    let mut d: Vec<Option<i64>> = vec![None; n];
    d[source] = Some(0);
    for _ in 0..n {
        let mut changed = false;
        for &(u, v, w) in edges {
            if let Some(du) = d[u] {
                if d[v].map_or(true, |dv| du + w < dv) {
                    d[v] = Some(du + w);
                    changed = true;
                }
            }
        }
        if !changed {
            return d;
        }
    }
    panic!("negative cycle reachable from {source}");
}

pub fn edge_list(g: &Graph) -> Vec<(usize, usize, i64)> {
    g.edges().collect()
}

/// Replacement distances by deleting each path edge and rerunning the
/// textbook Bellman-Ford.
pub fn brute_replacements(g: &Graph, path: &[usize]) -> Vec<Option<i64>> {
    let all = edge_list(g);
    let (s, t) = (path[0], *path.last().unwrap());
    path.windows(2)
        .map(|e| {
            let rest: Vec<_> = all.iter().copied().filter(|&(u, v, _)| (u, v) != (e[0], e[1])).collect();
            bellman_ford(g.n(), &rest, s)[t]
        })
        .collect()
}

/// Shortest detour lengths by exhaustive DFS: `out[i][j]` is the minimum
/// length of a simple path from `path[i]` to `path[j]` whose interior avoids
/// every path node, excluding the path edge `path[i] -> path[i+1]` itself.
pub fn brute_detours(g: &Graph, path: &[usize]) -> Vec<Vec<Option<i64>>> {
    let n = g.n();
    let k = path.len();
    let mut pos = vec![None; n];
    for (i, &v) in path.iter().enumerate() {
        pos[v] = Some(i);
    }
    let mut out = vec![vec![None; k]; k];
    for i in 0..k {
        let mut seen = vec![false; n];
        seen[path[i]] = true;
        let mut best = vec![None; k];
        dfs(g, path, &pos, i, path[i], 0, &mut seen, &mut best, true);
        out[i] = best;
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    g: &Graph,
    path: &[usize],
    pos: &[Option<usize>],
    start: usize,
    u: usize,
    len: i64,
    seen: &mut [bool],
    best: &mut [Option<i64>],
    first: bool,
) {
    for &(v, w) in g.out_edges(u) {
        if let Some(j) = pos[v] {
            if first && j == start + 1 {
                continue;
            }
            if j != start && best[j].map_or(true, |b| len + w < b) {
                best[j] = Some(len + w);
            }
            continue;
        }
        if !seen[v] {
            seen[v] = true;
            dfs(g, path, pos, start, v, len + w, seen, best, false);
            seen[v] = false;
        }
    }
}

/// Minimum length over all simple `s`-`t` paths, by exhaustive DFS.
pub fn brute_shortest(g: &Graph, s: usize, t: usize) -> Option<i64> {
    fn go(g: &Graph, u: usize, t: usize, len: i64, seen: &mut [bool], best: &mut Option<i64>) {
        if u == t {
            *best = Some(best.map_or(len, |b| b.min(len)));
            return;
        }
        for &(v, w) in g.out_edges(u) {
            if !seen[v] {
                seen[v] = true;
                go(g, v, t, len + w, seen, best);
                seen[v] = false;
            }
        }
    }
    let mut seen = vec![false; g.n()];
    seen[s] = true;
    let mut best = None;
    go(g, s, t, 0, &mut seen, &mut best);
    best
}
