use crate::detour::{build_split_graph, candidate_from_detour, CandidateList};
use crate::minplus::{minplus_closure, MinPlusMatrix};
use crate::{Graph, RpError};

use super::{candidate_budget, finish, prepare, RpRun};

/// Replacement paths through one all-pairs computation on the split graph:
/// the distance from `v_i^out` to `v_j^in` is the best detour from `v_i` to
/// `v_j`.
pub fn apsp_rp(g: &Graph, s: usize, t: usize) -> Result<RpRun, RpError> {
    let (path, pt) = prepare(g, s, t)?;
    let split = build_split_graph(g, &path);
    let dist = minplus_closure(&MinPlusMatrix::from_graph(&split.graph))?;
    let k = path.len();
    let mut l = CandidateList::with_budget(candidate_budget(g.n()));
    for i in 0..k {
        for j in i + 1..k {
            if let Some(len) = dist.get(split.out_of[i], split.in_of[j]).value() {
                l.push(candidate_from_detour(i + 1, j + 1, len, &pt));
            }
        }
    }
    let count = l.len();
    Ok(finish(path, l, alloc::vec![count]))
}
