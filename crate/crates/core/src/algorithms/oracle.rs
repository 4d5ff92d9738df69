use alloc::vec::Vec;

use crate::detour::ReplacementResult;
use crate::graph::{sssp_without, Path};
use crate::{Graph, RpError};

use super::prepare;

/// Oracle output: the path, its replacement distances and optionally one
/// witness replacement path per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleOutput {
    pub path: Path,
    pub result: ReplacementResult,
    pub witnesses: Option<Vec<Option<Vec<usize>>>>,
}

/// Deletes each path edge in turn and recomputes the `s`-`t` distance from
/// scratch.
pub fn oracle_rp(g: &Graph, s: usize, t: usize, with_paths: bool) -> Result<OracleOutput, RpError> {
    let (path, _) = prepare(g, s, t)?;
    let mut result = ReplacementResult::all_infinite(path.len() - 1);
    let mut witnesses = with_paths.then(Vec::new);
    for (i, e) in path.nodes().windows(2).enumerate() {
        let tree = sssp_without(g, s, Some((e[0], e[1])))?;
        result.dist[i] = tree.dist[t];
        if let Some(w) = witnesses.as_mut() {
            w.push(tree.path_to(t));
        }
    }
    Ok(OracleOutput { path, result, witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::Dist;

    #[test]
    fn triangle_detour() {
        let g = Graph::from_edges(3, 1, [(0, 1, 1), (0, 2, 1), (2, 1, 1)]).unwrap();
        let out = oracle_rp(&g, 0, 1, true).unwrap();
        assert_eq!(out.path.nodes(), &[0, 1]);
        assert_eq!(out.result.dist, vec![Dist::finite(2)]);
        assert_eq!(out.witnesses.unwrap(), vec![Some(vec![0, 2, 1])]);
    }

    #[test]
    fn bare_path_has_no_replacements() {
        let g = Graph::from_edges(4, 1, (0..3).map(|i| (i, i + 1, 1))).unwrap();
        let out = oracle_rp(&g, 0, 3, true).unwrap();
        assert_eq!(out.result, ReplacementResult::all_infinite(3));
        assert_eq!(out.witnesses.unwrap(), vec![None, None, None]);
    }

    #[test]
    fn single_node_path() {
        let g = Graph::from_edges(2, 1, [(0, 1, 1)]).unwrap();
        let out = oracle_rp(&g, 1, 1, false).unwrap();
        assert!(out.result.is_empty());
    }

    #[test]
    fn errors_propagate() {
        let g = Graph::from_edges(3, 1, [(0, 1, 1)]).unwrap();
        assert_eq!(oracle_rp(&g, 0, 2, false).unwrap_err(), RpError::Unreachable { s: 0, t: 2 });
        let cyc = Graph::from_edges(3, 2, [(0, 1, 1), (1, 2, -2), (2, 1, 1)]).unwrap();
        assert_eq!(oracle_rp(&cyc, 0, 2, false).unwrap_err(), RpError::NegativeCycle);
    }
}
