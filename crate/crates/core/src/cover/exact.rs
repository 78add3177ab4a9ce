use super::bounds::{lower_bound, upper_bound_via_clique_coloring};
use super::decide::decide_k_tessellable_with;
use super::{CoverResult, Method, SolveOptions};
use crate::error::SolveError;
use crate::graph::{bit, Graph};
use crate::tessellation::{Tessellation, TessellationCover};

/// Exact `T(G)` with default scheduling.
pub fn tessellation_number(g: &Graph) -> Result<CoverResult, SolveError> {
    tessellation_number_with(g, &SolveOptions::default())
}

/// Exact `T(G)`, solving each connected component separately: `T` of a
/// disjoint union is the maximum over its parts, and the i-th tessellations
/// of the parts combine into one tessellation of the whole graph.
pub fn tessellation_number_with(g: &Graph, opts: &SolveOptions) -> Result<CoverResult, SolveError> {
    let parts: Vec<_> = g
        .components()
        .into_iter()
        .filter(|&c| c.count_ones() > 1)
        .collect();
    if parts.len() <= 1 {
        return tessellation_number_direct(g, opts);
    }
    let mut solved = Vec::with_capacity(parts.len());
    for &part in &parts {
        let (sub, map) = g.induced(part);
        match tessellation_number_direct(&sub, opts) {
            Ok(r) => solved.push((map, r.witness)),
            Err(SolveError::Timeout { lower, .. }) => {
                return Err(timeout(g, lower.max(lower_bound(g).0)));
            }
            Err(e) => return Err(e),
        }
    }
    let t = solved.iter().map(|(_, c)| c.len()).max().unwrap_or(0);
    let tessellations = (0..t)
        .map(|i| {
            let polys = solved.iter().flat_map(|(map, cover)| {
                cover
                    .tessellations
                    .get(i)
                    .into_iter()
                    .flat_map(move |tess| {
                        tess.polygons()
                            .iter()
                            .map(move |p| p.vertices().iter().fold(0, |m, &v| m | bit(map[v])))
                    })
            });
            Tessellation::from_masks(g.n(), polys)
        })
        .collect();
    Ok(CoverResult {
        t_number: t,
        witness: TessellationCover::new(tessellations),
        method: Method::Exact,
    })
}

/// Exact `T(G)` by a single search over the whole graph: `k` runs upward
/// from [`lower_bound`] until the decision succeeds.
pub fn tessellation_number_direct(
    g: &Graph,
    opts: &SolveOptions,
) -> Result<CoverResult, SolveError> {
    let (lower, _) = lower_bound(g);
    for k in lower.. {
        match decide_k_tessellable_with(g, k, opts) {
            Ok(Some(witness)) => {
                debug_assert_eq!(witness.len(), k);
                return Ok(CoverResult {
                    t_number: witness.len(),
                    witness,
                    method: Method::Exact,
                });
            }
            Ok(None) => continue,
            Err(SolveError::DecisionTimeout { .. }) => return Err(timeout(g, k)),
            Err(e) => return Err(e),
        }
    }
    unreachable!("one layer per edge always suffices")
}

fn timeout(g: &Graph, lower: usize) -> SolveError {
    let upper = upper_bound_via_clique_coloring(g)
        .map(|c| c.len())
        .unwrap_or_else(|_| g.edge_count());
    SolveError::Timeout { lower, upper }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::tessellation::is_valid_cover;

    #[test]
    fn family_values() {
        for l in 2..=6 {
            assert_eq!(
                tessellation_number(&families::windmill(l, 3).unwrap())
                    .unwrap()
                    .t_number,
                l
            );
        }
        for n in 2..=4 {
            assert_eq!(
                tessellation_number(&families::extended_wheel(n).unwrap())
                    .unwrap()
                    .t_number,
                3
            );
        }
        assert_eq!(
            tessellation_number(&families::wheel(6).unwrap())
                .unwrap()
                .t_number,
            3
        );
        assert_eq!(
            tessellation_number(&families::petersen()).unwrap().t_number,
            4
        );
    }

    #[test]
    fn edgeless_is_zero() {
        let r = tessellation_number(&families::edgeless(5).unwrap()).unwrap();
        assert_eq!(r.t_number, 0);
        assert!(r.witness.is_empty());
        assert_eq!(r.method, Method::Exact);
    }

    #[test]
    fn disjoint_union_takes_the_max() {
        // triangle + star(3) + isolated vertex: T = max(1, 3)
        let g = Graph::from_edges(9, [(0, 1), (1, 2), (0, 2), (3, 6), (4, 6), (5, 6)]).unwrap();
        let opts = SolveOptions::canonical();
        let split = tessellation_number_with(&g, &opts).unwrap();
        let whole = tessellation_number_direct(&g, &opts).unwrap();
        assert_eq!(split.t_number, 3);
        assert_eq!(whole.t_number, 3);
        assert_eq!(is_valid_cover(&g, &split.witness), Ok(()));
    }
}
