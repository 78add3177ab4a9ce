use super::bounds::{lower_bound, upper_bound_via_clique_coloring};
use super::{CoverResult, Method};
use crate::enumerate::{restricted_tessellations, DEFAULT_CAP};
use crate::error::SolveError;
use crate::graph::Graph;
use crate::tessellation::{EdgeIndex, TessellationCover};

/// Greedy set cover over the restricted tessellation stream.
pub fn greedy_cover(g: &Graph) -> Result<CoverResult, SolveError> {
    greedy_cover_with_cap(g, DEFAULT_CAP)
}

/// Each round takes the tessellation covering the most uncovered edges;
/// ties go to the lexicographically least canonical form. A truncated
/// stream is only an error if it leaves edges uncovered.
///
/// Plain greedy can exceed `χ(K(G))`: on the path `4-1-0-2-3` it first
/// takes the matching `{1,4},{2,3}` and then needs two more. When the greedy
/// cover is above the lower bound, it is compared with the coloring cover of
/// [`upper_bound_via_clique_coloring`], whose tessellations also lie in the
/// restricted family, and the smaller one is returned.
pub fn greedy_cover_with_cap(g: &Graph, cap: usize) -> Result<CoverResult, SolveError> {
    let greedy = plain_greedy(g, cap)?;
    if greedy.len() <= lower_bound(g).0 {
        return Ok(result(greedy));
    }
    match upper_bound_via_clique_coloring(g) {
        Ok(upper) if upper.len() < greedy.len() => Ok(result(upper)),
        _ => Ok(result(greedy)),
    }
}

fn result(witness: TessellationCover) -> CoverResult {
    CoverResult {
        t_number: witness.len(),
        witness,
        method: Method::Greedy,
    }
}

fn plain_greedy(g: &Graph, cap: usize) -> Result<TessellationCover, SolveError> {
    let index = EdgeIndex::new(g);
    let stream = restricted_tessellations(g, Some(cap));
    let mut family: Vec<_> = stream
        .items
        .into_iter()
        .map(|t| (index.tessellation_edges(&t), t))
        .collect();
    // canonical order, so the first maximum found is the least one
    family.sort_by(|a, b| a.1.cmp(&b.1));

    let mut uncovered = index.full();
    let mut chosen = Vec::new();
    while uncovered.count_ones(..) > 0 {
        let best = family
            .iter()
            .enumerate()
            .map(|(i, (edges, _))| (edges.intersection(&uncovered).count(), i))
            .fold(None::<(usize, usize)>, |acc, (gain, i)| match acc {
                Some((g0, _)) if g0 >= gain => acc,
                _ => Some((gain, i)),
            });
        match best {
            Some((gain, i)) if gain > 0 => {
                uncovered.difference_with(&family[i].0);
                chosen.push(family[i].1.clone());
            }
            _ => {
                return Err(SolveError::Incomplete {
                    emitted: family.len(),
                    uncovered: uncovered.count_ones(..),
                })
            }
        }
    }
    Ok(TessellationCover::new(chosen))
}
