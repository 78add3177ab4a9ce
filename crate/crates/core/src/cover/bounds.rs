use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::cliques::{clique_graph, maximal_clique_masks};
use crate::coloring::chromatic_number;
use crate::error::GraphError;
use crate::graph::{Graph, VertexSet};
use crate::tessellation::{Tessellation, TessellationCover};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerReason {
    Edgeless,
    CliqueUnion,
    BipartiteCliqueGraph,
    NonBipartiteCliqueGraph,
    LocalDegree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub lower: usize,
    pub upper: usize,
    pub lower_reason: LowerReason,
    pub upper_witness: TessellationCover,
}

// Two-colours the intersection graph of `cliques` without materialising it.
fn intersection_graph_is_bipartite(cliques: &[VertexSet]) -> bool {
    let k = cliques.len();
    let mut side = vec![u8::MAX; k];
    for root in 0..k {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            for j in 0..k {
                if j == i || cliques[i] & cliques[j] == 0 {
                    continue;
                }
                if side[j] == u8::MAX {
                    side[j] = 1 - side[i];
                    queue.push_back(j);
                } else if side[j] == side[i] {
                    return false;
                }
            }
        }
    }
    true
}

/// Largest of the structural bound (edgeless 0, clique union 1, bipartite
/// clique graph 2, otherwise 3) and the local bound
/// `max_v ⌈deg(v) / (ω_v - 1)⌉`, where `ω_v` is the largest clique through `v`.
pub fn lower_bound(g: &Graph) -> (usize, LowerReason) {
    if g.edge_count() == 0 {
        return (0, LowerReason::Edgeless);
    }
    let structural = if g.components().into_iter().all(|c| g.is_clique(c)) {
        (1, LowerReason::CliqueUnion)
    } else if intersection_graph_is_bipartite(&maximal_clique_masks(g)) {
        (2, LowerReason::BipartiteCliqueGraph)
    } else {
        (3, LowerReason::NonBipartiteCliqueGraph)
    };
    let omega = g.local_clique_numbers();
    let local = (0..g.n())
        .filter(|&v| g.degree(v) > 0)
        .map(|v| g.degree(v).div_ceil(omega[v] - 1))
        .max()
        .unwrap_or(0);
    if local > structural.0 {
        (local, LowerReason::LocalDegree)
    } else {
        structural
    }
}

/// One tessellation per colour class of an optimal colouring of `K(G)`:
/// the class's cliques are pairwise disjoint, and the remaining vertices
/// become singletons. Edgeless graphs get the empty cover.
pub fn upper_bound_via_clique_coloring(g: &Graph) -> Result<TessellationCover, GraphError> {
    if g.edge_count() == 0 {
        return Ok(TessellationCover::default());
    }
    let k = clique_graph(g)?;
    let masks = k.clique_masks();
    let (_, coloring) = chromatic_number(&k.base);
    let mut classes = vec![Vec::new(); coloring.colors_used];
    for (i, &c) in coloring.assignment.iter().enumerate() {
        classes[c].push(masks[i]);
    }
    Ok(TessellationCover::new(
        classes
            .into_iter()
            .map(|class| Tessellation::from_masks(g.n(), class))
            .collect(),
    ))
}

pub fn bounds(g: &Graph) -> Result<BoundsReport, GraphError> {
    let (lower, lower_reason) = lower_bound(g);
    let upper_witness = upper_bound_via_clique_coloring(g)?;
    Ok(BoundsReport {
        lower,
        upper: upper_witness.len(),
        lower_reason,
        upper_witness,
    })
}
