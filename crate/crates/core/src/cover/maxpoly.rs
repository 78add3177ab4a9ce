//! Does some minimum cover use a maximal clique as a polygon in every
//! tessellation? This is an open question in general, so the check only
//! reports what it finds.

use super::setcover::{cover_with_at_most, SetCoverOutcome};
use super::{tessellation_number_with, SolveOptions};
use crate::cliques::maximal_cliques;
use crate::enumerate::{enumerate_all_tessellations, restricted_tessellations, DEFAULT_CAP};
use crate::error::SolveError;
use crate::graph::Graph;
use crate::tessellation::{EdgeIndex, TessellationCover};

/// Graphs up to this order get an exhaustive fallback when the restricted
/// stream is truncated.
const EXHAUSTIVE_MAX_N: usize = 8;
const NODE_BUDGET: u64 = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MaxPolygonOutcome {
    /// A minimum cover whose tessellations each contain a maximal clique.
    Yes(TessellationCover),
    /// No minimum cover has that property.
    No {
        t_number: usize,
    },
    Unknown {
        reason: String,
    },
}

pub fn maximal_polygon_check(g: &Graph) -> Result<MaxPolygonOutcome, SolveError> {
    maximal_polygon_check_with(g, &SolveOptions::default())
}

pub fn maximal_polygon_check_with(
    g: &Graph,
    opts: &SolveOptions,
) -> Result<MaxPolygonOutcome, SolveError> {
    let t = match tessellation_number_with(g, opts) {
        Ok(r) => r.t_number,
        Err(SolveError::Timeout { .. }) => {
            return Ok(MaxPolygonOutcome::Unknown {
                reason: "T(G) search timed out".into(),
            })
        }
        Err(e) => return Err(e),
    };
    if t == 0 {
        return Ok(MaxPolygonOutcome::Yes(TessellationCover::default()));
    }

    let stream = restricted_tessellations(g, Some(DEFAULT_CAP));
    let family = if !stream.truncated {
        stream.items
    } else if g.n() <= EXHAUSTIVE_MAX_N {
        let maximal = maximal_cliques(g);
        enumerate_all_tessellations(g, usize::MAX)
            .items
            .into_iter()
            .filter(|t| maximal.iter().any(|c| t.contains_polygon(c)))
            .collect()
    } else {
        return Ok(MaxPolygonOutcome::Unknown {
            reason: format!("more than {DEFAULT_CAP} restricted tessellations"),
        });
    };

    let index = EdgeIndex::new(g);
    let sets: Vec<_> = family.iter().map(|t| index.tessellation_edges(t)).collect();
    Ok(
        match cover_with_at_most(&sets, &index.full(), t, Some(NODE_BUDGET)) {
            SetCoverOutcome::Found(ids) => {
                let mut chosen: Vec<_> = ids.into_iter().map(|i| family[i].clone()).collect();
                chosen.sort();
                MaxPolygonOutcome::Yes(TessellationCover::new(chosen))
            }
            SetCoverOutcome::Infeasible => MaxPolygonOutcome::No { t_number: t },
            SetCoverOutcome::BudgetExhausted => MaxPolygonOutcome::Unknown {
                reason: format!("set-cover search exceeded {NODE_BUDGET} nodes"),
            },
        },
    )
}
