//! Bounds and solvers for the tessellation number `T(G)`.

mod bounds;
mod decide;
mod exact;
mod greedy;
mod maxpoly;
pub mod setcover;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

pub use bounds::{bounds, lower_bound, upper_bound_via_clique_coloring, BoundsReport, LowerReason};
pub use decide::{decide_k_tessellable, decide_k_tessellable_with};
pub use exact::{tessellation_number, tessellation_number_direct, tessellation_number_with};
pub use greedy::{greedy_cover, greedy_cover_with_cap};
pub use maxpoly::{maximal_polygon_check, maximal_polygon_check_with, MaxPolygonOutcome};

use crate::par::Execution;
use crate::tessellation::TessellationCover;

/// How a cover was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exact,
    Greedy,
    UpperBoundConstruction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverResult {
    pub t_number: usize,
    pub witness: TessellationCover,
    pub method: Method,
}

/// Scheduling and time limits for the exact search. The default spreads
/// large searches over the thread pool; [`SolveOptions::canonical`] forces
/// sequential search, whose witness is the first one in search order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveOptions {
    pub execution: Execution,
    pub deadline: Option<Instant>,
}

impl SolveOptions {
    pub fn canonical() -> Self {
        SolveOptions {
            execution: Execution::Sequential,
            deadline: None,
        }
    }

    pub fn with_timeout(mut self, limit: Duration) -> Self {
        self.deadline = Some(Instant::now() + limit);
        self
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }

    pub(crate) fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}
