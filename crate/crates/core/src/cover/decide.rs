//! Exact `k`-tessellability.
//!
//! Every edge is given a layer in `0..k` by backtracking over a fixed edge
//! order. Each layer keeps the polygon of every vertex. Putting `{u,v}` in a
//! layer merges the polygons of `u` and `v`, which is allowed only while the
//! union is a clique; the merge puts every edge inside the union in that
//! layer too, so later edges already covered by some layer are skipped.
//! Layers are opened in first-use order, and once all `k` are open each
//! remaining uncovered edge must still fit in some layer.

use std::sync::atomic::{AtomicBool, Ordering};

use super::SolveOptions;
use crate::error::SolveError;
use crate::graph::{bit, members, Graph, VertexSet};
use crate::par;
use crate::tessellation::{Tessellation, TessellationCover};

/// Below this many edges the search always runs on the calling thread.
const PARALLEL_MIN_EDGES: usize = 24;
/// Frontier size per pool thread before the subtrees are handed out.
const FRONTIER_PER_THREAD: usize = 8;
const DEADLINE_POLL: u64 = 1 << 12;

#[derive(Clone, Debug)]
struct State {
    // poly[layer * n + v] is the polygon of v in that layer
    poly: Vec<VertexSet>,
    used: usize,
    pos: usize,
}

struct Problem<'g> {
    g: &'g Graph,
    n: usize,
    k: usize,
    order: Vec<(usize, usize)>,
}

impl Problem<'_> {
    fn root(&self) -> State {
        let mut poly = Vec::with_capacity(self.k * self.n);
        for _ in 0..self.k {
            poly.extend((0..self.n).map(bit));
        }
        State {
            poly,
            used: 0,
            pos: 0,
        }
    }

    #[inline]
    fn covered(&self, st: &State, u: usize, v: usize) -> bool {
        (0..st.used).any(|l| st.poly[l * self.n + u] & bit(v) != 0)
    }

    #[inline]
    fn mergeable(&self, st: &State, l: usize, u: usize, v: usize) -> bool {
        let a = st.poly[l * self.n + u];
        let b = st.poly[l * self.n + v];
        members(a).all(|x| self.g.neighbors(x) & b == b)
    }

    fn merge(&self, st: &mut State, l: usize, u: usize, v: usize) -> (VertexSet, VertexSet) {
        let base = l * self.n;
        let (a, b) = (st.poly[base + u], st.poly[base + v]);
        for x in members(a | b) {
            st.poly[base + x] = a | b;
        }
        (a, b)
    }

    fn unmerge(&self, st: &mut State, l: usize, (a, b): (VertexSet, VertexSet)) {
        let base = l * self.n;
        for x in members(a) {
            st.poly[base + x] = a;
        }
        for x in members(b) {
            st.poly[base + x] = b;
        }
    }

    fn skip_covered(&self, st: &State, mut pos: usize) -> usize {
        while pos < self.order.len() {
            let (u, v) = self.order[pos];
            if !self.covered(st, u, v) {
                break;
            }
            pos += 1;
        }
        pos
    }

    // With every layer open, each uncovered edge needs a layer it still fits.
    fn forward_ok(&self, st: &State) -> bool {
        if st.used < self.k {
            return true;
        }
        self.order[st.pos..].iter().all(|&(u, v)| {
            self.covered(st, u, v) || (0..self.k).any(|l| self.mergeable(st, l, u, v))
        })
    }

    /// Children of a state in branching order; `Err(())` marks a complete state.
    fn children(&self, st: &State) -> Result<Vec<State>, ()> {
        let pos = self.skip_covered(st, st.pos);
        if pos == self.order.len() {
            return Err(());
        }
        let (u, v) = self.order[pos];
        let mut out = Vec::new();
        for l in 0..(st.used + 1).min(self.k) {
            if self.mergeable(st, l, u, v) {
                let mut child = st.clone();
                self.merge(&mut child, l, u, v);
                child.used = child.used.max(l + 1);
                child.pos = pos + 1;
                if self.forward_ok(&child) {
                    out.push(child);
                }
            }
        }
        Ok(out)
    }

    fn witness(&self, st: &State) -> TessellationCover {
        TessellationCover::new(
            (0..st.used)
                .map(|l| {
                    let layer = &st.poly[l * self.n..(l + 1) * self.n];
                    let polys = (0..self.n)
                        .filter(|&v| layer[v].trailing_zeros() as usize == v)
                        .map(|v| layer[v]);
                    Tessellation::from_masks(self.n, polys)
                })
                .collect(),
        )
    }
}

struct Worker<'p, 'g> {
    problem: &'p Problem<'g>,
    opts: &'p SolveOptions,
    cancel: &'p AtomicBool,
    timed_out: &'p AtomicBool,
    nodes: u64,
}

impl Worker<'_, '_> {
    fn interrupted(&mut self) -> bool {
        self.nodes += 1;
        if self.cancel.load(Ordering::Relaxed) || self.timed_out.load(Ordering::Relaxed) {
            return true;
        }
        if self.nodes.is_multiple_of(DEADLINE_POLL) && self.opts.expired() {
            self.timed_out.store(true, Ordering::Relaxed);
            return true;
        }
        false
    }

    fn dfs(&mut self, st: &mut State) -> bool {
        if self.interrupted() {
            return false;
        }
        let p = self.problem;
        let pos = p.skip_covered(st, st.pos);
        if pos == p.order.len() {
            return true;
        }
        let (u, v) = p.order[pos];
        let (saved_pos, saved_used) = (st.pos, st.used);
        for l in 0..(st.used + 1).min(p.k) {
            if !p.mergeable(st, l, u, v) {
                continue;
            }
            let undo = p.merge(st, l, u, v);
            st.used = saved_used.max(l + 1);
            st.pos = pos + 1;
            if p.forward_ok(st) && self.dfs(st) {
                return true;
            }
            p.unmerge(st, l, undo);
            st.used = saved_used;
            st.pos = saved_pos;
            if self.timed_out.load(Ordering::Relaxed) || self.cancel.load(Ordering::Relaxed) {
                return false;
            }
        }
        false
    }
}

// Edges sorted by decreasing min(ω_u, ω_v), then lexicographically.
fn edge_order(g: &Graph) -> Vec<(usize, usize)> {
    let omega = g.local_clique_numbers();
    let mut edges = g.edges();
    edges.sort_by_key(|&(u, v)| (std::cmp::Reverse(omega[u].min(omega[v])), u, v));
    edges
}

/// Canonical decision: sequential search, no time limit. Returns the first
/// cover with at most `k` tessellations in search order, or `None`.
pub fn decide_k_tessellable(g: &Graph, k: usize) -> Option<TessellationCover> {
    decide_k_tessellable_with(g, k, &SolveOptions::canonical())
        .expect("search without a deadline cannot time out")
}

pub fn decide_k_tessellable_with(
    g: &Graph,
    k: usize,
    opts: &SolveOptions,
) -> Result<Option<TessellationCover>, SolveError> {
    let problem = Problem {
        g,
        n: g.n(),
        k,
        order: edge_order(g),
    };
    if problem.order.is_empty() {
        return Ok(Some(TessellationCover::default()));
    }
    if k == 0 {
        return Ok(None);
    }
    if opts.expired() {
        return Err(SolveError::DecisionTimeout { k });
    }
    let cancel = AtomicBool::new(false);
    let timed_out = AtomicBool::new(false);
    let worker = |mut st: State| {
        let mut w = Worker {
            problem: &problem,
            opts,
            cancel: &cancel,
            timed_out: &timed_out,
            nodes: 0,
        };
        if w.dfs(&mut st) {
            cancel.store(true, Ordering::Relaxed);
            Some(problem.witness(&st))
        } else {
            None
        }
    };

    let found = if opts.execution.is_parallel() && problem.order.len() >= PARALLEL_MIN_EDGES {
        let target = FRONTIER_PER_THREAD * par::current_num_threads();
        let mut frontier = vec![problem.root()];
        let mut complete = None;
        while complete.is_none() && !frontier.is_empty() && frontier.len() < target {
            let mut next = Vec::new();
            for st in &frontier {
                match problem.children(st) {
                    Ok(kids) => next.extend(kids),
                    Err(()) => {
                        complete = Some(problem.witness(st));
                        break;
                    }
                }
            }
            frontier = next;
        }
        match complete {
            Some(c) => Some(c),
            None => par::find_map(opts.execution, frontier, worker),
        }
    } else {
        worker(problem.root())
    };

    if found.is_none() && timed_out.load(Ordering::Relaxed) {
        return Err(SolveError::DecisionTimeout { k });
    }
    Ok(found)
}
