//! Exact vertex coloring, bipartiteness, and exact edge coloring.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::{bit, members, Graph, VertexSet};

/// A proper coloring with color ids `0..colors_used`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub assignment: Vec<usize>,
    pub colors_used: usize,
}

impl Coloring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.assignment.len() == g.n()
            && g.edges()
                .iter()
                .all(|&(u, v)| self.assignment[u] != self.assignment[v])
            && self.assignment.iter().all(|&c| c < self.colors_used)
    }

    /// Vertex masks of each color class.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut out = vec![0; self.colors_used];
        for (v, &c) in self.assignment.iter().enumerate() {
            out[c] |= bit(v);
        }
        out
    }
}

/// Branch-and-bound state for DSATUR. Colors are tried in ascending order
/// and never exceed one more than the largest color used so far.
struct Dsatur<'g> {
    g: &'g Graph,
    color: Vec<Option<usize>>,
    // neighbour_colors[v] bit c set when some neighbour of v has color c
    neighbour_colors: Vec<VertexSet>,
    best: Option<Vec<usize>>,
    best_count: usize,
    lower: usize,
}

impl Dsatur<'_> {
    fn pick(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.color[v].is_none())
            .max_by_key(|&v| (self.neighbour_colors[v].count_ones(), std::cmp::Reverse(v)))
    }

    fn search(&mut self, used: usize) {
        if self.best_count <= self.lower {
            return;
        }
        let Some(v) = self.pick() else {
            self.best_count = used;
            self.best = Some(self.color.iter().map(|c| c.unwrap()).collect());
            return;
        };
        let limit = (used + 1).min(self.best_count - 1);
        for c in 0..limit {
            if self.neighbour_colors[v] & bit(c) != 0 {
                continue;
            }
            self.color[v] = Some(c);
            let touched: Vec<usize> = members(self.g.neighbors(v))
                .filter(|&w| self.neighbour_colors[w] & bit(c) == 0)
                .collect();
            for &w in &touched {
                self.neighbour_colors[w] |= bit(c);
            }
            self.search(used.max(c + 1));
            for &w in &touched {
                self.neighbour_colors[w] &= !bit(c);
            }
            self.color[v] = None;
            if self.best_count <= self.lower {
                return;
            }
        }
    }
}

fn greedy_clique_size(g: &Graph) -> usize {
    let mut best = 0;
    for start in 0..g.n() {
        let mut clique = bit(start);
        let mut cand = g.neighbors(start);
        while cand != 0 {
            let v = members(cand)
                .max_by_key(|&w| (g.neighbors(w) & cand).count_ones())
                .unwrap();
            clique |= bit(v);
            cand &= g.neighbors(v);
        }
        best = best.max(clique.count_ones() as usize);
    }
    best
}

/// Exact chromatic number with a witness coloring.
pub fn chromatic_number(g: &Graph) -> (usize, Coloring) {
    let n = g.n();
    if n == 0 {
        return (
            0,
            Coloring {
                assignment: vec![],
                colors_used: 0,
            },
        );
    }
    let mut search = Dsatur {
        g,
        color: vec![None; n],
        neighbour_colors: vec![0; n],
        best: None,
        best_count: n + 1,
        lower: greedy_clique_size(g),
    };
    search.search(0);
    let assignment = search.best.expect("n colors always suffice");
    let coloring = Coloring {
        colors_used: search.best_count,
        assignment,
    };
    assert!(
        coloring.is_proper(g),
        "DSATUR produced an improper coloring"
    );
    (coloring.colors_used, coloring)
}

/// Outcome of a bipartiteness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartition {
    /// A proper coloring with at most two colors.
    Bipartite(Coloring),
    /// Vertices of an odd cycle, in cycle order.
    OddCycle(Vec<usize>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Bipartite(_))
    }
}

pub fn is_bipartite(g: &Graph) -> Bipartition {
    let n = g.n();
    let mut side = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if side[root] != usize::MAX {
            continue;
        }
        side[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in members(g.neighbors(u)) {
                if side[w] == usize::MAX {
                    side[w] = 1 - side[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return Bipartition::OddCycle(odd_cycle(u, w, &parent, &depth));
                }
            }
        }
    }
    let colors_used = if side.contains(&1) {
        2
    } else {
        usize::from(n > 0)
    };
    Bipartition::Bipartite(Coloring {
        assignment: side,
        colors_used,
    })
}

// Walks both BFS-tree paths up to their common ancestor.
fn odd_cycle(mut a: usize, mut b: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

/// An edge coloring: `(edge, color)` for every edge, edges sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoring {
    pub edges: Vec<((usize, usize), usize)>,
    pub colors_used: usize,
}

impl EdgeColoring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        let mut seen = vec![0u128; g.n()];
        let edges: Vec<_> = self.edges.iter().map(|&(e, _)| e).collect();
        if edges != g.edges() {
            return false;
        }
        for &((u, v), c) in &self.edges {
            if c >= self.colors_used || (seen[u] | seen[v]) & bit(c) != 0 {
                return false;
            }
            seen[u] |= bit(c);
            seen[v] |= bit(c);
        }
        true
    }
}

/// Line graph with its vertex-to-edge map (edges in sorted order).
pub fn line_graph(g: &Graph) -> Result<(Graph, Vec<(usize, usize)>), GraphError> {
    let edges = g.edges();
    let mut lg = Graph::empty(edges.len())?;
    for i in 0..edges.len() {
        let (a, b) = edges[i];
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                lg.add_edge(i, j)?;
            }
        }
    }
    Ok((lg, edges))
}

/// Exact chromatic index, computed as the chromatic number of the line graph.
pub fn chromatic_index(g: &Graph) -> Result<(usize, EdgeColoring), GraphError> {
    let (lg, edges) = line_graph(g)?;
    let (chi, coloring) = chromatic_number(&lg);
    let ec = EdgeColoring {
        edges: edges.into_iter().zip(coloring.assignment).collect(),
        colors_used: chi,
    };
    assert!(ec.is_proper(g));
    Ok((chi, ec))
}
