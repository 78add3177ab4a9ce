//! Simple undirected graphs on vertices `0..n`, stored as adjacency bitsets.
//!
//! Every algorithm in the crate works on masks of type [`VertexSet`], so the
//! vertex count is capped at [`MAX_VERTICES`].

use crate::error::GraphError;

/// Bitset over vertex labels; bit `v` is vertex `v`.
pub type VertexSet = u128;

pub const MAX_VERTICES: usize = 128;

#[inline]
pub fn bit(v: usize) -> VertexSet {
    1u128 << v
}

/// Mask with bits `0..n` set.
#[inline]
pub fn full_set(n: usize) -> VertexSet {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// Iterates the set bits of `set` in ascending order.
pub fn members(set: VertexSet) -> impl Iterator<Item = usize> {
    let mut rest = set;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        }
    })
}

/// Sorted vertex list of a mask.
pub fn to_vec(set: VertexSet) -> Vec<usize> {
    members(set).collect()
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph, rejecting loops, duplicates and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        full_set(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in members(self.adj[u] & !full_set(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// True when every pair of vertices in `set` is adjacent.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        members(set).all(|v| (self.adj[v] | bit(v)) & set == set)
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// their smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            let mut comp = bit(start);
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & within & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            rest &= !comp;
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `set`, relabelled to `0..|set|` in ascending order.
    /// The returned map sends new labels back to the old ones.
    pub fn induced(&self, set: VertexSet) -> (Graph, Vec<usize>) {
        let map = to_vec(set & self.vertices());
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![0; map.len()];
        for (i, &v) in map.iter().enumerate() {
            for w in members(self.adj[v] & set) {
                adj[i] |= bit(index[w]);
            }
        }
        (Graph { n: map.len(), adj }, map)
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .into_iter()
            .all(|(u, v)| self.adj[u] & self.adj[v] == 0)
    }

    /// Size of the largest clique through each vertex (1 for isolated vertices).
    pub fn local_clique_numbers(&self) -> Vec<usize> {
        let mut omega = vec![if self.n > 0 { 1 } else { 0 }; self.n];
        for clique in crate::cliques::maximal_clique_masks(self) {
            let size = clique.count_ones() as usize;
            for v in members(clique) {
                omega[v] = omega[v].max(size);
            }
        }
        omega
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(Graph::from_edges(2, [(0, 0)]), Err(GraphError::Loop(0)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(Graph::empty(129).is_err());
        assert!(Graph::empty(128).is_ok());
    }

    #[test]
    fn edges_sorted_and_counted() {
        let g = Graph::from_edges(4, [(3, 2), (1, 0), (0, 2)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.max_degree(), 2);
    }

    #[test]
    fn cliques_and_components() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        assert!(g.is_clique(0b111));
        assert!(!g.is_clique(0b1011));
        assert!(g.is_clique(0));
        assert_eq!(g.components(), vec![0b00111, 0b11000]);
        let (h, map) = g.induced(0b11010);
        assert_eq!(map, vec![1, 3, 4]);
        assert_eq!(h.edges(), vec![(1, 2)]);
    }

    #[test]
    fn full_set_at_limit() {
        assert_eq!(full_set(128), u128::MAX);
        assert_eq!(full_set(0), 0);
        assert_eq!(to_vec(0b1010), vec![1, 3]);
    }
}
