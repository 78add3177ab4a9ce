//! Maximal clique enumeration and the clique graph `K(G)`.

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::{bit, members, to_vec, Graph, VertexSet, MAX_VERTICES};

/// A vertex set, kept sorted and duplicate free.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Clique(Vec<usize>);

impl Clique {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Clique(vertices)
    }

    pub fn from_mask(mask: VertexSet) -> Self {
        Clique(to_vec(mask))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Bitmask of the vertices; `None` when a label does not fit a [`VertexSet`].
    pub fn mask(&self) -> Option<VertexSet> {
        self.0
            .iter()
            .try_fold(0, |m, &v| (v < MAX_VERTICES).then(|| m | bit(v)))
    }

    /// Number of edges internal to the vertex set.
    pub fn internal_edges(&self) -> usize {
        self.0.len() * self.0.len().saturating_sub(1) / 2
    }
}

impl From<Vec<usize>> for Clique {
    fn from(v: Vec<usize>) -> Self {
        Clique::new(v)
    }
}

fn bron_kerbosch(
    g: &Graph,
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    // pivot with the most neighbours in P
    let pivot = members(p | x)
        .max_by_key(|&u| ((g.neighbors(u) & p).count_ones(), std::cmp::Reverse(u)))
        .expect("P is non-empty");
    for v in members(p & !g.neighbors(pivot)) {
        let nv = g.neighbors(v);
        bron_kerbosch(g, r | bit(v), p & nv, x & nv, out);
        p &= !bit(v);
        x |= bit(v);
    }
}

/// Maximal cliques as masks, in lexicographic order of their sorted vertex
/// lists. Isolated vertices give singleton cliques.
pub fn maximal_clique_masks(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if g.n() > 0 {
        bron_kerbosch(g, 0, g.vertices(), 0, &mut out);
    }
    out.sort_by_cached_key(|&m| to_vec(m));
    out
}

/// All inclusion-maximal cliques, each sorted, the list sorted
/// lexicographically. Worst case exponential in `n`.
pub fn maximal_cliques(g: &Graph) -> Vec<Clique> {
    let masks = maximal_clique_masks(g);
    debug_assert!(g
        .edges()
        .iter()
        .all(|&(u, v)| { masks.iter().any(|&m| m & bit(u) != 0 && m & bit(v) != 0) }));
    masks.into_iter().map(Clique::from_mask).collect()
}

/// `K(G)`: one vertex per maximal clique, adjacent when the cliques meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueGraph {
    pub base: Graph,
    pub cliques: Vec<Clique>,
}

impl CliqueGraph {
    pub fn clique_masks(&self) -> Vec<VertexSet> {
        self.cliques
            .iter()
            .map(|c| c.mask().expect("clique of a valid graph"))
            .collect()
    }
}

/// Builds `K(G)`. Vertex `i` of the base graph is the `i`-th clique of
/// [`maximal_cliques`]. Fails when `G` has more maximal cliques than a graph
/// may have vertices.
pub fn clique_graph(g: &Graph) -> Result<CliqueGraph, GraphError> {
    let masks = maximal_clique_masks(g);
    let mut base = Graph::empty(masks.len())?;
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if masks[i] & masks[j] != 0 {
                base.add_edge(i, j)?;
            }
        }
    }
    Ok(CliqueGraph {
        base,
        cliques: masks.into_iter().map(Clique::from_mask).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn naive_maximal(g: &Graph) -> Vec<Clique> {
        let n = g.n();
        let cliques: Vec<VertexSet> = (1u128..(1 << n)).filter(|&s| g.is_clique(s)).collect();
        let mut out: Vec<Clique> = cliques
            .iter()
            .filter(|&&s| !cliques.iter().any(|&t| t != s && t & s == s))
            .map(|&s| Clique::from_mask(s))
            .collect();
        out.sort();
        out
    }

    #[test]
    fn extended_wheel_two_cliques() {
        let g = families::extended_wheel(2).unwrap();
        let cl = maximal_cliques(&g);
        assert_eq!(cl.len(), 9);
        assert!(cl.iter().all(|c| c.len() == 3 && c.contains(6)));
        for i in 0..6 {
            let c = Clique::new(vec![i, (i + 1) % 6, 6]);
            assert!(cl.contains(&c), "{c:?}");
        }
        for c in [[0, 3, 6], [1, 4, 6], [2, 5, 6]] {
            assert!(cl.contains(&Clique::new(c.to_vec())));
        }
    }

    #[test]
    fn complete_and_edgeless() {
        let cl = maximal_cliques(&families::complete(4).unwrap());
        assert_eq!(cl, vec![Clique::new(vec![0, 1, 2, 3])]);
        let cl = maximal_cliques(&families::edgeless(3).unwrap());
        assert_eq!(cl.len(), 3);
        assert!(maximal_cliques(&families::edgeless(0).unwrap()).is_empty());
    }

    #[test]
    fn petersen_cliques_are_its_edges() {
        let g = families::petersen();
        let cl = maximal_cliques(&g);
        assert_eq!(cl.len(), 15);
        assert!(cl.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn extended_wheel_clique_structure() {
        for n in 2..=6 {
            let g = families::extended_wheel(n).unwrap();
            let cl = maximal_cliques(&g);
            assert_eq!(cl.len(), 3 * n + 3);
            assert!(cl.iter().all(|c| c.contains(3 * n)));
            let big = cl.iter().filter(|c| c.len() == n + 1).count();
            let small = cl.iter().filter(|c| c.len() == 3).count();
            if n == 2 {
                assert_eq!(small, 9);
            } else {
                assert_eq!((big, small), (3, 3 * n));
            }
        }
    }

    #[test]
    fn clique_graphs_of_families() {
        let k = clique_graph(&families::windmill(5, 3).unwrap()).unwrap();
        assert_eq!(k.base, families::complete(5).unwrap());
        let k = clique_graph(&families::extended_wheel(4).unwrap()).unwrap();
        assert_eq!(k.base, families::complete(15).unwrap());
        // edge cliques of C4 in lexicographic order: 01, 03, 12, 23
        let k = clique_graph(&families::cycle(4).unwrap()).unwrap();
        assert_eq!(k.base.edge_count(), 4);
        assert!((0..4).all(|v| k.base.degree(v) == 2));
        assert!(!k.base.has_edge(0, 3) && !k.base.has_edge(1, 2));
    }

    #[test]
    fn matches_naive_oracle_on_small_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..400 {
            let n = rng.gen_range(0..=8);
            let p: f64 = rng.gen();
            let mut g = Graph::empty(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            assert_eq!(maximal_cliques(&g), naive_maximal(&g));
        }
    }
}
