//! Exhaustive corpora of small labeled graphs.

use crate::graph::Graph;
use crate::par::{self, Execution};

/// Vertex pairs `(u, v)`, `u < v`, in the order used for edge masks.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

/// Number of labeled graphs on `n` vertices, `2^(n(n-1)/2)`.
pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << pairs(n).len()
}

/// Graph on `n` vertices whose edges are the pairs selected by `mask`.
pub fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut g = Graph::empty(n).expect("corpus graphs are small");
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            g.add_edge(u, v).expect("pairs are distinct");
        }
    }
    g
}

/// Every labeled graph on exactly `n` vertices, `n <= 11`.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(
        n <= 11,
        "2^{} graphs is too many to enumerate",
        n * n.saturating_sub(1) / 2
    );
    let ps = pairs(n);
    (0..labeled_graph_count(n)).map(move |m| graph_from_mask(n, &ps, m))
}

/// Every labeled graph on `1..=max_n` vertices.
pub fn labeled_graphs_up_to(max_n: usize) -> impl Iterator<Item = Graph> {
    (1..=max_n).flat_map(labeled_graphs)
}

/// Applies `check` to every labeled graph on `1..=max_n` vertices and
/// returns the graphs it rejects, in corpus order.
pub fn failures<F>(exec: Execution, max_n: usize, check: F) -> Vec<Graph>
where
    F: Fn(&Graph) -> bool + Sync + Send,
{
    let mut out = Vec::new();
    for n in 1..=max_n {
        let ps = pairs(n);
        let masks: Vec<u64> = (0..labeled_graph_count(n)).collect();
        let bad = par::map(exec, &masks, |&m| {
            let g = graph_from_mask(n, &ps, m);
            (!check(&g)).then_some(g)
        });
        out.extend(bad.into_iter().flatten());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(labeled_graphs(0).count(), 1);
        assert_eq!(labeled_graphs(4).count(), 64);
        assert_eq!(labeled_graphs_up_to(4).count(), 1 + 2 + 8 + 64);
        let edges: usize = labeled_graphs(4).map(|g| g.edge_count()).sum();
        assert_eq!(edges, 6 * 32);
    }

    #[test]
    fn failures_match_in_both_modes() {
        let check = |g: &Graph| g.edge_count() != 2;
        let seq = failures(Execution::Sequential, 4, check);
        let par = failures(Execution::Parallel, 4, check);
        assert_eq!(seq, par);
        // two of the 3 pairs on n = 3, two of the 6 on n = 4
        assert_eq!(seq.len(), 3 + 15);
    }
}
