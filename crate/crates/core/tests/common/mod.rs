//! Brute-force oracles for the integration and acceptance tests. They take a
//! graph as a vertex count and an edge list and use none of the library's
//! algorithms.
#![allow(dead_code)]

use std::collections::HashSet;

use tesscover::graph::Graph;

/// Small graph, at most 16 vertices and 64 edges.
#[derive(Clone, Debug)]
pub struct Small {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub adj: Vec<u32>,
}

impl Small {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        assert!(n <= 16 && edges.len() <= 64);
        let mut adj = vec![0u32; n];
        for &(u, v) in edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Small {
            n,
            edges: edges.to_vec(),
            adj,
        }
    }

    pub fn of(g: &Graph) -> Self {
        Small::new(g.n(), &g.edges())
    }

    pub fn is_clique(&self, set: u32) -> bool {
        (0..self.n)
            .filter(|&v| set >> v & 1 == 1)
            .all(|v| set & !(self.adj[v] | 1 << v) == 0)
    }

    pub fn full_edges(&self) -> u64 {
        if self.edges.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.edges.len()) - 1
        }
    }

    /// Edges with both ends inside one block.
    pub fn partition_edges(&self, blocks: &[u32]) -> u64 {
        let mut mask = 0;
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if blocks.iter().any(|&b| b >> u & 1 == 1 && b >> v & 1 == 1) {
                mask |= 1 << i;
            }
        }
        mask
    }
}

/// Every partition of the vertices into cliques, built as restricted growth
/// strings: vertex `v` joins an earlier block or opens a new one.
pub fn clique_partitions(s: &Small) -> Vec<Vec<u32>> {
    fn go(s: &Small, v: usize, blocks: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if v == s.n {
            out.push(blocks.clone());
            return;
        }
        for i in 0..blocks.len() {
            let b = blocks[i] | 1 << v;
            if s.is_clique(b) {
                blocks[i] = b;
                go(s, v + 1, blocks, out);
                blocks[i] &= !(1 << v);
            }
        }
        blocks.push(1 << v);
        go(s, v + 1, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(s, 0, &mut Vec::new(), &mut out);
    out
}

/// Minimum cover of `full` by `sets`, by breadth-first search over reachable
/// unions. `None` when the sets do not cover `full`.
pub fn min_cover_size(sets: &[u64], full: u64) -> Option<usize> {
    if full == 0 {
        return Some(0);
    }
    let mut sets: Vec<u64> = sets
        .iter()
        .copied()
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    sets.sort_unstable_by_key(|s| std::cmp::Reverse(s.count_ones()));
    let keep: Vec<u64> = sets
        .iter()
        .enumerate()
        .filter(|&(i, &s)| {
            !sets
                .iter()
                .enumerate()
                .any(|(j, &t)| j != i && s & t == s && (s != t || j < i))
        })
        .map(|(_, &s)| s)
        .collect();
    if keep.iter().fold(0, |a, &s| a | s) & full != full {
        return None;
    }
    let mut frontier: HashSet<u64> = HashSet::from([0]);
    for k in 1.. {
        let mut next = HashSet::new();
        for &f in &frontier {
            for &s in &keep {
                let u = (f | s) & full;
                if u == full {
                    return Some(k);
                }
                next.insert(u);
            }
        }
        frontier = next;
    }
    unreachable!()
}

/// `T(G)` by exhaustive search over all tessellations.
pub fn brute_tessellation_number(s: &Small) -> usize {
    let sets: Vec<u64> = clique_partitions(s)
        .iter()
        .map(|p| s.partition_edges(p))
        .collect();
    min_cover_size(&sets, s.full_edges()).expect("each edge is a block of some partition")
}

/// Minimum cover using only tessellations with a maximal clique as a polygon.
pub fn brute_restricted_minimum(s: &Small) -> Option<usize> {
    let maximal = brute_maximal_cliques(s);
    let sets: Vec<u64> = clique_partitions(s)
        .iter()
        .filter(|p| p.iter().any(|b| maximal.contains(b)))
        .map(|p| s.partition_edges(p))
        .collect();
    min_cover_size(&sets, s.full_edges())
}

/// Maximal cliques by checking every vertex subset.
pub fn brute_maximal_cliques(s: &Small) -> Vec<u32> {
    assert!(s.n <= 16);
    (1u32..1 << s.n)
        .filter(|&set| s.is_clique(set))
        .filter(|&set| (0..s.n).all(|v| set >> v & 1 == 1 || !s.is_clique(set | 1 << v)))
        .collect()
}

/// Intersection graph of the maximal cliques.
pub fn brute_clique_graph(s: &Small) -> Small {
    let cliques = brute_maximal_cliques(s);
    let mut edges = Vec::new();
    for i in 0..cliques.len() {
        for j in i + 1..cliques.len() {
            if cliques[i] & cliques[j] != 0 {
                edges.push((i, j));
            }
        }
    }
    Small::new(cliques.len(), &edges)
}

pub fn brute_is_bipartite(s: &Small) -> bool {
    let mut side = vec![None; s.n];
    for root in 0..s.n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for w in 0..s.n {
                if s.adj[v] >> w & 1 == 1 {
                    match side[w] {
                        None => {
                            side[w] = Some(!side[v].unwrap());
                            stack.push(w);
                        }
                        Some(x) if x == side[v].unwrap() => return false,
                        _ => {}
                    }
                }
            }
        }
    }
    true
}

/// Chromatic number by trying `k = 0, 1, …` with plain backtracking.
pub fn brute_chromatic_number(s: &Small) -> usize {
    fn go(s: &Small, v: usize, k: usize, colors: &mut Vec<usize>, used: usize) -> bool {
        if v == s.n {
            return true;
        }
        for c in 0..k.min(used + 1) {
            if (0..v).all(|w| s.adj[v] >> w & 1 == 0 || colors[w] != c) {
                colors[v] = c;
                if go(s, v + 1, k, colors, used.max(c + 1)) {
                    return true;
                }
            }
        }
        false
    }
    (0..=s.n)
        .find(|&k| go(s, 0, k, &mut vec![0; s.n], 0))
        .unwrap()
}

/// Chromatic index by backtracking over edges.
pub fn brute_chromatic_index(s: &Small) -> usize {
    fn go(s: &Small, i: usize, k: usize, colors: &mut Vec<usize>, used: usize) -> bool {
        if i == s.edges.len() {
            return true;
        }
        let (u, v) = s.edges[i];
        for c in 0..k.min(used + 1) {
            let clash = (0..i).any(|j| {
                let (a, b) = s.edges[j];
                colors[j] == c && (a == u || a == v || b == u || b == v)
            });
            if !clash {
                colors[i] = c;
                if go(s, i + 1, k, colors, used.max(c + 1)) {
                    return true;
                }
            }
        }
        false
    }
    (0..=s.edges.len())
        .find(|&k| go(s, 0, k, &mut vec![0; s.edges.len()], 0))
        .unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism classes of graphs on `n <= 7` vertices. The canonical form
/// is the least edge mask over all relabelings, bit `index[u][v]` standing
/// for the pair `{u, v}`.
pub struct Canonizer {
    n: usize,
    index: Vec<Vec<usize>>,
    perms: Vec<Vec<usize>>,
}

impl Canonizer {
    #[allow(clippy::needless_range_loop)]
    pub fn new(n: usize) -> Self {
        assert!(n <= 7);
        let mut index = vec![vec![usize::MAX; n]; n];
        let mut k = 0;
        for v in 0..n {
            for u in 0..v {
                index[u][v] = k;
                index[v][u] = k;
                k += 1;
            }
        }
        Canonizer {
            n,
            index,
            perms: permutations(n),
        }
    }

    pub fn canonical(&self, edges: &[(usize, usize)]) -> u64 {
        self.perms
            .iter()
            .map(|p| {
                edges
                    .iter()
                    .fold(0u64, |m, &(u, v)| m | 1 << self.index[p[u]][p[v]])
            })
            .min()
            .unwrap_or(0)
    }

    pub fn graph(&self, mask: u64) -> Small {
        let mut edges = Vec::new();
        for v in 0..self.n {
            for u in 0..v {
                if mask >> self.index[u][v] & 1 == 1 {
                    edges.push((u, v));
                }
            }
        }
        Small::new(self.n, &edges)
    }
}
