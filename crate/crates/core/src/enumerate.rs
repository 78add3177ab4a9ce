//! Enumeration of tessellations.
//!
//! [`enumerate_tessellations_restricted`] streams the tessellations that use
//! at least one maximal clique as a polygon. For each maximal clique `C` the
//! rest of the vertex set is split into connected components and every
//! partition of each component into cliques is combined.

use std::collections::HashSet;

use crate::cliques::maximal_clique_masks;
use crate::graph::{bit, members, Graph, VertexSet};
use crate::tessellation::Tessellation;

/// Default bound on the number of emitted tessellations.
pub const DEFAULT_CAP: usize = 1_000_000;

/// Result of a bounded enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration<T> {
    pub items: Vec<T>,
    pub truncated: bool,
}

/// Every partition of `within` into cliques of `g`, each partition listed as
/// polygon masks ordered by smallest vertex. Stops after `cap` partitions.
pub fn clique_partitions(g: &Graph, within: VertexSet, cap: usize) -> Enumeration<Vec<VertexSet>> {
    let mut out = Enumeration {
        items: Vec::new(),
        truncated: false,
    };
    let mut current = Vec::new();
    partition_rec(g, within, cap, &mut current, &mut out);
    out
}

fn partition_rec(
    g: &Graph,
    rest: VertexSet,
    cap: usize,
    current: &mut Vec<VertexSet>,
    out: &mut Enumeration<Vec<VertexSet>>,
) {
    if out.truncated {
        return;
    }
    if rest == 0 {
        if out.items.len() >= cap {
            out.truncated = true;
        } else {
            out.items.push(current.clone());
        }
        return;
    }
    let v = rest.trailing_zeros() as usize;
    let cand = g.neighbors(v) & rest;
    let mut polygons = Vec::new();
    cliques_within(g, bit(v), cand, &mut polygons);
    for p in polygons {
        current.push(p);
        partition_rec(g, rest & !p, cap, current, out);
        current.pop();
        if out.truncated {
            return;
        }
    }
}

// All cliques `base ∪ S` with `S ⊆ cand`, where `cand` is already restricted
// to common neighbours of `base`.
fn cliques_within(g: &Graph, base: VertexSet, cand: VertexSet, out: &mut Vec<VertexSet>) {
    out.push(base);
    for w in members(cand) {
        let next = cand & g.neighbors(w) & !crate::graph::full_set(w + 1);
        cliques_within(g, base | bit(w), next, out);
    }
}

/// All tessellations of `g`, in no particular canonical order.
pub fn enumerate_all_tessellations(g: &Graph, cap: usize) -> Enumeration<Tessellation> {
    let parts = clique_partitions(g, g.vertices(), cap);
    Enumeration {
        items: parts
            .items
            .into_iter()
            .map(|p| Tessellation::from_masks(g.n(), p))
            .collect(),
        truncated: parts.truncated,
    }
}

/// Streams tessellations containing a maximal clique as a polygon, without
/// duplicates. After `cap` emissions the stream stops and
/// [`RestrictedTessellations::truncated`] reports whether anything was left.
pub struct RestrictedTessellations<'g> {
    g: &'g Graph,
    cliques: Vec<VertexSet>,
    next_clique: usize,
    current: Option<Product>,
    seen: HashSet<Vec<VertexSet>>,
    emitted: usize,
    cap: usize,
    truncated: bool,
}

// Odometer over the cartesian product of per-component partition lists.
struct Product {
    anchor: VertexSet,
    lists: Vec<Vec<Vec<VertexSet>>>,
    digits: Vec<usize>,
    done: bool,
}

impl Product {
    fn next(&mut self) -> Option<Vec<VertexSet>> {
        if self.done {
            return None;
        }
        let mut polys = vec![self.anchor];
        for (list, &d) in self.lists.iter().zip(&self.digits) {
            polys.extend(list[d].iter().copied());
        }
        // advance, last component fastest
        self.done = true;
        for i in (0..self.digits.len()).rev() {
            self.digits[i] += 1;
            if self.digits[i] < self.lists[i].len() {
                self.done = false;
                break;
            }
            self.digits[i] = 0;
        }
        polys.sort_unstable_by_key(|&m| m.trailing_zeros());
        Some(polys)
    }
}

impl<'g> RestrictedTessellations<'g> {
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn emitted(&self) -> usize {
        self.emitted
    }

    fn open(&mut self, anchor: VertexSet) -> Product {
        let (g, cap) = (self.g, self.cap);
        let mut lists = Vec::new();
        for comp in g.components_within(g.vertices() & !anchor) {
            let parts = clique_partitions(g, comp, cap);
            self.truncated |= parts.truncated;
            lists.push(parts.items);
        }
        let done = lists.iter().any(Vec::is_empty);
        Product {
            anchor,
            digits: vec![0; lists.len()],
            lists,
            done,
        }
    }

    fn next_candidate(&mut self) -> Option<Vec<VertexSet>> {
        loop {
            if let Some(p) = self.current.as_mut() {
                if let Some(polys) = p.next() {
                    if self.seen.insert(polys.clone()) {
                        return Some(polys);
                    }
                    continue;
                }
            }
            let &anchor = self.cliques.get(self.next_clique)?;
            self.next_clique += 1;
            self.current = Some(self.open(anchor));
        }
    }
}

impl Iterator for RestrictedTessellations<'_> {
    type Item = Tessellation;

    fn next(&mut self) -> Option<Tessellation> {
        if self.emitted >= self.cap {
            if self.next_candidate().is_some() {
                self.truncated = true;
            }
            return None;
        }
        let polys = self.next_candidate()?;
        self.emitted += 1;
        Some(Tessellation::from_masks(self.g.n(), polys))
    }
}

pub fn enumerate_tessellations_restricted(
    g: &Graph,
    cap: Option<usize>,
) -> RestrictedTessellations<'_> {
    RestrictedTessellations {
        g,
        cliques: maximal_clique_masks(g),
        next_clique: 0,
        current: None,
        seen: HashSet::new(),
        emitted: 0,
        cap: cap.unwrap_or(DEFAULT_CAP),
        truncated: false,
    }
}

/// Collects the restricted stream.
pub fn restricted_tessellations(g: &Graph, cap: Option<usize>) -> Enumeration<Tessellation> {
    let mut stream = enumerate_tessellations_restricted(g, cap);
    let items: Vec<_> = stream.by_ref().collect();
    Enumeration {
        items,
        truncated: stream.truncated(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::Clique;
    use crate::families;
    use crate::tessellation::validate_tessellation;

    #[test]
    fn triangle_has_one_restricted_tessellation() {
        let g = families::complete(3).unwrap();
        let all = restricted_tessellations(&g, None);
        assert_eq!(all.items, vec![Tessellation::new(vec![vec![0, 1, 2]])]);
        assert!(!all.truncated);
    }

    #[test]
    fn star_three() {
        let g = families::star(3).unwrap();
        let all = restricted_tessellations(&g, None).items;
        assert_eq!(all.len(), 3);
        for (leaf, t) in all.iter().enumerate() {
            assert_eq!(
                t.nontrivial_polygons().cloned().collect::<Vec<_>>(),
                vec![Clique::new(vec![leaf, 3])]
            );
        }
    }

    #[test]
    fn windmill_two_blades() {
        // blades {0,1,4} and {2,3,4}
        let g = families::windmill(2, 3).unwrap();
        let all = restricted_tessellations(&g, None).items;
        let blades = [Clique::new(vec![0, 1, 4]), Clique::new(vec![2, 3, 4])];
        assert_eq!(all.len(), 4);
        for t in &all {
            assert_eq!(blades.iter().filter(|b| t.contains_polygon(b)).count(), 1);
            assert_eq!(validate_tessellation(&g, t), Ok(()));
        }
    }

    #[test]
    fn cap_truncates_explicitly() {
        let g = families::windmill(2, 3).unwrap();
        let mut s = enumerate_tessellations_restricted(&g, Some(2));
        assert_eq!(s.by_ref().count(), 2);
        assert!(s.truncated());
        let mut s = enumerate_tessellations_restricted(&g, Some(4));
        assert_eq!(s.by_ref().count(), 4);
        assert!(!s.truncated());
    }

    #[test]
    fn partition_counts_match_bell_numbers_on_complete_graphs() {
        let bell = [1, 1, 2, 5, 15, 52, 203, 877];
        for (n, &b) in bell.iter().enumerate() {
            let g = families::complete(n).unwrap();
            assert_eq!(
                clique_partitions(&g, g.vertices(), usize::MAX).items.len(),
                b
            );
        }
    }

    #[test]
    fn all_tessellations_of_a_path() {
        // P3: {0}{1}{2}, {01}{2}, {0}{12}
        let g = families::path(3).unwrap();
        let all = enumerate_all_tessellations(&g, DEFAULT_CAP);
        assert_eq!(all.items.len(), 3);
    }

    #[test]
    fn restricted_stream_is_valid_and_duplicate_free() {
        for g in [
            families::wheel(6).unwrap(),
            families::extended_wheel(2).unwrap(),
            families::petersen(),
            families::edgeless(3).unwrap(),
        ] {
            let items = restricted_tessellations(&g, None).items;
            let unique: HashSet<_> = items.iter().collect();
            assert_eq!(unique.len(), items.len());
            let maximal: Vec<Clique> = crate::cliques::maximal_cliques(&g);
            for t in &items {
                assert_eq!(validate_tessellation(&g, t), Ok(()));
                assert!(maximal.iter().any(|c| t.contains_polygon(c)));
            }
        }
    }
}
