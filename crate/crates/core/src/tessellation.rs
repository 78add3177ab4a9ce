//! Tessellations (partitions of the vertex set into cliques) and covers.

use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::cliques::Clique;
use crate::graph::{bit, members, Graph, VertexSet};

pub type Edge = (usize, usize);

/// A partition of the vertices into polygons. Polygons are held in canonical
/// order (sorted list of sorted polygons), so equal tessellations compare equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tessellation {
    polygons: Vec<Clique>,
}

impl Tessellation {
    pub fn new<P: Into<Clique>>(polygons: impl IntoIterator<Item = P>) -> Self {
        let mut polygons: Vec<Clique> = polygons.into_iter().map(Into::into).collect();
        polygons.sort();
        Tessellation { polygons }
    }

    /// From polygon masks; vertices of `0..n` not in any mask become singletons.
    pub fn from_masks(n: usize, masks: impl IntoIterator<Item = VertexSet>) -> Self {
        let mut seen: VertexSet = 0;
        let mut polygons = Vec::new();
        for m in masks {
            if m != 0 {
                seen |= m;
                polygons.push(Clique::from_mask(m));
            }
        }
        for v in members(crate::graph::full_set(n) & !seen) {
            polygons.push(Clique::new(vec![v]));
        }
        Tessellation::new(polygons)
    }

    /// The all-singletons tessellation.
    pub fn trivial(n: usize) -> Self {
        Tessellation::from_masks(n, std::iter::empty())
    }

    pub fn polygons(&self) -> &[Clique] {
        &self.polygons
    }

    /// Polygons with at least two vertices.
    pub fn nontrivial_polygons(&self) -> impl Iterator<Item = &Clique> {
        self.polygons.iter().filter(|p| p.len() > 1)
    }

    /// `Σ s(s-1)/2` over polygon sizes `s`; equals `|E(T)|` for a valid tessellation.
    pub fn edge_count(&self) -> usize {
        self.polygons.iter().map(Clique::internal_edges).sum()
    }

    /// Edges internal to polygons, without checking validity.
    pub fn internal_edges(&self) -> BTreeSet<Edge> {
        let mut out = BTreeSet::new();
        for p in &self.polygons {
            let vs = p.vertices();
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i + 1..] {
                    out.insert((u, v));
                }
            }
        }
        out
    }

    pub fn contains_polygon(&self, polygon: &Clique) -> bool {
        self.polygons.binary_search(polygon).is_ok()
    }
}

impl fmt::Display for Tessellation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .polygons
            .iter()
            .map(|p| {
                let vs: Vec<String> = p.vertices().iter().map(|v| v.to_string()).collect();
                format!("{{{}}}", vs.join(","))
            })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Violation {
    /// A polygon whose vertices are not pairwise adjacent.
    NonClique {
        polygon: Vec<usize>,
        missing_edge: Edge,
    },
    /// A vertex appearing in two polygons.
    Overlap { vertex: usize },
    /// A vertex of the graph not in any polygon.
    MissingVertex { vertex: usize },
    /// A polygon vertex outside `0..n`.
    OutOfRange { vertex: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonClique {
                polygon,
                missing_edge: (u, v),
            } => {
                write!(
                    f,
                    "polygon {polygon:?} is not a clique ({{{u},{v}}} is not an edge)"
                )
            }
            Violation::Overlap { vertex } => write!(f, "vertex {vertex} lies in two polygons"),
            Violation::MissingVertex { vertex } => write!(f, "vertex {vertex} is in no polygon"),
            Violation::OutOfRange { vertex } => write!(f, "vertex {vertex} is out of range"),
        }
    }
}

/// Checks the three tessellation invariants, reporting every violation.
pub fn validate_tessellation(g: &Graph, t: &Tessellation) -> Result<(), Vec<Violation>> {
    let mut violations = Vec::new();
    let mut seen: VertexSet = 0;
    let mut overlapped: VertexSet = 0;
    for p in t.polygons() {
        let vs = p.vertices();
        for &v in vs {
            if v >= g.n() {
                violations.push(Violation::OutOfRange { vertex: v });
                continue;
            }
            if seen & bit(v) != 0 && overlapped & bit(v) == 0 {
                overlapped |= bit(v);
                violations.push(Violation::Overlap { vertex: v });
            }
            seen |= bit(v);
        }
        'pairs: for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if u < g.n() && v < g.n() && !g.has_edge(u, v) {
                    violations.push(Violation::NonClique {
                        polygon: vs.to_vec(),
                        missing_edge: (u, v),
                    });
                    break 'pairs;
                }
            }
        }
    }
    for v in members(g.vertices() & !seen) {
        violations.push(Violation::MissingVertex { vertex: v });
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// `E(T)`: the edges whose endpoints share a polygon.
pub fn edge_set(g: &Graph, t: &Tessellation) -> Result<BTreeSet<Edge>, Vec<Violation>> {
    validate_tessellation(g, t)?;
    let edges = t.internal_edges();
    debug_assert_eq!(edges.len(), t.edge_count());
    Ok(edges)
}

/// An ordered family of tessellations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TessellationCover {
    pub tessellations: Vec<Tessellation>,
}

impl TessellationCover {
    pub fn new(tessellations: Vec<Tessellation>) -> Self {
        TessellationCover { tessellations }
    }

    pub fn len(&self) -> usize {
        self.tessellations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tessellations.is_empty()
    }

    /// Union of the polygon-internal edges of every tessellation.
    pub fn covered_edges(&self) -> BTreeSet<Edge> {
        self.tessellations
            .iter()
            .flat_map(|t| t.internal_edges())
            .collect()
    }
}

/// Why a cover failed to validate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverDefects {
    /// `(tessellation index, violations)` for each invalid tessellation.
    pub invalid: Vec<(usize, Vec<Violation>)>,
    /// Edges of the graph covered by no tessellation.
    pub uncovered: Vec<Edge>,
}

impl fmt::Display for CoverDefects {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, vs) in &self.invalid {
            for v in vs {
                writeln!(f, "tessellation {i}: {v}")?;
            }
        }
        if !self.uncovered.is_empty() {
            write!(f, "uncovered edges: {:?}", self.uncovered)?;
        }
        Ok(())
    }
}

pub fn is_valid_cover(g: &Graph, c: &TessellationCover) -> Result<(), CoverDefects> {
    let invalid: Vec<_> = c
        .tessellations
        .iter()
        .enumerate()
        .filter_map(|(i, t)| validate_tessellation(g, t).err().map(|v| (i, v)))
        .collect();
    let covered = c.covered_edges();
    let uncovered: Vec<Edge> = g
        .edges()
        .into_iter()
        .filter(|e| !covered.contains(e))
        .collect();
    if invalid.is_empty() && uncovered.is_empty() {
        Ok(())
    } else {
        Err(CoverDefects { invalid, uncovered })
    }
}

/// Dense numbering of a graph's edges, for bitset edge sets.
#[derive(Clone, Debug)]
pub struct EdgeIndex {
    edges: Vec<Edge>,
    index: Vec<usize>,
    n: usize,
}

impl EdgeIndex {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let edges = g.edges();
        let mut index = vec![usize::MAX; n * n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            index[u * n + v] = i;
            index[v * n + u] = i;
        }
        EdgeIndex { edges, index, n }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge(&self, i: usize) -> Edge {
        self.edges[i]
    }

    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        let i = self.index[u * self.n + v];
        (i != usize::MAX).then_some(i)
    }

    pub fn full(&self) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.len());
        s.insert_range(..);
        s
    }

    /// Edge bitset of the polygons given as masks. Non-edges are ignored.
    pub fn mask_edges(&self, polygons: impl IntoIterator<Item = VertexSet>) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.len());
        for p in polygons {
            for u in members(p) {
                for v in members(p & !crate::graph::full_set(u + 1)) {
                    if let Some(i) = self.get(u, v) {
                        s.insert(i);
                    }
                }
            }
        }
        s
    }

    pub fn tessellation_edges(&self, t: &Tessellation) -> FixedBitSet {
        self.mask_edges(t.nontrivial_polygons().filter_map(Clique::mask))
    }
}
