//! Generators for the named graph families.
//!
//! Labelling conventions: hubs and centres take the largest label. The wheel
//! `W_n` has rim `0..n` and hub `n`; the extended wheel `E_{3,n}` is `W_{3n}`
//! plus the three residue classes mod 3 made complete, hub `3n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Wheel,
    Windmill,
    ExtendedWheel,
    Star,
    Complete,
    Cycle,
    Path,
    Petersen,
    Edgeless,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Wheel,
        Family::Windmill,
        Family::ExtendedWheel,
        Family::Star,
        Family::Complete,
        Family::Cycle,
        Family::Path,
        Family::Petersen,
        Family::Edgeless,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Wheel => "wheel",
            Family::Windmill => "windmill",
            Family::ExtendedWheel => "extended_wheel",
            Family::Star => "star",
            Family::Complete => "complete",
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Petersen => "petersen",
            Family::Edgeless => "edgeless",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .or(match key.as_str() {
                "e3n" | "extended" => Some(Family::ExtendedWheel),
                "empty" => Some(Family::Edgeless),
                _ => None,
            })
            .ok_or_else(|| format!("unknown family `{s}`"))
    }
}

/// A family member. `n` is the main size parameter: rim size for wheels,
/// `n` of `E_{3,n}`, leaf count for stars, vertex count otherwise, and the
/// blade count `ℓ` for windmills. `blade` is the windmill clique size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub blade: usize,
}

impl FamilySpec {
    pub fn wheel(n: usize) -> Self {
        Self::sized(Family::Wheel, n)
    }
    pub fn windmill(blades: usize, blade: usize) -> Self {
        FamilySpec {
            family: Family::Windmill,
            n: blades,
            blade,
        }
    }
    pub fn extended_wheel(n: usize) -> Self {
        Self::sized(Family::ExtendedWheel, n)
    }
    pub fn star(leaves: usize) -> Self {
        Self::sized(Family::Star, leaves)
    }
    pub fn complete(n: usize) -> Self {
        Self::sized(Family::Complete, n)
    }
    pub fn cycle(n: usize) -> Self {
        Self::sized(Family::Cycle, n)
    }
    pub fn path(n: usize) -> Self {
        Self::sized(Family::Path, n)
    }
    pub fn petersen() -> Self {
        Self::sized(Family::Petersen, 10)
    }
    pub fn edgeless(n: usize) -> Self {
        Self::sized(Family::Edgeless, n)
    }

    /// Spec with the default windmill blade size of 3.
    pub fn sized(family: Family, n: usize) -> Self {
        FamilySpec {
            family,
            n,
            blade: 3,
        }
    }

    /// Short human label such as `wheel(6)` or `windmill(5,3)`.
    pub fn label(&self) -> String {
        match self.family {
            Family::Windmill => format!("windmill({},{})", self.n, self.blade),
            Family::Petersen => "petersen".to_string(),
            f => format!("{}({})", f, self.n),
        }
    }

    pub fn generate(&self) -> Result<Graph, GraphError> {
        gen_family(self)
    }
}

fn invalid(family: &'static str, reason: impl Into<String>) -> GraphError {
    GraphError::InvalidParameters {
        family,
        reason: reason.into(),
    }
}

pub fn gen_family(spec: &FamilySpec) -> Result<Graph, GraphError> {
    let n = spec.n;
    match spec.family {
        Family::Wheel => {
            if n <= 2 {
                return Err(invalid("wheel", format!("needs n > 2, got {n}")));
            }
            wheel_with(n)
        }
        Family::ExtendedWheel => {
            if n < 2 {
                return Err(invalid("extended_wheel", format!("needs n >= 2, got {n}")));
            }
            let mut g = wheel_with(3 * n)?;
            for i in 0..n {
                for j in i + 1..n {
                    for r in 0..3 {
                        g.add_edge(3 * i + r, 3 * j + r)?;
                    }
                }
            }
            Ok(g)
        }
        Family::Windmill => {
            let (blades, s) = (n, spec.blade);
            if blades < 1 || s < 2 {
                return Err(invalid(
                    "windmill",
                    format!("needs at least one blade of size >= 2, got ({blades},{s})"),
                ));
            }
            let hub = blades * (s - 1);
            let mut g = Graph::empty(hub + 1)?;
            for b in 0..blades {
                let blade: Vec<usize> = (b * (s - 1)..(b + 1) * (s - 1)).chain([hub]).collect();
                for (i, &u) in blade.iter().enumerate() {
                    for &v in &blade[i + 1..] {
                        g.add_edge(u, v)?;
                    }
                }
            }
            Ok(g)
        }
        Family::Star => {
            if n < 1 {
                return Err(invalid("star", "needs at least one leaf"));
            }
            Graph::from_edges(n + 1, (0..n).map(|leaf| (leaf, n)))
        }
        Family::Complete => {
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        Family::Cycle => {
            if n < 3 {
                return Err(invalid("cycle", format!("needs n >= 3, got {n}")));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Path => {
            if n < 1 {
                return Err(invalid("path", "needs at least one vertex"));
            }
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Petersen => {
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
            Graph::from_edges(10, outer.chain(spokes).chain(inner))
        }
        Family::Edgeless => Graph::empty(n),
    }
}

fn wheel_with(rim: usize) -> Result<Graph, GraphError> {
    let hub = rim;
    let mut g = Graph::empty(rim + 1)?;
    for i in 0..rim {
        g.add_edge(i, (i + 1) % rim)?;
        g.add_edge(i, hub)?;
    }
    Ok(g)
}

pub fn wheel(n: usize) -> Result<Graph, GraphError> {
    gen_family(&FamilySpec::wheel(n))
}

pub fn extended_wheel(n: usize) -> Result<Graph, GraphError> {
    gen_family(&FamilySpec::extended_wheel(n))
}

pub fn windmill(blades: usize, blade: usize) -> Result<Graph, GraphError> {
    gen_family(&FamilySpec::windmill(blades, blade))
}

pub fn star(leaves: usize) -> Result<Graph, GraphError> {
    gen_family(&FamilySpec::star(leaves))
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    gen_family(&FamilySpec::complete(n))
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    gen_family(&FamilySpec::cycle(n))
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    gen_family(&FamilySpec::path(n))
}

pub fn petersen() -> Graph {
    gen_family(&FamilySpec::petersen()).expect("petersen graph is well formed")
}

pub fn edgeless(n: usize) -> Result<Graph, GraphError> {
    Graph::empty(n)
}
