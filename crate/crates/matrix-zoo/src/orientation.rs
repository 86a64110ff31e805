use std::fmt;
use std::str::FromStr;

use signed_graph_core::SignedGraph;

use crate::{Result, ZooError};

/// Per-edge direction choice. Since stored edges satisfy `u < v`, a direction
/// just records which endpoint acts as the source (the endpoint whose
/// incidence entry keeps its sign in the oriented net incidence matrix).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeDirection {
    /// The smaller endpoint is the source; rendered `<`.
    FromSmaller,
    /// The larger endpoint is the source; rendered `>`.
    FromLarger,
}

/// An explicit orientation: one [`EdgeDirection`] per edge, in edge order.
///
/// The textual form is a string over `{<, >}` of length m. The canonical
/// orientation directs every edge away from its smaller endpoint (`<<...<`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    directions: Vec<EdgeDirection>,
}

impl Orientation {
    pub fn new(directions: Vec<EdgeDirection>) -> Self {
        Orientation { directions }
    }

    /// All edges directed from their smaller endpoint.
    pub fn canonical(edge_count: usize) -> Self {
        Orientation {
            directions: vec![EdgeDirection::FromSmaller; edge_count],
        }
    }

    pub fn len(&self) -> usize {
        self.directions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.directions.is_empty()
    }

    pub fn direction(&self, edge: usize) -> EdgeDirection {
        self.directions[edge]
    }

    /// (source, target) endpoints of edge `idx` of `g` under this orientation.
    pub fn arrow(&self, g: &SignedGraph, idx: usize) -> (usize, usize) {
        let e = g.edge(idx);
        match self.directions[idx] {
            EdgeDirection::FromSmaller => (e.u, e.v),
            EdgeDirection::FromLarger => (e.v, e.u),
        }
    }

    /// Checks that this orientation covers exactly the edges of `g`.
    pub fn check_against(&self, g: &SignedGraph) -> Result<()> {
        if self.len() != g.edge_count() {
            return Err(ZooError::OrientationLength {
                expected: g.edge_count(),
                found: self.len(),
            });
        }
        Ok(())
    }
}

impl FromStr for Orientation {
    type Err = ZooError;

    fn from_str(s: &str) -> Result<Orientation> {
        let mut directions = Vec::with_capacity(s.len());
        for (position, ch) in s.chars().enumerate() {
            directions.push(match ch {
                '<' => EdgeDirection::FromSmaller,
                '>' => EdgeDirection::FromLarger,
                other => return Err(ZooError::OrientationChar { ch: other, position }),
            });
        }
        Ok(Orientation { directions })
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.directions {
            f.write_str(match d {
                EdgeDirection::FromSmaller => "<",
                EdgeDirection::FromLarger => ">",
            })?;
        }
        Ok(())
    }
}

impl Orientation {
    /// Samples an orientation from the supplied coin flips (one per edge),
    /// so callers can plug in any RNG without this crate depending on one.
    pub fn random(edge_count: usize, mut flip: impl FnMut() -> bool) -> Self {
        Orientation {
            directions: (0..edge_count)
                .map(|_| {
                    if flip() {
                        EdgeDirection::FromLarger
                    } else {
                        EdgeDirection::FromSmaller
                    }
                })
                .collect(),
        }
    }
}

/// DOT rendering of an oriented signed graph: arrows run from each edge's
/// source to its target; negative edges are dashed.
pub fn emit_dot_oriented(g: &SignedGraph, orientation: &Orientation) -> Result<String> {
    orientation.check_against(g)?;
    let mut out = String::from("digraph G {\n");
    for v in 0..g.vertex_count() {
        out.push_str(&format!("  {};\n", v + 1));
    }
    for idx in 0..g.edge_count() {
        let (src, dst) = orientation.arrow(g, idx);
        if g.edge(idx).sign.is_negative() {
            out.push_str(&format!(
                "  {} -> {} [style=dashed, label=\"-\"];\n",
                src + 1,
                dst + 1
            ));
        } else {
            out.push_str(&format!("  {} -> {} [label=\"+\"];\n", src + 1, dst + 1));
        }
    }
    out.push_str("}\n");
    Ok(out)
}
