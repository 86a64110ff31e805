use crate::{GraphError, Result, SignedGraph};

/// A subset of a graph's edges, identified by edge index. The mask always
/// spans all vertices of the parent graph: unselected vertices simply sit in
/// singleton components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphMask {
    selected: Vec<usize>,
}

impl SubgraphMask {
    /// Validates the indices against `g`, sorts, and deduplicates.
    pub fn new(g: &SignedGraph, indices: impl IntoIterator<Item = usize>) -> Result<SubgraphMask> {
        let mut selected: Vec<usize> = indices.into_iter().collect();
        for &idx in &selected {
            if idx >= g.edge_count() {
                return Err(GraphError::EdgeIndexOutOfRange {
                    index: idx,
                    m: g.edge_count(),
                });
            }
        }
        selected.sort_unstable();
        selected.dedup();
        Ok(SubgraphMask { selected })
    }

    /// The mask containing every edge.
    pub fn full(g: &SignedGraph) -> SubgraphMask {
        SubgraphMask {
            selected: (0..g.edge_count()).collect(),
        }
    }

    /// Selected edge indices, ascending.
    pub fn edges(&self) -> &[usize] {
        &self.selected
    }

    pub fn len(&self) -> usize {
        self.selected.len()
    }

    pub fn is_empty(&self) -> bool {
        self.selected.is_empty()
    }
}

/// Structural class of one connected component of a spanning subgraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    /// Acyclic and connected (single vertices included).
    Tree,
    /// Exactly one cycle, of odd length.
    OddUnicyclic,
    /// Exactly one cycle, of even length.
    EvenUnicyclic,
    /// Two or more independent cycles.
    Other,
}

/// One connected component of a spanning subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Vertices in the component, ascending.
    pub vertices: Vec<usize>,
    /// Mask edge indices inside the component, ascending.
    pub edges: Vec<usize>,
    pub kind: ComponentKind,
    /// Number of selected negative edges in the component.
    pub negative_edges: usize,
}

impl Component {
    /// A component is negative when it contains an odd number of negative edges.
    pub fn is_negative(&self) -> bool {
        self.negative_edges % 2 == 1
    }

    pub fn is_tree(&self) -> bool {
        matches!(self.kind, ComponentKind::Tree)
    }

    pub fn is_odd_unicyclic(&self) -> bool {
        matches!(self.kind, ComponentKind::OddUnicyclic)
    }
}

/// Full structural classification of a spanning subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    /// Components ordered by smallest contained vertex.
    pub components: Vec<Component>,
    /// Count of negative components among trees and odd-unicyclic components.
    pub b_minus: usize,
    /// Number of tree components.
    pub tree_components: usize,
    /// Number of odd-unicyclic components.
    pub odd_unicyclic_components: usize,
    /// True when every component is a tree or odd-unicyclic.
    pub is_tu: bool,
}

impl ComponentReport {
    pub fn has_unique_tree(&self) -> bool {
        self.tree_components == 1
    }

    /// Index into `components` of the component containing `v`.
    pub fn component_of(&self, v: usize) -> usize {
        self.components
            .iter()
            .position(|c| c.vertices.binary_search(&v).is_ok())
            .expect("every vertex lies in exactly one component of a spanning subgraph")
    }
}

/// Decomposes the spanning subgraph `(V(g), mask)` into connected components
/// and classifies each one.
///
/// A component with `k` vertices and `e` selected edges is a tree iff
/// `e = k - 1`, unicyclic iff `e = k` (odd or even according to the parity of
/// its unique cycle, detected by 2-coloring), and `Other` when `e > k`.
pub fn classify_spanning_subgraph(g: &SignedGraph, mask: &SubgraphMask) -> ComponentReport {
    let n = g.vertex_count();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n]; // (neighbor, mask edge)
    for &idx in mask.edges() {
        let e = g.edge(idx);
        adj[e.u].push((e.v, idx));
        adj[e.v].push((e.u, idx));
    }

    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut components = Vec::new();
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        // BFS with 2-coloring; an edge joining same-colored vertices
        // witnesses an odd cycle.
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        let mut odd_cycle = false;
        color[start] = Some(false);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            vertices.push(v);
            for &(w, idx) in &adj[v] {
                match color[w] {
                    None => {
                        color[w] = Some(!color[v].unwrap());
                        queue.push_back(w);
                    }
                    Some(cw) => {
                        if cw == color[v].unwrap() {
                            odd_cycle = true;
                        }
                    }
                }
                // Each edge appears in both endpoint lists; count it from u.
                if v == g.edge(idx).u {
                    edges.push(idx);
                }
            }
        }
        vertices.sort_unstable();
        edges.sort_unstable();
        let negative_edges = edges
            .iter()
            .filter(|&&idx| g.edge(idx).sign.is_negative())
            .count();
        let kind = if edges.len() + 1 == vertices.len() {
            ComponentKind::Tree
        } else if edges.len() == vertices.len() {
            if odd_cycle {
                ComponentKind::OddUnicyclic
            } else {
                ComponentKind::EvenUnicyclic
            }
        } else {
            ComponentKind::Other
        };
        components.push(Component {
            vertices,
            edges,
            kind,
            negative_edges,
        });
    }

    let tree_components = components.iter().filter(|c| c.is_tree()).count();
    let odd_unicyclic_components = components.iter().filter(|c| c.is_odd_unicyclic()).count();
    let is_tu = components
        .iter()
        .all(|c| c.is_tree() || c.is_odd_unicyclic());
    let b_minus = components
        .iter()
        .filter(|c| (c.is_tree() || c.is_odd_unicyclic()) && c.is_negative())
        .count();
    ComponentReport {
        components,
        b_minus,
        tree_components,
        odd_unicyclic_components,
        is_tu,
    }
}
