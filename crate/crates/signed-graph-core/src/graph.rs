use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::{GraphError, Result};

/// The sign attached to an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `+1` or `-1`.
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_negative(self) -> bool {
        matches!(self, Sign::Minus)
    }

    /// Parses one of the accepted sign tokens `+`, `-`, `1`, `-1`.
    pub fn from_token(token: &str) -> Result<Sign> {
        match token {
            "+" | "1" => Ok(Sign::Plus),
            "-" | "-1" => Ok(Sign::Minus),
            other => Err(GraphError::InvalidSign {
                token: other.to_string(),
            }),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

impl FromStr for Sign {
    type Err = GraphError;
    fn from_str(s: &str) -> Result<Sign> {
        Sign::from_token(s)
    }
}

/// An undirected signed edge with canonical endpoint order `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    /// Canonicalizes the endpoint order; rejects loops.
    pub fn new(a: usize, b: usize, sign: Sign) -> Result<Edge> {
        if a == b {
            return Err(GraphError::LoopEdge { u: a + 1, v: b + 1 });
        }
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        Ok(Edge { u, v, sign })
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn is_incident(&self, vertex: usize) -> bool {
        self.u == vertex || self.v == vertex
    }

    /// The endpoint that is not `vertex`; panics if `vertex` is not incident.
    pub fn other(&self, vertex: usize) -> usize {
        if vertex == self.u {
            self.v
        } else {
            assert_eq!(vertex, self.v, "vertex {vertex} is not an endpoint");
            self.u
        }
    }
}

/// A simple signed graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl SignedGraph {
    /// Validates simplicity: no loops (rejected by [`Edge::new`] already, but
    /// re-checked for edges built literally), no duplicate vertex pairs, all
    /// endpoints in range.
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<SignedGraph> {
        let mut seen: HashSet<(usize, usize)> = HashSet::with_capacity(edges.len());
        for e in &edges {
            if e.u == e.v {
                return Err(GraphError::LoopEdge {
                    u: e.u + 1,
                    v: e.v + 1,
                });
            }
            if e.v >= n {
                let worst = e.u.max(e.v);
                return Err(GraphError::VertexOutOfRange {
                    vertex: worst + 1,
                    n,
                });
            }
            let key = (e.u.min(e.v), e.u.max(e.v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge {
                    u: key.0 + 1,
                    v: key.1 + 1,
                });
            }
        }
        let edges = edges
            .into_iter()
            .map(|e| Edge {
                u: e.u.min(e.v),
                v: e.u.max(e.v),
                sign: e.sign,
            })
            .collect();
        Ok(SignedGraph { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> &Edge {
        &self.edges[index]
    }

    pub fn negative_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.sign.is_negative()).count()
    }

    /// Number of edges incident to `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.is_incident(v)).count()
    }

    /// Net degree: positive incident edges minus negative incident edges.
    pub fn net_degree(&self, v: usize) -> i64 {
        self.edges
            .iter()
            .filter(|e| e.is_incident(v))
            .map(|e| e.sign.value())
            .sum()
    }

    /// The same graph with every edge sign flipped.
    pub fn negated(&self) -> SignedGraph {
        SignedGraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    sign: e.sign.flipped(),
                    ..*e
                })
                .collect(),
        }
    }

    /// The underlying unsigned graph, represented as the all-positive signing.
    pub fn underlying(&self) -> SignedGraph {
        SignedGraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    sign: Sign::Plus,
                    ..*e
                })
                .collect(),
        }
    }

    /// Whether the graph has at most one connected component (vacuously true
    /// for the empty vertex set).
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1usize;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }
}
