use gaussian_linalg::{GMatrix, GaussianInt};
use signed_graph_core::SignedGraph;

use crate::{Orientation, Result};

/// Signed adjacency matrix: `a(u,v) = sign of the edge {u,v}`, 0 otherwise.
pub fn adjacency(g: &SignedGraph) -> GMatrix {
    let n = g.vertex_count();
    let mut a = GMatrix::zeros(n, n);
    for e in g.edges() {
        let s = GaussianInt::new(e.sign.value(), 0);
        a.set(e.u, e.v, s.clone());
        a.set(e.v, e.u, s);
    }
    a
}

/// Diagonal matrix of vertex degrees.
pub fn degree(g: &SignedGraph) -> GMatrix {
    let n = g.vertex_count();
    let mut d = GMatrix::zeros(n, n);
    for v in 0..n {
        d.set(v, v, GaussianInt::new(g.degree(v) as i64, 0));
    }
    d
}

/// Diagonal matrix of net degrees (positive minus negative incident edges).
pub fn net_degree(g: &SignedGraph) -> GMatrix {
    let n = g.vertex_count();
    let mut d = GMatrix::zeros(n, n);
    for v in 0..n {
        d.set(v, v, GaussianInt::new(g.net_degree(v), 0));
    }
    d
}

/// Laplacian `L = D - A`.
pub fn laplacian(g: &SignedGraph) -> GMatrix {
    degree(g).sub(&adjacency(g)).expect("shapes match by construction")
}

/// Signless Laplacian `Q = D + A`.
pub fn signless_laplacian(g: &SignedGraph) -> GMatrix {
    degree(g).add(&adjacency(g)).expect("shapes match by construction")
}

/// Net Laplacian `L± = D± - A`.
pub fn net_laplacian(g: &SignedGraph) -> GMatrix {
    net_degree(g).sub(&adjacency(g)).expect("shapes match by construction")
}

/// Signless net Laplacian `Q± = D± + A`.
pub fn signless_net_laplacian(g: &SignedGraph) -> GMatrix {
    net_degree(g).add(&adjacency(g)).expect("shapes match by construction")
}

/// Net incidence matrix `M±` (n rows, one column per edge): a positive edge
/// contributes 1 at both endpoints, a negative edge contributes `i` at both.
pub fn net_incidence(g: &SignedGraph) -> GMatrix {
    let mut m = GMatrix::zeros(g.vertex_count(), g.edge_count());
    for (idx, e) in g.edges().iter().enumerate() {
        let entry = if e.sign.is_negative() {
            GaussianInt::i()
        } else {
            GaussianInt::one()
        };
        m.set(e.u, idx, entry.clone());
        m.set(e.v, idx, entry);
    }
    m
}

/// Oriented net incidence matrix `N±`: as [`net_incidence`], but each
/// column's entry at the edge's target endpoint is negated, so positive
/// columns read (1, -1) and negative columns (i, -i) from source to target.
pub fn oriented_net_incidence(g: &SignedGraph, orientation: &Orientation) -> Result<GMatrix> {
    orientation.check_against(g)?;
    let mut m = GMatrix::zeros(g.vertex_count(), g.edge_count());
    for idx in 0..g.edge_count() {
        let entry = if g.edge(idx).sign.is_negative() {
            GaussianInt::i()
        } else {
            GaussianInt::one()
        };
        let (src, dst) = orientation.arrow(g, idx);
        m.set(src, idx, entry.clone());
        m.set(dst, idx, -entry);
    }
    Ok(m)
}

/// Every matrix of the zoo for one graph and one orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixBundle {
    pub adjacency: GMatrix,
    pub degree: GMatrix,
    pub net_degree: GMatrix,
    pub laplacian: GMatrix,
    pub signless_laplacian: GMatrix,
    pub net_laplacian: GMatrix,
    pub signless_net_laplacian: GMatrix,
    pub net_incidence: GMatrix,
    pub oriented_net_incidence: GMatrix,
}

/// Builds all nine matrices.
pub fn build_bundle(g: &SignedGraph, orientation: &Orientation) -> Result<MatrixBundle> {
    Ok(MatrixBundle {
        adjacency: adjacency(g),
        degree: degree(g),
        net_degree: net_degree(g),
        laplacian: laplacian(g),
        signless_laplacian: signless_laplacian(g),
        net_laplacian: net_laplacian(g),
        signless_net_laplacian: signless_net_laplacian(g),
        net_incidence: net_incidence(g),
        oriented_net_incidence: oriented_net_incidence(g, orientation)?,
    })
}

impl MatrixBundle {
    /// `(label, matrix)` pairs in presentation order.
    pub fn labeled(&self) -> [(&'static str, &GMatrix); 9] {
        [
            ("A", &self.adjacency),
            ("D", &self.degree),
            ("D±", &self.net_degree),
            ("L", &self.laplacian),
            ("Q", &self.signless_laplacian),
            ("L±", &self.net_laplacian),
            ("Q±", &self.signless_net_laplacian),
            ("M±", &self.net_incidence),
            ("N±", &self.oriented_net_incidence),
        ]
    }
}
