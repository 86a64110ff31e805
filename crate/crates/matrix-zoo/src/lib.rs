//! The matrix zoo of a simple signed graph.
//!
//! For a signed graph G on n vertices with m edges this crate builds, over
//! the Gaussian integers:
//!
//! * `A`  — signed adjacency matrix,
//! * `D`  — diagonal degree matrix, `D±` — diagonal net-degree matrix
//!   (positive minus negative incident edges),
//! * `L = D - A`, `Q = D + A` — Laplacian and signless Laplacian,
//! * `L± = D± - A`, `Q± = D± + A` — their net counterparts,
//! * `M±` — net incidence matrix: column `e = {u,v}` has entries 1 at both
//!   endpoints when `e` is positive and `i` at both endpoints when negative,
//! * `N±` — oriented net incidence matrix: same as `M±` except the entry at
//!   the edge's target endpoint is negated.
//!
//! The defining factorizations `Q± = M± M±ᵀ`, `L± = N± N±ᵀ`,
//! `Q(|G|) = M± M±*`, `L(|G|) = N± N±*` are checked by
//! [`verify_factorizations`]; the other verifier entry points cover the
//! negation symmetries, the rank relations tying the incidence matrices to
//! the underlying graph, quadratic forms, and the balance identities
//! satisfied by kernel vectors.

mod bundle;
mod orientation;
mod quadratic;
mod verify;

pub use bundle::{
    adjacency, build_bundle, degree, laplacian, net_degree, net_incidence, net_laplacian,
    oriented_net_incidence, signless_laplacian, signless_net_laplacian, MatrixBundle,
};
pub use orientation::{emit_dot_oriented, EdgeDirection, Orientation};
pub use quadratic::{
    quadratic_form_l, quadratic_form_l_combinatorial, quadratic_form_l_matrix, quadratic_form_q,
    quadratic_form_q_combinatorial, quadratic_form_q_matrix,
};
pub use verify::{
    kernel_balance_check, verify_factorizations, verify_negation_relations, verify_rank_relations,
    Check, CheckReport,
};

/// Errors from matrix construction and verification.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ZooError {
    /// An orientation string has the wrong number of edges.
    #[error("orientation covers {found} edges but the graph has {expected}")]
    OrientationLength { expected: usize, found: usize },

    /// An orientation string contains a character other than `<` or `>`.
    #[error("invalid orientation character {ch:?} at position {position} (expected '<' or '>')")]
    OrientationChar { ch: char, position: usize },

    /// A vector argument has the wrong length.
    #[error("vector has length {found} but the graph has {expected} vertices")]
    VectorLength { expected: usize, found: usize },

    #[error(transparent)]
    Linalg(#[from] gaussian_linalg::LinalgError),
}

pub type Result<T> = std::result::Result<T, ZooError>;
