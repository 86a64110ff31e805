use gaussian_linalg::{BigRational, GMatrix};
use num_traits::Zero;
use signed_graph_core::SignedGraph;

use crate::verify::edge_energies;
use crate::{net_laplacian, signless_net_laplacian, Result, ZooError};

/// `xᵀ L± x` evaluated two independent ways — as a matrix quadratic form and
/// as the edge sum `Σ_{E+}(x_u - x_v)² - Σ_{E-}(x_u - x_v)²` — with the
/// common value returned. The two routes agreeing is a structural invariant;
/// a mismatch would mean the net Laplacian was built wrong, so it panics.
pub fn quadratic_form_l(g: &SignedGraph, x: &[BigRational]) -> Result<BigRational> {
    let via_matrix = quadratic_form_l_matrix(g, x)?;
    let via_edges = quadratic_form_l_combinatorial(g, x)?;
    assert_eq!(
        via_matrix, via_edges,
        "quadratic form routes disagree for the net Laplacian"
    );
    Ok(via_matrix)
}

/// `xᵀ Q± x` evaluated both as a matrix form and as
/// `Σ_{E+}(x_u + x_v)² - Σ_{E-}(x_u + x_v)²`, with the common value returned.
pub fn quadratic_form_q(g: &SignedGraph, x: &[BigRational]) -> Result<BigRational> {
    let via_matrix = quadratic_form_q_matrix(g, x)?;
    let via_edges = quadratic_form_q_combinatorial(g, x)?;
    assert_eq!(
        via_matrix, via_edges,
        "quadratic form routes disagree for the signless net Laplacian"
    );
    Ok(via_matrix)
}

/// Matrix route for `xᵀ L± x`.
pub fn quadratic_form_l_matrix(g: &SignedGraph, x: &[BigRational]) -> Result<BigRational> {
    evaluate_form(&net_laplacian(g), g, x)
}

/// Edge-sum route for `xᵀ L± x`.
pub fn quadratic_form_l_combinatorial(g: &SignedGraph, x: &[BigRational]) -> Result<BigRational> {
    check_length(g, x)?;
    let (positive, negative) = edge_energies(g, x, false);
    Ok(positive - negative)
}

/// Matrix route for `xᵀ Q± x`.
pub fn quadratic_form_q_matrix(g: &SignedGraph, x: &[BigRational]) -> Result<BigRational> {
    evaluate_form(&signless_net_laplacian(g), g, x)
}

/// Edge-sum route for `xᵀ Q± x`.
pub fn quadratic_form_q_combinatorial(g: &SignedGraph, x: &[BigRational]) -> Result<BigRational> {
    check_length(g, x)?;
    let (positive, negative) = edge_energies(g, x, true);
    Ok(positive - negative)
}

fn check_length(g: &SignedGraph, x: &[BigRational]) -> Result<()> {
    if x.len() != g.vertex_count() {
        return Err(ZooError::VectorLength {
            expected: g.vertex_count(),
            found: x.len(),
        });
    }
    Ok(())
}

fn evaluate_form(matrix: &GMatrix, g: &SignedGraph, x: &[BigRational]) -> Result<BigRational> {
    check_length(g, x)?;
    let mut acc = BigRational::zero();
    for r in 0..matrix.rows() {
        for c in 0..matrix.cols() {
            let entry = matrix.get(r, c);
            if entry.is_zero() {
                continue;
            }
            // The Laplacian-family matrices are real by construction.
            let coeff = BigRational::from_integer(entry.re().clone());
            acc += &x[r] * &coeff * &x[c];
        }
    }
    Ok(acc)
}
