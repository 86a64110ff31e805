//! Exact linear algebra over the Gaussian integers `Z[i]`.
//!
//! Everything in this crate is arbitrary precision and exact: matrix entries
//! are [`GaussianInt`] values (pairs of `BigInt`s), determinants are computed
//! by fraction-free Bareiss elimination, rank by fraction-free row echelon
//! over the field of Gaussian rationals, and kernels of real integer matrices
//! by Gauss–Jordan elimination over `BigRational`. No floating point is used
//! anywhere.

mod det;
mod gaussian;
mod kernel;
mod matrix;

pub use det::{det, rank};
pub use gaussian::GaussianInt;
pub use kernel::kernel_basis;
pub use matrix::{format_matrix, GMatrix};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Errors reported by the exact linear-algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    /// A square-only operation (determinant) was handed a rectangular matrix.
    #[error("matrix is {rows}x{cols} but a square matrix is required")]
    NonSquare { rows: usize, cols: usize },

    /// Two operands have incompatible shapes.
    #[error("dimension mismatch: left operand is {lhs_rows}x{lhs_cols}, right operand is {rhs_rows}x{rhs_cols}")]
    DimensionMismatch {
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },

    /// A row or column index is outside the matrix.
    #[error("{axis} index {index} is out of range for a {rows}x{cols} matrix")]
    IndexOutOfRange {
        axis: &'static str,
        index: usize,
        rows: usize,
        cols: usize,
    },

    /// Kernel computation requires a matrix with no imaginary parts.
    #[error("kernel basis requires a real matrix, but entry ({row},{col}) has a nonzero imaginary part")]
    ComplexEntry { row: usize, col: usize },
}

pub type Result<T> = std::result::Result<T, LinalgError>;
