use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{GMatrix, LinalgError, Result};

/// Basis of the rational null space of a real integer matrix.
///
/// The input must have no imaginary parts (the Laplacian-style matrices this
/// is used on are real); elimination is Gauss–Jordan over `BigRational`, so
/// the result is exact. Returns one vector per free column, each of length
/// `m.cols()`, with the free coordinate set to 1. An injective matrix yields
/// an empty basis.
pub fn kernel_basis(m: &GMatrix) -> Result<Vec<Vec<BigRational>>> {
    let rows = m.rows();
    let cols = m.cols();
    let mut work: Vec<Vec<BigRational>> = Vec::with_capacity(rows);
    for r in 0..rows {
        let mut row = Vec::with_capacity(cols);
        for c in 0..cols {
            let e = m.get(r, c);
            if !e.is_real() {
                return Err(LinalgError::ComplexEntry { row: r, col: c });
            }
            row.push(BigRational::from_integer(e.re().clone()));
        }
        work.push(row);
    }

    // Reduced row echelon form.
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut lead = 0usize;
    for col in 0..cols {
        if lead == rows {
            break;
        }
        let Some(pivot_row) = (lead..rows).find(|&r| !work[r][col].is_zero()) else {
            continue;
        };
        work.swap(pivot_row, lead);
        let inv = work[lead][col].recip();
        for c in col..cols {
            let scaled = &work[lead][c] * &inv;
            work[lead][c] = scaled;
        }
        for r in 0..rows {
            if r != lead && !work[r][col].is_zero() {
                let factor = work[r][col].clone();
                for c in col..cols {
                    let updated = &work[r][c] - &(&factor * &work[lead][c]);
                    work[r][c] = updated;
                }
            }
        }
        pivot_cols.push(col);
        lead += 1;
    }

    let is_pivot: Vec<bool> = {
        let mut flags = vec![false; cols];
        for &c in &pivot_cols {
            flags[c] = true;
        }
        flags
    };

    let zero = BigRational::from_integer(BigInt::zero());
    let one = BigRational::from_integer(BigInt::one());
    let mut basis = Vec::new();
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![zero.clone(); cols];
        v[free] = one.clone();
        for (row, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -work[row][free].clone();
        }
        basis.push(v);
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::GaussianInt;

    fn from_i64(rows: &[&[i64]]) -> GMatrix {
        GMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| GaussianInt::new(v, 0)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn ratio(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn assert_in_kernel(m: &GMatrix, v: &[BigRational]) {
        for r in 0..m.rows() {
            let mut acc = BigRational::from_integer(BigInt::zero());
            for c in 0..m.cols() {
                acc += BigRational::from_integer(m.get(r, c).re().clone()) * &v[c];
            }
            assert!(acc.is_zero(), "row {r} does not annihilate {v:?}");
        }
    }

    #[test]
    fn invertible_matrix_has_empty_kernel() {
        assert!(kernel_basis(&GMatrix::identity(3)).unwrap().is_empty());
    }

    #[test]
    fn one_dimensional_kernel_of_a_rank_deficient_matrix() {
        let m = from_i64(&[&[1, -1, 0], &[0, 1, -1], &[1, 0, -1]]);
        let basis = kernel_basis(&m).unwrap();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], vec![ratio(1), ratio(1), ratio(1)]);
        assert_in_kernel(&m, &basis[0]);
    }

    #[test]
    fn wide_matrix_kernel_vectors_annihilate() {
        let m = from_i64(&[&[2, 4, 1, 3], &[0, 0, 1, 1]]);
        let basis = kernel_basis(&m).unwrap();
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert_in_kernel(&m, v);
        }
    }

    #[test]
    fn complex_entries_are_rejected() {
        let m = GMatrix::from_rows(vec![vec![GaussianInt::i()]]).unwrap();
        assert!(matches!(
            kernel_basis(&m),
            Err(LinalgError::ComplexEntry { row: 0, col: 0 })
        ));
    }

    #[test]
    fn zero_matrix_kernel_is_full() {
        let m = GMatrix::zeros(2, 3);
        let basis = kernel_basis(&m).unwrap();
        assert_eq!(basis.len(), 3);
    }
}
