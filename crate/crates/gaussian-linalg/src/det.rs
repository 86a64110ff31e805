use crate::{GMatrix, GaussianInt, LinalgError, Result};

/// Exact determinant over `Z[i]` by fraction-free Bareiss elimination.
///
/// Pivots are chosen as the first nonzero entry in each column (scanning
/// downward); row swaps flip the sign. Every interior division in the Bareiss
/// recurrence is exact in an integral domain, and `exact_div` enforces that:
/// a failed division would mean the elimination state is corrupt, so it
/// panics rather than returning a wrong answer.
///
/// The 0x0 determinant is 1, so principal-minor formulas degenerate
/// gracefully on one-vertex graphs.
pub fn det(m: &GMatrix) -> Result<GaussianInt> {
    if !m.is_square() {
        return Err(LinalgError::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(GaussianInt::one());
    }
    let mut work: Vec<Vec<GaussianInt>> = (0..n)
        .map(|r| (0..n).map(|c| m.get(r, c).clone()).collect())
        .collect();
    let mut negate = false;
    let mut prev = GaussianInt::one();
    for k in 0..n - 1 {
        let pivot_row = match (k..n).find(|&r| !work[r][k].is_zero()) {
            Some(r) => r,
            None => return Ok(GaussianInt::zero()),
        };
        if pivot_row != k {
            work.swap(pivot_row, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&work[i][j] * &work[k][k]) - &(&work[i][k] * &work[k][j]);
                work[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss interior division must be exact over an integral domain");
            }
            work[i][k] = GaussianInt::zero();
        }
        prev = work[k][k].clone();
    }
    let result = work[n - 1][n - 1].clone();
    Ok(if negate { -result } else { result })
}

/// Rank over the field of Gaussian rationals, computed by fraction-free row
/// echelon reduction (Bareiss updates with column skipping) and pivot
/// counting. Works on rectangular matrices.
pub fn rank(m: &GMatrix) -> usize {
    let rows = m.rows();
    let cols = m.cols();
    let mut work: Vec<Vec<GaussianInt>> = (0..rows)
        .map(|r| (0..cols).map(|c| m.get(r, c).clone()).collect())
        .collect();
    let mut prev = GaussianInt::one();
    let mut pivots = 0usize;
    for col in 0..cols {
        if pivots == rows {
            break;
        }
        let pivot_row = match (pivots..rows).find(|&r| !work[r][col].is_zero()) {
            Some(r) => r,
            None => continue,
        };
        work.swap(pivot_row, pivots);
        for i in pivots + 1..rows {
            for j in col + 1..cols {
                let num = &(&work[i][j] * &work[pivots][col]) - &(&work[i][col] * &work[pivots][j]);
                work[i][j] = num
                    .exact_div(&prev)
                    .expect("fraction-free echelon division must be exact over an integral domain");
            }
            work[i][col] = GaussianInt::zero();
        }
        prev = work[pivots][col].clone();
        pivots += 1;
    }
    pivots
}
