use std::fmt;

use crate::{GaussianInt, LinalgError, Result};

/// A dense matrix over the Gaussian integers, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianInt>,
}

impl GMatrix {
    /// All-zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        GMatrix {
            rows,
            cols,
            entries: vec![GaussianInt::zero(); rows * cols],
        }
    }

    /// Square identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = GMatrix::zeros(n, n);
        for k in 0..n {
            m.set(k, k, GaussianInt::one());
        }
        m
    }

    /// Builds a matrix entry by entry from a closure.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussianInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        GMatrix { rows, cols, entries }
    }

    /// Builds a matrix from explicit rows; every row must have equal length.
    pub fn from_rows(rows: Vec<Vec<GaussianInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        for row in &rows {
            if row.len() != c {
                return Err(LinalgError::DimensionMismatch {
                    lhs_rows: 1,
                    lhs_cols: c,
                    rhs_rows: 1,
                    rhs_cols: row.len(),
                });
            }
        }
        Ok(GMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &GaussianInt {
        assert!(row < self.rows && col < self.cols, "entry ({row},{col}) out of range");
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: GaussianInt) {
        assert!(row < self.rows && col < self.cols, "entry ({row},{col}) out of range");
        self.entries[row * self.cols + col] = value;
    }

    /// Transpose without conjugation.
    pub fn transpose(&self) -> GMatrix {
        GMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Conjugate transpose.
    pub fn conj_transpose(&self) -> GMatrix {
        GMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).conj())
    }

    /// Entrywise negation.
    pub fn negated(&self) -> GMatrix {
        GMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    /// Entrywise absolute values; defined only for real matrices, where it
    /// replaces each entry by `|entry|` (used to pass from a signed adjacency
    /// matrix to the adjacency matrix of the underlying graph).
    pub fn abs_entries(&self) -> Result<GMatrix> {
        let mut out = self.clone();
        for r in 0..self.rows {
            for c in 0..self.cols {
                let e = self.get(r, c);
                if !e.is_real() {
                    return Err(LinalgError::ComplexEntry { row: r, col: c });
                }
                use num_traits::Signed;
                out.set(r, c, GaussianInt::new(e.re().abs(), 0));
            }
        }
        Ok(out)
    }

    /// Matrix product.
    pub fn mul(&self, rhs: &GMatrix) -> Result<GMatrix> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch {
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: rhs.rows,
                rhs_cols: rhs.cols,
            });
        }
        let mut out = GMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let sum = out.get(r, c) + &(a * b);
                    out.set(r, c, sum);
                }
            }
        }
        Ok(out)
    }

    /// Matrix sum.
    pub fn add(&self, rhs: &GMatrix) -> Result<GMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinalgError::DimensionMismatch {
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: rhs.rows,
                rhs_cols: rhs.cols,
            });
        }
        Ok(GMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Matrix difference (used for verification witnesses).
    pub fn sub(&self, rhs: &GMatrix) -> Result<GMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinalgError::DimensionMismatch {
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: rhs.rows,
                rhs_cols: rhs.cols,
            });
        }
        Ok(GMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Returns a copy with the listed rows and columns removed. Duplicate
    /// indices are tolerated; out-of-range indices are an error.
    pub fn delete(&self, drop_rows: &[usize], drop_cols: &[usize]) -> Result<GMatrix> {
        for &r in drop_rows {
            if r >= self.rows {
                return Err(LinalgError::IndexOutOfRange {
                    axis: "row",
                    index: r,
                    rows: self.rows,
                    cols: self.cols,
                });
            }
        }
        for &c in drop_cols {
            if c >= self.cols {
                return Err(LinalgError::IndexOutOfRange {
                    axis: "column",
                    index: c,
                    rows: self.rows,
                    cols: self.cols,
                });
            }
        }
        let keep_rows: Vec<usize> = (0..self.rows).filter(|r| !drop_rows.contains(r)).collect();
        let keep_cols: Vec<usize> = (0..self.cols).filter(|c| !drop_cols.contains(c)).collect();
        Ok(GMatrix::from_fn(keep_rows.len(), keep_cols.len(), |r, c| {
            self.get(keep_rows[r], keep_cols[c]).clone()
        }))
    }

    /// Returns the submatrix consisting of the listed columns, in the order
    /// given (used for minors indexed by an edge subset).
    pub fn take_columns(&self, cols: &[usize]) -> Result<GMatrix> {
        for &c in cols {
            if c >= self.cols {
                return Err(LinalgError::IndexOutOfRange {
                    axis: "column",
                    index: c,
                    rows: self.rows,
                    cols: self.cols,
                });
            }
        }
        Ok(GMatrix::from_fn(self.rows, cols.len(), |r, c| {
            self.get(r, cols[c]).clone()
        }))
    }

    /// First coordinate where the two matrices differ, with both values
    /// rendered; `None` when the matrices are equal. Shape differences are
    /// reported as a difference at (0,0).
    pub fn first_difference(&self, rhs: &GMatrix) -> Option<(usize, usize, String, String)> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Some((
                0,
                0,
                format!("{}x{}", self.rows, self.cols),
                format!("{}x{}", rhs.rows, rhs.cols),
            ));
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) != rhs.get(r, c) {
                    return Some((r, c, self.get(r, c).to_string(), rhs.get(r, c).to_string()));
                }
            }
        }
        None
    }
}

/// Renders a matrix as bracketed rows with right-aligned, column-padded
/// entries, one row per line.
pub fn format_matrix(m: &GMatrix) -> String {
    if m.cols() == 0 {
        return (0..m.rows()).map(|_| "[]\n".to_string()).collect();
    }
    let rendered: Vec<Vec<String>> = (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c).to_string()).collect())
        .collect();
    let mut widths = vec![0usize; m.cols()];
    for row in &rendered {
        for (c, s) in row.iter().enumerate() {
            widths[c] = widths[c].max(s.len());
        }
    }
    let mut out = String::new();
    for row in &rendered {
        out.push('[');
        for (c, s) in row.iter().enumerate() {
            if c > 0 {
                out.push(' ');
            }
            for _ in 0..widths[c] - s.len() {
                out.push(' ');
            }
            out.push_str(s);
        }
        out.push_str("]\n");
    }
    out
}

impl fmt::Display for GMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_matrix(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::new(re, im)
    }

    fn from_i64(rows: &[&[i64]]) -> GMatrix {
        GMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| g(v, 0)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn product_against_hand_computation() {
        let a = from_i64(&[&[1, 2], &[3, 4]]);
        let b = from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), from_i64(&[&[2, 1], &[4, 3]]));
    }

    #[test]
    fn product_shape_mismatch_is_an_error() {
        let a = GMatrix::zeros(2, 3);
        let b = GMatrix::zeros(2, 3);
        assert!(matches!(
            a.mul(&b),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn conj_transpose_conjugates_and_flips() {
        let m = GMatrix::from_rows(vec![vec![g(1, 2), g(0, -1)]]).unwrap();
        let mt = m.conj_transpose();
        assert_eq!(mt.rows(), 2);
        assert_eq!(mt.cols(), 1);
        assert_eq!(*mt.get(0, 0), g(1, -2));
        assert_eq!(*mt.get(1, 0), g(0, 1));
    }

    #[test]
    fn delete_removes_requested_lines() {
        let m = from_i64(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let d = m.delete(&[1], &[0, 2]).unwrap();
        assert_eq!(d, from_i64(&[&[2], &[8]]));
        assert!(matches!(
            m.delete(&[3], &[]),
            Err(LinalgError::IndexOutOfRange { .. })
        ));
        assert_eq!(m.delete(&[], &[]).unwrap(), m);
    }

    #[test]
    fn take_columns_preserves_requested_order() {
        let m = from_i64(&[&[1, 2, 3], &[4, 5, 6]]);
        let t = m.take_columns(&[2, 0]).unwrap();
        assert_eq!(t, from_i64(&[&[3, 1], &[6, 4]]));
    }

    #[test]
    fn formatting_aligns_columns() {
        let m = GMatrix::from_rows(vec![
            vec![g(1, 0), g(-1, 0)],
            vec![g(0, -1), g(10, 0)],
        ])
        .unwrap();
        assert_eq!(format_matrix(&m), "[ 1 -1]\n[-i 10]\n");
    }

    #[test]
    fn formatting_zero_column_matrix() {
        let m = GMatrix::zeros(2, 0);
        assert_eq!(format_matrix(&m), "[]\n[]\n");
    }
}
