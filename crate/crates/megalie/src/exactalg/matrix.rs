//! Dense matrices over the rationals with exact Gauss–Jordan elimination.

use super::rational::Rational;
use super::ExactAlgError;
use std::fmt;

/// Row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::ONE;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Convenience constructor from integer literals, mostly for tests.
    pub fn from_i64(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| Rational::from(n)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Rational> {
        self.row(i).to_vec()
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, ExactAlgError> {
        if self.cols != rhs.rows {
            return Err(ExactAlgError::DimensionMismatch {
                context: "matrix product",
                left: self.cols,
                right: rhs.rows,
            });
        }
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Image of a coordinate vector under the matrix, `self * v`.
    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, ExactAlgError> {
        if self.cols != v.len() {
            return Err(ExactAlgError::DimensionMismatch {
                context: "matrix-vector product",
                left: self.cols,
                right: v.len(),
            });
        }
        let mut out = vec![Rational::ZERO; self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self[(i, j)].is_zero() && !v[j].is_zero() {
                    out[i] += self[(i, j)] * v[j];
                }
            }
        }
        Ok(out)
    }

    /// Unique reduced row echelon form; the row space is preserved.
    pub fn rref(&self) -> Matrix {
        let mut m = self.clone();
        m.rref_in_place();
        m
    }

    pub(crate) fn rref_in_place(&mut self) {
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(src) = (pivot_row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(pivot_row, src);
            let inv = self[(pivot_row, col)].recip();
            for j in col..self.cols {
                let v = self[(pivot_row, j)] * inv;
                self[(pivot_row, j)] = v;
            }
            for r in 0..self.rows {
                if r != pivot_row && !self[(r, col)].is_zero() {
                    let factor = self[(r, col)];
                    for j in col..self.cols {
                        let delta = factor * self[(pivot_row, j)];
                        self[(r, j)] -= delta;
                    }
                }
            }
            pivot_row += 1;
        }
    }

    pub fn rank(&self) -> usize {
        let r = self.rref();
        (0..r.rows)
            .filter(|&i| r.row(i).iter().any(|e| !e.is_zero()))
            .count()
    }

    /// Canonical basis of the right null space `{v : self * v = 0}`,
    /// one row per basis vector.
    pub fn null_space(&self) -> Matrix {
        let r = self.rref();
        let mut pivot_cols = Vec::new();
        for i in 0..r.rows {
            if let Some(c) = (0..r.cols).find(|&c| !r[(i, c)].is_zero()) {
                pivot_cols.push(c);
            }
        }
        let free_cols: Vec<usize> = (0..r.cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut basis = Vec::with_capacity(free_cols.len());
        for &fc in &free_cols {
            let mut v = vec![Rational::ZERO; r.cols];
            v[fc] = Rational::ONE;
            for (pi, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -r[(pi, fc)];
            }
            basis.push(v);
        }
        let mut out = Matrix::from_rows(basis);
        if out.rows == 0 {
            out = Matrix::zero(0, r.cols);
        }
        out.rref_in_place();
        out
    }

    /// Exact inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, n + i)] = Rational::ONE;
        }
        aug.rref_in_place();
        for i in 0..n {
            for j in 0..n {
                let expected = if i == j { Rational::ONE } else { Rational::ZERO };
                if aug[(i, j)] != expected {
                    return None;
                }
            }
        }
        let mut out = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = aug[(i, n + j)];
            }
        }
        Some(out)
    }

    /// Exact determinant via fraction-preserving elimination.
    pub fn determinant(&self) -> Result<Rational, ExactAlgError> {
        if self.rows != self.cols {
            return Err(ExactAlgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::ONE;
        for col in 0..n {
            let Some(src) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Ok(Rational::ZERO);
            };
            if src != col {
                m.swap_rows(col, src);
                det = -det;
            }
            det *= m[(col, col)];
            let inv = m[(col, col)].recip();
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)] * inv;
                for j in col..n {
                    let delta = factor * m[(col, j)];
                    m[(r, j)] -= delta;
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, ExactAlgError> {
        if self.cols != other.cols {
            return Err(ExactAlgError::DimensionMismatch {
                context: "vertical stack",
                left: self.cols,
                right: other.cols,
            });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
