//! Linear subspaces of algebra coordinates in canonical form.
//!
//! The canonical form is the reduced row echelon basis with zero rows
//! dropped, so two subspaces are equal exactly when their basis matrices
//! are entry-wise equal. The closure engine leans on this for
//! deduplication.

use super::matrix::Matrix;
use super::rational::Rational;
use super::ExactAlgError;
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    /// The zero subspace of an `ambient`-dimensional space.
    pub fn zero(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::zero(0, ambient),
        }
    }

    /// The full coordinate space.
    pub fn full(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    /// Canonical span of the rows of `m`.
    pub fn span(m: &Matrix) -> Subspace {
        let ambient = m.cols();
        let r = m.rref();
        let rows: Vec<Vec<Rational>> = (0..r.rows())
            .filter(|&i| r.row(i).iter().any(|e| !e.is_zero()))
            .map(|i| r.row_vec(i))
            .collect();
        let basis = if rows.is_empty() {
            Matrix::zero(0, ambient)
        } else {
            Matrix::from_rows(rows)
        };
        Subspace { ambient, basis }
    }

    pub fn span_of_vectors(ambient: usize, vectors: &[Vec<Rational>]) -> Subspace {
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        assert!(vectors.iter().all(|v| v.len() == ambient));
        Subspace::span(&Matrix::from_rows(vectors.to_vec()))
    }

    /// Span of unit coordinate vectors, handy for fixtures.
    pub fn coordinate_span(ambient: usize, coords: &[usize]) -> Subspace {
        let vecs: Vec<Vec<Rational>> = coords
            .iter()
            .map(|&c| {
                let mut v = vec![Rational::ZERO; ambient];
                v[c] = Rational::ONE;
                v
            })
            .collect();
        Subspace::span_of_vectors(ambient, &vecs)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.dim()).map(move |i| self.basis.row(i))
    }

    fn check_ambient(&self, other: &Subspace, context: &'static str) -> Result<(), ExactAlgError> {
        if self.ambient != other.ambient {
            return Err(ExactAlgError::DimensionMismatch {
                context,
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    /// Canonical basis of `self + other`.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace, ExactAlgError> {
        self.check_ambient(other, "subspace sum")?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        Ok(Subspace::span(&self.basis.vstack(&other.basis)?))
    }

    /// Canonical basis of `self ∩ other`, by the Zassenhaus block trick.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, ExactAlgError> {
        self.check_ambient(other, "subspace intersection")?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let n = self.ambient;
        let rows_total = self.dim() + other.dim();
        let mut block = Matrix::zero(rows_total, 2 * n);
        for (i, row) in self.basis_rows().enumerate() {
            for j in 0..n {
                block[(i, j)] = row[j];
                block[(i, n + j)] = row[j];
            }
        }
        for (i, row) in other.basis_rows().enumerate() {
            for j in 0..n {
                block[(self.dim() + i, j)] = row[j];
            }
        }
        block.rref_in_place();
        // Rows whose left block vanished carry intersection vectors on the right.
        let mut vectors = Vec::new();
        for i in 0..rows_total {
            let left_zero = (0..n).all(|j| block[(i, j)].is_zero());
            let right_nonzero = (0..n).any(|j| !block[(i, n + j)].is_zero());
            if left_zero && right_nonzero {
                vectors.push((0..n).map(|j| block[(i, n + j)]).collect());
            }
        }
        Ok(Subspace::span_of_vectors(n, &vectors))
    }

    /// Residual of `v` after reduction against the canonical basis; zero
    /// exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient, "vector/ambient mismatch");
        let mut v = v.to_vec();
        for row in self.basis_rows() {
            let lead = row.iter().position(|e| !e.is_zero()).expect("zero basis row");
            if !v[lead].is_zero() {
                let factor = v[lead];
                for j in 0..self.ambient {
                    let delta = factor * row[j];
                    v[j] -= delta;
                }
            }
        }
        v
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Rational::is_zero)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && other.basis_rows().all(|row| self.contains_vector(row))
    }

    /// Stable human-readable description against basis labels: pure
    /// coordinate rows print as labels, mixed rows as combinations.
    pub fn describe(&self, labels: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for row in self.basis_rows() {
            let nonzero: Vec<usize> = (0..self.ambient).filter(|&j| !row[j].is_zero()).collect();
            if nonzero.len() == 1 && row[nonzero[0]].is_one() {
                parts.push(labels[nonzero[0]].clone());
            } else {
                let combo: Vec<String> = nonzero
                    .iter()
                    .map(|&j| {
                        if row[j].is_one() {
                            labels[j].clone()
                        } else {
                            format!("{}*{}", row[j], labels[j])
                        }
                    })
                    .collect();
                parts.push(combo.join("+"));
            }
        }
        format!("<{}>", parts.join(", "))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Subspace) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Order by (dimension, lexicographic basis entries); the closure engine's
/// reporting order.
impl Ord for Subspace {
    fn cmp(&self, other: &Subspace) -> Ordering {
        self.dim()
            .cmp(&other.dim())
            .then_with(|| self.basis.cmp(&other.basis))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of {})", self.dim(), self.ambient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_of_disjoint_coordinates() {
        let e1 = Subspace::coordinate_span(3, &[0]);
        let e2 = Subspace::coordinate_span(3, &[1]);
        assert_eq!(e1.sum(&e2).unwrap(), Subspace::coordinate_span(3, &[0, 1]));
    }

    #[test]
    fn zero_is_additive_identity() {
        let u = Subspace::coordinate_span(4, &[1, 3]);
        assert_eq!(u.sum(&Subspace::zero(4)).unwrap(), u);
    }

    #[test]
    fn sum_of_skew_lines_is_plane() {
        // span{e1+e2} + span{e1-e2} = span{e1,e2}
        let a = Subspace::span(&Matrix::from_i64(&[&[1, 1]]));
        let b = Subspace::span(&Matrix::from_i64(&[&[1, -1]]));
        assert_eq!(a.sum(&b).unwrap(), Subspace::full(2));
    }

    #[test]
    fn intersection_cases() {
        let u = Subspace::coordinate_span(3, &[0, 1]);
        let v = Subspace::coordinate_span(3, &[1, 2]);
        assert_eq!(u.intersect(&u).unwrap(), u);
        assert_eq!(u.intersect(&v).unwrap(), Subspace::coordinate_span(3, &[1]));
        assert_eq!(u.intersect(&Subspace::zero(3)).unwrap(), Subspace::zero(3));
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let u = Subspace::zero(3);
        let v = Subspace::zero(4);
        assert!(u.sum(&v).is_err());
        assert!(u.intersect(&v).is_err());
    }

    #[test]
    fn membership_by_reduction() {
        let u = Subspace::span(&Matrix::from_i64(&[&[1, 1, 0], &[0, 0, 1]]));
        assert!(u.contains_vector(&[
            Rational::from(2),
            Rational::from(2),
            Rational::from(-5)
        ]));
        assert!(!u.contains_vector(&[Rational::ONE, Rational::ZERO, Rational::ZERO]));
    }
}
