//! On-disk JSON formats.
//!
//! Algebra files:
//! ```json
//! { "dim": 2, "labels": ["D", "P"], "brackets": [[0, 1, [[1, "-1"]]]] }
//! ```
//! `brackets` lists `[i, j, [[k, "p/q"], ...]]` entries with `i < j`
//! (antisymmetry is implied) and 0-based indices; omitted pairs are zero.
//! Loading validates antisymmetry and the Jacobi identity and reports the
//! first offending triple.
//!
//! Matrix files:
//! ```json
//! { "dim": 2, "rows": [["1", "0"], ["0", "-1"]] }
//! ```
//! `rows[i][j]` is the matrix entry `M[i][j]`; column `j` holds the image
//! of basis element `j`.

use super::algebra::LieAlgebra;
use super::maps::LinearMap;
use super::matrix::Matrix;
use super::rational::Rational;
use super::ExactAlgError;
use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub labels: Vec<String>,
    pub brackets: Vec<(usize, usize, Vec<(usize, Rational)>)>,
}

impl AlgebraFile {
    pub fn from_algebra(g: &LieAlgebra) -> AlgebraFile {
        let mut brackets = Vec::new();
        for i in 0..g.dim() {
            for j in i + 1..g.dim() {
                let terms: Vec<(usize, Rational)> = (0..g.dim())
                    .filter_map(|k| {
                        let v = g.structure_constant(i, j, k);
                        (!v.is_zero()).then_some((k, v))
                    })
                    .collect();
                if !terms.is_empty() {
                    brackets.push((i, j, terms));
                }
            }
        }
        AlgebraFile {
            dim: g.dim(),
            labels: g.labels().to_vec(),
            brackets,
        }
    }

    pub fn into_algebra(self) -> Result<LieAlgebra, ExactAlgError> {
        if self.labels.len() != self.dim {
            return Err(ExactAlgError::SchemaError {
                message: format!(
                    "dim is {} but {} labels are given",
                    self.dim,
                    self.labels.len()
                ),
            });
        }
        let n = self.dim;
        let mut c = vec![vec![vec![Rational::ZERO; n]; n]; n];
        let mut seen = std::collections::BTreeSet::new();
        for (i, j, terms) in &self.brackets {
            let (i, j) = (*i, *j);
            if i >= j {
                return Err(ExactAlgError::SchemaError {
                    message: format!("bracket entry ({i}, {j}) must satisfy i < j"),
                });
            }
            if j >= n {
                return Err(ExactAlgError::SchemaError {
                    message: format!("bracket entry ({i}, {j}) out of range for dim {n}"),
                });
            }
            if !seen.insert((i, j)) {
                return Err(ExactAlgError::SchemaError {
                    message: format!("duplicate bracket entry for pair ({i}, {j})"),
                });
            }
            for (k, v) in terms {
                if *k >= n {
                    return Err(ExactAlgError::SchemaError {
                        message: format!("bracket target {k} out of range for dim {n}"),
                    });
                }
                c[i][j][*k] = *v;
                c[j][i][*k] = -*v;
            }
        }
        LieAlgebra::new(self.labels, c)
    }
}

pub fn algebra_to_json(g: &LieAlgebra) -> String {
    serde_json::to_string_pretty(&AlgebraFile::from_algebra(g)).expect("serializable")
}

pub fn algebra_from_json(text: &str) -> Result<LieAlgebra, ExactAlgError> {
    let file: AlgebraFile =
        serde_json::from_str(text).map_err(|e| ExactAlgError::ParseError {
            message: e.to_string(),
        })?;
    file.into_algebra()
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MatrixFile {
    pub dim: usize,
    pub rows: Vec<Vec<Rational>>,
}

pub fn matrix_to_json(m: &LinearMap) -> String {
    let rows: Vec<Vec<Rational>> = (0..m.dim()).map(|i| m.matrix().row_vec(i)).collect();
    serde_json::to_string_pretty(&MatrixFile { dim: m.dim(), rows }).expect("serializable")
}

pub fn matrix_from_json(text: &str) -> Result<LinearMap, ExactAlgError> {
    let file: MatrixFile = serde_json::from_str(text).map_err(|e| ExactAlgError::ParseError {
        message: e.to_string(),
    })?;
    if file.rows.len() != file.dim || file.rows.iter().any(|r| r.len() != file.dim) {
        return Err(ExactAlgError::SchemaError {
            message: format!("matrix rows do not form a {0}x{0} grid", file.dim),
        });
    }
    LinearMap::new(Matrix::from_rows(file.rows))
}
