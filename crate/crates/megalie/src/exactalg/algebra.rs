//! Lie algebras presented by structure constants, with the subspace
//! operations that drive the megaideal search: brackets, the derived and
//! central series, centers, centralizers and the relative stabilizer
//! `{z in i0 : [z, i1] ⊆ i2}`.

use super::matrix::Matrix;
use super::rational::Rational;
use super::subspace::Subspace;
use super::ExactAlgError;

/// Finite-dimensional Lie algebra over the rationals.
///
/// `c[i][j][k]` is the coefficient of `e_k` in `[e_i, e_j]`. Construction
/// validates antisymmetry and the Jacobi identity exactly and reports the
/// first offending triple otherwise.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    c: Vec<Vec<Vec<Rational>>>,
}

impl LieAlgebra {
    pub fn new(
        labels: Vec<String>,
        c: Vec<Vec<Vec<Rational>>>,
    ) -> Result<LieAlgebra, ExactAlgError> {
        let dim = labels.len();
        let shape_ok = c.len() == dim
            && c.iter()
                .all(|p| p.len() == dim && p.iter().all(|q| q.len() == dim));
        if !shape_ok {
            return Err(ExactAlgError::BadStructureTensor { dim });
        }
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    if c[i][j][k] + c[j][i][k] != Rational::ZERO {
                        return Err(ExactAlgError::AntisymmetryViolation { i, j, k });
                    }
                }
            }
        }
        let algebra = LieAlgebra { dim, labels, c };
        if let Some((i, j, k)) = algebra.first_jacobi_violation() {
            return Err(ExactAlgError::JacobiViolation { i, j, k });
        }
        Ok(algebra)
    }

    /// Abelian algebra, mostly for tests and small fixtures.
    pub fn abelian(labels: Vec<String>) -> LieAlgebra {
        let dim = labels.len();
        LieAlgebra {
            dim,
            labels,
            c: vec![vec![vec![Rational::ZERO; dim]; dim]; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.c[i][j][k]
    }

    fn first_jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    for l in 0..self.dim {
                        let mut sum = Rational::ZERO;
                        for m in 0..self.dim {
                            sum += self.c[i][j][m] * self.c[m][k][l];
                            sum += self.c[j][k][m] * self.c[m][i][l];
                            sum += self.c[k][i][m] * self.c[m][j][l];
                        }
                        if !sum.is_zero() {
                            return Some((i, j, k));
                        }
                    }
                }
            }
        }
        None
    }

    /// Bracket of coordinate vectors: `[x,y]^k = Σ_{i,j} c[i][j][k] x^i y^j`.
    pub fn bracket_element(
        &self,
        x: &[Rational],
        y: &[Rational],
    ) -> Result<Vec<Rational>, ExactAlgError> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(ExactAlgError::DimensionMismatch {
                context: "bracket of coordinate vectors",
                left: x.len(),
                right: y.len(),
            });
        }
        let mut out = vec![Rational::ZERO; self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let xy = x[i] * y[j];
                for k in 0..self.dim {
                    if !self.c[i][j][k].is_zero() {
                        out[k] += self.c[i][j][k] * xy;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad(e_i)` acting on coordinates: column `j` is `[e_i, e_j]`.
    pub fn adjoint(&self, i: usize) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                m[(k, j)] = self.c[i][j][k];
            }
        }
        m
    }

    fn check_ambient(&self, s: &Subspace, context: &'static str) -> Result<(), ExactAlgError> {
        if s.ambient() != self.dim {
            return Err(ExactAlgError::DimensionMismatch {
                context,
                left: self.dim,
                right: s.ambient(),
            });
        }
        Ok(())
    }

    /// Canonical span of `{[u_i, v_j]}` over all basis pairs.
    pub fn bracket_subspace(
        &self,
        u: &Subspace,
        v: &Subspace,
    ) -> Result<Subspace, ExactAlgError> {
        self.check_ambient(u, "bracket of subspaces")?;
        self.check_ambient(v, "bracket of subspaces")?;
        let mut vectors = Vec::with_capacity(u.dim() * v.dim());
        for a in u.basis_rows() {
            for b in v.basis_rows() {
                vectors.push(self.bracket_element(a, b)?);
            }
        }
        Ok(Subspace::span_of_vectors(self.dim, &vectors))
    }

    /// Derived series `g ⊇ g' ⊇ g'' ⊇ ...` until stabilization. The first
    /// repeated term is included once; a zero term ends the series.
    pub fn derived_series(&self) -> Vec<Subspace> {
        self.series_from(Subspace::full(self.dim), |current| {
            self.bracket_subspace(current, current).expect("ambient fixed")
        })
    }

    /// Lower central series `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ ...`.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim);
        self.series_from(full.clone(), |current| {
            self.bracket_subspace(&full, current).expect("ambient fixed")
        })
    }

    /// Upper central series `{0} ⊆ Z(g) ⊆ Z_2(g) ⊆ ...`; each term is the
    /// stabilizer of the previous one against the whole algebra.
    pub fn upper_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim);
        let mut terms = vec![Subspace::zero(self.dim)];
        loop {
            let prev = terms.last().unwrap();
            let next = self
                .stabilizer(&full, &full, prev)
                .expect("ambient fixed");
            let stabilized = &next == prev;
            if stabilized {
                break;
            }
            let full_reached = next.dim() == self.dim;
            terms.push(next);
            if full_reached {
                break;
            }
        }
        terms
    }

    fn series_from(
        &self,
        start: Subspace,
        step: impl Fn(&Subspace) -> Subspace,
    ) -> Vec<Subspace> {
        let mut terms = vec![start];
        loop {
            let prev = terms.last().unwrap();
            if prev.is_zero() {
                break;
            }
            let next = step(prev);
            let stabilized = &next == prev;
            let is_zero = next.is_zero();
            terms.push(next);
            if stabilized || is_zero {
                break;
            }
        }
        // A stabilized nonzero tail keeps its repeat; a trailing zero after a
        // zero is redundant.
        if terms.len() >= 2
            && terms[terms.len() - 1].is_zero()
            && terms[terms.len() - 2].is_zero()
        {
            terms.pop();
        }
        terms
    }

    /// Center `{z : [z, e_i] = 0 for all i}`, via the null space of the
    /// stacked adjoint matrices.
    pub fn center(&self) -> Subspace {
        let mut stacked = Matrix::zero(0, self.dim);
        for i in 0..self.dim {
            stacked = stacked.vstack(&self.adjoint(i)).expect("ambient fixed");
        }
        Subspace::span(&stacked.null_space())
    }

    /// Centralizer `{z ∈ a : [z, y] = 0 for all y ∈ b}`.
    pub fn centralizer(&self, a: &Subspace, b: &Subspace) -> Result<Subspace, ExactAlgError> {
        self.stabilizer(a, b, &Subspace::zero(self.dim))
    }

    /// The stabilizer construction: `{z ∈ i0 : [z, y] ∈ i2 for all y ∈ i1}`.
    ///
    /// Solved exactly: write `z` in `i0` coordinates, reduce each bracket
    /// with an `i1` basis vector against `i2`, and take the null space of
    /// the stacked residual conditions.
    pub fn stabilizer(
        &self,
        i0: &Subspace,
        i1: &Subspace,
        i2: &Subspace,
    ) -> Result<Subspace, ExactAlgError> {
        self.check_ambient(i0, "stabilizer")?;
        self.check_ambient(i1, "stabilizer")?;
        self.check_ambient(i2, "stabilizer")?;
        if i0.is_zero() || i1.is_zero() {
            return Ok(i0.clone());
        }
        let u: Vec<&[Rational]> = i0.basis_rows().collect();
        let mut condition_rows: Vec<Vec<Rational>> = Vec::new();
        for v in i1.basis_rows() {
            // residual_r = [u_r, v] reduced mod i2; condition Σ α_r residual_r = 0.
            let residuals: Vec<Vec<Rational>> = u
                .iter()
                .map(|ur| Ok::<_, ExactAlgError>(i2.reduce(&self.bracket_element(ur, v)?)))
                .collect::<Result<_, _>>()?;
            for coord in 0..self.dim {
                if residuals.iter().all(|res| res[coord].is_zero()) {
                    continue;
                }
                condition_rows.push(residuals.iter().map(|res| res[coord]).collect());
            }
        }
        if condition_rows.is_empty() {
            return Ok(i0.clone());
        }
        let coeffs = Matrix::from_rows(condition_rows).null_space();
        let mut vectors = Vec::with_capacity(coeffs.rows());
        for r in 0..coeffs.rows() {
            let alpha = coeffs.row(r);
            let mut z = vec![Rational::ZERO; self.dim];
            for (ri, ur) in u.iter().enumerate() {
                if alpha[ri].is_zero() {
                    continue;
                }
                for j in 0..self.dim {
                    z[j] += alpha[ri] * ur[j];
                }
            }
            vectors.push(z);
        }
        Ok(Subspace::span_of_vectors(self.dim, &vectors))
    }
}
