//! Exact decomposition of a vector field in a finite basis of fields.
//!
//! The canonical form turns this into rational linear algebra: every
//! (component, monomial, parameter-monomial) triple indexes one linear
//! equation for the coefficients.

use super::expr::CHART;
use super::field::VectorField;
use crate::exactalg::{Matrix, Rational};
use std::collections::BTreeMap;

#[derive(Debug, thiserror::Error)]
pub enum DecomposeError {
    #[error("basis is not linearly independent; decomposition ambiguous")]
    Ambiguous,
    #[error("field lies outside the span; residual witness: {witness}")]
    OutsideSpan { witness: String },
}

/// Find rational `k_i` with `x = sum k_i basis_i`, exactly.
pub fn decompose_in_basis(
    x: &VectorField,
    basis: &[VectorField],
) -> Result<Vec<Rational>, DecomposeError> {
    let n = basis.len();
    // Row index: (component, monomial, parameter monomial) -> equation.
    let mut row_of: BTreeMap<(usize, String, String), usize> = BTreeMap::new();
    let mut rows: Vec<(Vec<Rational>, Rational)> = Vec::new();

    {
        let mut visit = |field: &VectorField, slot: Option<usize>| {
            for (ci, v) in CHART.iter().enumerate() {
                for (mon, coef) in field.component(*v).terms() {
                    for (pmon, value) in coef.terms() {
                        let key = (ci, format!("{mon:?}"), format!("{pmon:?}"));
                        let idx = *row_of.entry(key).or_insert_with(|| {
                            rows.push((vec![Rational::ZERO; n], Rational::ZERO));
                            rows.len() - 1
                        });
                        match slot {
                            Some(j) => rows[idx].0[j] = *value,
                            None => rows[idx].1 = *value,
                        }
                    }
                }
            }
        };
        for (j, b) in basis.iter().enumerate() {
            visit(b, Some(j));
        }
        visit(x, None);
    }

    if rows.is_empty() {
        // Zero field against any basis: all coefficients zero.
        return Ok(vec![Rational::ZERO; n]);
    }

    let coeff = Matrix::from_rows(rows.iter().map(|(c, _)| c.clone()).collect());
    let mut aug = Matrix::zero(rows.len(), n + 1);
    for (i, (coeffs, rhs)) in rows.iter().enumerate() {
        for (j, c) in coeffs.iter().enumerate() {
            aug[(i, j)] = *c;
        }
        aug[(i, n)] = *rhs;
    }

    let rank_a = coeff.rank();
    let r = aug.rref();
    let rank_aug = (0..r.rows())
        .filter(|&i| (0..=n).any(|c| !r[(i, c)].is_zero()))
        .count();
    if rank_aug > rank_a {
        // Inconsistent: x is outside the span; report the residual at the
        // best partial solution (all-zero works as a witness baseline).
        let witness = x.to_string();
        return Err(DecomposeError::OutsideSpan { witness });
    }
    if rank_a < n {
        return Err(DecomposeError::Ambiguous);
    }

    let mut solution = vec![Rational::ZERO; n];
    for i in 0..r.rows() {
        if let Some(c) = (0..n).find(|&c| !r[(i, c)].is_zero()) {
            solution[c] = r[(i, n)];
        }
    }

    // The residual must vanish identically in canonical form.
    let mut residual = x.clone();
    for (j, k) in solution.iter().enumerate() {
        residual = residual.sub(&basis[j].scale(*k));
    }
    if !residual.is_zero_field() {
        return Err(DecomposeError::OutsideSpan {
            witness: residual.to_string(),
        });
    }
    Ok(solution)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symvec::expr::Expr;

    fn rotation_fields() -> Vec<VectorField> {
        let lam = Expr::lambda();
        let j1 = VectorField::new(Expr::zero(), Expr::one(), Expr::zero(), Expr::zero());
        let j2 = VectorField::new(
            Expr::zero(),
            Expr::mu() * Expr::s_pow(-1) * Expr::sin(&lam).unwrap(),
            Expr::s() * Expr::cos(&lam).unwrap(),
            Expr::zero(),
        );
        let j3 = VectorField::new(
            Expr::zero(),
            Expr::mu() * Expr::s_pow(-1) * Expr::cos(&lam).unwrap(),
            -(Expr::s() * Expr::sin(&lam).unwrap()),
            Expr::zero(),
        );
        vec![j1, j2, j3]
    }

    #[test]
    fn coordinates_of_a_basis_member() {
        let basis = rotation_fields();
        let k = decompose_in_basis(&basis[2], &basis).unwrap();
        assert_eq!(k, vec![Rational::ZERO, Rational::ZERO, Rational::ONE]);
    }

    #[test]
    fn outside_span_is_reported() {
        let basis = rotation_fields();
        let d = VectorField::new(Expr::t(), Expr::zero(), Expr::zero(), -Expr::psi());
        assert!(matches!(
            decompose_in_basis(&d, &basis),
            Err(DecomposeError::OutsideSpan { .. })
        ));
    }

    #[test]
    fn dependent_basis_is_ambiguous() {
        let basis = rotation_fields();
        let doubled = vec![basis[0].clone(), basis[0].scale(Rational::from(2))];
        assert!(matches!(
            decompose_in_basis(&basis[0], &doubled),
            Err(DecomposeError::Ambiguous)
        ));
    }

    #[test]
    fn combination_recovers_exact_coefficients() {
        let basis = rotation_fields();
        let x = basis[0]
            .scale(Rational::new(3, 2))
            .add(&basis[1].scale(Rational::from(-2)));
        let k = decompose_in_basis(&x, &basis).unwrap();
        assert_eq!(
            k,
            vec![Rational::new(3, 2), Rational::from(-2), Rational::ZERO]
        );
    }

    #[test]
    fn zero_field_decomposes_to_zero() {
        let basis = rotation_fields();
        let k = decompose_in_basis(&VectorField::zero(), &basis).unwrap();
        assert!(k.iter().all(Rational::is_zero));
    }
}
