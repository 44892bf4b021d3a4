//! The six constraint equations that the angular part `(Lambda, M)` of a
//! symmetry candidate must satisfy against the rotation generators.
//!
//! With the rotation block reduced to the identity, the rest-frame
//! rotation fields `J1, J2, J3` act as derivations on `Lambda(lambda, mu)`
//! and `M(lambda, mu)` and force
//!
//! ```text
//! J1 Lambda = 1                      J1 M = 0
//! J2 Lambda = M/sqrt(1-M^2) sin(Lambda)   J2 M =  sqrt(1-M^2) cos(Lambda)
//! J3 Lambda = M/sqrt(1-M^2) cos(Lambda)   J3 M = -sqrt(1-M^2) sin(Lambda)
//! ```
//!
//! For `M = mu` or `M = -mu` the radical collapses onto `s` and every
//! check is symbolic. Other `M` run through seeded numeric sampling with
//! the radical evaluated pointwise.

use super::generators::generators;
use super::SbveError;
use crate::exactalg::Rational;
use crate::symvec::{is_zero, sample_points, Expr, VectorField, Zeroness};
use std::collections::BTreeMap;

pub const EQUATION_NAMES: [&str; 6] = [
    "J1(Lambda) = 1",
    "J2(Lambda) = M/sqrt(1-M^2) sin(Lambda)",
    "J3(Lambda) = M/sqrt(1-M^2) cos(Lambda)",
    "J1(M) = 0",
    "J2(M) = sqrt(1-M^2) cos(Lambda)",
    "J3(M) = -sqrt(1-M^2) sin(Lambda)",
];

#[derive(Clone, Debug)]
pub struct RotationCheck {
    pub name: &'static str,
    pub verdict: Zeroness,
}

#[derive(Clone, Debug)]
pub struct RotationReport {
    pub checks: Vec<RotationCheck>,
    /// True when the radical reduced symbolically (`M = ±mu`).
    pub symbolic_route: bool,
}

impl RotationReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.verdict.is_zero())
    }

    pub fn first_failure(&self) -> Option<&RotationCheck> {
        self.checks.iter().find(|c| !c.verdict.is_zero())
    }
}

fn rest_frame_rotations() -> [VectorField; 3] {
    let gs = generators(Rational::ZERO, 2).expect("n_max 2 is valid");
    [
        gs.field("J1").unwrap().clone(),
        gs.field("J2").unwrap().clone(),
        gs.field("J3").unwrap().clone(),
    ]
}

/// Check all six equations for a candidate `(Lambda, M)` pair.
pub fn verify_rotation_constraints(
    lambda_expr: &Expr,
    m_expr: &Expr,
    seed: u64,
) -> Result<RotationReport, SbveError> {
    let [j1, j2, j3] = rest_frame_rotations();

    let mu_sign = if m_expr == &Expr::mu() {
        Some(Rational::ONE)
    } else if m_expr == &(-Expr::mu()) {
        Some(-Rational::ONE)
    } else {
        None
    };

    if let Some(sign) = mu_sign {
        // Fully symbolic: sqrt(1 - M^2) = s and M / sqrt(1 - M^2) = ±mu/s.
        let sin_l = Expr::sin(lambda_expr).map_err(SbveError::Symbolic)?;
        let cos_l = Expr::cos(lambda_expr).map_err(SbveError::Symbolic)?;
        let rad = Expr::s();
        let m_over_rad = Expr::mu().scale(sign) * Expr::s_pow(-1);
        let diffs = [
            j1.apply(lambda_expr) - Expr::one(),
            j2.apply(lambda_expr) - m_over_rad.clone() * sin_l.clone(),
            j3.apply(lambda_expr) - m_over_rad * cos_l.clone(),
            j1.apply(m_expr),
            j2.apply(m_expr) - rad.clone() * cos_l,
            j3.apply(m_expr) + rad * sin_l,
        ];
        let checks = EQUATION_NAMES
            .iter()
            .zip(diffs)
            .map(|(name, diff)| RotationCheck {
                name,
                verdict: is_zero(&diff, seed),
            })
            .collect();
        return Ok(RotationReport {
            checks,
            symbolic_route: true,
        });
    }

    // Numeric route: the radical is evaluated pointwise. The sampling
    // contract keeps |mu| < 1; M itself must stay inside (-1, 1) too.
    let points = sample_points(seed, 24);
    let params = BTreeMap::new();
    for pt in &points {
        let m_val = m_expr.eval(pt, &params).map_err(SbveError::Symbolic)?;
        if m_val.abs() >= 1.0 {
            return Err(SbveError::RotationDomain {
                value: m_val,
                witness: pt.to_string(),
            });
        }
    }

    let lhs = [
        j1.apply(lambda_expr),
        j2.apply(lambda_expr),
        j3.apply(lambda_expr),
        j1.apply(m_expr),
        j2.apply(m_expr),
        j3.apply(m_expr),
    ];
    let rhs = |eq: usize, l_val: f64, m_val: f64| -> f64 {
        let rad = (1.0 - m_val * m_val).sqrt();
        match eq {
            0 => 1.0,
            1 => m_val / rad * l_val.sin(),
            2 => m_val / rad * l_val.cos(),
            3 => 0.0,
            4 => rad * l_val.cos(),
            _ => -rad * l_val.sin(),
        }
    };

    let mut checks = Vec::with_capacity(6);
    for (eq, name) in EQUATION_NAMES.iter().enumerate() {
        let mut verdict = Zeroness::ZeroNumeric;
        for pt in &points {
            let l_val = lambda_expr.eval(pt, &params).map_err(SbveError::Symbolic)?;
            let m_val = m_expr.eval(pt, &params).map_err(SbveError::Symbolic)?;
            let lhs_val = lhs[eq].eval(pt, &params).map_err(SbveError::Symbolic)?;
            let diff = lhs_val - rhs(eq, l_val, m_val);
            if diff.abs() >= crate::symvec::eval::ZERO_TOLERANCE {
                verdict = Zeroness::NonZero {
                    witness: *pt,
                    value: diff,
                };
                break;
            }
        }
        checks.push(RotationCheck { name, verdict });
    }
    Ok(RotationReport {
        checks,
        symbolic_route: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symvec::DEFAULT_SEED;

    #[test]
    fn identity_pair_holds_symbolically() {
        let report =
            verify_rotation_constraints(&Expr::lambda(), &Expr::mu(), DEFAULT_SEED).unwrap();
        assert!(report.symbolic_route);
        assert!(report.all_hold());
        assert!(report.checks.iter().all(|c| c.verdict.is_symbolic()));
    }

    #[test]
    fn shifted_pair_holds_symbolically() {
        // (Lambda, M) = (lambda + pi, -mu)
        let shifted = Expr::lambda() + Expr::param("pi");
        let report =
            verify_rotation_constraints(&shifted, &(-Expr::mu()), DEFAULT_SEED).unwrap();
        assert!(report.symbolic_route);
        assert!(report.all_hold(), "{:?}", report.first_failure());
    }

    #[test]
    fn quadratic_m_fails_with_witness() {
        let report =
            verify_rotation_constraints(&Expr::lambda(), &Expr::mu().pow(2), DEFAULT_SEED)
                .unwrap();
        assert!(!report.symbolic_route);
        assert!(!report.all_hold());
        let failure = report.first_failure().unwrap();
        assert_eq!(failure.name, EQUATION_NAMES[1]);
        assert!(matches!(failure.verdict, Zeroness::NonZero { .. }));
    }

    #[test]
    fn out_of_range_m_is_domain_error() {
        let err = verify_rotation_constraints(
            &Expr::lambda(),
            &(Expr::int(2) * Expr::mu()),
            DEFAULT_SEED,
        )
        .unwrap_err();
        assert!(matches!(err, SbveError::RotationDomain { .. }));
    }
}
