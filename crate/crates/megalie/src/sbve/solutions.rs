//! The vorticity operator, the equation residual, a catalogue of exact
//! solutions, and the action of point transformations on solutions.
//!
//! The vorticity equation for the stream function `psi(t, lambda, mu)` is
//!
//! ```text
//! zeta_t + psi_lambda zeta_mu - psi_mu zeta_lambda + 2 Omega psi_lambda = 0,
//! zeta = psi_lambdalambda / (1 - mu^2) + ((1 - mu^2) psi_mu)_mu.
//! ```
//!
//! Spherical harmonics are eigenfunctions of the spherical Laplacian with
//! eigenvalue `-n(n+1)`, which kills the Jacobian term; zonal harmonics
//! are steady for every `Omega`, and sectoral/tesseral ones drift in
//! longitude at the phase speed `-2 Omega / (n (n + 1))`.

use super::SbveError;
use crate::exactalg::Rational;
use crate::symvec::{is_zero, ChartMap, Expr, PointTransformation, Var, Zeroness};

/// Spherical vorticity `zeta(psi)` as a canonical expression.
pub fn vorticity_operator(psi: &Expr) -> Expr {
    let psi_ll = psi.differentiate(Var::Lambda).differentiate(Var::Lambda);
    let psi_mu = psi.differentiate(Var::Mu);
    let weighted = (Expr::one() - Expr::mu().pow(2)) * psi_mu;
    Expr::s_pow(-2) * psi_ll + weighted.differentiate(Var::Mu)
}

/// Left-hand side of the vorticity equation with exact rational `omega`.
pub fn residual(psi: &Expr, omega: Rational) -> Expr {
    residual_with_omega_expr(psi, &Expr::from_rational(omega))
}

/// Residual with the angular velocity kept as an expression (used with a
/// symbolic parameter for grid evaluation at arbitrary float omega).
pub fn residual_with_omega_expr(psi: &Expr, omega: &Expr) -> Expr {
    let zeta = vorticity_operator(psi);
    let jacobian = psi.differentiate(Var::Lambda) * zeta.differentiate(Var::Mu)
        - psi.differentiate(Var::Mu) * zeta.differentiate(Var::Lambda);
    zeta.differentiate(Var::T)
        + jacobian
        + Expr::int(2) * omega.clone() * psi.differentiate(Var::Lambda)
}

/// A catalogued exact solution for a fixed angular velocity.
#[derive(Clone, Debug)]
pub struct ExactSolution {
    pub name: String,
    pub psi: Expr,
    pub omega: Rational,
}

/// Traveling longitude argument `m * (lambda - c t)` for harmonic degree
/// `n` and order `m`, with the drift speed `c = -2 omega / (n (n + 1))`.
fn traveling_argument(m: i64, n: i64, omega: Rational) -> Expr {
    let c = Rational::from(-2) * omega / Rational::integer((n * (n + 1)) as i128);
    Expr::lambda().scale(Rational::from(m)) - Expr::t().scale(Rational::from(m) * c)
}

/// Exact solutions built from real spherical harmonics of degrees 1-3:
/// three zonal profiles plus sectoral/tesseral drifting waves. Every
/// entry is verified symbolically against the residual at construction.
pub fn exact_solutions(omega: Rational) -> Result<Vec<ExactSolution>, SbveError> {
    let mu = Expr::mu();
    let s = Expr::s();
    let mut entries: Vec<(String, Expr)> = vec![
        ("zonal degree 1: mu".into(), mu.clone()),
        ("zonal degree 2: 3 mu^2 - 1".into(), Expr::int(3) * mu.pow(2) - Expr::one()),
        (
            "zonal degree 3: 5 mu^3 - 3 mu".into(),
            Expr::int(5) * mu.pow(3) - Expr::int(3) * mu.clone(),
        ),
    ];
    let wave = |name: &str, profile: Expr, m: i64, n: i64, use_sin: bool| -> Result<(String, Expr), SbveError> {
        let arg = traveling_argument(m, n, omega);
        let trig = if use_sin {
            Expr::sin(&arg).map_err(SbveError::Symbolic)?
        } else {
            Expr::cos(&arg).map_err(SbveError::Symbolic)?
        };
        Ok((name.to_string(), profile * trig))
    };
    entries.push(wave("sectoral degree 1: s cos", s.clone(), 1, 1, false)?);
    entries.push(wave("tesseral degree 2: mu s cos", mu.clone() * s.clone(), 1, 2, false)?);
    entries.push(wave("tesseral degree 2: mu s sin", mu.clone() * s.clone(), 1, 2, true)?);
    entries.push(wave("sectoral degree 2: s^2 cos 2", s.pow(2), 2, 2, false)?);
    entries.push(wave(
        "tesseral degree 3: s (5 mu^2 - 1) cos",
        s.clone() * (Expr::int(5) * mu.pow(2) - Expr::one()),
        1,
        3,
        false,
    )?);
    entries.push(wave("sectoral degree 3: s^3 sin 3", s.pow(3), 3, 3, true)?);

    let mut out = Vec::with_capacity(entries.len());
    for (name, psi) in entries {
        let check = residual(&psi, omega);
        if !check.is_zero_expr() {
            return Err(SbveError::SolutionResidualNonzero {
                name,
                residual: check.to_string(),
            });
        }
        out.push(ExactSolution {
            name,
            psi,
            omega,
        });
    }
    Ok(out)
}

/// Apply a point transformation to a solution: with a `psi`-affine map
/// `Psi = c psi + F(t, lambda, mu)`, the transformed stream function is
/// `c psi(old coordinates) + F(old coordinates)` re-expressed in the new
/// chart through the inverse.
pub fn transform_solution(
    psi: &Expr,
    tr: &PointTransformation,
) -> Result<Expr, SbveError> {
    let psi_component = tr.forward_component(Var::Psi);
    let (linear, _rest) = psi_component
        .as_affine_psi()
        .ok_or(SbveError::PsiNotAffine)?;
    if linear.as_rational().is_none() && linear.as_affine_tl().is_none() {
        // c may depend on parameters but not on chart variables beyond the class
        return Err(SbveError::PsiNotAffine);
    }
    // Step 1: substitute the solution for psi, still in old coordinates.
    let in_old = psi_component
        .substitute(&ChartMap {
            t: Expr::t(),
            lambda: Expr::lambda(),
            mu: Expr::mu(),
            psi: psi.clone(),
        })
        .map_err(SbveError::Symbolic)?;
    // Step 2: express the old coordinates through the inverse map.
    in_old.substitute(&tr.inverse).map_err(SbveError::Symbolic)
}

/// Zero test shortcut for "this is a solution", symbolically when the
/// canonical form cancels, numerically otherwise.
pub fn residual_is_zero(psi: &Expr, omega: Rational, seed: u64) -> Zeroness {
    is_zero(&residual(psi, omega), seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sbve::symmetry::discrete_symmetries;
    use crate::symvec::DEFAULT_SEED;

    #[test]
    fn vorticity_of_simple_profiles() {
        // zeta(mu) = -2 mu
        assert_eq!(vorticity_operator(&Expr::mu()), Expr::mu().scale(Rational::from(-2)));
        // zeta(3 mu^2 - 1) = -6 (3 mu^2 - 1)
        let p2 = Expr::int(3) * Expr::mu().pow(2) - Expr::one();
        assert_eq!(vorticity_operator(&p2), p2.scale(Rational::from(-6)));
        // constants are harmonic
        assert!(vorticity_operator(&Expr::int(7)).is_zero_expr());
    }

    #[test]
    fn eigenvalue_check_degree_two_tesseral() {
        let psi = Expr::mu() * Expr::s() * Expr::cos(&Expr::lambda()).unwrap();
        assert_eq!(vorticity_operator(&psi), psi.scale(Rational::from(-6)));
    }

    #[test]
    fn zonal_profiles_are_steady_for_any_omega() {
        let psi = Expr::int(5) * Expr::mu().pow(3) - Expr::int(3) * Expr::mu();
        assert!(residual(&psi, Rational::ZERO).is_zero_expr());
        assert!(residual(&psi, Rational::new(7, 3)).is_zero_expr());
    }

    #[test]
    fn drifting_wave_needs_matching_speed() {
        // mu s cos(lambda - c t) solves the omega equation iff c = -omega/3.
        let omega = Rational::from(1);
        let good = Expr::mu()
            * Expr::s()
            * Expr::cos(&(Expr::lambda() + Expr::t().scale(Rational::new(1, 3)))).unwrap();
        assert!(residual(&good, omega).is_zero_expr());
        let bad = Expr::mu()
            * Expr::s()
            * Expr::cos(&(Expr::lambda() + Expr::t().scale(Rational::new(1, 2)))).unwrap();
        assert!(!residual(&bad, omega).is_zero_expr());
    }

    #[test]
    fn catalogue_is_verified_at_build_time() {
        for omega in [Rational::ZERO, Rational::from(1), Rational::new(7, 32)] {
            let solutions = exact_solutions(omega).unwrap();
            assert_eq!(solutions.len(), 9);
            for sol in &solutions {
                assert!(residual_is_zero(&sol.psi, omega, DEFAULT_SEED).is_symbolic());
            }
        }
    }

    #[test]
    fn mirror_of_odd_zonal_profile() {
        // psi = mu under the mu/psi mirror comes back as mu.
        let (_, s2) = discrete_symmetries();
        let image = transform_solution(&Expr::mu(), &s2).unwrap();
        assert_eq!(image, Expr::mu());
    }

    #[test]
    fn identity_transform_keeps_solution() {
        let psi = Expr::mu() * Expr::s() * Expr::cos(&Expr::lambda()).unwrap();
        let image = transform_solution(&psi, &PointTransformation::identity()).unwrap();
        assert_eq!(image, psi);
    }
}
