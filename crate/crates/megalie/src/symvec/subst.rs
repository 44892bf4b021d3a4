//! Substitution of chart variables by expressions.
//!
//! The substitution targets occurring in this problem are affine changes
//! of `t` and `lambda`, sign flips of `mu`, and `psi`-affine gauge maps.
//! General polynomial targets work wherever the monomial structure allows
//! it; the radical restricts `mu`-targets to `mu` and `-mu`, and trig
//! arguments restrict `t`- and `lambda`-targets to affine expressions.

use super::expr::{Expr, Monomial, Var};
use super::param::ParamPoly;
use super::trig::{normalize_arg, NormalizedArg, TrigFn};
use super::SymvecError;
use crate::exactalg::Rational;
use std::collections::BTreeMap;

/// Replacement expressions for all four chart variables.
#[derive(Clone, Debug, PartialEq)]
pub struct ChartMap {
    pub t: Expr,
    pub lambda: Expr,
    pub mu: Expr,
    pub psi: Expr,
}

impl ChartMap {
    pub fn identity() -> ChartMap {
        ChartMap {
            t: Expr::t(),
            lambda: Expr::lambda(),
            mu: Expr::mu(),
            psi: Expr::psi(),
        }
    }

    pub fn get(&self, v: Var) -> &Expr {
        match v {
            Var::T => &self.t,
            Var::Lambda => &self.lambda,
            Var::Mu => &self.mu,
            Var::Psi => &self.psi,
        }
    }
}

/// Sign of a `mu`-target that must be exactly `mu` or `-mu`.
fn mu_target_sign(target: &Expr) -> Option<Rational> {
    if target == &Expr::mu() {
        Some(Rational::ONE)
    } else if target == &(-Expr::mu()) {
        Some(-Rational::ONE)
    } else {
        None
    }
}

impl Expr {
    /// Substitute every chart variable according to `map` and
    /// re-canonicalize.
    pub fn substitute(&self, map: &ChartMap) -> Result<Expr, SymvecError> {
        let mut out = Expr::zero();
        for (mon, coef) in self.terms() {
            out = out + substitute_monomial(mon, coef, map)?;
        }
        Ok(out)
    }
}

fn substitute_monomial(
    mon: &Monomial,
    coef: &ParamPoly,
    map: &ChartMap,
) -> Result<Expr, SymvecError> {
    let mut out = Expr::from_poly(coef.clone());

    if mon.t > 0 {
        out = out * map.t.pow(mon.t);
    }
    if mon.lambda > 0 {
        out = out * map.lambda.pow(mon.lambda);
    }
    if mon.psi > 0 {
        out = out * map.psi.pow(mon.psi);
    }

    if mon.s != 0 {
        // s(target) stays s exactly when the mu-target is a sign flip.
        let sign = mu_target_sign(&map.mu).ok_or_else(|| SymvecError::UnsupportedSubstitution {
            message: format!(
                "mu target must be mu or -mu when the radical appears, got {}",
                map.mu
            ),
        })?;
        let mut radical = Monomial::default();
        radical.s = mon.s;
        radical.mu = mon.mu;
        out = out * Expr::from_term(radical, ParamPoly::constant(sign.pow(mon.mu)));
    } else if mon.mu > 0 {
        out = out * map.mu.pow(mon.mu);
    }

    if mon.trig.is_empty() {
        return Ok(out);
    }

    // Rebuild each trig argument through the affine parts of the targets.
    let (t_t, t_l, t_c) = map.t.as_affine_tl().ok_or_else(|| {
        SymvecError::UnsupportedSubstitution {
            message: format!("t target must be affine in (t, lambda), got {}", map.t),
        }
    })?;
    let (l_t, l_l, l_c) = map.lambda.as_affine_tl().ok_or_else(|| {
        SymvecError::UnsupportedSubstitution {
            message: format!(
                "lambda target must be affine in (t, lambda), got {}",
                map.lambda
            ),
        }
    })?;

    for (arg, &(sin_pow, cos_pow)) in &mon.trig {
        let new_t = arg.t_coef().mul(&t_t).add(&arg.lambda_coef().mul(&l_t));
        let new_l = arg.t_coef().mul(&t_l).add(&arg.lambda_coef().mul(&l_l));
        let new_c = arg
            .t_coef()
            .mul(&t_c)
            .add(&arg.lambda_coef().mul(&l_c))
            .add(arg.const_coef());
        let factor = match normalize_arg(new_t, new_l, new_c) {
            NormalizedArg::Constant { sin, cos } => {
                Expr::from_rational(sin.pow(sin_pow) * cos.pow(cos_pow))
            }
            NormalizedArg::Arg(canon, fold) => {
                let mut trig = BTreeMap::new();
                let entry = trig.entry(canon).or_insert((0u32, 0u32));
                match fold.sin_fn {
                    TrigFn::Sin => entry.0 += sin_pow,
                    TrigFn::Cos => entry.1 += sin_pow,
                }
                match fold.cos_fn {
                    TrigFn::Sin => entry.0 += cos_pow,
                    TrigFn::Cos => entry.1 += cos_pow,
                }
                let sign = fold.sin_sign.pow(sin_pow) * fold.cos_sign.pow(cos_pow);
                let m = Monomial {
                    trig,
                    ..Monomial::default()
                };
                Expr::from_term(m, ParamPoly::constant(sign))
            }
        };
        out = out * factor;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_substitution_is_identity() {
        let e = Expr::mu() * Expr::s() * Expr::sin(&Expr::lambda()).unwrap() + Expr::psi();
        assert_eq!(e.substitute(&ChartMap::identity()).unwrap(), e);
    }

    #[test]
    fn lambda_shift_moves_trig_argument() {
        // sin(lambda) under lambda -> lambda + Omega t becomes sin(lambda + Omega t).
        let mut map = ChartMap::identity();
        map.lambda = Expr::lambda() + Expr::param("Omega") * Expr::t();
        let e = Expr::sin(&Expr::lambda()).unwrap();
        let expected = Expr::sin(&(Expr::lambda() + Expr::param("Omega") * Expr::t())).unwrap();
        assert_eq!(e.substitute(&map).unwrap(), expected);
    }

    #[test]
    fn mu_sign_flip_preserves_radical() {
        let mut map = ChartMap::identity();
        map.mu = -Expr::mu();
        let e = Expr::mu() * Expr::s_pow(-1);
        assert_eq!(e.substitute(&map).unwrap(), -(Expr::mu() * Expr::s_pow(-1)));
        // even powers of mu lose the sign
        let even = Expr::mu().pow(2) * Expr::s();
        assert_eq!(even.substitute(&map).unwrap(), even);
    }

    #[test]
    fn general_mu_target_without_radical_is_fine() {
        let mut map = ChartMap::identity();
        map.mu = Expr::mu().pow(2);
        assert_eq!(
            Expr::mu().substitute(&map).unwrap(),
            Expr::mu().pow(2)
        );
    }

    #[test]
    fn radical_with_general_mu_target_is_rejected() {
        let mut map = ChartMap::identity();
        map.mu = Expr::mu().pow(2);
        assert!(Expr::s().substitute(&map).is_err());
    }
}
