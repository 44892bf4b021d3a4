//! Canonical trigonometric arguments `c_t * t + c_l * lambda + c_0`.
//!
//! Half-integer multiples of `pi` in the constant part fold away exactly
//! (`sin(x + pi) = -sin x`, `sin(x + pi/2) = cos x`, ...). The remaining
//! argument is sign-normalized so that `sin(-x)` and `-sin(x)` meet in one
//! canonical form.

use super::param::{ParamPoly, PI_SYMBOL};
use crate::exactalg::Rational;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrigFn {
    Sin,
    Cos,
}

/// Canonical nonzero affine argument.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TrigArg {
    pub(crate) lambda_coef: ParamPoly,
    pub(crate) t_coef: ParamPoly,
    pub(crate) const_coef: ParamPoly,
}

impl TrigArg {
    pub fn lambda_coef(&self) -> &ParamPoly {
        &self.lambda_coef
    }

    pub fn t_coef(&self) -> &ParamPoly {
        &self.t_coef
    }

    pub fn const_coef(&self) -> &ParamPoly {
        &self.const_coef
    }
}

/// How `sin` and `cos` of a raw argument express in terms of the canonical
/// one: a sign and possibly a sin/cos swap.
#[derive(Clone, Copy, Debug)]
pub struct TrigFold {
    pub sin_sign: Rational,
    pub sin_fn: TrigFn,
    pub cos_sign: Rational,
    pub cos_fn: TrigFn,
}

/// Result of normalizing a raw affine argument.
pub enum NormalizedArg {
    /// Argument vanished; `sin` and `cos` of the raw argument are these
    /// exact constants.
    Constant { sin: Rational, cos: Rational },
    /// Nonzero canonical argument plus the fold rules.
    Arg(TrigArg, TrigFold),
}

/// Normalize `c_t * t + c_l * lambda + c_0`.
pub fn normalize_arg(t_coef: ParamPoly, lambda_coef: ParamPoly, const_coef: ParamPoly) -> NormalizedArg {
    // Fold a half-integer multiple of pi out of the constant part.
    let pi_mult = const_coef.coefficient_of_symbol(PI_SYMBOL);
    let half = Rational::new(1, 2);
    let (const_rest, quarter_turns) = if !pi_mult.is_zero() && (pi_mult / half).denominator() == 1 {
        // quarter_turns counts half-pi steps modulo 4.
        let steps = (pi_mult / half).numerator().rem_euclid(4) as u8;
        (const_coef.without_symbol_monomial(PI_SYMBOL), steps)
    } else {
        (const_coef, 0)
    };

    // sin(B + q*pi/2), cos(B + q*pi/2) for q = 0..3.
    let (mut sin_sign, sin_fn, mut cos_sign, cos_fn) = match quarter_turns {
        0 => (Rational::ONE, TrigFn::Sin, Rational::ONE, TrigFn::Cos),
        1 => (Rational::ONE, TrigFn::Cos, -Rational::ONE, TrigFn::Sin),
        2 => (-Rational::ONE, TrigFn::Sin, -Rational::ONE, TrigFn::Cos),
        _ => (-Rational::ONE, TrigFn::Cos, Rational::ONE, TrigFn::Sin),
    };

    if t_coef.is_zero() && lambda_coef.is_zero() && const_rest.is_zero() {
        // sin(B) = 0, cos(B) = 1.
        let sin = match sin_fn {
            TrigFn::Sin => Rational::ZERO,
            TrigFn::Cos => sin_sign,
        };
        let cos = match cos_fn {
            TrigFn::Sin => Rational::ZERO,
            TrigFn::Cos => cos_sign,
        };
        return NormalizedArg::Constant { sin, cos };
    }

    // Sign-normalize: the first nonzero coefficient in (lambda, t, const)
    // order must lead with a positive rational.
    let negative = if !lambda_coef.is_zero() {
        lambda_coef.leading_coefficient_is_negative()
    } else if !t_coef.is_zero() {
        t_coef.leading_coefficient_is_negative()
    } else {
        const_rest.leading_coefficient_is_negative()
    };
    let (lambda_coef, t_coef, const_rest) = if negative {
        // sin is odd, cos is even.
        if sin_fn == TrigFn::Sin {
            sin_sign = -sin_sign;
        }
        if cos_fn == TrigFn::Sin {
            cos_sign = -cos_sign;
        }
        (lambda_coef.neg(), t_coef.neg(), const_rest.neg())
    } else {
        (lambda_coef, t_coef, const_rest)
    };

    NormalizedArg::Arg(
        TrigArg {
            lambda_coef,
            t_coef,
            const_coef: const_rest,
        },
        TrigFold {
            sin_sign,
            sin_fn,
            cos_sign,
            cos_fn,
        },
    )
}

impl fmt::Display for TrigArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (poly, var) in [
            (&self.lambda_coef, Some("lambda")),
            (&self.t_coef, Some("t")),
            (&self.const_coef, None),
        ] {
            if poly.is_zero() {
                continue;
            }
            let coef = if poly.is_one() {
                String::new()
            } else if poly.as_constant().is_some()
                || poly.terms().count() == 1 && !poly.leading_coefficient_is_negative()
            {
                format!("{poly}*")
            } else {
                format!("({poly})*")
            };
            match var {
                Some(v) => parts.push(format!("{coef}{v}")),
                None => parts.push(format!("{poly}")),
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam() -> ParamPoly {
        ParamPoly::one()
    }

    #[test]
    fn pi_shift_flips_sin() {
        // sin(lambda + pi) = -sin(lambda)
        let const_part = ParamPoly::symbol(PI_SYMBOL);
        match normalize_arg(ParamPoly::zero(), lam(), const_part) {
            NormalizedArg::Arg(arg, fold) => {
                assert!(arg.const_coef.is_zero());
                assert_eq!(fold.sin_sign, -Rational::ONE);
                assert_eq!(fold.sin_fn, TrigFn::Sin);
                assert_eq!(fold.cos_sign, -Rational::ONE);
            }
            _ => panic!("expected nonzero argument"),
        }
    }

    #[test]
    fn half_pi_swaps_sin_and_cos() {
        let const_part = ParamPoly::symbol(PI_SYMBOL).scale(Rational::new(1, 2));
        match normalize_arg(ParamPoly::zero(), lam(), const_part) {
            NormalizedArg::Arg(_, fold) => {
                assert_eq!(fold.sin_fn, TrigFn::Cos);
                assert_eq!(fold.sin_sign, Rational::ONE);
                assert_eq!(fold.cos_fn, TrigFn::Sin);
                assert_eq!(fold.cos_sign, -Rational::ONE);
            }
            _ => panic!("expected nonzero argument"),
        }
    }

    #[test]
    fn sign_normalization() {
        // sin(-lambda) = -sin(lambda)
        match normalize_arg(ParamPoly::zero(), ParamPoly::one().neg(), ParamPoly::zero()) {
            NormalizedArg::Arg(arg, fold) => {
                assert!(arg.lambda_coef.is_one());
                assert_eq!(fold.sin_sign, -Rational::ONE);
                assert_eq!(fold.cos_sign, Rational::ONE);
            }
            _ => panic!("expected nonzero argument"),
        }
    }

    #[test]
    fn pure_pi_multiples_are_constants() {
        let const_part = ParamPoly::symbol(PI_SYMBOL);
        match normalize_arg(ParamPoly::zero(), ParamPoly::zero(), const_part) {
            NormalizedArg::Constant { sin, cos } => {
                assert_eq!(sin, Rational::ZERO);
                assert_eq!(cos, -Rational::ONE);
            }
            _ => panic!("expected constant"),
        }
    }

    #[test]
    fn non_half_integer_pi_stays_opaque() {
        let const_part = ParamPoly::symbol(PI_SYMBOL).scale(Rational::new(1, 3));
        match normalize_arg(ParamPoly::zero(), lam(), const_part) {
            NormalizedArg::Arg(arg, _) => {
                assert!(!arg.const_coef.is_zero());
            }
            _ => panic!("expected nonzero argument"),
        }
    }
}
