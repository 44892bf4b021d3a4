//! Double-precision evaluation and the zero test.
//!
//! Zero testing is symbolic first: the canonical form of zero is the empty
//! term map, and the expression class is normal enough that this catches
//! every identity used in the pipeline. The fallback samples the
//! expression at seeded pseudo-random points (poles excluded, parameters
//! assigned seeded values) and reports a witness when any sample exceeds
//! the tolerance.

use super::expr::Expr;
use super::SymvecError;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::fmt;

pub const ZERO_TOLERANCE: f64 = 1e-9;
pub const DEFAULT_SEED: u64 = 42;
const SAMPLE_COUNT: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalPoint {
    pub t: f64,
    pub lambda: f64,
    pub mu: f64,
    pub psi: f64,
}

impl fmt::Display for EvalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(t={:.6}, lambda={:.6}, mu={:.6}, psi={:.6})",
            self.t, self.lambda, self.mu, self.psi
        )
    }
}

impl Expr {
    pub fn eval(
        &self,
        pt: &EvalPoint,
        params: &BTreeMap<String, f64>,
    ) -> Result<f64, SymvecError> {
        let mut total = 0.0;
        for (mon, coef) in self.terms() {
            let mut v = coef
                .eval(params)
                .map_err(|message| SymvecError::MissingParam { message })?;
            v *= pt.t.powi(mon.t as i32);
            v *= pt.lambda.powi(mon.lambda as i32);
            v *= pt.mu.powi(mon.mu as i32);
            v *= pt.psi.powi(mon.psi as i32);
            if mon.s != 0 {
                let s2 = 1.0 - pt.mu * pt.mu;
                if s2 <= 0.0 {
                    return Err(SymvecError::PoleEvaluation { mu: pt.mu });
                }
                v *= s2.sqrt().powi(mon.s);
            }
            for (arg, &(sin_pow, cos_pow)) in &mon.trig {
                let theta = arg
                    .t_coef()
                    .eval(params)
                    .map_err(|message| SymvecError::MissingParam { message })?
                    * pt.t
                    + arg
                        .lambda_coef()
                        .eval(params)
                        .map_err(|message| SymvecError::MissingParam { message })?
                        * pt.lambda
                    + arg
                        .const_coef()
                        .eval(params)
                        .map_err(|message| SymvecError::MissingParam { message })?;
                v *= theta.sin().powi(sin_pow as i32);
                v *= theta.cos().powi(cos_pow as i32);
            }
            total += v;
        }
        Ok(total)
    }
}

/// Verdict of the zero test, with the certainty tag the reports carry.
#[derive(Clone, Debug, PartialEq)]
pub enum Zeroness {
    /// Canonical form is literally zero.
    ZeroSymbolic,
    /// All sampled values vanish within tolerance.
    ZeroNumeric,
    NonZero { witness: EvalPoint, value: f64 },
}

impl Zeroness {
    pub fn is_zero(&self) -> bool {
        !matches!(self, Zeroness::NonZero { .. })
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, Zeroness::ZeroSymbolic)
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Zeroness::ZeroSymbolic => "symbolic",
            Zeroness::ZeroNumeric => "numeric",
            Zeroness::NonZero { .. } => "nonzero",
        }
    }

    /// Combine verdicts of several component checks: symbolic only when
    /// all are symbolic; the first nonzero wins.
    pub fn combine(parts: impl IntoIterator<Item = Zeroness>) -> Zeroness {
        let mut out = Zeroness::ZeroSymbolic;
        for p in parts {
            match p {
                Zeroness::NonZero { .. } => return p,
                Zeroness::ZeroNumeric => out = Zeroness::ZeroNumeric,
                Zeroness::ZeroSymbolic => {}
            }
        }
        out
    }
}

/// Deterministic sample points; `|mu| <= 0.95` keeps clear of the poles.
pub fn sample_points(seed: u64, count: usize) -> Vec<EvalPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| EvalPoint {
            t: rng.gen_range(-1.5..1.5),
            lambda: rng.gen_range(0.0..std::f64::consts::TAU),
            mu: rng.gen_range(-0.95..0.95),
            psi: rng.gen_range(-1.5..1.5),
        })
        .collect()
}

/// Seeded values for every parameter appearing in the expression; kept
/// away from zero so parameter-proportional terms cannot hide.
pub fn sample_params(expr: &Expr, seed: u64) -> BTreeMap<String, f64> {
    let mut names = std::collections::BTreeSet::new();
    expr.collect_params(&mut names);
    names.remove(super::param::PI_SYMBOL);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    names
        .into_iter()
        .map(|n| (n, rng.gen_range(0.35..1.85)))
        .collect()
}

pub fn is_zero(expr: &Expr, seed: u64) -> Zeroness {
    if expr.is_zero_expr() {
        return Zeroness::ZeroSymbolic;
    }
    let params = sample_params(expr, seed);
    for pt in sample_points(seed, SAMPLE_COUNT) {
        match expr.eval(&pt, &params) {
            Ok(v) if v.abs() < ZERO_TOLERANCE => {}
            Ok(v) => {
                return Zeroness::NonZero {
                    witness: pt,
                    value: v,
                }
            }
            Err(_) => {
                // Sampling contract keeps |mu| < 1; other failures count as
                // non-verification rather than zero.
                return Zeroness::NonZero {
                    witness: pt,
                    value: f64::NAN,
                };
            }
        }
    }
    Zeroness::ZeroNumeric
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symvec::expr::Var;

    #[test]
    fn symbolic_zero_upfront() {
        let e = Expr::s_pow(2) + Expr::mu().pow(2) - Expr::one();
        assert_eq!(is_zero(&e, DEFAULT_SEED), Zeroness::ZeroSymbolic);
    }

    #[test]
    fn nonzero_has_witness() {
        let e = Expr::mu();
        match is_zero(&e, DEFAULT_SEED) {
            Zeroness::NonZero { witness, value } => {
                assert!((value - witness.mu).abs() < 1e-12);
            }
            other => panic!("expected nonzero, got {other:?}"),
        }
    }

    #[test]
    fn eval_matches_hand_computation() {
        // mu * s * cos(lambda) at a fixed point
        let e = Expr::mu() * Expr::s() * Expr::cos(&Expr::lambda()).unwrap();
        let pt = EvalPoint {
            t: 0.0,
            lambda: 0.5,
            mu: 0.4,
            psi: 0.0,
        };
        let v = e.eval(&pt, &BTreeMap::new()).unwrap();
        let expected = 0.4 * (1.0f64 - 0.16).sqrt() * 0.5f64.cos();
        assert!((v - expected).abs() < 1e-15);
    }

    #[test]
    fn derivative_then_eval() {
        // d/dmu s = -mu/s
        let d = Expr::s().differentiate(Var::Mu);
        let pt = EvalPoint {
            t: 0.0,
            lambda: 0.0,
            mu: 0.6,
            psi: 0.0,
        };
        let v = d.eval(&pt, &BTreeMap::new()).unwrap();
        assert!((v + 0.6 / 0.8).abs() < 1e-15);
    }

    #[test]
    fn determinism_of_samples() {
        assert_eq!(sample_points(7, 4), sample_points(7, 4));
    }
}
