//! Grid evaluation of equation residuals.
//!
//! Two evaluation modes share the grid contract (`|mu| <= 0.95`, poles
//! excluded): analytic mode differentiates the stream function exactly
//! and only evaluates, finite-difference mode sees the flow only through
//! pointwise `(psi, zeta)` samples and applies centered second-order
//! stencils to the first-order derivatives in the residual.

use super::solutions::{residual_with_omega_expr, vorticity_operator};
use super::SbveError;
use crate::symvec::{EvalPoint, Expr};
use std::collections::BTreeMap;

pub const MU_LIMIT: f64 = 0.95;
pub const FD_SPACING: f64 = 1e-4;
const OMEGA_PARAM: &str = "omega_grid";

/// Sample grid over `(t, lambda, mu)`.
#[derive(Clone, Debug)]
pub struct Grid {
    pub t: Vec<f64>,
    pub lambda: Vec<f64>,
    pub mu: Vec<f64>,
}

impl Grid {
    /// Default verification grid: 3 x 8 x 6 points clear of the poles.
    pub fn standard() -> Grid {
        let lambda = (0..8)
            .map(|k| k as f64 * std::f64::consts::TAU / 8.0)
            .collect();
        Grid {
            t: vec![0.0, 0.3, 0.7],
            lambda,
            mu: vec![-0.8, -0.4, -0.1, 0.1, 0.4, 0.8],
        }
    }

    pub fn validate(&self) -> Result<(), SbveError> {
        if self.t.is_empty() || self.lambda.is_empty() || self.mu.is_empty() {
            return Err(SbveError::GridContract {
                message: "grid must contain points in every direction".into(),
            });
        }
        // Finite differences step in mu, so the margin includes the stencil.
        if let Some(&mu) = self
            .mu
            .iter()
            .find(|m| m.abs() + FD_SPACING > MU_LIMIT + 1e-12)
        {
            return Err(SbveError::GridContract {
                message: format!("grid touches |mu| > {MU_LIMIT} at mu = {mu}"),
            });
        }
        Ok(())
    }

    pub fn points(&self) -> impl Iterator<Item = EvalPoint> + '_ {
        self.t.iter().flat_map(move |&t| {
            self.lambda.iter().flat_map(move |&lambda| {
                self.mu.iter().map(move |&mu| EvalPoint {
                    t,
                    lambda,
                    mu,
                    psi: 0.0,
                })
            })
        })
    }
}

/// A flow field the residual can be evaluated on.
pub enum ResidualField<'a> {
    /// Exact expression; derivatives are taken symbolically.
    Analytic(&'a Expr),
    /// Black-box samples of the stream function and its vorticity.
    FiniteDifference {
        psi: Box<dyn Fn(f64, f64, f64) -> f64 + 'a>,
        zeta: Box<dyn Fn(f64, f64, f64) -> f64 + 'a>,
    },
}

impl<'a> ResidualField<'a> {
    /// Finite-difference view of an exact expression: the closures only
    /// expose pointwise values.
    pub fn sampled(psi: &'a Expr) -> ResidualField<'a> {
        let zeta_expr = vorticity_operator(psi);
        let params = BTreeMap::new();
        let psi_fn = {
            let psi = psi.clone();
            let params = params.clone();
            move |t: f64, lambda: f64, mu: f64| {
                psi.eval(
                    &EvalPoint {
                        t,
                        lambda,
                        mu,
                        psi: 0.0,
                    },
                    &params,
                )
                .expect("pole-free grid")
            }
        };
        let zeta_fn = move |t: f64, lambda: f64, mu: f64| {
            zeta_expr
                .eval(
                    &EvalPoint {
                        t,
                        lambda,
                        mu,
                        psi: 0.0,
                    },
                    &params,
                )
                .expect("pole-free grid")
        };
        ResidualField::FiniteDifference {
            psi: Box::new(psi_fn),
            zeta: Box::new(zeta_fn),
        }
    }
}

/// Maximum absolute residual of the vorticity equation over the grid.
pub fn residual_on_grid(
    field: &ResidualField,
    omega: f64,
    grid: &Grid,
) -> Result<f64, SbveError> {
    grid.validate()?;
    match field {
        ResidualField::Analytic(psi) => {
            let residual_expr = residual_with_omega_expr(psi, &Expr::param(OMEGA_PARAM));
            let mut params = BTreeMap::new();
            params.insert(OMEGA_PARAM.to_string(), omega);
            let mut names = std::collections::BTreeSet::new();
            residual_expr.collect_params(&mut names);
            names.remove(OMEGA_PARAM);
            names.remove(crate::symvec::PI_SYMBOL);
            if let Some(name) = names.into_iter().next() {
                return Err(SbveError::UnboundParameter { name });
            }
            let mut max = 0.0f64;
            for pt in grid.points() {
                let v = residual_expr
                    .eval(&pt, &params)
                    .map_err(SbveError::Symbolic)?;
                max = max.max(v.abs());
            }
            Ok(max)
        }
        ResidualField::FiniteDifference { psi, zeta } => {
            let h = FD_SPACING;
            let d_t = |f: &dyn Fn(f64, f64, f64) -> f64, t: f64, l: f64, m: f64| {
                (f(t + h, l, m) - f(t - h, l, m)) / (2.0 * h)
            };
            let d_l = |f: &dyn Fn(f64, f64, f64) -> f64, t: f64, l: f64, m: f64| {
                (f(t, l + h, m) - f(t, l - h, m)) / (2.0 * h)
            };
            let d_m = |f: &dyn Fn(f64, f64, f64) -> f64, t: f64, l: f64, m: f64| {
                (f(t, l, m + h) - f(t, l, m - h)) / (2.0 * h)
            };
            let mut max = 0.0f64;
            for pt in grid.points() {
                let (t, l, m) = (pt.t, pt.lambda, pt.mu);
                let v = d_t(zeta, t, l, m)
                    + d_l(psi, t, l, m) * d_m(zeta, t, l, m)
                    - d_m(psi, t, l, m) * d_l(zeta, t, l, m)
                    + 2.0 * omega * d_l(psi, t, l, m);
                max = max.max(v.abs());
            }
            Ok(max)
        }
    }
}
