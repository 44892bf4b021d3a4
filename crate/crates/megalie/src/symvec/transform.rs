//! Invertible point transformations of the chart and the push-forward of
//! vector fields.
//!
//! Transformations carry explicit inverses; symbolic inversion is never
//! attempted. `verify_inverse` checks `forward(inverse) = identity`
//! component-wise through the zero test.

use super::eval::{is_zero, Zeroness};
use super::expr::{Expr, Var, CHART};
use super::field::VectorField;
use super::subst::ChartMap;
use super::SymvecError;
use crate::exactalg::Rational;
use std::fmt;

/// Coordinate change `(t, lambda, mu, psi) -> (T, Lambda, M, Psi)` with an
/// explicit inverse.
#[derive(Clone, Debug, PartialEq)]
pub struct PointTransformation {
    pub forward: ChartMap,
    pub inverse: ChartMap,
}

impl PointTransformation {
    pub fn identity() -> PointTransformation {
        PointTransformation {
            forward: ChartMap::identity(),
            inverse: ChartMap::identity(),
        }
    }

    pub fn new(forward: ChartMap, inverse: ChartMap) -> PointTransformation {
        PointTransformation { forward, inverse }
    }

    pub fn forward_component(&self, v: Var) -> &Expr {
        self.forward.get(v)
    }

    /// `forward(inverse) - identity`, checked component-wise.
    pub fn verify_inverse(&self, seed: u64) -> Result<Zeroness, SymvecError> {
        let mut parts = Vec::new();
        for v in CHART {
            let composed = self.forward.get(v).substitute(&self.inverse)?;
            parts.push(is_zero(&(composed - Expr::var(v)), seed));
        }
        Ok(Zeroness::combine(parts))
    }

    /// Composition `self ∘ inner` (apply `inner` first).
    pub fn compose(&self, inner: &PointTransformation) -> Result<PointTransformation, SymvecError> {
        let forward = ChartMap {
            t: self.forward.t.substitute(&inner.forward)?,
            lambda: self.forward.lambda.substitute(&inner.forward)?,
            mu: self.forward.mu.substitute(&inner.forward)?,
            psi: self.forward.psi.substitute(&inner.forward)?,
        };
        let inverse = ChartMap {
            t: inner.inverse.t.substitute(&self.inverse)?,
            lambda: inner.inverse.lambda.substitute(&self.inverse)?,
            mu: inner.inverse.mu.substitute(&self.inverse)?,
            psi: inner.inverse.psi.substitute(&self.inverse)?,
        };
        Ok(PointTransformation { forward, inverse })
    }

    /// Exact equality of forward components in canonical form.
    pub fn same_coordinates(&self, other: &PointTransformation) -> bool {
        CHART
            .iter()
            .all(|&v| self.forward.get(v) == other.forward.get(v))
    }

    pub fn instantiate(&self, name: &str, value: Rational) -> PointTransformation {
        let inst = |m: &ChartMap| ChartMap {
            t: m.t.instantiate(name, value),
            lambda: m.lambda.instantiate(name, value),
            mu: m.mu.instantiate(name, value),
            psi: m.psi.instantiate(name, value),
        };
        PointTransformation {
            forward: inst(&self.forward),
            inverse: inst(&self.inverse),
        }
    }
}

impl fmt::Display for PointTransformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(t, lambda, mu, psi) -> ({}, {}, {}, {})",
            self.forward.t, self.forward.lambda, self.forward.mu, self.forward.psi
        )
    }
}

/// Push-forward of a vector field: component `a` of the image is
/// `X(forward_a)` with the old coordinates replaced through the inverse.
pub fn pushforward(
    x: &VectorField,
    tr: &PointTransformation,
    seed: u64,
) -> Result<VectorField, SymvecError> {
    match tr.verify_inverse(seed)? {
        Zeroness::NonZero { witness, value } => {
            return Err(SymvecError::InverseMismatch {
                witness: witness.to_string(),
                value,
            })
        }
        _ => {}
    }
    let mut components = Vec::with_capacity(4);
    for v in CHART {
        let derived = x.apply(tr.forward.get(v));
        components.push(derived.substitute(&tr.inverse)?);
    }
    let mut it = components.into_iter();
    Ok(VectorField::new(
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
    ))
}
