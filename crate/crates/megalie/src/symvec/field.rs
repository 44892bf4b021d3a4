//! Vector fields on the chart and their commutators.

use super::expr::{Expr, Var, CHART};
use std::fmt;

/// First-order differential operator
/// `xi_t d/dt + xi_lambda d/dlambda + xi_mu d/dmu + xi_psi d/dpsi`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct VectorField {
    pub xi_t: Expr,
    pub xi_lambda: Expr,
    pub xi_mu: Expr,
    pub xi_psi: Expr,
}

impl VectorField {
    pub fn zero() -> VectorField {
        VectorField::default()
    }

    pub fn new(xi_t: Expr, xi_lambda: Expr, xi_mu: Expr, xi_psi: Expr) -> VectorField {
        VectorField {
            xi_t,
            xi_lambda,
            xi_mu,
            xi_psi,
        }
    }

    pub fn component(&self, v: Var) -> &Expr {
        match v {
            Var::T => &self.xi_t,
            Var::Lambda => &self.xi_lambda,
            Var::Mu => &self.xi_mu,
            Var::Psi => &self.xi_psi,
        }
    }

    pub fn components(&self) -> impl Iterator<Item = (Var, &Expr)> {
        CHART.iter().map(move |&v| (v, self.component(v)))
    }

    /// Apply as a derivation: `X(f) = sum_v xi_v df/dv`.
    pub fn apply(&self, f: &Expr) -> Expr {
        let mut out = Expr::zero();
        for (v, xi) in self.components() {
            if !xi.is_zero_expr() {
                out = out + xi.clone() * f.differentiate(v);
            }
        }
        out
    }

    /// Commutator `[x, y]^a = x(y^a) - y(x^a)`, canonicalized.
    pub fn commutator(&self, other: &VectorField) -> VectorField {
        VectorField {
            xi_t: self.apply(&other.xi_t) - other.apply(&self.xi_t),
            xi_lambda: self.apply(&other.xi_lambda) - other.apply(&self.xi_lambda),
            xi_mu: self.apply(&other.xi_mu) - other.apply(&self.xi_mu),
            xi_psi: self.apply(&other.xi_psi) - other.apply(&self.xi_psi),
        }
    }

    pub fn add(&self, other: &VectorField) -> VectorField {
        VectorField {
            xi_t: self.xi_t.clone() + other.xi_t.clone(),
            xi_lambda: self.xi_lambda.clone() + other.xi_lambda.clone(),
            xi_mu: self.xi_mu.clone() + other.xi_mu.clone(),
            xi_psi: self.xi_psi.clone() + other.xi_psi.clone(),
        }
    }

    pub fn scale(&self, r: crate::exactalg::Rational) -> VectorField {
        VectorField {
            xi_t: self.xi_t.scale(r),
            xi_lambda: self.xi_lambda.scale(r),
            xi_mu: self.xi_mu.scale(r),
            xi_psi: self.xi_psi.scale(r),
        }
    }

    pub fn neg(&self) -> VectorField {
        VectorField {
            xi_t: -self.xi_t.clone(),
            xi_lambda: -self.xi_lambda.clone(),
            xi_mu: -self.xi_mu.clone(),
            xi_psi: -self.xi_psi.clone(),
        }
    }

    pub fn sub(&self, other: &VectorField) -> VectorField {
        self.add(&other.neg())
    }

    pub fn is_zero_field(&self) -> bool {
        self.components().all(|(_, e)| e.is_zero_expr())
    }

    pub fn instantiate(&self, name: &str, value: crate::exactalg::Rational) -> VectorField {
        VectorField {
            xi_t: self.xi_t.instantiate(name, value),
            xi_lambda: self.xi_lambda.instantiate(name, value),
            xi_mu: self.xi_mu.instantiate(name, value),
            xi_psi: self.xi_psi.instantiate(name, value),
        }
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (v, e) in self.components() {
            if !e.is_zero_expr() {
                parts.push(format!("({e}) d/d{}", v.name()));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutator_is_antisymmetric_on_itself() {
        let x = VectorField::new(Expr::t(), Expr::zero(), Expr::zero(), -Expr::psi());
        assert!(x.commutator(&x).is_zero_field());
    }

    #[test]
    fn scaling_vs_translation() {
        // [t d/dt - psi d/dpsi, d/dt] = -d/dt
        let d = VectorField::new(Expr::t(), Expr::zero(), Expr::zero(), -Expr::psi());
        let p = VectorField::new(Expr::one(), Expr::zero(), Expr::zero(), Expr::zero());
        let c = d.commutator(&p);
        assert_eq!(c, p.neg());
    }
}
