//! A small closed symbolic layer on the chart `(t, lambda, mu, psi)`.
//!
//! The expression class covers exactly what the vorticity-equation
//! symmetry analysis needs: polynomials in the chart variables, the
//! radical `s = sqrt(1 - mu^2)` with integer powers, sines and cosines of
//! arguments affine in `t` and `lambda`, and opaque named parameters.
//! General simplification, integration and symbolic PDE solving are out
//! of scope.

pub mod decompose;
pub mod eval;
pub mod expr;
pub mod field;
pub mod param;
pub mod subst;
pub mod transform;
pub mod trig;

pub use decompose::{decompose_in_basis, DecomposeError};
pub use eval::{is_zero, sample_params, sample_points, EvalPoint, Zeroness, DEFAULT_SEED};
pub use expr::{Expr, Var, CHART};
pub use field::VectorField;
pub use param::{ParamPoly, PI_SYMBOL};
pub use subst::ChartMap;
pub use transform::{pushforward, PointTransformation};
pub use trig::TrigArg;

#[derive(Debug, thiserror::Error)]
pub enum SymvecError {
    #[error("trig argument must be affine in t and lambda, got {expr}")]
    NonAffineArgument { expr: String },
    #[error("unsupported substitution: {message}")]
    UnsupportedSubstitution { message: String },
    #[error("missing parameter value: {message}")]
    MissingParam { message: String },
    #[error("evaluation at pole mu = {mu}")]
    PoleEvaluation { mu: f64 },
    #[error("inverse verification failed at {witness} (residual {value})")]
    InverseMismatch { witness: String, value: f64 },
}
