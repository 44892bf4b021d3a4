//! Exact computation of complete point symmetry groups through megaideal
//! invariance, with the barotropic vorticity equation on a rotating sphere
//! as the fully worked case.
//!
//! The crate has three layers:
//!
//! - [`exactalg`] — rational linear algebra, Lie algebras by structure
//!   constants, subspace series, centralizers, the stabilizer
//!   construction, a deterministic megaideal closure engine, and
//!   automorphism checks. All exact.
//! - [`symvec`] — a small closed symbolic expression language on the chart
//!   `(t, lambda, mu, psi)` with the radical `s = sqrt(1 - mu^2)` and trig
//!   of affine arguments: differentiation, canonical forms, vector fields,
//!   commutators, and push-forwards under invertible point
//!   transformations.
//! - [`sbve`] — the spherical vorticity equation case study: symmetry
//!   generators, the truncated gauge tower, the rotating-frame
//!   elimination map, the two discrete mirror symmetries, constraint
//!   verification, exact solutions and residual checks, and the factor
//!   group of the symmetry group.
//!
//! The `megalie` binary in the companion crate exposes all of this on the
//! command line and produces deterministic verification reports.

pub mod exactalg;
pub mod sbve;
pub mod symvec;

pub use exactalg::{LieAlgebra, LinearMap, Matrix, Rational, Subspace};
pub use symvec::{Expr, PointTransformation, VectorField, Zeroness};
