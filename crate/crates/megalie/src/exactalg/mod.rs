//! Exact rational linear algebra and Lie algebras via structure constants:
//! subspace arithmetic in canonical echelon form, derived and central
//! series, centralizers, the stabilizer construction, the megaideal
//! closure engine, and automorphism checks. Everything here is exact; no
//! floating point.

pub mod algebra;
pub mod closure;
pub mod format;
pub mod maps;
pub mod matrix;
pub mod rational;
pub mod subspace;

pub use algebra::LieAlgebra;
pub use closure::{
    embed_subspace, label_embedding, megaideal_closure, replay, stability_filter, ClosureExpr,
    ClosureOptions, ClosureResult, FoundMegaideal, Stability,
};
pub use format::{algebra_from_json, algebra_to_json, matrix_from_json, matrix_to_json};
pub use maps::{
    extract_constraint_coefficients, is_automorphism, preserves_subspace, AutomorphismCheck,
    ConstraintCoefficients, ConstraintViolation, LinearMap,
};
pub use matrix::Matrix;
pub use rational::Rational;
pub use subspace::Subspace;

#[derive(Debug, thiserror::Error)]
pub enum ExactAlgError {
    #[error("{context}: dimension mismatch ({left} vs {right})")]
    DimensionMismatch {
        context: &'static str,
        left: usize,
        right: usize,
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("structure tensor has wrong shape for dimension {dim}")]
    BadStructureTensor { dim: usize },
    #[error("antisymmetry violated at c[{i}][{j}][{k}]")]
    AntisymmetryViolation { i: usize, j: usize, k: usize },
    #[error("Jacobi identity violated on basis triple ({i}, {j}, {k})")]
    JacobiViolation { i: usize, j: usize, k: usize },
    #[error("closure expression references missing seed {index}")]
    MissingSeed { index: usize },
    #[error("label {label:?} of the smaller algebra is absent from the larger one")]
    LabelNotEmbeddable { label: String },
    #[error("label embedding is not a subalgebra: bracket [{i}, {j}] differs")]
    NotASubalgebra { i: String, j: String },
    #[error("schema error: {message}")]
    SchemaError { message: String },
    #[error("parse error: {message}")]
    ParseError { message: String },
}
