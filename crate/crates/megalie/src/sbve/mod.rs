//! The spherical vorticity equation case study: generators, the truncated
//! symmetry algebra, the rotating-frame elimination map, discrete
//! symmetries and the constraints forced on them, exact solutions with
//! residual verification, and the factor group of the symmetry group.

pub mod build;
pub mod generators;
pub mod grid;
pub mod rotation;
pub mod solutions;
pub mod symmetry;

pub use build::build_truncated_algebra;
pub use generators::{generators, GeneratorSet};
pub use grid::{residual_on_grid, Grid, ResidualField, FD_SPACING, MU_LIMIT};
pub use rotation::{verify_rotation_constraints, RotationCheck, RotationReport, EQUATION_NAMES};
pub use solutions::{
    exact_solutions, residual, residual_is_zero, transform_solution, vorticity_operator,
    ExactSolution,
};
pub use symmetry::{
    discrete_symmetries, factor_group_table, general_symmetry, omega_elimination,
    pushforward_matrix, pushforward_matrix_to, stabilizer_series, FactorGroupTable,
    StabilizerStep, SymmetryParams,
};

use crate::exactalg::{ExactAlgError, Rational};
use crate::symvec::{DecomposeError, SymvecError};

#[derive(Debug, thiserror::Error)]
pub enum SbveError {
    #[error("truncation degree {n_max} is too small; the gauge-tower series needs at least 2")]
    TruncationTooSmall { n_max: usize },
    #[error("algebra does not close on [{left}, {right}]: {source}")]
    NonClosure {
        left: String,
        right: String,
        source: DecomposeError,
    },
    #[error("push-forward of {label} leaves the generator span: {source}")]
    PushforwardOutsideSpan {
        label: String,
        source: DecomposeError,
    },
    #[error("symmetry family requires a1 != 0")]
    SingularSymmetry,
    #[error("epsilon must be +1 or -1, got {value}")]
    EpsilonNotSign { value: Rational },
    #[error("coset representatives do not close under composition at ({i}, {j})")]
    CosetNotClosed { i: usize, j: usize },
    #[error("label {label:?} missing from algebra")]
    MissingLabel { label: String },
    #[error("catalogued solution {name:?} has nonzero residual: {residual}")]
    SolutionResidualNonzero { name: String, residual: String },
    #[error("transformation is not affine in psi")]
    PsiNotAffine,
    #[error("angular part leaves [-1, 1]: M = {value} at {witness}")]
    RotationDomain { value: f64, witness: String },
    #[error("grid contract violated: {message}")]
    GridContract { message: String },
    #[error("expression still contains unbound parameter {name:?}")]
    UnboundParameter { name: String },
    #[error(transparent)]
    Algebra(#[from] ExactAlgError),
    #[error(transparent)]
    Symbolic(#[from] SymvecError),
}
