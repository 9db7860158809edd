use thiserror::Error;

#[derive(Debug, Error)]
pub enum LieError {
    #[error("antisymmetry violated at basis pair ({0}, {1})")]
    Antisymmetry(usize, usize),
    #[error("Jacobi identity violated at basis triple ({0}, {1}, {2})")]
    Jacobi(usize, usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("gram matrix is not symmetric")]
    NotSymmetric,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subspace is not a subalgebra")]
    NotASubalgebra,
    #[error("subspace is not totally isotropic")]
    NotTotallyIsotropic,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}
