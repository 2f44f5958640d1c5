use thiserror::Error;

/// Errors produced by the numerical kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The point lies on (or numerically indistinguishably close to) the
    /// diagonal line of constant vectors, where standardization is undefined.
    #[error("degenerate input: point is constant within tolerance, standardization is undefined")]
    DegenerateInput,

    /// Two operands of a pairwise operation have different dimensions.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// An operation that needs at least one point received none.
    #[error("empty input: at least one point is required")]
    EmptyInput,

    /// The eigensolver did not reduce the off-diagonal norm to tolerance
    /// within its sweep budget.
    #[error("eigendecomposition did not converge within {sweeps} sweeps")]
    ConvergenceFailure { sweeps: usize },

    /// More clusters requested than there are points.
    #[error("too few points: k = {k} clusters requested but only {n} points given")]
    TooFewPoints { k: usize, n: usize },

    /// A component is NaN or infinite; rejected at construction time so the
    /// math kernels stay total.
    #[error("non-finite component at index {index}")]
    NonFiniteComponent { index: usize },

    /// Points must have at least two components.
    #[error("dimension {dim} is too small: at least 2 components are required")]
    DimensionTooSmall { dim: usize },

    /// Values handed to the standardized-point constructor do not satisfy
    /// the hypersphere invariants (component sum ~ 0, squared norm ~ D).
    #[error("values are not standardized: component sum or squared norm is off the hypersphere")]
    NotStandardized,

    /// Matrix entries supplied to a symmetric-matrix constructor are not
    /// exactly symmetric.
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
