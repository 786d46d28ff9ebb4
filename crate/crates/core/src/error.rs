//! Crate-wide error type.

use core::fmt;

/// Alias for `core::result::Result` specialized to [`Error`].
pub type Result<T> = core::result::Result<T, Error>;

/// Everything the validating constructors and operations can reject.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// A matrix failed the Hermiticity check; carries the largest observed
    /// `|m[i][j] - conj(m[j][i])|`.
    NotHermitian {
        /// Largest entrywise asymmetry found.
        max_asymmetry: f64,
    },
    /// An operation got a matrix of the wrong dimension.
    DimensionMismatch {
        /// Dimension the operation requires.
        expected: usize,
        /// Dimension it was given.
        found: usize,
    },
    /// A density matrix's trace is not 1 within tolerance.
    TraceNotOne {
        /// The trace that was found.
        trace: f64,
    },
    /// A density matrix has an eigenvalue below the PSD floor; carries the
    /// most negative eigenvalue.
    NotPositiveSemidefinite {
        /// Most negative eigenvalue found.
        min_eigenvalue: f64,
    },
    /// A measurement direction is not a unit vector within tolerance.
    NotUnitVector {
        /// Euclidean norm of the rejected vector.
        norm: f64,
    },
    /// Chain parameters with `J = 0` (the chain degenerates and the critical
    /// field is meaningless).
    ZeroCoupling,
    /// Anisotropy outside `[-1, 1]`, where no critical field exists.
    AnisotropyOutOfRange {
        /// The rejected anisotropy.
        gamma: f64,
    },
    /// A temperature that is negative or not finite.
    InvalidTemperature {
        /// The rejected `kT`.
        k_t: f64,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::NotHermitian { max_asymmetry } => {
                write!(
                    f,
                    "matrix is not Hermitian (max asymmetry {max_asymmetry:.3e})"
                )
            }
            Error::DimensionMismatch { expected, found } => {
                write!(
                    f,
                    "expected a {expected}x{expected} matrix, got {found}x{found}"
                )
            }
            Error::TraceNotOne { trace } => {
                write!(f, "density matrix trace is {trace:.12} instead of 1")
            }
            Error::NotPositiveSemidefinite { min_eigenvalue } => {
                write!(
                    f,
                    "matrix is not positive semidefinite (eigenvalue {min_eigenvalue:.3e})"
                )
            }
            Error::NotUnitVector { norm } => {
                write!(f, "direction must be a unit vector (norm {norm:.12})")
            }
            Error::ZeroCoupling => write!(f, "coupling J must be nonzero"),
            Error::AnisotropyOutOfRange { gamma } => {
                write!(f, "anisotropy {gamma} is outside [-1, 1]")
            }
            Error::InvalidTemperature { k_t } => {
                write!(f, "temperature kT = {k_t} must be finite and >= 0")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
