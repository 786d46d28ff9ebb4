//! Measurement-induced nonlocality for two-qubit systems.
//!
//! The crate provides, in three layers:
//!
//! * [`qmat`] — exact complex linear algebra on one- and two-qubit operators:
//!   a fixed-capacity matrix type, validated Hermitian and density-matrix
//!   wrappers, a deterministic Jacobi eigensolver, partial traces, von
//!   Neumann entropy and mutual information.
//! * [`min`] — the two nonlocality measures themselves: the geometric measure
//!   `N^s` (maximal Hilbert-Schmidt displacement under locally invariant
//!   projective measurements on qubit A) and the entropic measure `N^v`
//!   (maximal post-measurement entropy gain), each with a closed-form /
//!   optimized implementation and an independent dense-grid oracle.
//! * [`chain`] — the two-spin anisotropic XY chain in a transverse field:
//!   Hamiltonian, exact spectrum, Gibbs states at arbitrary temperature and
//!   the critical-field formula.
//!
//! Everything is `no_std`-compatible (no heap allocation at all); the
//! companion CLI crate layers parameter sweeps, CSV output and a command-line
//! interface on top.
//!
//! Conventions used throughout:
//!
//! * Two-qubit basis order `|00>, |01>, |10>, |11>`, qubit A leftmost, and
//!   `|0>` is the spin-up (`S^z = +1/2`) state.
//! * Logarithms in entropic quantities are base 2.
//! * Bloch decomposition `rho = (I (x) I + x.sigma (x) I + I (x) y.sigma
//!   + sum_ij T_ij sigma_i (x) sigma_j) / 4`.

#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod chain;
mod error;
pub mod min;
pub mod qmat;
pub mod tol;

pub use error::{Error, Result};
