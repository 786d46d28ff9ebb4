//! Numerical tolerances used by the validation layers and algorithms.
//!
//! Every tolerance that carries meaning across module boundaries lives here,
//! with its rationale, so tests and downstream code refer to one authority
//! instead of re-inventing magic numbers.

/// Maximum allowed `max_ij |m[i][j] - conj(m[j][i])|` for a matrix accepted
/// as Hermitian. Construction from f64 arithmetic keeps asymmetry at the
/// 1e-16 scale; 1e-12 leaves headroom without letting real defects through.
pub const HERMITICITY: f64 = 1e-12;

/// Maximum allowed `|Tr(rho) - 1|` for a density matrix.
pub const TRACE: f64 = 1e-10;

/// Eigenvalue floor for positive semidefiniteness: eigenvalues in
/// `[-PSD_FLOOR, 0)` are treated as rounding debris and clamped to zero;
/// anything below is a genuine defect and rejected.
pub const PSD_FLOOR: f64 = 1e-10;

/// Maximum allowed `|norm - 1|` for a measurement-direction unit vector.
pub const UNIT_NORM: f64 = 1e-12;

/// Default threshold on the local Bloch-vector norm below which the reduced
/// state of qubit A counts as maximally mixed (degenerate), opening the
/// measurement optimization to the full sphere.
pub const DEGENERACY: f64 = 1e-9;

/// Upper edge of the band just above [`DEGENERACY`] in which both the
/// spectral-axis branch and the degenerate-search branch are evaluated and
/// the larger value wins. The admissible-measurement set collapses
/// discontinuously as the Bloch norm crosses zero, so near the threshold the
/// safe estimate of a maximum is the max over both branches.
pub const NEAR_DEGENERACY: f64 = 1e-6;

/// Scale factor for the ground-manifold window at `kT = 0`: states with
/// `eps - eps_min <= GROUND_GTOL_SCALE * max(1, |eps_min|)` share the
/// zero-temperature mixture.
pub const GROUND_GTOL_SCALE: f64 = 1e-9;

/// Convergence criterion for the degenerate-branch direction refinement:
/// iteration stops once the direction moves by less than this angle (rad).
pub const REFINE_ANGLE: f64 = 1e-6;

// The validation floors must be strictly looser than f64 rounding and
// strictly tighter than the algorithmic thresholds they guard.
const _: () = {
    assert!(HERMITICITY > f64::EPSILON);
    assert!(UNIT_NORM > f64::EPSILON);
    assert!(TRACE >= HERMITICITY);
    assert!(PSD_FLOOR >= HERMITICITY);
    assert!(DEGENERACY > PSD_FLOOR / 1e2);
    assert!(NEAR_DEGENERACY > DEGENERACY);
    assert!(REFINE_ANGLE <= NEAR_DEGENERACY);
};
