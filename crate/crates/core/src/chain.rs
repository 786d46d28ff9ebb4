//! The two-spin anisotropic XY chain in a transverse magnetic field.
//!
//! With raising/lowering operators `S^+- = S^x +- i S^y` and `S^z` on each
//! site, the Hamiltonian is
//!
//! ```text
//! H = J (S1^+ S2^- + S1^- S2^+)
//!   + J gamma (S1^+ S2^+ + S1^- S2^-)
//!   + B (S1^z + S2^z)
//! ```
//!
//! In the basis `|00>, |01>, |10>, |11>` (with `|0>` the `S^z = +1/2`
//! state) this is the real matrix with diagonal `(B, 0, 0, -B)`, inner
//! coupling `H[1][2] = H[2][1] = J` and outer coupling
//! `H[0][3] = H[3][0] = J gamma`. Both 2x2 blocks diagonalize in closed
//! form, which is what [`analytic_spectrum`] returns and what
//! [`thermal_state`] exponentiates.

#[allow(unused_imports)]
use num_traits::Float;

use num_complex::Complex64;

use crate::qmat::{CMatrix, DensityMatrix, HermitianMatrix};
use crate::tol;
use crate::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Chain parameters `(J, gamma, B)`. `J` must be nonzero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainParams {
    j: f64,
    gamma: f64,
    b: f64,
}

impl ChainParams {
    /// Validates that `J != 0` and all parameters are finite.
    pub fn new(j: f64, gamma: f64, b: f64) -> Result<Self> {
        if j == 0.0 || !j.is_finite() || !gamma.is_finite() || !b.is_finite() {
            return Err(Error::ZeroCoupling);
        }
        Ok(ChainParams { j, gamma, b })
    }

    /// Exchange coupling `J`.
    pub fn j(&self) -> f64 {
        self.j
    }

    /// Anisotropy `gamma`.
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Transverse field `B`.
    pub fn b(&self) -> f64 {
        self.b
    }

    /// The outer-block energy scale `eta = sqrt(B^2 + J^2 gamma^2)`.
    pub fn eta(&self) -> f64 {
        self.b.hypot(self.j * self.gamma)
    }
}

/// One exact eigenpair of the chain Hamiltonian.
#[derive(Debug, Clone, Copy)]
pub struct EigenPair {
    /// Energy eigenvalue.
    pub energy: f64,
    /// Normalized eigenvector in the `|00>, |01>, |10>, |11>` basis.
    pub state: [Complex64; 4],
}

/// The four exact eigenpairs, ordered `+J, -J, +eta, -eta`.
#[derive(Debug, Clone, Copy)]
pub struct Spectrum {
    /// Eigenpairs in the fixed order `+J, -J, +eta, -eta`.
    pub pairs: [EigenPair; 4],
    /// The outer-block scale `eta`.
    pub eta: f64,
}

impl Spectrum {
    /// Smallest eigenvalue.
    pub fn ground_energy(&self) -> f64 {
        let mut e = self.pairs[0].energy;
        for p in &self.pairs[1..] {
            e = e.min(p.energy);
        }
        e
    }
}

/// Builds the 4x4 chain Hamiltonian.
pub fn hamiltonian(p: &ChainParams) -> HermitianMatrix {
    let mut m = CMatrix::zeros(4);
    let re = |x: f64| Complex64::new(x, 0.0);
    m.set(0, 0, re(p.b));
    m.set(3, 3, re(-p.b));
    m.set(1, 2, re(p.j));
    m.set(2, 1, re(p.j));
    m.set(0, 3, re(p.j * p.gamma));
    m.set(3, 0, re(p.j * p.gamma));
    HermitianMatrix::new(m).expect("construction is exactly Hermitian")
}

/// Exact eigenpairs of the chain Hamiltonian.
///
/// The inner block `{|01>, |10>}` gives energies `+-J` with the symmetric
/// and antisymmetric combinations. The outer block `{|00>, |11>}` gives
/// `+-eta`; its eigenvectors are proportional to `(eta + B, J gamma)` and
/// `(-J gamma, eta + B)`, where `eta + B` is evaluated in the
/// cancellation-free form for either sign of `B`. When `J gamma = 0` the
/// outer block is already diagonal and the eigenvectors degenerate to
/// `|00>` (energy `B`) and `|11>` (energy `-B`) directly.
pub fn analytic_spectrum(p: &ChainParams) -> Spectrum {
    let eta = p.eta();
    let s = core::f64::consts::FRAC_1_SQRT_2;
    let re = |x: f64| Complex64::new(x, 0.0);

    let triplet = EigenPair {
        energy: p.j,
        state: [ZERO, re(s), re(s), ZERO],
    };
    let singlet = EigenPair {
        energy: -p.j,
        state: [ZERO, re(s), re(-s), ZERO],
    };

    let jg = p.j * p.gamma;
    let (plus, minus) = if jg == 0.0 {
        let ket00 = EigenPair {
            energy: p.b,
            state: [re(1.0), ZERO, ZERO, ZERO],
        };
        let ket11 = EigenPair {
            energy: -p.b,
            state: [ZERO, ZERO, ZERO, re(1.0)],
        };
        if p.b >= 0.0 {
            (ket00, ket11)
        } else {
            (ket11, ket00)
        }
    } else {
        // eta + B suffers cancellation for B < 0; rewrite it through
        // (eta + B)(eta - B) = (J gamma)^2.
        let eta_plus_b = if p.b >= 0.0 {
            eta + p.b
        } else {
            jg * jg / (eta - p.b)
        };
        let norm = eta_plus_b.hypot(jg);
        let plus = EigenPair {
            energy: eta,
            state: [re(eta_plus_b / norm), ZERO, ZERO, re(jg / norm)],
        };
        let minus = EigenPair {
            energy: -eta,
            state: [re(-jg / norm), ZERO, ZERO, re(eta_plus_b / norm)],
        };
        (plus, minus)
    };

    Spectrum {
        pairs: [triplet, singlet, plus, minus],
        eta,
    }
}

/// A chain plus a temperature, validated so `kT` is finite and nonnegative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalPoint {
    params: ChainParams,
    k_t: f64,
}

impl ThermalPoint {
    /// Validates `kT >= 0` (Boltzmann constant folded into `kT`).
    pub fn new(params: ChainParams, k_t: f64) -> Result<Self> {
        if !k_t.is_finite() || k_t < 0.0 {
            return Err(Error::InvalidTemperature { k_t });
        }
        Ok(ThermalPoint { params, k_t })
    }

    /// The chain parameters.
    pub fn params(&self) -> &ChainParams {
        &self.params
    }

    /// The temperature `kT`.
    pub fn k_t(&self) -> f64 {
        self.k_t
    }
}

/// The Gibbs state `exp(-H/kT) / Z`, built from the exact spectrum.
///
/// Energies are shifted by the ground energy before exponentiating, so the
/// weights stay finite at any positive temperature. At `kT = 0` the state
/// is the equal-weight mixture over the ground manifold, where membership
/// uses the window `eps - eps_min <= GROUND_GTOL_SCALE * max(1, |eps_min|)`
/// (level crossings make the manifold two-dimensional at isolated
/// parameter points).
pub fn thermal_state(point: &ThermalPoint) -> DensityMatrix {
    let spectrum = analytic_spectrum(point.params());
    let e_min = spectrum.ground_energy();

    let mut weights = [0.0f64; 4];
    if point.k_t == 0.0 {
        let gtol = tol::GROUND_GTOL_SCALE * e_min.abs().max(1.0);
        for (w, pair) in weights.iter_mut().zip(&spectrum.pairs) {
            *w = if pair.energy - e_min <= gtol {
                1.0
            } else {
                0.0
            };
        }
    } else {
        for (w, pair) in weights.iter_mut().zip(&spectrum.pairs) {
            *w = (-(pair.energy - e_min) / point.k_t).exp();
        }
    }
    let z: f64 = weights.iter().sum();

    let mut rho = CMatrix::zeros(4);
    for (w, pair) in weights.iter().zip(&spectrum.pairs) {
        if *w > 0.0 {
            rho = rho + CMatrix::outer(&pair.state).scaled(w / z);
        }
    }
    DensityMatrix::from_trusted(rho)
}

/// The critical field `B_c = J sqrt(1 - gamma^2)`; defined only for
/// `|gamma| <= 1`.
pub fn critical_field(p: &ChainParams) -> Result<f64> {
    if p.gamma.abs() > 1.0 {
        return Err(Error::AnisotropyOutOfRange { gamma: p.gamma });
    }
    Ok(p.j * (1.0 - p.gamma * p.gamma).sqrt())
}
