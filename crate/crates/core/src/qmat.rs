//! Exact complex linear algebra on one- and two-qubit operators.
//!
//! All matrices live in fixed-capacity storage (up to 4x4) with `f64`
//! complex entries, so the module is allocation-free. The two-qubit basis
//! is ordered `|00>, |01>, |10>, |11>` with qubit A leftmost; index
//! `2a + b` holds `|ab>`.

use core::fmt;
use core::ops::{Add, Index, Mul, Neg, Sub};

pub use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::tol;
use crate::{Error, Result};

/// Largest supported matrix dimension.
pub const MAX_DIM: usize = 4;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Which half of a two-qubit system an operation keeps or acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    /// The leftmost qubit.
    A,
    /// The rightmost qubit.
    B,
}

/// A general complex matrix of dimension 2 or 4 in fixed-capacity storage.
///
/// This is the workhorse type; the validated wrappers [`HermitianMatrix`]
/// and [`DensityMatrix`] are thin layers on top of it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CMatrix {
    dim: usize,
    data: [[Complex64; MAX_DIM]; MAX_DIM],
}

impl CMatrix {
    /// The zero matrix of dimension `dim` (1 through [`MAX_DIM`]).
    pub fn zeros(dim: usize) -> Self {
        assert!(
            (1..=MAX_DIM).contains(&dim),
            "supported dimensions are 1 through 4"
        );
        CMatrix {
            dim,
            data: [[ZERO; MAX_DIM]; MAX_DIM],
        }
    }

    /// The identity matrix of dimension `dim` (1 through [`MAX_DIM`]).
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i][i] = ONE;
        }
        m
    }

    /// Builds a 2x2 matrix from rows.
    pub fn from_rows2(rows: [[Complex64; 2]; 2]) -> Self {
        let mut m = Self::zeros(2);
        for (i, row) in rows.iter().enumerate() {
            m.data[i][..2].copy_from_slice(row);
        }
        m
    }

    /// Builds a 4x4 matrix from rows.
    pub fn from_rows4(rows: [[Complex64; 4]; 4]) -> Self {
        let mut m = Self::zeros(4);
        for (i, row) in rows.iter().enumerate() {
            m.data[i] = *row;
        }
        m
    }

    /// The projector `|v><v|` onto a (not necessarily normalized) vector.
    pub fn outer(v: &[Complex64]) -> Self {
        let mut m = Self::zeros(v.len());
        for i in 0..v.len() {
            for j in 0..v.len() {
                m.data[i][j] = v[i] * v[j].conj();
            }
        }
        m
    }

    /// Kronecker product of two 2x2 matrices (left factor acts on qubit A).
    pub fn kron(a: &CMatrix, b: &CMatrix) -> Self {
        assert!(a.dim == 2 && b.dim == 2, "kron expects two 2x2 factors");
        let mut m = Self::zeros(4);
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        m.data[2 * i + k][2 * j + l] = a.data[i][j] * b.data[k][l];
                    }
                }
            }
        }
        m
    }

    /// Matrix dimension (2 or 4).
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        assert!(row < self.dim && col < self.dim);
        self.data[row][col]
    }

    /// Overwrites the entry at `(row, col)`.
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        assert!(row < self.dim && col < self.dim);
        self.data[row][col] = value;
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.data[i][j] = self.data[j][i].conj();
            }
        }
        m
    }

    /// Trace.
    pub fn trace(&self) -> Complex64 {
        let mut t = ZERO;
        for i in 0..self.dim {
            t += self.data[i][i];
        }
        t
    }

    /// Scales every entry by a real factor.
    pub fn scaled(&self, factor: f64) -> Self {
        let mut m = *self;
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.data[i][j] *= factor;
            }
        }
        m
    }

    /// Squared Hilbert-Schmidt norm `Tr(M^dagger M) = sum |m_ij|^2`.
    pub fn hs_norm_sq(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                s += self.data[i][j].norm_sqr();
            }
        }
        s
    }

    /// Largest entrywise absolute value.
    pub fn max_abs(&self) -> f64 {
        let mut m: f64 = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                m = m.max(self.data[i][j].norm());
            }
        }
        m
    }

    /// Largest `|m[i][j] - conj(m[j][i])|` — zero for an exactly Hermitian
    /// matrix.
    pub fn max_asymmetry(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                worst = worst.max((self.data[i][j] - self.data[j][i].conj()).norm());
            }
        }
        worst
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = Complex64;

    fn index(&self, (row, col): (usize, usize)) -> &Complex64 {
        assert!(row < self.dim && col < self.dim);
        &self.data[row][col]
    }
}

impl Add for CMatrix {
    type Output = CMatrix;

    fn add(self, rhs: CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut m = self;
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.data[i][j] += rhs.data[i][j];
            }
        }
        m
    }
}

impl Sub for CMatrix {
    type Output = CMatrix;

    fn sub(self, rhs: CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut m = self;
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.data[i][j] -= rhs.data[i][j];
            }
        }
        m
    }
}

impl Mul for CMatrix {
    type Output = CMatrix;

    fn mul(self, rhs: CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut m = CMatrix::zeros(self.dim);
        for i in 0..self.dim {
            for k in 0..self.dim {
                let a = self.data[i][k];
                if a == ZERO {
                    continue;
                }
                for j in 0..self.dim {
                    m.data[i][j] += a * rhs.data[k][j];
                }
            }
        }
        m
    }
}

impl Neg for CMatrix {
    type Output = CMatrix;

    fn neg(self) -> CMatrix {
        self.scaled(-1.0)
    }
}

impl fmt::Display for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let z = self.data[i][j];
                write!(f, "{:+.6}{:+.6}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The Pauli matrix `sigma_k` for `k = 0, 1, 2` = x, y, z.
pub fn pauli(k: usize) -> CMatrix {
    let i = Complex64::new(0.0, 1.0);
    match k {
        0 => CMatrix::from_rows2([[ZERO, ONE], [ONE, ZERO]]),
        1 => CMatrix::from_rows2([[ZERO, -i], [i, ZERO]]),
        2 => CMatrix::from_rows2([[ONE, ZERO], [ZERO, -ONE]]),
        _ => panic!("pauli index must be 0, 1 or 2"),
    }
}

/// A matrix validated to be Hermitian within [`tol::HERMITICITY`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianMatrix(CMatrix);

impl HermitianMatrix {
    /// Validates Hermiticity; rejects with the largest observed asymmetry.
    pub fn new(m: CMatrix) -> Result<Self> {
        let asym = m.max_asymmetry();
        if asym > tol::HERMITICITY {
            return Err(Error::NotHermitian {
                max_asymmetry: asym,
            });
        }
        Ok(HermitianMatrix(symmetrize(&m)))
    }

    /// The underlying matrix.
    pub fn matrix(&self) -> &CMatrix {
        &self.0
    }

    /// Matrix dimension (2 or 4).
    pub fn dim(&self) -> usize {
        self.0.dim
    }
}

/// Replaces `m` by `(m + m^dagger)/2`, removing rounding-level asymmetry.
fn symmetrize(m: &CMatrix) -> CMatrix {
    let mut out = *m;
    for i in 0..m.dim {
        out.data[i][i] = Complex64::new(m.data[i][i].re, 0.0);
        for j in (i + 1)..m.dim {
            let avg = (m.data[i][j] + m.data[j][i].conj()).scale(0.5);
            out.data[i][j] = avg;
            out.data[j][i] = avg.conj();
        }
    }
    out
}

/// A density matrix: Hermitian, unit trace within [`tol::TRACE`], and
/// positive semidefinite down to [`tol::PSD_FLOOR`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix(HermitianMatrix);

impl DensityMatrix {
    /// Validates trace and positivity; rejects with the offending value.
    pub fn new(h: HermitianMatrix) -> Result<Self> {
        let tr = h.matrix().trace().re;
        if (tr - 1.0).abs() > tol::TRACE {
            return Err(Error::TraceNotOne { trace: tr });
        }
        let eig = eig_hermitian(&h);
        let min = eig.eigenvalues()[0];
        if min < -tol::PSD_FLOOR {
            return Err(Error::NotPositiveSemidefinite {
                min_eigenvalue: min,
            });
        }
        Ok(DensityMatrix(h))
    }

    /// Wraps a matrix that is valid by construction (convex mixtures of
    /// projectors, images of completely positive trace-preserving maps).
    /// Hermiticity and trace are still cheaply debug-checked; positivity is
    /// the caller's mathematical guarantee.
    pub(crate) fn from_trusted(m: CMatrix) -> Self {
        debug_assert!(m.max_asymmetry() <= tol::HERMITICITY);
        debug_assert!((m.trace().re - 1.0).abs() <= tol::TRACE);
        DensityMatrix(HermitianMatrix(symmetrize(&m)))
    }

    /// The underlying Hermitian wrapper.
    pub fn hermitian(&self) -> &HermitianMatrix {
        &self.0
    }

    /// The underlying matrix.
    pub fn matrix(&self) -> &CMatrix {
        self.0.matrix()
    }

    /// Matrix dimension (2 or 4).
    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    /// Entry at `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.matrix().get(row, col)
    }
}

/// Result of [`eig_hermitian`]: eigenvalues in ascending order with
/// column-matched orthonormal eigenvectors.
#[derive(Debug, Clone, Copy)]
pub struct EigenDecomposition {
    dim: usize,
    eigenvalues: [f64; MAX_DIM],
    /// Unitary matrix whose k-th column is the k-th eigenvector.
    vectors: CMatrix,
}

impl EigenDecomposition {
    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues[..self.dim]
    }

    /// The k-th eigenvector (column k of the accumulated unitary).
    pub fn eigenvector(&self, k: usize) -> [Complex64; MAX_DIM] {
        assert!(k < self.dim);
        let mut v = [ZERO; MAX_DIM];
        for (i, vi) in v.iter_mut().enumerate().take(self.dim) {
            *vi = self.vectors.data[i][k];
        }
        v
    }

    /// The accumulated unitary (eigenvectors as columns).
    pub fn unitary(&self) -> &CMatrix {
        &self.vectors
    }

    /// Rebuilds `V diag(lambda) V^dagger`; used to check reconstruction.
    pub fn reconstruct(&self) -> CMatrix {
        let mut lambda = CMatrix::zeros(self.dim);
        for i in 0..self.dim {
            lambda.data[i][i] = Complex64::new(self.eigenvalues[i], 0.0);
        }
        self.vectors * lambda * self.vectors.adjoint()
    }
}

/// Diagonalizes a Hermitian matrix with cyclic complex Jacobi rotations.
///
/// Deterministic: a fixed sweep order and no randomized pivoting, so equal
/// inputs produce bit-identical decompositions. Converges quadratically;
/// for dimension <= 4 a handful of sweeps reaches rounding level.
pub fn eig_hermitian(h: &HermitianMatrix) -> EigenDecomposition {
    let n = h.dim();
    let mut a = *h.matrix();
    let mut v = CMatrix::identity(n);

    let scale_sq = a.hs_norm_sq().max(f64::MIN_POSITIVE);
    // Stop once the off-diagonal mass is at squared-rounding level.
    let target = scale_sq * 1e-30;

    for _sweep in 0..60 {
        let mut off_sq = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off_sq += a.data[p][q].norm_sqr();
            }
        }
        if off_sq <= target {
            break;
        }
        for p in 0..(n - 1) {
            for q in (p + 1)..n {
                let apq = a.data[p][q];
                let r = apq.norm();
                if r * r <= target / (n * n) as f64 {
                    continue;
                }
                // Unitary plane rotation U = [[c, -e^{i phi} s],
                // [e^{-i phi} s, c]] in the (p, q) plane, with phi the phase
                // of a_pq and tan(2 theta) = 2|a_pq| / (a_pp - a_qq),
                // chosen so (U^dagger A U)_pq = 0.
                let phase = apq / r;
                let theta = 0.5 * f64::atan2(2.0 * r, a.data[p][p].re - a.data[q][q].re);
                let c = theta.cos();
                let s = theta.sin();
                let sp = phase.scale(s);

                // Column update: A <- A U, V <- V U.
                for k in 0..n {
                    let akp = a.data[k][p];
                    let akq = a.data[k][q];
                    a.data[k][p] = akp.scale(c) + sp.conj() * akq;
                    a.data[k][q] = -sp * akp + akq.scale(c);

                    let vkp = v.data[k][p];
                    let vkq = v.data[k][q];
                    v.data[k][p] = vkp.scale(c) + sp.conj() * vkq;
                    v.data[k][q] = -sp * vkp + vkq.scale(c);
                }
                // Row update: A <- U^dagger A.
                for k in 0..n {
                    let apk = a.data[p][k];
                    let aqk = a.data[q][k];
                    a.data[p][k] = apk.scale(c) + sp * aqk;
                    a.data[q][k] = -sp.conj() * apk + aqk.scale(c);
                }
            }
        }
    }

    // Ascending sort; insertion sort keeps ties in sweep order, so the
    // result is deterministic even for degenerate spectra.
    let mut order = [0usize; MAX_DIM];
    for (i, o) in order.iter_mut().enumerate() {
        *o = i;
    }
    for i in 1..n {
        let mut j = i;
        while j > 0 && a.data[order[j - 1]][order[j - 1]].re > a.data[order[j]][order[j]].re {
            order.swap(j - 1, j);
            j -= 1;
        }
    }

    let mut eigenvalues = [0.0; MAX_DIM];
    let mut vectors = CMatrix::zeros(n);
    for (k, &ok) in order.iter().enumerate().take(n) {
        eigenvalues[k] = a.data[ok][ok].re;
        for i in 0..n {
            vectors.data[i][k] = v.data[i][ok];
        }
    }

    EigenDecomposition {
        dim: n,
        eigenvalues,
        vectors,
    }
}

/// Traces out one qubit of a two-qubit density matrix.
pub fn partial_trace(rho: &DensityMatrix, keep: Subsystem) -> Result<DensityMatrix> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: rho.dim(),
        });
    }
    let m = rho.matrix();
    let mut out = CMatrix::zeros(2);
    match keep {
        Subsystem::A => {
            for i in 0..2 {
                for j in 0..2 {
                    out.data[i][j] = m.data[2 * i][2 * j] + m.data[2 * i + 1][2 * j + 1];
                }
            }
        }
        Subsystem::B => {
            for k in 0..2 {
                for l in 0..2 {
                    out.data[k][l] = m.data[k][l] + m.data[2 + k][2 + l];
                }
            }
        }
    }
    // The reduced state of a valid state is valid: trace is preserved and
    // positivity survives the partial trace.
    Ok(DensityMatrix::from_trusted(out))
}

/// Shannon term `-x log2 x`, with eigenvalues inside `[-PSD_FLOOR, 0)`
/// clamped to zero (they are rounding debris on a validated state).
pub(crate) fn entropy_term(x: f64) -> f64 {
    debug_assert!(x >= -tol::PSD_FLOOR, "eigenvalue {x} below the PSD floor");
    if x <= 0.0 {
        0.0
    } else {
        -x * x.log2()
    }
}

/// Von Neumann entropy `S(rho) = -Tr(rho log2 rho)` in bits, never
/// negative: an eigenvalue a few ulps above 1 on a pure state would
/// otherwise push the sum to about `-1e-16`.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    let eig = eig_hermitian(rho.hermitian());
    let mut s = 0.0;
    for &lambda in eig.eigenvalues() {
        s += entropy_term(lambda);
    }
    s.max(0.0)
}

/// Quantum mutual information `I(rho) = S(rho_A) + S(rho_B) - S(rho)` in
/// bits; requires a two-qubit state.
pub fn mutual_information(rho: &DensityMatrix) -> Result<f64> {
    let a = partial_trace(rho, Subsystem::A)?;
    let b = partial_trace(rho, Subsystem::B)?;
    Ok(von_neumann_entropy(&a) + von_neumann_entropy(&b) - von_neumann_entropy(rho))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn r(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    /// 1/4 (I - sigma_x sigma_x - sigma_y sigma_y - sigma_z sigma_z),
    /// i.e. the singlet projector, built entrywise.
    fn singlet() -> DensityMatrix {
        let h = 0.5;
        let m = CMatrix::from_rows4([
            [r(0.0), r(0.0), r(0.0), r(0.0)],
            [r(0.0), r(h), r(-h), r(0.0)],
            [r(0.0), r(-h), r(h), r(0.0)],
            [r(0.0), r(0.0), r(0.0), r(0.0)],
        ]);
        DensityMatrix::new(HermitianMatrix::new(m).unwrap()).unwrap()
    }

    fn werner(p: f64) -> DensityMatrix {
        let s = singlet();
        let m = s.matrix().scaled(p) + CMatrix::identity(4).scaled((1.0 - p) / 4.0);
        DensityMatrix::new(HermitianMatrix::new(m).unwrap()).unwrap()
    }

    #[test]
    fn identity_and_pauli_products() {
        let x = pauli(0);
        let y = pauli(1);
        let z = pauli(2);
        // sigma_x sigma_y = i sigma_z
        let xy = x * y;
        let iz = z.scaled(1.0); // reuse; compare entrywise to i*z
        for i in 0..2 {
            for j in 0..2 {
                let want = Complex64::new(0.0, 1.0) * iz.get(i, j);
                assert!((xy.get(i, j) - want).norm() < 1e-15);
            }
        }
        assert_eq!((x * x), CMatrix::identity(2));
    }

    #[test]
    fn hermitian_rejects_asymmetric() {
        let mut m = CMatrix::identity(2);
        m.set(0, 1, c(0.1, 0.0));
        m.set(1, 0, c(0.1, 1e-3));
        let err = HermitianMatrix::new(m).unwrap_err();
        match err {
            Error::NotHermitian { max_asymmetry } => {
                assert!(
                    (max_asymmetry - 1e-3).abs() < 1e-12,
                    "asym = {max_asymmetry}"
                )
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn density_rejects_bad_trace_and_negative() {
        let m = CMatrix::identity(4).scaled(0.3);
        let h = HermitianMatrix::new(m).unwrap();
        assert!(matches!(
            DensityMatrix::new(h),
            Err(Error::TraceNotOne { .. })
        ));

        let mut m = CMatrix::zeros(2);
        m.set(0, 0, r(1.2));
        m.set(1, 1, r(-0.2));
        let h = HermitianMatrix::new(m).unwrap();
        match DensityMatrix::new(h) {
            Err(Error::NotPositiveSemidefinite { min_eigenvalue }) => {
                assert!((min_eigenvalue + 0.2).abs() < 1e-12)
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn eig_diagonal_is_sorted_with_standard_basis() {
        let mut m = CMatrix::zeros(4);
        for (i, &d) in [3.0, 1.0, 2.0, 0.0].iter().enumerate() {
            m.set(i, i, r(d));
        }
        let eig = eig_hermitian(&HermitianMatrix::new(m).unwrap());
        assert_eq!(eig.eigenvalues(), &[0.0, 1.0, 2.0, 3.0]);
        // eigenvector of the smallest eigenvalue is e_3
        let v = eig.eigenvector(0);
        assert!((v[3].norm() - 1.0).abs() < 1e-14);
        assert!(v[0].norm() + v[1].norm() + v[2].norm() < 1e-14);
    }

    #[test]
    fn eig_pauli_x_and_y() {
        for k in 0..2 {
            let eig = eig_hermitian(&HermitianMatrix::new(pauli(k)).unwrap());
            assert!((eig.eigenvalues()[0] + 1.0).abs() < 1e-14);
            assert!((eig.eigenvalues()[1] - 1.0).abs() < 1e-14);
            let rec = eig.reconstruct() - pauli(k);
            assert!(rec.max_abs() < 1e-14, "k={k} residual={}", rec.max_abs());
        }
    }

    #[test]
    fn eig_complex_hermitian_reconstructs() {
        let m = CMatrix::from_rows4([
            [r(0.3), c(0.1, 0.2), c(-0.4, 0.1), c(0.0, -0.3)],
            [c(0.1, -0.2), r(-0.7), c(0.2, 0.5), c(0.3, 0.0)],
            [c(-0.4, -0.1), c(0.2, -0.5), r(1.1), c(-0.1, 0.2)],
            [c(0.0, 0.3), c(0.3, 0.0), c(-0.1, -0.2), r(0.2)],
        ]);
        let h = HermitianMatrix::new(m).unwrap();
        let eig = eig_hermitian(&h);
        let residual = (eig.reconstruct() - *h.matrix()).max_abs();
        assert!(residual < 1e-13, "residual = {residual:e}");
        let unitary_defect =
            (eig.unitary().adjoint() * *eig.unitary() - CMatrix::identity(4)).max_abs();
        assert!(unitary_defect < 1e-13, "defect = {unitary_defect:e}");
        for w in eig.eigenvalues().windows(2) {
            assert!(w[0] <= w[1]);
        }
    }

    #[test]
    fn partial_trace_of_singlet_is_maximally_mixed() {
        let s = singlet();
        for keep in [Subsystem::A, Subsystem::B] {
            let red = partial_trace(&s, keep).unwrap();
            let diff = (*red.matrix() - CMatrix::identity(2).scaled(0.5)).max_abs();
            assert!(diff < 1e-15);
        }
    }

    #[test]
    fn partial_trace_of_product_basis_state() {
        // |01><01| -> A gives |0><0|, B gives |1><1|
        let mut m = CMatrix::zeros(4);
        m.set(1, 1, r(1.0));
        let rho = DensityMatrix::new(HermitianMatrix::new(m).unwrap()).unwrap();
        let a = partial_trace(&rho, Subsystem::A).unwrap();
        assert!((a.entry(0, 0).re - 1.0).abs() < 1e-15);
        let b = partial_trace(&rho, Subsystem::B).unwrap();
        assert!((b.entry(1, 1).re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn partial_trace_rejects_one_qubit_input() {
        let rho =
            DensityMatrix::new(HermitianMatrix::new(CMatrix::identity(2).scaled(0.5)).unwrap())
                .unwrap();
        assert!(matches!(
            partial_trace(&rho, Subsystem::A),
            Err(Error::DimensionMismatch {
                expected: 4,
                found: 2
            })
        ));
    }

    #[test]
    fn entropy_of_pure_mixed_and_spectrum() {
        let pure = DensityMatrix::new(
            HermitianMatrix::new(CMatrix::outer(&[ONE, ZERO, ZERO, ZERO])).unwrap(),
        )
        .unwrap();
        assert!(von_neumann_entropy(&pure).abs() < 1e-12);

        let mixed =
            DensityMatrix::new(HermitianMatrix::new(CMatrix::identity(4).scaled(0.25)).unwrap())
                .unwrap();
        assert!((von_neumann_entropy(&mixed) - 2.0).abs() < 1e-12);

        // diag(5/8, 1/8, 1/8, 1/8): S = -(5/8)log2(5/8) + (3/8)*3
        let mut m = CMatrix::zeros(4);
        m.set(0, 0, r(0.625));
        for i in 1..4 {
            m.set(i, i, r(0.125));
        }
        let rho = DensityMatrix::new(HermitianMatrix::new(m).unwrap()).unwrap();
        let expected = -0.625f64 * 0.625f64.log2() + 1.125;
        assert!((von_neumann_entropy(&rho) - expected).abs() < 1e-12);
        assert!((expected - 1.5487949406953985).abs() < 1e-12);
    }

    #[test]
    fn mutual_information_of_known_states() {
        assert!((mutual_information(&singlet()).unwrap() - 2.0).abs() < 1e-10);

        // product state |0><0| (x) I/2 has no correlations
        let mut m = CMatrix::zeros(4);
        m.set(0, 0, r(0.5));
        m.set(1, 1, r(0.5));
        let prod = DensityMatrix::new(HermitianMatrix::new(m).unwrap()).unwrap();
        assert!(mutual_information(&prod).unwrap().abs() < 1e-10);

        // Werner p = 1/2: eigenvalues (1+3p)/4 and three copies of (1-p)/4
        let w = werner(0.5);
        let s = -0.625f64 * 0.625f64.log2() + 1.125;
        let expected = 2.0 - s;
        assert!((mutual_information(&w).unwrap() - expected).abs() < 1e-10);
        assert!((expected - 0.4512050593046015).abs() < 1e-12);
    }
}
