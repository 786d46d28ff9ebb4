//! Grid sweeps over (gamma, B, kT) with optional oracle auditing.
//!
//! A sweep walks the Cartesian product of the requested anisotropy values,
//! field range, and temperature range in lexicographic (gamma, B, kT) order,
//! computes the selected quantities at each thermal point, and returns the
//! rows together with any oracle findings. Grid points are independent, so
//! they are evaluated in parallel and then emitted in the fixed order.

use std::path::PathBuf;

use minxy_core::chain::{critical_field, thermal_state, ChainParams, ThermalPoint};
use minxy_core::min::{
    entropic_min, entropic_min_oracle, geometric_min, geometric_min_oracle, GridSpec,
};
use minxy_core::qmat::{mutual_information, von_neumann_entropy};
use minxy_core::tol;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{CliError, Result};

/// Number of rows audited against the grid oracles when `oracle_check` is
/// set (fewer if the sweep itself is smaller).
pub const AUDIT_ROWS: usize = 50;

/// Largest accepted |closed form − oracle| before an audit emits a finding.
pub const AUDIT_TOLERANCE: f64 = 1e-3;

/// Reduced oracle resolution used for sweep audits. The default oracle grid
/// is meant for one-off verification; at sweep scale the audit only needs
/// enough resolution to catch branch mistakes, not to resolve the optimum.
pub const AUDIT_GRID: GridSpec = GridSpec {
    n_theta: 64,
    n_phi: 128,
};

/// Fixed audit seed so reruns of the same configuration pick the same rows.
const AUDIT_SEED: u64 = 42;

/// An inclusive, uniformly spaced scan over one axis.
///
/// Construction validates the invariants (finite bounds, `min < max`,
/// `steps >= 2`), so a held value is always a usable axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LinRange {
    min: f64,
    max: f64,
    steps: usize,
}

impl LinRange {
    /// Validate and build a range.
    pub fn new(min: f64, max: f64, steps: usize) -> Result<Self> {
        if !min.is_finite() || !max.is_finite() {
            return Err(CliError::Invalid(format!(
                "range bounds must be finite, got {min}:{max}"
            )));
        }
        if min >= max {
            return Err(CliError::Invalid(format!(
                "range needs min < max, got {min}:{max}"
            )));
        }
        if steps < 2 {
            return Err(CliError::Invalid(format!(
                "range needs at least 2 steps, got {steps}"
            )));
        }
        Ok(LinRange { min, max, steps })
    }

    /// Parse the `min:max:steps` flag syntax.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(CliError::Invalid(format!(
                "expected min:max:steps, got `{text}`"
            )));
        }
        let min: f64 = parts[0]
            .trim()
            .parse()
            .map_err(|_| CliError::Invalid(format!("bad range minimum `{}`", parts[0])))?;
        let max: f64 = parts[1]
            .trim()
            .parse()
            .map_err(|_| CliError::Invalid(format!("bad range maximum `{}`", parts[1])))?;
        let steps: usize = parts[2]
            .trim()
            .parse()
            .map_err(|_| CliError::Invalid(format!("bad step count `{}`", parts[2])))?;
        LinRange::new(min, max, steps)
    }

    /// Lower bound.
    pub fn min(&self) -> f64 {
        self.min
    }

    /// Upper bound.
    pub fn max(&self) -> f64 {
        self.max
    }

    /// Number of samples, endpoints included.
    pub fn steps(&self) -> usize {
        self.steps
    }

    /// The sample positions. Endpoints are exact; interior points come from
    /// a single fused interpolation so reruns reproduce identical bits.
    pub fn values(&self) -> Vec<f64> {
        let n = self.steps;
        (0..n)
            .map(|i| {
                let t = i as f64 / (n - 1) as f64;
                self.min * (1.0 - t) + self.max * t
            })
            .collect()
    }
}

/// Which per-point quantities a sweep computes.
///
/// Unselected quantities are emitted as empty CSV fields rather than being
/// dropped, so every output file has the same column layout.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MeasureSet {
    /// Geometric nonlocality `Ns`.
    pub geometric: bool,
    /// Entropic nonlocality `Nv`.
    pub entropic: bool,
    /// Quantum mutual information of the thermal state.
    pub mutual_info: bool,
    /// Von Neumann entropy of the thermal state.
    pub entropy: bool,
}

impl MeasureSet {
    /// Every supported quantity.
    pub const ALL: MeasureSet = MeasureSet {
        geometric: true,
        entropic: true,
        mutual_info: true,
        entropy: true,
    };

    /// Parse a comma-separated list of measure names.
    pub fn parse_list(text: &str) -> Result<Self> {
        let mut set = MeasureSet::default();
        for name in text.split(',') {
            match name.trim() {
                "geometric" => set.geometric = true,
                "entropic" => set.entropic = true,
                "mutual_info" => set.mutual_info = true,
                "entropy" => set.entropy = true,
                other => {
                    return Err(CliError::Invalid(format!(
                        "unknown measure `{other}` (expected geometric, entropic, \
                         mutual_info, entropy)"
                    )))
                }
            }
        }
        if set == MeasureSet::default() {
            return Err(CliError::Invalid(
                "measure list selects nothing".to_string(),
            ));
        }
        Ok(set)
    }
}

/// Full description of one sweep.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    /// Exchange coupling; must be finite and nonzero.
    pub j: f64,
    /// Anisotropy values, one output block per value. Each must satisfy
    /// |gamma| <= 1 so the critical-field column is defined.
    pub gammas: Vec<f64>,
    /// Transverse-field axis.
    pub b: LinRange,
    /// Temperature axis; the minimum must be >= 0 (zero routes to the
    /// ground-manifold state).
    pub k_t: LinRange,
    /// Quantities to compute per point.
    pub measures: MeasureSet,
    /// Whether to audit a sample of rows against the grid oracles.
    pub oracle_check: bool,
    /// Output CSV path; `None` means standard output.
    pub out: Option<PathBuf>,
}

/// One computed grid point. Unselected measures are `None`.
#[derive(Clone, Copy, Debug)]
pub struct SweepRow {
    /// Anisotropy of the row's panel.
    pub gamma: f64,
    /// Transverse field.
    pub b: f64,
    /// Temperature (in units where the Boltzmann constant is 1).
    pub k_t: f64,
    /// Geometric nonlocality, if selected.
    pub ns: Option<f64>,
    /// Entropic nonlocality, if selected.
    pub nv: Option<f64>,
    /// Quantum mutual information, if selected.
    pub mutual_info: Option<f64>,
    /// Von Neumann entropy, if selected.
    pub entropy: Option<f64>,
    /// Critical field for the row's (J, gamma).
    pub bc: f64,
}

/// A closed-form/oracle discrepancy above [`AUDIT_TOLERANCE`].
#[derive(Clone, Copy, Debug)]
pub struct OracleFinding {
    /// Index of the offending row in emission order.
    pub row: usize,
    /// Anisotropy at the audited point.
    pub gamma: f64,
    /// Field at the audited point.
    pub b: f64,
    /// Temperature at the audited point.
    pub k_t: f64,
    /// `"Ns"` or `"Nv"`.
    pub measure: &'static str,
    /// The production value.
    pub closed_form: f64,
    /// The independent grid-scan value.
    pub oracle: f64,
}

impl OracleFinding {
    /// Absolute disagreement between the two routes.
    pub fn deviation(&self) -> f64 {
        (self.closed_form - self.oracle).abs()
    }
}

/// Result of [`run_sweep`]: the rows in emission order plus any audit
/// findings (empty unless `oracle_check` was set and something disagreed).
#[derive(Clone, Debug)]
pub struct SweepReport {
    /// Computed rows in lexicographic (gamma, B, kT) order.
    pub rows: Vec<SweepRow>,
    /// Oracle discrepancies; an empty list means the audit passed.
    pub oracle_findings: Vec<OracleFinding>,
}

/// Evaluate the selected quantities at a single thermal point.
pub fn compute_point(
    j: f64,
    gamma: f64,
    b: f64,
    k_t: f64,
    measures: MeasureSet,
) -> Result<SweepRow> {
    let params = ChainParams::new(j, gamma, b)?;
    let bc = critical_field(&params)?;
    let point = ThermalPoint::new(params, k_t)?;
    let rho = thermal_state(&point);
    let ns = measures
        .geometric
        .then(|| geometric_min(&rho).map(|r| r.value))
        .transpose()?;
    let nv = measures
        .entropic
        .then(|| entropic_min(&rho, tol::DEGENERACY).map(|r| r.value))
        .transpose()?;
    let mutual_info = measures
        .mutual_info
        .then(|| mutual_information(&rho))
        .transpose()?;
    let entropy = measures.entropy.then(|| von_neumann_entropy(&rho));
    Ok(SweepRow {
        gamma,
        b,
        k_t,
        ns,
        nv,
        mutual_info,
        entropy,
        bc,
    })
}

/// Check everything that can be rejected before any computation starts.
fn validate(cfg: &SweepConfig) -> Result<()> {
    if !cfg.j.is_finite() || cfg.j == 0.0 {
        return Err(CliError::Invalid(format!(
            "coupling J must be finite and nonzero, got {}",
            cfg.j
        )));
    }
    if cfg.gammas.is_empty() {
        return Err(CliError::Invalid(
            "at least one gamma value is required".to_string(),
        ));
    }
    for &g in &cfg.gammas {
        if !g.is_finite() || g.abs() > 1.0 {
            return Err(CliError::Invalid(format!(
                "gamma must lie in [-1, 1], got {g}"
            )));
        }
    }
    if cfg.k_t.min() < 0.0 {
        return Err(CliError::Invalid(format!(
            "temperatures must be >= 0, got minimum {}",
            cfg.k_t.min()
        )));
    }
    Ok(())
}

/// Run a sweep and return the rows plus any oracle findings.
///
/// Rows come back in lexicographic (gamma, B, kT) order — gamma values are
/// sorted ascending regardless of how they were supplied — and the row count
/// is exactly `gammas.len() * b.steps() * k_t.steps()`. The computation is
/// deterministic: identical configurations reproduce identical rows.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    validate(cfg)?;

    let mut gammas = cfg.gammas.clone();
    gammas.sort_by(|a, b| a.partial_cmp(b).expect("finite gammas"));
    let b_values = cfg.b.values();
    let k_t_values = cfg.k_t.values();

    let mut jobs = Vec::with_capacity(gammas.len() * b_values.len() * k_t_values.len());
    for &gamma in &gammas {
        for &b in &b_values {
            for &k_t in &k_t_values {
                jobs.push((gamma, b, k_t));
            }
        }
    }

    let rows: Vec<SweepRow> = jobs
        .par_iter()
        .map(|&(gamma, b, k_t)| compute_point(cfg.j, gamma, b, k_t, cfg.measures))
        .collect::<Result<_>>()?;

    let oracle_findings = if cfg.oracle_check {
        audit_rows(cfg, &jobs)?
    } else {
        Vec::new()
    };

    Ok(SweepReport {
        rows,
        oracle_findings,
    })
}

/// Re-derive a fixed-size sample of rows through the independent grid
/// oracles and report any disagreement above [`AUDIT_TOLERANCE`].
fn audit_rows(cfg: &SweepConfig, jobs: &[(f64, f64, f64)]) -> Result<Vec<OracleFinding>> {
    let count = AUDIT_ROWS.min(jobs.len());
    let mut rng = ChaCha8Rng::seed_from_u64(AUDIT_SEED);
    let mut picks = rand::seq::index::sample(&mut rng, jobs.len(), count).into_vec();
    picks.sort_unstable();

    let nested: Vec<Vec<OracleFinding>> = picks
        .par_iter()
        .map(|&row| -> Result<Vec<OracleFinding>> {
            let (gamma, b, k_t) = jobs[row];
            let params = ChainParams::new(cfg.j, gamma, b)?;
            let point = ThermalPoint::new(params, k_t)?;
            let rho = thermal_state(&point);
            let mut findings = Vec::new();
            if cfg.measures.geometric {
                let closed_form = geometric_min(&rho)?.value;
                let oracle = geometric_min_oracle(&rho, AUDIT_GRID)?;
                if (closed_form - oracle).abs() > AUDIT_TOLERANCE {
                    findings.push(OracleFinding {
                        row,
                        gamma,
                        b,
                        k_t,
                        measure: "Ns",
                        closed_form,
                        oracle,
                    });
                }
            }
            if cfg.measures.entropic {
                let closed_form = entropic_min(&rho, tol::DEGENERACY)?.value;
                let oracle = entropic_min_oracle(&rho, AUDIT_GRID)?;
                if (closed_form - oracle).abs() > AUDIT_TOLERANCE {
                    findings.push(OracleFinding {
                        row,
                        gamma,
                        b,
                        k_t,
                        measure: "Nv",
                        closed_form,
                        oracle,
                    });
                }
            }
            Ok(findings)
        })
        .collect::<Result<_>>()?;

    Ok(nested.into_iter().flatten().collect())
}
