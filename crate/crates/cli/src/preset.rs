//! Preset sweep configurations for the two standard figure surfaces.
//!
//! Both presets walk the same (gamma, B, kT) grid — anisotropy panels 0,
//! 0.5, 0.8 and 1 over B in [0, 3] and kT in [0.01, 2] at 81x81 — and
//! differ only in the measure column they fill: the first surface plots the
//! geometric nonlocality, the second the entropic one. The axis extents are
//! a choice, picked to contain every feature of interest (the low-field
//! plateau, the critical field, the revival, and the thermal decay); the
//! kT floor of 0.01 stays just above the ground-manifold branch.

use crate::error::{CliError, Result};
use crate::sweep::{LinRange, MeasureSet, SweepConfig};

/// Anisotropy value of each panel, in panel order.
pub const PANEL_GAMMAS: [f64; 4] = [0.0, 0.5, 0.8, 1.0];

/// Panel letters appended to output file names (`fig1_a.csv`, ...).
pub const PANEL_SUFFIXES: [char; 4] = ['a', 'b', 'c', 'd'];

/// Which preset surface to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FigureId {
    /// Geometric nonlocality surface.
    Fig1,
    /// Entropic nonlocality surface.
    Fig2,
}

impl FigureId {
    /// Parse the `--id` flag value.
    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "fig1" => Ok(FigureId::Fig1),
            "fig2" => Ok(FigureId::Fig2),
            other => Err(CliError::Invalid(format!(
                "unknown figure id `{other}` (expected fig1 or fig2)"
            ))),
        }
    }

    /// Base name used for the panel files.
    pub fn file_stem(&self) -> &'static str {
        match self {
            FigureId::Fig1 => "fig1",
            FigureId::Fig2 => "fig2",
        }
    }

    fn measures(&self) -> MeasureSet {
        match self {
            FigureId::Fig1 => MeasureSet {
                geometric: true,
                ..MeasureSet::default()
            },
            FigureId::Fig2 => MeasureSet {
                entropic: true,
                ..MeasureSet::default()
            },
        }
    }
}

/// The full preset configuration (all four panels in one sweep).
pub fn preset_figure(id: FigureId) -> SweepConfig {
    SweepConfig {
        j: 1.0,
        gammas: PANEL_GAMMAS.to_vec(),
        b: LinRange::new(0.0, 3.0, 81).expect("preset B range"),
        k_t: LinRange::new(0.01, 2.0, 81).expect("preset kT range"),
        measures: id.measures(),
        oracle_check: false,
        out: None,
    }
}

/// Per-panel file names and single-gamma configurations, in panel order.
pub fn panel_configs(id: FigureId) -> Vec<(String, SweepConfig)> {
    let base = preset_figure(id);
    PANEL_GAMMAS
        .iter()
        .zip(PANEL_SUFFIXES.iter())
        .map(|(&gamma, &suffix)| {
            let name = format!("{}_{suffix}.csv", id.file_stem());
            let cfg = SweepConfig {
                gammas: vec![gamma],
                ..base.clone()
            };
            (name, cfg)
        })
        .collect()
}
