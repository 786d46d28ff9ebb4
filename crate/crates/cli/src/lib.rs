//! Sweep tool for thermal two-spin XY-chain nonlocality surfaces.
//!
//! This crate drives `minxy-core` over (gamma, B, kT) parameter grids and
//! writes the results as CSV. It is split into:
//!
//! - [`sweep`]: grid construction, parallel evaluation, oracle auditing;
//! - [`csv`]: the fixed eight-column output format;
//! - [`preset`]: the built-in figure configurations;
//! - [`config`]: flat `key = value` run files.
//!
//! The `minxy` binary wires these together behind `sweep`, `figure`, and
//! `point` subcommands. Exit codes: 0 on success, 1 for invalid requests
//! (including oracle findings when auditing was requested), 2 for I/O
//! failures.

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod config;
pub mod csv;
mod error;
pub mod preset;
pub mod sweep;

pub use error::{CliError, Result};
