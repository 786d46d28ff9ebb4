//! Command-line entry point for the sweep tool.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use minxy_cli::config::{load_config, FileConfig};
use minxy_cli::csv::{emit_csv, format_row, format_rows, HEADER};
use minxy_cli::preset::{panel_configs, FigureId};
use minxy_cli::sweep::{
    compute_point, run_sweep, LinRange, MeasureSet, OracleFinding, SweepConfig, AUDIT_TOLERANCE,
};
use minxy_cli::{CliError, Result};

#[derive(Parser)]
#[command(
    name = "minxy",
    version,
    about = "Nonlocality sweeps for the thermal two-spin anisotropic XY chain"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep a (gamma, B, kT) grid and emit CSV.
    Sweep(SweepArgs),
    /// Write the preset figure surfaces, one CSV per gamma panel.
    Figure(FigureArgs),
    /// Evaluate one (J, gamma, B, kT) point and print a CSV row.
    Point(PointArgs),
}

#[derive(Args)]
struct SweepArgs {
    /// Flat `key = value` config file; flags given here override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Exchange coupling (default 1).
    #[arg(long = "J")]
    j: Option<f64>,
    /// Anisotropy in [-1, 1]; repeat the flag for several values.
    #[arg(long = "gamma")]
    gamma: Vec<f64>,
    /// Field range as min:max:steps.
    #[arg(long = "B")]
    b: Option<String>,
    /// Temperature range as min:max:steps (min >= 0).
    #[arg(long = "kT")]
    k_t: Option<String>,
    /// Comma-separated subset of geometric,entropic,mutual_info,entropy
    /// (default: all).
    #[arg(long)]
    measures: Option<String>,
    /// Audit sampled rows against the independent grid oracles.
    #[arg(long = "oracle-check")]
    oracle_check: bool,
    /// Output CSV file (standard output when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FigureArgs {
    /// Which surface to produce: fig1 (geometric) or fig2 (entropic).
    #[arg(long)]
    id: String,
    /// Directory for the four panel CSVs (created if missing).
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct PointArgs {
    /// Exchange coupling (default 1).
    #[arg(long = "J")]
    j: Option<f64>,
    /// Anisotropy in [-1, 1].
    #[arg(long = "gamma")]
    gamma: f64,
    /// Transverse field.
    #[arg(long = "B")]
    b: f64,
    /// Temperature (>= 0).
    #[arg(long = "kT")]
    k_t: f64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Sweep(args) => cmd_sweep(args),
        Command::Figure(args) => cmd_figure(args),
        Command::Point(args) => cmd_point(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

/// Merge flags over config-file values over built-in defaults.
fn resolve_sweep(args: &SweepArgs) -> Result<SweepConfig> {
    let file = match &args.config {
        Some(path) => load_config(path)?,
        None => FileConfig::default(),
    };
    let j = args.j.or(file.j).unwrap_or(1.0);
    let gammas = if args.gamma.is_empty() {
        file.gammas.unwrap_or_default()
    } else {
        args.gamma.clone()
    };
    let b = match &args.b {
        Some(text) => LinRange::parse(text)?,
        None => file.b.ok_or_else(|| {
            CliError::Invalid("missing field range: pass --B min:max:steps".to_string())
        })?,
    };
    let k_t = match &args.k_t {
        Some(text) => LinRange::parse(text)?,
        None => file.k_t.ok_or_else(|| {
            CliError::Invalid("missing temperature range: pass --kT min:max:steps".to_string())
        })?,
    };
    let measures = match &args.measures {
        Some(text) => MeasureSet::parse_list(text)?,
        None => file.measures.unwrap_or(MeasureSet::ALL),
    };
    Ok(SweepConfig {
        j,
        gammas,
        b,
        k_t,
        measures,
        oracle_check: args.oracle_check || file.oracle_check.unwrap_or(false),
        out: args.out.clone().or(file.out),
    })
}

fn report_findings(findings: &[OracleFinding]) -> Result<()> {
    if findings.is_empty() {
        return Ok(());
    }
    for f in findings {
        eprintln!(
            "oracle mismatch: row {} (gamma={l_g}, B={l_b}, kT={l_t}) {}: \
             closed form {:.6e} vs oracle {:.6e} (|diff| {:.3e})",
            f.row,
            f.measure,
            f.closed_form,
            f.oracle,
            f.deviation(),
            l_g = f.gamma,
            l_b = f.b,
            l_t = f.k_t,
        );
    }
    Err(CliError::Invalid(format!(
        "{} audited row(s) deviate from the oracle by more than {AUDIT_TOLERANCE:e}",
        findings.len()
    )))
}

fn cmd_sweep(args: SweepArgs) -> Result<()> {
    let cfg = resolve_sweep(&args)?;
    let report = run_sweep(&cfg)?;
    match &cfg.out {
        Some(path) => {
            emit_csv(&report.rows, path)?;
            eprintln!("wrote {} ({} rows)", path.display(), report.rows.len());
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(format_rows(&report.rows).as_bytes())
                .map_err(|e| CliError::io("<stdout>", e))?;
        }
    }
    report_findings(&report.oracle_findings)
}

fn cmd_figure(args: FigureArgs) -> Result<()> {
    let id = FigureId::parse(&args.id)?;
    std::fs::create_dir_all(&args.out).map_err(|e| CliError::io(&args.out, e))?;
    for (name, cfg) in panel_configs(id) {
        let report = run_sweep(&cfg)?;
        let path = args.out.join(&name);
        emit_csv(&report.rows, &path)?;
        eprintln!("wrote {} ({} rows)", path.display(), report.rows.len());
    }
    Ok(())
}

fn cmd_point(args: PointArgs) -> Result<()> {
    let row = compute_point(
        args.j.unwrap_or(1.0),
        args.gamma,
        args.b,
        args.k_t,
        MeasureSet::ALL,
    )?;
    println!("{HEADER}");
    println!("{}", format_row(&row));
    Ok(())
}
