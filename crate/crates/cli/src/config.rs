//! Flat `key = value` configuration files.
//!
//! The format is intentionally minimal so runs stay reproducible from a
//! single human-readable file: one `key = value` pair per line, `#` starts
//! a comment, blank lines are ignored. Keys mirror the command-line flags
//! (`J`, `gamma`, `B`, `kT`, `measures`, `oracle_check`, `out`); values use
//! the same syntax as the flags, with `gamma` taking a comma-separated
//! list. Command-line flags override file values.

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{CliError, Result};
use crate::sweep::{LinRange, MeasureSet};

/// Values read from a config file; every field is optional so flags and
/// built-in defaults can fill the gaps.
#[derive(Clone, Debug, Default)]
pub struct FileConfig {
    /// Exchange coupling.
    pub j: Option<f64>,
    /// Anisotropy list.
    pub gammas: Option<Vec<f64>>,
    /// Field range.
    pub b: Option<LinRange>,
    /// Temperature range.
    pub k_t: Option<LinRange>,
    /// Measure selection.
    pub measures: Option<MeasureSet>,
    /// Oracle-audit switch.
    pub oracle_check: Option<bool>,
    /// Output path.
    pub out: Option<PathBuf>,
}

/// Parse config text. Unknown keys and malformed values are rejected so a
/// typo cannot silently fall back to a default.
pub fn parse_config(text: &str) -> Result<FileConfig> {
    let mut cfg = FileConfig::default();
    for (index, raw_line) in text.lines().enumerate() {
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let lineno = index + 1;
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::Invalid(format!("config line {lineno}: expected key = value"))
        })?;
        let key = key.trim();
        let value = value.trim();
        let bad = |what: &str| CliError::Invalid(format!("config line {lineno}: {what}"));
        match key {
            "J" => {
                let j: f64 = value.parse().map_err(|_| bad("J must be a number"))?;
                cfg.j = Some(j);
            }
            "gamma" => {
                let mut gammas = Vec::new();
                for part in value.split(',') {
                    let g: f64 = part
                        .trim()
                        .parse()
                        .map_err(|_| bad("gamma must be a comma-separated number list"))?;
                    gammas.push(g);
                }
                cfg.gammas = Some(gammas);
            }
            "B" => cfg.b = Some(LinRange::parse(value)?),
            "kT" => cfg.k_t = Some(LinRange::parse(value)?),
            "measures" => cfg.measures = Some(MeasureSet::parse_list(value)?),
            "oracle_check" => {
                cfg.oracle_check = Some(match value {
                    "true" => true,
                    "false" => false,
                    _ => return Err(bad("oracle_check must be true or false")),
                });
            }
            "out" => cfg.out = Some(PathBuf::from(value)),
            other => return Err(bad(&format!("unknown key `{other}`"))),
        }
    }
    Ok(cfg)
}

/// Read and parse a config file.
pub fn load_config(path: &Path) -> Result<FileConfig> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_config(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_file_round_trips() {
        let text = "\
# sweep setup
J = 1.5
gamma = 0, 0.5, 1   # three panels
B = 0:3:81
kT = 0.01:2:81
measures = geometric, entropy
oracle_check = true
out = results/run.csv
";
        let cfg = parse_config(text).unwrap();
        assert_eq!(cfg.j, Some(1.5));
        assert_eq!(cfg.gammas, Some(vec![0.0, 0.5, 1.0]));
        let b = cfg.b.unwrap();
        assert_eq!((b.min(), b.max(), b.steps()), (0.0, 3.0, 81));
        let k_t = cfg.k_t.unwrap();
        assert_eq!((k_t.min(), k_t.max(), k_t.steps()), (0.01, 2.0, 81));
        let m = cfg.measures.unwrap();
        assert!(m.geometric && m.entropy && !m.entropic && !m.mutual_info);
        assert_eq!(cfg.oracle_check, Some(true));
        assert_eq!(cfg.out, Some(PathBuf::from("results/run.csv")));
    }

    #[test]
    fn empty_and_comment_only_files_are_fine() {
        let cfg = parse_config("\n# nothing here\n\n").unwrap();
        assert!(cfg.j.is_none() && cfg.gammas.is_none() && cfg.out.is_none());
    }

    #[test]
    fn typos_are_rejected_with_line_numbers() {
        let err = parse_config("J = 1\nmeasure = geometric\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        assert!(parse_config("J one\n").is_err());
        assert!(parse_config("gamma = 0;1\n").is_err());
        assert!(parse_config("oracle_check = yes\n").is_err());
    }

    #[test]
    fn missing_file_is_an_io_error() {
        let err = load_config(Path::new("/no/such/config.txt")).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }
}
