//! End-to-end tests of the `minxy` binary and the library surface it wraps:
//! argument handling, exit codes, CSV shape, config-file layering, and
//! rerun determinism of the emitted text.

use std::path::Path;
use std::process::{Command, Output};

use minxy_cli::csv::{format_rows, HEADER};
use minxy_cli::sweep::{run_sweep, LinRange, MeasureSet, SweepConfig};

fn minxy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minxy"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn help_and_version_exit_zero() {
    for args in [
        &["--help"][..],
        &["--version"][..],
        &["sweep", "--help"][..],
    ] {
        let out = minxy(args);
        assert_eq!(exit_code(&out), 0, "{args:?}");
    }
}

#[test]
fn bad_arguments_exit_one() {
    let cases: &[&[&str]] = &[
        &["sweep", "--bogus"],
        &["sweep", "--gamma", "0", "--B", "0:2", "--kT", "0.01:1:3"],
        &["sweep", "--gamma", "0", "--B", "0:2:5"],
        &[
            "sweep", "--gamma", "1.5", "--B", "0:2:5", "--kT", "0.01:1:3",
        ],
        &["sweep", "--gamma", "0", "--B", "0:2:5", "--kT", "-1:1:3"],
        &[
            "sweep",
            "--gamma",
            "0",
            "--B",
            "0:2:5",
            "--kT",
            "0.01:1:3",
            "--measures",
            "nope",
        ],
        &["figure", "--id", "fig9", "--out", "/tmp"],
        &["point", "--gamma", "0", "--B", "0.5"],
    ];
    for args in cases {
        let out = minxy(args);
        assert_eq!(exit_code(&out), 1, "{args:?} -> {}", stdout_of(&out));
    }
}

#[test]
fn unwritable_output_exits_two() {
    let out = minxy(&[
        "sweep",
        "--gamma",
        "0",
        "--B",
        "0:2:3",
        "--kT",
        "0.01:1:2",
        "--out",
        "/nonexistent-dir/rows.csv",
    ]);
    assert_eq!(exit_code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("/nonexistent-dir/rows.csv"), "{err}");
}

#[test]
fn point_prints_header_and_one_parseable_row() {
    let out = minxy(&["point", "--gamma", "0", "--B", "0.5", "--kT", "0.01"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], HEADER);
    let fields: Vec<f64> = lines[1]
        .split(',')
        .map(|f| f.parse().expect("numeric field"))
        .collect();
    assert_eq!(fields.len(), 8);
    assert!((fields[3] - 0.5).abs() < 0.01, "Ns = {}", fields[3]);
    assert!((fields[4] - 1.0).abs() < 0.02, "Nv = {}", fields[4]);
    assert!((fields[7] - 1.0).abs() < 1e-12, "Bc = {}", fields[7]);
}

#[test]
fn sweep_streams_the_grid_to_stdout() {
    let out = minxy(&["sweep", "--gamma", "0", "--B", "0:2:5", "--kT", "0.01:1:3"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1 + 15, "one gamma x 5 B x 3 kT");
    assert_eq!(lines[0], HEADER);
    for line in &lines[1..] {
        assert_eq!(line.split(',').count(), 8);
    }
}

#[test]
fn sweep_to_file_matches_stdout_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.csv");
    let args = [
        "sweep", "--gamma", "0.8", "--B", "0:3:4", "--kT", "0.01:2:3",
    ];
    let piped = minxy(&args);
    assert_eq!(exit_code(&piped), 0);
    let mut file_args: Vec<&str> = args.to_vec();
    let path_str = path.to_str().unwrap();
    file_args.extend(["--out", path_str]);
    let written = minxy(&file_args);
    assert_eq!(exit_code(&written), 0);
    assert!(
        stdout_of(&written).is_empty(),
        "file mode keeps stdout clean"
    );
    let file_bytes = std::fs::read(&path).unwrap();
    assert_eq!(file_bytes, piped.stdout);
}

#[test]
fn unselected_measures_leave_empty_fields() {
    let out = minxy(&[
        "sweep",
        "--gamma",
        "0",
        "--B",
        "0:2:3",
        "--kT",
        "0.01:1:2",
        "--measures",
        "entropy",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    let row = text.lines().nth(1).unwrap();
    let fields: Vec<&str> = row.split(',').collect();
    assert_eq!(fields[3], "");
    assert_eq!(fields[4], "");
    assert_eq!(fields[5], "");
    assert!(!fields[6].is_empty());
}

#[test]
fn oracle_check_passes_quietly_on_a_small_grid() {
    let out = minxy(&[
        "sweep",
        "--gamma",
        "0",
        "--gamma",
        "1",
        "--B",
        "0:3:3",
        "--kT",
        "0.05:1:3",
        "--oracle-check",
    ]);
    assert_eq!(
        exit_code(&out),
        0,
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn config_file_drives_a_sweep_and_flags_override_it() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.conf");
    std::fs::write(
        &path,
        "# two-panel run\nJ = 1\ngamma = 0.5\nB = 0:2:3\nkT = 0.01:1:2\nmeasures = geometric\n",
    )
    .unwrap();
    let path_str = path.to_str().unwrap();

    let from_file = minxy(&["sweep", "--config", path_str]);
    assert_eq!(exit_code(&from_file), 0);
    let text = stdout_of(&from_file);
    let row = text.lines().nth(1).unwrap();
    assert!(row.starts_with("5.00000000000e-1,"), "{row}");
    let fields: Vec<&str> = row.split(',').collect();
    assert!(!fields[3].is_empty(), "geometric selected by file");
    assert_eq!(fields[4], "", "entropic not selected");

    let overridden = minxy(&["sweep", "--config", path_str, "--gamma", "0"]);
    assert_eq!(exit_code(&overridden), 0);
    let text = stdout_of(&overridden);
    assert!(
        text.lines()
            .skip(1)
            .all(|l| l.starts_with("0.00000000000e0,")),
        "flag gamma replaces the file's"
    );
}

#[test]
fn figure_writes_one_csv_per_panel() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("fresh/subdir");
    let out = minxy(&["figure", "--id", "fig1", "--out", out_dir.to_str().unwrap()]);
    assert_eq!(
        exit_code(&out),
        0,
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    for suffix in ['a', 'b', 'c', 'd'] {
        let path = out_dir.join(format!("fig1_{suffix}.csv"));
        let text = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("{path:?} missing"));
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 1 + 81 * 81, "{path:?}");
        assert_eq!(lines[0], HEADER);
    }
    let gammas: Vec<String> = ['a', 'b', 'c', 'd']
        .iter()
        .map(|s| {
            let text = std::fs::read_to_string(out_dir.join(format!("fig1_{s}.csv"))).unwrap();
            text.lines()
                .nth(1)
                .unwrap()
                .split(',')
                .next()
                .unwrap()
                .to_string()
        })
        .collect();
    assert_eq!(
        gammas,
        vec![
            "0.00000000000e0",
            "5.00000000000e-1",
            "8.00000000000e-1",
            "1.00000000000e0"
        ]
    );
}

#[test]
fn golden_first_panel_reproduces_byte_identically_at_reduced_resolution() {
    let cfg = SweepConfig {
        j: 1.0,
        gammas: vec![0.0],
        b: LinRange::new(0.0, 3.0, 41).unwrap(),
        k_t: LinRange::new(0.01, 2.0, 41).unwrap(),
        measures: MeasureSet {
            geometric: true,
            ..MeasureSet::default()
        },
        oracle_check: false,
        out: None,
    };
    let first = format_rows(&run_sweep(&cfg).unwrap().rows);
    let second = format_rows(&run_sweep(&cfg).unwrap().rows);
    assert_eq!(first, second);
    assert_eq!(first.lines().count(), 1 + 41 * 41);
    // Spot anchors: the plateau value at low field and the dead zone above
    // the critical field at the coldest row.
    let low_field: Vec<&str> = first
        .lines()
        .find(|l| l.starts_with("0.00000000000e0,7.50000000000e-1,1.00000000000e-2"))
        .expect("B=0.75, kT=0.01 row present")
        .split(',')
        .collect();
    let ns: f64 = low_field[3].parse().unwrap();
    assert!((ns - 0.5).abs() <= 0.01, "plateau row Ns = {ns}");
    let high_field: Vec<&str> = first
        .lines()
        .find(|l| l.starts_with("0.00000000000e0,1.50000000000e0,1.00000000000e-2"))
        .expect("B=1.5, kT=0.01 row present")
        .split(',')
        .collect();
    let ns: f64 = high_field[3].parse().unwrap();
    assert!(ns <= 0.01, "dead row Ns = {ns}");
}

#[test]
fn progress_and_errors_stay_off_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir: &Path = dir.path();
    let csv = out_dir.join("swept.csv");
    let run = minxy(&[
        "sweep",
        "--gamma",
        "0",
        "--B",
        "0:1:3",
        "--kT",
        "0.01:1:2",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&run), 0);
    assert!(run.stdout.is_empty());
    assert!(
        String::from_utf8(run.stderr).unwrap().contains("swept.csv"),
        "progress goes to stderr"
    );
}
