//! Command-line front end: `solve`, `sweep`, `verify`, and `chart` over
//! profile files.
//!
//! Results go to standard output, diagnostics to standard error, and the
//! exit code tells the outcome apart: 0 success or verification pass, 1 I/O
//! error, 2 validation error, 3 verification failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::chart::render_chart;
use crate::error::Error;
use crate::kkt::verify_kkt;
use crate::parse::{parse_profile, ProfileFormat};
use crate::profile::{AptitudeProfile, TimeBudget};
use crate::report::{emit_report, emit_sweep, format_sig, ReportFormat};
use crate::solver::solve_exact;
use crate::sweep::budget_sweep;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

/// One parsed command-line invocation.
#[derive(Debug, Parser)]
#[command(
    name = "waterfill",
    version,
    about = "Split a time budget across activities with logarithmic diminishing returns"
)]
pub struct CommandInvocation {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve the optimal allocation for one budget
    Solve {
        /// Profile file: CSV `name,aptitude` rows, or a JSON array when the
        /// path ends in `.json`
        #[arg(long)]
        input: PathBuf,
        /// Total budget to divide
        #[arg(long)]
        budget: f64,
        /// Output format
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Sample solutions across a budget range and report activation breakpoints
    Sweep {
        #[arg(long)]
        input: PathBuf,
        /// Low end of the budget range
        #[arg(long)]
        budget_min: f64,
        /// High end of the budget range
        #[arg(long)]
        budget_max: f64,
        /// Number of uniformly spaced sample budgets
        #[arg(long, default_value_t = 50)]
        steps: usize,
    },
    /// Check a candidate allocation against the optimality conditions
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        budget: f64,
        /// JSON array of per-activity times aligned with the profile rows
        #[arg(long)]
        allocation: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
    },
    /// Draw the water-filling container as ASCII art
    Chart {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        budget: f64,
        #[arg(long, default_value_t = 72)]
        width: usize,
        #[arg(long, default_value_t = 20)]
        height: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
}

impl From<OutputFormat> for ReportFormat {
    fn from(format: OutputFormat) -> Self {
        match format {
            OutputFormat::Table => ReportFormat::Table,
            OutputFormat::Json => ReportFormat::Json,
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn io(path: &Path, err: std::io::Error) -> Self {
        Self {
            code: EXIT_IO,
            message: format!("cannot read {}: {err}", path.display()),
        }
    }

    fn validation(err: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_VALIDATION,
            message: err.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::validation(err)
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `stdout` and diagnostics to `stderr`. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let invocation = match CommandInvocation::try_parse_from(args) {
        Ok(invocation) => invocation,
        Err(err) => {
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{err}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{err}");
                    EXIT_VALIDATION
                }
            };
        }
    };
    dispatch(invocation.command, stdout, stderr)
}

/// Runs an already-parsed command. Returns the exit code.
pub fn dispatch(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match command {
        Command::Solve {
            input,
            budget,
            format,
        } => run_solve(&input, budget, format, stdout, stderr),
        Command::Sweep {
            input,
            budget_min,
            budget_max,
            steps,
        } => run_sweep(&input, budget_min, budget_max, steps, stdout, stderr),
        Command::Verify {
            input,
            budget,
            allocation,
            tolerance,
        } => run_verify(&input, budget, &allocation, tolerance, stdout, stderr),
        Command::Chart {
            input,
            budget,
            width,
            height,
        } => run_chart(&input, budget, width, height, stdout, stderr),
    }
}

pub fn run_solve(
    input: &Path,
    budget: f64,
    format: OutputFormat,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    report_outcome(stderr, || {
        let profile = load_profile(input)?;
        let budget = TimeBudget::new(budget).map_err(Failure::validation)?;
        let solution = solve_exact(&profile, budget);
        let text = emit_report(&solution, &profile, format.into())?;
        write_output(stdout, &text)
    })
}

pub fn run_sweep(
    input: &Path,
    budget_min: f64,
    budget_max: f64,
    steps: usize,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    report_outcome(stderr, || {
        let profile = load_profile(input)?;
        let curve = budget_sweep(&profile, budget_min, budget_max, steps)?;
        let text = emit_sweep(&curve, &profile)?;
        write_output(stdout, &text)
    })
}

pub fn run_verify(
    input: &Path,
    budget: f64,
    allocation: &Path,
    tolerance: f64,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    report_outcome(stderr, || {
        let profile = load_profile(input)?;
        let budget = TimeBudget::new(budget).map_err(Failure::validation)?;
        let text = read_file(allocation)?;
        let times: Vec<f64> = serde_json::from_str(&text).map_err(|err| {
            Failure::validation(format!(
                "allocation file must be a JSON array of numbers: {err}"
            ))
        })?;
        let report = verify_kkt(&profile, budget, &times, tolerance)?;

        let mut out = String::new();
        for (label, value) in report.residuals() {
            out.push_str(&format!("{label:<20}{}\n", format_sig(value, 12)));
        }
        out.push_str(&format!(
            "{:<20}{}",
            "verdict",
            if report.passed { "PASS" } else { "FAIL" }
        ));
        write_output(stdout, &out)?;
        Ok(if report.passed {
            EXIT_OK
        } else {
            EXIT_VERIFY_FAILED
        })
    })
}

pub fn run_chart(
    input: &Path,
    budget: f64,
    width: usize,
    height: usize,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    report_outcome(stderr, || {
        let profile = load_profile(input)?;
        let budget = TimeBudget::new(budget).map_err(Failure::validation)?;
        let solution = solve_exact(&profile, budget);
        let text = render_chart(&profile, &solution, width, height)?;
        write_output(stdout, &text)
    })
}

fn report_outcome(
    stderr: &mut dyn Write,
    action: impl FnOnce() -> Result<i32, Failure>,
) -> i32 {
    match action() {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message);
            failure.code
        }
    }
}

fn write_output(stdout: &mut dyn Write, text: &str) -> Result<i32, Failure> {
    writeln!(stdout, "{text}").map_err(|err| Failure {
        code: EXIT_IO,
        message: format!("cannot write output: {err}"),
    })?;
    Ok(EXIT_OK)
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|err| Failure::io(path, err))
}

fn load_profile(path: &Path) -> Result<AptitudeProfile, Failure> {
    let text = read_file(path)?;
    let format = match path.extension() {
        Some(ext) if ext.eq_ignore_ascii_case("json") => ProfileFormat::Json,
        _ => ProfileFormat::Csv,
    };
    let document = parse_profile(&text, format)?;
    Ok(document
        .with_source_path(path.display().to_string())
        .profile())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut stdout = Vec::new();
        let mut stderr = Vec::new();
        let code = run(
            std::iter::once("waterfill").chain(args.iter().copied()),
            &mut stdout,
            &mut stderr,
        );
        (
            code,
            String::from_utf8(stdout).unwrap(),
            String::from_utf8(stderr).unwrap(),
        )
    }

    fn fixture(name: &str) -> String {
        format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
    }

    #[test]
    fn solve_writes_report_to_stdout() {
        let (code, out, err) = run_str(&[
            "solve",
            "--input",
            &fixture("two.csv"),
            "--budget",
            "1",
            "--format",
            "json",
        ]);
        assert_eq!(code, EXIT_OK, "stderr: {err}");
        assert!(out.contains("\"water_level\": 1.25"));
        assert!(err.is_empty());
    }

    #[test]
    fn missing_file_is_an_io_error() {
        let (code, out, err) = run_str(&["solve", "--input", "no-such-file.csv", "--budget", "1"]);
        assert_eq!(code, EXIT_IO);
        assert!(out.is_empty());
        assert!(err.contains("no-such-file.csv"));
    }

    #[test]
    fn duplicate_name_is_a_validation_error() {
        let (code, _, err) = run_str(&["solve", "--input", &fixture("dup.csv"), "--budget", "1"]);
        assert_eq!(code, EXIT_VALIDATION);
        assert!(err.contains("math"), "stderr: {err}");
    }

    #[test]
    fn negative_budget_is_a_validation_error() {
        let (code, _, err) = run_str(&["solve", "--input", &fixture("two.csv"), "--budget", "-1"]);
        assert_eq!(code, EXIT_VALIDATION);
        assert!(err.contains("budget"));
    }

    #[test]
    fn unknown_flag_is_a_validation_error() {
        let (code, _, err) = run_str(&["solve", "--frobnicate"]);
        assert_eq!(code, EXIT_VALIDATION);
        assert!(!err.is_empty());
    }

    #[test]
    fn help_goes_to_stdout_and_succeeds() {
        let (code, out, err) = run_str(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("solve"));
        assert!(err.is_empty());
    }

    #[test]
    fn sweep_rejects_single_step() {
        let (code, _, err) = run_str(&[
            "sweep",
            "--input",
            &fixture("two.csv"),
            "--budget-min",
            "0",
            "--budget-max",
            "2",
            "--steps",
            "1",
        ]);
        assert_eq!(code, EXIT_VALIDATION);
        assert!(err.contains("steps"));
    }

    #[test]
    fn chart_rejects_small_dimensions() {
        let (code, _, err) = run_str(&[
            "chart",
            "--input",
            &fixture("two.csv"),
            "--budget",
            "1",
            "--width",
            "10",
        ]);
        assert_eq!(code, EXIT_VALIDATION);
        assert!(err.contains("chart"));
    }
}
