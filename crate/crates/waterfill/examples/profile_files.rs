//! Read profiles from CSV and JSON text and emit machine-readable reports.
//!
//! ```bash
//! cargo run --example profile_files
//! ```

use waterfill::parse::{emit_profile, parse_profile, ProfileFormat};
use waterfill::report::{emit_report, emit_sweep, ReportFormat};
use waterfill::{budget_sweep, solve_exact, TimeBudget};

fn main() -> waterfill::Result<()> {
    let csv = "name,aptitude\npiano,0.5\nmath,2.0\n";
    let json = r#"[
        {"name": "piano", "aptitude": 0.5},
        {"name": "math", "aptitude": 2.0}
    ]"#;

    let from_csv = parse_profile(csv, ProfileFormat::Csv)?;
    let from_json = parse_profile(json, ProfileFormat::Json)?;
    assert_eq!(from_csv.activities(), from_json.activities());

    let profile = from_csv.profile();
    println!("parsed {} activities; round-trip CSV:", profile.len());
    print!("{}", emit_profile(&profile));
    println!();

    let solution = solve_exact(&profile, TimeBudget::new(1.5)?);
    println!("{}", emit_report(&solution, &profile, ReportFormat::Json)?);
    println!();

    let curve = budget_sweep(&profile, 0.0, 3.0, 7)?;
    println!("{}", emit_sweep(&curve, &profile)?);

    // malformed input names the offending row
    let err = parse_profile("name,aptitude\npiano,-1\n", ProfileFormat::Csv).unwrap_err();
    println!();
    println!("rejected bad profile: {err}");
    Ok(())
}
