//! Machine- and human-readable renderings of solutions and sweeps.
//!
//! All numbers are rendered at 12 significant digits, which exceeds every
//! solver tolerance while keeping output diffable. Identical inputs always
//! produce byte-identical text.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::profile::AptitudeProfile;
use crate::solver::WaterLevelSolution;
use crate::sweep::SweepCurve;

/// Formats `value` with `digits` significant digits, trimming trailing
/// zeros, in the style of C's `%g`.
pub fn format_sig(value: f64, digits: usize) -> String {
    assert!(digits >= 1, "need at least one significant digit");
    if value == 0.0 {
        return "0".to_string();
    }
    if !value.is_finite() {
        return value.to_string();
    }
    let scientific = format!("{:.*e}", digits - 1, value);
    let (mantissa, exponent) = scientific
        .split_once('e')
        .expect("scientific notation always carries an exponent");
    let exponent: i32 = exponent.parse().expect("exponent is an integer");
    if exponent < -4 || exponent >= digits as i32 {
        format!("{}e{}", trim_zeros(mantissa), exponent)
    } else {
        let decimals = (digits as i32 - 1 - exponent).max(0) as usize;
        trim_zeros(&format!("{value:.decimals$}"))
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

fn sig12(value: f64) -> String {
    format_sig(value, 12)
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

/// One row of a solution report, aligned with the input profile order.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub name: String,
    pub aptitude: f64,
    pub inaptitude: f64,
    pub time: f64,
    pub result: f64,
    pub active: bool,
}

/// A solved allocation paired with the profile it was solved for, ready to
/// render.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionReport {
    pub budget: f64,
    pub dual: f64,
    pub water_level: f64,
    pub total_result: f64,
    pub rows: Vec<ReportRow>,
}

impl SolutionReport {
    pub fn new(solution: &WaterLevelSolution, profile: &AptitudeProfile) -> Result<Self> {
        if solution.times().len() != profile.len() {
            return Err(Error::LengthMismatch {
                expected: profile.len(),
                actual: solution.times().len(),
            });
        }
        let rows = profile
            .iter()
            .enumerate()
            .map(|(i, activity)| ReportRow {
                name: activity.name().to_string(),
                aptitude: activity.aptitude(),
                inaptitude: activity.inaptitude(),
                time: solution.times()[i],
                result: solution.results()[i],
                active: solution.active()[i],
            })
            .collect();
        Ok(Self {
            budget: solution.budget(),
            dual: solution.dual(),
            water_level: solution.water_level(),
            total_result: solution.total_result(),
            rows,
        })
    }

    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        let _ = writeln!(out, "  \"budget\": {},", sig12(self.budget));
        let _ = writeln!(out, "  \"dual\": {},", sig12(self.dual));
        let _ = writeln!(out, "  \"water_level\": {},", sig12(self.water_level));
        let _ = writeln!(out, "  \"total_result\": {},", sig12(self.total_result));
        out.push_str("  \"activities\": [\n");
        for (i, row) in self.rows.iter().enumerate() {
            let comma = if i + 1 < self.rows.len() { "," } else { "" };
            let _ = writeln!(
                out,
                "    {{\"name\": {}, \"aptitude\": {}, \"inaptitude\": {}, \"time\": {}, \"result\": {}, \"active\": {}}}{}",
                json_string(&row.name),
                sig12(row.aptitude),
                sig12(row.inaptitude),
                sig12(row.time),
                sig12(row.result),
                row.active,
                comma,
            );
        }
        out.push_str("  ]\n}");
        out
    }

    pub fn to_table(&self) -> String {
        let header = ["name", "aptitude", "inaptitude", "time", "result", "active"];
        let rows: Vec<[String; 6]> = self
            .rows
            .iter()
            .map(|row| {
                [
                    row.name.clone(),
                    sig12(row.aptitude),
                    sig12(row.inaptitude),
                    sig12(row.time),
                    sig12(row.result),
                    if row.active { "yes" } else { "no" }.to_string(),
                ]
            })
            .collect();
        let widths: Vec<usize> = (0..6)
            .map(|c| {
                rows.iter()
                    .map(|r| r[c].chars().count())
                    .chain([header[c].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();

        let mut out = String::new();
        let _ = writeln!(out, "budget        {}", sig12(self.budget));
        let _ = writeln!(out, "dual          {}", sig12(self.dual));
        let _ = writeln!(out, "water level   {}", sig12(self.water_level));
        let _ = writeln!(out, "total result  {}", sig12(self.total_result));
        out.push('\n');
        let format_line = |cells: [&str; 6]| -> String {
            let mut line = String::new();
            for (c, cell) in cells.iter().enumerate() {
                if c > 0 {
                    line.push_str("  ");
                }
                // name and active flag left-aligned, numbers right-aligned
                let pad = widths[c] - cell.chars().count();
                if c == 0 || c == 5 {
                    line.push_str(cell);
                    line.push_str(&" ".repeat(pad));
                } else {
                    line.push_str(&" ".repeat(pad));
                    line.push_str(cell);
                }
            }
            line.trim_end().to_string()
        };
        out.push_str(&format_line(header));
        for row in &rows {
            out.push('\n');
            out.push_str(&format_line([
                &row[0], &row[1], &row[2], &row[3], &row[4], &row[5],
            ]));
        }
        out
    }
}

/// Output format for [`emit_report`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Table,
}

/// Renders a solution for the given profile.
pub fn emit_report(
    solution: &WaterLevelSolution,
    profile: &AptitudeProfile,
    format: ReportFormat,
) -> Result<String> {
    let report = SolutionReport::new(solution, profile)?;
    Ok(match format {
        ReportFormat::Json => report.to_json(),
        ReportFormat::Table => report.to_table(),
    })
}

/// Renders a sweep as JSON with parallel arrays aligned to the sampled
/// budgets and one times series per activity in input order.
pub fn emit_sweep(curve: &SweepCurve, profile: &AptitudeProfile) -> Result<String> {
    for solution in curve.solutions() {
        if solution.times().len() != profile.len() {
            return Err(Error::LengthMismatch {
                expected: profile.len(),
                actual: solution.times().len(),
            });
        }
    }

    let number_list = |values: &mut dyn Iterator<Item = f64>| -> String {
        values.map(sig12).collect::<Vec<_>>().join(", ")
    };

    let mut out = String::from("{\n");
    let _ = writeln!(
        out,
        "  \"budgets\": [{}],",
        number_list(&mut curve.budgets().iter().copied())
    );
    let _ = writeln!(out, "  \"duals\": [{}],", number_list(&mut curve.duals()));
    let _ = writeln!(
        out,
        "  \"total_results\": [{}],",
        number_list(&mut curve.total_results())
    );
    out.push_str("  \"times\": [\n");
    for i in 0..profile.len() {
        let comma = if i + 1 < profile.len() { "," } else { "" };
        let _ = writeln!(
            out,
            "    [{}]{}",
            number_list(&mut curve.solutions().iter().map(|s| s.times()[i])),
            comma,
        );
    }
    out.push_str("  ],\n");
    out.push_str("  \"breakpoints\": [\n");
    for (i, bp) in curve.breakpoints().iter().enumerate() {
        let comma = if i + 1 < curve.breakpoints().len() { "," } else { "" };
        let name = profile
            .get(bp.activity)
            .map(|a| a.name())
            .unwrap_or_default();
        let _ = writeln!(
            out,
            "    {{\"name\": {}, \"entry_budget\": {}}}{}",
            json_string(name),
            sig12(bp.entry_budget),
            comma,
        );
    }
    out.push_str("  ]\n}");
    Ok(out)
}
