//! Reading activity profiles from CSV or JSON text.
//!
//! The CSV dialect is deliberately tiny: comma separator, `.` decimal point,
//! no quoting, UTF-8, final newline optional. The header must be exactly
//! `name,aptitude`. JSON input is an array of objects with a string `name`
//! and a numeric `aptitude`.

use std::collections::HashSet;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::profile::AptitudeProfile;
use crate::report::format_sig;

/// Supported on-disk profile formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileFormat {
    Csv,
    Json,
}

/// A parsed and validated activity list.
///
/// Every row is already checked against the profile invariants, so
/// [`profile`](ProfileDocument::profile) cannot fail.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfileDocument {
    source_path: String,
    activities: Vec<(String, f64)>,
}

impl ProfileDocument {
    pub fn source_path(&self) -> &str {
        &self.source_path
    }

    /// `(name, aptitude)` rows in input order.
    pub fn activities(&self) -> &[(String, f64)] {
        &self.activities
    }

    pub fn with_source_path(mut self, path: impl Into<String>) -> Self {
        self.source_path = path.into();
        self
    }

    pub fn profile(&self) -> AptitudeProfile {
        AptitudeProfile::from_pairs(
            self.activities
                .iter()
                .map(|(name, aptitude)| (name.clone(), *aptitude)),
        )
        .expect("document rows are validated at parse time")
    }
}

/// Parses profile text in the given format into a validated document.
pub fn parse_profile(input: &str, format: ProfileFormat) -> Result<ProfileDocument> {
    let activities = match format {
        ProfileFormat::Csv => parse_csv(input)?,
        ProfileFormat::Json => parse_json(input)?,
    };
    validate_rows(&activities)?;
    Ok(ProfileDocument {
        source_path: String::new(),
        activities,
    })
}

/// Renders a profile in the same CSV dialect [`parse_profile`] reads.
///
/// Names containing commas or newlines are not representable in this dialect.
pub fn emit_profile(profile: &AptitudeProfile) -> String {
    let mut out = String::from("name,aptitude\n");
    for activity in profile {
        out.push_str(activity.name());
        out.push(',');
        out.push_str(&format_sig(activity.aptitude(), 12));
        out.push('\n');
    }
    out
}

fn parse_csv(input: &str) -> Result<Vec<(String, f64)>> {
    let mut lines: Vec<&str> = input.split('\n').collect();
    if lines.last() == Some(&"") {
        lines.pop();
    }
    let header = lines.first().copied().unwrap_or("");
    if header != "name,aptitude" {
        return Err(Error::MalformedHeader(header.to_string()));
    }

    let mut activities = Vec::with_capacity(lines.len().saturating_sub(1));
    for (row, line) in lines.iter().enumerate().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 2 {
            return Err(Error::MalformedRow {
                row,
                fields: fields.len(),
            });
        }
        let aptitude = parse_aptitude(fields[1], row)?;
        activities.push((fields[0].to_string(), aptitude));
    }
    Ok(activities)
}

fn parse_json(input: &str) -> Result<Vec<(String, f64)>> {
    #[derive(Deserialize)]
    struct Row {
        name: String,
        aptitude: f64,
    }

    let rows: Vec<Row> = serde_json::from_str(input).map_err(|e| Error::Json(e.to_string()))?;
    Ok(rows.into_iter().map(|r| (r.name, r.aptitude)).collect())
}

fn parse_aptitude(field: &str, row: usize) -> Result<f64> {
    let invalid = || Error::InvalidAptitudeAt {
        row,
        value: field.to_string(),
    };
    let aptitude: f64 = field.parse().map_err(|_| invalid())?;
    if !(aptitude.is_finite() && aptitude > 0.0) {
        return Err(invalid());
    }
    Ok(aptitude)
}

fn validate_rows(activities: &[(String, f64)]) -> Result<()> {
    if activities.is_empty() {
        return Err(Error::EmptyDocument);
    }
    let mut seen = HashSet::new();
    for (i, (name, aptitude)) in activities.iter().enumerate() {
        let row = i + 1;
        if name.is_empty() {
            return Err(Error::EmptyNameAt { row });
        }
        if !(aptitude.is_finite() && *aptitude > 0.0) {
            return Err(Error::InvalidAptitudeAt {
                row,
                value: format!("{aptitude}"),
            });
        }
        if !seen.insert(name.as_str()) {
            return Err(Error::DuplicateNameAt {
                name: name.clone(),
                row,
            });
        }
    }
    Ok(())
}
