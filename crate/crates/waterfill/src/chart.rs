//! ASCII rendering of the water-filling container.
//!
//! One column per activity in input order. The solid region at the bottom of
//! a column is the activity's floor (height proportional to its inaptitude),
//! the `=` line is the shared water level, and active columns are filled
//! with water between floor and line. Inactive floors emerge above the line.
//!
//! ```text
//!                     = water level
//!   ~~~~
//!   ~~~~        ####
//!   ~~~~  ~~~~  ####
//!   ####  ~~~~  ####
//!   ####  ####  ####
//! ```

use crate::error::{Error, Result};
use crate::profile::AptitudeProfile;
use crate::report::format_sig;
use crate::solver::WaterLevelSolution;

pub const MIN_WIDTH: usize = 20;
pub const MIN_HEIGHT: usize = 10;

const FLOOR: char = '#';
const WATER: char = '~';
const LINE: char = '=';
const GAP: char = ' ';

/// Renders the container for a solved allocation as `height` grid rows plus
/// a footer of activity names. The vertical scale is linear from zero to the
/// larger of the water level and the tallest floor, plus 10% headroom.
///
/// Output is deterministic for fixed inputs and dimensions. Columns that do
/// not fit inside `width` are clipped.
pub fn render_chart(
    profile: &AptitudeProfile,
    solution: &WaterLevelSolution,
    width: usize,
    height: usize,
) -> Result<String> {
    if width < MIN_WIDTH || height < MIN_HEIGHT {
        return Err(Error::ChartTooSmall {
            width,
            height,
            min_width: MIN_WIDTH,
            min_height: MIN_HEIGHT,
        });
    }
    if solution.times().len() != profile.len() {
        return Err(Error::LengthMismatch {
            expected: profile.len(),
            actual: solution.times().len(),
        });
    }

    let n = profile.len();
    let top = solution.water_level().max(profile.max_inaptitude()) * 1.1;
    let cell = top / height as f64;
    let water_row = ((solution.water_level() / cell).floor() as usize).min(height - 1);
    let floor_rows: Vec<usize> = profile
        .iter()
        .map(|a| (a.inaptitude() / cell).round() as usize)
        .collect();

    // equal-width column groups separated by one-space gutters
    let group_width = (width.saturating_sub(n - 1) / n).max(1);
    let stride = group_width + 1;

    let glyph_at = |x: usize, row: usize| -> char {
        let group = x / stride;
        let in_gutter = x % stride == group_width || group >= n;
        if in_gutter {
            return if row == water_row { LINE } else { GAP };
        }
        if row < floor_rows[group] {
            FLOOR
        } else if row == water_row {
            LINE
        } else if solution.active()[group] && row < water_row {
            WATER
        } else {
            GAP
        }
    };

    let mut lines = Vec::with_capacity(height + 1);
    for row in (0..height).rev() {
        let mut line: String = (0..width).map(|x| glyph_at(x, row)).collect();
        line.truncate(line.trim_end().len());
        if row == water_row {
            line.push_str(" water level = ");
            line.push_str(&format_sig(solution.water_level(), 12));
        }
        lines.push(line);
    }

    let mut footer = String::with_capacity(width);
    for (i, activity) in profile.iter().enumerate() {
        let start = i * stride;
        if start >= width {
            break;
        }
        let name: String = activity.name().chars().take(group_width).collect();
        let pad = (group_width - name.chars().count()) / 2;
        while footer.chars().count() < start + pad {
            footer.push(GAP);
        }
        footer.push_str(&name);
    }
    lines.push(footer);

    Ok(lines.join("\n"))
}
