//! Optimal division of a finite time budget across competing activities
//! under a logarithmic diminishing-returns law.
//!
//! Each activity converts spent time `t` into result `log(1 + a t)`, where
//! `a` is the activity's aptitude. Maximizing the summed result under a total
//! budget has a water-filling optimum: pour the budget like water over a
//! floor made of the inaptitudes `1/a`, and every activity whose floor stays
//! below the surface receives the water depth above it. Activities whose
//! aptitude falls below the dual threshold get nothing at all.
//!
//! The crate provides:
//!
//! - [`solve_exact`]: closed-form solver via the sorted active-set scan.
//! - [`solve_bisection`]: independent solver bisecting the dual value.
//! - [`verify_kkt`]: optimality certification of arbitrary candidates.
//! - [`brute_force_oracle`]: exhaustive grid search for cross-checking.
//! - [`budget_sweep`]: solution paths and activation breakpoints across a
//!   budget range.
//! - [`parse`], [`report`], [`chart`]: profile files, JSON/table reports,
//!   and an ASCII rendering of the container.
//!
//! The `examples/` directory holds one runnable example per capability; the
//! `waterfill` binary exposes the same operations as subcommands.
//!
//! # Example
//!
//! ```
//! use waterfill::{AptitudeProfile, TimeBudget, solve_exact};
//!
//! let profile = AptitudeProfile::from_pairs([("piano", 2.0), ("math", 1.0)])?;
//! let solution = solve_exact(&profile, TimeBudget::new(1.0)?);
//!
//! assert_eq!(solution.times(), &[0.75, 0.25]);
//! assert_eq!(solution.water_level(), 1.25);
//! # Ok::<(), waterfill::Error>(())
//! ```

mod accum;

pub mod allocation;
pub mod chart;
pub mod cli;
pub mod error;
pub mod kkt;
pub mod oracle;
pub mod parse;
pub mod profile;
pub mod report;
pub mod solver;
pub mod sweep;

pub use allocation::{result_of, total_result, Allocation};
pub use error::{Error, Result};
pub use kkt::{verify_kkt, KktReport};
pub use oracle::{brute_force_oracle, MAX_ORACLE_ACTIVITIES};
pub use profile::{Activity, AptitudeProfile, TimeBudget};
pub use solver::{marginal_value, solve_bisection, solve_exact, WaterLevelSolution};
pub use sweep::{activation_breakpoints, budget_sweep, Breakpoint, SweepCurve};
