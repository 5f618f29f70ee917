//! Catalog of geometric roots of -1 for n <= 4.

mod case;
mod classify;
mod construct;
mod params;
mod record;
mod sample;
mod scan;
mod solve;
mod sub3;
mod verify;

pub use case::RootCase;
pub use classify::{classify, Classification};
pub use construct::construct;
pub use params::FamilyParams;
pub use record::{records_from_json, records_to_csv, RootRecord};
pub use sample::{draw_params, sample, sample_batch, sample_with, CONDITION_LIMIT, NONZERO_FRACTION, REJECTION_CAP};
pub use scan::{coordinate, nonexistence_scan, slice_scan, ScanReport, GRID_LIMIT};
pub use solve::{random_starts, solve_multistart, solve_numeric, solve_with_system, Solution, SolveOptions};
pub use verify::{root_residual, verify, VerifyReport};
