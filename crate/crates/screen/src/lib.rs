//! IO, file formats, parallel drivers, and the command-line surface for
//! the exact E7(7) screening toolkit in `dirac-core`.

pub mod cli;
pub mod formats;
pub mod output;
pub mod parallel;

/// The dataset shipped with the tool.
pub const BUNDLED_DATASET: &str = include_str!("../data/fs_scattered_e7.json");
