pub mod clifford;
pub mod curve;
pub mod mkdv;
pub mod report;
pub mod surface;

use crate::exit::{CliError, CliResult};
use subdirac::spectral::Sector;

pub fn parse_sector(s: &str) -> CliResult<Sector> {
    s.parse::<Sector>().map_err(CliError::usage)
}
