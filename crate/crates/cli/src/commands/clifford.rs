//! `clifford-selfcheck`: runs the algebra suites and reports the first
//! counterexample on failure.

use crate::config;
use crate::exit::{CliError, CliResult};
use crate::output::OutDir;
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct CliffordConfig {
    pub dim: u32,
}

pub fn run(cfg_path: Option<&Path>, sets: &[String], out: &Path) -> CliResult<()> {
    let cfg: CliffordConfig = config::load(cfg_path, sets)?;
    if cfg.dim < 1 || cfg.dim > 8 {
        return Err(CliError::usage(format!(
            "clifford-selfcheck needs 1 <= dim <= 8, got {}",
            cfg.dim
        )));
    }
    let report = subdirac::clifford::selfcheck::run(cfg.dim);
    let mut dir = OutDir::new(out)?;
    dir.write_json("selfcheck.json", &report)?;
    let canonical = config::canonical(&cfg);
    dir.finish("clifford-selfcheck", &canonical, "exact-negative-definite")?;

    for suite in &report.suites {
        println!(
            "suite {:<16} {:>5} cases  {}",
            suite.name,
            suite.cases,
            if suite.passed { "ok" } else { "FAILED" }
        );
    }
    if report.passed {
        println!("clifford-selfcheck dim {}: all {} suites passed", cfg.dim, report.suites.len());
        Ok(())
    } else {
        let failing = report.suites.iter().find(|s| !s.passed).unwrap();
        Err(CliError::numerical(format!(
            "suite `{}` failed: {}",
            failing.name,
            failing.detail.as_deref().unwrap_or("no detail")
        )))
    }
}
