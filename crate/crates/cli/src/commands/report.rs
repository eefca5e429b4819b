//! `report`: merges run manifests into one reproducibility record after
//! re-verifying every output fingerprint.

use crate::config::fnv64;
use crate::exit::{CliError, CliResult};
use crate::output::RunManifest;
use std::path::{Path, PathBuf};

pub fn run(dirs: &[PathBuf], out: &Path) -> CliResult<()> {
    if dirs.is_empty() {
        return Err(CliError::usage("report needs at least one run directory"));
    }
    let mut entries = Vec::new();
    for dir in dirs {
        let manifest_path = dir.join("run.json");
        if !manifest_path.exists() {
            return Err(CliError::missing(format!(
                "{} has no run.json",
                dir.display()
            )));
        }
        let text = std::fs::read_to_string(&manifest_path)?;
        let manifest: RunManifest = serde_json::from_str(&text)
            .map_err(|e| CliError::usage(format!("{}: {e}", manifest_path.display())))?;
        for output in &manifest.outputs {
            let path = dir.join(&output.path);
            if !path.exists() {
                return Err(CliError::missing(format!("{} is missing", path.display())));
            }
            let bytes = std::fs::read(&path)?;
            let got = format!("{:016x}", fnv64(&bytes));
            if got != output.fnv64 {
                return Err(CliError::integrity(format!(
                    "{}: fingerprint {} does not match recorded {}",
                    path.display(),
                    got,
                    output.fnv64
                )));
            }
        }
        entries.push(serde_json::json!({
            "dir": dir.display().to_string(),
            "command": manifest.command,
            "version": manifest.version,
            "convention": manifest.convention,
            "config_hash": manifest.config_hash,
            "outputs": manifest.outputs,
        }));
    }
    std::fs::create_dir_all(out)?;
    let record = serde_json::json!({
        "version": env!("CARGO_PKG_VERSION"),
        "entries": entries,
    });
    let mut text = serde_json::to_string_pretty(&record).expect("record");
    text.push('\n');
    std::fs::write(out.join("report.json"), text)?;
    println!("report: merged {} runs, all fingerprints verified", dirs.len());
    Ok(())
}
