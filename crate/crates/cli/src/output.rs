//! Deterministic output writing: fixed 17-significant-digit float
//! formatting for CSV, canonical JSON, and per-run manifests with content
//! fingerprints.

use crate::config::fnv64;
use crate::exit::CliResult;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

/// 17 significant digits round-trips every f64 and keeps reruns
/// byte-identical.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub struct OutDir {
    root: PathBuf,
    written: Vec<(String, u64)>,
}

impl OutDir {
    pub fn new(root: &Path) -> CliResult<Self> {
        std::fs::create_dir_all(root)?;
        Ok(OutDir { root: root.to_path_buf(), written: Vec::new() })
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn write(&mut self, name: &str, content: &str) -> CliResult<()> {
        let path = self.root.join(name);
        std::fs::write(&path, content)?;
        self.written.push((name.to_string(), fnv64(content.as_bytes())));
        Ok(())
    }

    pub fn write_json(&mut self, name: &str, value: &impl Serialize) -> CliResult<()> {
        let mut text = serde_json::to_string_pretty(value).expect("serializable");
        text.push('\n');
        self.write(name, &text)
    }

    /// Writes the run manifest and returns its path.
    pub fn finish(
        mut self,
        command: &str,
        config_canonical: &str,
        convention: &str,
    ) -> CliResult<PathBuf> {
        let manifest = RunManifest {
            command: command.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            convention: convention.to_string(),
            config: serde_json::from_str(config_canonical).expect("canonical config"),
            config_hash: format!("fnv64:{:016x}", fnv64(config_canonical.as_bytes())),
            outputs: self
                .written
                .iter()
                .map(|(name, hash)| OutputRecord {
                    path: name.clone(),
                    fnv64: format!("{hash:016x}"),
                })
                .collect(),
        };
        let mut text = serde_json::to_string_pretty(&manifest).expect("manifest");
        text.push('\n');
        let path = self.root.join("run.json");
        std::fs::write(&path, &text)?;
        self.written.clear();
        Ok(path)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct RunManifest {
    pub command: String,
    pub version: String,
    pub convention: String,
    pub config: serde_json::Value,
    pub config_hash: String,
    pub outputs: Vec<OutputRecord>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct OutputRecord {
    pub path: String,
    pub fnv64: String,
}

/// CSV accumulation with the fixed float format.
pub struct Csv {
    text: String,
}

impl Csv {
    pub fn new(header: &str) -> Self {
        let mut text = String::new();
        text.push_str(header);
        text.push('\n');
        Csv { text }
    }

    pub fn row(&mut self, cells: &[CsvCell]) {
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                self.text.push(',');
            }
            match cell {
                CsvCell::Int(v) => {
                    let _ = write!(self.text, "{v}");
                }
                CsvCell::Float(v) => self.text.push_str(&fmt_f64(*v)),
                CsvCell::Str(s) => self.text.push_str(s),
            }
        }
        self.text.push('\n');
    }

    pub fn into_string(self) -> String {
        self.text
    }
}

pub enum CsvCell<'a> {
    Int(i64),
    Float(f64),
    #[allow(dead_code)]
    Str(&'a str),
}
