//! One canonical JSON config per run, with `--set key=value` dot-path
//! overrides applied before schema validation. Unknown keys are rejected
//! by the typed schemas.

use crate::exit::{CliError, CliResult};
use serde::de::DeserializeOwned;
use serde_json::Value;
use std::path::Path;

/// Loads the config JSON (or starts from `{}`), applies overrides, then
/// validates against the typed schema `T`.
pub fn load<T: DeserializeOwned>(path: Option<&Path>, sets: &[String]) -> CliResult<T> {
    let mut value: Value = match path {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| {
                if e.kind() == std::io::ErrorKind::NotFound {
                    CliError::missing(format!("config {}: {e}", p.display()))
                } else {
                    CliError::from(e)
                }
            })?;
            serde_json::from_str(&text)
                .map_err(|e| CliError::usage(format!("config {}: {e}", p.display())))?
        }
        None => Value::Object(Default::default()),
    };
    for set in sets {
        apply_set(&mut value, set)?;
    }
    serde_json::from_value(value.clone())
        .map_err(|e| CliError::usage(format!("config schema: {e}")))
}

/// The canonical serialized form used for hashing and run records.
pub fn canonical(value: &impl serde::Serialize) -> String {
    serde_json::to_string(value).expect("config serializes")
}

fn apply_set(root: &mut Value, set: &str) -> CliResult<()> {
    let Some((path, raw)) = set.split_once('=') else {
        return Err(CliError::usage(format!("--set needs key=value, got `{set}`")));
    };
    let parsed: Value = serde_json::from_str(raw).unwrap_or(Value::String(raw.to_string()));
    let mut cursor = root;
    let parts: Vec<&str> = path.split('.').collect();
    for (i, part) in parts.iter().enumerate() {
        if !cursor.is_object() {
            return Err(CliError::usage(format!("--set path `{path}` crosses a non-object")));
        }
        let map = cursor.as_object_mut().unwrap();
        if i + 1 == parts.len() {
            map.insert(part.to_string(), parsed);
            return Ok(());
        }
        cursor = map
            .entry(part.to_string())
            .or_insert_with(|| Value::Object(Default::default()));
    }
    Ok(())
}

/// FNV-1a 64-bit hash, used for config and output fingerprints.
pub fn fnv64(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde::Deserialize;

    #[derive(Deserialize)]
    #[serde(deny_unknown_fields)]
    struct Demo {
        dim: u32,
        #[serde(default)]
        label: String,
    }

    #[test]
    fn set_overrides_and_schema() {
        let cfg: Demo = load(None, &["dim=4".into(), "label=abc".into()]).unwrap();
        assert_eq!(cfg.dim, 4);
        assert_eq!(cfg.label, "abc");
        let err = load::<Demo>(None, &["dim=4".into(), "bogus=1".into()]).unwrap_err();
        assert_eq!(err.exit as i32, 64);
    }

    #[test]
    fn fnv_is_stable() {
        assert_eq!(fnv64(b""), 0xcbf29ce484222325);
        assert_eq!(fnv64(b"a"), 0xaf63dc4c8601ec8c);
    }
}
