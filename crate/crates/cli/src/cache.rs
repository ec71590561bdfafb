//! On-disk result cache: one JSON object mapping `"n:d"` to the decimal
//! string of `a(n, d)`. Strings rather than numbers because the values
//! leave the 64-bit range at `n = 21`.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use dconsec::ExactInt;

use crate::CliError;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ResultCache {
    entries: BTreeMap<String, String>,
}

fn key(n: u32, d: u32) -> String {
    format!("{n}:{d}")
}

fn parse_key(key: &str) -> Option<(u32, u32)> {
    let (n, d) = key.split_once(':')?;
    Some((n.parse().ok()?, d.parse().ok()?))
}

impl ResultCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Reads `path`; a missing file is an empty cache.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = match fs::read_to_string(path) {
            Ok(text) => text,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Self::new()),
            Err(e) => return Err(CliError::io(path.display().to_string(), e)),
        };
        Self::from_json(&text).map_err(|reason| CliError::Cache {
            path: path.display().to_string(),
            reason,
        })
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        let entries: BTreeMap<String, String> =
            serde_json::from_str(text).map_err(|e| e.to_string())?;
        for (k, v) in &entries {
            if parse_key(k).is_none() {
                return Err(format!("bad key {k:?}"));
            }
            if v.parse::<ExactInt>().is_err() {
                return Err(format!("bad value {v:?} for {k}"));
            }
        }
        Ok(Self { entries })
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.entries).expect("string map serializes");
        text.push('\n');
        text
    }

    pub fn save(&self, path: &Path) -> Result<(), CliError> {
        let tmp: PathBuf = path.with_extension("tmp");
        fs::write(&tmp, self.to_json())
            .and_then(|_| fs::rename(&tmp, path))
            .map_err(|e| CliError::io(path.display().to_string(), e))
    }

    pub fn get(&self, n: u32, d: u32) -> Option<ExactInt> {
        self.entries.get(&key(n, d)).and_then(|v| v.parse().ok())
    }

    pub fn insert(&mut self, n: u32, d: u32, value: &ExactInt) {
        self.entries.insert(key(n, d), value.to_string());
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Cached `(n, d, value)` triples, ordered by key string.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32, ExactInt)> + '_ {
        self.entries.iter().filter_map(|(k, v)| {
            let (n, d) = parse_key(k)?;
            Some((n, d, v.parse().ok()?))
        })
    }
}
