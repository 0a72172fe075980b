//! On-disk persistence for the plethysm memo tables.
//!
//! The cache file is a single JSON document mapping stable operation keys
//! (`p3[h2]`, `s2,1[h3]`) to serialized symmetric functions. Corrupt files,
//! unknown keys, and shape-inconsistent entries are skipped rather than
//! trusted; writes go through a temp file and an atomic rename.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::partitions::Partition;
use crate::symfunc::{pleth_cache_preload, pleth_cache_snapshot, PlethKey, SymFunc};
use crate::SCHEMA;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CacheDocument {
    pub schema: String,
    pub entries: BTreeMap<String, SymFunc>,
}

impl CacheDocument {
    /// Captures the current in-process plethysm memo tables.
    pub fn snapshot() -> Self {
        let entries = pleth_cache_snapshot()
            .into_iter()
            .map(|(key, f)| (key_to_string(&key), f))
            .collect();
        CacheDocument {
            schema: SCHEMA.to_string(),
            entries,
        }
    }

    /// Feeds entries into the in-process memo tables, skipping anything with
    /// an unknown key or a shape that fails the sanity checks. Returns the
    /// number of entries accepted.
    pub fn preload(&self) -> usize {
        let mut accepted = 0;
        for (key, f) in &self.entries {
            if let Some(parsed) = key_from_string(key) {
                if pleth_cache_preload(parsed, f.clone()) {
                    accepted += 1;
                }
            }
        }
        accepted
    }
}

fn key_to_string(key: &PlethKey) -> String {
    match key {
        PlethKey::PowerH { n, j } => format!("p{n}[h{j}]"),
        PlethKey::SchurH { lambda, j } => {
            let parts: Vec<String> = lambda.parts().iter().map(u32::to_string).collect();
            let body = if parts.is_empty() {
                "0".to_string()
            } else {
                parts.join(",")
            };
            format!("s{body}[h{j}]")
        }
    }
}

fn key_from_string(key: &str) -> Option<PlethKey> {
    let rest = key.strip_suffix(']')?;
    let (head, j) = rest.rsplit_once("[h")?;
    let j: u32 = j.parse().ok()?;
    if let Some(n) = head.strip_prefix('p') {
        let n: u32 = n.parse().ok()?;
        Some(PlethKey::PowerH { n, j })
    } else if let Some(body) = head.strip_prefix('s') {
        let lambda: Partition = body.parse().ok()?;
        Some(PlethKey::SchurH { lambda, j })
    } else {
        None
    }
}

/// Decodes a cache document from raw bytes, checking the schema tag.
pub fn parse(bytes: &[u8]) -> Result<CacheDocument, Error> {
    let doc: CacheDocument =
        serde_json::from_slice(bytes).map_err(|e| Error::Cache(e.to_string()))?;
    if doc.schema != SCHEMA {
        return Err(Error::Cache(format!(
            "unsupported schema {:?} (expected {SCHEMA:?})",
            doc.schema
        )));
    }
    Ok(doc)
}

pub fn load(path: &Path) -> Result<CacheDocument, Error> {
    let bytes = fs::read(path).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
    parse(&bytes)
}

/// Serializes and writes atomically: temp file in the same directory, then
/// rename over the target.
pub fn save(path: &Path, doc: &CacheDocument) -> std::io::Result<()> {
    let json = serde_json::to_string(doc).expect("cache document serializes");
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    {
        let mut file = fs::File::create(&tmp)?;
        file.write_all(json.as_bytes())?;
        file.write_all(b"\n")?;
        file.sync_all()?;
    }
    fs::rename(&tmp, path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::SymFunc as SF;

    #[test]
    fn key_strings_round_trip() {
        let keys = [
            PlethKey::PowerH { n: 3, j: 2 },
            PlethKey::SchurH {
                lambda: Partition::new(vec![2, 1]).unwrap(),
                j: 3,
            },
            PlethKey::SchurH {
                lambda: Partition::empty(),
                j: 1,
            },
        ];
        for key in keys {
            let s = key_to_string(&key);
            assert_eq!(key_from_string(&s), Some(key), "{s}");
        }
        assert_eq!(key_from_string("q2[h2]"), None);
        assert_eq!(key_from_string("p2"), None);
        assert_eq!(key_from_string("p2[hx]"), None);
    }

    #[test]
    fn snapshot_save_load_preload() {
        // Populate the memo tables through a real plethysm.
        let _ = SF::schur(Partition::new(vec![2]).unwrap())
            .plethysm(&SF::homogeneous(Partition::new(vec![2]).unwrap()));
        crate::symfunc::schur_pleth_h(&Partition::new(vec![2]).unwrap(), 2);

        let doc = CacheDocument::snapshot();
        assert!(!doc.entries.is_empty());

        let dir = std::env::temp_dir().join(format!("tensor-decomp-cache-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cache.json");
        save(&path, &doc).unwrap();
        let loaded = load(&path).unwrap();
        assert_eq!(loaded.entries.len(), doc.entries.len());
        assert!(loaded.preload() > 0);
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn corrupt_documents_are_rejected() {
        assert!(parse(b"not json").is_err());
        assert!(parse(br#"{"schema":"other/9","entries":{}}"#).is_err());
        // Unknown keys and malformed entries are skipped, not fatal.
        let doc = parse(
            br#"{"schema":"tensor-decomp/1","entries":{
                "weird": {"basis":"schur","terms":[]},
                "p2[h2]": {"basis":"schur","terms":[]}
            }}"#,
        )
        .unwrap();
        assert_eq!(doc.preload(), 0);
    }
}
