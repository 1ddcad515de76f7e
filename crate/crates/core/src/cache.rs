//! JSON persistence for built algebras. A cache is only trusted after its
//! checksum matches and the stored tables pass full validation.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::brandt::Brandt;
use crate::error::{NsrError, Result};
use crate::table::{CayleyTable, NearSemiringTable};

pub const CACHE_FORMAT: u64 = 1;

#[derive(Debug, Serialize, Deserialize)]
struct CacheFile {
    format: u64,
    n: usize,
    elements: Vec<String>,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    checksum: String,
}

/// SHA-256 over `n`, the element names and both tables, as lowercase hex.
pub fn checksum(n: usize, names: &[String], add: &CayleyTable, mul: &CayleyTable) -> String {
    let mut hasher = Sha256::new();
    hasher.update((n as u64).to_le_bytes());
    hasher.update((names.len() as u64).to_le_bytes());
    for name in names {
        hasher.update((name.len() as u64).to_le_bytes());
        hasher.update(name.as_bytes());
    }
    for table in [add, mul] {
        for v in table.raw() {
            hasher.update(v.to_le_bytes());
        }
    }
    hasher.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

pub fn to_json(algebra: &NearSemiringTable) -> Result<String> {
    let file = CacheFile {
        format: CACHE_FORMAT,
        n: algebra.n(),
        elements: algebra.names().to_vec(),
        add: algebra.add_table().rows(),
        mul: algebra.mul_table().rows(),
        checksum: checksum(algebra.n(), algebra.names(), algebra.add_table(), algebra.mul_table()),
    };
    Ok(serde_json::to_string(&file)?)
}

pub fn from_json(text: &str) -> Result<NearSemiringTable> {
    let raw: serde_json::Value = serde_json::from_str(text)?;
    let found = raw.get("format").and_then(serde_json::Value::as_u64).unwrap_or(0);
    if found != CACHE_FORMAT {
        return Err(NsrError::CacheVersion {
            found,
            expected: CACHE_FORMAT,
        });
    }
    let file: CacheFile = serde_json::from_value(raw)?;
    let add = CayleyTable::from_rows(&file.add)?;
    let mul = CayleyTable::from_rows(&file.mul)?;
    let computed = checksum(file.n, &file.elements, &add, &mul);
    if computed != file.checksum {
        return Err(NsrError::ChecksumMismatch {
            stored: file.checksum,
            computed,
        });
    }
    NearSemiringTable::from_parts(Brandt::new(file.n)?, &file.elements, add, mul)
}

pub fn save_cache(algebra: &NearSemiringTable, path: &Path) -> Result<()> {
    fs::write(path, to_json(algebra)?)?;
    Ok(())
}

pub fn load_cache(path: &Path) -> Result<NearSemiringTable> {
    from_json(&fs::read_to_string(path)?)
}

/// Loads `path` if it exists and holds `B_n`'s algebra; otherwise builds the
/// algebra and writes it there. A cache for a different `n` is rebuilt.
pub fn load_or_build(n: usize, path: &Path) -> Result<NearSemiringTable> {
    if path.exists() {
        let cached = load_cache(path)?;
        if cached.n() == n {
            return Ok(cached);
        }
    }
    let algebra = crate::generation::build_nsr(n)?;
    save_cache(&algebra, path)?;
    Ok(algebra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generation::build_nsr;

    #[test]
    fn round_trip() {
        let nsr = build_nsr(2).unwrap();
        let back = from_json(&to_json(&nsr).unwrap()).unwrap();
        assert_eq!(back.names(), nsr.names());
        assert_eq!(back.add_table(), nsr.add_table());
        assert_eq!(back.mul_table(), nsr.mul_table());
    }

    #[test]
    fn rejects_tampering() {
        let nsr = build_nsr(2).unwrap();
        let mut v: serde_json::Value = serde_json::from_str(&to_json(&nsr).unwrap()).unwrap();
        v["mul"][3][4] = serde_json::json!(7);
        let text = v.to_string();
        assert!(matches!(from_json(&text), Err(NsrError::ChecksumMismatch { .. })));

        let mut v: serde_json::Value = serde_json::from_str(&to_json(&nsr).unwrap()).unwrap();
        v["format"] = serde_json::json!(2);
        assert!(matches!(
            from_json(&v.to_string()),
            Err(NsrError::CacheVersion { found: 2, expected: 1 })
        ));
    }

    #[test]
    fn consistent_checksum_but_wrong_table_is_rejected() {
        let nsr = build_nsr(2).unwrap();
        let mut v: serde_json::Value = serde_json::from_str(&to_json(&nsr).unwrap()).unwrap();
        let mut rows = nsr.mul_table().rows();
        rows[3][4] = (rows[3][4] + 1) % nsr.size();
        v["mul"] = serde_json::json!(rows);
        let tampered = CayleyTable::from_rows(&rows).unwrap();
        v["checksum"] = serde_json::json!(checksum(2, nsr.names(), nsr.add_table(), &tampered));
        assert!(matches!(from_json(&v.to_string()), Err(NsrError::Invariant(_))));
    }
}
