//! Persistent cache of expensive expansions.
//!
//! One JSON document holds k-Schur functions and Macdonald polynomials in the
//! Schur basis, grouped by `(kind, k, degree)`. A SHA-256 digest of the payload
//! guards against truncated or hand-edited files. Loading only seeds the
//! in-memory memo tables, so a missing cache changes runtime and nothing else.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::Path;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::exactalg::LaurentT;
use crate::kschur::{computed_k_schur, seed_k_schur, Exp};
use crate::macdonald::{computed_h_degrees, seed_h_degree, PolyExp};
use crate::partitions::Partition;
use crate::symfunc::{Basis, SymExpansion};

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache i/o: {0}")]
    Io(#[from] io::Error),
    #[error("corrupt cache: {0}")]
    Corrupt(String),
}

fn corrupt(m: impl Into<String>) -> CacheError {
    CacheError::Corrupt(m.into())
}

fn digest(payload: &Value) -> String {
    let bytes = serde_json::to_vec(payload).expect("JSON values serialize");
    Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Everything currently memoized, as a cache document.
pub fn snapshot() -> Value {
    let mut groups: BTreeMap<(usize, usize), Vec<(Partition, Value)>> = BTreeMap::new();
    for ((k, lam), f) in computed_k_schur() {
        groups.entry((k, lam.degree())).or_default().push((lam, f.to_json()));
    }
    let mut entries: Vec<Value> = groups
        .into_iter()
        .map(|((k, n), mut rows)| {
            rows.sort_by(|a, b| a.0.cmp(&b.0));
            let values: Vec<Value> =
                rows.into_iter().map(|(l, v)| json!({"index": l.parts(), "value": v})).collect();
            json!({"kind": "kschur", "k": k, "degree": n, "values": values})
        })
        .collect();
    let mut hs = computed_h_degrees();
    hs.sort_by_key(|(n, _)| *n);
    for (n, all) in hs {
        let values: Vec<Value> = all
            .iter()
            .map(|(l, h)| json!({"index": l.parts(), "value": h.to_json()}))
            .collect();
        entries.push(json!({"kind": "macdonald-h", "k": null, "degree": n, "values": values}));
    }
    let payload = Value::Array(entries);
    json!({"schema": SCHEMA_VERSION, "digest": digest(&payload), "entries": payload})
}

/// Validate a cache document and seed the memo tables from it. Nothing is
/// seeded unless the whole document is valid.
pub fn load_value(doc: &Value) -> Result<usize, CacheError> {
    if doc["schema"].as_u64() != Some(SCHEMA_VERSION) {
        return Err(corrupt("schema version mismatch"));
    }
    let payload = &doc["entries"];
    if doc["digest"].as_str() != Some(digest(payload).as_str()) {
        return Err(corrupt("digest mismatch"));
    }
    let entries = payload.as_array().ok_or_else(|| corrupt("entries must be a list"))?;
    let mut kschur: Vec<(usize, Partition, Exp)> = Vec::new();
    let mut mach: Vec<(usize, BTreeMap<Partition, PolyExp>)> = Vec::new();
    for e in entries {
        let n = e["degree"].as_u64().ok_or_else(|| corrupt("missing degree"))? as usize;
        let values = e["values"].as_array().ok_or_else(|| corrupt("missing values"))?;
        let mut parsed = Vec::with_capacity(values.len());
        for v in values {
            let parts: Vec<usize> =
                serde_json::from_value(v["index"].clone()).map_err(|e| corrupt(e.to_string()))?;
            let lam = Partition::new(parts).map_err(|e| corrupt(e.to_string()))?;
            if lam.degree() != n {
                return Err(corrupt(format!("{lam:?} filed under degree {n}")));
            }
            parsed.push((lam, &v["value"]));
        }
        match e["kind"].as_str() {
            Some("kschur") => {
                let k = e["k"].as_u64().ok_or_else(|| corrupt("missing k"))? as usize;
                for (lam, v) in parsed {
                    let f: Exp = SymExpansion::from_json(v).map_err(|e| corrupt(e.to_string()))?;
                    if f.basis() != Basis::Schur || f.coeff(&lam) != LaurentT::one() {
                        return Err(corrupt(format!("k-Schur entry {lam:?} is not unitriangular")));
                    }
                    kschur.push((k, lam, f));
                }
            }
            Some("macdonald-h") => {
                let mut all = BTreeMap::new();
                for (lam, v) in parsed {
                    let h: PolyExp = SymExpansion::from_json(v).map_err(|e| corrupt(e.to_string()))?;
                    if h.basis() != Basis::Schur {
                        return Err(corrupt("Macdonald entry not in the Schur basis"));
                    }
                    all.insert(lam, h);
                }
                if all.len() != crate::partitions::partitions_of(n).len() {
                    return Err(corrupt(format!("incomplete Macdonald degree {n}")));
                }
                mach.push((n, all));
            }
            _ => return Err(corrupt("unknown entry kind")),
        }
    }
    let count = kschur.len() + mach.iter().map(|(_, m)| m.len()).sum::<usize>();
    for (k, lam, f) in kschur {
        seed_k_schur(k, lam, f);
    }
    for (n, all) in mach {
        seed_h_degree(n, all);
    }
    Ok(count)
}

/// Load a cache file. A missing file seeds nothing and is not an error.
pub fn load(path: &Path) -> Result<usize, CacheError> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(0),
        Err(e) => return Err(e.into()),
    };
    let doc: Value = serde_json::from_str(&text).map_err(|e| corrupt(e.to_string()))?;
    load_value(&doc)
}

/// Write the current memo contents, replacing the file atomically.
pub fn save(path: &Path) -> Result<(), CacheError> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            fs::create_dir_all(dir)?;
        }
    }
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, serde_json::to_vec(&snapshot()).expect("JSON values serialize"))?;
    fs::rename(&tmp, path)?;
    Ok(())
}
