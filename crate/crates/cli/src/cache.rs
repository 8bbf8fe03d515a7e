//! On-disk cache of canonical-basis matrices, keyed by a hash of
//! `(e, n, convention)`.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use bihook::fock::{self, Convention, DecompositionMatrix};
use bihook::QuantumCharacteristic;
use sha2::{Digest, Sha256};

pub fn key(e: u32, n: u32, conv: Convention) -> String {
    hex::encode(Sha256::digest(format!("({e},{n},{conv})").as_bytes()))
}

fn path(dir: &Path, e: u32, n: u32, conv: Convention) -> PathBuf {
    dir.join(format!("{}.json", key(e, n, conv)))
}

/// The matrix for level `n`, read from `dir` when present and written there
/// after computing otherwise. Unreadable or mismatched entries are recomputed.
pub fn canonical_basis(dir: Option<&Path>, e: u32, n: u32, conv: Convention) -> Result<DecompositionMatrix> {
    let qe = QuantumCharacteristic::new(e)?;
    let Some(dir) = dir else {
        return Ok(fock::canonical_basis(n, qe, conv)?);
    };
    let file = path(dir, e, n, conv);
    if let Ok(text) = fs::read_to_string(&file) {
        if let Ok(m) = serde_json::from_str::<DecompositionMatrix>(&text) {
            if m.e == e && m.n == n && m.convention == conv {
                return Ok(m);
            }
        }
    }
    let m = fock::canonical_basis(n, qe, conv)?;
    fs::create_dir_all(dir).with_context(|| format!("creating cache directory {}", dir.display()))?;
    let tmp = file.with_extension("tmp");
    fs::write(&tmp, serde_json::to_string(&m)?).with_context(|| format!("writing {}", tmp.display()))?;
    fs::rename(&tmp, &file).with_context(|| format!("writing {}", file.display()))?;
    Ok(m)
}
