//! On-disk memo of graded bases under `NICHOLS_CACHE_DIR`.
//!
//! Entries are keyed by the braided pair and stamped with a fingerprint of the
//! running executable, so a rebuilt binary never reads stale data.

use std::collections::hash_map::DefaultHasher;
use std::fs;
use std::hash::{Hash, Hasher};
use std::path::PathBuf;

use nichols::bpair::BraidedPair;
use nichols::io;
use nichols::nichols::GradedComputation;
use serde::{Deserialize, Serialize};

const FORMAT: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Entry {
    format: u32,
    fingerprint: String,
    pair: String,
    levels: Vec<Vec<Vec<(u64, String)>>>,
}

fn hash_hex(bytes: &[u8]) -> String {
    let mut h = DefaultHasher::new();
    bytes.hash(&mut h);
    format!("{:016x}", h.finish())
}

fn fingerprint() -> Option<String> {
    let exe = std::env::current_exe().ok()?;
    let bytes = fs::read(exe).ok()?;
    Some(format!("{}-{}", env!("CARGO_PKG_VERSION"), hash_hex(&bytes)))
}

fn path_for(pair: &str) -> Option<PathBuf> {
    let dir = std::env::var_os("NICHOLS_CACHE_DIR")?;
    Some(PathBuf::from(dir).join(format!("graded-{}.json", hash_hex(pair.as_bytes()))))
}

fn try_load(bp: &BraidedPair) -> Option<GradedComputation> {
    let pair = io::format_braided_pair(bp);
    let text = fs::read_to_string(path_for(&pair)?).ok()?;
    let entry: Entry = serde_json::from_str(&text).ok()?;
    if entry.format != FORMAT || entry.pair != pair || Some(entry.fingerprint) != fingerprint() {
        return None;
    }
    let levels = entry
        .levels
        .into_iter()
        .map(|level| {
            level
                .into_iter()
                .map(|v| v.into_iter().map(|(i, c)| io::parse_scalar(&c, 1).ok().map(|c| (i, c))).collect())
                .collect::<Option<Vec<_>>>()
        })
        .collect::<Option<Vec<_>>>()?;
    GradedComputation::from_levels(bp.clone(), levels).ok()
}

/// A cached computation for `bp` if one is valid, otherwise a fresh one.
pub fn load(bp: &BraidedPair) -> GradedComputation {
    try_load(bp).unwrap_or_else(|| GradedComputation::new(bp.clone()))
}

/// Best effort; failures to write are ignored.
pub fn store(gc: &GradedComputation) {
    let pair = io::format_braided_pair(gc.bp());
    let (Some(path), Some(fingerprint)) = (path_for(&pair), fingerprint()) else {
        return;
    };
    let levels = gc
        .levels()
        .iter()
        .map(|level| level.iter().map(|v| v.iter().map(|(i, c)| (*i, c.to_string())).collect()).collect())
        .collect();
    let entry = Entry { format: FORMAT, fingerprint, pair, levels };
    if let Ok(text) = serde_json::to_string(&entry) {
        if let Some(dir) = path.parent() {
            let _ = fs::create_dir_all(dir);
        }
        let tmp = path.with_extension("tmp");
        if fs::write(&tmp, text).is_ok() {
            let _ = fs::rename(tmp, path);
        }
    }
}
