//! Content-addressed on-disk cache for reduced Groebner bases.
//!
//! The fingerprint hashes the arena, the order descriptor and the canonical
//! generator strings. A hit is re-verified (every generator must reduce to
//! zero against the cached basis) before use; anything corrupt is recomputed
//! and overwritten. Writes are atomic (temp file + rename).

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::arena::Arena;
use crate::gb::{self, GbBudget};
use crate::order::MonomialOrder;
use crate::poly::MPoly;
use crate::Result;

static CACHE_DIR: OnceLock<Option<PathBuf>> = OnceLock::new();

/// Environment variable consulted when no directory was set explicitly.
pub const CACHE_ENV: &str = "DELPEZZO_CACHE_DIR";

/// Configure the cache directory (first call wins). `None` disables caching
/// unless the environment variable is set.
pub fn set_cache_dir(dir: Option<PathBuf>) {
    let _ = CACHE_DIR.set(dir);
}

fn cache_dir() -> Option<PathBuf> {
    CACHE_DIR
        .get_or_init(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
        .clone()
}

/// Stable hash of (arena, generators, order).
pub fn fingerprint(arena: &Arena, gens: &[MPoly], order: &MonomialOrder) -> String {
    let mut hasher = Sha256::new();
    hasher.update(arena.names().join(","));
    hasher.update("|");
    hasher.update(order.descriptor());
    hasher.update("|");
    let mut strings: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    strings.sort();
    for s in strings {
        hasher.update(&s);
        hasher.update(";");
    }
    format!("{:x}", hasher.finalize())
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    arena: Vec<String>,
    order: String,
    basis: Vec<String>,
}

/// Reduced Groebner basis with disk memoization.
pub fn gb_cached(
    arena: &Arena,
    gens: &[MPoly],
    order: &MonomialOrder,
    budget: GbBudget,
) -> Result<Vec<MPoly>> {
    let Some(dir) = cache_dir() else {
        return gb::buchberger_with_budget(gens, order, budget);
    };
    let key = fingerprint(arena, gens, order);
    let path = dir.join(format!("{key}.json"));
    if let Some(basis) = load_verified(&path, arena, gens, order) {
        return Ok(basis);
    }
    let basis = gb::buchberger_with_budget(gens, order, budget)?;
    let _ = store(&dir, &path, arena, order, &basis);
    Ok(basis)
}

fn load_verified(
    path: &Path,
    arena: &Arena,
    gens: &[MPoly],
    order: &MonomialOrder,
) -> Option<Vec<MPoly>> {
    let text = fs::read_to_string(path).ok()?;
    let entry: CacheEntry = serde_json::from_str(&text).ok()?;
    if entry.arena != arena.names() || entry.order != order.descriptor() {
        return None;
    }
    let basis: Option<Vec<MPoly>> = entry
        .basis
        .iter()
        .map(|s| MPoly::parse(arena, s).ok())
        .collect();
    let basis = basis?;
    if basis.is_empty() && gens.iter().any(|g| !g.is_zero()) {
        return None;
    }
    for g in gens {
        let nf = gb::normal_form(g, &basis, order).ok()?;
        if !nf.is_zero() {
            return None;
        }
    }
    Some(basis)
}

fn store(
    dir: &Path,
    path: &Path,
    arena: &Arena,
    order: &MonomialOrder,
    basis: &[MPoly],
) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let entry = CacheEntry {
        arena: arena.names().to_vec(),
        order: order.descriptor(),
        basis: basis.iter().map(|g| g.to_string()).collect(),
    };
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, serde_json::to_string(&entry).unwrap())?;
    fs::rename(&tmp, path)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fingerprint_is_stable_and_input_sensitive() {
        let arena = Arena::from_names(&["x", "y"]);
        let g1 = vec![MPoly::parse(&arena, "x^2-y").unwrap()];
        let g2 = vec![MPoly::parse(&arena, "x^2+y").unwrap()];
        let order = MonomialOrder::grevlex();
        assert_eq!(
            fingerprint(&arena, &g1, &order),
            fingerprint(&arena, &g1, &order)
        );
        assert_ne!(
            fingerprint(&arena, &g1, &order),
            fingerprint(&arena, &g2, &order)
        );
        assert_ne!(
            fingerprint(&arena, &g1, &order),
            fingerprint(&arena, &g1, &MonomialOrder::lex())
        );
    }
}
