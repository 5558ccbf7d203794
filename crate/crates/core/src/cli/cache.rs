//! On-disk result cache. Entries are keyed by (command kind, n, r) and the
//! crate version; payloads carry a checksum that is re-verified on read, and
//! writes go through a temp file + rename so a complete entry appears or
//! nothing does.

use crate::error::{Error, Result};
use sha2::{Digest, Sha256};
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;

const VERSION: &str = env!("CARGO_PKG_VERSION");
/// Overrides the default cache directory.
pub const CACHE_DIR_ENV: &str = "BRAIDREP_CACHE_DIR";

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CacheKey {
    pub kind: &'static str,
    pub n: u32,
    pub r: u8,
}

impl CacheKey {
    pub fn new(kind: &'static str, n: u32, r: u8) -> Self {
        CacheKey { kind, n, r }
    }

    fn file_name(&self) -> String {
        format!("{}-n{}-r{}.cache", self.kind, self.n, self.r)
    }
}

pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    /// `None` + `no_cache = false` resolves the directory from
    /// `BRAIDREP_CACHE_DIR`, falling back to a per-user directory under the
    /// system temp dir. The directory is created eagerly.
    pub fn new(dir: Option<PathBuf>, no_cache: bool) -> Result<Self> {
        if no_cache {
            return Ok(Cache { dir: None });
        }
        let dir = dir
            .or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from))
            .unwrap_or_else(|| std::env::temp_dir().join("braidrep-cache"));
        fs::create_dir_all(&dir)
            .map_err(|e| Error::Io(format!("cannot create cache dir {}: {e}", dir.display())))?;
        Ok(Cache { dir: Some(dir) })
    }

    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    /// Returns the stored payload when the entry exists, matches the current
    /// crate version, and passes its checksum. Anything else reads as a miss.
    pub fn lookup(&self, key: &CacheKey) -> Option<String> {
        let dir = self.dir.as_ref()?;
        let raw = fs::read_to_string(dir.join(key.file_name())).ok()?;
        let mut lines = raw.splitn(3, '\n');
        let version_line = lines.next()?;
        let sum_line = lines.next()?;
        let payload = lines.next()?;
        if version_line != format!("braidrep-cache v{VERSION}") {
            return None; // older artifact version: recompute
        }
        let sum = sum_line.strip_prefix("sha256 ")?;
        if sum != checksum(payload) {
            return None;
        }
        Some(payload.to_string())
    }

    /// Atomically writes an entry; failures only cost the caching.
    pub fn store(&self, key: &CacheKey, payload: &str) {
        let Some(dir) = self.dir.as_ref() else {
            return;
        };
        let body = format!(
            "braidrep-cache v{VERSION}\nsha256 {}\n{payload}",
            checksum(payload)
        );
        let write = || -> std::io::Result<()> {
            let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
            tmp.write_all(body.as_bytes())?;
            tmp.persist(dir.join(key.file_name()))?;
            Ok(())
        };
        if let Err(e) = write() {
            eprintln!("warning: cache write failed for {}: {e}", key.file_name());
        }
    }

    pub fn warn_corrupt(&self, key: &CacheKey) {
        if self.dir.is_some() {
            eprintln!(
                "warning: corrupt cache entry {}, recomputing",
                key.file_name()
            );
        }
    }
}

fn checksum(payload: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(payload.as_bytes());
    let digest = hasher.finalize();
    let mut hex = String::with_capacity(64);
    for byte in digest {
        let _ = std::fmt::Write::write_fmt(&mut hex, format_args!("{byte:02x}"));
    }
    hex
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_checksum() {
        let tmp = tempfile::tempdir().unwrap();
        let cache = Cache::new(Some(tmp.path().to_path_buf()), false).unwrap();
        let key = CacheKey::new("cycles", 3, 3);
        assert_eq!(cache.lookup(&key), None);
        cache.store(&key, "{\"hello\": 1}\n");
        assert_eq!(cache.lookup(&key).as_deref(), Some("{\"hello\": 1}\n"));
    }

    #[test]
    fn corrupt_entry_is_a_miss() {
        let tmp = tempfile::tempdir().unwrap();
        let cache = Cache::new(Some(tmp.path().to_path_buf()), false).unwrap();
        let key = CacheKey::new("cycles", 3, 2);
        cache.store(&key, "payload\n");
        let path = tmp.path().join(key.file_name());
        let mut body = fs::read_to_string(&path).unwrap();
        body = body.replace("payload", "tampered");
        fs::write(&path, body).unwrap();
        assert_eq!(cache.lookup(&key), None);
    }

    #[test]
    fn version_mismatch_is_a_miss() {
        let tmp = tempfile::tempdir().unwrap();
        let cache = Cache::new(Some(tmp.path().to_path_buf()), false).unwrap();
        let key = CacheKey::new("census", 4, 3);
        let path = tmp.path().join(key.file_name());
        fs::write(
            &path,
            format!("braidrep-cache v0.0.0-old\nsha256 {}\nstale", checksum("stale")),
        )
        .unwrap();
        assert_eq!(cache.lookup(&key), None);
    }

    #[test]
    fn disabled_cache_never_touches_disk() {
        let cache = Cache::disabled();
        let key = CacheKey::new("cycles", 3, 3);
        cache.store(&key, "x");
        assert_eq!(cache.lookup(&key), None);
    }
}
