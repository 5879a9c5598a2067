//! Content-addressed result cache on disk.

use serde::de::DeserializeOwned;
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const CACHE_DIR_ENV: &str = "EDGEREG_CACHE_DIR";

/// Stores one JSON file per key under `<dir>/<first two hex digits>/<hash>.json`.
/// Writes go to a temporary file that is renamed into place.
#[derive(Debug, Clone)]
pub struct ResultCache {
    dir: Option<PathBuf>,
}

impl ResultCache {
    pub fn disabled() -> Self {
        ResultCache { dir: None }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        ResultCache {
            dir: Some(dir.into()),
        }
    }

    /// Hash of the key parts; parts are length-prefixed so no two part lists collide.
    pub fn key(parts: &[&str]) -> String {
        let mut h = Sha256::new();
        for p in parts {
            h.update((p.len() as u64).to_le_bytes());
            h.update(p.as_bytes());
        }
        format!("{:x}", h.finalize())
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.dir
            .as_ref()
            .map(|d| d.join(&key[..2]).join(format!("{key}.json")))
    }

    pub fn get<T: DeserializeOwned>(&self, key: &str) -> Option<T> {
        let text = fs::read_to_string(self.path(key)?).ok()?;
        serde_json::from_str(&text).ok()
    }

    /// Best effort: a failed write leaves the cache unchanged.
    pub fn put<T: Serialize>(&self, key: &str, value: &T) {
        if let Some(path) = self.path(key) {
            let _ = write_atomic(&path, serde_json::to_string(value).expect("serializable").as_bytes());
        }
    }

    pub fn get_or_compute<T, E>(&self, key: &str, compute: impl FnOnce() -> Result<T, E>) -> Result<T, E>
    where
        T: Serialize + DeserializeOwned,
    {
        if let Some(hit) = self.get(key) {
            return Ok(hit);
        }
        let value = compute()?;
        self.put(key, &value);
        Ok(value)
    }
}

pub fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_separate_parts() {
        assert_ne!(ResultCache::key(&["ab", "c"]), ResultCache::key(&["a", "bc"]));
        assert_eq!(ResultCache::key(&["x"]).len(), 64);
    }

    #[test]
    fn roundtrip_and_disabled() {
        let dir = tempfile::tempdir().unwrap();
        let cache = ResultCache::at(dir.path());
        let key = ResultCache::key(&["betti", "Dhc"]);
        assert_eq!(cache.get::<Vec<u32>>(&key), None);
        let v: Result<Vec<u32>, ()> = cache.get_or_compute(&key, || Ok(vec![1, 2]));
        assert_eq!(v.unwrap(), vec![1, 2]);
        let again: Result<Vec<u32>, ()> = cache.get_or_compute(&key, || Err(()));
        assert_eq!(again.unwrap(), vec![1, 2]);
        let off = ResultCache::disabled();
        assert_eq!(off.get::<Vec<u32>>(&key), None);
    }
}
