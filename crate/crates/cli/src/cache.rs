//! On-disk store for symmetric and exterior power characters.
//!
//! Layout: `<root>/v<format>/<type>/<kind>-<degree>.json`, one canonical
//! JSON document per character (sorted keys, compact). The file carries a
//! SHA-256 of its payload; anything that fails to parse or verify is
//! treated as absent and overwritten after recomputation.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use liekoszul_core::charlib::{PowerKey, PowerStore, POWER_FORMAT_VERSION};
use liekoszul_core::Weight;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const CACHE_ENV: &str = "LIEKOSZUL_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct Entry {
    mult: String,
    weight: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct Payload {
    degree: usize,
    format_version: u32,
    kind: String,
    lie_type: String,
    weights: Vec<Entry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct CacheFile {
    checksum: String,
    payload: Payload,
}

fn checksum(p: &Payload) -> String {
    let bytes = serde_json::to_vec(p).expect("payload serializes");
    hex::encode(Sha256::digest(bytes))
}

fn payload_for(key: &PowerKey, weights: &[(Weight, BigInt)]) -> Payload {
    Payload {
        degree: key.degree,
        format_version: POWER_FORMAT_VERSION,
        kind: key.kind.as_str().to_string(),
        lie_type: key.lie_type.to_string(),
        weights: weights
            .iter()
            .map(|(w, m)| Entry {
                mult: m.to_string(),
                weight: w.coords().to_vec(),
            })
            .collect(),
    }
}

#[derive(Clone, Debug)]
pub struct DiskStore {
    root: PathBuf,
}

impl DiskStore {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        DiskStore { root: root.into() }
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn path_for(&self, key: &PowerKey) -> PathBuf {
        self.root
            .join(format!("v{POWER_FORMAT_VERSION}"))
            .join(key.lie_type.to_string())
            .join(format!("{}-{}.json", key.kind.as_str(), key.degree))
    }

    fn read(&self, key: &PowerKey) -> Option<Vec<(Weight, BigInt)>> {
        let text = fs::read(self.path_for(key)).ok()?;
        let file: CacheFile = serde_json::from_slice(&text).ok()?;
        let expect = payload_for(key, &[]);
        let p = &file.payload;
        if checksum(p) != file.checksum
            || p.format_version != expect.format_version
            || p.kind != expect.kind
            || p.lie_type != expect.lie_type
            || p.degree != expect.degree
        {
            return None;
        }
        p.weights
            .iter()
            .map(|e| Some((Weight::new(e.weight.clone()), e.mult.parse().ok()?)))
            .collect()
    }

    fn write(&self, key: &PowerKey, weights: &[(Weight, BigInt)]) -> std::io::Result<()> {
        let path = self.path_for(key);
        let dir = path.parent().expect("cache path has a parent");
        fs::create_dir_all(dir)?;
        let payload = payload_for(key, weights);
        let file = CacheFile {
            checksum: checksum(&payload),
            payload,
        };
        let bytes = serde_json::to_vec(&file)?;
        // write-then-rename so readers never see a torn file
        let tmp = dir.join(format!(
            ".{}.{}.tmp",
            path.file_name().unwrap().to_string_lossy(),
            std::process::id()
        ));
        let mut f = fs::File::create(&tmp)?;
        f.write_all(&bytes)?;
        f.sync_all()?;
        fs::rename(&tmp, &path)
    }
}

impl PowerStore for DiskStore {
    fn load(&self, key: &PowerKey) -> Option<Vec<(Weight, BigInt)>> {
        self.read(key)
    }

    fn save(&self, key: &PowerKey, weights: &[(Weight, BigInt)]) {
        // a cache that cannot be written only costs recomputation
        let _ = self.write(key, weights);
    }
}

/// Cache location: explicit flag, then the environment, then
/// `$HOME/.cache/liekoszul`.
pub fn default_cache_dir(flag: Option<PathBuf>) -> Option<PathBuf> {
    flag.or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("liekoszul")))
}
