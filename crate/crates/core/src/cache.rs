//! On-disk lattice cache, one JSON file per group keyed by the group digest.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::lattice::{Lattice, LatticeOptions};

pub const CACHE_VERSION: u32 = 1;

/// Overrides the default cache directory.
pub const CACHE_DIR_ENV: &str = "MAXCHAIN_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub version: u32,
    pub group_hash: String,
    pub label: String,
    pub order: usize,
    /// Member bitsets over element ordinals, hex encoded.
    pub nodes: Vec<String>,
    pub hasse_edges: Vec<(usize, usize)>,
    pub build_millis: u64,
}

impl CacheEntry {
    pub fn from_lattice(lattice: &Lattice, build_time: Duration) -> Self {
        let group = lattice.group();
        Self {
            version: CACHE_VERSION,
            group_hash: group.digest(),
            label: group.label().to_string(),
            order: group.order(),
            nodes: lattice.nodes().iter().map(|s| s.bits().to_hex()).collect(),
            hasse_edges: lattice.hasse_edges(),
            build_millis: build_time.as_millis() as u64,
        }
    }

    /// Rebuilds the lattice, checking version, group hash and every node.
    pub fn to_lattice(&self, group: Arc<PermGroup>) -> Result<Lattice> {
        if self.version != CACHE_VERSION {
            return Err(Error::CacheVersion {
                found: self.version,
                expected: CACHE_VERSION,
            });
        }
        if self.group_hash != group.digest() || self.order != group.order() {
            return Err(Error::CacheHashMismatch);
        }
        let nodes = self
            .nodes
            .iter()
            .map(|h| {
                Bits::from_hex(group.order(), h)
                    .ok_or_else(|| Error::CacheCorrupt(format!("bad node bitset `{h}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        let lattice = Lattice::from_node_bits(group, nodes)
            .map_err(|e| Error::CacheCorrupt(e.to_string()))?;
        if lattice.hasse_edges() != self.hasse_edges {
            return Err(Error::CacheCorrupt("Hasse edges disagree with nodes".into()));
        }
        Ok(lattice)
    }
}

/// `$MAXCHAIN_CACHE_DIR`, else `$XDG_CACHE_HOME/maxchain`, else
/// `~/.cache/maxchain`.
pub fn default_cache_dir() -> PathBuf {
    if let Some(dir) = std::env::var_os(CACHE_DIR_ENV) {
        return PathBuf::from(dir);
    }
    if let Some(dir) = std::env::var_os("XDG_CACHE_HOME") {
        return PathBuf::from(dir).join("maxchain");
    }
    let home = std::env::var_os("HOME").map_or_else(|| PathBuf::from("."), PathBuf::from);
    home.join(".cache").join("maxchain")
}

pub fn cache_path(dir: &Path, group: &PermGroup) -> PathBuf {
    dir.join(format!("{}.json", group.digest()))
}

pub fn store(dir: &Path, entry: &CacheEntry) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = dir.join(format!("{}.json", entry.group_hash));
    let text = serde_json::to_string(entry).map_err(|e| Error::Io(e.to_string()))?;
    // write then rename so readers never see a partial file
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, text)?;
    fs::rename(&tmp, &path)?;
    Ok(path)
}

pub fn read_entry(path: &Path) -> Result<CacheEntry> {
    let text = fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::CacheCorrupt(e.to_string()))
}

/// The cached lattice for `group`, or `None` when there is no cache file.
pub fn load(dir: &Path, group: Arc<PermGroup>) -> Result<Option<Lattice>> {
    let path = cache_path(dir, &group);
    if !path.exists() {
        return Ok(None);
    }
    read_entry(&path)?.to_lattice(group).map(Some)
}

/// Loads from the cache when possible, otherwise enumerates and stores.
/// An unreadable cache file is replaced.
pub fn cached_lattice(
    dir: &Path,
    group: Arc<PermGroup>,
    options: &LatticeOptions,
) -> Result<Lattice> {
    match load(dir, group.clone()) {
        Ok(Some(lattice)) => return Ok(lattice),
        Ok(None) => {}
        Err(e) => log::warn!("ignoring cache for {}: {e}", group.label()),
    }
    let started = Instant::now();
    let lattice = Lattice::enumerate_with(group, options)?;
    store(dir, &CacheEntry::from_lattice(&lattice, started.elapsed()))?;
    Ok(lattice)
}
