use std::collections::BTreeMap;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::RwLock;

use rug::Float;
use serde::{Deserialize, Serialize};

use super::complex::BigComplex;
use crate::word_algebra::Index;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("cannot access cache file {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("corrupt cache file {path}: {reason}")]
    Corrupt { path: PathBuf, reason: String },
}

/// Which quantity a record holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CacheKind {
    /// `ζ(k)` for an admissible index.
    Zeta,
    /// `ζ_RS(k)`, complex.
    Zrs,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Key {
    kind: CacheKind,
    index: String,
    precision: u32,
    guard: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub kind: CacheKind,
    pub index: String,
    pub precision: u32,
    #[serde(default = "default_guard")]
    pub guard: u32,
    pub value: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub imag: Option<String>,
}

fn default_guard() -> u32 {
    super::DEFAULT_GUARD
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format_version: u32,
    records: Vec<CacheRecord>,
}

/// Persistent memo of zeta-type values, keyed by (kind, index, precision).
///
/// Values are stored as decimal strings long enough to round-trip at the
/// working precision, so a warm cache reproduces cold results bit for bit.
#[derive(Debug, Default)]
pub struct ZetaCache {
    path: Option<PathBuf>,
    records: RwLock<BTreeMap<Key, (String, Option<String>)>>,
    dirty: AtomicBool,
}

impl ZetaCache {
    pub fn in_memory() -> ZetaCache {
        ZetaCache::default()
    }

    /// Load `path` if it exists; a missing file gives an empty cache bound to it.
    pub fn open(path: impl AsRef<Path>) -> Result<ZetaCache, CacheError> {
        let path = path.as_ref().to_path_buf();
        let mut cache = ZetaCache { path: Some(path.clone()), ..Default::default() };
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(cache),
            Err(source) => return Err(CacheError::Io { path, source }),
        };
        let corrupt = |reason: String| CacheError::Corrupt { path: path.clone(), reason };
        let file: CacheFile = serde_json::from_str(&text).map_err(|e| corrupt(e.to_string()))?;
        if file.format_version != FORMAT_VERSION {
            return Err(corrupt(format!("unsupported format_version {}", file.format_version)));
        }
        let mut map = BTreeMap::new();
        for (i, r) in file.records.into_iter().enumerate() {
            validate(&r).map_err(|e| corrupt(format!("record {i}: {e}")))?;
            let key = Key { kind: r.kind, index: r.index, precision: r.precision, guard: r.guard };
            if map.insert(key, (r.value, r.imag)).is_some() {
                return Err(corrupt(format!("record {i}: duplicate key")));
            }
        }
        cache.records = RwLock::new(map);
        Ok(cache)
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn len(&self) -> usize {
        self.records.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn records(&self) -> Vec<CacheRecord> {
        self.records
            .read()
            .unwrap()
            .iter()
            .map(|(k, (v, im))| CacheRecord {
                kind: k.kind,
                index: k.index.clone(),
                precision: k.precision,
                guard: k.guard,
                value: v.clone(),
                imag: im.clone(),
            })
            .collect()
    }

    pub(crate) fn get(&self, kind: CacheKind, index: &Index, precision: u32, guard: u32, bits: u32) -> Option<BigComplex> {
        let key = Key { kind, index: index.to_string(), precision, guard };
        let guard_map = self.records.read().unwrap();
        let (re, im) = guard_map.get(&key)?;
        let re = parse_float(re, bits).ok()?;
        let im = match im {
            Some(s) => parse_float(s, bits).ok()?,
            None => Float::new(bits),
        };
        Some(BigComplex::new(re, im))
    }

    pub(crate) fn put(&self, kind: CacheKind, index: &Index, precision: u32, guard: u32, value: &BigComplex) {
        let key = Key { kind, index: index.to_string(), precision, guard };
        let re = value.re.to_string_radix(10, None);
        let im = match kind {
            CacheKind::Zeta => None,
            CacheKind::Zrs => Some(value.im.to_string_radix(10, None)),
        };
        let mut map = self.records.write().unwrap();
        if let std::collections::btree_map::Entry::Vacant(e) = map.entry(key) {
            e.insert((re, im));
            self.dirty.store(true, Ordering::Release);
        }
    }

    /// Write the cache back to its file (atomically) if anything changed.
    pub fn save(&self) -> Result<(), CacheError> {
        let Some(path) = &self.path else { return Ok(()) };
        if !self.dirty.load(Ordering::Acquire) && path.exists() {
            return Ok(());
        }
        let file = CacheFile { format_version: FORMAT_VERSION, records: self.records() };
        let text = serde_json::to_string_pretty(&file).expect("cache records serialize");
        let io = |source| CacheError::Io { path: path.clone(), source };
        let tmp = path.with_extension("tmp");
        {
            let mut f = fs::File::create(&tmp).map_err(io)?;
            f.write_all(text.as_bytes()).map_err(io)?;
            f.write_all(b"\n").map_err(io)?;
        }
        fs::rename(&tmp, path).map_err(io)?;
        self.dirty.store(false, Ordering::Release);
        Ok(())
    }
}

fn parse_float(s: &str, bits: u32) -> Result<Float, String> {
    Float::parse(s).map(|p| Float::with_val(bits, p)).map_err(|e| format!("bad number {s:?}: {e}"))
}

fn validate(r: &CacheRecord) -> Result<(), String> {
    let k: Index = r.index.parse().map_err(|e| format!("bad index {:?}: {e}", r.index))?;
    if r.kind == CacheKind::Zeta && !k.is_admissible() {
        return Err(format!("zeta record for non-admissible index {k}"));
    }
    if r.precision < super::MIN_DIGITS {
        return Err(format!("precision {} below minimum", r.precision));
    }
    parse_float(&r.value, 64)?;
    match (&r.kind, &r.imag) {
        (CacheKind::Zrs, Some(im)) => {
            parse_float(im, 64)?;
        }
        (CacheKind::Zrs, None) => return Err("zrs record without imaginary part".into()),
        (CacheKind::Zeta, Some(_)) => return Err("zeta record with imaginary part".into()),
        (CacheKind::Zeta, None) => {}
    }
    Ok(())
}
