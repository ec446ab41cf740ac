//! On-disk memoization of weight multiplicities.
//!
//! Records live in `<dir>/counts.jsonl`, one per line:
//! `{"n":3,"d":3,"k":4,"mu":[1,1],"count":"2"}`.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::counting::Count;
use crate::error::{Error, Result};
use crate::weight::Weight;

pub const CACHE_DIR_ENV: &str = "NARY_CACHE_DIR";
pub const CACHE_FILE: &str = "counts.jsonl";

#[derive(Debug, Serialize, Deserialize)]
struct Record {
    n: usize,
    d: u32,
    k: u32,
    mu: Vec<i64>,
    count: String,
}

type Key = (usize, u32, u32, Vec<i64>);

#[derive(Debug)]
pub struct CountCache {
    path: PathBuf,
    entries: Mutex<HashMap<Key, Count>>,
}

impl CountCache {
    /// Opens (creating if needed) the cache in `dir` and loads existing records.
    pub fn open(dir: impl AsRef<Path>) -> Result<Self> {
        let dir = dir.as_ref();
        fs::create_dir_all(dir)?;
        let path = dir.join(CACHE_FILE);
        let mut entries = HashMap::new();
        if path.exists() {
            for line in BufReader::new(File::open(&path)?).lines() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let rec: Record = serde_json::from_str(&line)?;
                let count: Count = rec.count.parse().map_err(|_| {
                    Error::invalid(format!(
                        "cache count {:?} is not a decimal integer",
                        rec.count
                    ))
                })?;
                entries.insert((rec.n, rec.d, rec.k, rec.mu), count);
            }
        }
        Ok(CountCache {
            path,
            entries: Mutex::new(entries),
        })
    }

    /// The cache named by `NARY_CACHE_DIR`, or `None` when it is unset.
    pub fn from_env() -> Result<Option<Self>> {
        match std::env::var_os(CACHE_DIR_ENV) {
            Some(dir) if !dir.is_empty() => Self::open(dir).map(Some),
            _ => Ok(None),
        }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.entries.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, n: usize, d: u32, k: u32, mu: &Weight) -> Option<Count> {
        self.entries
            .lock()
            .unwrap()
            .get(&(n, d, k, mu.components().to_vec()))
            .cloned()
    }

    pub fn insert(&self, n: usize, d: u32, k: u32, mu: &Weight, count: &Count) -> Result<()> {
        let key = (n, d, k, mu.components().to_vec());
        let mut entries = self.entries.lock().unwrap();
        if entries.contains_key(&key) {
            return Ok(());
        }
        let rec = Record {
            n,
            d,
            k,
            mu: key.3.clone(),
            count: count.to_string(),
        };
        let mut line = serde_json::to_string(&rec)?;
        line.push('\n');
        OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)?
            .write_all(line.as_bytes())?;
        entries.insert(key, count.clone());
        Ok(())
    }
}
