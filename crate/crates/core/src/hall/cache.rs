//! Persistent JSON-lines cache of Hall polynomials.

use std::collections::{BTreeMap, HashMap};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use parking_lot::{Mutex, RwLock};
use serde::{Deserialize, Serialize};

use super::brute::hall_count_table;
use super::HallPoly;
use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Serialize, Deserialize)]
struct Record {
    mu: Partition,
    nu: Partition,
    lambda: Partition,
    poly: String,
    #[serde(rename = "checkedAt", default)]
    checked_at: Vec<u64>,
}

type Key = (Partition, Partition, Partition);

/// Concurrent map (μ, ν, λ) → G^λ_{μν}, optionally backed by a file.
/// Re-inserting an identical value is a no-op; a different value is an error.
pub struct HallCache {
    path: Option<PathBuf>,
    map: RwLock<HashMap<Key, HallPoly>>,
    file: Mutex<Option<File>>,
}

impl HallCache {
    pub fn in_memory() -> Self {
        HallCache { path: None, map: RwLock::new(HashMap::new()), file: Mutex::new(None) }
    }

    /// Loads `path` (creating it if absent) and re-verifies every record
    /// with q^{|λ|} ≤ `verify_guard` against the submodule count at q = 2.
    pub fn open(path: impl AsRef<Path>, verify_guard: u64) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut map: HashMap<Key, HallPoly> = HashMap::new();
        if path.exists() {
            let reader = BufReader::new(File::open(&path)?);
            for (lineno, line) in reader.lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let rec: Record = serde_json::from_str(&line)
                    .map_err(|e| Error::Cache(format!("{}:{}: {e}", path.display(), lineno + 1)))?;
                let poly: HallPoly = rec.poly.parse()?;
                let key = (rec.mu, rec.nu, rec.lambda);
                match map.get(&key) {
                    Some(old) if *old != poly => {
                        return Err(Error::Cache(format!("conflicting entries for {key:?}: {old} vs {poly}")));
                    }
                    _ => {
                        map.insert(key, poly);
                    }
                }
            }
        }
        verify_at_two(&map, verify_guard)?;
        let file = OpenOptions::new().create(true).append(true).open(&path)?;
        Ok(HallCache { path: Some(path), map: RwLock::new(map), file: Mutex::new(Some(file)) })
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn len(&self) -> usize {
        self.map.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, mu: &Partition, nu: &Partition, lambda: &Partition) -> Option<HallPoly> {
        self.map.read().get(&(mu.clone(), nu.clone(), lambda.clone())).cloned()
    }

    pub fn insert(&self, mu: &Partition, nu: &Partition, lambda: &Partition, poly: &HallPoly, checked_at: Vec<u64>) -> Result<()> {
        let key = (mu.clone(), nu.clone(), lambda.clone());
        let mut map = self.map.write();
        if let Some(old) = map.get(&key) {
            if old != poly {
                return Err(Error::Cache(format!("conflicting value for {key:?}: {old} vs {poly}")));
            }
            return Ok(());
        }
        map.insert(key, poly.clone());
        if let Some(file) = self.file.lock().as_mut() {
            let rec = Record { mu: mu.clone(), nu: nu.clone(), lambda: lambda.clone(), poly: poly.to_string(), checked_at };
            writeln!(file, "{}", serde_json::to_string(&rec)?)?;
        }
        Ok(())
    }
}

fn verify_at_two(map: &HashMap<Key, HallPoly>, guard: u64) -> Result<()> {
    let mut by_lambda: BTreeMap<&Partition, Vec<(&Key, &HallPoly)>> = BTreeMap::new();
    for (k, v) in map {
        if k.0.size() + k.1.size() == k.2.size() && (k.2.size() as u32) < 64 && 1u64 << k.2.size() <= guard {
            by_lambda.entry(&k.2).or_default().push((k, v));
        }
    }
    for (lambda, entries) in by_lambda {
        let table = hall_count_table(lambda, 2, guard)?;
        for ((mu, nu, _), poly) in entries {
            let count = table.get(&(mu.clone(), nu.clone())).copied().unwrap_or(0);
            if poly.eval_int(2)? != count as i128 {
                return Err(Error::Cache(format!("G^{lambda}_{{{mu},{nu}}} = {poly} disagrees with count {count} at q = 2")));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn persist_and_conflict() {
        let dir = std::env::temp_dir().join(format!("hallcache-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("c.jsonl");
        let _ = std::fs::remove_file(&path);
        let (a, b): (Partition, Partition) = ("[1]".parse().unwrap(), "[1,1]".parse().unwrap());
        let g: HallPoly = "1 + 1*T^1".parse().unwrap();
        {
            let c = HallCache::open(&path, 1 << 10).unwrap();
            c.insert(&a, &a, &b, &g, vec![2, 3]).unwrap();
            c.insert(&a, &a, &b, &g, vec![]).unwrap();
            assert!(c.insert(&a, &a, &b, &HallPoly::one(), vec![]).is_err());
        }
        let c = HallCache::open(&path, 1 << 10).unwrap();
        assert_eq!(c.get(&a, &a, &b), Some(g));
        std::fs::write(&path, "{\"mu\":[1],\"nu\":[1],\"lambda\":[1,1],\"poly\":\"2 + 1*T^1\",\"checkedAt\":[]}\n").unwrap();
        assert!(HallCache::open(&path, 1 << 10).is_err());
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
