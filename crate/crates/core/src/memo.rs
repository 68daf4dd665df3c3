//! Compute-once-then-publish memo tables.
//!
//! Each key owns a `OnceLock`; the first caller computes the value while later
//! callers for the same key block until it is published. Readers never see a
//! partially built entry. The outer lock is held only to find or insert a cell.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

pub struct Memo<K, V> {
    cells: Mutex<HashMap<K, Arc<OnceLock<V>>>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub fn new() -> Self {
        Self {
            cells: Mutex::new(HashMap::new()),
        }
    }

    fn cell(&self, key: &K) -> Arc<OnceLock<V>> {
        let mut map = self.cells.lock().unwrap_or_else(|e| e.into_inner());
        map.entry(key.clone())
            .or_insert_with(|| Arc::new(OnceLock::new()))
            .clone()
    }

    pub fn get_or_compute(&self, key: &K, f: impl FnOnce() -> V) -> V {
        self.cell(key).get_or_init(f).clone()
    }

    pub fn get(&self, key: &K) -> Option<V> {
        let map = self.cells.lock().unwrap_or_else(|e| e.into_inner());
        map.get(key).and_then(|c| c.get().cloned())
    }

    /// Publish a precomputed value; ignored if the key is already set.
    pub fn seed(&self, key: K, value: V) {
        let _ = self.cell(&key).set(value);
    }

    /// All published entries.
    pub fn snapshot(&self) -> Vec<(K, V)> {
        let map = self.cells.lock().unwrap_or_else(|e| e.into_inner());
        map.iter()
            .filter_map(|(k, c)| c.get().map(|v| (k.clone(), v.clone())))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.snapshot().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl<K: Eq + Hash + Clone, V: Clone> Default for Memo<K, V> {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::atomic::{AtomicUsize, Ordering};

    #[test]
    fn computes_once_under_contention() {
        let memo: Memo<u32, u64> = Memo::new();
        let calls = AtomicUsize::new(0);
        std::thread::scope(|s| {
            for _ in 0..8 {
                s.spawn(|| {
                    let v = memo.get_or_compute(&7, || {
                        calls.fetch_add(1, Ordering::SeqCst);
                        std::thread::sleep(std::time::Duration::from_millis(10));
                        49
                    });
                    assert_eq!(v, 49);
                });
            }
        });
        assert_eq!(calls.load(Ordering::SeqCst), 1);
        assert_eq!(memo.get(&7), Some(49));
        memo.seed(7, 0);
        assert_eq!(memo.get(&7), Some(49));
    }
}
