//! Compute-once memo tables shared between threads.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

/// A map whose values are computed at most once per key, even under
/// concurrent lookups: racing callers for the same key block on one
/// initializer and all observe its result.
pub struct Memo<K, V> {
    slots: Mutex<HashMap<K, Arc<OnceLock<V>>>>,
}

impl<K, V> Default for Memo<K, V> {
    fn default() -> Self {
        Self {
            slots: Mutex::new(HashMap::new()),
        }
    }
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the cached value for `key`, computing it with `init` on first
    /// use. `init` may itself consult the memo for other keys.
    pub fn get_or_compute(&self, key: &K, init: impl FnOnce() -> V) -> V {
        let slot = {
            let mut slots = self.slots.lock().unwrap();
            match slots.get(key) {
                Some(s) => {
                    if let Some(v) = s.get() {
                        return v.clone();
                    }
                    s.clone()
                }
                None => {
                    let s = Arc::new(OnceLock::new());
                    slots.insert(key.clone(), s.clone());
                    s
                }
            }
        };
        slot.get_or_init(init).clone()
    }

    pub fn len(&self) -> usize {
        self.slots.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::atomic::{AtomicUsize, Ordering};

    #[test]
    fn computes_once_under_contention() {
        let memo: Memo<u32, Arc<Vec<u32>>> = Memo::new();
        let calls = AtomicUsize::new(0);
        let results: Vec<Arc<Vec<u32>>> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..8)
                .map(|_| {
                    s.spawn(|| {
                        memo.get_or_compute(&7, || {
                            calls.fetch_add(1, Ordering::SeqCst);
                            std::thread::sleep(std::time::Duration::from_millis(20));
                            Arc::new(vec![1, 2, 3])
                        })
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        assert_eq!(calls.load(Ordering::SeqCst), 1);
        for r in &results {
            assert!(Arc::ptr_eq(r, &results[0]));
        }
    }
}
