use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Mutex, OnceLock};

/// Process-wide memo table for pure functions.
///
/// The lock is not held while a value is computed, so memoized functions may
/// recurse into themselves. Two threads racing on the same key both compute
/// it; the results are equal and the first insert wins.
pub(crate) struct Memo<K, V> {
    map: OnceLock<Mutex<HashMap<K, V>>>,
}

impl<K: Eq + Hash, V: Clone> Memo<K, V> {
    pub const fn new() -> Self {
        Self {
            map: OnceLock::new(),
        }
    }

    fn map(&self) -> &Mutex<HashMap<K, V>> {
        self.map.get_or_init(Default::default)
    }

    pub fn get_or_compute(&self, key: K, f: impl FnOnce() -> V) -> V {
        if let Some(v) = self.map().lock().unwrap().get(&key) {
            return v.clone();
        }
        let v = f();
        self.map().lock().unwrap().entry(key).or_insert(v).clone()
    }
}
