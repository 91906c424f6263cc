use std::collections::HashMap;
use std::hash::Hash;

use parking_lot::Mutex;

/// Process-lifetime cache shared between threads.
///
/// The value is computed outside the lock (so recursive lookups cannot
/// deadlock) and inserted under it; concurrent fills of the same key compute
/// identical values, and the first insert wins.
pub(crate) struct Memo<K, V> {
    map: Mutex<Option<HashMap<K, V>>>,
}

impl<K: Eq + Hash, V: Clone> Memo<K, V> {
    pub(crate) const fn new() -> Self {
        Memo {
            map: Mutex::new(None),
        }
    }

    pub(crate) fn get_or_insert_with(&self, key: K, f: impl FnOnce() -> V) -> V {
        if let Some(v) = self.map.lock().as_ref().and_then(|m| m.get(&key)) {
            return v.clone();
        }
        let v = f();
        self.map
            .lock()
            .get_or_insert_with(HashMap::new)
            .entry(key)
            .or_insert(v)
            .clone()
    }

    pub(crate) fn try_get_or_insert_with<E>(
        &self,
        key: K,
        f: impl FnOnce() -> Result<V, E>,
    ) -> Result<V, E> {
        if let Some(v) = self.map.lock().as_ref().and_then(|m| m.get(&key)) {
            return Ok(v.clone());
        }
        let v = f()?;
        Ok(self
            .map
            .lock()
            .get_or_insert_with(HashMap::new)
            .entry(key)
            .or_insert(v)
            .clone())
    }

    /// Overwrite an entry (used when a cached prefix is extended).
    pub(crate) fn insert(&self, key: K, v: V) {
        self.map
            .lock()
            .get_or_insert_with(HashMap::new)
            .insert(key, v);
    }
}
