use crate::error::{Error, Result};
use crate::graph::VertexSet;
use std::cell::Cell;
use std::collections::HashMap;
use std::hash::{BuildHasherDefault, Hasher};

/// Multiplicative word hasher; vertex sets are already well mixed bit patterns.
#[derive(Default, Clone, Copy)]
pub struct WordHasher(u64);

impl Hasher for WordHasher {
    #[inline]
    fn write(&mut self, bytes: &[u8]) {
        for chunk in bytes.chunks(8) {
            let mut buf = [0u8; 8];
            buf[..chunk.len()].copy_from_slice(chunk);
            self.write_u64(u64::from_le_bytes(buf));
        }
    }

    #[inline]
    fn write_u64(&mut self, x: u64) {
        self.0 = (self.0.rotate_left(5) ^ x).wrapping_mul(0x51_7c_c1_b7_27_22_0a_95);
    }

    #[inline]
    fn write_usize(&mut self, x: usize) {
        self.write_u64(x as u64);
    }

    #[inline]
    fn finish(&self) -> u64 {
        self.0
    }
}

pub type FastMap<K, V> = HashMap<K, V, BuildHasherDefault<WordHasher>>;
pub type FastSet<K> = std::collections::HashSet<K, BuildHasherDefault<WordHasher>>;

/// Deduplicated sets in insertion order, each tagged with its first producer.
#[derive(Clone, Debug, Default)]
pub struct SetFamily {
    sets: Vec<VertexSet>,
    tags: Vec<&'static str>,
    index: FastMap<VertexSet, usize>,
}

impl SetFamily {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_sets<I: IntoIterator<Item = VertexSet>>(sets: I, tag: &'static str) -> Self {
        let mut f = SetFamily::new();
        for s in sets {
            f.insert(s, tag);
        }
        f
    }

    pub fn insert(&mut self, s: VertexSet, tag: &'static str) -> bool {
        if self.index.contains_key(&s) {
            return false;
        }
        self.index.insert(s, self.sets.len());
        self.sets.push(s);
        self.tags.push(tag);
        true
    }

    pub fn extend(&mut self, other: &SetFamily) {
        for (s, t) in other.sets.iter().zip(other.tags.iter()) {
            self.insert(*s, t);
        }
    }

    pub fn contains(&self, s: &VertexSet) -> bool {
        self.index.contains_key(s)
    }

    pub fn tag_of(&self, s: &VertexSet) -> Option<&'static str> {
        self.index.get(s).map(|&i| self.tags[i])
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &VertexSet> {
        self.sets.iter()
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn tagged(&self) -> impl Iterator<Item = (&VertexSet, &'static str)> {
        self.sets.iter().zip(self.tags.iter().copied())
    }

    /// Members in canonical order.
    pub fn sorted(&self) -> Vec<VertexSet> {
        let mut v = self.sets.clone();
        v.sort_by_key(|s| s.to_vec());
        v
    }

    pub fn retain(&mut self, mut keep: impl FnMut(&VertexSet) -> bool) {
        let old = std::mem::take(self);
        for (s, t) in old.sets.into_iter().zip(old.tags) {
            if keep(&s) {
                self.insert(s, t);
            }
        }
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = &'a VertexSet;
    type IntoIter = std::slice::Iter<'a, VertexSet>;
    fn into_iter(self) -> Self::IntoIter {
        self.sets.iter()
    }
}

/// Work counter shared by the heavy constructions.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: Cell<u64>,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: Cell::new(0) }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    #[inline]
    pub fn tick(&self, units: u64) -> Result<()> {
        let u = self.used.get().saturating_add(units);
        self.used.set(u);
        if u > self.limit {
            Err(Error::Budget(self.limit))
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::set;

    #[test]
    fn family_deduplicates_and_keeps_first_tag() {
        let mut f = SetFamily::new();
        assert!(f.insert(set(&[1, 2]), "a"));
        assert!(!f.insert(set(&[2, 1]), "b"));
        assert!(f.insert(set(&[3]), "b"));
        assert_eq!(f.len(), 2);
        assert_eq!(f.tag_of(&set(&[1, 2])), Some("a"));
        f.retain(|s| s.len() == 1);
        assert_eq!(f.sets(), &[set(&[3])]);
    }

    #[test]
    fn budget_trips() {
        let b = Budget::new(10);
        assert!(b.tick(10).is_ok());
        assert_eq!(b.tick(1), Err(Error::Budget(10)));
    }
}
