//! Vertex sets over a fixed universe `0..n`, packed into 64-bit words.
//!
//! Percolation spends nearly all of its time counting `|N(v) ∩ active|`,
//! so adjacency rows and active sets share this representation and the
//! count is a word-wise AND plus popcount.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

#[inline]
fn word_count(n: usize) -> usize {
    n.div_ceil(64)
}

impl VertexSet {
    /// Empty set over universe `0..n`.
    pub fn new(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; word_count(n)],
        }
    }

    /// Full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::new(n);
        for w in 0..s.words.len() {
            s.words[w] = u64::MAX;
        }
        if !n.is_multiple_of(64) && !s.words.is_empty() {
            let last = s.words.len() - 1;
            s.words[last] = (1u64 << (n % 64)) - 1;
        }
        s
    }

    pub fn from_slice(n: usize, vertices: &[usize]) -> Self {
        let mut s = Self::new(n);
        for &v in vertices {
            s.insert(v);
        }
        s
    }

    /// Universe size, not the cardinality.
    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.n, "vertex {v} outside universe {}", self.n);
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// `|self ∩ other|`; both sets must share a universe.
    #[inline]
    pub fn intersection_count(&self, other: &VertexSet) -> usize {
        debug_assert_eq!(self.n, other.n);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &VertexSet) -> bool {
        self.intersection_count(other) == 0
    }

    pub fn complement(&self) -> VertexSet {
        let mut out = Self::full(self.n);
        for (a, b) in out.words.iter_mut().zip(&self.words) {
            *a &= !b;
        }
        out
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Ascending iterator over members.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let tz = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(i * 64 + tz)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Lexicographic order on the ascending member list; this is the order
/// the oracle scans seeds in, so "first witness found" and "smallest
/// witness" coincide. Only used when merging scan results, never in the
/// per-seed hot path.
impl Ord for VertexSet {
    fn cmp(&self, other: &VertexSet) -> Ordering {
        debug_assert_eq!(self.n, other.n);
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &VertexSet) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut s = VertexSet::new(100);
        assert!(s.is_empty());
        s.insert(0);
        s.insert(63);
        s.insert(64);
        s.insert(99);
        assert_eq!(s.len(), 4);
        assert_eq!(s.to_vec(), vec![0, 63, 64, 99]);
        assert!(s.contains(64));
        s.remove(64);
        assert!(!s.contains(64));
        assert_eq!(s.first(), Some(0));
    }

    #[test]
    fn full_and_complement() {
        let s = VertexSet::full(70);
        assert_eq!(s.len(), 70);
        let mut t = VertexSet::new(70);
        t.insert(3);
        let c = t.complement();
        assert_eq!(c.len(), 69);
        assert!(!c.contains(3));
    }

    #[test]
    fn intersection_count_across_words() {
        let a = VertexSet::from_slice(130, &[1, 64, 65, 129]);
        let b = VertexSet::from_slice(130, &[64, 129, 2]);
        assert_eq!(a.intersection_count(&b), 2);
    }

    #[test]
    fn lex_order_matches_sorted_lists() {
        let n = 10;
        let cases = [
            (vec![0, 5], vec![1, 2]),
            (vec![1, 2], vec![1, 3]),
            (vec![2, 3, 5], vec![2, 4, 5]),
            (vec![1], vec![1, 2]),
            (vec![0, 9], vec![0, 9]),
        ];
        for (x, y) in cases {
            let a = VertexSet::from_slice(n, &x);
            let b = VertexSet::from_slice(n, &y);
            assert_eq!(a.cmp(&b), x.cmp(&y), "{x:?} vs {y:?}");
        }
    }

    #[test]
    fn serializes_ascending() {
        let s = VertexSet::from_slice(8, &[7, 0, 4]);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[0,4,7]");
    }
}
