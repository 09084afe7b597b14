//! Dense bitsets over interned constant ids.

use smallvec::SmallVec;
use std::cmp::Ordering;
use std::fmt;

const WORD: usize = 64;

/// A set of constant ids stored as a little-endian word vector.
///
/// Trailing zero words are always trimmed, so structural equality and
/// hashing coincide with set equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct ConstSet {
    words: SmallVec<[u64; 4]>,
}

impl ConstSet {
    pub fn new() -> Self {
        ConstSet { words: SmallVec::new() }
    }

    /// The set {0, 1, ..., n-1}.
    pub fn full(n: usize) -> Self {
        let mut s = ConstSet::new();
        let whole = n / WORD;
        s.words.resize(whole, u64::MAX);
        let rem = n % WORD;
        if rem > 0 {
            s.words.push((1u64 << rem) - 1);
        }
        s
    }

    pub fn singleton(id: usize) -> Self {
        let mut s = ConstSet::new();
        s.insert(id);
        s
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(ids: I) -> Self {
        let mut s = ConstSet::new();
        for id in ids {
            s.insert(id);
        }
        s
    }

    fn trim(&mut self) {
        while let Some(&0) = self.words.last() {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, id: usize) {
        let w = id / WORD;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1u64 << (id % WORD);
    }

    pub fn remove(&mut self, id: usize) {
        let w = id / WORD;
        if w < self.words.len() {
            self.words[w] &= !(1u64 << (id % WORD));
            self.trim();
        }
    }

    pub fn contains(&self, id: usize) -> bool {
        let w = id / WORD;
        w < self.words.len() && self.words[w] & (1u64 << (id % WORD)) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Smallest element, if any.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// One past the largest element (0 for the empty set).
    pub fn bound(&self) -> usize {
        match self.words.last() {
            None => 0,
            Some(&w) => (self.words.len() - 1) * WORD + (WORD - w.leading_zeros() as usize),
        }
    }

    pub fn union(&self, other: &ConstSet) -> ConstSet {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = long.clone();
        for (a, b) in out.words.iter_mut().zip(short.words.iter()) {
            *a |= *b;
        }
        out
    }

    pub fn union_with(&mut self, other: &ConstSet) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= *b;
        }
    }

    pub fn intersection(&self, other: &ConstSet) -> ConstSet {
        let mut out = ConstSet {
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(a, b)| a & b)
                .collect(),
        };
        out.trim();
        out
    }

    pub fn difference(&self, other: &ConstSet) -> ConstSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn difference_with(&mut self, other: &ConstSet) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !*b;
        }
        self.trim();
    }

    pub fn intersects(&self, other: &ConstSet) -> bool {
        self.words.iter().zip(other.words.iter()).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &ConstSet) -> bool {
        self.words.len() <= other.words.len()
            && self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter { words: &self.words, index: 0, current: self.words.first().copied().unwrap_or(0) }
    }

    /// Canonical atom order: by cardinality, then by the sorted id sequence.
    pub fn canonical_cmp(&self, other: &ConstSet) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.lex_cmp(other))
    }

    /// Lexicographic comparison of the ascending id sequences.
    pub fn lex_cmp(&self, other: &ConstSet) -> Ordering {
        let n = self.words.len().max(other.words.len());
        for i in 0..n {
            let a = self.words.get(i).copied().unwrap_or(0);
            let b = other.words.get(i).copied().unwrap_or(0);
            let diff = a ^ b;
            if diff != 0 {
                let pos = i * WORD + diff.trailing_zeros() as usize;
                // The sequence holding the lowest differing id is smaller unless
                // the other sequence stops before that id (then it is a prefix).
                return if a & (1u64 << diff.trailing_zeros()) != 0 {
                    if other.bound() > pos { Ordering::Less } else { Ordering::Greater }
                } else if self.bound() > pos {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for ConstSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for ConstSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ConstSet::from_ids(iter)
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let tz = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + tz);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}
