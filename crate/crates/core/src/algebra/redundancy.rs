//! Redundancy tests over large atom sets via per-constant posting lists.

use crate::bitset::ConstSet;
use rayon::prelude::*;

/// Inverted index from constant id to the atoms containing it.
pub(crate) struct PostingIndex<'a> {
    atoms: &'a [ConstSet],
    postings: Vec<Vec<u32>>,
}

impl<'a> PostingIndex<'a> {
    /// `atoms` must be pairwise distinct.
    pub(crate) fn new(atoms: &'a [ConstSet]) -> Self {
        let bound = atoms.iter().map(ConstSet::bound).max().unwrap_or(0);
        let mut postings = vec![Vec::new(); bound];
        for (i, a) in atoms.iter().enumerate() {
            for c in a.iter() {
                postings[c].push(i as u32);
            }
        }
        PostingIndex { atoms, postings }
    }

    /// True when `atoms[idx]` equals the union of the atoms strictly inside it.
    /// `covered` lists members already known to be covered.
    pub(crate) fn is_redundant(&self, idx: usize, covered: Option<&ConstSet>) -> bool {
        let x = &self.atoms[idx];
        let mut uncovered = match covered {
            Some(c) => x.difference(c),
            None => x.clone(),
        };
        while !uncovered.is_empty() {
            let e = uncovered
                .iter()
                .min_by_key(|&c| self.postings[c].len())
                .expect("nonempty");
            let mut found = false;
            for &j in &self.postings[e] {
                let j = j as usize;
                if j == idx {
                    continue;
                }
                let y = &self.atoms[j];
                if y.is_subset(x) {
                    uncovered.difference_with(y);
                    found = true;
                }
            }
            if !found {
                return false;
            }
        }
        true
    }
}

/// Sorts, deduplicates and drops every redundant atom.
pub(crate) fn prune_redundant(mut atoms: Vec<ConstSet>) -> Vec<ConstSet> {
    atoms.sort_by(|a, b| a.canonical_cmp(b));
    atoms.dedup();
    let index = PostingIndex::new(&atoms);
    let keep: Vec<bool> = (0..atoms.len())
        .into_par_iter()
        .map(|i| !index.is_redundant(i, None))
        .collect();
    drop(index);
    atoms.into_iter().zip(keep).filter_map(|(a, k)| k.then_some(a)).collect()
}
