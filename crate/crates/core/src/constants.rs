//! Interned constant names.

use crate::bitset::ConstSet;
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::sync::Arc;

/// Constant names in lexicographic order; the position of a name is its id.
#[derive(Clone, PartialEq, Eq)]
pub struct ConstantTable {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl std::fmt::Debug for ConstantTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

impl ConstantTable {
    /// Builds a table from arbitrary names; duplicates are rejected.
    pub fn new<I, S>(names: I) -> Result<Arc<ConstantTable>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut names: Vec<String> = names.into_iter().map(Into::into).collect();
        names.sort();
        for pair in names.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::usage(format!("duplicate constant `{}`", pair[0])));
            }
        }
        if let Some(bad) = names.iter().find(|n| !is_valid_name(n)) {
            return Err(Error::usage(format!("invalid constant name `{bad}`")));
        }
        let index = names.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
        Ok(Arc::new(ConstantTable { names, index }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, id: usize) -> &str {
        &self.names[id]
    }

    pub fn id(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.id(name).ok_or_else(|| Error::usage(format!("unknown constant `{name}`")))
    }

    /// Ids of the given names.
    pub fn set_of<'a, I>(&self, names: I) -> Result<ConstSet>
    where
        I: IntoIterator<Item = &'a str>,
    {
        names.into_iter().map(|n| self.require(n)).collect()
    }

    pub fn all(&self) -> ConstSet {
        ConstSet::full(self.len())
    }

    /// Names of the members of `set`, in id order.
    pub fn render(&self, set: &ConstSet) -> Vec<&str> {
        set.iter().map(|i| self.name(i)).collect()
    }
}

/// Identifier grammar shared by every text format.
pub fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}
