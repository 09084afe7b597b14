//! Small helpers shared by the encoders.

use crate::algebra::{Duple, Term};
use crate::bitset::ConstSet;
use crate::constants::ConstantTable;
use crate::error::Result;
use std::sync::Arc;

pub(crate) struct Enc {
    pub table: Arc<ConstantTable>,
}

impl Enc {
    pub fn new(names: Vec<String>) -> Result<Enc> {
        Ok(Enc { table: ConstantTable::new(names)? })
    }

    pub fn id(&self, name: &str) -> usize {
        self.table.id(name).unwrap_or_else(|| panic!("encoder uses undeclared constant `{name}`"))
    }

    pub fn set<S: AsRef<str>>(&self, names: impl IntoIterator<Item = S>) -> ConstSet {
        names.into_iter().map(|n| self.id(n.as_ref())).collect()
    }

    pub fn term<S: AsRef<str>>(&self, names: impl IntoIterator<Item = S>) -> Term {
        Term::new(self.set(names)).expect("encoder terms are nonempty")
    }

    pub fn le<A: AsRef<str>, B: AsRef<str>>(
        &self,
        lhs: impl IntoIterator<Item = A>,
        rhs: impl IntoIterator<Item = B>,
    ) -> Duple {
        Duple::positive(self.term(lhs), self.term(rhs))
    }

    pub fn nle<A: AsRef<str>, B: AsRef<str>>(
        &self,
        lhs: impl IntoIterator<Item = A>,
        rhs: impl IntoIterator<Item = B>,
    ) -> Duple {
        Duple::negative(self.term(lhs), self.term(rhs))
    }

    /// Both directions of `lhs = rhs`.
    pub fn eq<A: AsRef<str>, B: AsRef<str>>(
        &self,
        lhs: impl IntoIterator<Item = A> + Clone,
        rhs: impl IntoIterator<Item = B> + Clone,
    ) -> [Duple; 2] {
        [self.le(lhs.clone(), rhs.clone()), self.le(rhs, lhs)]
    }
}
