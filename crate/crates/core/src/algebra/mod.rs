//! Atoms, terms, duples and atomized models.

mod crossing;
mod model;
mod oracle;
mod redundancy;

pub use crossing::{default_budget, freest_model, CrossingOptions, CrossingOrder, BUDGET_ENV, DEFAULT_ATOM_BUDGET};
pub use model::{restrict_atom_set, AtomStatus, AtomizedModel};
pub use oracle::{entails_oracle, ORACLE_MAX_CONSTANTS};

use crate::bitset::ConstSet;
use crate::constants::ConstantTable;
use crate::error::{Error, Result};
use std::cmp::Ordering;

/// An idempotent sum of constants, stored as its constant set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term(ConstSet);

impl Term {
    pub fn new(set: ConstSet) -> Result<Term> {
        if set.is_empty() {
            return Err(Error::usage("a term needs at least one constant"));
        }
        Ok(Term(set))
    }

    pub fn constant(id: usize) -> Term {
        Term(ConstSet::singleton(id))
    }

    pub fn from_names<'a>(table: &ConstantTable, names: impl IntoIterator<Item = &'a str>) -> Result<Term> {
        Term::new(table.set_of(names)?)
    }

    pub fn constants(&self) -> &ConstSet {
        &self.0
    }

    /// The join `self ⊙ other`.
    pub fn join(&self, other: &Term) -> Term {
        Term(self.0.union(&other.0))
    }

    pub fn render(&self, table: &ConstantTable) -> String {
        table.render(&self.0).join(" ")
    }
}

impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.canonical_cmp(&other.0)
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An atom, identified by its upper constant segment.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Atom(ConstSet);

impl Atom {
    pub fn new(segment: ConstSet) -> Result<Atom> {
        if segment.is_empty() {
            return Err(Error::usage("an atom needs a nonempty upper segment"));
        }
        Ok(Atom(segment))
    }

    pub fn from_names<'a>(table: &ConstantTable, names: impl IntoIterator<Item = &'a str>) -> Result<Atom> {
        Atom::new(table.set_of(names)?)
    }

    pub(crate) fn from_set_unchecked(segment: ConstSet) -> Atom {
        debug_assert!(!segment.is_empty());
        Atom(segment)
    }

    pub fn segment(&self) -> &ConstSet {
        &self.0
    }

    pub fn into_segment(self) -> ConstSet {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `{a,b,c}` using the table's names.
    pub fn render(&self, table: &ConstantTable) -> String {
        format!("{{{}}}", table.render(&self.0).join(","))
    }
}

impl Ord for Atom {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.canonical_cmp(&other.0)
    }
}

impl PartialOrd for Atom {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical model spawned by `atoms` over the whole table.
pub fn canonicalize(
    atoms: impl IntoIterator<Item = Atom>,
    table: &std::sync::Arc<ConstantTable>,
) -> Result<AtomizedModel> {
    AtomizedModel::canonicalize(table.clone(), table.all(), atoms)
}

/// Whether `phi` lies below term `t`.
pub fn atom_below(phi: &Atom, t: &Term) -> bool {
    phi.0.intersects(&t.0)
}

/// The atom whose segment is the union of both segments.
pub fn atom_union(a: &Atom, b: &Atom) -> Atom {
    Atom(a.0.union(&b.0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

/// An atomic sentence `lhs ≤ rhs` or its negation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Duple {
    pub lhs: Term,
    pub rhs: Term,
    pub sign: Sign,
}

impl Duple {
    pub fn positive(lhs: Term, rhs: Term) -> Duple {
        Duple { lhs, rhs, sign: Sign::Positive }
    }

    pub fn negative(lhs: Term, rhs: Term) -> Duple {
        Duple { lhs, rhs, sign: Sign::Negative }
    }

    /// Parses `"a b <= c"` style shorthand against a table; `!<=` gives a negative duple.
    pub fn parse(table: &ConstantTable, text: &str) -> Result<Duple> {
        let (lhs, rhs, sign) = if let Some((l, r)) = text.split_once("!<=") {
            (l, r, Sign::Negative)
        } else if let Some((l, r)) = text.split_once("<=") {
            (l, r, Sign::Positive)
        } else {
            return Err(Error::usage(format!("`{text}` is not a duple")));
        };
        let lhs = Term::from_names(table, lhs.split_whitespace())?;
        let rhs = Term::from_names(table, rhs.split_whitespace())?;
        Ok(Duple { lhs, rhs, sign })
    }

    pub fn is_positive(&self) -> bool {
        self.sign == Sign::Positive
    }

    pub fn negated(&self) -> Duple {
        let sign = match self.sign {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        };
        Duple { lhs: self.lhs.clone(), rhs: self.rhs.clone(), sign }
    }

    /// All constants mentioned on either side.
    pub fn constants(&self) -> ConstSet {
        self.lhs.0.union(&self.rhs.0)
    }

    pub fn render(&self, table: &ConstantTable) -> String {
        let op = match self.sign {
            Sign::Positive => "<=",
            Sign::Negative => "!<=",
        };
        format!("{} {} {}", self.lhs.render(table), op, self.rhs.render(table))
    }
}
