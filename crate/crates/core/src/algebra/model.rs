use super::redundancy::prune_redundant;
use super::{Atom, Duple, Sign, Term};
use crate::bitset::ConstSet;
use crate::constants::ConstantTable;
use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

/// Relationship of an atom to a model.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AtomStatus {
    NonRedundant,
    Redundant,
    External,
}

/// A finite atomized semilattice over a universe of constants.
///
/// The atom list is always canonical: no redundant atoms, every constant of
/// the universe covered, sorted by size then by id sequence. Models produced
/// by restriction or grounding share the parent's table and shrink the universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomizedModel {
    table: Arc<ConstantTable>,
    universe: ConstSet,
    atoms: Vec<Atom>,
}

impl AtomizedModel {
    /// The freest model `F_U(∅)`: one singleton atom per constant.
    pub fn free(table: Arc<ConstantTable>, universe: ConstSet) -> Result<AtomizedModel> {
        check_universe(&table, &universe)?;
        let atoms = universe.iter().map(|c| Atom(ConstSet::singleton(c))).collect();
        Ok(AtomizedModel { table, universe, atoms })
    }

    /// Builds the canonical model spawned by `atoms` over `universe`.
    pub fn canonicalize(
        table: Arc<ConstantTable>,
        universe: ConstSet,
        atoms: impl IntoIterator<Item = Atom>,
    ) -> Result<AtomizedModel> {
        check_universe(&table, &universe)?;
        let sets: Vec<ConstSet> = atoms.into_iter().map(Atom::into_segment).collect();
        if let Some(bad) = sets.iter().find(|s| !s.is_subset(&universe)) {
            return Err(Error::usage(format!(
                "atom {bad:?} is not inside the model's universe"
            )));
        }
        Ok(Self::canonical_from_sets(table, universe, sets))
    }

    pub(crate) fn canonical_from_sets(
        table: Arc<ConstantTable>,
        universe: ConstSet,
        mut sets: Vec<ConstSet>,
    ) -> AtomizedModel {
        let mut covered = ConstSet::new();
        for s in &sets {
            covered.union_with(s);
        }
        if covered != universe {
            sets.push(universe.clone());
        }
        let atoms = prune_redundant(sets).into_iter().map(Atom).collect();
        AtomizedModel { table, universe, atoms }
    }

    /// Wraps atoms that are already canonical and sorted.
    pub(crate) fn from_canonical(table: Arc<ConstantTable>, universe: ConstSet, atoms: Vec<Atom>) -> Self {
        debug_assert!(atoms.windows(2).all(|w| w[0] < w[1]));
        AtomizedModel { table, universe, atoms }
    }

    pub fn table(&self) -> &Arc<ConstantTable> {
        &self.table
    }

    pub fn universe(&self) -> &ConstSet {
        &self.universe
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// `⊖` of this model's universe.
    pub fn theta(&self) -> Atom {
        Atom(self.universe.clone())
    }

    pub fn contains_atom(&self, phi: &Atom) -> bool {
        self.atoms.binary_search(phi).is_ok()
    }

    /// Atoms below `t`.
    pub fn lower_segment(&self, t: &Term) -> Vec<&Atom> {
        self.atoms.iter().filter(|a| super::atom_below(a, t)).collect()
    }

    /// Atoms below the left side and not below the right side (sign ignored).
    pub fn discriminant(&self, d: &Duple) -> Vec<&Atom> {
        self.atoms.iter().filter(|a| discriminates(a, d)).collect()
    }

    pub fn holds(&self, d: &Duple) -> bool {
        let dis = self.atoms.iter().any(|a| discriminates(a, d));
        match d.sign {
            Sign::Positive => !dis,
            Sign::Negative => dis,
        }
    }

    pub fn is_atom_of(&self, phi: &Atom) -> AtomStatus {
        if self.contains_atom(phi) {
            return AtomStatus::NonRedundant;
        }
        let mut union = ConstSet::new();
        for a in &self.atoms {
            if a.0.is_subset(&phi.0) {
                union.union_with(&a.0);
            }
        }
        if union == phi.0 {
            AtomStatus::Redundant
        } else {
            AtomStatus::External
        }
    }

    /// The subalgebra spawned by `q`.
    pub fn restriction(&self, q: &ConstSet) -> Result<AtomizedModel> {
        self.check_subuniverse(q)?;
        let sets = restrict_sets(self.atoms.iter(), q);
        Ok(Self::canonical_from_sets(self.table.clone(), q.clone(), sets))
    }

    /// The model spawned by atoms whose segments lie inside `k`.
    pub fn grounding(&self, k: &ConstSet) -> Result<AtomizedModel> {
        self.check_subuniverse(k)?;
        let sets: Vec<ConstSet> =
            self.atoms.iter().filter(|a| a.0.is_subset(k)).map(|a| a.0.clone()).collect();
        Ok(Self::canonical_from_sets(self.table.clone(), k.clone(), sets))
    }

    /// `M + N`: canonical union of two atomizations over the same universe.
    pub fn model_sum(&self, other: &AtomizedModel) -> Result<AtomizedModel> {
        if self.table != other.table || self.universe != other.universe {
            return Err(Error::usage("model sum needs identical constant universes"));
        }
        let sets = self.atoms.iter().chain(other.atoms.iter()).map(|a| a.0.clone()).collect();
        Ok(Self::canonical_from_sets(self.table.clone(), self.universe.clone(), sets))
    }

    /// `M ⊕ N` over disjoint universes. Tables that differ are merged by name.
    pub fn direct_sum(&self, other: &AtomizedModel) -> Result<AtomizedModel> {
        if Arc::ptr_eq(&self.table, &other.table) || self.table == other.table {
            if self.universe.intersects(&other.universe) {
                return Err(Error::usage("direct sum needs disjoint constant universes"));
            }
            let universe = self.universe.union(&other.universe);
            let sets = self.atoms.iter().chain(other.atoms.iter()).map(|a| a.0.clone()).collect();
            return Ok(Self::canonical_from_sets(self.table.clone(), universe, sets));
        }
        let mine: BTreeSet<&str> = self.table.render(&self.universe).into_iter().collect();
        let theirs: BTreeSet<&str> = other.table.render(&other.universe).into_iter().collect();
        if let Some(shared) = mine.intersection(&theirs).next() {
            return Err(Error::usage(format!("direct sum: constant `{shared}` is in both models")));
        }
        let table = ConstantTable::new(mine.iter().chain(theirs.iter()).copied())?;
        let remap = |m: &AtomizedModel, set: &ConstSet| -> ConstSet {
            set.iter().map(|i| table.id(m.table.name(i)).expect("merged")).collect()
        };
        let universe = table.all();
        let sets = self
            .atoms
            .iter()
            .map(|a| remap(self, &a.0))
            .chain(other.atoms.iter().map(|a| remap(other, &a.0)))
            .collect();
        Ok(Self::canonical_from_sets(table.clone(), universe, sets))
    }

    /// `M ⊑ N`: every atom of `self` is an atom (redundant or not) of `other`.
    /// `self`'s own `⊖` is exempt.
    pub fn is_subset_model(&self, other: &AtomizedModel) -> bool {
        self.atoms
            .iter()
            .filter(|a| a.0 != self.universe)
            .all(|a| other.is_atom_of(a) != AtomStatus::External)
    }

    /// `M ⊏ N`: the canonical atoms of `self` are canonical atoms of `other`,
    /// with `self`'s `⊖` exempt.
    pub fn is_tight_subset(&self, other: &AtomizedModel) -> bool {
        self.atoms.iter().filter(|a| a.0 != self.universe).all(|a| other.contains_atom(a))
    }

    /// Histogram of canonical atom sizes.
    pub fn spectrum(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for a in &self.atoms {
            *out.entry(a.len()).or_insert(0) += 1;
        }
        out
    }

    fn check_subuniverse(&self, q: &ConstSet) -> Result<()> {
        if q.is_empty() {
            return Err(Error::usage("empty constant subset"));
        }
        if !q.is_subset(&self.universe) {
            return Err(Error::usage("constant subset is not inside the model's universe"));
        }
        Ok(())
    }
}

pub(crate) fn discriminates(a: &Atom, d: &Duple) -> bool {
    a.0.intersects(&d.lhs.0) && !a.0.intersects(&d.rhs.0)
}

fn restrict_sets<'a>(atoms: impl Iterator<Item = &'a Atom>, q: &ConstSet) -> Vec<ConstSet> {
    atoms.map(|a| a.0.intersection(q)).filter(|s| !s.is_empty()).collect()
}

/// Per-atom restriction without pruning: empty intersections dropped, equal
/// segments merged, redundant atoms kept.
pub fn restrict_atom_set<'a>(atoms: impl IntoIterator<Item = &'a Atom>, q: &ConstSet) -> BTreeSet<Atom> {
    restrict_sets(atoms.into_iter(), q).into_iter().map(Atom).collect()
}

fn check_universe(table: &ConstantTable, universe: &ConstSet) -> Result<()> {
    if universe.is_empty() {
        return Err(Error::usage("empty constant universe"));
    }
    if universe.bound() > table.len() {
        return Err(Error::usage("universe mentions ids outside the constant table"));
    }
    Ok(())
}
