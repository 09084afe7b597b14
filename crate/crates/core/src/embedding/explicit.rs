//! Explicitization with context constants.

use super::Embedding;
use crate::algebra::{Duple, Term};
use crate::bitset::ConstSet;
use crate::constants::ConstantTable;
use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

/// Adds a context constant `g_σ` per Γ duple `σ = (a ≤ b)` and the positive
/// duple `a ≤ b ⊙ g_σ`.
///
/// `reuse` names the context constant for some Γ indices; entries naming the
/// same constant share it. Other indices get a fresh `g_<index>`.
pub fn make_explicit(e: &Embedding, reuse: Option<&BTreeMap<usize, String>>) -> Result<Embedding> {
    if e.gamma().is_empty() {
        return Ok(e.clone());
    }
    let old = e.table();
    let mut taken: BTreeSet<String> = old.names().iter().cloned().collect();
    let mut names: Vec<String> = Vec::with_capacity(e.gamma().len());
    if let Some(r) = reuse {
        if let Some(&bad) = r.keys().find(|&&i| i >= e.gamma().len()) {
            return Err(Error::usage(format!("reuse map entry {bad} is not a Γ index")));
        }
        for name in r.values() {
            if let Some(id) = old.id(name) {
                if e.interp().contains(id) {
                    return Err(Error::usage(format!(
                        "context constant `{name}` is an interpretation constant"
                    )));
                }
            }
        }
    }
    for i in 0..e.gamma().len() {
        if let Some(name) = reuse.and_then(|r| r.get(&i)) {
            taken.insert(name.clone());
            names.push(name.clone());
            continue;
        }
        let mut name = format!("g_{i}");
        while taken.contains(&name) || reuse.is_some_and(|r| r.values().any(|v| v == &name)) {
            name.push('\'');
        }
        taken.insert(name.clone());
        names.push(name);
    }
    let table = ConstantTable::new(taken.iter().cloned())?;
    let moved = e.remap(&table)?;
    let mut rpos = moved.rpos().to_vec();
    let mut context = BTreeMap::new();
    for (i, (sigma, name)) in moved.gamma().iter().zip(&names).enumerate() {
        let g = table.require(name)?;
        rpos.push(Duple::positive(sigma.lhs.clone(), sigma.rhs.join(&Term::constant(g))));
        context.insert(i, ConstSet::singleton(g));
    }
    let out = Embedding::new(
        table,
        moved.interp().clone(),
        rpos,
        moved.rneg().to_vec(),
        moved.gamma().to_vec(),
        moved.scope().clone(),
    )?;
    out.with_context(context).map(|o| o.with_problem(e.problem().map(String::from)))
}

impl Embedding {
    /// The same embedding expressed over a table that contains every current name.
    pub fn remap(&self, table: &Arc<ConstantTable>) -> Result<Embedding> {
        let old = self.table();
        let map_set = |s: &ConstSet| -> Result<ConstSet> {
            s.iter().map(|i| table.require(old.name(i))).collect()
        };
        let map_duple = |d: &Duple| -> Result<Duple> {
            Ok(Duple {
                lhs: Term::new(map_set(d.lhs.constants())?)?,
                rhs: Term::new(map_set(d.rhs.constants())?)?,
                sign: d.sign,
            })
        };
        let out = Embedding::new(
            table.clone(),
            map_set(self.interp())?,
            self.rpos().iter().map(map_duple).collect::<Result<_>>()?,
            self.rneg().iter().map(map_duple).collect::<Result<_>>()?,
            self.gamma().iter().map(map_duple).collect::<Result<_>>()?,
            self.scope().clone(),
        )?;
        let context = self
            .context()
            .iter()
            .map(|(&i, g)| Ok((i, map_set(g)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(out.with_context(context)?.with_problem(self.problem().map(String::from)))
    }
}

impl Embedding {
    /// The embedding with its context constants, and every duple that mentions
    /// them, removed. Returns `None` unless each such duple is positive with a
    /// context constant on its right-hand side; then sending the context
    /// constants to the top element satisfies those duples, so both embeddings
    /// have the same solutions and the same `F_S` restricted to what remains.
    pub fn without_context(&self) -> Result<Option<Embedding>> {
        let mut k = ConstSet::new();
        for g in self.context().values() {
            k.union_with(g);
        }
        if k.is_empty() {
            return Ok(None);
        }
        let mentions = |d: &Duple| d.constants().intersects(&k);
        if k.intersects(self.interp())
            || self.rneg().iter().any(mentions)
            || self.gamma().iter().any(mentions)
            || self.rpos().iter().any(|d| mentions(d) && !d.rhs.constants().intersects(&k))
        {
            return Ok(None);
        }
        let old = self.table();
        let kept: Vec<&str> = old.names().iter().enumerate().filter(|(i, _)| !k.contains(*i)).map(|(_, n)| n.as_str()).collect();
        let table = ConstantTable::new(kept)?;
        let map_set = |s: &ConstSet| -> Result<ConstSet> { s.iter().map(|i| table.require(old.name(i))).collect() };
        let map_duple = |d: &Duple| -> Result<Duple> {
            Ok(Duple { lhs: Term::new(map_set(d.lhs.constants())?)?, rhs: Term::new(map_set(d.rhs.constants())?)?, sign: d.sign })
        };
        let rpos = self.rpos().iter().filter(|d| !mentions(d)).map(map_duple).collect::<Result<_>>()?;
        let out = Embedding::new(
            table.clone(),
            map_set(self.interp())?,
            rpos,
            self.rneg().iter().map(map_duple).collect::<Result<_>>()?,
            self.gamma().iter().map(map_duple).collect::<Result<_>>()?,
            self.scope().clone(),
        )?;
        Ok(Some(out.with_problem(self.problem().map(String::from))))
    }
}
