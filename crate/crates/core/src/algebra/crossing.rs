//! Full crossing and freest-model construction.

use super::model::discriminates;
use super::{Atom, AtomizedModel, Duple};
use crate::bitset::ConstSet;
use crate::constants::ConstantTable;
use crate::error::{Error, Result};
use rayon::prelude::*;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::Arc;

/// Atom-count ceiling applied when no explicit budget is configured.
pub const DEFAULT_ATOM_BUDGET: usize = 50_000_000;

/// Environment variable overriding [`DEFAULT_ATOM_BUDGET`].
pub const BUDGET_ENV: &str = "SEMLAT_ATOM_BUDGET";

/// The budget from [`BUDGET_ENV`] if set to a positive integer, else the default.
pub fn default_budget() -> usize {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&b| b > 0)
        .unwrap_or(DEFAULT_ATOM_BUDGET)
}

/// Order in which [`freest_model`] crosses the duples.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CrossingOrder {
    /// As listed.
    Given,
    /// Cheapest estimated crossing first.
    #[default]
    Cheapest,
}

#[derive(Clone, Debug)]
pub struct CrossingOptions {
    /// Maximum number of atoms (survivors plus fresh candidates) held during one crossing.
    pub budget: usize,
    pub order: CrossingOrder,
}

impl Default for CrossingOptions {
    fn default() -> Self {
        CrossingOptions { budget: default_budget(), order: CrossingOrder::default() }
    }
}

impl CrossingOptions {
    pub fn with_budget(budget: usize) -> Self {
        CrossingOptions { budget, ..Default::default() }
    }
}

impl AtomizedModel {
    /// `□_d M`: the freest model of the positive theory of `self` plus `d`.
    pub fn full_crossing(&self, d: &Duple, opts: &CrossingOptions) -> Result<AtomizedModel> {
        self.check_crossable(d)?;
        let atoms = self.atoms();
        let (dis, survivors): (Vec<&Atom>, Vec<&Atom>) =
            atoms.iter().partition(|a| discriminates(a, d));
        if dis.is_empty() {
            return Ok(self.clone());
        }
        let lower: Vec<&ConstSet> = survivors
            .iter()
            .filter(|a| a.segment().intersects(d.rhs.constants()))
            .map(|a| a.segment())
            .collect();
        let known: HashSet<&ConstSet> = survivors.iter().map(|a| a.segment()).collect();

        // Fresh unions, each remembering one lower-segment atom it contains.
        let mut fresh: HashMap<ConstSet, u32> = HashMap::new();
        for phi in &dis {
            let phi = phi.segment();
            for (j, psi) in lower.iter().enumerate() {
                if phi.is_subset(psi) {
                    continue;
                }
                let x = phi.union(psi);
                if known.contains(&x) {
                    continue;
                }
                fresh.entry(x).or_insert(j as u32);
            }
            if survivors.len() + fresh.len() > opts.budget {
                return Err(Error::resource(format!(
                    "crossing exceeded the atom budget of {}",
                    opts.budget
                )));
            }
        }
        drop(known);

        let survivor_sets: Vec<&ConstSet> = survivors.iter().map(|a| a.segment()).collect();
        let dis_sets: Vec<&ConstSet> = dis.iter().map(|a| a.segment()).collect();
        let mut fresh: Vec<(ConstSet, u32)> = fresh.into_iter().collect();
        fresh.sort_by(|a, b| a.0.canonical_cmp(&b.0));
        let index = CoverIndex::new(&survivor_sets, &dis_sets, &lower, self.universe().bound());
        let keep: Vec<bool> = fresh
            .par_iter()
            .map(|(x, j)| !index.is_redundant(x, lower[*j as usize]))
            .collect();
        drop(index);
        let mut out: Vec<Atom> = Vec::with_capacity(survivors.len() + keep.len());
        out.extend(survivor_sets.into_iter().map(|x| Atom::from_set_unchecked(x.clone())));
        out.extend(fresh.into_iter().zip(keep).filter_map(|((x, _), k)| k.then(|| Atom::from_set_unchecked(x))));
        out.sort();
        Ok(AtomizedModel::from_canonical(self.table().clone(), self.universe().clone(), out))
    }

    /// The unpruned crossing output `(A − dis) ∪ (dis ∇ L(rhs))`, redundant atoms included.
    pub fn full_crossing_raw(&self, d: &Duple) -> Result<BTreeSet<Atom>> {
        self.check_crossable(d)?;
        let mut out = BTreeSet::new();
        let lower: Vec<&Atom> = self.lower_segment(&d.rhs);
        for a in self.atoms() {
            if discriminates(a, d) {
                for psi in &lower {
                    out.insert(super::atom_union(a, psi));
                }
            } else {
                out.insert(a.clone());
            }
        }
        Ok(out)
    }

    fn check_crossable(&self, d: &Duple) -> Result<()> {
        if !d.is_positive() {
            return Err(Error::usage("full crossing needs a positive duple"));
        }
        if !d.constants().is_subset(self.universe()) {
            return Err(Error::usage("duple mentions constants outside the model"));
        }
        Ok(())
    }
}

/// Redundancy test for fresh unions. Any fresh union inside a candidate `x`
/// is `φ' ∪ ψ'` with both parts inside `x`, so covers come from the
/// survivors and the discriminated atoms alone.
struct CoverIndex<'a> {
    survivors: &'a [&'a ConstSet],
    dis: &'a [&'a ConstSet],
    lower: &'a [&'a ConstSet],
    survivor_posting: Vec<Vec<u32>>,
    dis_posting: Vec<Vec<u32>>,
}

impl<'a> CoverIndex<'a> {
    fn new(survivors: &'a [&'a ConstSet], dis: &'a [&'a ConstSet], lower: &'a [&'a ConstSet], bound: usize) -> Self {
        let post = |sets: &[&ConstSet]| {
            let mut p = vec![Vec::new(); bound];
            for (i, s) in sets.iter().enumerate() {
                for c in s.iter() {
                    p[c].push(i as u32);
                }
            }
            p
        };
        CoverIndex { survivor_posting: post(survivors), dis_posting: post(dis), survivors, dis, lower }
    }

    /// `x = φ ∪ ψ` with `ψ` a survivor inside `x`.
    fn is_redundant(&self, x: &ConstSet, psi: &ConstSet) -> bool {
        let mut uncovered = x.difference(psi);
        while let Some(c) = uncovered.first() {
            let from_survivor = self.survivor_posting[c]
                .iter()
                .map(|&i| self.survivors[i as usize])
                .find(|s| s.is_subset(x));
            let cover = from_survivor.or_else(|| {
                self.dis_posting[c].iter().map(|&i| self.dis[i as usize]).find(|phi| {
                    phi.is_subset(x) && self.pairs_strictly_inside(phi, x, psi)
                })
            });
            match cover {
                Some(y) => uncovered.difference_with(y),
                None => return false,
            }
        }
        true
    }

    /// Whether `φ ∪ ψ'` is a fresh union strictly inside `x` for some `ψ'`.
    fn pairs_strictly_inside(&self, phi: &ConstSet, x: &ConstSet, psi: &ConstSet) -> bool {
        let ok = |l: &ConstSet| !phi.is_subset(l) && phi.union(l) != *x;
        ok(psi) || self.lower.iter().any(|l| l.is_subset(x) && ok(l))
    }
}

/// `F_U(R⁺)`. Crossing order does not change the result, so by default the
/// duple with the smallest `|dis| · |lower segment|` is crossed next; duples
/// that already hold are skipped.
pub fn freest_model(
    table: Arc<ConstantTable>,
    universe: ConstSet,
    rpos: &[Duple],
    opts: &CrossingOptions,
) -> Result<AtomizedModel> {
    let mut m = AtomizedModel::free(table, universe)?;
    for d in rpos {
        m.check_crossable(d)?;
    }
    let mut remaining: Vec<usize> = (0..rpos.len()).collect();
    let mut step = 0;
    while !remaining.is_empty() {
        let pick = match opts.order {
            CrossingOrder::Given => 0,
            CrossingOrder::Cheapest => {
                let costs: Vec<(usize, usize)> = remaining.par_iter().map(|&i| crossing_cost(&m, &rpos[i])).collect();
                let mut kept = Vec::with_capacity(remaining.len());
                let mut best: Option<(usize, usize)> = None;
                for (&i, &(dis, cost)) in remaining.iter().zip(&costs) {
                    if dis == 0 {
                        continue;
                    }
                    if best.is_none_or(|(_, c)| cost < c) {
                        best = Some((kept.len(), cost));
                    }
                    kept.push(i);
                }
                remaining = kept;
                match best {
                    Some((k, _)) => k,
                    None => break,
                }
            }
        };
        let i = remaining.remove(pick);
        step += 1;
        let d = &rpos[i];
        m = m.full_crossing(d, opts).map_err(|e| match e {
            Error::Resource(msg) => Error::Resource(format!(
                "{msg} at crossing step {step} of at most {}, duple #{} `{}`",
                rpos.len(),
                i + 1,
                d.render(m.table())
            )),
            other => other,
        })?;
    }
    Ok(m)
}

/// `(|dis|, |dis| · |lower segment of rhs|)` for crossing `d` into `m`.
fn crossing_cost(m: &AtomizedModel, d: &Duple) -> (usize, usize) {
    let (mut dis, mut lower) = (0, 0);
    for a in m.atoms() {
        if a.segment().intersects(d.rhs.constants()) {
            lower += 1;
        } else if a.segment().intersects(d.lhs.constants()) {
            dis += 1;
        }
    }
    (dis, dis * lower)
}
