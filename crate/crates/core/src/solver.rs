//! Solution models from atoms of the freest model.

use crate::algebra::{Atom, AtomizedModel, CrossingOptions, Duple};
use crate::bitset::ConstSet;
use crate::embedding::{Embedding, Solution, Verdict};
use crate::error::{Error, Result};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeSet, HashSet};

/// How [`select_for_negatives`] picks among the atoms that discriminate a negative duple.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SelectionMode {
    /// The first discriminating atom in canonical (or shuffled) order.
    #[default]
    FirstFound,
    /// Prefer atoms whose context constants do not complete a conflict pair
    /// with the context constants of atoms already picked.
    GroundingPriority,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SelectionStrategy {
    pub mode: SelectionMode,
    /// Shuffles both the duple order and the atom order; `None` keeps canonical order.
    pub seed: Option<u64>,
    /// Pairs of context constants that signal incompatible choices.
    pub conflicts: Vec<(usize, usize)>,
}

impl SelectionStrategy {
    pub fn first_found() -> Self {
        SelectionStrategy::default()
    }

    pub fn grounding_priority(conflicts: Vec<(usize, usize)>) -> Self {
        SelectionStrategy { mode: SelectionMode::GroundingPriority, seed: None, conflicts }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

fn check_satisfies(m: &AtomizedModel, e: &Embedding) -> Result<()> {
    if let Some(d) = e.rpos().iter().chain(e.rneg()).find(|d| !m.holds(d)) {
        return Err(Error::usage(format!("model violates `{}`", d.render(e.table()))));
    }
    Ok(())
}

/// Drops atoms, in canonical order, while every duple of `R⁻` keeps a
/// discriminating atom; `⊖` is re-added only if some constant is left uncovered.
///
/// A kept atom is the only witness of some negative duple at the time it is
/// examined and stays so, hence one pass gives an irreducible model of at most
/// `|R⁻| + 1` atoms.
pub fn minimize_irreducible(m: &AtomizedModel, e: &Embedding) -> Result<AtomizedModel> {
    check_satisfies(m, e)?;
    let theta = m.theta();
    let atoms: Vec<&Atom> = m.atoms().iter().filter(|a| **a != theta).collect();
    let witnesses: Vec<Vec<usize>> =
        atoms.iter().map(|a| (0..e.rneg().len()).filter(|&k| discriminates(a, &e.rneg()[k])).collect()).collect();
    let mut count = vec![0usize; e.rneg().len()];
    for w in &witnesses {
        for &k in w {
            count[k] += 1;
        }
    }
    let mut kept = Vec::new();
    for (a, w) in atoms.iter().zip(&witnesses) {
        if w.iter().all(|&k| count[k] > 1) {
            for &k in w {
                count[k] -= 1;
            }
        } else {
            kept.push((*a).clone());
        }
    }
    AtomizedModel::canonicalize(m.table().clone(), m.universe().clone(), kept)
}

fn discriminates(a: &Atom, d: &Duple) -> bool {
    a.segment().intersects(d.lhs.constants()) && !a.segment().intersects(d.rhs.constants())
}

fn context_constants(e: &Embedding) -> ConstSet {
    let mut k = ConstSet::new();
    for g in e.context().values() {
        k.union_with(g);
    }
    k
}

/// One discriminating atom of `free` per duple of `R⁻`, skipping duples
/// already covered, plus `⊖` when needed.
pub fn select_for_negatives(free: &AtomizedModel, e: &Embedding, strat: &SelectionStrategy) -> Result<AtomizedModel> {
    let mut rng = strat.seed.map(ChaCha8Rng::seed_from_u64);
    let mut order: Vec<usize> = (0..e.rneg().len()).collect();
    let mut atoms: Vec<&Atom> = free.atoms().iter().collect();
    if let Some(rng) = rng.as_mut() {
        order.shuffle(rng);
        atoms.shuffle(rng);
    }
    let context = context_constants(e);
    let mut footprint = ConstSet::new();
    let mut chosen: Vec<&Atom> = Vec::new();
    for k in order {
        let d = &e.rneg()[k];
        if chosen.iter().any(|a| discriminates(a, d)) {
            continue;
        }
        let mut candidates = atoms.iter().copied().filter(|a| discriminates(a, d)).peekable();
        let first = *candidates
            .peek()
            .ok_or_else(|| Error::infeasible(format!("no atom discriminates `{}`", d.render(e.table()))))?;
        let pick = match strat.mode {
            SelectionMode::FirstFound => first,
            SelectionMode::GroundingPriority => candidates
                .find(|a| !creates_conflict(&footprint, &a.segment().intersection(&context), &strat.conflicts))
                .unwrap_or(first),
        };
        footprint.union_with(&pick.segment().intersection(&context));
        chosen.push(pick);
    }
    AtomizedModel::canonicalize(free.table().clone(), free.universe().clone(), chosen.into_iter().cloned())
}

fn creates_conflict(footprint: &ConstSet, added: &ConstSet, conflicts: &[(usize, usize)]) -> bool {
    let merged = footprint.union(added);
    conflicts.iter().any(|&(a, b)| {
        merged.contains(a) && merged.contains(b) && !(footprint.contains(a) && footprint.contains(b))
    })
}

/// How [`solve`] searches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// [`select_for_negatives`] once per seed.
    Sampling { seeds: Vec<u64> },
    /// Depth-first search over discriminating atoms. When Ξ has no negations
    /// it finds a solution whenever one is atomized by atoms of `F_C(R⁺)`;
    /// dominated branches are skipped, so it need not list every solution.
    /// Stops after `limit` distinct solutions.
    Exhaustive { limit: usize },
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub mode: SearchMode,
    pub selection: SelectionStrategy,
    pub crossing: CrossingOptions,
    /// Work on [`Embedding::without_context`] when it applies.
    pub drop_context: bool,
    /// In sampling mode, also run each seed with a seeded random subset of Γ
    /// added to `R⁻`, so that solutions falsifying Γ duples not forced by `R⁻`
    /// can be reached.
    pub explore_gamma: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            mode: SearchMode::Sampling { seeds: (0..32).collect() },
            selection: SelectionStrategy::default(),
            crossing: CrossingOptions::default(),
            drop_context: false,
            explore_gamma: true,
        }
    }
}

/// A solution with the irreducible model it was read from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Found {
    pub solution: Solution,
    pub model: AtomizedModel,
}

/// Builds the freest model and extracts validated, deduplicated solutions.
/// Models are over the reduced constants when `drop_context` took effect.
pub fn solve(e: &Embedding, opts: &SolveOptions) -> Result<Vec<Found>> {
    let reduced = if opts.drop_context { e.without_context()? } else { None };
    let e = reduced.as_ref().unwrap_or(e);
    let free = e.freest_model(&opts.crossing)?;
    solve_with(e, &free, opts)
}

/// As [`solve`] with `F_C(R⁺)` supplied.
pub fn solve_with(e: &Embedding, free: &AtomizedModel, opts: &SolveOptions) -> Result<Vec<Found>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut accept = |m: AtomizedModel, out: &mut Vec<Found>| -> Result<()> {
        if !e.evaluate_scope_model(&m) {
            return Ok(());
        }
        let s = e.induced_solution(&m);
        if seen.contains(&s) {
            return Ok(());
        }
        if e.validate_solution_from(free, &s, &opts.crossing)? == Verdict::Ok {
            seen.insert(s.clone());
            out.push(Found { solution: s, model: m });
        }
        Ok(())
    };
    match &opts.mode {
        SearchMode::Sampling { seeds } => {
            for &seed in seeds {
                let strat = opts.selection.clone().with_seed(seed);
                let m = select_for_negatives(free, e, &strat)?;
                accept(minimize_irreducible(&m, e)?, &mut out)?;
                if opts.explore_gamma {
                    if let Some(ext) = with_negated_gamma(e, free, seed)? {
                        let m = select_for_negatives(free, &ext, &strat)?;
                        accept(minimize_irreducible(&m, &ext)?, &mut out)?;
                    }
                }
            }
        }
        SearchMode::Exhaustive { limit } => {
            if !e.scope().is_positive() {
                return Err(Error::usage("exhaustive search needs a scope sentence without negations"));
            }
            for m in exhaustive_models(e, free, *limit)? {
                accept(m, &mut out)?;
            }
        }
    }
    Ok(out)
}

/// `e` with a seeded half of the Γ duples that `free` can falsify appended
/// to `R⁻` as negations; `None` when the draw is empty.
fn with_negated_gamma(e: &Embedding, free: &AtomizedModel, seed: u64) -> Result<Option<Embedding>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let extra: Vec<Duple> = e
        .gamma()
        .iter()
        .filter(|g| rng.gen_bool(0.5) && free.atoms().iter().any(|a| discriminates(a, g)))
        .map(Duple::negated)
        .collect();
    if extra.is_empty() {
        return Ok(None);
    }
    let mut rneg = e.rneg().to_vec();
    rneg.extend(extra);
    Ok(Some(e.with_negatives(rneg)?))
}

type Mask = Vec<u64>;

fn mask_with(len: usize, bits: impl Iterator<Item = usize>) -> Mask {
    let mut m = vec![0u64; len.div_ceil(64)];
    for b in bits {
        m[b / 64] |= 1 << (b % 64);
    }
    m
}

fn mask_or(a: &Mask, b: &Mask) -> Mask {
    a.iter().zip(b).map(|(x, y)| x | y).collect()
}

fn mask_subset(a: &Mask, b: &Mask) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn mask_has(m: &Mask, b: usize) -> bool {
    m[b / 64] >> (b % 64) & 1 == 1
}

struct Search<'a> {
    e: &'a Embedding,
    atoms: Vec<&'a Atom>,
    /// Γ indices each atom falsifies.
    kills: Vec<Mask>,
    /// `R⁻` indices each atom witnesses.
    covers: Vec<Mask>,
    failed: HashSet<(Mask, Mask)>,
    found: Vec<AtomizedModel>,
    found_solutions: HashSet<Mask>,
    limit: usize,
    free: &'a AtomizedModel,
}

impl Search<'_> {
    fn scope_holds(&self, killed: &Mask) -> bool {
        self.e.scope().eval_with(&mut |i| !mask_has(killed, i))
    }

    /// Returns true when the limit is reached.
    fn go(&mut self, chosen: &mut Vec<usize>, killed: Mask, covered: Mask) -> Result<bool> {
        let nneg = self.e.rneg().len();
        let open: Vec<usize> = (0..nneg).filter(|&k| !mask_has(&covered, k)).collect();
        if open.is_empty() {
            if self.found_solutions.insert(killed.clone()) {
                let m = AtomizedModel::canonicalize(
                    self.free.table().clone(),
                    self.free.universe().clone(),
                    chosen.iter().map(|&i| self.atoms[i].clone()),
                )?;
                self.found.push(m);
            }
            return Ok(self.found.len() >= self.limit);
        }
        let key = (killed.clone(), covered.clone());
        if self.failed.contains(&key) {
            return Ok(false);
        }
        let before = self.found.len();
        // Branch on the open duple with the fewest viable witnesses.
        let mut best: Option<Vec<usize>> = None;
        for &k in &open {
            let options: Vec<(usize, Mask, Mask)> = (0..self.atoms.len())
                .filter(|&i| mask_has(&self.covers[i], k))
                .map(|i| (i, mask_or(&killed, &self.kills[i]), mask_or(&covered, &self.covers[i])))
                .filter(|(_, kill, _)| self.scope_holds(kill))
                .collect();
            // A witness is dominated by one that falsifies no more of Γ and covers no less of R⁻.
            let dominated = |(i, ki, ci): &(usize, Mask, Mask)| {
                options.iter().any(|(j, kj, cj)| {
                    j != i && mask_subset(kj, ki) && mask_subset(ci, cj) && ((kj, cj) != (ki, ci) || j < i)
                })
            };
            let options: Vec<usize> = options.iter().filter(|o| !dominated(o)).map(|o| o.0).collect();
            if best.as_ref().is_none_or(|b| options.len() < b.len()) {
                let empty = options.is_empty();
                best = Some(options);
                if empty {
                    break;
                }
            }
        }
        for i in best.unwrap_or_default() {
            chosen.push(i);
            let done = self.go(chosen, mask_or(&killed, &self.kills[i]), mask_or(&covered, &self.covers[i]))?;
            chosen.pop();
            if done {
                return Ok(true);
            }
        }
        if self.found.len() == before {
            self.failed.insert(key);
        }
        Ok(false)
    }
}

/// Models `[A]` with `A` a set of atoms of `free`, one witness per negative
/// duple, on which Ξ holds; at most one model per induced solution.
fn exhaustive_models(e: &Embedding, free: &AtomizedModel, limit: usize) -> Result<Vec<AtomizedModel>> {
    if limit == 0 {
        return Ok(Vec::new());
    }
    let theta = free.theta();
    let atoms: Vec<&Atom> = free.atoms().iter().filter(|a| **a != theta).collect();
    let (ng, nneg) = (e.gamma().len(), e.rneg().len());
    let kills = atoms
        .iter()
        .map(|a| mask_with(ng, (0..ng).filter(|&i| discriminates(a, &e.gamma()[i]))))
        .collect();
    let covers = atoms
        .iter()
        .map(|a| mask_with(nneg, (0..nneg).filter(|&k| discriminates(a, &e.rneg()[k]))))
        .collect();
    let mut search = Search {
        e,
        atoms,
        kills,
        covers,
        failed: HashSet::new(),
        found: Vec::new(),
        found_solutions: HashSet::new(),
        limit,
        free,
    };
    let killed = mask_with(ng, std::iter::empty());
    if !search.scope_holds(&killed) {
        return Ok(Vec::new());
    }
    search.go(&mut Vec::new(), killed, mask_with(nneg, std::iter::empty()))?;
    Ok(search.found)
}

/// The Γ duples an atom does not discriminate.
pub fn atom_solution(e: &Embedding, phi: &Atom) -> Solution {
    (0..e.gamma().len()).filter(|&i| !discriminates(phi, &e.gamma()[i])).collect()
}

/// Decodes every atom of `free` with the given size, using `decoder` or
/// [`atom_solution`] by default. Each entry is the decoded solution or the
/// reason it was rejected.
pub fn atoms_as_solutions(
    e: &Embedding,
    free: &AtomizedModel,
    size: usize,
    decoder: Option<&dyn Fn(&Atom) -> Option<Solution>>,
    opts: &CrossingOptions,
) -> Result<Vec<std::result::Result<Solution, String>>> {
    let mut out = Vec::new();
    for phi in free.atoms().iter().filter(|a| a.len() == size) {
        let decoded = match decoder {
            Some(f) => f(phi),
            None => Some(atom_solution(e, phi)),
        };
        let Some(s) = decoded else {
            out.push(Err(format!("decoder rejected atom {}", phi.render(e.table()))));
            continue;
        };
        out.push(match e.validate_solution_from(free, &s, opts)? {
            Verdict::Ok => Ok(s),
            v => Err(format!("atom {} decodes to an invalid solution: {v:?}", phi.render(e.table()))),
        });
    }
    Ok(out)
}
