//! Embeddings `(C, Q, R⁺, R⁻, Γ, Ξ)`, solutions and their freest models.

mod classify;
mod explicit;
mod scope;

pub use classify::{
    Analysis, ClassificationReport, CompletenessMethod, ExplicitVerdict, SolutionK,
};
pub use explicit::make_explicit;
pub use scope::ScopeFormula;

use crate::algebra::{freest_model, AtomizedModel, CrossingOptions, Duple, Sign};
use crate::bitset::ConstSet;
use crate::constants::ConstantTable;
use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

/// Default ceiling on `|Γ|` for exhaustive solution enumeration.
pub const ENUMERATION_MAX_GAMMA: usize = 20;

/// A subset of the separator set, by Γ index.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Solution {
    members: BTreeSet<usize>,
}

impl Solution {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Solution {
        Solution { members: members.into_iter().collect() }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(&i)
    }

    pub fn members(&self) -> &BTreeSet<usize> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl FromIterator<usize> for Solution {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Solution::new(iter)
    }
}

/// Outcome of checking a candidate solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Ok,
    ScopeFail,
    /// The freest solution model violates this duple (from `R⁻`, or the negation of a Γ duple outside S).
    NegativeFail(Duple),
}

/// A semantic embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    table: Arc<ConstantTable>,
    interp: ConstSet,
    rpos: Vec<Duple>,
    rneg: Vec<Duple>,
    gamma: Vec<Duple>,
    scope: ScopeFormula,
    context: BTreeMap<usize, ConstSet>,
    problem: Option<String>,
}

impl Embedding {
    /// Checks the structural invariants and builds the embedding. Degenerate
    /// `And`/`Or` nodes in the scope are collapsed.
    pub fn new(
        table: Arc<ConstantTable>,
        interp: ConstSet,
        rpos: Vec<Duple>,
        rneg: Vec<Duple>,
        gamma: Vec<Duple>,
        scope: ScopeFormula,
    ) -> Result<Embedding> {
        let all = table.all();
        if interp.is_empty() || !interp.is_subset(&all) {
            return Err(Error::usage("interpretation constants must be a nonempty subset of C"));
        }
        let within = |d: &Duple| d.constants().is_subset(&all);
        if let Some(d) = rpos.iter().find(|d| !d.is_positive() || !within(d)) {
            return Err(Error::usage(format!("bad positive duple `{}`", d.render(&table))));
        }
        if let Some(d) = rneg.iter().find(|d| d.sign != Sign::Negative || !within(d)) {
            return Err(Error::usage(format!("bad negative duple `{}`", d.render(&table))));
        }
        if let Some(d) = gamma.iter().find(|d| !d.is_positive() || !d.constants().is_subset(&interp)) {
            return Err(Error::usage(format!(
                "separator duple `{}` must be positive and over the interpretation constants",
                d.render(&table)
            )));
        }
        if scope.leaf_bound() > gamma.len() {
            return Err(Error::usage("scope formula refers to a duple outside Γ"));
        }
        let scope = scope.simplified();
        Ok(Embedding { table, interp, rpos, rneg, gamma, scope, context: BTreeMap::new(), problem: None })
    }

    /// Attaches context constants to Γ entries.
    pub fn with_context(mut self, context: BTreeMap<usize, ConstSet>) -> Result<Embedding> {
        let all = self.table.all();
        for (&i, g) in &context {
            if i >= self.gamma.len() {
                return Err(Error::usage(format!("context entry {i} is not a Γ index")));
            }
            if g.is_empty() || !g.is_subset(&all) {
                return Err(Error::usage(format!("context entry {i} has no valid constants")));
            }
        }
        self.context = context;
        Ok(self)
    }

    /// Tags the embedding with the generator spec it came from.
    pub fn with_problem(mut self, problem: Option<String>) -> Embedding {
        self.problem = problem;
        self
    }

    pub fn table(&self) -> &Arc<ConstantTable> {
        &self.table
    }

    pub fn constants(&self) -> ConstSet {
        self.table.all()
    }

    pub fn interp(&self) -> &ConstSet {
        &self.interp
    }

    pub fn rpos(&self) -> &[Duple] {
        &self.rpos
    }

    pub fn rneg(&self) -> &[Duple] {
        &self.rneg
    }

    pub fn gamma(&self) -> &[Duple] {
        &self.gamma
    }

    pub fn scope(&self) -> &ScopeFormula {
        &self.scope
    }

    pub fn context(&self) -> &BTreeMap<usize, ConstSet> {
        &self.context
    }

    pub fn problem(&self) -> Option<&str> {
        self.problem.as_deref()
    }

    /// Index of `d` in Γ.
    pub fn gamma_index(&self, d: &Duple) -> Option<usize> {
        self.gamma.iter().position(|g| g == d)
    }

    /// Returns a copy with extra positive duples appended to `R⁺`.
    pub fn with_extra_positive(&self, extra: impl IntoIterator<Item = Duple>) -> Result<Embedding> {
        let mut rpos = self.rpos.clone();
        rpos.extend(extra);
        let e = Embedding::new(
            self.table.clone(),
            self.interp.clone(),
            rpos,
            self.rneg.clone(),
            self.gamma.clone(),
            self.scope.clone(),
        )?;
        Ok(e.with_context(self.context.clone())?.with_problem(self.problem.clone()))
    }

    /// Replaces `R⁻`.
    pub fn with_negatives(&self, rneg: Vec<Duple>) -> Result<Embedding> {
        let e = Embedding::new(
            self.table.clone(),
            self.interp.clone(),
            self.rpos.clone(),
            rneg,
            self.gamma.clone(),
            self.scope.clone(),
        )?;
        Ok(e.with_context(self.context.clone())?.with_problem(self.problem.clone()))
    }

    fn check_solution(&self, s: &Solution) -> Result<()> {
        match s.members.iter().next_back() {
            Some(&i) if i >= self.gamma.len() => {
                Err(Error::usage(format!("solution mentions Γ index {i} but |Γ| = {}", self.gamma.len())))
            }
            _ => Ok(()),
        }
    }

    /// `F_C(R⁺)`.
    pub fn freest_model(&self, opts: &CrossingOptions) -> Result<AtomizedModel> {
        freest_model(self.table.clone(), self.constants(), &self.rpos, opts)
    }

    /// `F_S = F_C(R⁺ ∪ S)`.
    pub fn freest_solution(&self, s: &Solution, opts: &CrossingOptions) -> Result<AtomizedModel> {
        self.check_solution(s)?;
        let mut rel = self.rpos.clone();
        rel.extend(s.members.iter().map(|&i| self.gamma[i].clone()));
        freest_model(self.table.clone(), self.constants(), &rel, opts)
    }

    /// `F_S` computed by crossing S onto an already built `F_C(R⁺)`.
    pub fn freest_solution_from(
        &self,
        free: &AtomizedModel,
        s: &Solution,
        opts: &CrossingOptions,
    ) -> Result<AtomizedModel> {
        self.check_solution(s)?;
        let mut m = free.clone();
        for &i in &s.members {
            m = m.full_crossing(&self.gamma[i], opts)?;
        }
        Ok(m)
    }

    /// Ξ in a model.
    pub fn evaluate_scope_model(&self, m: &AtomizedModel) -> bool {
        self.scope.eval_model(&self.gamma, m)
    }

    /// Ξ under the assignment induced by S.
    pub fn evaluate_scope_solution(&self, s: &Solution) -> bool {
        self.scope.eval_solution(s)
    }

    /// `{σ ∈ Γ : M ⊨ σ}`.
    pub fn induced_solution(&self, m: &AtomizedModel) -> Solution {
        self.gamma.iter().enumerate().filter(|(_, d)| m.holds(d)).map(|(i, _)| i).collect()
    }

    /// Checks Ξ on S, then `R⁻` and the negated complement of S on `F_S`.
    pub fn validate_solution(&self, s: &Solution, opts: &CrossingOptions) -> Result<Verdict> {
        self.check_solution(s)?;
        if !self.evaluate_scope_solution(s) {
            return Ok(Verdict::ScopeFail);
        }
        let fs = self.freest_solution(s, opts)?;
        Ok(self.check_model_against(&fs, s))
    }

    /// As [`Embedding::validate_solution`] with `F_C(R⁺)` supplied.
    pub fn validate_solution_from(
        &self,
        free: &AtomizedModel,
        s: &Solution,
        opts: &CrossingOptions,
    ) -> Result<Verdict> {
        self.check_solution(s)?;
        if !self.evaluate_scope_solution(s) {
            return Ok(Verdict::ScopeFail);
        }
        let fs = self.freest_solution_from(free, s, opts)?;
        Ok(self.check_model_against(&fs, s))
    }

    /// Whether `m` satisfies `R⁻` and exactly the Γ duples in `s`.
    pub(crate) fn check_model_against(&self, m: &AtomizedModel, s: &Solution) -> Verdict {
        if let Some(d) = self.rneg.iter().find(|d| !m.holds(d)) {
            return Verdict::NegativeFail(d.clone());
        }
        for (i, g) in self.gamma.iter().enumerate() {
            if !s.contains(i) && m.holds(g) {
                return Verdict::NegativeFail(g.negated());
            }
        }
        Verdict::Ok
    }

    /// Every model-level requirement: `R⁺`, `R⁻` and Ξ.
    pub fn model_satisfies(&self, m: &AtomizedModel) -> bool {
        self.rpos.iter().all(|d| m.holds(d))
            && self.rneg.iter().all(|d| m.holds(d))
            && self.evaluate_scope_model(m)
    }

    /// All valid solutions by exhaustive search over subsets of Γ.
    pub fn enumerate_solutions(&self, max_gamma: usize, opts: &CrossingOptions) -> Result<Vec<Solution>> {
        let n = self.gamma.len();
        if n > max_gamma || n >= usize::BITS as usize {
            return Err(Error::resource(format!(
                "|Γ| = {n} exceeds the enumeration limit of {max_gamma}; supply solutions from a problem oracle"
            )));
        }
        let free = self.freest_model(opts)?;
        let mut out = Vec::new();
        for mask in 0usize..(1 << n) {
            let s: Solution = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            if !self.evaluate_scope_solution(&s) {
                continue;
            }
            let fs = self.freest_solution_from(&free, &s, opts)?;
            if self.check_model_against(&fs, &s) == Verdict::Ok {
                out.push(s);
            }
        }
        out.sort();
        Ok(out)
    }

    /// Human-readable list of the Γ duples in `s`.
    pub fn render_solution(&self, s: &Solution) -> String {
        s.members.iter().map(|&i| self.gamma[i].render(&self.table)).collect::<Vec<_>>().join("; ")
    }
}
