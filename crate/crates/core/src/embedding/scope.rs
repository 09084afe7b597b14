//! Quantifier-free scope formulas over separator-set duples.

use super::Solution;
use crate::algebra::{AtomizedModel, Duple};

/// A boolean formula whose leaves are indices into the separator set Γ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ScopeFormula {
    True,
    False,
    Leaf(usize),
    Not(Box<ScopeFormula>),
    And(Vec<ScopeFormula>),
    Or(Vec<ScopeFormula>),
}

impl ScopeFormula {
    pub fn leaf(i: usize) -> Self {
        ScopeFormula::Leaf(i)
    }

    pub fn not(f: ScopeFormula) -> Self {
        ScopeFormula::Not(Box::new(f))
    }

    /// `Γ[i] ∧ Γ[j]`, the expansion of an equality.
    pub fn equality(i: usize, j: usize) -> Self {
        ScopeFormula::And(vec![ScopeFormula::Leaf(i), ScopeFormula::Leaf(j)])
    }

    /// Evaluates with `leaf(i)` supplying the truth value of `Γ[i]`.
    pub fn eval_with(&self, leaf: &mut impl FnMut(usize) -> bool) -> bool {
        match self {
            ScopeFormula::True => true,
            ScopeFormula::False => false,
            ScopeFormula::Leaf(i) => leaf(*i),
            ScopeFormula::Not(f) => !f.eval_with(leaf),
            ScopeFormula::And(fs) => fs.iter().all(|f| f.eval_with(leaf)),
            ScopeFormula::Or(fs) => fs.iter().any(|f| f.eval_with(leaf)),
        }
    }

    /// Truth under the assignment "σ holds iff σ ∈ S".
    pub fn eval_solution(&self, s: &Solution) -> bool {
        self.eval_with(&mut |i| s.contains(i))
    }

    /// Truth in a model: a leaf holds iff the model satisfies its duple.
    pub fn eval_model(&self, gamma: &[Duple], m: &AtomizedModel) -> bool {
        self.eval_with(&mut |i| m.holds(&gamma[i]))
    }

    /// Largest leaf index plus one.
    pub fn leaf_bound(&self) -> usize {
        let mut bound = 0;
        self.visit_leaves(&mut |i| bound = bound.max(i + 1));
        bound
    }

    pub fn visit_leaves(&self, f: &mut impl FnMut(usize)) {
        match self {
            ScopeFormula::True | ScopeFormula::False => {}
            ScopeFormula::Leaf(i) => f(*i),
            ScopeFormula::Not(g) => g.visit_leaves(f),
            ScopeFormula::And(gs) | ScopeFormula::Or(gs) => gs.iter().for_each(|g| g.visit_leaves(f)),
        }
    }

    /// True when no negation occurs, so the formula is monotone in its leaves.
    pub fn is_positive(&self) -> bool {
        match self {
            ScopeFormula::True | ScopeFormula::False | ScopeFormula::Leaf(_) => true,
            ScopeFormula::Not(_) => false,
            ScopeFormula::And(gs) | ScopeFormula::Or(gs) => gs.iter().all(ScopeFormula::is_positive),
        }
    }

    /// Collapses empty and single-child `And`/`Or` nodes.
    pub fn simplified(self) -> ScopeFormula {
        match self {
            ScopeFormula::Not(g) => ScopeFormula::not(g.simplified()),
            ScopeFormula::And(gs) | ScopeFormula::Or(gs) if gs.len() == 1 => {
                gs.into_iter().next().expect("one child").simplified()
            }
            ScopeFormula::And(gs) if gs.is_empty() => ScopeFormula::True,
            ScopeFormula::Or(gs) if gs.is_empty() => ScopeFormula::False,
            ScopeFormula::And(gs) => ScopeFormula::And(gs.into_iter().map(ScopeFormula::simplified).collect()),
            ScopeFormula::Or(gs) => ScopeFormula::Or(gs.into_iter().map(ScopeFormula::simplified).collect()),
            leaf => leaf,
        }
    }

    /// Rewrites every leaf index through `map`.
    pub fn map_leaves(&self, map: &impl Fn(usize) -> usize) -> ScopeFormula {
        match self {
            ScopeFormula::True => ScopeFormula::True,
            ScopeFormula::False => ScopeFormula::False,
            ScopeFormula::Leaf(i) => ScopeFormula::Leaf(map(*i)),
            ScopeFormula::Not(g) => ScopeFormula::not(g.map_leaves(map)),
            ScopeFormula::And(gs) => ScopeFormula::And(gs.iter().map(|g| g.map_leaves(map)).collect()),
            ScopeFormula::Or(gs) => ScopeFormula::Or(gs.iter().map(|g| g.map_leaves(map)).collect()),
        }
    }
}
