//! Concise / complete / strongly complete / tight / explicit checks.

use super::{Embedding, Solution};
use crate::algebra::{freest_model, Atom, AtomStatus, AtomizedModel, CrossingOptions, Duple, Term};
use crate::bitset::ConstSet;
use crate::error::{Error, Result};
use serde::Serialize;

/// Largest `|Q|` accepted by brute-force completeness.
pub const BRUTEFORCE_MAX_INTERP: usize = 12;

/// Largest `|C|` for which explicitness falls back to searching every `K`.
pub const EXPLICIT_SEARCH_MAX_CONSTANTS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CompletenessMethod {
    /// No residual atoms; exact only for concise embeddings.
    Residual,
    /// Every duple `(c, T)` over Q checked directly.
    Bruteforce,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolutionK {
    pub solution: Vec<usize>,
    pub k: Vec<String>,
}

/// Result of the explicitness check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExplicitVerdict {
    /// A witness `K_S` for every solution, in solution order.
    Explicit(Vec<(Solution, ConstSet)>),
    /// Some solution has no witness.
    NotExplicit(Solution),
    /// The candidate from the context map failed and the search space is over the cap.
    Unknown(Solution),
}

impl ExplicitVerdict {
    pub fn is_explicit(&self) -> bool {
        matches!(self, ExplicitVerdict::Explicit(_))
    }

    fn label(&self) -> &'static str {
        match self {
            ExplicitVerdict::Explicit(_) => "yes",
            ExplicitVerdict::NotExplicit(_) => "no",
            ExplicitVerdict::Unknown(_) => "unknown",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub solutions: usize,
    pub atoms: usize,
    pub concise: bool,
    pub complete: bool,
    pub complete_method: CompletenessMethod,
    /// False when the residual test ran on a non-concise embedding and found residual atoms.
    pub complete_exact: bool,
    pub strongly_complete: bool,
    pub strongly_complete_method: &'static str,
    pub tight: bool,
    pub explicit: &'static str,
    pub residual_atoms: Vec<String>,
    pub per_solution_k: Option<Vec<SolutionK>>,
}

impl ClassificationReport {
    /// `key: value` lines in field order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| {
            out.push_str(k);
            out.push(':');
            if !v.is_empty() {
                out.push(' ');
                out.push_str(&v);
            }
            out.push('\n');
        };
        line("solutions", self.solutions.to_string());
        line("atoms", self.atoms.to_string());
        line("concise", self.concise.to_string());
        line("complete", self.complete.to_string());
        line(
            "complete_method",
            match self.complete_method {
                CompletenessMethod::Residual => "residual",
                CompletenessMethod::Bruteforce => "bruteforce",
            }
            .to_string(),
        );
        line("complete_exact", self.complete_exact.to_string());
        line("strongly_complete", self.strongly_complete.to_string());
        line("strongly_complete_method", self.strongly_complete_method.to_string());
        line("tight", self.tight.to_string());
        line("explicit", self.explicit.to_string());
        line("residual_atoms", self.residual_atoms.join(" "));
        if let Some(ks) = &self.per_solution_k {
            for k in ks {
                let s: Vec<String> = k.solution.iter().map(usize::to_string).collect();
                line(&format!("K[{}]", s.join(",")), k.k.join(" "));
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// An embedding together with a validated solution family and the models
/// every classification needs: `F_C(R⁺)` and each `F_S`.
pub struct Analysis<'a> {
    emb: &'a Embedding,
    opts: CrossingOptions,
    free: AtomizedModel,
    solutions: Vec<Solution>,
    models: Vec<AtomizedModel>,
}

impl<'a> Analysis<'a> {
    pub fn new(emb: &'a Embedding, solutions: Vec<Solution>, opts: &CrossingOptions) -> Result<Self> {
        let free = emb.freest_model(opts)?;
        Self::with_free(emb, free, solutions, opts)
    }

    /// Reuses a prebuilt `F_C(R⁺)`.
    pub fn with_free(
        emb: &'a Embedding,
        free: AtomizedModel,
        solutions: Vec<Solution>,
        opts: &CrossingOptions,
    ) -> Result<Self> {
        let models = solutions
            .iter()
            .map(|s| emb.freest_solution_from(&free, s, opts))
            .collect::<Result<Vec<_>>>()?;
        Ok(Analysis { emb, opts: opts.clone(), free, solutions, models })
    }

    pub fn embedding(&self) -> &Embedding {
        self.emb
    }

    pub fn free(&self) -> &AtomizedModel {
        &self.free
    }

    pub fn solutions(&self) -> &[Solution] {
        &self.solutions
    }

    /// `F_S` for each solution, aligned with [`Analysis::solutions`].
    pub fn solution_models(&self) -> &[AtomizedModel] {
        &self.models
    }

    /// `F = Σ_S F_S`.
    pub fn union_model(&self) -> Result<AtomizedModel> {
        let mut sets: Vec<Atom> = Vec::new();
        for m in &self.models {
            sets.extend(m.atoms().iter().cloned());
        }
        AtomizedModel::canonicalize(self.emb.table().clone(), self.emb.constants(), sets)
    }

    pub fn is_tight(&self) -> bool {
        self.models.iter().all(|m| m.is_tight_subset(&self.free))
    }

    pub fn is_concise(&self) -> Result<bool> {
        let q = self.emb.interp();
        for (s, m) in self.solutions.iter().zip(&self.models) {
            let restricted = m.restriction(q)?;
            let fq = self.freest_over_interp(s)?;
            if restricted != fq {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `F_Q(S)`.
    fn freest_over_interp(&self, s: &Solution) -> Result<AtomizedModel> {
        let duples: Vec<Duple> = s.members().iter().map(|&i| self.emb.gamma()[i].clone()).collect();
        freest_model(self.emb.table().clone(), self.emb.interp().clone(), &duples, &self.opts)
    }

    pub fn residual_atoms(&self) -> Result<Vec<Atom>> {
        let q = self.emb.interp();
        let fq = self.free.restriction(q)?;
        let restricted = self.models.iter().map(|m| m.restriction(q)).collect::<Result<Vec<_>>>()?;
        Ok(fq
            .atoms()
            .iter()
            .filter(|a| a.segment() != q)
            .filter(|a| restricted.iter().all(|r| r.is_atom_of(a) == AtomStatus::External))
            .cloned()
            .collect())
    }

    pub fn is_complete(&self, method: CompletenessMethod) -> Result<bool> {
        match method {
            CompletenessMethod::Residual => Ok(self.residual_atoms()?.is_empty()),
            CompletenessMethod::Bruteforce => self.is_complete_bruteforce(),
        }
    }

    fn is_complete_bruteforce(&self) -> Result<bool> {
        let q: Vec<usize> = self.emb.interp().iter().collect();
        if q.len() > BRUTEFORCE_MAX_INTERP {
            return Err(Error::resource(format!(
                "brute-force completeness is limited to |Q| <= {BRUTEFORCE_MAX_INTERP}, got {}",
                q.len()
            )));
        }
        let fqs = self.solutions.iter().map(|s| self.freest_over_interp(s)).collect::<Result<Vec<_>>>()?;
        for &c in &q {
            for mask in 1usize..(1 << q.len()) {
                let t: ConstSet = (0..q.len()).filter(|i| mask >> i & 1 == 1).map(|i| q[i]).collect();
                if t.contains(c) {
                    continue;
                }
                let r = Duple::positive(Term::constant(c), Term::new(t)?);
                if fqs.iter().all(|m| m.holds(&r)) && !self.free.holds(&r) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_strongly_complete(&self) -> Result<bool> {
        Ok(self.union_model()? == self.free)
    }

    /// `F_C(R⁺)^{∨K} ⊕ F_{C−K}(∅) == F_S`.
    fn grounding_matches(&self, fs: &AtomizedModel, k: &ConstSet) -> Result<bool> {
        let all = self.emb.constants();
        let grounded = self.free.grounding(k)?;
        let rest = all.difference(k);
        let candidate = if rest.is_empty() {
            grounded
        } else {
            grounded.direct_sum(&AtomizedModel::free(self.emb.table().clone(), rest)?)?
        };
        Ok(&candidate == fs)
    }

    /// `K_S = C − G_S` where `G_S` holds the context constants used only by members of S.
    pub fn context_candidate(&self, s: &Solution) -> Option<ConstSet> {
        let ctx = self.emb.context();
        if ctx.is_empty() {
            return None;
        }
        let mut used_outside = ConstSet::new();
        let mut all_ctx = ConstSet::new();
        for (&i, g) in ctx {
            all_ctx.union_with(g);
            if !s.contains(i) {
                used_outside.union_with(g);
            }
        }
        let g_s = all_ctx.difference(&used_outside);
        Some(self.emb.constants().difference(&g_s))
    }

    pub fn explicit(&self) -> Result<ExplicitVerdict> {
        let all = self.emb.constants();
        let q = self.emb.interp();
        let extra: Vec<usize> = all.difference(q).iter().collect();
        let mut witnesses = Vec::new();
        for (s, fs) in self.solutions.iter().zip(&self.models) {
            if let Some(k) = self.context_candidate(s) {
                if k.is_subset(&all) && q.is_subset(&k) && self.grounding_matches(fs, &k)? {
                    witnesses.push((s.clone(), k));
                    continue;
                }
            }
            if all.len() > EXPLICIT_SEARCH_MAX_CONSTANTS {
                return Ok(ExplicitVerdict::Unknown(s.clone()));
            }
            let mut found = None;
            for mask in 0usize..(1 << extra.len()) {
                let mut k = q.clone();
                for (i, &c) in extra.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        k.insert(c);
                    }
                }
                if self.grounding_matches(fs, &k)? {
                    found = Some(k);
                    break;
                }
            }
            match found {
                Some(k) => witnesses.push((s.clone(), k)),
                None => return Ok(ExplicitVerdict::NotExplicit(s.clone())),
            }
        }
        Ok(ExplicitVerdict::Explicit(witnesses))
    }

    /// Runs every check. Completeness uses the residual test, upgraded to
    /// brute force when that test is inconclusive and `|Q|` allows it.
    pub fn report(&self) -> Result<ClassificationReport> {
        let concise = self.is_concise()?;
        let residual = self.residual_atoms()?;
        let mut complete = residual.is_empty();
        let mut method = CompletenessMethod::Residual;
        let mut exact = complete || concise;
        if !exact && self.emb.interp().len() <= BRUTEFORCE_MAX_INTERP {
            complete = self.is_complete_bruteforce()?;
            method = CompletenessMethod::Bruteforce;
            exact = true;
        }
        let explicit = self.explicit()?;
        let table = self.emb.table();
        let per_solution_k = match &explicit {
            ExplicitVerdict::Explicit(ws) => Some(
                ws.iter()
                    .map(|(s, k)| SolutionK {
                        solution: s.members().iter().copied().collect(),
                        k: table.render(k).into_iter().map(String::from).collect(),
                    })
                    .collect(),
            ),
            _ => None,
        };
        Ok(ClassificationReport {
            solutions: self.solutions.len(),
            atoms: self.free.len(),
            concise,
            complete,
            complete_method: method,
            complete_exact: exact,
            strongly_complete: self.is_strongly_complete()?,
            strongly_complete_method: "model-equality",
            tight: self.is_tight(),
            explicit: explicit.label(),
            residual_atoms: residual.iter().map(|a| a.render(table)).collect(),
            per_solution_k,
        })
    }
}

/// Convenience wrappers over [`Analysis`].
impl Embedding {
    pub fn is_tight(&self, solutions: &[Solution], opts: &CrossingOptions) -> Result<bool> {
        Ok(Analysis::new(self, solutions.to_vec(), opts)?.is_tight())
    }

    pub fn is_concise(&self, solutions: &[Solution], opts: &CrossingOptions) -> Result<bool> {
        Analysis::new(self, solutions.to_vec(), opts)?.is_concise()
    }

    pub fn residual_atoms(&self, solutions: &[Solution], opts: &CrossingOptions) -> Result<Vec<Atom>> {
        Analysis::new(self, solutions.to_vec(), opts)?.residual_atoms()
    }

    pub fn is_complete(
        &self,
        solutions: &[Solution],
        method: CompletenessMethod,
        opts: &CrossingOptions,
    ) -> Result<bool> {
        Analysis::new(self, solutions.to_vec(), opts)?.is_complete(method)
    }

    pub fn is_strongly_complete(&self, solutions: &[Solution], opts: &CrossingOptions) -> Result<bool> {
        Analysis::new(self, solutions.to_vec(), opts)?.is_strongly_complete()
    }

    pub fn is_explicit(&self, solutions: &[Solution], opts: &CrossingOptions) -> Result<ExplicitVerdict> {
        Analysis::new(self, solutions.to_vec(), opts)?.explicit()
    }

    pub fn classify(&self, solutions: &[Solution], opts: &CrossingOptions) -> Result<ClassificationReport> {
        Analysis::new(self, solutions.to_vec(), opts)?.report()
    }
}
