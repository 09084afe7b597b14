//! Entailment by saturating the term preorder, independent of atom crossing.

use super::Duple;
use crate::constants::ConstantTable;
use crate::error::{Error, Result};

/// Largest constant table the oracle accepts.
pub const ORACLE_MAX_CONSTANTS: usize = 12;

/// Decides `R⁺ ⊢ d` for a positive duple `d`.
///
/// Works on the least preorder over all nonempty terms that contains set
/// inclusion and `rpos` and is closed under transitivity and the join rule.
/// Under inclusion and the join rule the down-set of a term `v` is every
/// nonempty subset of one mask `down[v]`, so the preorder is stored as one
/// mask per term and transitivity folds `down[t]` into `down[v]` for each
/// `t ⊆ down[v]`.
pub fn entails_oracle(table: &ConstantTable, rpos: &[Duple], d: &Duple) -> Result<bool> {
    let n = table.len();
    if n > ORACLE_MAX_CONSTANTS {
        return Err(Error::resource(format!(
            "entailment oracle is limited to {ORACLE_MAX_CONSTANTS} constants, got {n}"
        )));
    }
    if !d.is_positive() || rpos.iter().any(|r| !r.is_positive()) {
        return Err(Error::usage("entailment oracle takes positive duples only"));
    }
    let mask = |t: &super::Term| -> Result<usize> {
        let mut m = 0usize;
        for c in t.constants().iter() {
            if c >= n {
                return Err(Error::usage("duple mentions a constant outside the table"));
            }
            m |= 1 << c;
        }
        Ok(m)
    };
    let terms = 1usize << n;
    let mut down: Vec<usize> = (0..terms).collect();
    for r in rpos {
        let (l, rr) = (mask(&r.lhs)?, mask(&r.rhs)?);
        down[rr] |= l;
    }
    loop {
        let mut changed = false;
        for v in 1..terms {
            let mut acc = down[v];
            // Every nonempty subset t of acc.
            let base = down[v];
            let mut t = base;
            while t != 0 {
                acc |= down[t];
                t = (t - 1) & base;
            }
            if acc != down[v] {
                down[v] = acc;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let (l, r) = (mask(&d.lhs)?, mask(&d.rhs)?);
    Ok(l & !down[r] == 0)
}
