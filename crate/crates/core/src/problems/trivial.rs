//! Three elements where `a` or `b` (or both) is mapped to `c`.

use super::encode::Enc;
use crate::embedding::{Embedding, ScopeFormula, Solution};
use crate::error::{Error, Result};
use std::collections::BTreeMap;

pub(crate) fn build(variant: u8) -> Result<Embedding> {
    let names: &[&str] = match variant {
        1 => &["a", "b", "c"],
        2 => &["a", "b", "c", "d", "e"],
        3 => &["a", "b", "c", "d", "e", "m"],
        4 => &["a", "b", "c", "d", "e"],
        5 => &["a", "b", "c", "g", "h"],
        _ => return Err(Error::usage(format!("trivial example has variants 1..=5, got {variant}"))),
    };
    let enc = Enc::new(names.iter().map(|s| s.to_string()).collect())?;
    let mut rpos = Vec::new();
    if (2..=4).contains(&variant) {
        rpos.push(enc.le(["d"], ["a"]));
        rpos.push(enc.le(["d"], ["c"]));
        rpos.push(enc.le(["e"], ["b"]));
        rpos.push(enc.le(["e"], ["c"]));
    }
    match variant {
        3 => rpos.push(enc.le(["c"], ["a", "b", "m"])),
        4 => rpos.push(enc.le(["c"], ["a", "b"])),
        5 => {
            rpos.push(enc.le(["a"], ["c", "g"]));
            rpos.push(enc.le(["b"], ["c", "h"]));
        }
        _ => {}
    }
    let gamma = vec![enc.le(["a"], ["c"]), enc.le(["b"], ["c"])];
    let scope = ScopeFormula::Or(vec![ScopeFormula::leaf(0), ScopeFormula::leaf(1)]);
    let e = Embedding::new(enc.table.clone(), enc.set(["a", "b", "c"]), rpos, vec![], gamma, scope)?;
    if variant == 5 {
        let ctx = BTreeMap::from([(0, enc.set(["g"])), (1, enc.set(["h"]))]);
        return e.with_context(ctx);
    }
    Ok(e)
}

/// `S₁ = {a≤c}`, `S₂ = {b≤c}`, `S₃ = {a≤c, b≤c}`.
pub(crate) fn solutions() -> Vec<Solution> {
    vec![Solution::new([0]), Solution::new([1]), Solution::new([0, 1])]
}
