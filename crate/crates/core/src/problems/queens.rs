//! N-Queens completion.

use super::encode::Enc;
use crate::algebra::Duple;
use crate::embedding::{Embedding, ScopeFormula, Solution};
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// A full placement: `cols[i]` is the column of the queen in row `i` (0-based).
pub type Placement = Vec<usize>;

fn name(prefix: &str, i: usize, j: usize) -> String {
    format!("{prefix}_{}_{}", i + 1, j + 1)
}

pub fn attacks((i, j): (usize, usize), (r, s): (usize, usize)) -> bool {
    (i, j) != (r, s) && (i == r || j == s || i.abs_diff(r) == j.abs_diff(s))
}

pub(crate) fn validate(m: usize, fixed: &[(usize, usize)]) -> Result<()> {
    if m < 2 {
        return Err(Error::usage("queens board size must be at least 2"));
    }
    for (k, &(i, j)) in fixed.iter().enumerate() {
        if i >= m || j >= m {
            return Err(Error::usage(format!("fixed queen ({}, {}) is off the board", i + 1, j + 1)));
        }
        if fixed[..k].iter().any(|&p| p == (i, j) || attacks(p, (i, j))) {
            return Err(Error::usage(format!("fixed queen ({}, {}) clashes with another", i + 1, j + 1)));
        }
    }
    Ok(())
}

pub(crate) fn build(m: usize, variant: u8, fixed: &[(usize, usize)]) -> Result<Embedding> {
    validate(m, fixed)?;
    if !(1..=3).contains(&variant) {
        return Err(Error::usage(format!("queens has variants 1..=3, got {variant}")));
    }
    let board: Vec<(usize, usize)> = (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).collect();
    let mut names = vec!["B".to_string()];
    for &(i, j) in &board {
        for p in ["Q", "E", "g", "h"] {
            names.push(name(p, i, j));
        }
    }
    names.extend((1..=m).map(|i| format!("R_{i}")));
    names.extend((1..=m).map(|j| format!("C_{j}")));
    let with_u = variant == 3;
    if with_u {
        names.push("U".to_string());
    }
    let enc = Enc::new(names)?;
    let q = |i, j| name("Q", i, j);
    let e = |i, j| name("E", i, j);
    let rhs_b = |mut t: Vec<String>| {
        t.push("B".to_string());
        if with_u {
            t.push("U".to_string());
        }
        t
    };

    let mut rpos = Vec::new();
    for &(i, j) in &board {
        rpos.push(enc.le([name("g", i, j), q(i, j)], ["B".to_string(), name("g", i, j)]));
        rpos.push(enc.le([name("h", i, j), e(i, j)], ["B".to_string(), name("h", i, j)]));
    }
    for &(i, j) in &board {
        rpos.push(enc.le([format!("R_{}", i + 1), format!("C_{}", j + 1)], [q(i, j)]));
    }
    for &(i, j) in fixed {
        rpos.push(enc.le([q(i, j)], ["B"]));
    }
    if variant >= 2 {
        for &(i, j) in &board {
            let lhs: Vec<String> =
                board.iter().filter(|&&p| attacks(p, (i, j))).map(|&(r, s)| e(r, s)).collect();
            rpos.push(enc.le(lhs, rhs_b(vec![q(i, j)])));
        }
        for &(i, j) in &board {
            let row: Vec<String> = (0..m).filter(|&s| s != j).map(|s| e(i, s)).collect();
            rpos.push(enc.le([q(i, j)], rhs_b(row)));
            let col: Vec<String> = (0..m).filter(|&r| r != i).map(|r| e(r, j)).collect();
            rpos.push(enc.le([q(i, j)], rhs_b(col)));
        }
    }
    let rc: Vec<String> =
        (1..=m).map(|i| format!("R_{i}")).chain((1..=m).map(|j| format!("C_{j}"))).collect();
    rpos.push(enc.le(rc, ["B"]));

    let mut rneg = Vec::new();
    for &(i, j) in &board {
        let rhs = if with_u { vec!["B", "U"] } else { vec!["B"] };
        rneg.push(enc.nle([q(i, j), e(i, j)], rhs));
    }
    if variant == 1 {
        for (k, &a) in board.iter().enumerate() {
            for &b in &board[k + 1..] {
                if attacks(a, b) {
                    rneg.push(enc.nle([q(a.0, a.1), q(b.0, b.1)], ["B"]));
                }
            }
        }
    }
    let all_e: Vec<String> = board.iter().map(|&(i, j)| e(i, j)).collect();
    for x in 0..m {
        let mut rhs = all_e.clone();
        rhs.extend(board.iter().filter(|&&(i, _)| i != x).map(|&(i, j)| q(i, j)));
        rneg.push(enc.nle([format!("R_{}", x + 1)], rhs));
    }
    for y in 0..m {
        let mut rhs = all_e.clone();
        rhs.extend(board.iter().filter(|&&(_, j)| j != y).map(|&(i, j)| q(i, j)));
        rneg.push(enc.nle([format!("C_{}", y + 1)], rhs));
    }

    let cells = board.len();
    let mut gamma = Vec::new();
    let mut context = BTreeMap::new();
    for &(i, j) in &board {
        context.insert(gamma.len(), enc.set([name("g", i, j)]));
        gamma.push(enc.le([q(i, j)], ["B"]));
    }
    for &(i, j) in &board {
        context.insert(gamma.len(), enc.set([name("h", i, j)]));
        gamma.push(enc.le([e(i, j)], ["B"]));
    }
    let scope = ScopeFormula::And(
        (0..cells).map(|c| ScopeFormula::Or(vec![ScopeFormula::leaf(c), ScopeFormula::leaf(cells + c)])).collect(),
    );
    let interp = enc.set(
        std::iter::once("B".to_string()).chain(board.iter().flat_map(|&(i, j)| [q(i, j), e(i, j)])),
    );
    Embedding::new(enc.table.clone(), interp, rpos, rneg, gamma, scope)?.with_context(context)
}

/// All completions of the fixed queens, in lexicographic order of placements.
pub fn oracle(m: usize, fixed: &[(usize, usize)]) -> Vec<Placement> {
    fn go(m: usize, fixed: &[(usize, usize)], cols: &mut Vec<usize>, out: &mut Vec<Placement>) {
        let i = cols.len();
        if i == m {
            out.push(cols.clone());
            return;
        }
        for j in 0..m {
            if fixed.iter().any(|&(r, s)| (r == i && s != j) || (s == j && r != i)) {
                continue;
            }
            if cols.iter().enumerate().any(|(r, &s)| attacks((r, s), (i, j))) {
                continue;
            }
            cols.push(j);
            go(m, fixed, cols, out);
            cols.pop();
        }
    }
    let mut out = Vec::new();
    go(m, fixed, &mut Vec::with_capacity(m), &mut out);
    out
}

/// Γ subset of a placement: `Q ≤ B` on queen cells, `E ≤ B` elsewhere.
pub fn placement_solution(m: usize, cols: &[usize]) -> Solution {
    (0..m)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .map(|(i, j)| if cols[i] == j { i * m + j } else { m * m + i * m + j })
        .collect()
}

pub(crate) fn render(m: usize, s: &Solution) -> (String, bool) {
    let mut out = String::new();
    let mut complete = true;
    for i in 0..m {
        for j in 0..m {
            let c = i * m + j;
            out.push(match (s.contains(c), s.contains(m * m + c)) {
                (true, false) => 'Q',
                (false, true) => '.',
                (false, false) => {
                    complete = false;
                    '?'
                }
                (true, true) => {
                    complete = false;
                    '!'
                }
            });
        }
        out.push('\n');
    }
    let queens = out.chars().filter(|&c| c == 'Q').count();
    (out, complete && queens == m)
}

/// Duples forcing the cells whose state is shared by every completion.
pub fn strengthening_sentences(e: &Embedding, m: usize, fixed: &[(usize, usize)], variant: u8) -> Result<Vec<Duple>> {
    let sols = oracle(m, fixed);
    if sols.is_empty() {
        return Ok(Vec::new());
    }
    let t = e.table();
    let mut rhs = vec![t.require("B")?];
    if variant == 3 {
        rhs.push(t.require("U")?);
    }
    let rhs = crate::algebra::Term::new(rhs.into_iter().collect())?;
    let mut queens = crate::bitset::ConstSet::new();
    let mut empties = crate::bitset::ConstSet::new();
    for i in 0..m {
        for j in 0..m {
            if sols.iter().all(|c| c[i] == j) {
                queens.insert(t.require(&name("Q", i, j))?);
            } else if sols.iter().all(|c| c[i] != j) {
                empties.insert(t.require(&name("E", i, j))?);
            }
        }
    }
    let mut out = Vec::new();
    for set in [queens, empties] {
        if !set.is_empty() {
            out.push(Duple::positive(crate::algebra::Term::new(set)?, rhs.clone()));
        }
    }
    Ok(out)
}

pub(crate) fn conflicts(e: &Embedding, m: usize) -> Vec<(usize, usize)> {
    let t = e.table();
    (0..m)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .filter_map(|(i, j)| Some((t.id(&name("g", i, j))?, t.id(&name("h", i, j))?)))
        .collect()
}
