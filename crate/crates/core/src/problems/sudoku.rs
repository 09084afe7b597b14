//! Sudoku on an s×s grid with b×b boxes (s = b²).

use super::encode::Enc;
use crate::algebra::{AtomizedModel, Duple, Term};
use crate::bitset::ConstSet;
use crate::embedding::{Embedding, ScopeFormula, Solution};
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// A hint `(n, i, j)`: number `n` in row `i`, column `j`, all 1-based.
pub type Hint = (usize, usize, usize);

/// Filled grid, row-major, numbers 1-based.
pub type Grid = Vec<usize>;

fn box_side(s: usize) -> Result<usize> {
    let b = (1..=s).find(|b| b * b >= s).unwrap_or(0);
    if s < 1 || b * b != s {
        return Err(Error::usage(format!("sudoku size must be a perfect square, got {s}")));
    }
    Ok(b)
}

/// 1-based box index of cell `(i, j)`.
fn zone(b: usize, i: usize, j: usize) -> usize {
    (i - 1) / b * b + (j - 1) / b + 1
}

fn nm(p: &str, n: usize, i: usize, j: usize) -> String {
    format!("{p}_{n}_{i}_{j}")
}

/// Hints placing 1..s in reading order across the first box.
pub fn first_box_hints(s: usize) -> Result<Vec<Hint>> {
    let b = box_side(s)?;
    Ok((0..s).map(|k| (k + 1, k / b + 1, k % b + 1)).collect())
}

pub(crate) fn validate(s: usize, hints: &[Hint]) -> Result<usize> {
    let b = box_side(s)?;
    for (k, &(n, i, j)) in hints.iter().enumerate() {
        if !(1..=s).contains(&n) || !(1..=s).contains(&i) || !(1..=s).contains(&j) {
            return Err(Error::usage(format!("hint {n} at ({i}, {j}) is out of range")));
        }
        for &(m, r, c) in &hints[..k] {
            let same_cell = (r, c) == (i, j);
            let clash = m == n && (r == i || c == j || zone(b, r, c) == zone(b, i, j));
            if same_cell || clash {
                return Err(Error::usage(format!("hint {n} at ({i}, {j}) clashes with {m} at ({r}, {c})")));
            }
        }
    }
    Ok(b)
}

fn peers(s: usize, b: usize, i: usize, j: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=s)
        .flat_map(move |r| (1..=s).map(move |c| (r, c)))
        .filter(move |&(r, c)| (r, c) != (i, j) && (r == i || c == j || zone(b, r, c) == zone(b, i, j)))
}

pub(crate) fn build(s: usize, hints: &[Hint]) -> Result<Embedding> {
    let b = validate(s, hints)?;
    let rng = || 1..=s;
    let triples: Vec<(usize, usize, usize)> =
        rng().flat_map(|n| rng().flat_map(move |i| (1..=s).map(move |j| (n, i, j)))).collect();
    let mut names = vec!["G".to_string()];
    for &(n, i, j) in &triples {
        for p in ["N", "W", "g"] {
            names.push(nm(p, n, i, j));
        }
    }
    for n in rng() {
        for k in rng() {
            names.push(format!("R_{n}_{k}"));
            names.push(format!("C_{n}_{k}"));
            names.push(format!("Z_{n}_{k}"));
        }
    }
    let enc = Enc::new(names)?;
    let with_g = |mut v: Vec<String>| {
        v.push("G".to_string());
        v
    };

    let mut rpos = Vec::new();
    for &(n, i, j) in &triples {
        let others: Vec<String> = rng().filter(|&m| m != n).map(|m| nm("W", m, i, j)).collect();
        rpos.push(enc.le(&others, with_g(vec![nm("N", n, i, j)])));
        rpos.push(enc.le([nm("N", n, i, j)], with_g(others)));
    }
    for &(n, i, j) in &triples {
        rpos.push(enc.le(
            [format!("R_{n}_{i}"), format!("C_{n}_{j}"), format!("Z_{n}_{}", zone(b, i, j))],
            [nm("N", n, i, j)],
        ));
    }
    for &(n, i, j) in hints {
        rpos.push(enc.le([nm("N", n, i, j)], ["G"]));
    }
    for &(n, i, j) in &triples {
        let n_ij = nm("N", n, i, j);
        let lhs: Vec<String> = peers(s, b, i, j).map(|(r, c)| nm("W", n, r, c)).collect();
        rpos.push(enc.le(lhs, with_g(vec![n_ij.clone()])));
        let row: Vec<String> = rng().filter(|&c| c != j).map(|c| nm("W", n, i, c)).collect();
        rpos.push(enc.le([&n_ij], with_g(row)));
        let col: Vec<String> = rng().filter(|&r| r != i).map(|r| nm("W", n, r, j)).collect();
        rpos.push(enc.le([&n_ij], with_g(col)));
        let bx: Vec<String> = peers(s, b, i, j)
            .filter(|&(r, c)| zone(b, r, c) == zone(b, i, j))
            .map(|(r, c)| nm("W", n, r, c))
            .collect();
        rpos.push(enc.le([&n_ij], with_g(bx)));
    }
    for &(n, i, j) in &triples {
        rpos.push(enc.le([nm("N", n, i, j)], ["G".to_string(), nm("g", n, i, j)]));
    }
    let goal: Vec<String> = rng()
        .flat_map(|n| rng().flat_map(move |k| [format!("R_{n}_{k}"), format!("C_{n}_{k}"), format!("Z_{n}_{k}")]))
        .collect();
    rpos.push(enc.le(goal, ["G"]));

    let mut rneg = Vec::new();
    for &(n, i, j) in &triples {
        rneg.push(enc.nle([nm("N", n, i, j), nm("W", n, i, j)], ["G"]));
    }
    for (label, key) in [("R", 0usize), ("C", 1), ("Z", 2)] {
        for m in rng() {
            for x in rng() {
                let rhs: Vec<String> = triples
                    .iter()
                    .filter(|&&(n, i, j)| (n, [i, j, zone(b, i, j)][key]) != (m, x))
                    .map(|&(n, i, j)| nm("N", n, i, j))
                    .collect();
                rneg.push(enc.nle([format!("{label}_{m}_{x}")], rhs));
            }
        }
    }
    for i in rng() {
        for j in rng() {
            rneg.push(enc.nle(rng().map(|n| nm("W", n, i, j)), ["G"]));
        }
    }

    let mut gamma = Vec::new();
    let mut context = BTreeMap::new();
    for &(n, i, j) in &triples {
        context.insert(gamma.len(), enc.set([nm("g", n, i, j)]));
        gamma.push(enc.le([nm("N", n, i, j)], ["G"]));
    }
    let scope = ScopeFormula::And(
        (0..s * s)
            .map(|cell| ScopeFormula::Or(rng().map(|n| ScopeFormula::leaf((n - 1) * s * s + cell)).collect()))
            .collect(),
    );
    let interp = enc.set(std::iter::once("G".to_string()).chain(triples.iter().map(|&(n, i, j)| nm("N", n, i, j))));
    Embedding::new(enc.table.clone(), interp, rpos, rneg, gamma, scope)?.with_context(context)
}

/// Every completion of the hints.
pub fn oracle(s: usize, hints: &[Hint]) -> Result<Vec<Grid>> {
    let b = validate(s, hints)?;
    let mut grid = vec![0usize; s * s];
    for &(n, i, j) in hints {
        grid[(i - 1) * s + j - 1] = n;
    }
    fn go(s: usize, b: usize, grid: &mut Vec<usize>, pos: usize, out: &mut Vec<Grid>) {
        if pos == s * s {
            out.push(grid.clone());
            return;
        }
        if grid[pos] != 0 {
            return go(s, b, grid, pos + 1, out);
        }
        let (i, j) = (pos / s + 1, pos % s + 1);
        for n in 1..=s {
            if peers(s, b, i, j).any(|(r, c)| grid[(r - 1) * s + c - 1] == n) {
                continue;
            }
            grid[pos] = n;
            go(s, b, grid, pos + 1, out);
            grid[pos] = 0;
        }
    }
    let mut out = Vec::new();
    go(s, b, &mut grid, 0, &mut out);
    Ok(out)
}

pub fn grid_solution(s: usize, grid: &[usize]) -> Solution {
    grid.iter().enumerate().map(|(cell, &n)| (n - 1) * s * s + cell).collect()
}

pub(crate) fn render(s: usize, sol: &Solution) -> (String, bool) {
    let mut out = String::new();
    let mut complete = true;
    for i in 0..s {
        let row: Vec<String> = (0..s)
            .map(|j| {
                let cell = i * s + j;
                let ns: Vec<usize> = (1..=s).filter(|n| sol.contains((n - 1) * s * s + cell)).collect();
                match ns.as_slice() {
                    [n] => n.to_string(),
                    [] => {
                        complete = false;
                        "?".to_string()
                    }
                    _ => {
                        complete = false;
                        "!".to_string()
                    }
                }
            })
            .collect();
        let width = s.to_string().len();
        out.push_str(&row.iter().map(|c| format!("{c:>width$}")).collect::<Vec<_>>().join(" "));
        out.push('\n');
    }
    (out, complete)
}

/// Greedy choice of sentences `W ≤ N ⊙ W' ⊙ G` and `W ≤ W' ⊙ W'' ⊙ G` that
/// hold in every solution model and separate the atoms of `free` missing from
/// those models.
pub fn strengthening_sentences(e: &Embedding, free: &AtomizedModel, solution_models: &[AtomizedModel]) -> Result<Vec<Duple>> {
    let t = e.table();
    let g = t.require("G")?;
    let mut ws = ConstSet::new();
    let mut others = ConstSet::new();
    for (id, name) in t.names().iter().enumerate() {
        if name.starts_with("W_") {
            ws.insert(id);
            others.insert(id);
        } else if name.starts_with("N_") {
            others.insert(id);
        }
    }
    let mut targets: Vec<ConstSet> = free
        .atoms()
        .iter()
        .filter(|a| !solution_models.iter().any(|m| m.contains_atom(a)))
        .map(|a| a.segment().clone())
        .collect();
    let holds_everywhere = |d: &Duple| solution_models.iter().all(|m| m.holds(d));
    let mut chosen = Vec::new();
    while let Some(phi) = targets.first().cloned() {
        let mut best: Option<(usize, Duple)> = None;
        let lhs_opts: Vec<usize> = phi.intersection(&ws).iter().collect();
        let rhs_opts: Vec<usize> = others.difference(&phi).iter().collect();
        for &w in &lhs_opts {
            for (k, &x) in rhs_opts.iter().enumerate() {
                for &y in &rhs_opts[k + 1..] {
                    if !ws.contains(x) && !ws.contains(y) {
                        continue;
                    }
                    let rhs: ConstSet = [x, y, g].into_iter().collect();
                    let d = Duple::positive(Term::constant(w), Term::new(rhs.clone())?);
                    let gain = targets.iter().filter(|a| a.contains(w) && !a.intersects(&rhs)).count();
                    if best.as_ref().is_some_and(|(b, _)| *b >= gain) || !holds_everywhere(&d) {
                        continue;
                    }
                    best = Some((gain, d));
                }
            }
        }
        let Some((_, d)) = best else {
            return Err(Error::infeasible("no strengthening sentence separates a remaining atom"));
        };
        targets.retain(|a| !(a.intersects(d.lhs.constants()) && !a.intersects(d.rhs.constants())));
        chosen.push(d);
    }
    Ok(chosen)
}

pub(crate) fn conflicts(e: &Embedding, s: usize) -> Vec<(usize, usize)> {
    let t = e.table();
    let mut out = Vec::new();
    for i in 1..=s {
        for j in 1..=s {
            for n in 1..=s {
                for m in n + 1..=s {
                    if let (Some(a), Some(b)) = (t.id(&nm("g", n, i, j)), t.id(&nm("g", m, i, j))) {
                        out.push((a, b));
                    }
                }
            }
        }
    }
    out
}
