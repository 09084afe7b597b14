//! n×n black/white grids with at least one fully black column.

use super::encode::Enc;
use crate::algebra::Duple;
use crate::embedding::{Embedding, ScopeFormula, Solution};
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// Largest grid side accepted (the second embedding lists all 2^(n²) grids).
pub const MAX_SIDE: usize = 4;

fn cell(prefix: &str, i: usize, j: usize) -> String {
    format!("{prefix}_{i}_{j}")
}

fn cells(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (1..=n).map(move |j| (i, j)))
}

/// Grid cells in row-major order; `true` is black.
pub type Grid = Vec<bool>;

pub fn has_bar(n: usize, grid: &[bool]) -> bool {
    (0..n).any(|j| (0..n).all(|i| grid[i * n + j]))
}

fn all_grids(n: usize) -> impl Iterator<Item = Grid> {
    let cells = n * n;
    (0u64..(1 << cells)).map(move |mask| (0..cells).map(|c| mask >> c & 1 == 1).collect())
}

pub(crate) fn build(n: usize, variant: u8, distinct_q: bool) -> Result<Embedding> {
    if n == 0 || n > MAX_SIDE {
        return Err(Error::usage(format!("vertical bars grid side must be in 1..={MAX_SIDE}")));
    }
    if variant != 1 && variant != 2 {
        return Err(Error::usage(format!("vertical bars has variants 1 and 2, got {variant}")));
    }
    let mut names = Vec::new();
    for (i, j) in cells(n) {
        for p in ["b", "w", "q", "g", "h"] {
            names.push(cell(p, i, j));
        }
    }
    if variant == 1 {
        names.extend((1..=n).map(|j| format!("n_{j}")));
    } else {
        names.push("v".to_string());
    }
    let enc = Enc::new(names)?;
    let qs: Vec<String> = cells(n).map(|(i, j)| cell("q", i, j)).collect();
    let interp = enc.set(cells(n).flat_map(|(i, j)| ["b", "w", "q"].map(|p| cell(p, i, j))));

    let mut rpos = Vec::new();
    let mut rneg = Vec::new();
    if variant == 1 {
        let ns: Vec<String> = (1..=n).map(|j| format!("n_{j}")).collect();
        rneg.push(enc.nle(&ns, &qs));
        for (i, j) in cells(n) {
            rneg.push(enc.nle([cell("w", i, j), cell("b", i, j)], &qs));
        }
        for (i, j) in cells(n) {
            rpos.push(enc.le([format!("n_{j}")], [cell("w", i, j)]));
        }
    } else {
        for grid in all_grids(n) {
            let term: Vec<String> = cells(n)
                .zip(&grid)
                .map(|((i, j), &black)| cell(if black { "b" } else { "w" }, i, j))
                .collect();
            if has_bar(n, &grid) {
                rpos.push(enc.le(["v"], &term));
            } else {
                rneg.push(enc.nle(["v"], &term));
            }
        }
        rpos.push(enc.le(["v"], &qs));
        for (i, j) in cells(n) {
            rneg.push(enc.nle([cell("w", i, j), cell("b", i, j)], &qs));
        }
    }
    for (i, j) in cells(n) {
        rpos.push(enc.le([cell("q", i, j)], [cell("w", i, j), cell("b", i, j)]));
    }
    for (i, j) in cells(n) {
        let (q, w, b, g, h) = (cell("q", i, j), cell("w", i, j), cell("b", i, j), cell("g", i, j), cell("h", i, j));
        rpos.extend(enc.eq([&g, &q], [&w, &g]));
        rpos.extend(enc.eq([&h, &q], [&b, &h]));
    }
    if distinct_q {
        for (k, q) in qs.iter().enumerate() {
            let others: Vec<&String> = qs.iter().enumerate().filter(|&(l, _)| l != k).map(|(_, o)| o).collect();
            if !others.is_empty() {
                rneg.push(enc.nle([q], others));
            }
        }
    }

    let mut gamma = Vec::new();
    let mut clauses = Vec::new();
    let mut context = BTreeMap::new();
    for (i, j) in cells(n) {
        let (q, w, b) = (cell("q", i, j), cell("w", i, j), cell("b", i, j));
        let base = gamma.len();
        gamma.extend(enc.eq([&q], [&w]));
        gamma.extend(enc.eq([&q], [&b]));
        clauses.push(ScopeFormula::Or(vec![
            ScopeFormula::equality(base, base + 1),
            ScopeFormula::equality(base + 2, base + 3),
        ]));
        let (g, h) = (enc.set([cell("g", i, j)]), enc.set([cell("h", i, j)]));
        context.insert(base, g.clone());
        context.insert(base + 1, g);
        context.insert(base + 2, h.clone());
        context.insert(base + 3, h);
    }
    Embedding::new(enc.table.clone(), interp, rpos, rneg, gamma, ScopeFormula::And(clauses))?.with_context(context)
}

/// Every grid with a black column.
pub fn oracle(n: usize) -> Vec<Grid> {
    all_grids(n).filter(|g| has_bar(n, g)).collect()
}

/// The separator-set subset asserting each cell's colour.
pub fn grid_solution(grid: &[bool]) -> Solution {
    grid.iter()
        .enumerate()
        .flat_map(|(c, &black)| if black { [4 * c + 2, 4 * c + 3] } else { [4 * c, 4 * c + 1] })
        .collect()
}

pub(crate) fn render(n: usize, s: &Solution) -> (String, bool) {
    let mut out = String::new();
    let mut complete = true;
    for i in 0..n {
        for j in 0..n {
            let c = i * n + j;
            let white = s.contains(4 * c) && s.contains(4 * c + 1);
            let black = s.contains(4 * c + 2) && s.contains(4 * c + 3);
            out.push(match (white, black) {
                (true, false) => 'w',
                (false, true) => 'b',
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
    (out, complete)
}

/// Sentences `v ≤ T` where each cell of T is `q`, `b` or `w`, with at least one
/// `q` and one fixed colour, kept when filling the `q` cells from any bar grid
/// still yields a bar grid.
pub fn strengthening_sentences(e: &Embedding, n: usize) -> Result<Vec<Duple>> {
    let table = e.table();
    let v = table.require("v")?;
    let bars = oracle(n);
    let cells = n * n;
    let mut out = Vec::new();
    let mut pattern = vec![0u8; cells];
    // 0 = q, 1 = b, 2 = w
    for code in 0..3usize.pow(cells as u32) {
        let mut c = code;
        for p in pattern.iter_mut() {
            *p = (c % 3) as u8;
            c /= 3;
        }
        let qs = pattern.iter().filter(|&&p| p == 0).count();
        if qs == 0 || qs == cells {
            continue;
        }
        let keeps = bars.iter().all(|g| {
            let filled: Vec<bool> =
                pattern.iter().zip(g).map(|(&p, &black)| if p == 0 { black } else { p == 1 }).collect();
            has_bar(n, &filled)
        });
        if !keeps {
            continue;
        }
        let mut rhs = crate::bitset::ConstSet::new();
        for (k, &p) in pattern.iter().enumerate() {
            let (i, j) = (k / n + 1, k % n + 1);
            let prefix = ["q", "b", "w"][p as usize];
            rhs.insert(table.require(&cell(prefix, i, j))?);
        }
        out.push(Duple::positive(crate::algebra::Term::constant(v), crate::algebra::Term::new(rhs)?));
    }
    Ok(out)
}

pub(crate) fn conflicts(e: &Embedding, n: usize) -> Vec<(usize, usize)> {
    let t = e.table();
    cells(n)
        .filter_map(|(i, j)| Some((t.id(&cell("g", i, j))?, t.id(&cell("h", i, j))?)))
        .collect()
}
