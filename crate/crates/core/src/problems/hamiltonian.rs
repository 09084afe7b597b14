//! Undirected Hamiltonian paths.

use super::encode::Enc;
use crate::embedding::{Embedding, ScopeFormula, Solution};
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Simple undirected graph; vertices and edges are 0-based internally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::usage(format!("bad edge {} {} for {n} vertices", u + 1, v + 1)));
            }
            let e = (u.min(v), u.max(v));
            if out.contains(&e) {
                return Err(Error::usage(format!("duplicate edge {} {}", e.0 + 1, e.1 + 1)));
            }
            out.push(e);
        }
        Ok(Graph { n, edges: out })
    }

    pub fn vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn incident(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&k| self.edges[k].0 == v || self.edges[k].1 == v).collect()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.iter().position(|&e| e == (u.min(v), u.max(v)))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &(a, b) in &self.edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x == u && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Number of 3-edge sets meeting at vertex `v`.
    pub fn triples_at(&self, v: usize) -> usize {
        let d = self.incident(v).len();
        d * d.saturating_sub(1) * d.saturating_sub(2) / 6
    }
}

/// Edge-list text: the vertex count, then one `u v` pair per line (1-based).
impl FromStr for Graph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Graph> {
        let mut nums = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .flat_map(str::split_whitespace)
            .map(|t| t.parse::<usize>().map_err(|_| Error::usage(format!("bad graph token `{t}`"))));
        let n = nums.next().ok_or_else(|| Error::usage("graph text is empty"))??;
        let rest: Vec<usize> = nums.collect::<Result<_>>()?;
        if rest.len() % 2 != 0 {
            return Err(Error::usage("graph edge list has an odd number of endpoints"));
        }
        if rest.iter().any(|&v| v == 0) {
            return Err(Error::usage("graph vertices are numbered from 1"));
        }
        Graph::new(n, rest.chunks(2).map(|c| (c[0] - 1, c[1] - 1)))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for &(u, v) in &self.edges {
            writeln!(f, "{} {}", u + 1, v + 1)?;
        }
        Ok(())
    }
}

fn v(i: usize) -> String {
    format!("v_{}", i + 1)
}
fn w(i: usize) -> String {
    format!("w_{}", i + 1)
}
fn e(k: usize) -> String {
    format!("e_{}", k + 1)
}
fn p(l: usize) -> String {
    format!("p_{}", l + 1)
}
fn h(k: usize, l: usize, side: u8) -> String {
    format!("h_{}_{}_{side}", k + 1, l + 1)
}

/// Block sizes of the encoding, for count checks.
pub fn expected_counts(g: &Graph, variant: u8) -> (usize, usize) {
    let (n, m) = (g.n, g.edges.len());
    let tri: usize = (0..n).map(|i| g.triples_at(i)).sum();
    match variant {
        1 => (1 + 2 * m + tri, n + 1),
        2 => (4 + n + 2 * m + tri, 2 * n + 1),
        _ => (4 + n + m + tri + 12 * m * n.saturating_sub(1), 2 * n + 1),
    }
}

pub(crate) fn build(g: &Graph, variant: u8) -> Result<Embedding> {
    if !(1..=3).contains(&variant) {
        return Err(Error::usage(format!("hamiltonian has variants 1..=3, got {variant}")));
    }
    if g.n < 2 {
        return Err(Error::usage("hamiltonian needs at least 2 vertices"));
    }
    let (n, m) = (g.n, g.edges.len());
    let pathy = variant >= 2;
    let mut names: Vec<String> = ["P", "U", "x"].map(String::from).to_vec();
    names.extend((0..n).map(v));
    names.extend((0..m).map(e));
    if pathy {
        names.extend((0..n).map(w));
        names.extend((0..n - 1).map(p));
    }
    if variant == 3 {
        for k in 0..m {
            for l in 0..n - 1 {
                names.push(h(k, l, 0));
                names.push(h(k, l, 1));
            }
        }
    } else {
        names.extend((0..m).map(|k| format!("g_{}", k + 1)));
    }
    let enc = Enc::new(names)?;

    let mut rpos = Vec::new();
    for (k, &(a, b)) in g.edges.iter().enumerate() {
        rpos.push(enc.le([v(a), v(b)], [e(k), "U".into()]));
    }
    for i in 0..n {
        let inc = g.incident(i);
        for (x, &a) in inc.iter().enumerate() {
            for (y, &b) in inc.iter().enumerate().skip(x + 1) {
                for &c in &inc[y + 1..] {
                    rpos.push(enc.le(["x"], [e(a), e(b), e(c)]));
                }
            }
        }
    }
    if variant == 3 {
        for (k, &(a, b)) in g.edges.iter().enumerate() {
            for l in 0..n - 1 {
                for (side, (first, second)) in [(0u8, (a, b)), (1, (b, a))] {
                    let hc = h(k, l, side);
                    rpos.extend(enc.eq([&hc, &e(k)], [&p(l), &hc]));
                    rpos.extend(enc.eq([&hc, &v(first)], [&w(l), &hc]));
                    rpos.extend(enc.eq([&hc, &v(second)], [&w(l + 1), &hc]));
                }
            }
        }
    } else {
        for k in 0..m {
            rpos.push(enc.le([e(k)], ["P".to_string(), format!("g_{}", k + 1)]));
        }
    }
    rpos.push(enc.le((0..n).map(v), ["P", "U"]));
    if pathy {
        for l in 0..n - 1 {
            rpos.push(enc.le([w(l), w(l + 1)], [p(l), "U".into()]));
        }
        rpos.extend(enc.eq(["P".to_string()], (0..n - 1).map(p)));
        rpos.extend(enc.eq((0..n).map(v), (0..n).map(w)));
    }

    let mut rneg = Vec::new();
    for i in 0..n {
        let mut rhs: Vec<String> = (0..m).filter(|&k| g.edges[k].0 != i && g.edges[k].1 != i).map(e).collect();
        rhs.extend((0..n).filter(|&j| j != i).map(v));
        rhs.push("U".into());
        rneg.push(enc.nle([v(i)], rhs));
    }
    rneg.push(enc.nle(["x"], ["P", "U"]));
    if pathy {
        for i in 0..n {
            let mut rhs: Vec<String> = (0..n - 1).filter(|&l| l + 1 != i && l != i).map(p).collect();
            rhs.extend((0..n).filter(|&j| j != i).map(w));
            rhs.push("U".into());
            rneg.push(enc.nle([w(i)], rhs));
        }
    }

    let mut gamma = Vec::new();
    let mut context = BTreeMap::new();
    let scope;
    let interp;
    if variant == 3 {
        let mut clauses = Vec::new();
        for i in 0..n {
            let mut opts = Vec::new();
            for j in 0..n {
                let base = gamma.len();
                gamma.extend(enc.eq([v(i)], [w(j)]));
                opts.push(ScopeFormula::equality(base, base + 1));
                let ctx = enc.set(
                    g.edges
                        .iter()
                        .enumerate()
                        .flat_map(|(k, &(a, b))| {
                            let mut hs = Vec::new();
                            for (side, (first, second)) in [(0u8, (a, b)), (1, (b, a))] {
                                if first == i && j < n - 1 {
                                    hs.push(h(k, j, side));
                                }
                                if second == i && j > 0 {
                                    hs.push(h(k, j - 1, side));
                                }
                            }
                            hs
                        })
                        .collect::<Vec<_>>(),
                );
                if !ctx.is_empty() {
                    context.insert(base, ctx.clone());
                    context.insert(base + 1, ctx);
                }
            }
            clauses.push(ScopeFormula::Or(opts));
        }
        for l in 0..n - 1 {
            let mut opts = Vec::new();
            for k in 0..m {
                let base = gamma.len();
                gamma.extend(enc.eq([e(k)], [p(l)]));
                opts.push(ScopeFormula::equality(base, base + 1));
                let ctx = enc.set([h(k, l, 0), h(k, l, 1)]);
                context.insert(base, ctx.clone());
                context.insert(base + 1, ctx);
            }
            clauses.push(ScopeFormula::Or(opts));
        }
        scope = ScopeFormula::And(clauses);
        interp = enc.set((0..n).map(v).chain((0..n).map(w)).chain((0..m).map(e)).chain((0..n - 1).map(p)));
    } else {
        for k in 0..m {
            context.insert(gamma.len(), enc.set([format!("g_{}", k + 1)]));
            gamma.push(enc.le([e(k)], ["P"]));
        }
        scope = ScopeFormula::And(
            (0..n).map(|i| ScopeFormula::Or(g.incident(i).into_iter().map(ScopeFormula::leaf).collect())).collect(),
        );
        interp = enc.set((0..m).map(e).chain(["P".to_string()]));
    }
    Embedding::new(enc.table.clone(), interp, rpos, rneg, gamma, scope)?.with_context(context)
}

/// All Hamiltonian paths as vertex sequences; each undirected path appears in
/// both directions.
pub fn oracle(g: &Graph) -> Vec<Vec<usize>> {
    fn go(g: &Graph, path: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if path.len() == g.n {
            out.push(path.clone());
            return;
        }
        let last = *path.last().expect("path is seeded");
        for u in 0..g.n {
            if !used[u] && g.edge_between(last, u).is_some() {
                used[u] = true;
                path.push(u);
                go(g, path, used, out);
                path.pop();
                used[u] = false;
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.n {
        let mut used = vec![false; g.n];
        used[s] = true;
        go(g, &mut vec![s], &mut used, &mut out);
    }
    out
}

pub fn is_valid_path(g: &Graph, path: &[usize]) -> bool {
    let mut seen = vec![false; g.n];
    path.len() == g.n
        && path.iter().all(|&u| u < g.n && !std::mem::replace(&mut seen[u], true))
        && path.windows(2).all(|w| g.edge_between(w[0], w[1]).is_some())
}

/// Γ subset of a path under the given variant.
pub fn path_solution(g: &Graph, variant: u8, path: &[usize]) -> Solution {
    let (n, m) = (g.n, g.edges.len());
    let edges = path.windows(2).map(|w| g.edge_between(w[0], w[1]).expect("path follows edges"));
    if variant != 3 {
        return edges.collect();
    }
    let mut out = Vec::new();
    for (pos, &u) in path.iter().enumerate() {
        let base = 2 * (u * n + pos);
        out.extend([base, base + 1]);
    }
    for (l, k) in edges.enumerate() {
        let base = 2 * n * n + 2 * (l * m + k);
        out.extend([base, base + 1]);
    }
    out.into_iter().collect()
}

/// Decodes a solution into a vertex sequence when it describes one.
pub fn decode_path(g: &Graph, variant: u8, s: &Solution) -> Option<Vec<usize>> {
    let n = g.n;
    if variant == 3 {
        let mut path = vec![usize::MAX; n];
        for u in 0..n {
            let pos: Vec<usize> = (0..n).filter(|&j| s.contains(2 * (u * n + j)) && s.contains(2 * (u * n + j) + 1)).collect();
            if pos.len() != 1 || path[pos[0]] != usize::MAX {
                return None;
            }
            path[pos[0]] = u;
        }
        return is_valid_path(g, &path).then_some(path);
    }
    let chosen: Vec<(usize, usize)> = s.members().iter().filter_map(|&k| g.edges.get(k).copied()).collect();
    if chosen.len() + 1 != n {
        return None;
    }
    let mut deg = vec![0; n];
    for &(a, b) in &chosen {
        deg[a] += 1;
        deg[b] += 1;
    }
    let start = (0..n).find(|&u| deg[u] == 1)?;
    let mut path = vec![start];
    let mut left = chosen;
    let mut last = start;
    while let Some(pos) = left.iter().position(|&(a, b)| a == last || b == last) {
        let (a, b) = left.swap_remove(pos);
        last = if a == last { b } else { a };
        path.push(last);
    }
    is_valid_path(g, &path).then_some(path)
}

pub(crate) fn render(g: &Graph, variant: u8, s: &Solution) -> (String, bool) {
    match decode_path(g, variant, s) {
        Some(path) => (path.iter().map(|u| (u + 1).to_string()).collect::<Vec<_>>().join(" -> ") + "\n", true),
        None => {
            let parts: Vec<String> = s.members().iter().map(|i| i.to_string()).collect();
            (format!("no path: Γ subset {{{}}}\n", parts.join(",")), false)
        }
    }
}

pub(crate) fn conflicts(e: &Embedding, g: &Graph, variant: u8) -> Vec<(usize, usize)> {
    let t = e.table();
    let mut out = Vec::new();
    if variant == 3 {
        for k in 0..g.edges.len() {
            for l in 0..g.n - 1 {
                for k2 in k + 1..g.edges.len() {
                    for (s1, s2) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                        if let (Some(a), Some(b)) = (t.id(&h(k, l, s1)), t.id(&h(k2, l, s2))) {
                            out.push((a, b));
                        }
                    }
                }
            }
        }
    }
    out
}
