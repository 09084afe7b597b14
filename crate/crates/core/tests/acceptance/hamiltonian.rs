use crate::common::Check;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semlat::problems::{hamiltonian, Graph, Problem};
use semlat::solver::{solve, SearchMode, SolveOptions};
use std::collections::BTreeSet;

type Edges = Vec<(usize, usize)>;

fn pairs(n: usize) -> Edges {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn connected(n: usize, edges: &Edges) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &(a, b) in edges {
            let other = if a == u { b } else if b == u { a } else { continue };
            if !seen[other] {
                seen[other] = true;
                stack.push(other);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for k in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| (0..=k).map(move |pos| {
                let mut q = p.clone();
                q.insert(pos, k);
                q
            }))
            .collect();
    }
    out
}

fn adjacent(edges: &Edges, u: usize, v: usize) -> bool {
    edges.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
}

/// Brute force over vertex orders.
fn has_path(edges: &Edges, perms: &[Vec<usize>]) -> bool {
    perms.iter().any(|p| p.windows(2).all(|w| adjacent(edges, w[0], w[1])))
}

/// One representative per isomorphism class of connected graphs on `n` vertices.
fn classes(n: usize, perms: &[Vec<usize>]) -> Vec<Edges> {
    let all = pairs(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << all.len() {
        let edges: Edges = all.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
        if !connected(n, &edges) {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut relabeled: Edges =
                    edges.iter().map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b]))).collect();
                relabeled.sort();
                relabeled
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push(edges);
        }
    }
    out
}

fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Edges {
    loop {
        let p = rng.gen_range(0.2..0.9);
        let edges: Edges = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
        if connected(n, &edges) {
            return edges;
        }
    }
}

fn triples(n: usize, edges: &Edges) -> usize {
    (0..n)
        .map(|v| {
            let d = edges.iter().filter(|&&(a, b)| a == v || b == v).count();
            d * d.saturating_sub(1) * d.saturating_sub(2) / 6
        })
        .sum()
}

pub fn run() -> Result<String, String> {
    let mut check = Check::default();
    let mut graphs: Vec<(usize, Edges)> = Vec::new();
    for n in 2..=6 {
        let perms = permutations(n);
        graphs.extend(classes(n, &perms).into_iter().map(|g| (n, g)));
    }
    let exhaustive = graphs.len();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    while graphs.len() < exhaustive + 100 {
        let n = rng.gen_range(4..=6);
        graphs.push((n, random_connected(&mut rng, n)));
    }
    let opts = SolveOptions { mode: SearchMode::Exhaustive { limit: 3 }, drop_context: true, ..Default::default() };
    let (mut with_path, mut paths_checked) = (0, 0);
    for (n, edges) in &graphs {
        let (n, e_count) = (*n, edges.len());
        let g = Graph::new(n, edges.iter().copied()).map_err(|e| e.to_string())?;
        let tri = triples(n, edges);
        for variant in 1..=3u8 {
            let e = Problem::Hamiltonian { graph: g.clone(), variant }.build().map_err(|e| e.to_string())?;
            let want = match variant {
                1 => (1 + 2 * e_count + tri, n + 1),
                2 => (4 + n + 2 * e_count + tri, 2 * n + 1),
                _ => (4 + n + e_count + tri + 12 * e_count * (n - 1), 2 * n + 1),
            };
            check.eq(&format!("duple counts, variant {variant}, {n} vertices {edges:?}"), (e.rpos().len(), e.rneg().len()), want);
        }
        let e = Problem::Hamiltonian { graph: g.clone(), variant: 3 }.build().map_err(|e| e.to_string())?;
        let found = solve(&e, &opts).map_err(|e| e.to_string())?;
        let exists = has_path(edges, &permutations(n));
        with_path += usize::from(exists);
        check.eq(&format!("path existence for {n} vertices {edges:?}"), !found.is_empty(), exists);
        for f in &found {
            paths_checked += 1;
            match hamiltonian::decode_path(&g, 3, &f.solution) {
                Some(p) => {
                    let distinct: BTreeSet<_> = p.iter().collect();
                    let ok = p.len() == n && distinct.len() == n && p.windows(2).all(|w| adjacent(edges, w[0], w[1]));
                    check.ok(&format!("decoded path {p:?} is not Hamiltonian in {edges:?}"), ok);
                }
                None => check.ok(&format!("solution for {edges:?} does not decode to a path"), false),
            }
        }
    }
    check.finish()?;
    Ok(format!(
        "{} connected graphs ({exhaustive} isomorphism classes for N = 2..6 plus 100 random), {with_path} with a path, \
         {paths_checked} found paths valid; duple counts match for variants 1-3",
        graphs.len()
    ))
}
