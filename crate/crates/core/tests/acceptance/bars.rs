use crate::bars_lists::*;
use crate::common::{atoms_with, bar_name, build, opts, set_of, Check};
use semlat::algebra::restrict_atom_set;
use semlat::embedding::Analysis;
use semlat::problems::{bars, Problem};
use semlat::{Atom, ConstantTable};
use std::collections::BTreeSet;

fn listed(t: &ConstantTable, list: &str) -> BTreeSet<Atom> {
    atoms_with(t, list, bar_name)
}

pub fn run() -> Result<String, String> {
    let mut check = Check::default();
    let opts = opts();
    // q1 = b1, q2 = w2, q3 = b3, q4 = w4
    let example = bars::grid_solution(&[true, false, true, false]);
    let mut restricted = Vec::new();
    let mut example_q = Vec::new();
    let mut counts = Vec::new();
    for variant in [1u8, 2] {
        let spec = format!("vertical_bars n=2 variant={variant}");
        let e = build(&spec);
        let t = e.table().clone();
        let sols = spec.parse::<Problem>().unwrap().oracle_solutions().map_err(|e| e.to_string())?;
        let free = e.freest_model(&opts).map_err(|e| e.to_string())?;
        let analysis = Analysis::with_free(&e, free.clone(), sols.clone(), &opts).map_err(|e| e.to_string())?;
        let union = analysis.union_model().map_err(|e| e.to_string())?;
        let fs = &analysis.solution_models()[sols.iter().position(|s| *s == example).ok_or("example grid missing")?];
        let (want_free, want_fs, want_union) = match variant {
            1 => (FREE_1, FS_1, FREE_1),
            _ => (FREE_2, FS_2, UNION_2),
        };
        let label = |what: &str| format!("emb {variant} {what}");
        counts.push((free.len(), union.len()));
        check.atoms(&label("F_C(R+)"), &t, &set_of(&free), &listed(&t, want_free));
        check.atoms(&label("F_s"), &t, &set_of(fs), &listed(&t, want_fs));
        check.atoms(&label("union of F_s"), &t, &set_of(&union), &listed(&t, want_union));

        let k = t
            .set_of(["n_1", "n_2", "g_1_1", "g_2_1", "h_1_2", "h_2_2", "v"].into_iter().filter(|n| t.id(n).is_some()))
            .map_err(|e| e.to_string())?
            .union(e.interp());
        let grounded = free.grounding(&k).map_err(|e| e.to_string())?;
        let mut explicit = set_of(&grounded);
        explicit.extend(listed(&t, "h1 h3 g2 g4"));
        check.atoms(&label("F_s as grounding plus context atoms"), &t, &explicit, &listed(&t, want_fs));

        if variant == 2 {
            let extra: BTreeSet<Atom> = set_of(&free).difference(&set_of(&union)).cloned().collect();
            check.atoms(&label("atoms outside every F_s"), &t, &extra, &listed(&t, EXTRA_2));
        }
        let q = e.interp().clone();
        example_q.push(set_of(&fs.restriction(&q).map_err(|e| e.to_string())?));
        restricted.push((t.clone(), restrict_atom_set(union.atoms(), &q)));
    }
    let (t1, a) = &restricted[0];
    let (t2, b) = &restricted[1];
    // Both tables list the interpretation constants; compare through names.
    let rename = |s: &BTreeSet<Atom>, from: &ConstantTable| -> BTreeSet<Atom> {
        s.iter()
            .map(|x| Atom::from_names(t2, from.render(x.segment()).into_iter()).unwrap())
            .collect()
    };
    let a = rename(a, t1);
    let fs1_q = rename(&example_q[0], t1);
    check.atoms("F_s|Q", t2, &fs1_q, &listed(t2, FS_Q));
    check.atoms("F'_s|Q", t2, &example_q[1], &listed(t2, FS_Q));
    check.atoms("A", t2, &a, &listed(t2, SET_A));
    check.atoms("B", t2, b, &listed(t2, SET_B));
    check.atoms("A-B", t2, &a.difference(b).cloned().collect(), &listed(t2, A_MINUS_B));
    check.atoms("B-A", t2, &b.difference(&a).cloned().collect(), &listed(t2, B_MINUS_A));
    check.atoms("A∩B", t2, &a.intersection(b).cloned().collect(), &listed(t2, A_AND_B));
    check.eq("|F_C(R1+)|, |F_C'(R2+)|, |F'|", (counts[0].0, counts[1].0, counts[1].1), (46, 68, 44));
    check.finish()?;
    Ok(format!(
        "|F_C(R1+)| = {}, |F_C'(R2+)| = {}, |F'| = {}; atom lists and A-B, B-A, A∩B match",
        counts[0].0, counts[1].0, counts[1].1
    ))
}
