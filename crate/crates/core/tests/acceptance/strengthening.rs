use crate::common::{opts, Check};
use semlat::embedding::Analysis;
use semlat::problems::Problem;
use semlat::Duple;

struct Outcome {
    sentences: Vec<Duple>,
    before: bool,
    after: bool,
    free_after: usize,
    union_after: usize,
}

fn strengthen(spec: &str) -> Result<(semlat::embedding::Embedding, Outcome), String> {
    let opts = opts();
    let p: Problem = spec.parse().map_err(|e: semlat::Error| e.to_string())?;
    let e = p.build().map_err(|e| e.to_string())?;
    let sols = p.oracle_solutions().map_err(|e| e.to_string())?;
    let before = Analysis::new(&e, sols.clone(), &opts).and_then(|a| a.is_strongly_complete()).map_err(|e| e.to_string())?;
    let sentences = p.strengthening(&e, &opts).map_err(|e| e.to_string())?;
    let strong = e.with_extra_positive(sentences.iter().cloned()).map_err(|e| e.to_string())?;
    let a = Analysis::new(&strong, sols, &opts).map_err(|e| e.to_string())?;
    let after = a.is_strongly_complete().map_err(|e| e.to_string())?;
    let union_after = a.union_model().map_err(|e| e.to_string())?.len();
    let free_after = a.free().len();
    Ok((e, Outcome { sentences, before, after, free_after, union_after }))
}

pub fn run() -> Result<String, String> {
    let mut check = Check::default();

    let (e, q) = strengthen("nqueens m=4 variant=2")?;
    let want = Duple::parse(e.table(), "E_1_1 E_1_4 E_2_2 E_2_3 E_3_2 E_3_3 E_4_1 E_4_4 <= B").map_err(|e| e.to_string())?;
    check.eq("queens M=4 sentences", &q.sentences, &vec![want]);
    check.eq("queens M=4 strongly complete before/after", (q.before, q.after), (false, true));
    check.eq("queens M=4 |F| = |F_C(R+)| after", q.union_after, q.free_after);

    let (_, b) = strengthen("vertical_bars n=2 variant=2")?;
    check.eq("bars emb 2 sentence count", b.sentences.len(), 18);
    check.eq("bars emb 2 strongly complete before/after", (b.before, b.after), (false, true));
    check.eq("bars emb 2 |F_C(R+)| and |F'| after", (b.free_after, b.union_after), (44, 44));

    check.finish()?;
    Ok(format!(
        "queens M=4: 1 sentence (8 empties), strongly complete {} -> {}; bars emb 2: {} sentences, strongly complete {} -> {}, |F_C(R+)| = {}",
        q.before, q.after, b.sentences.len(), b.before, b.after, b.free_after
    ))
}
