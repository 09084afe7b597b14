use crate::common::{opts, Check};
use semlat::problems::{sudoku, Problem};
use semlat::solver::atoms_as_solutions;
use std::collections::{BTreeMap, BTreeSet};

const SPECTRUM: [(usize, usize); 9] =
    [(1, 65), (2, 128), (6, 48), (112, 12), (143, 32), (144, 16), (149, 48), (150, 48), (151, 16)];

pub fn run() -> Result<String, String> {
    if !crate::slow_enabled() {
        return Err(crate::SKIP.to_string());
    }
    let mut check = Check::default();
    let opts = opts();
    let p = Problem::Sudoku { size: 4, hints: sudoku::first_box_hints(4).map_err(|e| e.to_string())? };
    let e = p.build().map_err(|e| e.to_string())?;
    let free = e.freest_model(&opts).map_err(|e| e.to_string())?;
    check.eq("spectrum", free.spectrum(), BTreeMap::from(SPECTRUM));
    let decoded = atoms_as_solutions(&e, &free, 112, None, &opts).map_err(|e| e.to_string())?;
    let found: BTreeSet<_> = decoded.into_iter().collect::<Result<_, _>>()?;
    let oracle: BTreeSet<_> = p.oracle_solutions().map_err(|e| e.to_string())?.into_iter().collect();
    check.eq("size-112 atoms decode to the oracle solutions", &found, &oracle);
    check.eq("oracle solution count", oracle.len(), 12);
    check.finish()?;
    Ok(format!("spectrum matches; {} size-112 atoms decode to the 12 oracle grids", found.len()))
}
