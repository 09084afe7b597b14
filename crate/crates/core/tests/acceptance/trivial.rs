use crate::common::{atoms, build, opts, set_of, solutions, Check};
use semlat::embedding::Analysis;
use semlat::ConstSet;

struct Golden {
    variant: u8,
    free: &'static str,
    per_solution: [&'static str; 3],
    restricted: Option<[&'static str; 3]>,
    free_restricted: Option<&'static str>,
    /// concise, complete, tight, explicit; `None` where no claim is made.
    flags: [Option<bool>; 4],
}

const GOLDEN: [Golden; 5] = [
    Golden {
        variant: 1,
        free: "a b c",
        per_solution: ["ac b c", "a bc c", "ac bc c"],
        restricted: None,
        free_restricted: None,
        flags: [Some(true), Some(true), Some(false), Some(false)],
    },
    Golden {
        variant: 2,
        free: "a b c acd bce",
        per_solution: ["ac b c acd bce", "a bc c acd bce", "ac bc c acd bce"],
        restricted: Some(["ac b c", "a bc c", "ac bc c"]),
        free_restricted: Some("a b c"),
        flags: [Some(true), Some(true), Some(false), Some(false)],
    },
    Golden {
        variant: 3,
        free: "a b m ac bc cm acd bce",
        per_solution: ["b m ac bc cm acd bce", "a m ac bc cm acd bce", "m ac bc cm acd bce"],
        restricted: Some(["ac b c", "a bc c", "ac bc c"]),
        free_restricted: Some("a b c"),
        flags: [Some(true), Some(true), Some(true), Some(false)],
    },
    Golden {
        variant: 4,
        free: "a b ac bc acd bce",
        per_solution: ["b ac bc acd bce", "a ac bc acd bce", "ac bc acd bce"],
        restricted: Some(["b ac bc", "a ac bc", "ac bc"]),
        free_restricted: Some("a b ac bc"),
        flags: [Some(false), None, Some(true), None],
    },
    Golden {
        variant: 5,
        free: "c g h ac ag bc bh",
        per_solution: ["c g h ac bc bh", "c g h ac ag bc", "c g h ac bc"],
        restricted: Some(["c ac b", "c a bc", "c ac bc"]),
        free_restricted: None,
        flags: [Some(true), Some(true), Some(true), Some(true)],
    },
];

const GROUNDINGS: [(&str, &str); 3] = [("abch", "c h ac bc bh"), ("abcg", "c g ac ag bc"), ("abc", "c ac bc")];

pub fn run() -> Result<String, String> {
    let mut check = Check::default();
    let opts = opts();
    let sols = solutions(&[&[0], &[1], &[0, 1]]);
    let mut lists = 0;
    for g in &GOLDEN {
        let e = build(&format!("trivial variant={}", g.variant));
        let t = e.table().clone();
        let label = |what: &str| format!("emb {} {what}", g.variant);
        let free = e.freest_model(&opts).map_err(|e| e.to_string())?;
        check.atoms(&label("F_C(R+)"), &t, &set_of(&free), &atoms(&t, g.free));
        lists += 1;
        let analysis = Analysis::with_free(&e, free.clone(), sols.clone(), &opts).map_err(|e| e.to_string())?;
        for (k, fs) in analysis.solution_models().iter().enumerate() {
            check.atoms(&label(&format!("F{}", k + 1)), &t, &set_of(fs), &atoms(&t, g.per_solution[k]));
            lists += 1;
            if let Some(r) = g.restricted {
                let got = fs.restriction(e.interp()).map_err(|e| e.to_string())?;
                check.atoms(&label(&format!("F{}|Q", k + 1)), &t, &set_of(&got), &atoms(&t, r[k]));
                lists += 1;
            }
        }
        if let Some(r) = g.free_restricted {
            let got = free.restriction(e.interp()).map_err(|e| e.to_string())?;
            check.atoms(&label("F|Q"), &t, &set_of(&got), &atoms(&t, r));
            lists += 1;
        }
        if g.variant == 5 {
            for (k, want) in GROUNDINGS {
                let ks: ConstSet = t.set_of(k.split("").filter(|s| !s.is_empty())).map_err(|e| e.to_string())?;
                let got = free.grounding(&ks).map_err(|e| e.to_string())?;
                check.atoms(&label(&format!("grounding to {k}")), &t, &set_of(&got), &atoms(&t, want));
                lists += 1;
            }
        }
        let report = analysis.report().map_err(|e| e.to_string())?;
        let got = [report.concise, report.complete, report.tight, report.explicit == "yes"];
        for ((name, want), got) in ["concise", "complete", "tight", "explicit"].iter().zip(g.flags).zip(got) {
            if let Some(want) = want {
                check.eq(&label(name), got, want);
            }
        }
    }
    check.finish()?;
    Ok(format!("{lists} atom lists and the classification flags of 5 embeddings match"))
}
