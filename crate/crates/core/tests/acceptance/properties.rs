use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use semlat::algebra::{entails_oracle, freest_model, CrossingOptions, CrossingOrder};
use semlat::embedding::{make_explicit, Analysis, Embedding, ScopeFormula};
use semlat::solver::minimize_irreducible;
use semlat::{Atom, AtomizedModel, ConstSet, ConstantTable, Duple, Term};
use std::collections::BTreeSet;
use std::sync::Arc;

pub const CASES: u32 = 1000;

type Mask = u32;

fn set(mask: Mask) -> ConstSet {
    ConstSet::from_ids((0..32).filter(|i| mask >> i & 1 == 1))
}

fn pos((l, r): (Mask, Mask)) -> Duple {
    Duple::positive(Term::new(set(l)).unwrap(), Term::new(set(r)).unwrap())
}

fn neg(d: (Mask, Mask)) -> Duple {
    pos(d).negated()
}

fn table(n: usize) -> Arc<ConstantTable> {
    ConstantTable::new((0..n).map(|i| format!("c{i}"))).unwrap()
}

fn full(n: usize) -> ConstSet {
    ConstSet::full(n)
}

fn free(t: &Arc<ConstantTable>, universe: ConstSet, rpos: &[Duple]) -> AtomizedModel {
    freest_model(t.clone(), universe, rpos, &CrossingOptions::default()).unwrap()
}

/// A nonempty subset of the bits in `within`.
fn sub_mask(within: Mask) -> impl Strategy<Value = Mask> {
    any::<u32>().prop_map(move |x| {
        let m = x & within;
        if m == 0 {
            within & within.wrapping_neg()
        } else {
            m
        }
    })
}

fn duple_in(within: Mask) -> impl Strategy<Value = (Mask, Mask)> {
    (sub_mask(within), sub_mask(within))
}

fn duples(n: usize, max: usize) -> impl Strategy<Value = Vec<(Mask, Mask)>> {
    prop::collection::vec(duple_in((1 << n) - 1), 0..=max)
}

fn runner() -> TestRunner {
    let config = Config { cases: CASES, failure_persistence: None, max_global_rejects: 100 * CASES, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn run<S: Strategy>(name: &str, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    runner().run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}


fn crossing_order_invariance() -> Result<(), String> {
    let strat = (1usize..=6).prop_flat_map(|n| (Just(n), duples(n, 6))).prop_flat_map(|(n, ds)| {
        let shuffled = Just(ds.clone()).prop_shuffle();
        (Just(n), Just(ds), shuffled)
    });
    run("crossing order invariance", strat, |(n, ds, shuffled)| {
        let t = table(n);
        let rpos: Vec<Duple> = ds.into_iter().map(pos).collect();
        let other: Vec<Duple> = shuffled.into_iter().map(pos).collect();
        let given = CrossingOptions { order: CrossingOrder::Given, ..CrossingOptions::default() };
        let a = freest_model(t.clone(), full(n), &rpos, &given).unwrap();
        let b = freest_model(t.clone(), full(n), &other, &given).unwrap();
        let c = free(&t, full(n), &rpos);
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(&a, &c);
        Ok(())
    })
}

fn oracle_agreement() -> Result<(), String> {
    let strat = (1usize..=6)
        .prop_flat_map(|n| (Just(n), duples(n, 6), prop::collection::vec(duple_in((1 << n) - 1), 8)));
    run("entails_oracle agrees with the freest model", strat, |(n, ds, queries)| {
        let t = table(n);
        let rpos: Vec<Duple> = ds.into_iter().map(pos).collect();
        let m = free(&t, full(n), &rpos);
        for q in queries {
            let d = pos(q);
            prop_assert_eq!(m.holds(&d), entails_oracle(&t, &rpos, &d).unwrap(), "{:?}", q);
        }
        Ok(())
    })
}

fn grounding_commutes() -> Result<(), String> {
    let strat = (1usize..=6)
        .prop_flat_map(|n| (Just(n), duples(n, 5), sub_mask((1 << n) - 1)))
        .prop_flat_map(|(n, ds, k)| (Just(n), Just(ds), Just(k), duple_in(k)));
    run("grounding and crossing commute", strat, |(n, ds, k, r)| {
        let t = table(n);
        let rpos: Vec<Duple> = ds.into_iter().map(pos).collect();
        let m = free(&t, full(n), &rpos);
        let (k, r) = (set(k), pos(r));
        let opts = CrossingOptions::default();
        let grounded = m.grounding(&k).unwrap();
        let left = grounded.full_crossing(&r, &opts).unwrap();
        let right = m.full_crossing(&r, &opts).unwrap().grounding(&k).unwrap();
        prop_assert_eq!(&left, &right);
        let theta_k = Atom::new(k.clone()).unwrap();
        prop_assert!(grounded.atoms().iter().all(|a| m.contains_atom(a) || *a == theta_k));
        Ok(())
    })
}

fn restriction_preserves_duples() -> Result<(), String> {
    let strat = (1usize..=6)
        .prop_flat_map(|n| (Just(n), duples(n, 6), sub_mask((1 << n) - 1)))
        .prop_flat_map(|(n, ds, q)| (Just(n), Just(ds), Just(q), prop::collection::vec(duple_in(q), 8)));
    run("restriction preserves duples over Q", strat, |(n, ds, q, queries)| {
        let t = table(n);
        let rpos: Vec<Duple> = ds.into_iter().map(pos).collect();
        let m = free(&t, full(n), &rpos);
        let qs = set(q);
        let r = m.restriction(&qs).unwrap();
        for d in queries {
            prop_assert_eq!(m.holds(&pos(d)), r.holds(&pos(d)), "{:?}", d);
        }
        let images: BTreeSet<Atom> = m.atoms().iter().filter_map(|a| Atom::new(a.segment().intersection(&qs)).ok()).collect();
        prop_assert!(r.atoms().iter().all(|a| images.contains(a)));
        Ok(())
    })
}

fn scope_for(shape: u8, gamma: usize) -> ScopeFormula {
    use ScopeFormula::*;
    match (shape % 5, gamma) {
        (_, 1) | (0, _) => Leaf(0),
        (1, _) => Or(vec![Leaf(0), Leaf(1)]),
        (2, _) => And(vec![Leaf(0), Leaf(1)]),
        (3, _) => Or(vec![Leaf(0), ScopeFormula::not(Leaf(1))]),
        _ => True,
    }
}

fn explicit_is_tight() -> Result<(), String> {
    let strat = (2usize..=4)
        .prop_flat_map(|n| (Just(n), sub_mask((1 << n) - 1)))
        .prop_flat_map(|(n, q)| {
            (
                Just(n),
                Just(q),
                duples(n, 4),
                prop::collection::vec(duple_in((1 << n) - 1), 0..=2),
                prop::collection::vec(duple_in(q), 1..=2),
                any::<u8>(),
            )
        });
    run("make_explicit outputs are explicit and tight", strat, |(n, q, rp, rn, gamma, shape)| {
        let t = table(n);
        let opts = CrossingOptions::default();
        let e = Embedding::new(
            t,
            set(q),
            rp.into_iter().map(pos).collect(),
            rn.into_iter().map(neg).collect(),
            gamma.iter().copied().map(pos).collect(),
            scope_for(shape, gamma.len()),
        )
        .unwrap();
        let sols = e.enumerate_solutions(gamma.len(), &opts).unwrap();
        let x = make_explicit(&e, None).unwrap();
        let analysis = Analysis::new(&x, sols.clone(), &opts).unwrap();
        let explicit = analysis.explicit().unwrap().is_explicit();
        prop_assert!(explicit, "not explicit");
        prop_assert!(!explicit || analysis.is_tight(), "explicit but not tight");
        let base = Analysis::new(&e, sols, &opts).unwrap();
        prop_assert_eq!(base.is_concise().unwrap(), analysis.is_concise().unwrap());
        let c = x.table().set_of(e.table().names().iter().map(String::as_str)).unwrap();
        for (fx, f) in analysis.solution_models().iter().zip(base.solution_models()) {
            let back: BTreeSet<Vec<String>> = fx
                .restriction(&c)
                .unwrap()
                .atoms()
                .iter()
                .map(|a| x.table().render(a.segment()).into_iter().map(String::from).collect())
                .collect();
            let want: BTreeSet<Vec<String>> = f
                .atoms()
                .iter()
                .map(|a| e.table().render(a.segment()).into_iter().map(String::from).collect())
                .collect();
            prop_assert_eq!(back, want);
        }
        Ok(())
    })
}

fn minimize_is_irreducible() -> Result<(), String> {
    let strat = (1usize..=6).prop_flat_map(|n| {
        (Just(n), duples(n, 5), prop::collection::vec(duple_in((1 << n) - 1), 1..=4))
    });
    run("minimize_irreducible is small and irreducible", strat, |(n, rp, rn)| {
        let t = table(n);
        let rpos: Vec<Duple> = rp.into_iter().map(pos).collect();
        let rneg: Vec<Duple> = rn.into_iter().map(neg).collect();
        let e = Embedding::new(t.clone(), full(n), rpos.clone(), rneg.clone(), vec![], ScopeFormula::True).unwrap();
        let m = free(&t, full(n), &rpos);
        prop_assume!(e.model_satisfies(&m));
        let r = minimize_irreducible(&m, &e).unwrap();
        prop_assert!(r.len() <= rneg.len() + 1, "{} atoms for {} negatives", r.len(), rneg.len());
        prop_assert!(e.model_satisfies(&r));
        let segs: Vec<&ConstSet> = r.atoms().iter().map(Atom::segment).collect();
        let is_model = |pick: u32| {
            let chosen: Vec<&ConstSet> = segs.iter().enumerate().filter(|(i, _)| pick >> i & 1 == 1).map(|p| *p.1).collect();
            let covered = chosen.iter().fold(ConstSet::new(), |acc, s| acc.union(s)) == full(n);
            let negatives = rneg.iter().all(|d| {
                chosen.iter().any(|s| s.intersects(d.lhs.constants()) && !s.intersects(d.rhs.constants()))
            });
            let positives = rpos.iter().all(|d| {
                !chosen.iter().any(|s| s.intersects(d.lhs.constants()) && !s.intersects(d.rhs.constants()))
            });
            covered && negatives && positives
        };
        let all = (1u32 << segs.len()) - 1;
        prop_assert!(is_model(all));
        for pick in 0..all {
            prop_assert!(!is_model(pick), "proper subset {:b} of {:?} is a model", pick, segs);
        }
        Ok(())
    })
}

fn extension_diagram() -> Result<(), String> {
    let strat = (1usize..=4)
        .prop_flat_map(|n| (Just(n), duples(n, 3), prop::collection::vec(duple_in((1 << n) - 1), 1..=2)));
    run("extension diagram", strat, |(n, base, extra)| {
        let t = ConstantTable::new((0..n).map(|i| format!("c{i}")).chain((0..extra.len()).map(|k| format!("g{k}")))).unwrap();
        let c = full(n);
        let base: Vec<Duple> = base.into_iter().map(pos).collect();
        let m = free(&t, c.clone(), &base);
        let mut with_r = base.clone();
        with_r.extend(extra.iter().copied().map(pos));
        let m_r = free(&t, c.clone(), &with_r);
        let mut with_primed = base.clone();
        for (k, &(l, r)) in extra.iter().enumerate() {
            with_primed.push(pos((l, r | 1 << (n + k))));
        }
        let m_primed = free(&t, full(n + extra.len()), &with_primed);
        prop_assert_eq!(m_primed.restriction(&c).unwrap(), m);
        prop_assert_eq!(&m_primed.grounding(&c).unwrap(), &m_r);
        prop_assert!(m_r.atoms().iter().all(|a| m_primed.contains_atom(a)));
        Ok(())
    })
}

pub fn run_all() -> Result<String, String> {
    let suites: [fn() -> Result<(), String>; 7] = [
        crossing_order_invariance,
        oracle_agreement,
        grounding_commutes,
        restriction_preserves_duples,
        explicit_is_tight,
        minimize_is_irreducible,
        extension_diagram,
    ];
    let failures: Vec<String> = suites.iter().filter_map(|s| s().err()).collect();
    if failures.is_empty() {
        Ok(format!("{} suites x {CASES} cases, no failures", suites.len()))
    } else {
        Err(failures.join("; "))
    }
}
