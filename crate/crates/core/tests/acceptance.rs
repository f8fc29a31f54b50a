//! Acceptance checks, run sequentially by a custom harness so that the timing
//! criteria do not compete with other tests for the CPU. Prints one line per
//! criterion and exits nonzero if any fails.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use tightpaths::bench::{
    read_csv, run_bench, to_csv_string, BenchAlgorithm, BenchConfig, BenchGraph, GammaRange,
    CSV_HEADER,
};
use tightpaths::closure::{
    basic_antecedents, mine_closures, to_log_weighted_dag, Confidence, EqualSupportPolicy,
    ItemSet, TransactionalDataset,
};
use tightpaths::graph::{parse_edge_list, parse_vertex_weighted};
use tightpaths::oracle::{
    oracle_left_tighten, oracle_right_tighten, oracle_tight_pairs, oracle_tight_paths,
    oracle_tighten, DEFAULT_PATH_CAP,
};
use tightpaths::synth::{self, seeded};
use tightpaths::tighten::{
    build_correspondence, is_convex, left_tighten, right_tighten, tighten,
};
use tightpaths::tightpair::all_tight_pairs;
use tightpaths::tightpath::{all_tight_paths, tight_paths_from_named_root};
use tightpaths::{Budget, Correspondence, PairAlgorithm, Poset};

const TWO_ROUTES: &str = "A B 2\nB C 1\nC E 1\nA D 1\nD E 2\n";
const DOUBLE_LOOP: &str = "A B 2\nB C 1\nC A 1\nA D 1\nD E 2\nE A 1\n";
const SMALL_LATTICE: &str = "v 0.000 0\nv 0.115 0.115\nv 0.379 0.379\nv 0.530 0.530\n\
    v 1.115 1.115\nv 1.700 1.700\ne 0.000 0.115\ne 0.000 0.379\ne 0.115 0.530\n\
    e 0.379 0.530\ne 0.115 1.115\ne 0.530 1.700\ne 1.115 1.700\n";

const PROPERTY_CASES: usize = 500;
const PIPELINE_DATASETS: usize = 100;
const PAIR_TOLERANCE: f64 = 1e-9;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed < limit, || format!("{what} took {elapsed:?}, limit {limit:?}"))
}

fn named_paths(set: &tightpaths::TightPathSet, names: &[String]) -> BTreeSet<String> {
    set.iter().map(|p| p.names(names).concat()).collect()
}

fn criterion_1() -> Outcome {
    let g = parse_edge_list(TWO_ROUTES).map_err(|e| e.to_string())?;
    let budget = Budget::new(3.0).unwrap();
    let start = Instant::now();
    let found = all_tight_paths(&g, budget);
    let elapsed = start.elapsed();
    let got = named_paths(&found, g.names());
    let want: BTreeSet<String> = ["ABC", "BCE", "ADE"].map(String::from).into();
    ensure(got == want, || format!("got {got:?}"))?;
    within(elapsed, Duration::from_millis(1), "gamma=3")?;
    Ok(format!("{{ABC, BCE, ADE}} in {elapsed:?}"))
}

fn criterion_2() -> Outcome {
    let g = parse_edge_list(DOUBLE_LOOP).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let at4 = all_tight_paths(&g, Budget::new(4.0).unwrap());
    let at5 = all_tight_paths(&g, Budget::new(5.0).unwrap());
    let elapsed = start.elapsed();
    let want: BTreeSet<String> = [
        "ABCA", "ADEA", "BCAB", "BCAD", "CABC", "CADE", "DEAD", "EADE", "EABC",
    ]
    .map(String::from)
    .into();
    let got = named_paths(&at4, g.names());
    ensure(got == want, || format!("gamma=4: got {got:?}"))?;
    let of_len5 = at5.iter().filter(|p| p.len() == 5).count();
    ensure(at5.len() == 9 && of_len5 == 8, || {
        format!("gamma=5: {} paths, {of_len5} of length 5", at5.len())
    })?;
    let named5 = named_paths(&at5, g.names());
    ensure(named5.contains("ABCAD") && named5.contains("DEAB"), || {
        format!("gamma=5: got {named5:?}")
    })?;
    within(elapsed, Duration::from_millis(10), "gamma=4 and gamma=5")?;
    Ok(format!("9 paths at 4; 9 paths (8 of length 5) at 5; {elapsed:?}"))
}

fn criterion_3() -> Outcome {
    let g = parse_edge_list(DOUBLE_LOOP).map_err(|e| e.to_string())?;
    let mut last = Duration::ZERO;
    for t in 1..=8u32 {
        let budget = Budget::new(4.0 * t as f64).unwrap();
        let start = Instant::now();
        let found = tight_paths_from_named_root(&g, "A", budget).map_err(|e| e.to_string())?;
        last = start.elapsed();
        ensure(found.len() == 1 << t, || {
            format!("t={t}: {} paths, expected {}", found.len(), 1u32 << t)
        })?;
    }
    within(last, Duration::from_secs(5), "t=8")?;
    Ok(format!("2^t paths for t=1..8; t=8 in {last:?}"))
}

fn criterion_4() -> Outcome {
    let dag = parse_vertex_weighted(SMALL_LATTICE).map_err(|e| e.to_string())?;
    let cases: [(f64, &[(&str, &str)]); 3] = [
        (0.9, &[("0.000", "0.530"), ("1.115", "1.700")]),
        (1.0, &[("0.000", "0.530"), ("0.115", "1.115"), ("1.115", "1.700")]),
        (2.0, &[("0.000", "1.700")]),
    ];
    for (gamma, want) in cases {
        let want: BTreeSet<(String, String)> =
            want.iter().map(|&(a, b)| (a.to_string(), b.to_string())).collect();
        let budget = Budget::new(gamma).unwrap().with_tolerance(PAIR_TOLERANCE).unwrap();
        for algo in PairAlgorithm::ALL {
            let got = all_tight_pairs(&dag, budget, algo).named(dag.names());
            ensure(got == want, || format!("gamma={gamma} {algo}: got {got:?}"))?;
        }
    }
    Ok("gamma 0.9, 1, 2 identical across tighten, stacked, weights".into())
}

fn criterion_5() -> Outcome {
    let chain = Arc::new(Poset::chain(["1", "2", "3", "4"].map(String::from).to_vec()));
    let rel = |pairs: &[(usize, usize)]| {
        Correspondence::new(Arc::clone(&chain), pairs.iter().map(|&(a, b)| (a - 1, b - 1)))
            .unwrap()
    };
    let r = rel(&[(1, 2), (1, 4), (2, 3), (3, 4)]);
    let checks = [
        ("t", tighten(&r), rel(&[(1, 4)])),
        ("t_r", right_tighten(&r), rel(&[(1, 4), (2, 3), (3, 4)])),
        ("t_l", left_tighten(&r), rel(&[(1, 2), (1, 4), (2, 3)])),
        (
            "t_r & t_l",
            right_tighten(&r).intersection(&left_tighten(&r)),
            rel(&[(1, 4), (2, 3)]),
        ),
    ];
    for (name, got, want) in checks {
        ensure(got.pair_set() == want.pair_set(), || {
            format!("{name}: got {:?}", got.named_pairs())
        })?;
    }
    Ok("t, t_r, t_l and t_r & t_l exact".into())
}

fn random_poset(rng: &mut ChaCha8Rng, max_n: usize) -> Arc<Poset> {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.1..0.6);
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                pairs.push((a, b));
            }
        }
    }
    // shuffle names against the generating order so the linear extension is
    // not simply the identity
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let pairs: Vec<_> = pairs.into_iter().map(|(a, b)| (perm[a], perm[b])).collect();
    let names = (0..n).map(|i| format!("e{i}")).collect();
    Arc::new(Poset::from_relation(names, &pairs).unwrap())
}

fn random_relation(rng: &mut ChaCha8Rng, poset: &Arc<Poset>) -> Correspondence {
    let n = poset.len();
    let p = rng.gen_range(0.1..0.7);
    let pairs: Vec<_> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Correspondence::new(Arc::clone(poset), pairs).unwrap()
}

fn prop_idempotence(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for case in 0..PROPERTY_CASES {
        let poset = random_poset(rng, 7);
        let r = random_relation(rng, &poset);
        let once = tighten(&r);
        ensure(once == oracle_tighten(&r), || format!("case {case}: t differs from oracle"))?;
        ensure(tighten(&once) == once, || format!("case {case}: t(t(R)) != t(R)"))?;
    }
    Ok(())
}

fn prop_inclusion_chain(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for case in 0..PROPERTY_CASES {
        let poset = random_poset(rng, 7);
        let r = random_relation(rng, &poset);
        let (tr, tl) = (right_tighten(&r), left_tighten(&r));
        ensure(tr == oracle_right_tighten(&r) && tl == oracle_left_tighten(&r), || {
            format!("case {case}: one-sided tightening differs from oracle")
        })?;
        let both = tr.intersection(&tl);
        ensure(tighten(&r).is_subset(&both) && both.is_subset(&r), || {
            format!("case {case}: inclusion chain broken on {:?}", r.named_pairs())
        })?;
    }
    Ok(())
}

fn prop_convex_equalities(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for case in 0..PROPERTY_CASES {
        let n = rng.gen_range(1..=10);
        let dag = synth::random_dag(n, rng.gen_range(0.1..0.6), rng).unwrap();
        let gamma = rng.gen_range(0..=8) as f64 / 2.0;
        let r = build_correspondence(&dag, Budget::new(gamma).unwrap());
        ensure(is_convex(&r), || format!("case {case}: bounded relation not convex"))?;
        let t = tighten(&r);
        let both = right_tighten(&r).intersection(&left_tighten(&r));
        let composed = right_tighten(&left_tighten(&r));
        ensure(t == both && both == composed, || {
            format!("case {case}: t, t_r & t_l, t_r(t_l) disagree at gamma={gamma}")
        })?;
    }
    Ok(())
}

fn prop_paths_match_oracle(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for case in 0..PROPERTY_CASES {
        let n = rng.gen_range(1..=8);
        let g = synth::random_digraph(n, rng.gen_range(0.05..0.4), 3, rng).unwrap();
        let budget = Budget::new(rng.gen_range(0..=12) as f64 / 2.0).unwrap();
        let want = oracle_tight_paths(&g, budget, DEFAULT_PATH_CAP).map_err(|e| e.to_string())?;
        let got = all_tight_paths(&g, budget);
        ensure(got.vertex_sets() == want.vertex_sets(), || {
            format!("case {case}: paths differ at gamma={}", budget.gamma())
        })?;
    }
    Ok(())
}

fn prop_pairs_match_oracle(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for case in 0..PROPERTY_CASES {
        let n = rng.gen_range(1..=12);
        let dag = synth::random_dag(n, rng.gen_range(0.1..0.5), rng).unwrap();
        let budget = Budget::new(rng.gen_range(0..=16) as f64 / 2.0)
            .unwrap()
            .with_tolerance(PAIR_TOLERANCE)
            .unwrap();
        let want = oracle_tight_pairs(&dag, budget, DEFAULT_PATH_CAP).map_err(|e| e.to_string())?;
        for algo in PairAlgorithm::ALL {
            let got = all_tight_pairs(&dag, budget, algo);
            ensure(got == want, || {
                format!("case {case}: {algo} differs at gamma={}", budget.gamma())
            })?;
        }
    }
    Ok(())
}

fn prop_every_vertex_covered(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for case in 0..PROPERTY_CASES {
        let n = rng.gen_range(1..=10);
        let g = synth::random_digraph(n, rng.gen_range(0.05..0.4), 4, rng).unwrap();
        let budget = Budget::new(rng.gen_range(0..=10) as f64 / 2.0).unwrap();
        let found = all_tight_paths(&g, budget);
        let mut seen = vec![false; n];
        for p in found.iter() {
            for &v in p.vertices.iter() {
                seen[v] = true;
            }
        }
        ensure(seen.iter().all(|&s| s), || format!("case {case}: uncovered vertex"))?;
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    type Prop = fn(&mut ChaCha8Rng) -> Result<(), String>;
    let parts: [(&str, u64, Prop); 6] = [
        ("a", 0x61, prop_idempotence),
        ("b", 0x62, prop_inclusion_chain),
        ("c", 0x63, prop_convex_equalities),
        ("d", 0x64, prop_paths_match_oracle),
        ("e", 0x65, prop_pairs_match_oracle),
        ("f", 0x66, prop_every_vertex_covered),
    ];
    let start = Instant::now();
    for (label, seed, prop) in parts {
        prop(&mut seeded(seed)).map_err(|e| format!("({label}) {e}"))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(60), "property suite")?;
    Ok(format!("6 parts x {PROPERTY_CASES} cases in {elapsed:?}"))
}

fn random_dataset(rng: &mut ChaCha8Rng) -> TransactionalDataset {
    let items = rng.gen_range(1..=6);
    let rows = rng.gen_range(1..=9);
    let transactions: Vec<Vec<String>> = (0..rows)
        .map(|_| {
            (0..items)
                .filter(|_| rng.gen_bool(0.5))
                .map(|i| format!("i{i}"))
                .collect()
        })
        .collect();
    TransactionalDataset::from_named(&transactions)
}

fn criterion_7() -> Outcome {
    let mut rng = seeded(0x70);
    let mut compared = 0;
    for case in 0..PIPELINE_DATASETS {
        let ds = random_dataset(&mut rng);
        let lat = mine_closures(&ds, 1).map_err(|e| format!("case {case}: {e}"))?;
        let scaled = to_log_weighted_dag(&lat, EqualSupportPolicy::Reject)
            .map_err(|e| format!("case {case}: {e}"))?;
        let rows = ds.len() as u64;
        // thresholds at exact support ratios land on boundary ties
        for den in 1..=rows {
            for num in 1..=den {
                let conf: Confidence = format!("{num}/{den}").parse().unwrap();
                let want: BTreeSet<(ItemSet, ItemSet)> = basic_antecedents(&lat, &conf)
                    .into_iter()
                    .map(|p| (p.antecedent, p.consequent))
                    .collect();
                let budget = Budget::new(conf.log_threshold())
                    .unwrap()
                    .with_tolerance(PAIR_TOLERANCE)
                    .unwrap();
                let got: BTreeSet<(ItemSet, ItemSet)> =
                    all_tight_pairs(&scaled.dag, budget, PairAlgorithm::Weights)
                        .iter()
                        .map(|(u, v)| {
                            let set = |x: usize| lat.set(scaled.members[x][0]).clone();
                            (set(u), set(v))
                        })
                        .collect();
                ensure(got == want, || format!("case {case}: mismatch at confidence {conf}"))?;
                compared += 1;
            }
        }
    }
    Ok(format!("{PIPELINE_DATASETS} datasets, {compared} thresholds, zero mismatches"))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let dag = synth::layered_lattice(30, 10, &mut seeded(11)).map_err(|e| e.to_string())?;
    ensure(dag.vertex_count() >= 300, || format!("{} vertices", dag.vertex_count()))?;
    let config = BenchConfig {
        graph_id: "lattice-30x10".into(),
        algorithms: vec![BenchAlgorithm::Paths, BenchAlgorithm::Stacked, BenchAlgorithm::Weights],
        gammas: GammaRange::new(0.0, 4.0, 25).unwrap(),
        reps: 5,
        warmup: 1,
        root: None,
    };
    let records = run_bench(&BenchGraph::Dag(dag), &config).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();

    let column = |algo: BenchAlgorithm| -> Vec<_> {
        records.iter().filter(|r| r.algo == algo.as_str()).collect()
    };
    let (paths, stacked, weights) = (
        column(BenchAlgorithm::Paths),
        column(BenchAlgorithm::Stacked),
        column(BenchAlgorithm::Weights),
    );
    ensure(paths.len() == 25 && stacked.len() == 25 && weights.len() == 25, || {
        "sweep is missing cells".into()
    })?;
    let multiplicity: Vec<f64> = paths
        .iter()
        .zip(&weights)
        .map(|(p, w)| p.count.unwrap() as f64 / w.count.unwrap() as f64)
        .collect();
    let onset = multiplicity
        .iter()
        .position(|&m| m > 10.0)
        .ok_or("multiplicity never exceeds 10")?;
    let secs = |r: &&tightpaths::bench::BenchRecord| r.seconds.unwrap();
    for i in onset..24 {
        ensure(secs(&paths[i + 1]) > secs(&paths[i]), || {
            format!(
                "paths time not increasing at gamma {:.3} -> {:.3}: {:.6} -> {:.6}",
                paths[i].gamma,
                paths[i + 1].gamma,
                secs(&paths[i]),
                secs(&paths[i + 1])
            )
        })?;
    }
    let quartile = (3 * 24usize).div_ceil(4);
    for i in quartile..25 {
        ensure(secs(&paths[i]) > secs(&stacked[i]), || {
            format!(
                "paths not slower than stacked at gamma {:.3}: {:.6} vs {:.6}",
                paths[i].gamma,
                secs(&paths[i]),
                secs(&stacked[i])
            )
        })?;
    }

    let csv = to_csv_string(&records);
    ensure(csv.lines().next() == Some(&CSV_HEADER.join(",")), || "CSV header changed".into())?;
    let parsed = read_csv(csv.as_bytes()).map_err(|e| e.to_string())?;
    ensure(parsed.len() == records.len() && to_csv_string(&parsed) == csv, || {
        "CSV does not round-trip".into()
    })?;
    within(elapsed, Duration::from_secs(120), "sweep")?;
    Ok(format!(
        "multiplicity > 10 from gamma {:.3}; paths slower than stacked from gamma {:.3}; \
         CSV round-trips; sweep {elapsed:?}",
        paths[onset].gamma, paths[quartile].gamma
    ))
}

fn main() {
    let criteria: [(u32, fn() -> Outcome); 8] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (n, run) in criteria {
        let outcome = panic::catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|p| {
                let msg = p
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                Err(format!("panicked: {msg}"))
            });
        match outcome {
            Ok(detail) => println!("criterion {n}: PASS  {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {n}: FAIL  {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
