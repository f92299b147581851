//! One line per acceptance criterion. Runs without the libtest harness so the
//! lines show up in plain `cargo test` output.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::{
    brute_cycle_parity, brute_generators, brute_induced_cycles, brute_semigroup_slice, glued_target, graph_from_mask,
    graphs_up_to_iso, hnf_contains, random_clique_sum, random_k5_free, random_sum, sum_cuts, RandomSum,
};
use cutnorm::cutlattice::{CutBasis, FacetSystem, GeneratorCone};
use cutnorm::lp::Rational;
use cutnorm::lifting::{merge_clique_sum, pattern_counts, DeletionLift};
use cutnorm::{
    classify_normality, decompose, facet_inequalities, find_hole, hilbert_check, in_cone, in_lattice, minor_profile,
    parse_named, verify_normality, Budget, Graph, HilbertVerdict, HomPoint, Status, VerifyMode,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn named(s: &str) -> Graph {
    parse_named(s).unwrap()
}

fn small_graphs() -> Vec<Graph> {
    (1..=5).flat_map(graphs_up_to_iso).collect()
}

fn criterion_1() -> Outcome {
    let k5 = named("K5");
    let v = verify_normality(&k5, VerifyMode::Bounded(9), &Budget::unlimited()).map_err(|e| e.to_string())?;
    ensure!(v.status == Status::NotNormal, "status {:?}", v.status);
    let hole = v.hole.ok_or("no hole reported")?;
    ensure!(hole.alpha == v.search_degree && hole.alpha <= 9, "degree {}", hole.alpha);
    ensure!(in_lattice(&k5, &hole).unwrap() && brute_cycle_parity(&k5, &hole.x), "not in lattice");
    ensure!(in_cone(&k5, &hole).unwrap(), "not in cone");
    ensure!(decompose(&k5, &hole).unwrap().is_none(), "decomposes");
    let mut t = hole.x.clone();
    t.push(hole.alpha);
    ensure!(!brute_semigroup_slice(&k5, hole.alpha).contains(&t), "brute force decomposes it");
    Ok(format!("k* = {}, hole {hole}", hole.alpha))
}

fn criterion_2() -> Outcome {
    let k5 = named("K5");
    let graphs = small_graphs();
    for g in &graphs {
        let v = classify_normality(g, &Budget::unlimited());
        if *g == k5 {
            ensure!(v.status == Status::NotNormal, "K5 classified {:?}", v.status);
            continue;
        }
        ensure!(v.status == Status::NormalCertified, "{g}: {:?} {:?}", v.status, v.rules);
        ensure!(find_hole(g, 3).unwrap().is_none(), "{g}: hole at degree <= 3");
    }
    Ok(format!("{} graphs, only K5 not normal", graphs.len()))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    ensure!(find_hole(&named("V8"), 3).unwrap().is_none(), "V8 has a hole");
    Ok(format!("V8 clean through degree 3 in {:.1} s", start.elapsed().as_secs_f64()))
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..100 {
        let g = random_k5_free(&mut rng, 3, 6);
        let e0 = rng.gen_range(0..g.m());
        let (deleted, _) = g.delete_edge(e0).unwrap();
        let alpha = rng.gen_range(0..=4);
        let x = random_sum(&deleted, alpha, &mut rng);
        let lift = DeletionLift::new(&g, e0).unwrap();
        let b = lift.bounds(&x, alpha).map_err(|e| format!("case {i}: {e}"))?;
        ensure!(b.choose().is_some(), "case {i}: empty gamma range on {g}");
        let p = lift.lift(&x, alpha).map_err(|e| format!("case {i}: {e}"))?;
        ensure!(brute_cycle_parity(&g, &p.x) && in_lattice(&g, &p).unwrap(), "case {i}: lift leaves the lattice");
        ensure!(GeneratorCone::new(&CutBasis::new(&g).unwrap()).contains(&p), "case {i}: lift leaves the cone");
    }
    Ok("100 lifts in lattice and cone".into())
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4048);
    let mut sizes = [0; 4];
    for i in 0..100 {
        let RandomSum { spec, dec1, dec2 } = random_clique_sum(&mut rng);
        sizes[spec.shared.len()] += 1;
        let left: Vec<usize> = spec.shared.iter().map(|p| p.0).collect();
        let right: Vec<usize> = spec.shared.iter().map(|p| p.1).collect();
        ensure!(
            pattern_counts(spec.g1.n(), &left, &dec1).unwrap() == pattern_counts(spec.g2.n(), &right, &dec2).unwrap(),
            "case {i}: pattern counts differ"
        );
        let merged = merge_clique_sum(&spec, &dec1, &dec2).map_err(|e| format!("case {i}: {e}"))?;
        let glued = spec.glue().unwrap().graph;
        let target = glued_target(&spec, &sum_cuts(&spec.g1, &dec1), &sum_cuts(&spec.g2, &dec2));
        ensure!(merged.len() == dec1.len(), "case {i}: wrong length");
        ensure!(sum_cuts(&glued, &merged) == target, "case {i}: merged sum misses the target");
    }
    Ok(format!("100 merges (s=1: {}, s=2: {}, s=3: {})", sizes[1], sizes[2], sizes[3]))
}

fn criterion_6() -> Outcome {
    let mut count = 0;
    for h in (1..=4).flat_map(graphs_up_to_iso) {
        let s = h.suspension();
        let normal = minor_profile(&h).k4_free;
        let class = classify_normality(&s, &Budget::unlimited()).status;
        if normal {
            ensure!(class == Status::NormalCertified, "suspension of {h}: {class:?}");
            ensure!(find_hole(&s, 3).unwrap().is_none(), "suspension of {h} has a hole");
        } else {
            ensure!(class == Status::NotNormal, "suspension of {h}: {class:?}");
            ensure!(find_hole(&s, 9).unwrap().is_some(), "suspension of {h} has no hole");
        }
        count += 1;
    }
    Ok(format!("{count} suspensions"))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let (mut graphs, mut minors) = (0, 0);
    while graphs < 50 {
        let n = rng.gen_range(4..=6);
        let g = graph_from_mask(n, rng.gen_range(0..1u64 << (n * (n - 1) / 2)));
        if g.m() == 0 || find_hole(&g, 3).unwrap().is_some() {
            continue;
        }
        graphs += 1;
        for e in 0..g.m() {
            let (d, _) = g.delete_edge(e).unwrap();
            let c = g.contract_edge(e).unwrap();
            for h in [d, c] {
                ensure!(find_hole(&h, 3).unwrap().is_none(), "minor {h} of {g} has a hole");
                minors += 1;
            }
        }
    }
    Ok(format!("{graphs} graphs, {minors} one-step minors clean"))
}

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p.into(), d.into())
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut graphs = 0;
    for g in small_graphs() {
        if !minor_profile(&g).k5_free {
            continue;
        }
        graphs += 1;
        let rows = brute_generators(&g);
        for _ in 0..200 {
            let alpha = rng.gen_range(0..=4);
            let mut x = random_sum(&g, alpha, &mut rng);
            for a in x.iter_mut() {
                *a += rng.gen_range(-1..=1);
            }
            let mut t = x.clone();
            t.push(alpha);
            let ours = in_lattice(&g, &HomPoint::new(x.clone(), alpha)).unwrap();
            ensure!(ours == hnf_contains(&rows, &t), "{g}: lattice oracles disagree at {x:?}; {alpha}");
        }
        let facets = FacetSystem::from_graph_unchecked(&g);
        let lp = GeneratorCone::new(&CutBasis::new(&g).unwrap());
        for _ in 0..200 {
            let (x, alpha): (Vec<Rational>, Rational) = if rng.gen_bool(0.5) {
                // a generator sum scaled down, pushed slightly off the cone half the time
                let k = rng.gen_range(1..=6);
                let d = rng.gen_range(1..=3);
                let nudge = rng.gen_bool(0.5);
                let x = random_sum(&g, k, &mut rng)
                    .into_iter()
                    .map(|v| q(v, d) + if nudge { q(rng.gen_range(-1..=1), 5) } else { q(0, 1) })
                    .collect();
                (x, q(k, d))
            } else {
                let alpha = q(rng.gen_range(0..=6), rng.gen_range(1..=3));
                ((0..g.m()).map(|_| q(rng.gen_range(-1..=7), rng.gen_range(1..=4))).collect(), alpha)
            };
            ensure!(
                facets.contains_rational(&x, &alpha) == lp.contains_rational(&x, &alpha),
                "{g}: cone backends disagree"
            );
        }
    }
    Ok(format!("{graphs} graphs, 400 points each"))
}

fn criterion_9() -> Outcome {
    let k5 = named("K5");
    let verdict = hilbert_check(&k5, 3, &Budget::unlimited()).map_err(|e| e.to_string())?;
    ensure!(verdict == HilbertVerdict::NoViolationUpTo { bound: 3 }, "{verdict:?}");
    ensure!(find_hole(&k5, 9).unwrap().is_some(), "the hole vanished");
    Ok("Hilbert clean to 3, hole present".into())
}

fn criterion_10() -> Outcome {
    let mut parts = Vec::new();
    for name in ["K3", "C5", "K4", "V8"] {
        let g = named(name);
        let sys = facet_inequalities(&g).map_err(|e| e.to_string())?;
        let ours: usize = g.induced_cycles().iter().map(|c| 1usize << (c.len() - 1)).sum();
        let brute: usize = brute_induced_cycles(&g).iter().map(|c| 1usize << (c.len() - 1)).sum();
        ensure!(ours == brute, "{name}: cycle enumerations disagree");
        ensure!(sys.len() == 2 * g.m() + brute, "{name}: {} inequalities", sys.len());
        parts.push(format!("{name}={}", sys.len()));
    }
    Ok(parts.join(" "))
}

fn main() {
    let criteria: [fn() -> Outcome; 10] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
    ];
    let mut failed = 0;
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(c)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {}: PASS {detail} [{secs:.2} s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {why} [{secs:.2} s]", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
