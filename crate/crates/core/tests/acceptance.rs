//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line for
//! each, and exits nonzero if any failed.

mod common;

use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use schurq::bar_tableaux::enumerate_tableaux;
use schurq::partitions::{enumerate_odd, enumerate_strict, skew_shapes_up_to};
use schurq::srank::{all_configurations, min_bars_bruteforce};
use schurq::{
    character, kappa, pfaffian, place_zeros, q_k, q_morris, q_pf, q_recur, q_skew_pf, q_skew_strips,
    q_two, srank_skew, srank_straight, OddPartition, PPoly, SkewSymMatrix,
};

use common::{matching_pfaffian, mono, random_skew_matrix, seeded_rng, skew, sp};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took <= limit, || format!("took {took:?}, limit {limit:?}"))
}

fn cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("schurq").chain(args.iter().copied());
    let code = schurq::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let expected = mono(&[1, 1, 1, 1], 2, 1);
    let shape = skew(&[4, 3], &[3]);
    ensure(q_skew_pf(&shape) == expected, || format!("pf gave {}", q_skew_pf(&shape)))?;
    ensure(q_skew_strips(&shape) == expected, || {
        format!("strips gave {}", q_skew_strips(&shape))
    })?;
    for route in ["pf", "strips"] {
        let (code, out) = cli(&["qfun", "4,3/3", "--route", route]);
        ensure(code == 0 && out == "2*p[1,1,1,1]\n", || {
            format!("qfun --route {route}: exit {code}, output {out:?}")
        })?;
    }
    within(start, Duration::from_secs(1))?;
    Ok("Q_(4,3)/(3) = 2*p[1,1,1,1] by pf and strips".into())
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let shape = skew(&[4, 3], &[3]);
    let srank = srank_skew(&shape).map_err(|e| e.to_string())?;
    let lowest = q_skew_pf(&shape).lowest_degree().map_err(|e| e.to_string())?;
    ensure(srank == 2, || format!("srank {srank}"))?;
    ensure(lowest == 4, || format!("lowest degree {lowest}"))?;
    within(start, Duration::from_secs(1))?;
    Ok("srank 2, lowest degree 4".into())
}

fn criterion_3() -> Outcome {
    let mut checked = 0;
    for n in 1..=14 {
        for lam in enumerate_strict(n) {
            let q = q_morris(&lam);
            let lowest = q.lowest_degree().map_err(|e| format!("{lam}: {e}"))?;
            let srank = srank_straight(&lam);
            ensure(lowest == srank, || {
                format!(
                    "{lam}: lowest degree {lowest}, srank {srank}, bottom {}",
                    q.bottom().unwrap()
                )
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} strict shapes, 0 violations"))
}

fn criterion_4() -> Outcome {
    let mut straight = 0;
    for n in 0..=12 {
        for lam in enumerate_strict(n) {
            let m = q_morris(&lam);
            ensure(q_recur(&lam) == m, || format!("{lam}: recur differs from morris"))?;
            ensure(q_pf(&lam) == m, || format!("{lam}: pf differs from morris"))?;
            straight += 1;
        }
    }
    let shapes = skew_shapes_up_to(10);
    for shape in &shapes {
        let pf = q_skew_pf(shape);
        let strips = q_skew_strips(shape);
        ensure(pf == strips, || format!("{shape}: pf {pf}, strips {strips}"))?;
    }
    Ok(format!("{straight} straight and {} skew shapes, 0 violations", shapes.len()))
}

fn criterion_5() -> Outcome {
    let shapes = skew_shapes_up_to(10);
    for shape in &shapes {
        let srank = srank_skew(shape).map_err(|e| format!("{shape}: {e}"))?;
        let min = min_bars_bruteforce(shape, 10).map_err(|e| format!("{shape}: {e}"))?;
        ensure(min == Some(srank), || format!("{shape}: srank {srank}, brute force {min:?}"))?;
    }
    Ok(format!("{} skew shapes, 0 violations", shapes.len()))
}

fn criterion_6() -> Outcome {
    let shapes = skew_shapes_up_to(9);
    let mut configs = 0;
    for shape in &shapes {
        let best = place_zeros(shape).map_err(|e| format!("{shape}: {e}"))?;
        ensure(best.inner().parts() == shape.inner().parts(), || {
            format!("{shape}: placement has inner {:?}", best.inner())
        })?;
        let k = kappa(&best);
        for c in all_configurations(shape) {
            ensure(k <= kappa(&c), || {
                format!("{shape}: greedy kappa {k} exceeds {} at zeros {:?}", kappa(&c), c.zeros())
            })?;
            configs += 1;
        }
    }
    Ok(format!("{} skew shapes, {configs} configurations, 0 violations", shapes.len()))
}

fn criterion_7() -> Outcome {
    let mut cases = 0;
    for n in 1..=20 {
        for lam in enumerate_strict(n) {
            if lam.len() != 2 || lam.parts()[0] % 2 != lam.parts()[1] % 2 {
                continue;
            }
            for sigma in enumerate_odd(n) {
                if sigma.len() != 2 || sigma.parts()[1] >= lam.parts()[1] {
                    continue;
                }
                let ts = enumerate_tableaux(&lam, &sp(&[]), sigma.parts())
                    .map_err(|e| e.to_string())?;
                let sum: i64 = ts.iter().map(|t| t.weight()).sum();
                ensure(ts.len() == 2 && sum == 0, || {
                    format!("{lam} type {sigma}: {} tableaux, weight sum {sum}", ts.len())
                })?;
                cases += 1;
            }
        }
    }
    let ts = enumerate_tableaux(&sp(&[8, 6]), &sp(&[]), &[11, 3]).map_err(|e| e.to_string())?;
    let mut weights: Vec<i64> = ts.iter().map(|t| t.weight()).collect();
    weights.sort_unstable();
    ensure(weights == [-2, 2], || format!("(8,6) type (11,3): weights {weights:?}"))?;
    Ok(format!("{cases} cases, (8,6)/(11,3) weights {{-2, 2}}"))
}

fn criterion_8() -> Outcome {
    for a in (1..24).step_by(2) {
        for b in (1..a).step_by(2) {
            if a + b > 24 {
                continue;
            }
            let pi = OddPartition::new(vec![a, b]).map_err(|e| e.to_string())?;
            let chi = character(&sp(&[a, b]), &pi).map_err(|e| e.to_string())?;
            ensure(chi == -1, || format!("<({a},{b})>(({a},{b})) = {chi}"))?;
        }
    }
    for n in 1..=12i64 {
        let mut acc = PPoly::from_int(0);
        for i in 0..=n {
            let term = &q_k(i) * &q_k(n - i);
            acc = if i % 2 == 0 { acc + term } else { acc - term };
        }
        ensure(acc.is_zero(), || format!("q-relation fails at n = {n}: {acc}"))?;
    }
    for a in 0..=8 {
        if a > 0 {
            ensure(q_two(a, a).is_zero(), || format!("Q_({a},{a}) = {}", q_two(a, a)))?;
        }
        for b in 0..=8 {
            if a != b {
                ensure(q_two(a, b) == -q_two(b, a), || format!("Q_({a},{b}) != -Q_({b},{a})"))?;
            }
        }
    }
    Ok("two odd rows, q-relation to 12, Q_(a,b) antisymmetry to 8".into())
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let mut rng = seeded_rng(0x5eed);
    for trial in 0..200 {
        let size = 2 * (1 + trial % 4);
        let a = random_skew_matrix(&mut rng, size, 9);
        let m = SkewSymMatrix::from_fn(size, |i, j| BigInt::from(a[i][j]));
        let got = pfaffian(&m);
        let want = matching_pfaffian(&a);
        ensure(got == want, || format!("size {size}: recursive {got}, matchings {want}"))?;
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("200 matrices of sizes 2..8 in {:?}", start.elapsed()))
}

fn criterion_10() -> Outcome {
    let shapes = skew_shapes_up_to(10);
    let mut nonzero = 0;
    for shape in &shapes {
        let q = q_skew_pf(shape);
        let Ok(lowest) = q.lowest_degree() else {
            continue;
        };
        let srank = srank_skew(shape).map_err(|e| e.to_string())?;
        ensure(lowest >= srank, || format!("{shape}: lowest degree {lowest} < srank {srank}"))?;
        nonzero += 1;
    }
    Ok(format!("{nonzero} nonzero skew Q-functions, 0 violations"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("skew example by two routes", criterion_1),
        ("skew srank versus lowest degree", criterion_2),
        ("lowest degree equals srank, |λ| ≤ 14", criterion_3),
        ("route equality", criterion_4),
        ("skew srank equals minimum bars, |λ| ≤ 10", criterion_5),
        ("greedy placement minimizes kappa, |λ| ≤ 9", criterion_6),
        ("two-row cancellation, |λ| ≤ 20", criterion_7),
        ("character and q identities", criterion_8),
        ("Pfaffian versus matching sum", criterion_9),
        ("skew lower bound, |λ| ≤ 10", criterion_10),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(check).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({detail}; {took:.2?})", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
