//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use dashu::integer::IBig;
use dashu::rational::RBig;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use euler_hurwitz::cli;
use euler_hurwitz::combinatorics::{
    bell_eval, bell_partition_sum, series_pow_alpha, stirling1, stirling1_bell, stirling1_closed, stirling1_row,
};
use euler_hurwitz::gamma_tools::{
    gamma_deriv_at_1, gamma_deriv_at_1_det, recip_gamma_lambda, stirling_over_factorial, wilf_asymptotic,
};
use euler_hurwitz::harmonic::coppo_sweep;
use euler_hurwitz::numerics::{
    const_catalan, const_gamma, const_pi, const_zeta, factorial, rat, HighPrecFloat, PrecisionContext, Real,
};
use euler_hurwitz::verify::{self, Profile, Status};
use euler_hurwitz::zeta_series::{
    alt_hurwitz_ref, catalan_series, conjecture_partial, convergence_table, digamma_half_sum, digamma_target,
    euler_hurwitz, euler_sum_partial, hurwitz_ref, sondow_alt, stirling_route, CatalanKind, Conjecture, EulerSumKind,
    EvalRequest, Formula,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_secs: u64) -> Result<(), String> {
    ensure(elapsed.as_secs_f64() < limit_secs as f64, || format!("took {:.1}s, limit {limit_secs}s", elapsed.as_secs_f64()))
}

fn hp30() -> PrecisionContext {
    PrecisionContext::high(30).unwrap()
}

fn rel_diff(a: &HighPrecFloat, b: &HighPrecFloat) -> f64 {
    let d = (a - b).abs();
    if b.is_zero() {
        d.to_f64()
    } else {
        (&d / &b.abs()).to_f64()
    }
}

fn coppo() -> Outcome {
    let start = Instant::now();
    let mut cases = 0usize;
    for x in [RBig::ONE, rat(1, 2), rat(1, 3), RBig::from(2), rat(7, 4)] {
        for c in coppo_sweep(200, 8, &x).map_err(|e| e.to_string())? {
            cases += 1;
            ensure(c.lhs == c.rhs, || format!("mismatch at n={} q={} x={x}", c.n, c.q))?;
        }
    }
    within(start.elapsed(), 60)?;
    Ok(format!("{cases} cases exact in {:.1}s", start.elapsed().as_secs_f64()))
}

fn stirling_routes() -> Outcome {
    let start = Instant::now();
    for n in 1..=50u64 {
        let row = stirling1_row(n);
        for k in 1..=n {
            let s = stirling1(n, k);
            ensure(row[k as usize] == s, || format!("row/recurrence mismatch s({n},{k})"))?;
            if k <= 4 {
                let closed = stirling1_closed(n, k).map_err(|e| e.to_string())?;
                ensure(closed == RBig::from(s.clone()), || format!("closed form mismatch s({n},{k})"))?;
            }
            ensure(stirling1_bell(n - 1, k - 1) == s, || format!("Bell route mismatch s({n},{k})"))?;
        }
        let sum: IBig = row.iter().sum();
        let abs: IBig = row.iter().map(|v| if *v < IBig::ZERO { -v.clone() } else { v.clone() }).sum();
        if n >= 2 {
            ensure(sum == IBig::ZERO, || format!("row sum of n={n} is {sum}"))?;
        }
        ensure(abs == IBig::from(factorial(n)), || format!("|row| sum of n={n} is not n!"))?;
    }
    within(start.elapsed(), 10)?;
    Ok(format!("n ≤ 50 exact in {:.2}s", start.elapsed().as_secs_f64()))
}

fn bell_dual() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for v in 0..50 {
        let xs: Vec<RBig> = (0..20)
            .map(|_| rat(rng.gen_range(-50..=50), rng.gen_range(1..=30)))
            .collect();
        for n in 0..=20 {
            let a = bell_partition_sum(&xs[..n]);
            let b = bell_eval(&xs[..n]);
            ensure(a == b, || format!("vector {v}, n={n}: partition sum differs from recurrence"))?;
        }
    }
    within(start.elapsed(), 10)?;
    Ok(format!("50 vectors, n ≤ 20 exact in {:.2}s", start.elapsed().as_secs_f64()))
}

fn gamma_derivatives() -> Outcome {
    let ctx = hp30();
    let mut worst = 0f64;
    for m in 1..=10 {
        let bell = gamma_deriv_at_1(m, &ctx).map_err(|e| e.to_string())?;
        let det = gamma_deriv_at_1_det(m, &ctx).map_err(|e| e.to_string())?;
        let r = rel_diff(&bell, &det);
        worst = worst.max(r);
        ensure(r < 1e-25, || format!("m={m}: routes differ by {r:e}"))?;
    }
    let g = const_gamma(&ctx);
    let z2 = const_zeta(2, &ctx).unwrap();
    let z3 = const_zeta(3, &ctx).unwrap();
    let i = |v: i64| HighPrecFloat::int(v, &ctx);
    let closed = [
        -g.clone(),
        &z2 + &(&g * &g),
        -(i(2) * z3) - i(3) * &g * &z2 - &g * &g * &g,
    ];
    for (m, want) in (1..=3).zip(closed.iter()) {
        let got = gamma_deriv_at_1(m, &ctx).map_err(|e| e.to_string())?;
        let r = rel_diff(&got, want);
        worst = worst.max(r);
        ensure(r < 1e-25, || format!("m={m}: closed form differs by {r:e}"))?;
    }
    Ok(format!("m ≤ 10, worst relative difference {worst:.1e}"))
}

fn lambda_coefficients() -> Outcome {
    let ctx = hp30();
    let lam = recip_gamma_lambda(5, &ctx).map_err(|e| e.to_string())?;
    let g = const_gamma(&ctx);
    let pi = const_pi(&ctx);
    let z3 = const_zeta(3, &ctx).unwrap();
    let i = |v: i64| HighPrecFloat::int(v, &ctx);
    let g2 = &g * &g;
    let p2 = &pi * &pi;
    let closed = [
        i(1),
        g.clone(),
        (i(6) * &g2 - p2.clone()) / i(12),
        (i(2) * &g2 * &g - &g * &p2 + i(4) * &z3) / i(12),
    ];
    let mut worst = 0f64;
    for (j, want) in closed.iter().enumerate() {
        let r = rel_diff(&lam[j], want);
        worst = worst.max(r);
        ensure(r < 1e-25, || format!("λ_{}: closed form differs by {r:e}", j + 1))?;
    }
    // 1/Γ(1+x) = exp(γx − Σ_{m≥2} (−1)^m ζ(m) x^m/m), inverted from the Γ(1+x) log series.
    let mut b = vec![-g.clone()];
    for m in 2..=5u32 {
        let z = const_zeta(m, &ctx).unwrap();
        b.push(if m % 2 == 0 { z } else { -z });
    }
    let inv = series_pow_alpha(&HighPrecFloat::zero(), &b, &-HighPrecFloat::one(), 4).map_err(|e| e.to_string())?;
    let r = rel_diff(&lam[4], &inv[4]);
    worst = worst.max(r);
    ensure(r < 1e-25, || format!("λ_5: series oracle differs by {r:e}"))?;
    Ok(format!("λ_1..λ_5, worst relative difference {worst:.1e}"))
}

fn euler_sums() -> Outcome {
    let start = Instant::now();
    let fast = PrecisionContext::fast();
    let refc = hp30();
    let mut parts = Vec::new();
    for kind in [EulerSumKind::E41, EulerSumKind::E43, EulerSumKind::E45_8, EulerSumKind::E45_10] {
        let r = euler_sum_partial(kind, 100_000, &fast).map_err(|e| e.to_string())?;
        let (c, m) = kind.zeta_target().unwrap();
        let want = HighPrecFloat::from_f64(c as f64) * const_zeta(m, &refc).unwrap();
        let err = (&r.value - &want).abs().to_f64();
        let tail = r.tail_estimate.to_f64();
        let rel = err / want.to_f64().abs();
        ensure(err <= 3.0 * tail, || format!("{kind}: error {err:.3e} exceeds 3×tail {:.3e}", 3.0 * tail))?;
        ensure(rel < 5e-3, || format!("{kind}: relative error {rel:.3e}"))?;
        parts.push(format!("{kind} rel={rel:.1e}"));
    }
    within(start.elapsed(), 30)?;
    Ok(parts.join(", "))
}

fn alternating() -> Outcome {
    let start = Instant::now();
    let fast = PrecisionContext::fast();
    let refc = hp30();
    let mut worst = 0f64;
    for s in 1..=5u32 {
        let want = alt_hurwitz_ref(&RBig::from(s), &RBig::ONE, &refc).map_err(|e| e.to_string())?;
        let mut values = vec![
            ("hasse", sondow_alt(&RBig::from(s), 80, &fast)),
            ("binomial", conjecture_partial(Conjecture::E14_2, s, 80, &fast)),
        ];
        let harmonic = match s {
            2 => Some(EulerSumKind::Alt2),
            3 => Some(EulerSumKind::Alt3),
            4 => Some(EulerSumKind::Alt4),
            5 => Some(EulerSumKind::Alt5),
            _ => None,
        };
        if let Some(k) = harmonic {
            values.push(("harmonic", euler_sum_partial(k, 80, &fast)));
        }
        for (form, r) in values {
            let r = r.map_err(|e| e.to_string())?;
            let rel = rel_diff(&r.value, &want);
            worst = worst.max(rel);
            ensure(rel < 5e-13, || format!("ζ_a({s}) {form}: relative error {rel:.2e}"))?;
        }
    }
    within(start.elapsed(), 1)?;
    Ok(format!("s = 1..5, worst relative error {worst:.1e}"))
}

fn hurwitz_targets() -> Outcome {
    let fast = PrecisionContext::fast();
    let refc = hp30();
    let half = rat(1, 2);
    let eh = euler_hurwitz(1, &half, 10_000, &fast).map_err(|e| e.to_string())?;
    let want = HighPrecFloat::int(3, &refc) * const_zeta(2, &refc).unwrap();
    let err = (&eh.value - &want).abs().to_f64();
    ensure(err <= 3.0 * eh.tail_estimate.to_f64(), || format!("ζ(2,½): error {err:.2e}"))?;
    let sr = stirling_route(2, &half, 10_000, &fast).map_err(|e| e.to_string())?;
    let want = HighPrecFloat::int(7, &refc) * const_zeta(3, &refc).unwrap();
    let err = (&sr.value - &want).abs().to_f64();
    ensure(err <= 3.0 * sr.tail_estimate.to_f64(), || format!("ζ(3,½): error {err:.2e}"))?;

    let pi = const_pi(&refc);
    let target = &pi * &pi + HighPrecFloat::int(8, &refc) * const_catalan(&refc);
    let quarter = rat(1, 4);
    let oracle = hurwitz_ref(&RBig::from(2), &quarter, &refc).map_err(|e| e.to_string())?;
    ensure(rel_diff(&oracle, &target) < 1e-25, || "ζ(2,¼) oracle disagrees with π² + 8G".into())?;
    let mut exps = Vec::new();
    for (formula, p) in [(Formula::Hasse, RBig::from(2)), (Formula::EulerHurwitz, RBig::ONE)] {
        let req = EvalRequest::new(formula, Some(p), Some(quarter.clone()), 100_000, fast);
        let t = convergence_table(&req, &[1_000, 10_000, 100_000]).map_err(|e| e.to_string())?;
        let errs: Vec<f64> = t.rows.iter().map(|r| r.abs_error.to_f64()).collect();
        ensure(errs.windows(2).all(|w| w[1] < w[0]), || format!("{formula}: errors not decreasing {errs:?}"))?;
        let e = t.exponent.ok_or("no exponent fitted")?;
        ensure((e + 0.25).abs() <= 0.05, || format!("{formula}: exponent {e:.4}"))?;
        exps.push(format!("{formula} exponent {e:.4}"));
    }
    Ok(exps.join(", "))
}

fn catalan() -> Outcome {
    let fast = PrecisionContext::fast();
    let g = const_catalan(&hp30());
    let a = catalan_series(CatalanKind::Ramanujan, 100_000, &fast).map_err(|e| e.to_string())?;
    let b = catalan_series(CatalanKind::Central, 100_000, &fast).map_err(|e| e.to_string())?;
    for (name, r) in [("ramanujan", &a), ("central", &b)] {
        let err = (&r.value - &g).abs().to_f64();
        ensure(err <= 3.0 * r.tail_estimate.to_f64(), || format!("{name}: error {err:.2e}"))?;
    }
    // Both series approach G from below, so the tail estimates add back the remainder.
    let ca = &a.value + &a.tail_estimate;
    let cb = &b.value + &b.tail_estimate;
    let gap = (&ca - &cb).abs().to_f64();
    ensure(gap < 1e-3, || format!("tail-corrected sums differ by {gap:.2e}"))?;
    let raw = (&a.value - &b.value).abs().to_f64();
    let combined = a.tail_estimate.to_f64() + b.tail_estimate.to_f64();
    ensure(raw <= combined, || format!("raw gap {raw:.2e} exceeds combined tails {combined:.2e}"))?;
    Ok(format!("tail-corrected gap {gap:.1e}"))
}

fn digamma() -> Outcome {
    let fast = PrecisionContext::fast();
    let mut parts = Vec::new();
    for (power, n, tol) in [(2u32, 100_000u64, 1e-3), (4, 1000, 1e-4)] {
        let r = digamma_half_sum(power, n, &fast).map_err(|e| e.to_string())?;
        let want = digamma_target(power, &hp30()).map_err(|e| e.to_string())?;
        let err = (&r.value - &want).abs().to_f64();
        ensure(err < tol, || format!("power {power}: error {err:.2e} at N={n}"))?;
        parts.push(format!("power {power} error {err:.1e}"));
    }
    Ok(parts.join(", "))
}

fn wilf() -> Outcome {
    let ctx = PrecisionContext::fast();
    let mut parts = Vec::new();
    for k in [2u32, 3] {
        let mut prev = f64::INFINITY;
        for n in [1000u64, 2000, 3000, 4000] {
            let exact = stirling_over_factorial(n, k).to_f64().value();
            let est = wilf_asymptotic(n, k, &ctx).map_err(|e| e.to_string())?.to_f64();
            let rel = ((est - exact) / exact).abs();
            if n == 1000 {
                ensure(rel < 5e-2, || format!("k={k}: relative error {rel:.3e} at n=1000"))?;
                parts.push(format!("k={k} rel={rel:.2e}"));
            }
            ensure(rel < prev, || format!("k={k}: error did not decrease at n={n}"))?;
            prev = rel;
        }
    }
    Ok(parts.join(", "))
}

fn run_cli(args: &[&str]) -> Result<String, String> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(std::iter::once("ehz").chain(args.iter().copied()), &mut out, &mut err);
    ensure(code == 0, || format!("{args:?} exited {code}: {}", String::from_utf8_lossy(&err)))?;
    String::from_utf8(out).map_err(|e| e.to_string())
}

fn strip_seconds(csv: &str) -> String {
    csv.lines()
        .map(|l| if l.starts_with('#') { l } else { l.rsplit_once(',').map_or(l, |(head, _)| head) })
        .collect::<Vec<_>>()
        .join("\n")
}

fn determinism() -> Outcome {
    let evals: [&[&str]; 3] = [
        &["eval", "--formula", "euler-hurwitz", "--q", "4", "--x", "1", "--terms", "100000"],
        &["eval", "--formula", "sondow-alt", "--s", "1", "--terms", "60", "--format", "json"],
        &["eval", "--formula", "euler-sum", "--kind", "E45_8", "--terms", "20000", "--format", "csv"],
    ];
    for args in evals {
        let a = run_cli(args)?;
        let b = run_cli(args)?;
        ensure(a == b, || format!("{args:?} output differs between runs"))?;
    }
    let conv = ["converge", "--formula", "euler-hurwitz", "--q", "1", "--x", "1", "--terms", "100,1000,10000", "--format", "csv"];
    let a = strip_seconds(&run_cli(&conv)?);
    let b = strip_seconds(&run_cli(&conv)?);
    ensure(a == b, || "converge output differs between runs".into())?;
    Ok("eval (text, json, csv) and converge csv byte-identical".into())
}

fn verify_full() -> Outcome {
    let start = Instant::now();
    let reports = verify::run_all(Profile::Full);
    let failed: Vec<&str> = reports.iter().filter(|r| r.status == Status::Fail).map(|r| r.id.as_str()).collect();
    ensure(failed.is_empty(), || format!("failing identities: {}", failed.join(", ")))?;
    within(start.elapsed(), 600)?;
    Ok(format!("{} in {:.1}s", verify::summary_line(&reports), start.elapsed().as_secs_f64()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("coppo exactness", coppo),
        ("stirling triple route", stirling_routes),
        ("bell dual route", bell_dual),
        ("gamma derivatives", gamma_derivatives),
        ("lambda coefficients", lambda_coefficients),
        ("euler sums at N=1e5", euler_sums),
        ("alternating family", alternating),
        ("hurwitz targets", hurwitz_targets),
        ("catalan", catalan),
        ("digamma sums", digamma),
        ("wilf asymptotic", wilf),
        ("determinism", determinism),
        ("verify --all --profile full", verify_full),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
