//! Hasse's globally convergent series and the alternating (Sondow) variant.

use dashu::integer::IBig;
use dashu::rational::RBig;

use super::tail::{geometric_tail, log_power_tail};
use super::terms::{BellArgs, CoppoTerms};
use super::{finish, integer_value};
use crate::error::{domain, Result};
use crate::harmonic::coppo_lhs;
use crate::numerics::{binomial_row, HighPrecFloat, Mode, PrecisionContext, Real, SeriesResult};

/// Below this index the integer-s inner sums come straight from `coppo_lhs`;
/// beyond it, from the equal closed form advanced incrementally.
const EXACT_INNER_CUTOFF: u64 = 128;

/// Budget cap for non-integer `s`, where inner sums need `n` guard bits.
pub const NON_INTEGER_MAX_TERMS: u64 = 400;

fn check_x(x: &RBig) -> Result<()> {
    if *x <= RBig::ZERO {
        return domain(format!("x must be positive, got {x}"));
    }
    Ok(())
}

fn check_terms(n: u64) -> Result<()> {
    if n == 0 {
        return domain("term budget N must be at least 1");
    }
    Ok(())
}

/// `H_N(x) = Σ_{k<N} 1/(k+x)` in doubles, for tail calibration.
fn shifted_h1(n: u64, x: f64) -> f64 {
    (0..n).map(|k| 1.0 / (k as f64 + x)).sum()
}

/// Exact `Σ_k C(n,k)(−1)^k (k+x)^e` for a non-negative integer power `e`.
fn polynomial_inner(n: u64, e: u32, x: &RBig) -> RBig {
    let row = binomial_row(n);
    let mut acc = RBig::ZERO;
    for (k, c) in row.iter().enumerate() {
        let v = RBig::from(IBig::from(c.clone())) * (RBig::from(k) + x).pow(e as usize);
        if k % 2 == 0 {
            acc += v;
        } else {
            acc -= v;
        }
    }
    acc
}

/// Inner sums `Σ_k C(n,k)(−1)^k (k+x)^{−a}` for `n < count` and real `a`, at
/// `bits` plus `n` guard bits.
fn real_power_inner(a: &RBig, x: &RBig, count: u64, ctx: &PrecisionContext) -> Vec<HighPrecFloat> {
    let bits = ctx.bits() + count as usize + 32;
    let af = HighPrecFloat::from_rational(a, bits);
    let xf = HighPrecFloat::from_rational(x, bits);
    let f: Vec<HighPrecFloat> = (0..count)
        .map(|k| {
            let base = HighPrecFloat::from_ibig(&IBig::from(k), bits) + &xf;
            (-(af.clone()) * base.ln()).exp()
        })
        .collect();
    (0..count)
        .map(|n| {
            let row = binomial_row(n);
            let mut acc = HighPrecFloat::zero();
            for (k, c) in row.iter().enumerate() {
                let v = HighPrecFloat::from_ibig(&IBig::from(c.clone()), bits) * &f[k];
                acc = if k % 2 == 0 { acc + v } else { acc - v };
            }
            acc
        })
        .collect()
}

/// Context used for HIGH-only stages when the caller asked for FAST.
fn high_stage(ctx: &PrecisionContext) -> PrecisionContext {
    match ctx.mode() {
        Mode::High => *ctx,
        Mode::Fast => PrecisionContext::high(30).expect("30 digits"),
    }
}

fn hasse_integer<R: Real>(q: u32, x: &RBig, n_terms: u64, ctx: &PrecisionContext) -> Result<SeriesResult> {
    let mut gen = CoppoTerms::<R>::new(q, x, BellArgs::Shifted, ctx);
    let qr = R::int(q as i64, ctx);
    let mut sum = R::zero();
    let mut comp = R::zero();
    let mut last = R::zero();
    for n in 0..n_terms {
        let closed = gen.next_value();
        let inner = if n < EXACT_INNER_CUTOFF { R::from_rational(&coppo_lhs(n, q, x)?, ctx) } else { closed };
        let t = inner / (qr.clone() * R::int(n as i64 + 1, ctx));
        last = t.clone();
        R::add_compensated(&mut sum, &mut comp, t);
    }
    let xf = x.to_f64().value();
    let ell = shifted_h1(n_terms, xf);
    let tail = log_power_tail(last.to_f64(), n_terms, xf, q as f64 - 1.0, ell);
    Ok(finish(sum + comp, n_terms as usize, tail, ctx))
}

/// Partial sum of Hasse's series
/// `ζ(s,x) = (1/(s−1)) Σ_{n<N} (1/(n+1)) Σ_k C(n,k)(−1)^k (k+x)^{1−s}`.
pub fn hasse_hurwitz(s: &RBig, x: &RBig, n_terms: u64, ctx: &PrecisionContext) -> Result<SeriesResult> {
    check_terms(n_terms)?;
    check_x(x)?;
    if *s == RBig::ONE {
        return domain("the Hasse series is not defined at s = 1");
    }
    match integer_value(s) {
        Some(si) if si >= 2 => {
            let q = u32::try_from(si - 1).map_err(|_| crate::Error::Domain(format!("s = {si} too large")))?;
            match ctx.mode() {
                Mode::Fast => hasse_integer::<f64>(q, x, n_terms, ctx),
                Mode::High => hasse_integer::<HighPrecFloat>(q, x, n_terms, ctx),
            }
        }
        Some(si) => {
            // s ≤ 0: the inner sums are forward differences of a polynomial of
            // degree 1 − s and vanish from n = 2 − s on.
            let e = u32::try_from(1 - si).map_err(|_| crate::Error::Domain(format!("s = {si} too small")))?;
            let active = n_terms.min(e as u64 + 1);
            let scale = RBig::ONE / RBig::from(si - 1);
            let mut acc = RBig::ZERO;
            let mut last = RBig::ZERO;
            for n in 0..active {
                let t = scale.clone() * polynomial_inner(n, e, x) / RBig::from(n + 1);
                acc += &t;
                last = t;
            }
            let tail = if n_terms > e as u64 { 0.0 } else { last.to_f64().value().abs() };
            let value = HighPrecFloat::from_rational(&acc, ctx.bits());
            Ok(finish(value, n_terms as usize, tail, ctx))
        }
        None => {
            if n_terms > NON_INTEGER_MAX_TERMS {
                return domain(format!(
                    "non-integer s is capped at N = {NON_INTEGER_MAX_TERMS} terms, got {n_terms}"
                ));
            }
            let stage = high_stage(ctx);
            let a = s.clone() - RBig::ONE;
            let inner = real_power_inner(&a, x, n_terms, &stage);
            let af = HighPrecFloat::from_rational(&a, stage.bits());
            let mut acc = crate::numerics::CompensatedSum::<HighPrecFloat>::new();
            let mut last = HighPrecFloat::zero();
            for (n, v) in inner.into_iter().enumerate() {
                let t = (v / HighPrecFloat::int(n as i64 + 1, &stage) / &af).with_bits(stage.bits());
                last = t.clone();
                acc.add(t);
            }
            let xf = x.to_f64().value();
            let d = a.to_f64().value() - 1.0;
            let tail = log_power_tail(last.to_f64(), n_terms, xf, d, shifted_h1(n_terms, xf));
            Ok(finish(acc.value(), n_terms as usize, tail, ctx))
        }
    }
}

fn alt_integer<R: Real>(q: u32, x: &RBig, n_terms: u64, ctx: &PrecisionContext) -> Result<SeriesResult> {
    let mut gen = CoppoTerms::<R>::new(q, x, BellArgs::Shifted, ctx);
    let half = R::ratio(1, 2, ctx);
    let mut w = half.clone();
    let mut sum = R::zero();
    let mut comp = R::zero();
    let mut last = R::zero();
    for n in 0..n_terms {
        let closed = gen.next_value();
        let inner = if n < EXACT_INNER_CUTOFF { R::from_rational(&coppo_lhs(n, q, x)?, ctx) } else { closed };
        let t = w.clone() * inner;
        last = t.clone();
        R::add_compensated(&mut sum, &mut comp, t);
        w = w * half.clone();
    }
    let tail = geometric_tail(last.to_f64(), 0.5);
    Ok(finish(sum + comp, n_terms as usize, tail, ctx))
}

/// Partial sum of `ζ_a(s, x) = Σ_{n<N} 2^{−n−1} Σ_k C(n,k)(−1)^k (k+x)^{−s}`.
pub fn alt_hurwitz(s: &RBig, x: &RBig, n_terms: u64, ctx: &PrecisionContext) -> Result<SeriesResult> {
    check_terms(n_terms)?;
    check_x(x)?;
    match integer_value(s) {
        Some(si) if si >= 1 => {
            let q = u32::try_from(si).map_err(|_| crate::Error::Domain(format!("s = {si} too large")))?;
            match ctx.mode() {
                Mode::Fast => alt_integer::<f64>(q, x, n_terms, ctx),
                Mode::High => alt_integer::<HighPrecFloat>(q, x, n_terms, ctx),
            }
        }
        Some(si) => {
            let e = u32::try_from(-si).map_err(|_| crate::Error::Domain(format!("s = {si} too small")))?;
            let active = n_terms.min(e as u64 + 1);
            let mut acc = RBig::ZERO;
            let mut last = RBig::ZERO;
            for n in 0..active {
                let t = polynomial_inner(n, e, x) / RBig::from(IBig::ONE << (n as usize + 1));
                acc += &t;
                last = t;
            }
            let tail = if n_terms > e as u64 { 0.0 } else { geometric_tail(last.to_f64().value(), 0.5) };
            Ok(finish(HighPrecFloat::from_rational(&acc, ctx.bits()), n_terms as usize, tail, ctx))
        }
        None => {
            if n_terms > NON_INTEGER_MAX_TERMS {
                return domain(format!(
                    "non-integer s is capped at N = {NON_INTEGER_MAX_TERMS} terms, got {n_terms}"
                ));
            }
            let stage = high_stage(ctx);
            let inner = real_power_inner(s, x, n_terms, &stage);
            let mut acc = crate::numerics::CompensatedSum::<HighPrecFloat>::new();
            let mut last = HighPrecFloat::zero();
            for (n, v) in inner.into_iter().enumerate() {
                let w = HighPrecFloat::exact_int(&(IBig::ONE << (n + 1)));
                let t = (v / w).with_bits(stage.bits());
                last = t.clone();
                acc.add(t);
            }
            Ok(finish(acc.value(), n_terms as usize, geometric_tail(last.to_f64(), 0.5), ctx))
        }
    }
}

/// Sondow's series for `ζ_a(s)`: [`alt_hurwitz`] at `x = 1`.
pub fn sondow_alt(s: &RBig, n_terms: u64, ctx: &PrecisionContext) -> Result<SeriesResult> {
    alt_hurwitz(s, &RBig::ONE, n_terms, ctx)
}

/// Exact Hasse terms `(1/(s−1))(1/(n+1))·coppo_lhs(n, s−1, x)` for integer `s ≥ 2`.
pub fn hasse_terms_exact(s: u32, x: &RBig, n_terms: u64) -> Result<Vec<RBig>> {
    if s < 2 {
        return domain("exact Hasse terms need integer s ≥ 2");
    }
    (0..n_terms)
        .map(|n| Ok(coppo_lhs(n, s - 1, x)? / RBig::from((s as u64 - 1) * (n + 1))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{const_ln2, const_zeta, rat};
    use crate::zeta_series::reference::{alt_hurwitz_ref, hurwitz_ref};

    fn err(r: &SeriesResult, target: &HighPrecFloat) -> f64 {
        (&r.value - target).abs().to_f64()
    }

    #[test]
    fn zeta2_within_tail() {
        let ctx = PrecisionContext::fast();
        let r = hasse_hurwitz(&RBig::from(2), &RBig::ONE, 10_000, &ctx).unwrap();
        let e = err(&r, &const_zeta(2, &ctx).unwrap());
        assert!(e <= r.tail_estimate.to_f64(), "{e} vs {}", r.tail_estimate);
        assert_eq!(r.terms_used, 10_000);
    }

    #[test]
    fn zeta3_terms_are_half_h_over_n_squared() {
        let terms = hasse_terms_exact(3, &RBig::ONE, 60).unwrap();
        for (i, t) in terms.iter().enumerate() {
            let n = i as u64 + 1;
            assert_eq!(*t, crate::harmonic::h(n, 1) / RBig::from(2 * n * n));
        }
    }

    #[test]
    fn continuation_at_zero() {
        let ctx = PrecisionContext::fast();
        let r = hasse_hurwitz(&RBig::ZERO, &RBig::ONE, 100_000, &ctx).unwrap();
        assert!((r.value.to_f64() + 0.5).abs() < 1e-6);
        let r = hasse_hurwitz(&RBig::from(-1), &RBig::ONE, 5, &ctx).unwrap();
        assert!((r.value.to_f64() + 1.0 / 12.0).abs() < 1e-15);
    }

    #[test]
    fn non_integer_s() {
        let ctx = PrecisionContext::high(30).unwrap();
        let s = rat(5, 2);
        let r = hasse_hurwitz(&s, &RBig::ONE, 400, &ctx).unwrap();
        let want = hurwitz_ref(&s, &RBig::ONE, &ctx).unwrap();
        assert!(err(&r, &want) <= r.tail_estimate.to_f64());
        assert!(hasse_hurwitz(&s, &RBig::ONE, 401, &ctx).is_err());
        assert!(hasse_hurwitz(&RBig::ONE, &RBig::ONE, 10, &ctx).is_err());
    }

    #[test]
    fn sondow_examples() {
        let ctx = PrecisionContext::fast();
        let r = sondow_alt(&RBig::ONE, 60, &ctx).unwrap();
        assert!(err(&r, &const_ln2(&ctx)) < 1e-15);
        let r = sondow_alt(&RBig::from(2), 50, &ctx).unwrap();
        let eta2 = const_zeta(2, &ctx).unwrap().to_f64() / 2.0;
        assert!((r.value.to_f64() - eta2).abs() < 1e-12 * eta2);
        let r = alt_hurwitz(&RBig::from(2), &rat(1, 2), 80, &ctx).unwrap();
        let g = alt_hurwitz_ref(&RBig::from(2), &rat(1, 2), &ctx).unwrap();
        assert!(err(&r, &g) < 1e-12);
        let r = sondow_alt(&rat(3, 2), 80, &PrecisionContext::high(30).unwrap()).unwrap();
        let w = alt_hurwitz_ref(&rat(3, 2), &RBig::ONE, &ctx).unwrap();
        assert!(err(&r, &w) < 1e-20 && err(&r, &w) <= r.tail_estimate.to_f64());
    }

    #[test]
    fn geometric_decay() {
        let ctx = PrecisionContext::high(40).unwrap();
        let want = alt_hurwitz_ref(&RBig::from(3), &RBig::ONE, &ctx).unwrap();
        let mut prev = f64::INFINITY;
        for n in [10, 11, 12, 13, 14] {
            let e = err(&sondow_alt(&RBig::from(3), n, &ctx).unwrap(), &want);
            assert!(e <= prev / 2.0 * 1.0001 || prev.is_infinite(), "n={n}");
            prev = e;
        }
    }
}
