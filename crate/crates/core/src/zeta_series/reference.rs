//! Reference oracles: Hurwitz and alternating Hurwitz zeta, digamma, polylogarithm.

use dashu::rational::RBig;

use crate::error::{domain, Result};
use crate::numerics::{bernoulli, hurwitz_em, rat, CompensatedSum, HighPrecFloat, Mode, PrecisionContext, Real};

/// Precision used for every reference value: at least 30 digits, always HIGH.
pub fn reference_context(ctx: &PrecisionContext) -> PrecisionContext {
    PrecisionContext::new(ctx.digits().max(30), Mode::High).expect("digits within range")
}

fn lift(q: &RBig, ctx: &PrecisionContext) -> HighPrecFloat {
    HighPrecFloat::from_rational(q, ctx.bits())
}

fn integer_part(s: &RBig) -> Option<i64> {
    if s.is_int() {
        i64::try_from(s.numerator().clone()).ok()
    } else {
        None
    }
}

/// `ζ(s, x)` for any real `s ≠ 1` (analytic continuation below 1).
pub(crate) fn hurwitz_any(s: &RBig, x: &RBig, ctx: &PrecisionContext) -> Result<HighPrecFloat> {
    let rc = reference_context(ctx);
    hurwitz_em(&lift(s, &rc), integer_part(s), &lift(x, &rc), &rc)
}

/// Hurwitz zeta `ζ(s, x)` for `s > 1`, `x > 0`.
pub fn hurwitz_ref(s: &RBig, x: &RBig, ctx: &PrecisionContext) -> Result<HighPrecFloat> {
    if *s <= RBig::ONE {
        return domain(format!("hurwitz_ref requires s > 1, got {s}"));
    }
    if *x <= RBig::ZERO {
        return domain(format!("hurwitz_ref requires x > 0, got {x}"));
    }
    hurwitz_any(s, x, ctx)
}

/// Digamma `ψ(a)` for `a > 0`: shift past `digits + 10`, then the asymptotic series.
pub fn digamma_ref(a: &RBig, ctx: &PrecisionContext) -> Result<HighPrecFloat> {
    if *a <= RBig::ZERO {
        return domain(format!("digamma_ref requires a > 0, got {a}"));
    }
    let rc = reference_context(ctx);
    let a = lift(a, &rc);
    let m = rc.digits() as i64 + 10;
    let mut acc = CompensatedSum::<HighPrecFloat>::new();
    for j in 0..m {
        acc.add(-(HighPrecFloat::one() / (HighPrecFloat::int(j, &rc) + &a)));
    }
    let y = HighPrecFloat::int(m, &rc) + &a;
    acc.add(y.ln());
    acc.add(-(HighPrecFloat::one() / (HighPrecFloat::int(2, &rc) * &y)));
    let inv_y2 = HighPrecFloat::one() / (&y * &y);
    let mut p = inv_y2.clone();
    let tol = HighPrecFloat::epsilon(&rc);
    let mut prev: Option<HighPrecFloat> = None;
    for (i, b) in bernoulli(rc.digits() as usize + 20).iter().enumerate() {
        let two_k = RBig::from(2 * (i as i64 + 1));
        let term = -(lift(&(b.clone() / two_k), &rc) * &p);
        let size = term.abs();
        if prev.as_ref().is_some_and(|v| size > *v) {
            break;
        }
        acc.add(term);
        if size < tol {
            break;
        }
        prev = Some(size);
        p = p * &inv_y2;
    }
    Ok(acc.value())
}

/// Alternating Hurwitz zeta `ζ_a(s, x) = Σ_{n≥0} (−1)^n/(n+x)^s`.
pub fn alt_hurwitz_ref(s: &RBig, x: &RBig, ctx: &PrecisionContext) -> Result<HighPrecFloat> {
    if *x <= RBig::ZERO {
        return domain(format!("alternating Hurwitz reference requires x > 0, got {x}"));
    }
    let two = RBig::from(2);
    let lo = x.clone() / &two;
    let hi = (x.clone() + RBig::ONE) / &two;
    if *s == RBig::ONE {
        let half = lift(&rat(1, 2), &reference_context(ctx));
        return Ok(half * (digamma_ref(&hi, ctx)? - digamma_ref(&lo, ctx)?));
    }
    let rc = reference_context(ctx);
    let scale = (-(lift(s, &rc)) * HighPrecFloat::int(2, &rc).ln()).exp();
    Ok(scale * (hurwitz_any(s, &lo, ctx)? - hurwitz_any(s, &hi, ctx)?))
}

/// `Li_s(y) = Σ_{k≥1} y^k/k^s` for `|y| < 1`, summed until the geometric bound
/// `|y|^{K+1}/((K+1)^s (1 − |y|))` drops below the working epsilon.
pub fn polylog(s: &RBig, y: &RBig, ctx: &PrecisionContext) -> Result<HighPrecFloat> {
    if y.clone() * y >= RBig::ONE {
        return domain(format!("polylog requires |y| < 1, got {y}"));
    }
    if y.is_zero() {
        return Ok(HighPrecFloat::zero());
    }
    let rc = reference_context(ctx);
    let s_int = integer_part(s);
    let sf = lift(s, &rc);
    let yf = lift(y, &rc);
    let ya = yf.abs();
    let one_minus = HighPrecFloat::one() - &ya;
    let tol = HighPrecFloat::epsilon(&rc);
    let mut acc = CompensatedSum::<HighPrecFloat>::new();
    let mut yk = yf.clone();
    let mut k: i64 = 1;
    loop {
        let kf = HighPrecFloat::int(k, &rc);
        let ks = match s_int {
            Some(e) => kf.powi(e),
            None => kf.powf(&sf),
        };
        let term = yk.clone() / ks;
        acc.add(term.clone());
        if term.abs() * &ya / &one_minus < tol.clone() * acc.value().abs() {
            break;
        }
        yk = yk * &yf;
        k += 1;
        if k > 10_000_000 {
            return Err(crate::Error::Numeric("polylog did not converge".into()));
        }
    }
    Ok(acc.value())
}
