//! Exact gamma ratios, derivatives of Γ at 1 and 1/2, reciprocal gamma
//! coefficients, Wilf's Stirling asymptotic and Pochhammer ratio series.

use dashu::base::UnsignedAbs;
use dashu::rational::RBig;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{bell_eval, det_bracket, log_to_exp_series, stirling1_row, PowerSeriesCoeffs};
use crate::error::{domain, Result};
use crate::harmonic::{h, hx};
use crate::numerics::{binomial, factorial, Constants, HighPrecFloat, PrecisionContext, Real, Scalar};

/// Which product the gamma ratio uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RatioForm {
    /// `n!/∏_{k=0}^{n}(x+k) = Γ(n+1)Γ(x)/Γ(n+1+x)`.
    NPlus1,
    /// `n!/∏_{k=0}^{n−1}(x+k)`, the empty-sum case `S(n,0,x)` of Coppo's sums.
    N,
}

/// `g(x)` in the selected form, as an exact rational.
pub fn gamma_ratio(n: u64, x: &RBig, form: RatioForm) -> Result<RBig> {
    let last = match form {
        RatioForm::NPlus1 => n + 1,
        RatioForm::N => n,
    };
    let mut prod = RBig::ONE;
    for k in 0..last {
        let f = x.clone() + RBig::from(k);
        if f == RBig::ZERO {
            return domain(format!("pole at k = {k}: x + k = 0"));
        }
        prod *= f;
    }
    Ok(RBig::from(factorial(n)) / prod)
}

/// A gamma ratio together with its arguments.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaRatio {
    pub n: u64,
    pub x: RBig,
    pub form: RatioForm,
    pub value: RBig,
}

impl GammaRatio {
    pub fn new(n: u64, x: RBig, form: RatioForm) -> Result<Self> {
        let value = gamma_ratio(n, &x, form)?;
        Ok(GammaRatio { n, x, form, value })
    }
}

/// Both sides of `g′(x) = −g(x)·H_{n+1}^{(1)}(x)` for the N_PLUS_1 form.
///
/// The left side differentiates `P(t) = ∏_{k=0}^{n}(t+k)` as a polynomial, so
/// `g′ = −n!·P′(x)/P(x)²` is independent of the harmonic sum.
pub fn gamma_ratio_derivative(n: u64, x: &RBig) -> Result<(RBig, RBig)> {
    let g = gamma_ratio(n, x, RatioForm::NPlus1)?;
    let mut poly = vec![RBig::ONE];
    for k in 0..=n {
        let mut next = vec![RBig::ZERO; poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] += c;
            next[i] += RBig::from(k) * c;
        }
        poly = next;
    }
    let eval = |c: &[RBig]| c.iter().rev().fold(RBig::ZERO, |acc, v| acc * x + v);
    let deriv: Vec<RBig> = poly.iter().enumerate().skip(1).map(|(i, c)| RBig::from(i) * c).collect();
    let p = eval(&poly);
    let lhs = -RBig::from(factorial(n)) * eval(&deriv) / (p.clone() * p);
    let rhs = -g * hx(n + 1, 1, x)?;
    Ok((lhs, rhs))
}

fn sign<R: Scalar>(odd: bool) -> R {
    if odd {
        -R::one()
    } else {
        R::one()
    }
}

fn deriv_at_1<R: Real>(m: u32, ctx: &PrecisionContext) -> Result<R> {
    if m == 0 {
        return domain("derivative order must be ≥ 1");
    }
    let c = Constants::<R>::new(ctx, m.max(2));
    let mut xs = vec![-c.gamma.clone()];
    for p in 1..m {
        let f = R::from_ibig(&factorial(p as u64).into());
        xs.push(sign::<R>(p % 2 == 0) * f * c.zeta(p + 1));
    }
    Ok(bell_eval(&xs))
}

fn deriv_at_1_det<R: Real>(m: u32, ctx: &PrecisionContext) -> Result<R> {
    if m == 0 {
        return domain("derivative order must be ≥ 1");
    }
    let c = Constants::<R>::new(ctx, m.max(2));
    // ζ(1) stands for γ inside the bracket.
    let a: Vec<R> = (1..=m).map(|k| if k == 1 { -c.gamma.clone() } else { -c.zeta(k) }).collect();
    Ok(det_bracket(&a))
}

fn deriv_at_half<R: Real>(m: u32, ctx: &PrecisionContext) -> Result<R> {
    if m == 0 {
        return domain("derivative order must be ≥ 1");
    }
    let c = Constants::<R>::new(ctx, m.max(2));
    let mut xs = vec![-c.gamma.clone() - R::int(2, ctx) * c.ln2.clone()];
    for k in 1..m {
        let f = R::from_ibig(&factorial(k as u64).into());
        let w = R::int((1i64 << (k + 1)) - 1, ctx);
        xs.push(sign::<R>(k % 2 == 0) * f * w * c.zeta(k + 1));
    }
    Ok(c.pi.sqrt() * bell_eval(&xs))
}

/// `Γ^{(m)}(1) = Y_m(−γ, 1!ζ(2), −2!ζ(3), …)`.
pub fn gamma_deriv_at_1(m: u32, ctx: &PrecisionContext) -> Result<HighPrecFloat> {
    crate::by_mode!(ctx, deriv_at_1(m, ctx))
}

/// `Γ^{(m)}(1) = [−γ, −ζ(2), …, −ζ(m)]` through the determinant bracket.
pub fn gamma_deriv_at_1_det(m: u32, ctx: &PrecisionContext) -> Result<HighPrecFloat> {
    crate::by_mode!(ctx, deriv_at_1_det(m, ctx))
}

/// `Γ^{(m)}(1/2) = √π·Y_m(ψ(1/2), ψ′(1/2), …, ψ^{(m−1)}(1/2))`.
pub fn gamma_deriv_at_half(m: u32, ctx: &PrecisionContext) -> Result<HighPrecFloat> {
    crate::by_mode!(ctx, deriv_at_half(m, ctx))
}

fn lambdas<R: Real>(j_max: u32, ctx: &PrecisionContext) -> Result<Vec<R>> {
    if j_max == 0 {
        return domain("need at least one λ coefficient");
    }
    let c = Constants::<R>::new(ctx, j_max.max(2));
    let mut lam = vec![R::one()];
    for n in 1..j_max as usize {
        let mut acc = c.gamma.clone() * lam[n - 1].clone();
        for j in 0..n.saturating_sub(1) {
            let z = c.zeta((n - j) as u32);
            acc = acc + sign::<R>((n - j - 1) % 2 == 1) * z * lam[j].clone();
        }
        lam.push(acc / R::int(n as i64, ctx));
    }
    Ok(lam)
}

/// `λ_1..λ_{j_max}` with `1/Γ(x) = Σ λ_j x^j`, from the logarithmic-derivative recurrence.
pub fn recip_gamma_lambda(j_max: u32, ctx: &PrecisionContext) -> Result<Vec<HighPrecFloat>> {
    match ctx.mode() {
        crate::numerics::Mode::Fast => Ok(lambdas::<f64>(j_max, ctx)?.iter().map(|v| v.to_high()).collect()),
        crate::numerics::Mode::High => lambdas::<HighPrecFloat>(j_max, ctx),
    }
}

fn wilf<R: Real>(n: u64, k: u32, ctx: &PrecisionContext) -> Result<R> {
    if n < 3 || k < 2 {
        return domain("Wilf's estimate needs n ≥ 3 and k ≥ 2");
    }
    let lam = lambdas::<R>(k, ctx)?;
    let l = R::int(n as i64, ctx).ln();
    let mut acc = R::zero();
    for i in 1..=k {
        let e = k - i;
        acc = acc + lam[i as usize - 1].clone() * l.pow_u(e) / R::from_ibig(&factorial(e as u64).into());
    }
    Ok(acc)
}

/// Wilf's estimate of `|s(n,k)|/(n−1)!`.
pub fn wilf_asymptotic(n: u64, k: u32, ctx: &PrecisionContext) -> Result<HighPrecFloat> {
    crate::by_mode!(ctx, wilf(n, k, ctx))
}

/// Exact `|s(n,k)|/(n−1)!`.
pub fn stirling_over_factorial(n: u64, k: u32) -> RBig {
    let col = crate::combinatorics::stirling1_columns(n, k as usize);
    RBig::from(col[k as usize].clone().unsigned_abs()) / RBig::from(factorial(n - 1))
}

/// Coefficients of `(u+x)_n/(u)_n = exp[Σ (−1)^{m−1} H_n^{(m)}(u) x^m/m]` through `x^N`.
pub fn pochhammer_ratio_coeffs(n: u64, u: &RBig, order: usize) -> Result<PowerSeriesCoeffs<RBig>> {
    if n == 0 {
        return domain("Pochhammer ratio needs n ≥ 1");
    }
    let b: Vec<RBig> = (1..=order as u32)
        .map(|m| Ok(if m % 2 == 1 { hx(n, m, u)? } else { -hx(n, m, u)? }))
        .collect::<Result<_>>()?;
    log_to_exp_series(&RBig::ZERO, &b, order)
}

/// Rising factorial `(u)_n`.
pub fn pochhammer(u: &RBig, n: u64) -> RBig {
    (0..n).fold(RBig::ONE, |acc, k| acc * (u.clone() + RBig::from(k)))
}

fn alt_bell_args(n: u64, r: u64, u: Option<&RBig>) -> Result<Vec<RBig>> {
    (1..=r)
        .map(|j| {
            let hv = match u {
                Some(u) => hx(n, j as u32, u)?,
                None => h(n, j as u32),
            };
            let v = RBig::from(factorial(j - 1)) * hv;
            Ok(if j % 2 == 0 { -v } else { v })
        })
        .collect()
}

fn alt_stirling(n: u64, k: u64) -> RBig {
    let row = stirling1_row(n);
    let v = RBig::from(row[k as usize].clone());
    if (n + k) % 2 == 1 {
        -v
    } else {
        v
    }
}

/// Both sides of `r!·Σ_{k=r}^{n}(−1)^{n+k}s(n,k)C(k,r)u^{k−r} = (u)_n·Y_r(H_n^{(1)}(u), −1!H_n^{(2)}(u), …)`.
pub fn e44_7_sides(n: u64, r: u64, u: &RBig) -> Result<(RBig, RBig)> {
    let mut lhs = RBig::ZERO;
    let mut upow = RBig::ONE;
    for k in r..=n {
        lhs += alt_stirling(n, k) * RBig::from(binomial(k, r)) * upow.clone();
        upow *= u;
    }
    lhs *= RBig::from(factorial(r));
    let rhs = pochhammer(u, n) * bell_eval(&alt_bell_args(n, r, Some(u))?);
    Ok((lhs, rhs))
}

/// Both sides of `Σ_{k=r}^{n}(−1)^{n+k}s(n,k)C(k,r) = (n!/r!)·Y_r(H_n^{(1)}, −1!H_n^{(2)}, …)`.
pub fn e44_8_sides(n: u64, r: u64) -> (RBig, RBig) {
    let lhs = (r..=n).fold(RBig::ZERO, |acc, k| acc + alt_stirling(n, k) * RBig::from(binomial(k, r)));
    let args = alt_bell_args(n, r, None).expect("unshifted harmonic numbers have no poles");
    let rhs = RBig::from(factorial(n)) / RBig::from(factorial(r)) * bell_eval(&args);
    (lhs, rhs)
}

/// Both sides of `(−1)^{n+r}s(n+1,r+1) = Σ_{k=r}^{n}(−1)^{n+k}s(n,k)C(k,r)`.
pub fn e44_9_sides(n: u64, r: u64) -> (RBig, RBig) {
    let lhs = alt_stirling(n + 1, r + 1);
    let rhs = (r..=n).fold(RBig::ZERO, |acc, k| acc + alt_stirling(n, k) * RBig::from(binomial(k, r)));
    (lhs, rhs)
}

/// Both sides of `s(n+1,r+1) = (−1)^{n+r}(n!/r!)·Y_r(H_n^{(1)}, −1!H_n^{(2)}, …)`.
pub fn e44_10_sides(n: u64, r: u64) -> (RBig, RBig) {
    let lhs = RBig::from(crate::combinatorics::stirling1(n + 1, r + 1));
    let rhs = RBig::from(crate::combinatorics::stirling1_bell(n, r));
    (lhs, rhs)
}

fn loggamma_coeffs<R: Real>(order: usize, ctx: &PrecisionContext) -> Result<Vec<R>> {
    if order == 0 {
        return domain("log Γ series needs N ≥ 1");
    }
    let c = Constants::<R>::new(ctx, order.max(2) as u32);
    let mut out = vec![R::zero(), -c.gamma.clone()];
    for m in 2..=order {
        let v = c.zeta(m as u32) / R::int(m as i64, ctx);
        out.push(if m % 2 == 0 { v } else { -v });
    }
    Ok(out)
}

/// Taylor coefficients of `log Γ(1+x) = −γx + Σ_{m≥2} (−1)^m ζ(m) x^m/m`.
pub fn loggamma_taylor(order: usize, ctx: &PrecisionContext) -> Result<PowerSeriesCoeffs<HighPrecFloat>> {
    let c = match ctx.mode() {
        crate::numerics::Mode::Fast => loggamma_coeffs::<f64>(order, ctx)?.iter().map(|v| v.to_high()).collect(),
        crate::numerics::Mode::High => loggamma_coeffs::<HighPrecFloat>(order, ctx)?,
    };
    Ok(PowerSeriesCoeffs::new(c))
}

/// `(Σ_{m=1}^{terms} (−1)^m H_{n−1}^{(m)} t^m/m, log[(n−1)!/∏_{j=1}^{n−1}(j+t)])`, the
/// two sides of the gamma-ratio expansion of `log[Γ(n)Γ(1+t)/Γ(n+t)]`.
pub fn log_gamma_ratio_sides(n: u64, t: &RBig, terms: u32, ctx: &PrecisionContext) -> Result<(HighPrecFloat, HighPrecFloat)> {
    if n == 0 {
        return domain("log-gamma ratio needs n ≥ 1");
    }
    let hi = ctx.with_extra_digits(10);
    let mut series = HighPrecFloat::zero().with_bits(hi.bits());
    let mut tp = RBig::ONE;
    for m in 1..=terms {
        tp *= t;
        let c = h(n - 1, m) * tp.clone() / RBig::from(m);
        let c = if m % 2 == 1 { -c } else { c };
        series = series + HighPrecFloat::from_rational(&c, hi.bits());
    }
    let prod = (1..n).fold(RBig::ONE, |acc, j| acc * (RBig::from(j) + t));
    if prod == RBig::ZERO {
        return domain("t hits a pole of the ratio");
    }
    let ratio = RBig::from(factorial(n - 1)) / prod;
    let closed = HighPrecFloat::from_rational(&ratio, hi.bits()).ln();
    Ok((series, closed))
}
