//! Gamma-ratio series for `ζ(q+1, x)`: the Bell route with shifted harmonic
//! numbers, the Stirling route with unshifted ones, Shen's Stirling-number
//! series and the mixed families.

use std::str::FromStr;

use dashu::base::UnsignedAbs;
use dashu::integer::{IBig, UBig};
use dashu::rational::RBig;
use serde::{Deserialize, Serialize};

use super::finish;
use super::tail::log_power_tail;
use super::terms::{BellArgs, CoppoTerms, HarmonicState};
use crate::error::{domain, Error, Result};
use crate::numerics::{HighPrecFloat, Mode, PrecisionContext, Real, Scalar, SeriesResult};

fn check(q: u32, x: &RBig, n_terms: u64) -> Result<()> {
    if q < 1 {
        return domain("q must be at least 1");
    }
    if *x <= RBig::ZERO {
        return domain(format!("x must be positive, got {x}"));
    }
    if n_terms == 0 {
        return domain("term budget N must be at least 1");
    }
    Ok(())
}

fn shifted_h1(n: u64, x: f64) -> f64 {
    (0..n).map(|k| 1.0 / (k as f64 + x)).sum()
}

/// Terms `(1/q!)(1/n)R_n(x)Y_{q−1}(0!H_n^{(1)}(x), …, (q−2)!H_n^{(q−1)}(x))`, `n = 1..=N`.
///
/// Generic over the scalar so that `RBig` yields the exact pre-rounding terms.
pub fn euler_hurwitz_terms<S: Scalar>(q: u32, x: &RBig, n_terms: u64, ctx: &PrecisionContext) -> Result<Vec<S>> {
    check(q, x, n_terms)?;
    let mut gen = CoppoTerms::<S>::new(q, x, BellArgs::Shifted, ctx);
    let qs = S::from_i64(q as i64);
    Ok((1..=n_terms)
        .map(|n| gen.next_value() / (qs.clone() * S::from_i64(n as i64)))
        .collect())
}

/// Terms `(1/(q−1)!)(1/n)R_n(x)Y_{q−1}(H_{n−1}^{(1)}, −1!H_{n−1}^{(2)}, …)`, `n = 1..=N`.
pub fn stirling_route_terms<S: Scalar>(q: u32, x: &RBig, n_terms: u64, ctx: &PrecisionContext) -> Result<Vec<S>> {
    check(q, x, n_terms)?;
    let mut gen = CoppoTerms::<S>::new(q, x, BellArgs::StirlingUnshifted, ctx);
    Ok((1..=n_terms).map(|n| gen.next_value() / S::from_i64(n as i64)).collect())
}

fn sum_route<R: Real>(q: u32, x: &RBig, n_terms: u64, args: BellArgs, ctx: &PrecisionContext) -> Result<SeriesResult> {
    let mut gen = CoppoTerms::<R>::new(q, x, args, ctx);
    let scale = match args {
        BellArgs::Shifted => q as i64,
        BellArgs::StirlingUnshifted => 1,
    };
    let (mut sum, mut comp, mut last) = (R::zero(), R::zero(), R::zero());
    for n in 1..=n_terms {
        let t = gen.next_value() / R::int(scale * n as i64, ctx);
        last = t.clone();
        R::add_compensated(&mut sum, &mut comp, t);
    }
    let xf = x.to_f64().value();
    let ell = if q >= 2 {
        gen.harmonic(1).to_f64()
    } else {
        shifted_h1(n_terms, xf)
    };
    let tail = log_power_tail(last.to_f64(), n_terms, xf, q as f64 - 1.0, ell);
    Ok(finish(sum + comp, n_terms as usize, tail, ctx))
}

/// Partial sum of the Bell-route series for `ζ(q+1, x)`.
pub fn euler_hurwitz(q: u32, x: &RBig, n_terms: u64, ctx: &PrecisionContext) -> Result<SeriesResult> {
    check(q, x, n_terms)?;
    match ctx.mode() {
        Mode::Fast => sum_route::<f64>(q, x, n_terms, BellArgs::Shifted, ctx),
        Mode::High => sum_route::<HighPrecFloat>(q, x, n_terms, BellArgs::Shifted, ctx),
    }
}

/// Partial sum of the Stirling-route series for `ζ(q+1, x)`, whose Bell
/// arguments carry no `x`.
pub fn stirling_route(q: u32, x: &RBig, n_terms: u64, ctx: &PrecisionContext) -> Result<SeriesResult> {
    check(q, x, n_terms)?;
    match ctx.mode() {
        Mode::Fast => sum_route::<f64>(q, x, n_terms, BellArgs::StirlingUnshifted, ctx),
        Mode::High => sum_route::<HighPrecFloat>(q, x, n_terms, BellArgs::StirlingUnshifted, ctx),
    }
}

fn shen_sum<R: Real>(p: u32, n_terms: u64, ctx: &PrecisionContext) -> Result<SeriesResult> {
    let bits = ctx.bits().max(64);
    let p = p as usize;
    let mut col = vec![IBig::ZERO; p + 1];
    col[0] = IBig::ONE;
    let mut fact = UBig::ONE;
    let (mut sum, mut comp, mut last) = (R::zero(), R::zero(), R::zero());
    for k in 1..=n_terms {
        let m = IBig::from(k - 1);
        for j in (0..=p).rev() {
            let below = if j > 0 { col[j - 1].clone() } else { IBig::ZERO };
            col[j] = below - &m * &col[j];
        }
        fact *= UBig::from(k);
        // (−1)^{p+k} s(k,p) = |s(k,p)|
        let num = HighPrecFloat::from_ibig(&IBig::from(col[p].clone().unsigned_abs()), bits);
        let den = HighPrecFloat::from_ibig(&IBig::from(&fact * UBig::from(k)), bits);
        let t = R::from_high(&(num / den), ctx);
        last = t.clone();
        R::add_compensated(&mut sum, &mut comp, t);
    }
    let ell: f64 = (1..=n_terms).map(|k| 1.0 / k as f64).sum();
    let tail = log_power_tail(last.to_f64(), n_terms, 1.0, p as f64 - 1.0, ell);
    Ok(finish(sum + comp, n_terms as usize, tail, ctx))
}

/// Shen's series `ζ(p+1) = (−1)^p Σ_{k≥1} (−1)^k s(k,p)/(k·k!)`, with exact
/// Stirling numbers rounded once per term.
pub fn shen_series(p: u32, n_terms: u64, ctx: &PrecisionContext) -> Result<SeriesResult> {
    check(p, &RBig::ONE, n_terms)?;
    match ctx.mode() {
        Mode::Fast => shen_sum::<f64>(p, n_terms, ctx),
        Mode::High => shen_sum::<HighPrecFloat>(p, n_terms, ctx),
    }
}

/// Mixed series pairing the x-free `nH_n − 1` with x-dependent harmonic numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MixedKind {
    /// `ζ(4,x) = ⅓ Σ [nH_n − 1] H_n(x) R_n(x)/n²`
    #[serde(rename = "Z4_457")]
    Z4,
    /// `ζ(5,x) = (2/4!) Σ [nH_n − 1]([H_n(x)]² + H_n^{(2)}(x)) R_n(x)/n²`
    #[serde(rename = "Z5_457b")]
    Z5,
    /// `ζ(6,x) = (1/60) Σ [nH_n − 1]([H_n(x)]³ + 3H_n(x)H_n^{(2)}(x) + 2H_n^{(3)}(x)) R_n(x)/n²`
    #[serde(rename = "Z6_459")]
    Z6,
}

impl MixedKind {
    /// The `q` with `ζ(q+1, x)` as the sum.
    pub fn q(self) -> u32 {
        match self {
            MixedKind::Z4 => 3,
            MixedKind::Z5 => 4,
            MixedKind::Z6 => 5,
        }
    }

    pub fn from_q(q: u32) -> Result<Self> {
        match q {
            3 => Ok(MixedKind::Z4),
            4 => Ok(MixedKind::Z5),
            5 => Ok(MixedKind::Z6),
            _ => Err(Error::Usage(format!("mixed-q families exist for q = 3, 4, 5; got {q}"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MixedKind::Z4 => "Z4_457",
            MixedKind::Z5 => "Z5_457b",
            MixedKind::Z6 => "Z6_459",
        }
    }
}

impl FromStr for MixedKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "Z4_457" | "Z4" => Ok(MixedKind::Z4),
            "Z5_457B" | "Z5" => Ok(MixedKind::Z5),
            "Z6_459" | "Z6" => Ok(MixedKind::Z6),
            _ => Err(Error::Usage(format!("unknown mixed-q kind {s:?}"))),
        }
    }
}

/// Terms of the mixed series, generic over the scalar.
pub fn mixed_q_terms<S: Scalar>(kind: MixedKind, x: &RBig, n_terms: u64, ctx: &PrecisionContext) -> Result<Vec<S>> {
    let q = kind.q();
    check(q, x, n_terms)?;
    let mut gen = CoppoTerms::<S>::new(q - 1, x, BellArgs::Shifted, ctx);
    let mut hs = HarmonicState::<S>::new(1);
    let scale = S::from_rational(&(RBig::from(2) / RBig::from(q * (q - 1))), ctx);
    Ok((1..=n_terms)
        .map(|n| {
            hs.advance();
            let nn = S::from_i64(n as i64);
            let bracket = nn.clone() * hs.get(1) - S::one();
            gen.next_value() * bracket / (nn.clone() * nn) * scale.clone()
        })
        .collect())
}

fn mixed_sum<R: Real>(kind: MixedKind, x: &RBig, n_terms: u64, ctx: &PrecisionContext) -> Result<SeriesResult> {
    let q = kind.q();
    let mut gen = CoppoTerms::<R>::new(q - 1, x, BellArgs::Shifted, ctx);
    let mut hs = HarmonicState::<R>::new(1);
    let scale = R::from_rational(&(RBig::from(2) / RBig::from(q * (q - 1))), ctx);
    let (mut sum, mut comp, mut last) = (R::zero(), R::zero(), R::zero());
    for n in 1..=n_terms {
        hs.advance();
        let nn = R::int(n as i64, ctx);
        let bracket = nn.clone() * hs.get(1) - R::one();
        let t = gen.next_value() * bracket / (nn.clone() * nn) * scale.clone();
        last = t.clone();
        R::add_compensated(&mut sum, &mut comp, t);
    }
    let xf = x.to_f64().value();
    let tail = log_power_tail(last.to_f64(), n_terms, xf, q as f64 - 1.0, gen.harmonic(1).to_f64());
    Ok(finish(sum + comp, n_terms as usize, tail, ctx))
}

/// Partial sum of the selected mixed family; converges to `ζ(q+1, x)`.
pub fn mixed_q(kind: MixedKind, x: &RBig, n_terms: u64, ctx: &PrecisionContext) -> Result<SeriesResult> {
    check(kind.q(), x, n_terms)?;
    match ctx.mode() {
        Mode::Fast => mixed_sum::<f64>(kind, x, n_terms, ctx),
        Mode::High => mixed_sum::<HighPrecFloat>(kind, x, n_terms, ctx),
    }
}
