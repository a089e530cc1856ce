//! Central-binomial series for Catalan's constant, ζ(2) and ζ(3, ½), and the
//! digamma-weighted odd sums.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::finish;
use super::tail::log_power_tail;
use crate::error::{domain, Error, Result};
use crate::numerics::{
    const_gamma, const_ln2, const_pi, const_zeta, CompensatedSum, HighPrecFloat, Mode, PrecisionContext, Real,
    SeriesResult,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CatalanKind {
    /// `G = (π/4) Σ_{n≥0} C(2n,n)²/(16^n (2n+1))`
    #[serde(rename = "RAMANUJAN_38")]
    Ramanujan,
    /// `G = ½ Σ_{n≥0} 4^n (n!)²/((2n)! (2n+1)²)`
    #[serde(rename = "CENTRAL_38_1")]
    Central,
    /// `3ζ(2) = Σ_{n≥0} 2^{2n+1}(n!)²/((n+1)(2n+1)!)`
    #[serde(rename = "ZETA2_37")]
    Zeta2,
    /// `7ζ(3) = ζ(3, ½) = ½ Σ_{n≥1} (nH_n − 1)[2^nΓ(n)]²/(n²Γ(2n))`
    #[serde(rename = "ZETA3_HALF_45_6")]
    Zeta3Half,
}

impl CatalanKind {
    pub fn name(self) -> &'static str {
        match self {
            CatalanKind::Ramanujan => "RAMANUJAN_38",
            CatalanKind::Central => "CENTRAL_38_1",
            CatalanKind::Zeta2 => "ZETA2_37",
            CatalanKind::Zeta3Half => "ZETA3_HALF_45_6",
        }
    }
}

impl FromStr for CatalanKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        [CatalanKind::Ramanujan, CatalanKind::Central, CatalanKind::Zeta2, CatalanKind::Zeta3Half]
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Usage(format!("unknown central-binomial series {s:?}")))
    }
}

/// The value each kind converges to.
pub fn catalan_target(kind: CatalanKind, ctx: &PrecisionContext) -> HighPrecFloat {
    let c = PrecisionContext::high(ctx.digits().max(30)).expect("digits in range");
    match kind {
        CatalanKind::Ramanujan | CatalanKind::Central => crate::numerics::const_catalan(&c),
        CatalanKind::Zeta2 => HighPrecFloat::int(3, &c) * const_zeta(2, &c).expect("m = 2"),
        CatalanKind::Zeta3Half => HighPrecFloat::int(7, &c) * const_zeta(3, &c).expect("m = 3"),
    }
}

fn central_sum<R: Real>(kind: CatalanKind, n_terms: u64, ctx: &PrecisionContext) -> Result<SeriesResult> {
    let mut acc = CompensatedSum::<R>::new();
    let mut last = R::zero();
    let tail;
    match kind {
        CatalanKind::Zeta3Half => {
            let half = R::ratio(1, 2, ctx);
            let mut r = R::int(2, ctx);
            let mut h = R::zero();
            for n in 1..=n_terms as i64 {
                let nn = R::int(n, ctx);
                if n > 1 {
                    let prev = R::int(n - 1, ctx);
                    r = r * prev.clone() / (prev + half.clone());
                }
                h = h + R::one() / nn.clone();
                let t = (nn.clone() * h.clone() - R::one()) * r.clone() / (nn.clone() * nn);
                last = t.clone();
                acc.add(t);
            }
            tail = log_power_tail(last.to_f64(), n_terms, 0.5, 1.0, h.to_f64());
        }
        _ => {
            // c_n = C(2n, n)/4^n, advanced by the exact factor (2n+1)/(2n+2).
            let pi_4 = R::from_high(&const_pi(ctx), ctx) / R::int(4, ctx);
            let mut c = R::one();
            for n in 0..n_terms as i64 {
                if n > 0 {
                    c = c * R::ratio(2 * n - 1, 2 * n, ctx);
                }
                let odd = R::int(2 * n + 1, ctx);
                let t = match kind {
                    CatalanKind::Ramanujan => pi_4.clone() * c.clone() * c.clone() / odd,
                    CatalanKind::Central => R::one() / (R::int(2, ctx) * odd.clone() * odd * c.clone()),
                    _ => R::int(2, ctx) / (R::int(n + 1, ctx) * odd * c.clone()),
                };
                last = t.clone();
                acc.add(t);
            }
            let x = if kind == CatalanKind::Ramanujan { 1.0 } else { 0.5 };
            tail = log_power_tail(last.to_f64(), n_terms.saturating_sub(1), x, 0.0, 0.0);
        }
    }
    Ok(finish(acc.value(), n_terms as usize, tail, ctx))
}

/// Partial sums of the central-binomial series.
pub fn catalan_series(kind: CatalanKind, n_terms: u64, ctx: &PrecisionContext) -> Result<SeriesResult> {
    if n_terms == 0 {
        return domain("term budget N must be at least 1");
    }
    match ctx.mode() {
        Mode::Fast => central_sum::<f64>(kind, n_terms, ctx),
        Mode::High => central_sum::<HighPrecFloat>(kind, n_terms, ctx),
    }
}

/// Closed-form limits: `−(γπ² + 7ζ(3))/8` for power 2 and
/// `−(3π²ζ(3) + π⁴γ + 93ζ(5))/96` for power 4.
pub fn digamma_target(power: u32, ctx: &PrecisionContext) -> Result<HighPrecFloat> {
    let c = PrecisionContext::high(ctx.digits().max(30))?;
    let (g, pi) = (const_gamma(&c), const_pi(&c));
    let pi2 = &pi * &pi;
    let z3 = const_zeta(3, &c)?;
    match power {
        2 => Ok(-(&g * &pi2 + HighPrecFloat::int(7, &c) * z3) / HighPrecFloat::int(8, &c)),
        4 => {
            let z5 = const_zeta(5, &c)?;
            let inner = HighPrecFloat::int(3, &c) * &pi2 * z3 + &pi2 * &pi2 * g + HighPrecFloat::int(93, &c) * z5;
            Ok(-inner / HighPrecFloat::int(96, &c))
        }
        _ => domain(format!("digamma sums are defined for power 2 or 4, got {power}")),
    }
}

fn digamma_sum<R: Real>(power: u32, n_terms: u64, ctx: &PrecisionContext) -> Result<SeriesResult> {
    let base = R::from_high(&(-(const_gamma(ctx)) - HighPrecFloat::int(2, ctx) * const_ln2(ctx)), ctx);
    let mut h = R::zero();
    let mut h_comp = R::zero();
    let mut acc = CompensatedSum::<R>::new();
    let mut last = R::zero();
    let mut psi = base.clone();
    for n in 0..n_terms as i64 {
        // ψ(n + ½) = −γ − 2 log 2 + H_n(½)
        psi = base.clone() + h.clone() + h_comp.clone();
        let t = psi.clone() / R::int(2 * n + 1, ctx).powi(power as i64);
        last = t.clone();
        acc.add(t);
        R::add_compensated(&mut h, &mut h_comp, R::int(2, ctx) / R::int(2 * n + 1, ctx));
    }
    let tail = log_power_tail(last.to_f64(), n_terms.saturating_sub(1), power as f64 - 1.0, 1.0, psi.to_f64());
    Ok(finish(acc.value(), n_terms as usize, tail, ctx))
}

/// Partial sum `Σ_{n<N} ψ(n+½)/(2n+1)^power`.
pub fn digamma_half_sum(power: u32, n_terms: u64, ctx: &PrecisionContext) -> Result<SeriesResult> {
    if power != 2 && power != 4 {
        return domain(format!("digamma sums are defined for power 2 or 4, got {power}"));
    }
    if n_terms == 0 {
        return domain("term budget N must be at least 1");
    }
    match ctx.mode() {
        Mode::Fast => digamma_sum::<f64>(power, n_terms, ctx),
        Mode::High => digamma_sum::<HighPrecFloat>(power, n_terms, ctx),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn err(r: &SeriesResult, t: &HighPrecFloat) -> f64 {
        (&r.value - t).abs().to_f64()
    }

    #[test]
    fn catalan_pair() {
        let ctx = PrecisionContext::fast();
        let g = catalan_target(CatalanKind::Ramanujan, &ctx);
        let a = catalan_series(CatalanKind::Ramanujan, 100_000, &ctx).unwrap();
        let b = catalan_series(CatalanKind::Central, 100_000, &ctx).unwrap();
        assert!(err(&a, &g) <= 3.0 * a.tail_estimate.to_f64());
        assert!(err(&b, &g) <= 3.0 * b.tail_estimate.to_f64());
        let ca = &a.value + &a.tail_estimate;
        let cb = &b.value + &b.tail_estimate;
        assert!((ca - cb).abs().to_f64() < 1e-3);
    }

    #[test]
    fn zeta_central_forms() {
        let ctx = PrecisionContext::fast();
        let r = catalan_series(CatalanKind::Zeta2, 1_000_000, &ctx).unwrap();
        assert!(err(&r, &catalan_target(CatalanKind::Zeta2, &ctx)) <= r.tail_estimate.to_f64());
        let r = catalan_series(CatalanKind::Zeta3Half, 10_000, &ctx).unwrap();
        assert!(err(&r, &catalan_target(CatalanKind::Zeta3Half, &ctx)) <= r.tail_estimate.to_f64());
        // first term of 3ζ(2): 2/1 at n = 0
        let r = catalan_series(CatalanKind::Zeta2, 1, &ctx).unwrap();
        assert_eq!(r.value.to_f64(), 2.0);
    }

    #[test]
    fn digamma_sums() {
        let ctx = PrecisionContext::fast();
        let r = digamma_half_sum(2, 100_000, &ctx).unwrap();
        let t = digamma_target(2, &ctx).unwrap();
        assert!((t.to_f64() + 1.763911073600881).abs() < 1e-14);
        assert!(err(&r, &t) < 1e-3 && err(&r, &t) <= r.tail_estimate.to_f64());
        let r = digamma_half_sum(4, 1000, &ctx).unwrap();
        let t = digamma_target(4, &ctx).unwrap();
        assert!((t.to_f64() + 1.960956383149275).abs() < 1e-14);
        assert!(err(&r, &t) < 1e-4);
        let r = digamma_half_sum(2, 1, &ctx).unwrap();
        let psi_half = -const_gamma(&ctx).to_f64() - 2.0 * std::f64::consts::LN_2;
        assert!((r.value.to_f64() - psi_half).abs() < 1e-15);
        assert!(digamma_half_sum(3, 10, &ctx).is_err());
    }
}
