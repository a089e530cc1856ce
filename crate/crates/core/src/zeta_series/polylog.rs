//! Binomial double sums that evaluate to polylogarithms.

use dashu::integer::IBig;
use dashu::rational::RBig;
use serde::{Deserialize, Serialize};

use super::finish;
use super::reference::polylog;
use super::tail::{geometric_tail, log_power_tail};
use crate::error::{domain, Result};
use crate::numerics::{binomial_row, CompensatedSum, HighPrecFloat, Mode, PrecisionContext, Real, SeriesResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PolylogIdentity {
    /// `Σ (1/n²) Σ_k C(n,k)(−1)^k y^k/k^s = −(s+1)Li_{s+2}(y) + log y·Li_{s+1}(y)`
    E14_3,
    /// `Σ (1/(n2^n)) Σ_k C(n,k) y^k/k^s = Li_{s+1}(y)`
    E14_4,
}

/// Left side (partial, with tail) and right side of the selected identity.
#[derive(Debug, Clone, PartialEq)]
pub struct PolylogCheck {
    pub lhs: SeriesResult,
    pub rhs: HighPrecFloat,
}

/// The closed-form right-hand side.
pub fn polylog_rhs(which: PolylogIdentity, s: u32, y: &RBig, ctx: &PrecisionContext) -> Result<HighPrecFloat> {
    let s1 = RBig::from(s + 1);
    match which {
        PolylogIdentity::E14_4 => polylog(&s1, y, ctx),
        PolylogIdentity::E14_3 => {
            if *y <= RBig::ZERO {
                return domain("the E14_3 right side needs y > 0 for log y");
            }
            let bits = super::reference::reference_context(ctx).bits();
            let yf = HighPrecFloat::from_rational(y, bits);
            let a = polylog(&RBig::from(s + 2), y, ctx)?;
            let b = polylog(&s1, y, ctx)?;
            Ok(-(HighPrecFloat::from_ibig(&IBig::from(s + 1), bits) * a) + yf.ln() * b)
        }
    }
}

/// Partial double sum for `n = 1..=N`. Inner sums run at working precision plus
/// `n·log2(1+|y|)` guard bits, which absorbs the binomial cancellation.
pub fn polylog_lhs(which: PolylogIdentity, s: u32, y: &RBig, n_terms: u64, ctx: &PrecisionContext) -> Result<SeriesResult> {
    if n_terms == 0 {
        return domain("term budget N must be at least 1");
    }
    if y.clone() * y >= RBig::ONE {
        return domain(format!("|y| must be below 1, got {y}"));
    }
    let yabs = y.to_f64().value().abs();
    let stage = match ctx.mode() {
        Mode::High => *ctx,
        Mode::Fast => PrecisionContext::high(30)?,
    };
    let bits = stage.bits() + (n_terms as f64 * (1.0 + yabs).log2()).ceil() as usize + 32;
    let sign_alt = which == PolylogIdentity::E14_3;
    // w_k = (±y)^k / k^s
    let yf = HighPrecFloat::from_rational(&if sign_alt { -y.clone() } else { y.clone() }, bits);
    let mut w = Vec::with_capacity(n_terms as usize + 1);
    w.push(HighPrecFloat::zero());
    let mut p = HighPrecFloat::from_ibig(&IBig::ONE, bits);
    for k in 1..=n_terms {
        p = p * &yf;
        let ks = HighPrecFloat::from_ibig(&IBig::from(k), bits).powi(s as i64);
        w.push(&p / &ks);
    }
    let mut acc = CompensatedSum::<HighPrecFloat>::new();
    let mut last = HighPrecFloat::zero();
    for n in 1..=n_terms {
        let row = binomial_row(n);
        let mut inner = HighPrecFloat::zero();
        for k in 1..=n as usize {
            inner = inner + HighPrecFloat::from_ibig(&IBig::from(row[k].clone()), bits) * &w[k];
        }
        let scale = match which {
            PolylogIdentity::E14_3 => HighPrecFloat::from_ibig(&IBig::from(n * n), bits),
            PolylogIdentity::E14_4 => HighPrecFloat::from_ibig(&(IBig::from(n) << n as usize), bits),
        };
        let t = (inner / scale).with_bits(stage.bits());
        last = t.clone();
        acc.add(t);
    }
    let tail = match which {
        PolylogIdentity::E14_4 => geometric_tail(last.to_f64(), (1.0 + yabs) / 2.0),
        PolylogIdentity::E14_3 => {
            let ell = (n_terms as f64).ln() + 0.5772156649015329;
            log_power_tail(last.to_f64(), n_terms, 1.0, s as f64, ell)
        }
    };
    let value = HighPrecFloat::from_high(&acc.value(), ctx);
    Ok(finish(value, n_terms as usize, tail, ctx))
}

/// Both sides of the selected identity at `(s, y)` with `N` outer terms.
pub fn polylog_identity_check(
    which: PolylogIdentity,
    s: u32,
    y: &RBig,
    n_terms: u64,
    ctx: &PrecisionContext,
) -> Result<PolylogCheck> {
    if y.clone() * RBig::from(4) * y > RBig::ONE {
        return domain(format!("identity checks need |y| ≤ 1/2, got {y}"));
    }
    Ok(PolylogCheck { lhs: polylog_lhs(which, s, y, n_terms, ctx)?, rhs: polylog_rhs(which, s, y, ctx)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;

    #[test]
    fn e14_4_converges_geometrically() {
        let ctx = PrecisionContext::high(30).unwrap();
        let c = polylog_identity_check(PolylogIdentity::E14_4, 2, &rat(1, 2), 80, &ctx).unwrap();
        let e = (&c.lhs.value - &c.rhs).abs().to_f64();
        assert!(e < 1e-10 * c.rhs.to_f64(), "{e}");
        assert!(e <= c.lhs.tail_estimate.to_f64());
        assert!((c.rhs.to_f64() - 0.5372131936080402).abs() < 1e-15);
    }

    #[test]
    fn e14_3_within_tail() {
        let ctx = PrecisionContext::fast();
        let c = polylog_identity_check(PolylogIdentity::E14_3, 1, &rat(1, 2), 400, &ctx).unwrap();
        let e = (&c.lhs.value - &c.rhs).abs().to_f64();
        assert!(e <= c.lhs.tail_estimate.to_f64(), "{e} vs {}", c.lhs.tail_estimate);
    }

    #[test]
    fn domain_limits() {
        let ctx = PrecisionContext::fast();
        assert!(polylog_identity_check(PolylogIdentity::E14_4, 1, &rat(3, 4), 10, &ctx).is_err());
        assert!(polylog_lhs(PolylogIdentity::E14_4, 1, &RBig::ONE, 10, &ctx).is_err());
    }
}
