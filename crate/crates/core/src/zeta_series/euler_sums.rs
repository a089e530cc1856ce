//! Nonlinear Euler sums in the unshifted harmonic numbers, and the
//! conjectured binomial-sum forms they specialise.

use std::fmt;
use std::str::FromStr;

use dashu::rational::RBig;
use serde::{Deserialize, Serialize};

use super::finish;
use super::tail::{geometric_tail, log_power_tail};
use super::terms::{bell_low, HarmonicState};
use crate::error::{domain, Error, Result};
use crate::harmonic::alt_binom_sum;
use crate::numerics::{factorial, HighPrecFloat, Mode, PrecisionContext, Real, SeriesResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum EulerSumKind {
    /// `Σ([H]² + H^{(2)})/n² = 3!ζ(4)`
    E41,
    /// `Σ([H]³ + 3H^{(2)}H + 2H^{(3)})/n² = 4!ζ(5)`
    E43,
    /// `Σ([H]⁴ + 6[H]²H^{(2)} + 8H·H^{(3)} + 3[H^{(2)}]² + 6H^{(4)})/n² = 5!ζ(6)`
    #[serde(rename = "E43_2")]
    E43_2,
    /// `Σ(nH − 1)([H]² + H^{(2)})/n³ = 12ζ(5)`
    #[serde(rename = "E45_8")]
    E45_8,
    /// `Σ(nH − 1)([H]³ + 3H·H^{(2)} + 2H^{(3)})/n³ = ½·5!·ζ(6)`
    #[serde(rename = "E45_10")]
    E45_10,
    /// `Σ Y_{s−1}(H, 1!H^{(2)}, …)/((s−1)!·n·2^n) = ζ_a(s)` for `s = 2..=5`
    Alt2,
    Alt3,
    Alt4,
    Alt5,
}

impl EulerSumKind {
    pub const ALL: [EulerSumKind; 9] = [
        EulerSumKind::E41,
        EulerSumKind::E43,
        EulerSumKind::E43_2,
        EulerSumKind::E45_8,
        EulerSumKind::E45_10,
        EulerSumKind::Alt2,
        EulerSumKind::Alt3,
        EulerSumKind::Alt4,
        EulerSumKind::Alt5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EulerSumKind::E41 => "E41",
            EulerSumKind::E43 => "E43",
            EulerSumKind::E43_2 => "E43_2",
            EulerSumKind::E45_8 => "E45_8",
            EulerSumKind::E45_10 => "E45_10",
            EulerSumKind::Alt2 => "ALT2",
            EulerSumKind::Alt3 => "ALT3",
            EulerSumKind::Alt4 => "ALT4",
            EulerSumKind::Alt5 => "ALT5",
        }
    }

    /// Highest harmonic order the summand reads.
    fn orders(self) -> usize {
        match self {
            EulerSumKind::E41 | EulerSumKind::E45_8 => 2,
            EulerSumKind::E43 | EulerSumKind::E45_10 => 3,
            EulerSumKind::E43_2 => 4,
            EulerSumKind::Alt2 => 1,
            EulerSumKind::Alt3 => 2,
            EulerSumKind::Alt4 => 3,
            EulerSumKind::Alt5 => 4,
        }
    }

    /// Total power of `H_n ~ log n` in the summand.
    fn log_degree(self) -> f64 {
        match self {
            EulerSumKind::E41 => 2.0,
            EulerSumKind::E43 | EulerSumKind::E45_8 => 3.0,
            EulerSumKind::E43_2 | EulerSumKind::E45_10 => 4.0,
            _ => 0.0,
        }
    }

    /// `s` of `ζ_a(s)` for the alternating family.
    pub fn alt_order(self) -> Option<u32> {
        match self {
            EulerSumKind::Alt2 => Some(2),
            EulerSumKind::Alt3 => Some(3),
            EulerSumKind::Alt4 => Some(4),
            EulerSumKind::Alt5 => Some(5),
            _ => None,
        }
    }

    /// The limit as `(coefficient, zeta argument)`, e.g. `(6, 4)` for `3!ζ(4)`;
    /// the alternating family instead converges to `ζ_a(s)`.
    pub fn zeta_target(self) -> Option<(u32, u32)> {
        match self {
            EulerSumKind::E41 => Some((6, 4)),
            EulerSumKind::E43 => Some((24, 5)),
            EulerSumKind::E43_2 => Some((120, 6)),
            EulerSumKind::E45_8 => Some((12, 5)),
            EulerSumKind::E45_10 => Some((60, 6)),
            _ => None,
        }
    }
}

impl fmt::Display for EulerSumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EulerSumKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let up = s.to_ascii_uppercase().replace('-', "_");
        EulerSumKind::ALL
            .into_iter()
            .find(|k| k.name() == up)
            .ok_or_else(|| Error::Usage(format!("unknown Euler-sum kind {s:?}")))
    }
}

/// `Y_m(0!H^{(1)}, 1!H^{(2)}, …, (m−1)!H^{(m)})` from the running harmonic numbers.
fn bell_of<R: Real>(hs: &HarmonicState<R>, m: usize) -> R {
    let xs: Vec<R> = (1..=m)
        .map(|j| R::from_ibig(&factorial(j as u64 - 1).into()) * hs.get(j))
        .collect();
    bell_low(&xs)
}

fn euler_sum<R: Real>(kind: EulerSumKind, n_terms: u64, ctx: &PrecisionContext) -> Result<SeriesResult> {
    let mut hs = HarmonicState::<R>::new(kind.orders());
    let half = R::ratio(1, 2, ctx);
    let mut w = R::one();
    let alt_scale = kind
        .alt_order()
        .map(|s| R::from_rational(&(RBig::ONE / RBig::from(factorial(s as u64 - 1))), ctx));
    let (mut sum, mut comp, mut last) = (R::zero(), R::zero(), R::zero());
    for n in 1..=n_terms {
        hs.advance();
        let nn = R::int(n as i64, ctx);
        let n2 = nn.clone() * nn.clone();
        let t = match kind {
            EulerSumKind::E41 => bell_of(&hs, 2) / n2,
            EulerSumKind::E43 => bell_of(&hs, 3) / n2,
            EulerSumKind::E43_2 => bell_of(&hs, 4) / n2,
            EulerSumKind::E45_8 => (nn.clone() * hs.get(1) - R::one()) * bell_of(&hs, 2) / (n2 * nn),
            EulerSumKind::E45_10 => (nn.clone() * hs.get(1) - R::one()) * bell_of(&hs, 3) / (n2 * nn),
            _ => {
                w = w * half.clone();
                let s = kind.alt_order().expect("alternating kind") as usize;
                w.clone() * bell_of(&hs, s - 1) * alt_scale.clone().expect("alternating kind") / nn
            }
        };
        last = t.clone();
        R::add_compensated(&mut sum, &mut comp, t);
    }
    let tail = match kind.alt_order() {
        Some(_) => geometric_tail(last.to_f64(), 0.5),
        None => log_power_tail(last.to_f64(), n_terms, 1.0, kind.log_degree(), hs.get(1).to_f64()),
    };
    Ok(finish(sum + comp, n_terms as usize, tail, ctx))
}

/// Partial sum of the named nonlinear Euler sum (no normalising prefactor for
/// the `E*` kinds; the alternating kinds include theirs).
pub fn euler_sum_partial(kind: EulerSumKind, n_terms: u64, ctx: &PrecisionContext) -> Result<SeriesResult> {
    if n_terms == 0 {
        return domain("term budget N must be at least 1");
    }
    match ctx.mode() {
        Mode::Fast => euler_sum::<f64>(kind, n_terms, ctx),
        Mode::High => euler_sum::<HighPrecFloat>(kind, n_terms, ctx),
    }
}

/// The two conjectured binomial-sum families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Conjecture {
    /// `ζ(s+2) = (1/(s+1)) Σ (1/n²) Σ_k C(n,k)(−1)^{k+1}/k^s`
    E14_1,
    /// `ζ_a(s) = Σ (1/(n2^n)) Σ_k C(n,k)(−1)^{k+1}/k^{s−1}`
    E14_2,
}

/// Below this `n` the inner binomial sums are formed exactly; beyond it they
/// come from the equivalent Bell form `Y_m(0!H^{(1)}, …)/m!`.
const EXACT_BINOMIAL_CUTOFF: u64 = 200;

fn conjecture_sum<R: Real>(which: Conjecture, s: u32, n_terms: u64, ctx: &PrecisionContext) -> Result<SeriesResult> {
    let m = match which {
        Conjecture::E14_1 => s,
        Conjecture::E14_2 => s - 1,
    } as usize;
    let mut hs = HarmonicState::<R>::new(m.max(1));
    let inv_mfact = R::from_rational(&(RBig::ONE / RBig::from(factorial(m as u64))), ctx);
    let half = R::ratio(1, 2, ctx);
    let mut w = R::one();
    let (mut sum, mut comp, mut last) = (R::zero(), R::zero(), R::zero());
    for n in 1..=n_terms {
        hs.advance();
        // Σ_k C(n,k)(−1)^{k+1}/k^m = −S_n(m); for m = 0 it is 1.
        let inner = if m == 0 {
            R::one()
        } else if n < EXACT_BINOMIAL_CUTOFF {
            R::from_rational(&(-alt_binom_sum(n, m as u32)), ctx)
        } else {
            bell_of(&hs, m) * inv_mfact.clone()
        };
        let nn = R::int(n as i64, ctx);
        let t = match which {
            Conjecture::E14_1 => inner / (nn.clone() * nn),
            Conjecture::E14_2 => {
                w = w * half.clone();
                inner * w.clone() / nn
            }
        };
        last = t.clone();
        R::add_compensated(&mut sum, &mut comp, t);
    }
    let mut value = sum + comp;
    let mut tail = match which {
        Conjecture::E14_1 => log_power_tail(last.to_f64(), n_terms, 1.0, s as f64, hs.get(1).to_f64()),
        Conjecture::E14_2 => geometric_tail(last.to_f64(), 0.5),
    };
    if which == Conjecture::E14_1 {
        value = value / R::int(s as i64 + 1, ctx);
        tail /= s as f64 + 1.0;
    }
    Ok(finish(value, n_terms as usize, tail, ctx))
}

/// Partial sums of the conjectured forms, with exact inner binomial sums for small `n`.
pub fn conjecture_partial(which: Conjecture, s: u32, n_terms: u64, ctx: &PrecisionContext) -> Result<SeriesResult> {
    if s < 1 {
        return domain("the conjectured forms need s ≥ 1");
    }
    if n_terms == 0 {
        return domain("term budget N must be at least 1");
    }
    match ctx.mode() {
        Mode::Fast => conjecture_sum::<f64>(which, s, n_terms, ctx),
        Mode::High => conjecture_sum::<HighPrecFloat>(which, s, n_terms, ctx),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::const_zeta;
    use crate::zeta_series::reference::alt_hurwitz_ref;

    fn check_kind(kind: EulerSumKind, n: u64, factor: f64) {
        let ctx = PrecisionContext::fast();
        let r = euler_sum_partial(kind, n, &ctx).unwrap();
        let want = match kind.zeta_target() {
            Some((c, m)) => HighPrecFloat::from_f64(c as f64) * const_zeta(m, &ctx).unwrap(),
            None => alt_hurwitz_ref(&RBig::from(kind.alt_order().unwrap()), &RBig::ONE, &ctx).unwrap(),
        };
        let e = (&r.value - &want).abs().to_f64();
        assert!(e <= factor * r.tail_estimate.to_f64(), "{kind}: err {e} tail {}", r.tail_estimate);
        if kind.alt_order().is_some() {
            assert!(e < 1e-12 * want.to_f64().abs(), "{kind}: {e}");
        }
    }

    #[test]
    fn nonlinear_sums_within_tail() {
        for kind in [EulerSumKind::E41, EulerSumKind::E43, EulerSumKind::E43_2, EulerSumKind::E45_8, EulerSumKind::E45_10] {
            check_kind(kind, 20_000, 3.0);
        }
    }

    #[test]
    fn alternating_family() {
        check_kind(EulerSumKind::Alt2, 60, 1.0);
        for kind in [EulerSumKind::Alt3, EulerSumKind::Alt4, EulerSumKind::Alt5] {
            check_kind(kind, 80, 1.0);
        }
    }

    #[test]
    fn kinds_parse() {
        for k in EulerSumKind::ALL {
            assert_eq!(k.name().parse::<EulerSumKind>().unwrap(), k);
        }
        assert_eq!("e45-8".parse::<EulerSumKind>().unwrap(), EulerSumKind::E45_8);
        assert!("E99".parse::<EulerSumKind>().is_err());
    }

    #[test]
    fn conjectures_hold() {
        let ctx = PrecisionContext::fast();
        for s in 1..=3u32 {
            let r = conjecture_partial(Conjecture::E14_1, s, 10_000, &ctx).unwrap();
            let want = const_zeta(s + 2, &ctx).unwrap();
            assert!((&r.value - &want).abs().to_f64() <= r.tail_estimate.to_f64(), "14.1 s={s}");
            let r = conjecture_partial(Conjecture::E14_2, s, 60, &ctx).unwrap();
            let want = alt_hurwitz_ref(&RBig::from(s), &RBig::ONE, &ctx).unwrap();
            assert!((&r.value - &want).abs().to_f64() <= r.tail_estimate.to_f64(), "14.2 s={s}");
        }
    }
}
