//! Floating-point evaluators for the series representations of ζ(s), ζ(s,x),
//! ζ_a(s), polylogarithms, Catalan's constant and nonlinear Euler sums.
//!
//! Every evaluator returns a [`SeriesResult`] whose `tail_estimate` is an
//! analytic surrogate for the discarded remainder, calibrated on the last term.

mod catalan;
mod convergence;
mod euler_hurwitz;
mod euler_sums;
mod hasse;
mod polylog;
mod reference;
mod tail;
mod terms;

use std::fmt;

use dashu::rational::RBig;

use crate::error::{Error, Result};
use crate::numerics::{HighPrecFloat, PrecisionContext, Real, SeriesResult};

pub use catalan::{catalan_series, catalan_target, digamma_half_sum, digamma_target, CatalanKind};
pub use convergence::{convergence_table, fit_exponent, ConvergenceRow, ConvergenceTable};
pub use euler_hurwitz::{
    euler_hurwitz, euler_hurwitz_terms, mixed_q, mixed_q_terms, shen_series, stirling_route, stirling_route_terms,
    MixedKind,
};
pub use euler_sums::{conjecture_partial, euler_sum_partial, Conjecture, EulerSumKind};
pub use hasse::{alt_hurwitz, hasse_hurwitz, hasse_terms_exact, sondow_alt, NON_INTEGER_MAX_TERMS};
pub use polylog::{polylog_identity_check, polylog_lhs, polylog_rhs, PolylogCheck, PolylogIdentity};
pub use reference::{alt_hurwitz_ref, digamma_ref, hurwitz_ref, polylog, reference_context};
pub use tail::{geometric_tail, log_power_tail};
pub use terms::{bell_low, BellArgs, CoppoTerms, HarmonicState};

/// Packs a partial sum. The tail is floored at a few ulps of the value so that
/// fully converged sums still account for working-precision rounding.
pub(crate) fn finish<R: Real>(value: R, terms_used: usize, tail: f64, ctx: &PrecisionContext) -> SeriesResult {
    let floor = 8.0 * 2f64.powi(-(ctx.bits().min(1000) as i32)) * value.to_f64().abs();
    let tail = if tail.is_finite() { tail.max(floor) } else { f64::MAX };
    SeriesResult {
        value: value.to_high(),
        terms_used,
        tail_estimate: HighPrecFloat::from_f64(tail),
        mode: ctx.mode(),
    }
}

pub(crate) fn integer_value(s: &RBig) -> Option<i64> {
    if s.is_int() {
        i64::try_from(s.numerator().clone()).ok()
    } else {
        None
    }
}

/// Every evaluator reachable through [`evaluate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Formula {
    Hasse,
    HasseHurwitz,
    SondowAlt,
    AltHurwitz,
    EulerHurwitz,
    StirlingRoute,
    Shen,
    MixedQ,
    CatalanRamanujan,
    CatalanCentral,
    Zeta2Dup,
    Zeta3Half,
    Polylog14_3,
    Polylog14_4,
    DigammaHalfSum,
    EulerSum(EulerSumKind),
}

impl Formula {
    /// Kebab-case names, in `--help` order.
    pub const NAMES: [&'static str; 16] = [
        "hasse",
        "hasse-hurwitz",
        "sondow-alt",
        "alt-hurwitz",
        "euler-hurwitz",
        "stirling-route",
        "shen",
        "mixed-q",
        "catalan-ramanujan",
        "catalan-central",
        "zeta2-dup",
        "zeta3-half",
        "polylog-14-3",
        "polylog-14-4",
        "digamma-half-sum",
        "euler-sum",
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Formula::Hasse => "hasse",
            Formula::HasseHurwitz => "hasse-hurwitz",
            Formula::SondowAlt => "sondow-alt",
            Formula::AltHurwitz => "alt-hurwitz",
            Formula::EulerHurwitz => "euler-hurwitz",
            Formula::StirlingRoute => "stirling-route",
            Formula::Shen => "shen",
            Formula::MixedQ => "mixed-q",
            Formula::CatalanRamanujan => "catalan-ramanujan",
            Formula::CatalanCentral => "catalan-central",
            Formula::Zeta2Dup => "zeta2-dup",
            Formula::Zeta3Half => "zeta3-half",
            Formula::Polylog14_3 => "polylog-14-3",
            Formula::Polylog14_4 => "polylog-14-4",
            Formula::DigammaHalfSum => "digamma-half-sum",
            Formula::EulerSum(_) => "euler-sum",
        }
    }

    /// Parses a kebab-case name; `euler-sum` needs its kind from `kind`.
    pub fn parse(name: &str, kind: Option<&str>) -> Result<Self> {
        let f = match name {
            "hasse" => Formula::Hasse,
            "hasse-hurwitz" => Formula::HasseHurwitz,
            "sondow-alt" => Formula::SondowAlt,
            "alt-hurwitz" => Formula::AltHurwitz,
            "euler-hurwitz" => Formula::EulerHurwitz,
            "stirling-route" => Formula::StirlingRoute,
            "shen" => Formula::Shen,
            "mixed-q" => Formula::MixedQ,
            "catalan-ramanujan" => Formula::CatalanRamanujan,
            "catalan-central" => Formula::CatalanCentral,
            "zeta2-dup" => Formula::Zeta2Dup,
            "zeta3-half" => Formula::Zeta3Half,
            "polylog-14-3" => Formula::Polylog14_3,
            "polylog-14-4" => Formula::Polylog14_4,
            "digamma-half-sum" => Formula::DigammaHalfSum,
            "euler-sum" => {
                let k = kind.ok_or_else(|| Error::Usage("euler-sum needs --kind (E41, E43, …, ALT5)".into()))?;
                return Ok(Formula::EulerSum(k.parse()?));
            }
            other => {
                return Err(Error::Usage(format!(
                    "unknown formula {other:?}; expected one of {}",
                    Formula::NAMES.join(", ")
                )))
            }
        };
        if kind.is_some() {
            return Err(Error::Usage(format!("--kind applies only to euler-sum, not {name}")));
        }
        Ok(f)
    }

    /// Whether the formula reads a shift `x`.
    pub fn takes_x(&self) -> bool {
        matches!(
            self,
            Formula::Hasse
                | Formula::HasseHurwitz
                | Formula::AltHurwitz
                | Formula::EulerHurwitz
                | Formula::StirlingRoute
                | Formula::MixedQ
                | Formula::Polylog14_3
                | Formula::Polylog14_4
        )
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::EulerSum(k) => write!(f, "euler-sum:{k}"),
            other => f.write_str(other.name()),
        }
    }
}

/// A fully specified evaluation.
///
/// `s_or_q` is the real `s` for the Hasse and alternating families, the
/// integer `q` (or `p`, or the power) elsewhere; `x` is the shift (the
/// argument `y` for the polylogarithm identities) and defaults to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalRequest {
    pub formula: Formula,
    pub s_or_q: Option<RBig>,
    pub x: Option<RBig>,
    pub terms: u64,
    pub ctx: PrecisionContext,
}

impl EvalRequest {
    pub fn new(formula: Formula, s_or_q: Option<RBig>, x: Option<RBig>, terms: u64, ctx: PrecisionContext) -> Self {
        EvalRequest { formula, s_or_q, x, terms, ctx }
    }

    fn param(&self) -> Result<&RBig> {
        self.s_or_q
            .as_ref()
            .ok_or_else(|| Error::Usage(format!("{} needs --s or --q", self.formula.name())))
    }

    fn int_param(&self) -> Result<u32> {
        let p = self.param()?;
        integer_value(p)
            .and_then(|v| u32::try_from(v).ok())
            .ok_or_else(|| Error::Usage(format!("{} needs a non-negative integer parameter, got {p}", self.formula.name())))
    }

    fn shift(&self) -> Result<RBig> {
        match (&self.x, self.formula.takes_x()) {
            (Some(x), true) => Ok(x.clone()),
            (None, _) => Ok(RBig::ONE),
            (Some(_), false) => Err(Error::Usage(format!("{} takes no --x", self.formula.name()))),
        }
    }

    fn no_param(&self) -> Result<()> {
        match self.s_or_q {
            None => Ok(()),
            Some(_) => Err(Error::Usage(format!("{} takes no --s/--q", self.formula.name()))),
        }
    }

    fn polylog_args(&self) -> Result<(PolylogIdentity, u32, RBig)> {
        let which = match self.formula {
            Formula::Polylog14_3 => PolylogIdentity::E14_3,
            _ => PolylogIdentity::E14_4,
        };
        let y = self.x.clone().ok_or_else(|| Error::Usage("polylog identities need --x <y>".into()))?;
        Ok((which, self.int_param()?, y))
    }
}

/// Runs the evaluator selected by `req.formula`.
pub fn evaluate(req: &EvalRequest) -> Result<SeriesResult> {
    let n = req.terms;
    let ctx = &req.ctx;
    if n == 0 {
        return Err(Error::Domain("term budget N must be at least 1".into()));
    }
    match req.formula {
        Formula::Hasse | Formula::HasseHurwitz => hasse_hurwitz(req.param()?, &req.shift()?, n, ctx),
        Formula::SondowAlt => {
            req.shift()?;
            sondow_alt(req.param()?, n, ctx)
        }
        Formula::AltHurwitz => alt_hurwitz(req.param()?, &req.shift()?, n, ctx),
        Formula::EulerHurwitz => euler_hurwitz(req.int_param()?, &req.shift()?, n, ctx),
        Formula::StirlingRoute => stirling_route(req.int_param()?, &req.shift()?, n, ctx),
        Formula::Shen => {
            req.shift()?;
            shen_series(req.int_param()?, n, ctx)
        }
        Formula::MixedQ => mixed_q(MixedKind::from_q(req.int_param()?)?, &req.shift()?, n, ctx),
        Formula::CatalanRamanujan | Formula::CatalanCentral | Formula::Zeta2Dup | Formula::Zeta3Half => {
            req.no_param()?;
            req.shift()?;
            catalan_series(catalan_kind(req.formula), n, ctx)
        }
        Formula::Polylog14_3 | Formula::Polylog14_4 => {
            let (which, s, y) = req.polylog_args()?;
            polylog_lhs(which, s, &y, n, ctx)
        }
        Formula::DigammaHalfSum => {
            req.shift()?;
            digamma_half_sum(req.int_param()?, n, ctx)
        }
        Formula::EulerSum(kind) => {
            req.no_param()?;
            req.shift()?;
            euler_sum_partial(kind, n, ctx)
        }
    }
}

fn catalan_kind(f: Formula) -> CatalanKind {
    match f {
        Formula::CatalanRamanujan => CatalanKind::Ramanujan,
        Formula::CatalanCentral => CatalanKind::Central,
        Formula::Zeta2Dup => CatalanKind::Zeta2,
        _ => CatalanKind::Zeta3Half,
    }
}

/// The limit the selected series converges to, at reference precision.
pub fn reference_value(req: &EvalRequest) -> Result<HighPrecFloat> {
    let ctx = &reference_context(&req.ctx);
    match req.formula {
        Formula::Hasse | Formula::HasseHurwitz => {
            let s = req.param()?;
            if *s == RBig::ONE {
                return Err(Error::Domain("ζ(s, x) has a pole at s = 1".into()));
            }
            reference::hurwitz_any(s, &req.shift()?, ctx)
        }
        Formula::SondowAlt => alt_hurwitz_ref(req.param()?, &RBig::ONE, ctx),
        Formula::AltHurwitz => alt_hurwitz_ref(req.param()?, &req.shift()?, ctx),
        Formula::EulerHurwitz | Formula::StirlingRoute => {
            let q = req.int_param()?;
            hurwitz_ref(&RBig::from(q + 1), &req.shift()?, ctx)
        }
        Formula::Shen => hurwitz_ref(&RBig::from(req.int_param()? + 1), &RBig::ONE, ctx),
        Formula::MixedQ => {
            let q = MixedKind::from_q(req.int_param()?)?.q();
            hurwitz_ref(&RBig::from(q + 1), &req.shift()?, ctx)
        }
        Formula::CatalanRamanujan | Formula::CatalanCentral | Formula::Zeta2Dup | Formula::Zeta3Half => {
            Ok(catalan_target(catalan_kind(req.formula), ctx))
        }
        Formula::Polylog14_3 | Formula::Polylog14_4 => {
            let (which, s, y) = req.polylog_args()?;
            polylog_rhs(which, s, &y, ctx)
        }
        Formula::DigammaHalfSum => digamma_target(req.int_param()?, ctx),
        Formula::EulerSum(kind) => match (kind.zeta_target(), kind.alt_order()) {
            (Some((c, m)), _) => Ok(HighPrecFloat::int(c as i64, ctx) * crate::numerics::const_zeta(m, ctx)?),
            (None, Some(s)) => alt_hurwitz_ref(&RBig::from(s), &RBig::ONE, ctx),
            (None, None) => unreachable!("every kind has a target"),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;

    #[test]
    fn names_round_trip() {
        for name in Formula::NAMES {
            let kind = (name == "euler-sum").then_some("E41");
            let f = Formula::parse(name, kind).unwrap();
            assert_eq!(f.name(), name);
        }
        assert!(matches!(Formula::parse("nope", None), Err(Error::Usage(_))));
        assert!(matches!(Formula::parse("euler-sum", None), Err(Error::Usage(_))));
        assert!(matches!(Formula::parse("shen", Some("E41")), Err(Error::Usage(_))));
    }

    #[test]
    fn request_validation() {
        let ctx = PrecisionContext::fast();
        let bad_q = EvalRequest::new(Formula::EulerHurwitz, Some(rat(3, 2)), None, 10, ctx);
        assert!(matches!(evaluate(&bad_q), Err(Error::Usage(_))));
        let stray_x = EvalRequest::new(Formula::Shen, Some(RBig::from(2)), Some(rat(1, 2)), 10, ctx);
        assert!(matches!(evaluate(&stray_x), Err(Error::Usage(_))));
        let zero = EvalRequest::new(Formula::Shen, Some(RBig::from(2)), None, 0, ctx);
        assert!(matches!(evaluate(&zero), Err(Error::Domain(_))));
        let pole = EvalRequest::new(Formula::EulerHurwitz, Some(RBig::ONE), Some(RBig::ZERO), 10, ctx);
        assert!(matches!(evaluate(&pole), Err(Error::Domain(_))));
    }

    #[test]
    fn every_formula_meets_its_reference() {
        let ctx = PrecisionContext::fast();
        let cases: Vec<(Formula, Option<RBig>, Option<RBig>, u64)> = vec![
            (Formula::Hasse, Some(RBig::from(2)), Some(rat(1, 4)), 10_000),
            (Formula::HasseHurwitz, Some(RBig::from(3)), Some(rat(1, 2)), 2_000),
            (Formula::SondowAlt, Some(RBig::from(1)), None, 60),
            (Formula::AltHurwitz, Some(RBig::from(2)), Some(rat(1, 3)), 60),
            (Formula::EulerHurwitz, Some(RBig::from(4)), Some(RBig::ONE), 100_000),
            (Formula::StirlingRoute, Some(RBig::from(2)), Some(rat(1, 2)), 10_000),
            (Formula::Shen, Some(RBig::from(2)), None, 2_000),
            (Formula::MixedQ, Some(RBig::from(3)), Some(rat(3, 2)), 10_000),
            (Formula::CatalanRamanujan, None, None, 10_000),
            (Formula::CatalanCentral, None, None, 10_000),
            (Formula::Zeta2Dup, None, None, 10_000),
            (Formula::Zeta3Half, None, None, 10_000),
            (Formula::Polylog14_3, Some(RBig::from(1)), Some(rat(1, 2)), 200),
            (Formula::Polylog14_4, Some(RBig::from(2)), Some(rat(1, 2)), 80),
            (Formula::DigammaHalfSum, Some(RBig::from(2)), None, 10_000),
            (Formula::EulerSum(EulerSumKind::E45_8), None, None, 10_000),
        ];
        for (f, p, x, n) in cases {
            let req = EvalRequest::new(f, p, x, n, ctx);
            let r = evaluate(&req).unwrap();
            let want = reference_value(&req).unwrap();
            let e = (&r.value - &want).abs().to_f64();
            assert!(e <= 3.0 * r.tail_estimate.to_f64() + 1e-13 * want.to_f64().abs(), "{f}: {e} vs {}", r.tail_estimate);
        }
    }

    #[test]
    fn cli_style_examples() {
        let ctx = PrecisionContext::fast();
        let r = evaluate(&EvalRequest::new(Formula::EulerHurwitz, Some(RBig::from(4)), None, 100_000, ctx)).unwrap();
        let e = (r.value.to_f64() - 1.036_927_755_143_37).abs();
        assert!(e < 2e-3 && e <= r.tail_estimate.to_f64());
        let r = evaluate(&EvalRequest::new(Formula::SondowAlt, Some(RBig::ONE), None, 60, ctx)).unwrap();
        assert!((r.value.to_f64() - 0.6931471805599453).abs() < 1e-15);
    }
}
