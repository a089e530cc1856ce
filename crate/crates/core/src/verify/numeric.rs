use std::collections::BTreeMap;

use dashu::rational::RBig;

use super::{numeric_report, params, Plan, Report};
use crate::error::Result;
use crate::numerics::{const_catalan, const_ln2, const_zeta, rat, HighPrecFloat, PrecisionContext, SeriesResult};
use crate::zeta_series::{
    alt_hurwitz, alt_hurwitz_ref, catalan_series, catalan_target, conjecture_partial, digamma_half_sum, digamma_target,
    euler_hurwitz, euler_sum_partial, hasse_hurwitz, hurwitz_ref, mixed_q, polylog_identity_check, shen_series,
    sondow_alt, stirling_route, CatalanKind, Conjecture, EulerSumKind, MixedKind, PolylogIdentity,
};

fn fast() -> PrecisionContext {
    PrecisionContext::fast()
}

fn refctx() -> PrecisionContext {
    PrecisionContext::high(30).expect("30 digits")
}

fn check(id: &str, p: BTreeMap<String, String>, res: &SeriesResult, want: &HighPrecFloat) -> Report {
    numeric_report(id, p, &res.value, want, res.tail_estimate.to_f64(), res.terms_used as u64)
}

pub fn shen_45_2(plan: &Plan) -> Result<Vec<Report>> {
    let n = plan.terms(10_000);
    (1..=3u32)
        .map(|p| Ok(check("shen_45_2", params! {"p" => p}, &shen_series(p, n, &fast())?, &const_zeta(p + 1, &refctx())?)))
        .collect()
}

fn zeta_a(plan: &Plan, id: &str, s: u32) -> Result<Vec<Report>> {
    let n = plan.terms(80);
    let want = if s == 1 { const_ln2(&refctx()) } else { alt_hurwitz_ref(&RBig::from(s), &RBig::ONE, &refctx())? };
    let mut out = vec![
        check(id, params! {"form" => "binomial"}, &conjecture_partial(Conjecture::E14_2, s, n, &fast())?, &want),
        check(id, params! {"form" => "hasse"}, &sondow_alt(&RBig::from(s), n, &fast())?, &want),
    ];
    let kind = match s {
        2 => Some(EulerSumKind::Alt2),
        3 => Some(EulerSumKind::Alt3),
        4 => Some(EulerSumKind::Alt4),
        5 => Some(EulerSumKind::Alt5),
        _ => None,
    };
    if let Some(k) = kind {
        out.insert(0, check(id, params! {"form" => "harmonic"}, &euler_sum_partial(k, n, &fast())?, &want));
    }
    Ok(out)
}

pub fn zeta_a_1(plan: &Plan) -> Result<Vec<Report>> {
    zeta_a(plan, "zeta_a_1", 1)
}

pub fn zeta_a_2(plan: &Plan) -> Result<Vec<Report>> {
    zeta_a(plan, "zeta_a_2", 2)
}

pub fn zeta_a_3(plan: &Plan) -> Result<Vec<Report>> {
    zeta_a(plan, "zeta_a_3", 3)
}

pub fn zeta_a_4(plan: &Plan) -> Result<Vec<Report>> {
    zeta_a(plan, "zeta_a_4", 4)
}

pub fn zeta_a_5(plan: &Plan) -> Result<Vec<Report>> {
    zeta_a(plan, "zeta_a_5", 5)
}

fn zeta_display(plan: &Plan, id: &str, m: u32) -> Result<Vec<Report>> {
    let n = plan.terms(100_000);
    let want = const_zeta(m, &refctx())?;
    Ok(vec![
        check(id, params! {"form" => "harmonic"}, &euler_hurwitz(m - 1, &RBig::ONE, n, &fast())?, &want),
        check(id, params! {"form" => "binomial"}, &conjecture_partial(Conjecture::E14_1, m - 2, n, &fast())?, &want),
    ])
}

pub fn zeta_3(plan: &Plan) -> Result<Vec<Report>> {
    zeta_display(plan, "zeta_3", 3)
}

pub fn zeta_4(plan: &Plan) -> Result<Vec<Report>> {
    zeta_display(plan, "zeta_4", 4)
}

pub fn zeta_5(plan: &Plan) -> Result<Vec<Report>> {
    zeta_display(plan, "zeta_5", 5)
}

pub fn e14_1(plan: &Plan) -> Result<Vec<Report>> {
    let n = plan.terms(10_000);
    (1..=3u32)
        .map(|s| {
            let r = conjecture_partial(Conjecture::E14_1, s, n, &fast())?;
            Ok(check("e14_1", params! {"s" => s}, &r, &const_zeta(s + 2, &refctx())?))
        })
        .collect()
}

pub fn e14_2(plan: &Plan) -> Result<Vec<Report>> {
    let n = plan.terms(60);
    (1..=3u32)
        .map(|s| {
            let r = conjecture_partial(Conjecture::E14_2, s, n, &fast())?;
            Ok(check("e14_2", params! {"s" => s}, &r, &alt_hurwitz_ref(&RBig::from(s), &RBig::ONE, &refctx())?))
        })
        .collect()
}

fn polylog_cases(plan: &Plan, id: &str, which: PolylogIdentity, ss: &[u32], ys: &[RBig], full: u64) -> Result<Vec<Report>> {
    let n = plan.terms(full);
    let mut out = Vec::new();
    for y in plan.xs(ys) {
        for &s in ss {
            let c = polylog_identity_check(which, s, &y, n, &fast())?;
            out.push(check(id, params! {"s" => s, "y" => &y}, &c.lhs, &c.rhs));
        }
    }
    Ok(out)
}

pub fn e14_3(plan: &Plan) -> Result<Vec<Report>> {
    polylog_cases(plan, "e14_3", PolylogIdentity::E14_3, &[1, 2], &[rat(1, 2)], 400)
}

pub fn e14_4(plan: &Plan) -> Result<Vec<Report>> {
    polylog_cases(plan, "e14_4", PolylogIdentity::E14_4, &[1, 2, 3], &[rat(1, 2), rat(-1, 2)], 80)
}

pub fn hasse_12_2(plan: &Plan) -> Result<Vec<Report>> {
    let n = plan.terms(10_000);
    let mut out = Vec::new();
    for x in plan.xs(&[RBig::ONE, rat(1, 4), rat(3, 2)]) {
        for s in [2, 3] {
            let s = RBig::from(s);
            let r = hasse_hurwitz(&s, &x, n, &fast())?;
            out.push(check("hasse_12_2", params! {"s" => &s, "x" => &x}, &r, &hurwitz_ref(&s, &x, &refctx())?));
        }
    }
    let s = rat(5, 2);
    let r = hasse_hurwitz(&s, &RBig::ONE, n.min(crate::zeta_series::NON_INTEGER_MAX_TERMS), &refctx())?;
    out.push(check("hasse_12_2", params! {"s" => &s, "x" => 1}, &r, &hurwitz_ref(&s, &RBig::ONE, &refctx())?));
    Ok(out)
}

pub fn alt_hurwitz_13(plan: &Plan) -> Result<Vec<Report>> {
    let n = plan.terms(80);
    let mut out = Vec::new();
    for x in plan.xs(&[rat(1, 2), rat(1, 3)]) {
        for s in 1..=3 {
            let s = RBig::from(s);
            let r = alt_hurwitz(&s, &x, n, &fast())?;
            out.push(check("alt_hurwitz_13", params! {"s" => &s, "x" => &x}, &r, &alt_hurwitz_ref(&s, &x, &refctx())?));
        }
    }
    Ok(out)
}

pub fn euler_hurwitz_q(plan: &Plan) -> Result<Vec<Report>> {
    let n = plan.terms(10_000);
    let mut out = Vec::new();
    for x in plan.xs(&[RBig::ONE, rat(1, 2), rat(3, 2)]) {
        for q in 1..=plan.q_max(4) {
            let want = hurwitz_ref(&RBig::from(q + 1), &x, &refctx())?;
            let eh = euler_hurwitz(q, &x, n, &fast())?;
            let sr = stirling_route(q, &x, n, &fast())?;
            out.push(check("euler_hurwitz_q", params! {"q" => q, "x" => &x, "route" => "bell"}, &eh, &want));
            out.push(check("euler_hurwitz_q", params! {"q" => q, "x" => &x, "route" => "stirling"}, &sr, &want));
        }
    }
    Ok(out)
}

pub fn mixed_45_7(plan: &Plan) -> Result<Vec<Report>> {
    let n = plan.terms(100_000);
    let mut out = Vec::new();
    for x in plan.xs(&[RBig::ONE, rat(1, 2), rat(3, 2)]) {
        for kind in [MixedKind::Z4, MixedKind::Z5, MixedKind::Z6] {
            let r = mixed_q(kind, &x, n, &fast())?;
            let want = hurwitz_ref(&RBig::from(kind.q() + 1), &x, &refctx())?;
            out.push(check("mixed_45_7", params! {"q" => kind.q(), "x" => &x}, &r, &want));
        }
    }
    Ok(out)
}

fn euler_sum(plan: &Plan, id: &str, kind: EulerSumKind) -> Result<Vec<Report>> {
    let (c, m) = kind.zeta_target().expect("nonlinear kinds have ζ targets");
    let want = HighPrecFloat::from_f64(c as f64) * const_zeta(m, &refctx())?;
    Ok(vec![check(id, params! {"kind" => kind}, &euler_sum_partial(kind, plan.terms(100_000), &fast())?, &want)])
}

pub fn e41(plan: &Plan) -> Result<Vec<Report>> {
    euler_sum(plan, "e41", EulerSumKind::E41)
}

pub fn e43(plan: &Plan) -> Result<Vec<Report>> {
    euler_sum(plan, "e43", EulerSumKind::E43)
}

pub fn e43_2(plan: &Plan) -> Result<Vec<Report>> {
    euler_sum(plan, "e43_2", EulerSumKind::E43_2)
}

pub fn e45_8(plan: &Plan) -> Result<Vec<Report>> {
    euler_sum(plan, "e45_8", EulerSumKind::E45_8)
}

pub fn e45_10(plan: &Plan) -> Result<Vec<Report>> {
    euler_sum(plan, "e45_10", EulerSumKind::E45_10)
}

pub fn catalan_equiv(plan: &Plan) -> Result<Vec<Report>> {
    let n = plan.terms(100_000);
    let g = const_catalan(&refctx());
    let a = catalan_series(CatalanKind::Ramanujan, n, &fast())?;
    let b = catalan_series(CatalanKind::Central, n, &fast())?;
    let combined = a.tail_estimate.to_f64() + b.tail_estimate.to_f64();
    Ok(vec![
        check("catalan_equiv", params! {"series" => "ramanujan"}, &a, &g),
        check("catalan_equiv", params! {"series" => "central"}, &b, &g),
        numeric_report("catalan_equiv", params! {"series" => "ramanujan-vs-central"}, &a.value, &b.value, combined, n),
    ])
}

fn central(plan: &Plan, id: &str, kind: CatalanKind, full: u64) -> Result<Vec<Report>> {
    let r = catalan_series(kind, plan.terms(full), &fast())?;
    Ok(vec![check(id, params! {"series" => kind.name()}, &r, &catalan_target(kind, &refctx()))])
}

pub fn zeta2_37(plan: &Plan) -> Result<Vec<Report>> {
    central(plan, "zeta2_37", CatalanKind::Zeta2, 1_000_000)
}

pub fn zeta3_half_45_6(plan: &Plan) -> Result<Vec<Report>> {
    central(plan, "zeta3_half_45_6", CatalanKind::Zeta3Half, 10_000)
}

fn digamma(plan: &Plan, id: &str, power: u32, full: u64) -> Result<Vec<Report>> {
    let r = digamma_half_sum(power, plan.terms(full), &fast())?;
    Ok(vec![check(id, params! {"power" => power}, &r, &digamma_target(power, &refctx())?)])
}

pub fn digamma_48_1(plan: &Plan) -> Result<Vec<Report>> {
    digamma(plan, "digamma_48_1", 2, 100_000)
}

pub fn digamma_48_3(plan: &Plan) -> Result<Vec<Report>> {
    digamma(plan, "digamma_48_3", 4, 1000)
}
