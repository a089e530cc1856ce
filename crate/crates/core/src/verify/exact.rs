use dashu::rational::RBig;

use super::{exact_report, params, skip_report, Plan, Report};
use crate::combinatorics::{enumerate_partitions, log_to_exp_series};
use crate::error::{Error, Result};
use crate::gamma_tools::{
    e44_10_sides, e44_7_sides, e44_8_sides, e44_9_sides, gamma_ratio, gamma_ratio_derivative, pochhammer_ratio_coeffs,
    RatioForm,
};
use crate::harmonic::{alt_binom_sum, alt_binom_sums, coppo_sweep_with, h, larcombe_check};
use crate::numerics::{factorial, rat};
use crate::zeta_series::{euler_hurwitz_terms, hasse_terms_exact};
use crate::numerics::PrecisionContext;

/// `H_n^{(m)}` for `n = 0..=n_max`, `m = 1..=m_max`, indexed `[m−1][n]`.
fn harmonic_rows(n_max: u64, m_max: u32) -> Vec<Vec<RBig>> {
    (1..=m_max)
        .map(|m| {
            let mut row = Vec::with_capacity(n_max as usize + 1);
            let mut acc = RBig::ZERO;
            row.push(acc.clone());
            for k in 1..=n_max {
                acc += RBig::ONE / RBig::from(k).pow(m as usize);
                row.push(acc.clone());
            }
            row
        })
        .collect()
}

fn r(v: i64) -> RBig {
    RBig::from(v)
}

/// Nonpositive integer shifts are poles from `k = −x` on; returns that `k`.
fn first_pole(x: &RBig) -> Option<u64> {
    (x.is_int() && *x <= RBig::ZERO).then(|| u64::try_from(-x.numerator().clone()).expect("fits"))
}

fn fs_6(plan: &Plan, id: &str, m: u32) -> Result<Vec<Report>> {
    let n_max = plan.n_max(200);
    let hs = harmonic_rows(n_max, 3);
    Ok((1..=n_max)
        .map(|n| {
            let i = n as usize;
            let (h1, h2, h3) = (&hs[0][i], &hs[1][i], &hs[2][i]);
            let rhs = match m {
                1 => h1.clone(),
                2 => rat(1, 2) * h1 * h1 + rat(1, 2) * h2,
                _ => rat(1, 6) * h1 * h1 * h1 + rat(1, 2) * h1 * h2 + rat(1, 3) * h3,
            };
            exact_report(id, params! {"n" => n}, &-alt_binom_sum(n, m), &rhs)
        })
        .collect())
}

pub fn fs_6_1(plan: &Plan) -> Result<Vec<Report>> {
    fs_6(plan, "fs_6_1", 1)
}

pub fn fs_6_2(plan: &Plan) -> Result<Vec<Report>> {
    fs_6(plan, "fs_6_2", 2)
}

pub fn fs_6_3(plan: &Plan) -> Result<Vec<Report>> {
    fs_6(plan, "fs_6_3", 3)
}

pub fn fs_4_general(plan: &Plan) -> Result<Vec<Report>> {
    let n_max = plan.n_max(100);
    let m_max = plan.q_max(8);
    let parts: Vec<_> = (1..=m_max as usize).map(enumerate_partitions).collect();
    let hs = harmonic_rows(n_max, m_max);
    let mut out = Vec::new();
    for n in 1..=n_max {
        let sums = alt_binom_sums(n, m_max);
        for m in 1..=m_max {
            let rhs = parts[m as usize - 1].iter().fold(RBig::ZERO, |acc, p| {
                let term = p.multiplicities().iter().enumerate().fold(RBig::ONE, |t, (j, &k)| {
                    let base = hs[j][n as usize].clone() / r(j as i64 + 1);
                    t * base.pow(k as usize) / RBig::from(factorial(k as u64))
                });
                acc + term
            });
            out.push(exact_report("fs_4_general", params! {"n" => n, "m" => m}, &-sums[m as usize - 1].clone(), &rhs));
        }
    }
    Ok(out)
}

pub fn adamchik_7_1(plan: &Plan) -> Result<Vec<Report>> {
    let n_max = plan.n_max(200);
    let hs = harmonic_rows(n_max, 2);
    let mut lhs = RBig::ZERO;
    Ok((1..=n_max)
        .map(|n| {
            let i = n as usize;
            lhs += hs[0][i].clone() / r(n as i64);
            let rhs = rat(1, 2) * &hs[0][i] * &hs[0][i] + rat(1, 2) * &hs[1][i];
            exact_report("adamchik_7_1", params! {"n" => n}, &lhs, &rhs)
        })
        .collect())
}

pub fn adamchik_7_2(plan: &Plan) -> Result<Vec<Report>> {
    let n_max = plan.n_max(200);
    let hs = harmonic_rows(n_max, 3);
    let mut lhs = RBig::ZERO;
    Ok((1..=n_max)
        .map(|n| {
            let i = n as usize;
            let k = r(n as i64);
            lhs += hs[1][i].clone() / &k + hs[0][i].clone() / (k.clone() * &k);
            let rhs = hs[2][i].clone() + &hs[0][i] * &hs[1][i];
            exact_report("adamchik_7_2", params! {"n" => n}, &lhs, &rhs)
        })
        .collect())
}

pub fn adamchik_7_3(plan: &Plan) -> Result<Vec<Report>> {
    let n_max = plan.n_max(200);
    let hs = harmonic_rows(n_max, 3);
    let mut lhs = RBig::ZERO;
    let mut inner = RBig::ZERO;
    let mut nested = RBig::ZERO;
    let mut out = Vec::with_capacity(3 * n_max as usize);
    for n in 1..=n_max {
        let i = n as usize;
        let k = r(n as i64);
        let (h1, h2, h3) = (&hs[0][i], &hs[1][i], &hs[2][i]);
        lhs += h1.clone() * h1 / &k + h2.clone() / &k;
        inner += h1.clone() / &k;
        nested += inner.clone() / &k;
        let closed = rat(1, 3) * h1 * h1 * h1 + h1 * h2 + rat(2, 3) * h3;
        out.push(exact_report("adamchik_7_3", params! {"n" => n, "form" => "closed"}, &lhs, &closed));
        out.push(exact_report("adamchik_7_3", params! {"n" => n, "form" => "-2S_n(3)"}, &lhs, &(r(-2) * alt_binom_sum(n, 3))));
        out.push(exact_report("adamchik_7_3", params! {"n" => n, "form" => "nested"}, &lhs, &(r(2) * &nested)));
    }
    Ok(out)
}

fn spiess(plan: &Plan, id: &str, variant: u32) -> Result<Vec<Report>> {
    let n_max = plan.n_max(200);
    let hs = harmonic_rows(n_max, 3);
    let h1 = &hs[0];
    Ok((1..=n_max)
        .map(|n| {
            let i = n as usize;
            let lhs = (1..=n).fold(RBig::ZERO, |acc, k| {
                let w = RBig::ONE / r((k * (n - k + 1)) as i64);
                let t = match variant {
                    1 => w,
                    2 if k >= 2 => r(2) * &h1[k as usize - 1] * w,
                    3 if k >= 2 => r(4) * &h1[k as usize - 1] * &h1[(n - k) as usize] * w,
                    _ => RBig::ZERO,
                };
                acc + t
            });
            let np1 = r(n as i64 + 1);
            let (a, b, c) = (&h1[i], &hs[1][i], &hs[2][i]);
            let rhs = match variant {
                1 => r(2) * a / np1,
                2 => r(3) * (a * a - b) / np1,
                _ => r(4) * (a * a * a - r(3) * a * b + r(2) * c) / np1,
            };
            exact_report(id, params! {"n" => n}, &lhs, &rhs)
        })
        .collect())
}

pub fn spiess_15a(plan: &Plan) -> Result<Vec<Report>> {
    spiess(plan, "spiess_15a", 1)
}

pub fn spiess_15b(plan: &Plan) -> Result<Vec<Report>> {
    spiess(plan, "spiess_15b", 2)
}

pub fn spiess_15c(plan: &Plan) -> Result<Vec<Report>> {
    spiess(plan, "spiess_15c", 3)
}

fn larcombe(plan: &Plan, id: &str, variant: u32) -> Result<Vec<Report>> {
    let n_max = plan.n_max(50);
    let m_max = plan.q_max(10) as u64;
    let mut out = Vec::new();
    for m in 1..=m_max {
        for n in 0..=n_max {
            let (lhs, rhs) = larcombe_check(variant, m, n)?;
            out.push(exact_report(id, params! {"m" => m, "n" => n}, &lhs, &rhs));
        }
    }
    Ok(out)
}

pub fn larcombe_16_1(plan: &Plan) -> Result<Vec<Report>> {
    larcombe(plan, "larcombe_16_1", 1)
}

pub fn larcombe_16_2(plan: &Plan) -> Result<Vec<Report>> {
    larcombe(plan, "larcombe_16_2", 2)
}

pub fn larcombe_16_3(plan: &Plan) -> Result<Vec<Report>> {
    larcombe(plan, "larcombe_16_3", 3)
}

pub fn larcombe_16_4(plan: &Plan) -> Result<Vec<Report>> {
    larcombe(plan, "larcombe_16_4", 4)
}

pub fn coppo_30(plan: &Plan) -> Result<Vec<Report>> {
    let n_max = plan.n_max(200);
    let q_max = plan.q_max(8);
    let xs = plan.xs(&[RBig::ONE, rat(1, 2), rat(1, 3), r(2), rat(7, 4), rat(-1, 2)]);
    let mut out = Vec::new();
    for x in xs {
        let clean_to = match first_pole(&x) {
            Some(0) => None,
            Some(p) => Some((p - 1).min(n_max)),
            None => Some(n_max),
        };
        if let Some(last) = clean_to {
            for c in coppo_sweep_with(last, q_max, &x, plan.bell)? {
                out.push(exact_report("coppo_30", params! {"n" => c.n, "q" => c.q, "x" => &x}, &c.lhs, &c.rhs));
            }
        }
        let skip_from = clean_to.map_or(0, |l| l + 1);
        for n in skip_from..=n_max {
            for q in 1..=q_max {
                out.push(skip_report("coppo_30", params! {"n" => n, "q" => q, "x" => &x}, format!("pole: x + k = 0 for some k ≤ {n}")));
            }
        }
    }
    Ok(out)
}

/// Runs `f`, turning domain errors (poles) into SKIP reports.
fn or_skip(id: &str, p: std::collections::BTreeMap<String, String>, f: impl FnOnce() -> Result<(RBig, RBig)>) -> Result<Report> {
    match f() {
        Ok((l, r)) => Ok(exact_report(id, p, &l, &r)),
        Err(Error::Domain(msg)) => Ok(skip_report(id, p, msg)),
        Err(e) => Err(e),
    }
}

pub fn g_derivative(plan: &Plan) -> Result<Vec<Report>> {
    let n_max = plan.n_max(50);
    let mut out = Vec::new();
    for x in plan.xs(&[rat(1, 2), rat(1, 3), rat(7, 4), r(2)]) {
        for n in 0..=n_max {
            out.push(or_skip("g_derivative", params! {"n" => n, "x" => &x}, || gamma_ratio_derivative(n, &x))?);
        }
    }
    Ok(out)
}

pub fn gamma_ratio_half(plan: &Plan) -> Result<Vec<Report>> {
    let n_max = plan.n_max(30);
    (0..=n_max)
        .map(|n| {
            let lhs = gamma_ratio(n, &rat(1, 2), RatioForm::NPlus1)?;
            let f = RBig::from(factorial(n));
            let rhs = RBig::from(dashu::integer::UBig::ONE << (2 * n as usize + 1)) * &f * f / RBig::from(factorial(2 * n + 1));
            Ok(exact_report("gamma_ratio_half", params! {"n" => n}, &lhs, &rhs))
        })
        .collect()
}

/// The printed cubic truncations, with `sign = ±1` selecting the ratio or its reciprocal.
fn e44_expected(h1: &RBig, h2: &RBig, h3: &RBig, sign: i64) -> [RBig; 3] {
    let s = r(sign);
    [
        s.clone() * h1,
        rat(1, 2) * (h1 * h1 - s.clone() * h2),
        s.clone() * rat(1, 6) * (h1 * h1 * h1 - r(3) * s * h1 * h2 + r(2) * h3),
    ]
}

fn e44_series(plan: &Plan, id: &str, sign: i64) -> Result<Vec<Report>> {
    let n_max = plan.n_max(200).max(2);
    let hs = harmonic_rows(n_max, 3);
    let mut out = Vec::new();
    for n in 2..=n_max {
        let i = n as usize - 1;
        let coeffs = if sign > 0 {
            pochhammer_ratio_coeffs(n - 1, &RBig::ONE, 3)?
        } else {
            let b: Vec<RBig> = (1..=3).map(|m| if m % 2 == 0 { hs[m - 1][i].clone() } else { -hs[m - 1][i].clone() }).collect();
            log_to_exp_series(&RBig::ZERO, &b, 3)?
        };
        let want = e44_expected(&hs[0][i], &hs[1][i], &hs[2][i], sign);
        for (j, w) in want.iter().enumerate() {
            out.push(exact_report(id, params! {"n" => n, "power" => j + 1}, &coeffs.coeffs()[j + 1], w));
        }
    }
    Ok(out)
}

pub fn e44_3(plan: &Plan) -> Result<Vec<Report>> {
    e44_series(plan, "e44_3", 1)
}

pub fn e44_4(plan: &Plan) -> Result<Vec<Report>> {
    e44_series(plan, "e44_4", -1)
}

pub fn e44_7(plan: &Plan) -> Result<Vec<Report>> {
    let n_max = plan.n_max(20);
    let mut out = Vec::new();
    for u in plan.xs(&[RBig::ONE, rat(1, 2), r(3)]) {
        for n in 1..=n_max {
            for rr in 0..=n {
                out.push(or_skip("e44_7", params! {"n" => n, "r" => rr, "u" => &u}, || e44_7_sides(n, rr, &u))?);
            }
        }
    }
    Ok(out)
}

fn e44_triangle(plan: &Plan, id: &str, f: fn(u64, u64) -> (RBig, RBig)) -> Result<Vec<Report>> {
    let n_max = plan.n_max(30);
    let mut out = Vec::new();
    for n in 1..=n_max {
        for rr in 0..=n {
            let (l, rh) = f(n, rr);
            out.push(exact_report(id, params! {"n" => n, "r" => rr}, &l, &rh));
        }
    }
    Ok(out)
}

pub fn e44_8(plan: &Plan) -> Result<Vec<Report>> {
    e44_triangle(plan, "e44_8", e44_8_sides)
}

pub fn e44_9(plan: &Plan) -> Result<Vec<Report>> {
    e44_triangle(plan, "e44_9", e44_9_sides)
}

pub fn e44_10(plan: &Plan) -> Result<Vec<Report>> {
    e44_triangle(plan, "e44_10", e44_10_sides)
}

pub fn nh_identity(plan: &Plan) -> Result<Vec<Report>> {
    let n_max = plan.n_max(200);
    let mut partial = RBig::ZERO;
    Ok((1..=n_max)
        .map(|n| {
            let hn = h(n, 1);
            let rep = exact_report("nH_identity", params! {"n" => n}, &(r(n as i64) * &hn), &(r(n as i64) + &partial));
            partial += hn;
            rep
        })
        .collect())
}

pub fn hasse_coppo(plan: &Plan) -> Result<Vec<Report>> {
    let n_max = plan.n_max(200);
    let q_max = plan.q_max(4);
    let ctx = PrecisionContext::fast();
    let mut out = Vec::new();
    for x in plan.xs(&[RBig::ONE, rat(1, 2), rat(3, 2)]) {
        if first_pole(&x).is_some() {
            out.push(skip_report("hasse_coppo", params! {"x" => &x}, "pole at a nonpositive integer shift"));
            continue;
        }
        for q in 1..=q_max {
            let hs = hasse_terms_exact(q + 1, &x, n_max + 1)?;
            let eh = euler_hurwitz_terms::<RBig>(q, &x, n_max + 1, &ctx)?;
            for (n, (a, b)) in hs.iter().zip(&eh).enumerate() {
                out.push(exact_report("hasse_coppo", params! {"n" => n, "q" => q, "x" => &x}, a, b));
            }
        }
    }
    Ok(out)
}
