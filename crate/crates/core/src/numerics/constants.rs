//! Bernoulli numbers and reference constants (ζ(m), γ, π, G, log 2).

use std::sync::Mutex;

use dashu::integer::{IBig, UBig};
use dashu::rational::RBig;

use super::{factorial, CompensatedSum, HighPrecFloat, Mode, PrecisionContext, Real};
use crate::error::{domain, Result};

/// Fifty-two significant digit literals used to cross-check the computed constants.
pub const LITERALS: &[(&str, &str)] = &[
    ("gamma", "0.5772156649015328606065120900824024310421593359399236"),
    ("pi", "3.141592653589793238462643383279502884197169399375106"),
    ("catalan", "0.9159655941772190150546035149323841107741493742816721"),
    ("ln2", "0.6931471805599453094172321214581765680755001343602553"),
    ("zeta2", "1.644934066848226436472415166646025189218949901206798"),
    ("zeta3", "1.202056903159594285399738161511449990764986292340499"),
    ("zeta4", "1.082323233711138191516003696541167902774750951918727"),
    ("zeta5", "1.036927755143369926331365486457034168057080919501913"),
    ("zeta6", "1.017343061984449139714517929790920527901817490032854"),
    ("zeta7", "1.008349277381922826839797549849796759599863560565239"),
    ("zeta8", "1.004077356197944339378685238508652465258960790649850"),
    ("zeta9", "1.002008392826082214417852769232412060485605851394889"),
    ("zeta10", "1.000994575127818085337145958900319017006019531564478"),
];

pub fn reference_literal(name: &str) -> Option<&'static str> {
    LITERALS.iter().find(|(n, _)| *n == name).map(|(_, v)| *v)
}

static BERNOULLI: Mutex<Vec<RBig>> = Mutex::new(Vec::new());

fn tangent_bernoulli(count: usize) -> Vec<RBig> {
    // Tangent numbers T_1..T_count by the in-place triangle recurrence.
    let mut t = vec![UBig::ZERO; count + 1];
    t[1] = UBig::ONE;
    for k in 2..=count {
        t[k] = UBig::from(k - 1) * &t[k - 1];
    }
    for k in 2..=count {
        for j in k..=count {
            t[j] = UBig::from(j - k) * &t[j - 1] + UBig::from(j - k + 2) * &t[j];
        }
    }
    (1..=count)
        .map(|n| {
            let four_n = UBig::ONE << (2 * n);
            let den = four_n.clone() * (four_n - UBig::ONE);
            let num = IBig::from(UBig::from(2 * n) * &t[n]);
            let b = RBig::from_parts(num, den);
            if n % 2 == 1 {
                b
            } else {
                -b
            }
        })
        .collect()
}

/// `B_2, B_4, …, B_{2n}` as exact rationals.
pub fn bernoulli(n: usize) -> Vec<RBig> {
    let mut cache = BERNOULLI.lock().unwrap_or_else(|e| e.into_inner());
    if cache.len() < n {
        *cache = tangent_bernoulli(n.max(2 * cache.len()).max(16));
    }
    cache[..n].to_vec()
}

/// `B_{2k}/(2k)!` for k = 1..=n.
fn em_coefficients(n: usize) -> Vec<RBig> {
    bernoulli(n)
        .into_iter()
        .enumerate()
        .map(|(i, b)| b / RBig::from(factorial(2 * (i as u64 + 1))))
        .collect()
}

fn direct_terms(ctx: &PrecisionContext) -> i64 {
    ctx.effective_digits() as i64 + 10
}

/// Hurwitz zeta `ζ(s, x)` for real `s ≠ 1`, `x > 0`, by Euler–Maclaurin
/// with a direct head of about `digits + 10` terms.
///
/// `s_int` selects exact integer powers when `s` is an integer.
pub fn hurwitz_em<R: Real>(s: &R, s_int: Option<i64>, x: &R, ctx: &PrecisionContext) -> Result<R> {
    if *s == R::one() {
        return domain("ζ(s, x) has a pole at s = 1");
    }
    if *x <= R::zero() {
        return domain("ζ(s, x) requires x > 0");
    }
    let neg_pow = |y: &R| -> R {
        match s_int {
            Some(k) => y.powi(-k),
            None => (-(s.clone()) * y.ln()).exp(),
        }
    };
    let m = direct_terms(ctx);
    let mut acc = CompensatedSum::<R>::new();
    for n in 0..m {
        acc.add(neg_pow(&(R::int(n, ctx) + x.clone())));
    }
    let y = R::int(m, ctx) + x.clone();
    let ys = neg_pow(&y);
    acc.add(ys.clone() * y.clone() / (s.clone() - R::one()));
    acc.add(ys.clone() / R::int(2, ctx));

    let kmax = ctx.effective_digits() as usize + 20;
    let coeffs = em_coefficients(kmax);
    let inv_y2 = R::one() / (y.clone() * y.clone());
    let mut ypow = ys / y;
    let mut poch = s.clone();
    let mut prev: Option<R> = None;
    let tol = R::epsilon(ctx) * acc.value().abs();
    for (i, c) in coeffs.iter().enumerate() {
        let k = i as i64 + 1;
        if k > 1 {
            poch = poch * (s.clone() + R::int(2 * k - 3, ctx)) * (s.clone() + R::int(2 * k - 2, ctx));
            ypow = ypow * inv_y2.clone();
        }
        let term = R::from_rational(c, ctx) * poch.clone() * ypow.clone();
        let size = term.abs();
        if let Some(p) = &prev {
            if size > *p {
                break;
            }
        }
        acc.add(term);
        if size < tol {
            break;
        }
        prev = Some(size);
    }
    Ok(acc.value())
}

fn zeta_int<R: Real>(m: u32, ctx: &PrecisionContext) -> Result<R> {
    if m < 2 {
        return domain(format!("ζ(m) requires m ≥ 2, got {m}"));
    }
    hurwitz_em(&R::int(m as i64, ctx), Some(m as i64), &R::one(), ctx)
}

fn gamma_r<R: Real>(ctx: &PrecisionContext) -> R {
    let m = direct_terms(ctx);
    let mut acc = CompensatedSum::<R>::new();
    for n in 1..=m {
        acc.add(R::ratio(1, n, ctx));
    }
    let big_m = R::int(m, ctx);
    acc.add(-big_m.ln());
    acc.add(-R::ratio(1, 2 * m, ctx));
    let inv_m2 = R::one() / (big_m.clone() * big_m);
    let mut p = inv_m2.clone();
    let tol = R::epsilon(ctx);
    for (i, b) in bernoulli(ctx.effective_digits() as usize + 20).iter().enumerate() {
        let two_k = 2 * (i as i64 + 1);
        let term = R::from_rational(&(b.clone() / RBig::from(two_k)), ctx) * p.clone();
        let size = term.abs();
        acc.add(term);
        if size < tol {
            break;
        }
        p = p * inv_m2.clone();
    }
    acc.value()
}

fn atan_inv<R: Real>(q: i64, ctx: &PrecisionContext) -> R {
    let inv_q = R::ratio(1, q, ctx);
    let inv_q2 = inv_q.clone() * inv_q.clone();
    let mut pow = inv_q;
    let mut acc = CompensatedSum::<R>::new();
    let tol = R::epsilon(ctx);
    let mut k: i64 = 0;
    loop {
        let term = pow.clone() / R::int(2 * k + 1, ctx);
        let size = term.abs();
        acc.add(if k % 2 == 0 { term } else { -term });
        if size < tol {
            break;
        }
        pow = pow * inv_q2.clone();
        k += 1;
    }
    acc.value()
}

fn pi_r<R: Real>(ctx: &PrecisionContext) -> R {
    R::int(16, ctx) * atan_inv::<R>(5, ctx) - R::int(4, ctx) * atan_inv::<R>(239, ctx)
}

fn catalan_r<R: Real>(ctx: &PrecisionContext) -> R {
    // (π/8)·log(2 + √3) + (3/8)·Σ (n!)²/((2n)!(2n+1)²)
    let three = R::int(3, ctx);
    let head = pi_r::<R>(ctx) / R::int(8, ctx) * (R::int(2, ctx) + three.sqrt()).ln();
    let mut acc = CompensatedSum::<R>::new();
    let tol = R::epsilon(ctx);
    let mut r = R::one();
    let mut n: i64 = 0;
    loop {
        if n > 0 {
            r = r * R::int(n, ctx) / R::int(2 * (2 * n - 1), ctx);
        }
        let term = r.clone() / R::int((2 * n + 1) * (2 * n + 1), ctx);
        let size = term.abs();
        acc.add(term);
        if size < tol {
            break;
        }
        n += 1;
    }
    head + three / R::int(8, ctx) * acc.value()
}

fn lift<R: Real>(v: R) -> HighPrecFloat {
    v.to_high()
}

pub fn const_zeta(m: u32, ctx: &PrecisionContext) -> Result<HighPrecFloat> {
    crate::by_mode!(ctx, zeta_int(m, ctx))
}

pub fn const_gamma(ctx: &PrecisionContext) -> HighPrecFloat {
    match ctx.mode() {
        Mode::Fast => lift(gamma_r::<f64>(ctx)),
        Mode::High => gamma_r::<HighPrecFloat>(ctx),
    }
}

pub fn const_pi(ctx: &PrecisionContext) -> HighPrecFloat {
    match ctx.mode() {
        Mode::Fast => lift(pi_r::<f64>(ctx)),
        Mode::High => pi_r::<HighPrecFloat>(ctx),
    }
}

pub fn const_catalan(ctx: &PrecisionContext) -> HighPrecFloat {
    match ctx.mode() {
        Mode::Fast => lift(catalan_r::<f64>(ctx)),
        Mode::High => catalan_r::<HighPrecFloat>(ctx),
    }
}

pub fn const_ln2(ctx: &PrecisionContext) -> HighPrecFloat {
    match ctx.mode() {
        Mode::Fast => lift(std::f64::consts::LN_2),
        Mode::High => HighPrecFloat::int(2, ctx).ln(),
    }
}

/// The constants needed by the series evaluators, in one backplane.
#[derive(Debug, Clone)]
pub struct Constants<R> {
    pub gamma: R,
    pub pi: R,
    pub catalan: R,
    pub ln2: R,
    zeta: Vec<R>,
}

impl<R: Real> Constants<R> {
    /// Computes γ, π, G, log 2 and ζ(2..=zeta_max).
    pub fn new(ctx: &PrecisionContext, zeta_max: u32) -> Self {
        let zeta = (2..=zeta_max.max(2))
            .map(|m| zeta_int::<R>(m, ctx).expect("m ≥ 2"))
            .collect();
        Constants {
            gamma: gamma_r(ctx),
            pi: pi_r(ctx),
            catalan: catalan_r(ctx),
            ln2: R::int(2, ctx).ln(),
            zeta,
        }
    }

    /// ζ(m) for 2 ≤ m ≤ zeta_max.
    pub fn zeta(&self, m: u32) -> R {
        self.zeta[(m - 2) as usize].clone()
    }
}
