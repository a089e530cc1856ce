//! Exact generalized harmonic numbers, shifted harmonic functions,
//! alternating binomial sums and both sides of Coppo's formula.

use dashu::base::{Gcd, UnsignedAbs};
use dashu::integer::{IBig, UBig};
use dashu::rational::RBig;

use crate::combinatorics::bell_sequence;
use crate::error::{domain, Result};
use crate::gamma_tools::{gamma_ratio, RatioForm};
use crate::numerics::{binomial_row, factorial};

/// `H_n^{(m)} = Σ_{j=1}^{n} j^{−m}`.
pub fn h(n: u64, m: u32) -> RBig {
    let mut acc = RBig::ZERO;
    for j in 1..=n {
        acc += RBig::from_parts(IBig::ONE, UBig::from(j).pow(m as usize));
    }
    acc
}

fn pole_check(n: u64, x: &RBig) -> Result<()> {
    // x = −k for some 0 ≤ k < n
    if x.is_int() && *x <= RBig::ZERO {
        let k = -x.clone();
        if k < RBig::from(n) {
            return domain(format!("pole at k = {k}: k + x = 0"));
        }
    }
    Ok(())
}

fn inv_pow(v: &RBig, m: u32) -> RBig {
    let (num, den) = v.clone().into_parts();
    let sign = if num < IBig::ZERO && m % 2 == 1 { -IBig::ONE } else { IBig::ONE };
    RBig::from_parts(sign * IBig::from(den).pow(m as usize), num.unsigned_abs().pow(m as usize))
}

/// `H_n^{(m)}(x) = Σ_{k=0}^{n−1} (k+x)^{−m}`.
pub fn hx(n: u64, m: u32, x: &RBig) -> Result<RBig> {
    pole_check(n, x)?;
    let mut acc = RBig::ZERO;
    for k in 0..n {
        acc += inv_pow(&(RBig::from(k) + x), m);
    }
    Ok(acc)
}

/// Immutable table of `H_n^{(m)}(x)` for `0 ≤ n ≤ n_max`, `1 ≤ m ≤ m_max`.
#[derive(Debug, Clone)]
pub struct HarmonicTable {
    n_max: u64,
    m_max: u32,
    x: RBig,
    values: Vec<Vec<RBig>>,
}

impl HarmonicTable {
    pub fn new(n_max: u64, m_max: u32, x: &RBig) -> Result<Self> {
        pole_check(n_max, x)?;
        let mut values = Vec::with_capacity(n_max as usize + 1);
        let mut row = vec![RBig::ZERO; m_max as usize];
        values.push(row.clone());
        for k in 0..n_max {
            let base = RBig::from(k) + x;
            let inv = inv_pow(&base, 1);
            let mut p = RBig::ONE;
            for entry in row.iter_mut() {
                p *= &inv;
                *entry += &p;
            }
            values.push(row.clone());
        }
        Ok(HarmonicTable { n_max, m_max, x: x.clone(), values })
    }

    pub fn n_max(&self) -> u64 {
        self.n_max
    }

    pub fn m_max(&self) -> u32 {
        self.m_max
    }

    pub fn x(&self) -> &RBig {
        &self.x
    }

    /// `H_n^{(m)}(x)`.
    pub fn get(&self, n: u64, m: u32) -> &RBig {
        assert!(m >= 1 && m <= self.m_max && n <= self.n_max, "H_{n}^({m}) outside the table");
        &self.values[n as usize][m as usize - 1]
    }
}

/// `Σ_{k=k_from}^{n} C(n,k)(−1)^k/(k+x)^q` for every `q = 1..=q_max`, over a single
/// common denominator `L = lcm |k b + a|` where `x = a/b`.
fn signed_binomial_sums(n: u64, q_max: u32, x: &RBig, k_from: u64) -> Result<Vec<RBig>> {
    let (a, b) = x.clone().into_parts();
    let b_i = IBig::from(b.clone());
    let mut dens = Vec::with_capacity((n + 1 - k_from.min(n + 1)) as usize);
    let mut lcm = UBig::ONE;
    for k in k_from..=n {
        let d = IBig::from(k) * &b_i + &a;
        if d == IBig::ZERO {
            return domain(format!("pole at k = {k}: k + x = 0"));
        }
        let negative = d < IBig::ZERO;
        let ad = d.unsigned_abs();
        let g = (&lcm).gcd(&ad);
        lcm *= &ad / g;
        dens.push((k, negative, ad));
    }
    let row = binomial_row(n);
    let mut numerators = vec![IBig::ZERO; q_max as usize];
    for (k, negative, ad) in dens {
        let ratio = &lcm / &ad;
        let mut p = UBig::ONE;
        for q in 1..=q_max {
            p *= &ratio;
            let mut term = IBig::from(&row[k as usize] * &p);
            if (k % 2 == 1) != (negative && q % 2 == 1) {
                term = -term;
            }
            numerators[q as usize - 1] += term;
        }
    }
    let mut out = Vec::with_capacity(q_max as usize);
    let mut lq = UBig::ONE;
    let mut bq = IBig::ONE;
    for num in numerators {
        lq *= &lcm;
        bq *= &b_i;
        out.push(RBig::from_parts(num * &bq, lq.clone()));
    }
    Ok(out)
}

/// `S_n(m) = Σ_{k=1}^{n} C(n,k)(−1)^k/k^m`.
pub fn alt_binom_sum(n: u64, m: u32) -> RBig {
    signed_binomial_sums(n, m, &RBig::ZERO, 1).expect("k ≥ 1 avoids the pole").pop().unwrap_or(RBig::ZERO)
}

/// `S_n(1..=m_max)` in one pass.
pub fn alt_binom_sums(n: u64, m_max: u32) -> Vec<RBig> {
    signed_binomial_sums(n, m_max, &RBig::ZERO, 1).expect("k ≥ 1 avoids the pole")
}

/// `S_n(m) = −(1/m!)·Y_m(0!H_n^{(1)}, 1!H_n^{(2)}, …, (m−1)!H_n^{(m)})`.
pub fn alt_binom_sum_bell(n: u64, m: u32) -> RBig {
    let xs: Vec<RBig> = (1..=m).map(|j| RBig::from(factorial(j as u64 - 1)) * h(n, j)).collect();
    let y = bell_sequence(&xs).pop().expect("Y_0 present");
    -y / RBig::from(factorial(m as u64))
}

/// `Σ_{k=0}^{n} C(n,k)(−1)^k/(k+x)^q`.
pub fn coppo_lhs(n: u64, q: u32, x: &RBig) -> Result<RBig> {
    if q == 0 {
        return domain("Coppo sums need q ≥ 1");
    }
    Ok(signed_binomial_sums(n, q, x, 0)?.pop().expect("q ≥ 1"))
}

/// `coppo_lhs(n, q, x)` for every `q = 1..=q_max`.
pub fn coppo_lhs_all(n: u64, q_max: u32, x: &RBig) -> Result<Vec<RBig>> {
    signed_binomial_sums(n, q_max, x, 0)
}

/// Bell route: the ratio `n!/∏_{k=0}^{n}(x+k)` times `Y_{q−1}(0!H^{(1)}_{n+1}(x), …)/(q−1)!`.
pub fn coppo_rhs(n: u64, q: u32, x: &RBig) -> Result<RBig> {
    if q == 0 {
        return domain("Coppo sums need q ≥ 1");
    }
    let g = gamma_ratio(n, x, RatioForm::NPlus1)?;
    let hs: Vec<RBig> = (1..q).map(|m| hx(n + 1, m, x)).collect::<Result<_>>()?;
    let ys = coppo_bell(&hs, bell_sequence);
    Ok(g * ys[q as usize - 1].clone())
}

/// `Y_j(0!H^{(1)}, …, (j−1)!H^{(j)})/j!` for `j = 0..=hs.len()`.
fn coppo_bell(hs: &[RBig], bell: impl Fn(&[RBig]) -> Vec<RBig>) -> Vec<RBig> {
    let args: Vec<RBig> = hs
        .iter()
        .enumerate()
        .map(|(i, v)| RBig::from(factorial(i as u64)) * v)
        .collect();
    bell(&args)
        .into_iter()
        .enumerate()
        .map(|(j, y)| y / RBig::from(factorial(j as u64)))
        .collect()
}

/// One entry of a Coppo sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct CoppoCase {
    pub n: u64,
    pub q: u32,
    pub lhs: RBig,
    pub rhs: RBig,
}

/// Both sides of Coppo's formula for `0 ≤ n ≤ n_max`, `1 ≤ q ≤ q_max`, with the
/// Bell sequence supplied by `bell` (normally [`bell_sequence`]).
///
/// The right side reuses incrementally updated `H_{n+1}^{(m)}(x)` and gamma ratio.
pub fn coppo_sweep_with(
    n_max: u64,
    q_max: u32,
    x: &RBig,
    bell: impl Fn(&[RBig]) -> Vec<RBig>,
) -> Result<Vec<CoppoCase>> {
    pole_check(n_max + 1, x)?;
    let mut out = Vec::with_capacity((n_max as usize + 1) * q_max as usize);
    let mut hs = vec![RBig::ZERO; q_max.saturating_sub(1) as usize];
    let mut g = RBig::ONE / x;
    for n in 0..=n_max {
        if n > 0 {
            g = g * RBig::from(n) / (RBig::from(n) + x);
        }
        let inv = inv_pow(&(RBig::from(n) + x), 1);
        let mut p = RBig::ONE;
        for v in hs.iter_mut() {
            p *= &inv;
            *v += &p;
        }
        let ys = coppo_bell(&hs, &bell);
        let lhs = coppo_lhs_all(n, q_max, x)?;
        for (qi, l) in lhs.into_iter().enumerate() {
            out.push(CoppoCase { n, q: qi as u32 + 1, lhs: l, rhs: g.clone() * ys[qi].clone() });
        }
    }
    Ok(out)
}

pub fn coppo_sweep(n_max: u64, q_max: u32, x: &RBig) -> Result<Vec<CoppoCase>> {
    coppo_sweep_with(n_max, q_max, x, bell_sequence)
}

/// Both sides of the selected Larcombe identity (variants 1–4).
pub fn larcombe_check(variant: u32, m: u64, n: u64) -> Result<(RBig, RBig)> {
    if !(1..=4).contains(&variant) {
        return domain(format!("Larcombe variant must be 1..=4, got {variant}"));
    }
    if m == 0 {
        return domain("Larcombe identities require m ≥ 1");
    }
    let sum = signed_binomial_sums(n, variant, &RBig::from(m), 0)?.pop().expect("variant ≥ 1");
    let factor = [1u64, 1, 2, 6][variant as usize - 1];
    let binom = RBig::from(crate::numerics::binomial(m + n, n));
    let lhs = RBig::from(factor * m) * binom * sum;
    let p = |e: u32| h(m + n, e) - h(m - 1, e);
    let rhs = match variant {
        1 => RBig::ONE,
        2 => p(1),
        3 => {
            let a = p(1);
            a.clone() * a + p(2)
        }
        _ => {
            let a = p(1);
            a.clone() * a.clone() * a.clone() + RBig::from(3) * a * p(2) + RBig::from(2) * p(3)
        }
    };
    Ok((lhs, rhs))
}
