use std::ops::Index;

use dashu::integer::IBig;
use dashu::rational::RBig;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::numerics::{rat, Scalar};

/// Truncated power series `c_0 + c_1 x + … + c_N x^N`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerSeriesCoeffs<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> PowerSeriesCoeffs<S> {
    pub fn new(coeffs: Vec<S>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series holds at least c_0");
        PowerSeriesCoeffs { coeffs }
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn eval(&self, x: &S) -> S {
        self.coeffs.iter().rev().fold(S::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul_truncated(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|m| (0..=m).fold(S::zero(), |acc, i| acc + self.coeffs[i].clone() * other.coeffs[m - i].clone()))
            .collect();
        PowerSeriesCoeffs { coeffs }
    }
}

impl<S> Index<usize> for PowerSeriesCoeffs<S> {
    type Output = S;
    fn index(&self, i: usize) -> &S {
        &self.coeffs[i]
    }
}

/// Expansion of `x(x−1)…(x−n+1)`; the coefficient of `x^k` is `s(n, k)`.
pub fn falling_factorial_coeffs(n: u64) -> PowerSeriesCoeffs<RBig> {
    let mut c = vec![IBig::ONE];
    for m in 0..n {
        let mut next = vec![IBig::ZERO; c.len() + 1];
        for (k, v) in c.iter().enumerate() {
            next[k + 1] += v;
            next[k] -= IBig::from(m) * v;
        }
        c = next;
    }
    PowerSeriesCoeffs { coeffs: c.into_iter().map(RBig::from).collect() }
}

/// Coefficients of `log^k(1+x)` through `x^N` by repeated Cauchy products.
pub fn log_power_coeffs(k: u32, n: usize) -> Result<PowerSeriesCoeffs<RBig>> {
    if k == 0 {
        return domain("log_power_coeffs requires k ≥ 1");
    }
    if n < k as usize {
        return domain(format!("truncation order {n} below power {k}"));
    }
    let log1p: Vec<RBig> = (0..=n)
        .map(|m| if m == 0 { RBig::ZERO } else { rat(if m % 2 == 1 { 1 } else { -1 }, m as i64) })
        .collect();
    let base = PowerSeriesCoeffs { coeffs: log1p };
    let mut acc = base.clone();
    for _ in 1..k {
        acc = acc.mul_truncated(&base);
    }
    Ok(acc)
}

/// `a_0..a_N` of `f = exp(b_0 + Σ b_n x^n / n)` from `n a_n = Σ_{k=1}^{n} b_k a_{n−k}`.
///
/// `b[i]` holds `b_{i+1}`; at least `N` entries are read.
pub fn log_to_exp_series<S: Scalar>(b0: &S, b: &[S], n: usize) -> Result<PowerSeriesCoeffs<S>> {
    if b.len() < n {
        return domain(format!("need {n} b-coefficients, got {}", b.len()));
    }
    let a0 = match b0.try_exp() {
        Some(v) => v,
        None => return domain("exp(b_0) is not representable in this ring"),
    };
    let mut a = Vec::with_capacity(n + 1);
    a.push(a0);
    for m in 1..=n {
        let mut acc = S::zero();
        for k in 1..=m {
            acc = acc + b[k - 1].clone() * a[m - k].clone();
        }
        a.push(acc / S::from_i64(m as i64));
    }
    Ok(PowerSeriesCoeffs { coeffs: a })
}

/// Coefficients of `f^α`, scaling every `b_k` (and `b_0`) by `α`.
pub fn series_pow_alpha<S: Scalar>(b0: &S, b: &[S], alpha: &S, n: usize) -> Result<PowerSeriesCoeffs<S>> {
    let scaled: Vec<S> = b.iter().take(n).map(|v| v.clone() * alpha.clone()).collect();
    log_to_exp_series(&(b0.clone() * alpha.clone()), &scaled, n)
}

/// The banded determinant `[a_1, …, a_n]`: entries `a_{j−i+1}` on and above the
/// diagonal, `n−1−j` on the subdiagonal (0-based column `j`), zero elsewhere.
/// Evaluated by fraction-free (Bareiss) elimination.
pub fn det_bracket<S: Scalar>(a: &[S]) -> S {
    let n = a.len();
    if n == 0 {
        return S::one();
    }
    let mut m: Vec<Vec<S>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if j >= i {
                        a[j - i].clone()
                    } else if i == j + 1 {
                        S::from_i64((n - 1 - j) as i64)
                    } else {
                        S::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut negate = false;
    let mut prev = S::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return S::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone()) / prev.clone();
                m[i][j] = v;
            }
            m[i][k] = S::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}
