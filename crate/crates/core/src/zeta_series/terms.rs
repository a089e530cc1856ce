//! Incremental term generators shared by the series evaluators.
//!
//! Everything here is generic over [`Scalar`], so the same code produces
//! exact rational terms (for termwise identity checks) and rounded ones.

use dashu::rational::RBig;

use crate::combinatorics::bell_eval;
use crate::numerics::{factorial, PrecisionContext, Scalar};

/// `Y_n(x_1, …, x_n)` with `n = xs.len()`; explicit polynomials through degree 4.
pub fn bell_low<S: Scalar>(xs: &[S]) -> S {
    let c = |v: i64| S::from_i64(v);
    match xs {
        [] => S::one(),
        [a] => a.clone(),
        [a, b] => a.clone() * a.clone() + b.clone(),
        [a, b, d] => a.clone() * a.clone() * a.clone() + c(3) * a.clone() * b.clone() + d.clone(),
        [a, b, d, e] => {
            let a2 = a.clone() * a.clone();
            a2.clone() * a2.clone()
                + c(6) * a2 * b.clone()
                + c(4) * a.clone() * d.clone()
                + c(3) * b.clone() * b.clone()
                + e.clone()
        }
        _ => bell_eval(xs),
    }
}

/// Running `H_n^{(1..=m)}` (unshifted), advanced one index at a time.
#[derive(Debug, Clone)]
pub struct HarmonicState<S> {
    n: u64,
    sums: Vec<S>,
    comps: Vec<S>,
}

impl<S: Scalar> HarmonicState<S> {
    pub fn new(m: usize) -> Self {
        HarmonicState { n: 0, sums: vec![S::zero(); m], comps: vec![S::zero(); m] }
    }

    /// Current index `n`.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Moves from `H_n` to `H_{n+1}`.
    pub fn advance(&mut self) {
        self.n += 1;
        let inv = S::one() / S::from_i64(self.n as i64);
        let mut p = S::one();
        for (s, c) in self.sums.iter_mut().zip(self.comps.iter_mut()) {
            p = p * inv.clone();
            S::add_compensated(s, c, p.clone());
        }
    }

    /// `H_n^{(j)}` for `1 ≤ j ≤ m`.
    pub fn get(&self, j: usize) -> S {
        self.sums[j - 1].clone() + self.comps[j - 1].clone()
    }
}

/// Arguments fed to the Bell polynomial at each index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BellArgs {
    /// `(j−1)!·H_m^{(j)}(x)`: the shifted harmonic numbers of Coppo's formula.
    Shifted,
    /// `(−1)^{j+1}(j−1)!·H_{m−1}^{(j)}`: unshifted, one index behind, alternating.
    StirlingUnshifted,
}

/// Produces, for `m = 1, 2, …`, the product
/// `R_m(x)·Y_{q−1}(args_m)/(q−1)!` with `R_m(x) = Γ(m)Γ(x)/Γ(m+x)`.
///
/// With `BellArgs::Shifted` this is `Σ_k C(m−1,k)(−1)^k/(k+x)^q` (Coppo).
#[derive(Debug, Clone)]
pub struct CoppoTerms<S> {
    q: u32,
    args: BellArgs,
    x: S,
    m: u64,
    r: S,
    sums: Vec<S>,
    comps: Vec<S>,
    weights: Vec<S>,
    inv_fact: S,
}

impl<S: Scalar> CoppoTerms<S> {
    pub fn new(q: u32, x: &RBig, args: BellArgs, ctx: &PrecisionContext) -> Self {
        assert!(q >= 1, "q ≥ 1");
        let k = q as usize - 1;
        let weights = (0..k)
            .map(|i| {
                let w = S::from_ibig(&factorial(i as u64).into());
                if args == BellArgs::StirlingUnshifted && i % 2 == 1 {
                    -w
                } else {
                    w
                }
            })
            .collect();
        CoppoTerms {
            q,
            args,
            x: S::from_rational(x, ctx),
            m: 0,
            r: S::from_rational(&(RBig::ONE / x), ctx),
            sums: vec![S::zero(); k],
            comps: vec![S::zero(); k],
            weights,
            inv_fact: S::from_rational(&(RBig::ONE / RBig::from(factorial(k as u64))), ctx),
        }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Index of the most recent value.
    pub fn index(&self) -> u64 {
        self.m
    }

    /// The gamma ratio `R_m(x)` at the current index.
    pub fn ratio(&self) -> &S {
        &self.r
    }

    /// The harmonic sum of order `j` currently held (shifted `H_m(x)` or unshifted `H_{m−1}`).
    pub fn harmonic(&self, j: usize) -> S {
        self.sums[j - 1].clone() + self.comps[j - 1].clone()
    }

    fn accumulate(&mut self, inv: S) {
        let mut p = S::one();
        for (s, c) in self.sums.iter_mut().zip(self.comps.iter_mut()) {
            p = p * inv.clone();
            S::add_compensated(s, c, p.clone());
        }
    }

    /// Advances to the next index and returns its value.
    pub fn next_value(&mut self) -> S {
        self.m += 1;
        let m = self.m;
        if m > 1 {
            let prev = S::from_i64(m as i64 - 1);
            self.r = self.r.clone() * prev.clone() / (prev + self.x.clone());
        }
        match self.args {
            BellArgs::Shifted => {
                let inv = S::one() / (S::from_i64(m as i64 - 1) + self.x.clone());
                self.accumulate(inv);
            }
            BellArgs::StirlingUnshifted => {
                if m > 1 {
                    self.accumulate(S::one() / S::from_i64(m as i64 - 1));
                }
            }
        }
        let xs: Vec<S> = (1..self.q as usize)
            .map(|j| self.weights[j - 1].clone() * self.harmonic(j))
            .collect();
        self.r.clone() * bell_low(&xs) * self.inv_fact.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::bell_sequence;
    use crate::harmonic::{coppo_lhs, h};
    use crate::numerics::rat;

    #[test]
    fn low_order_bell_matches_recurrence() {
        let xs: Vec<RBig> = (1..=6).map(|k| rat(2 * k - 5, k + 1)).collect();
        for n in 0..=6 {
            let direct = bell_low(&xs[..n]);
            assert_eq!(direct, bell_sequence(&xs[..n])[n], "degree {n}");
        }
    }

    #[test]
    fn coppo_values_are_exact() {
        let ctx = PrecisionContext::fast();
        for x in [RBig::ONE, rat(1, 3), rat(7, 4)] {
            for q in 1..=6u32 {
                let mut g = CoppoTerms::<RBig>::new(q, &x, BellArgs::Shifted, &ctx);
                for m in 1..=25u64 {
                    assert_eq!(g.next_value(), coppo_lhs(m - 1, q, &x).unwrap(), "q={q} m={m} x={x}");
                }
            }
        }
    }

    #[test]
    fn stirling_arguments_lag_one_index() {
        let ctx = PrecisionContext::fast();
        let mut g = CoppoTerms::<RBig>::new(3, &RBig::ONE, BellArgs::StirlingUnshifted, &ctx);
        for m in 1..=20u64 {
            let v = g.next_value();
            let (a, b) = (h(m - 1, 1), -h(m - 1, 2));
            let want = rat(1, m as i64) * (a.clone() * a + b) / RBig::from(2);
            assert_eq!(v, want);
        }
    }

    #[test]
    fn harmonic_state_f64() {
        let mut s = HarmonicState::<f64>::new(2);
        for _ in 0..4 {
            s.advance();
        }
        assert_eq!(s.n(), 4);
        assert!((s.get(1) - 25.0 / 12.0).abs() < 1e-15);
        assert!((s.get(2) - 205.0 / 144.0).abs() < 1e-15);
    }
}
