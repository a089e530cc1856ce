use dashu::integer::IBig;
use dashu::rational::RBig;

use crate::error::{domain, Result};
use crate::numerics::{binomial_row, HighPrecFloat, Scalar};

/// `Y_0, Y_1, …, Y_n` for `xs = (x_1, …, x_n)` through the recurrence
/// `Y_{m+1} = Σ_{j=0}^{m} C(m,j) x_{j+1} Y_{m−j}`.
pub fn bell_sequence<S: Scalar>(xs: &[S]) -> Vec<S> {
    let n = xs.len();
    let mut ys = Vec::with_capacity(n + 1);
    ys.push(S::one());
    for m in 0..n {
        let row = binomial_row(m as u64);
        let mut acc = S::zero();
        for j in 0..=m {
            let term = xs[j].clone() * ys[m - j].clone();
            acc = acc + S::from_ibig(&IBig::from(row[j].clone())) * term;
        }
        ys.push(acc);
    }
    ys
}

/// Complete Bell polynomial `Y_n(x_1, …, x_n)`; `Y_0 = 1`.
pub fn bell_eval<S: Scalar>(xs: &[S]) -> S {
    bell_sequence(xs).pop().expect("sequence holds Y_0")
}

/// A ring element of either exact or floating kind.
#[derive(Debug, Clone, PartialEq)]
pub enum RingElem {
    Exact(RBig),
    Float(HighPrecFloat),
}

/// `bell_eval` over dynamically typed inputs; all elements must share one kind.
pub fn bell_eval_dyn(xs: &[RingElem]) -> Result<RingElem> {
    if xs.iter().all(|x| matches!(x, RingElem::Exact(_))) {
        let v: Vec<RBig> = xs
            .iter()
            .map(|x| match x {
                RingElem::Exact(q) => q.clone(),
                RingElem::Float(_) => unreachable!(),
            })
            .collect();
        Ok(RingElem::Exact(bell_eval(&v)))
    } else if xs.iter().all(|x| matches!(x, RingElem::Float(_))) {
        let v: Vec<HighPrecFloat> = xs
            .iter()
            .map(|x| match x {
                RingElem::Float(f) => f.clone(),
                RingElem::Exact(_) => unreachable!(),
            })
            .collect();
        Ok(RingElem::Float(bell_eval(&v)))
    } else {
        domain("Bell polynomial arguments mix exact and floating elements")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::bell_partition_sum;
    use crate::numerics::rat;

    #[test]
    fn base_cases() {
        assert_eq!(bell_eval::<RBig>(&[]), RBig::ONE);
        assert_eq!(bell_eval(&[rat(3, 7)]), rat(3, 7));
        let ones = vec![RBig::ONE; 4];
        assert_eq!(bell_eval(&ones), RBig::from(15));
    }

    #[test]
    fn recurrence_matches_partition_sum() {
        let xs: Vec<RBig> = (1..=9).map(|j| rat(j * j - 7, 2 * j + 1)).collect();
        for n in 0..=xs.len() {
            assert_eq!(bell_eval(&xs[..n]), bell_partition_sum(&xs[..n]));
        }
    }

    #[test]
    fn dynamic_kinds() {
        assert_eq!(bell_eval_dyn(&[]).unwrap(), RingElem::Exact(RBig::ONE));
        let mixed = [RingElem::Exact(RBig::ONE), RingElem::Float(HighPrecFloat::one())];
        assert!(bell_eval_dyn(&mixed).is_err());
        let floats = [RingElem::Float(HighPrecFloat::from_f64(2.0)), RingElem::Float(HighPrecFloat::from_f64(1.0))];
        assert_eq!(bell_eval_dyn(&floats).unwrap(), RingElem::Float(HighPrecFloat::from_f64(5.0)));
    }
}
