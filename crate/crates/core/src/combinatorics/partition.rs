use dashu::integer::UBig;
use serde::{Deserialize, Serialize};

use crate::numerics::{factorial, Scalar};

/// An integer partition of `n` stored as multiplicities `(k_1, …, k_n)`
/// with `Σ j·k_j = n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    multiplicities: Vec<u32>,
}

impl Partition {
    /// Builds a partition from multiplicities, returning `None` unless
    /// the weight equals the vector length.
    pub fn new(multiplicities: Vec<u32>) -> Option<Self> {
        let w: u64 = multiplicities.iter().enumerate().map(|(j, &k)| (j as u64 + 1) * k as u64).sum();
        (w == multiplicities.len() as u64).then_some(Partition { multiplicities })
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    pub fn n(&self) -> usize {
        self.multiplicities.len()
    }

    /// Number of parts.
    pub fn parts(&self) -> u32 {
        self.multiplicities.iter().sum()
    }

    /// `n!/(∏ k_j! · ∏ (j!)^{k_j})`, the coefficient of this monomial in `Y_n`.
    pub fn bell_coefficient(&self) -> UBig {
        let mut den = UBig::ONE;
        for (j, &k) in self.multiplicities.iter().enumerate() {
            den *= factorial(k as u64) * factorial(j as u64 + 1).pow(k as usize);
        }
        factorial(self.n() as u64) / den
    }
}

fn fill(n: usize, j: usize, rem: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if j > n {
        if rem == 0 {
            out.push(Partition { multiplicities: current.clone() });
        }
        return;
    }
    for k in (0..=rem / j).rev() {
        let left = rem - k * j;
        // Parts larger than j must cover what is left.
        if left != 0 && left <= j {
            continue;
        }
        current[j - 1] = k as u32;
        fill(n, j + 1, left, current, out);
    }
    current[j - 1] = 0;
}

/// All partitions of `n`, ordered descending lexicographically on `(k_1, …, k_n)`.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    if n == 0 {
        return vec![Partition { multiplicities: Vec::new() }];
    }
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fill(n, 1, n, &mut current, &mut out);
    out
}

/// Coefficients of the complete Bell polynomial `Y_n`, in partition order.
pub fn bell_coefficients(n: usize) -> Vec<(Partition, UBig)> {
    enumerate_partitions(n)
        .into_iter()
        .map(|p| {
            let c = p.bell_coefficient();
            (p, c)
        })
        .collect()
}

/// `Y_n(x_1, …, x_n)` as the explicit sum over partitions.
pub fn bell_partition_sum<S: Scalar>(xs: &[S]) -> S {
    let mut total = S::zero();
    for (p, c) in bell_coefficients(xs.len()) {
        let mut mono = S::from_ibig(&c.into());
        for (j, &k) in p.multiplicities().iter().enumerate() {
            if k > 0 {
                mono = mono * xs[j].pow_u(k);
            }
        }
        total = total + mono;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_of_four_in_canonical_order() {
        let got: Vec<Vec<u32>> = enumerate_partitions(4).iter().map(|p| p.multiplicities().to_vec()).collect();
        assert_eq!(got, vec![vec![4, 0, 0, 0], vec![2, 1, 0, 0], vec![1, 0, 1, 0], vec![0, 2, 0, 0], vec![0, 0, 0, 1]]);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| enumerate_partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(enumerate_partitions(22).len(), 1002);
    }

    #[test]
    fn partitions_are_distinct_and_sorted() {
        let ps = enumerate_partitions(12);
        for w in ps.windows(2) {
            assert!(w[0] > w[1]);
        }
        assert!(ps.iter().all(|p| Partition::new(p.multiplicities().to_vec()).is_some()));
    }

    #[test]
    fn small_bell_coefficients() {
        let c = |n| bell_coefficients(n).into_iter().map(|(_, c)| c).collect::<Vec<_>>();
        let u = |v: &[u32]| v.iter().map(|&x| UBig::from(x)).collect::<Vec<_>>();
        assert_eq!(c(2), u(&[1, 1]));
        assert_eq!(c(3), u(&[1, 3, 1]));
        assert_eq!(c(4), u(&[1, 6, 4, 3, 1]));
        // Σ coefficients is the Bell number.
        let b6: UBig = c(6).into_iter().sum();
        assert_eq!(b6, UBig::from(203u32));
    }

    #[test]
    fn weight_is_validated() {
        assert!(Partition::new(vec![1, 1]).is_none());
        assert!(Partition::new(vec![0, 1]).is_some());
    }
}
