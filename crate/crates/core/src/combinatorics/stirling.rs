use dashu::integer::IBig;
use dashu::rational::RBig;

use super::bell::bell_eval;
use crate::error::{domain, Result};
use crate::harmonic::h;
use crate::numerics::factorial;

/// `s(n, 0..=k_max)` by the recurrence `s(m+1, k) = s(m, k−1) − m·s(m, k)`,
/// carrying only the first `k_max + 1` columns.
pub fn stirling1_columns(n: u64, k_max: usize) -> Vec<IBig> {
    let mut col = vec![IBig::ZERO; k_max + 1];
    col[0] = IBig::ONE;
    for m in 0..n {
        let m_big = IBig::from(m);
        for k in (0..=k_max).rev() {
            let below = if k > 0 { col[k - 1].clone() } else { IBig::ZERO };
            col[k] = below - &m_big * &col[k];
        }
    }
    col
}

/// The full row `s(n, 0..=n)`.
pub fn stirling1_row(n: u64) -> Vec<IBig> {
    stirling1_columns(n, n as usize)
}

/// Signed Stirling number of the first kind.
pub fn stirling1(n: u64, k: u64) -> IBig {
    if k > n {
        return IBig::ZERO;
    }
    stirling1_columns(n, k as usize).pop().expect("non-empty")
}

fn sign(e: u64) -> RBig {
    if e.is_multiple_of(2) {
        RBig::ONE
    } else {
        -RBig::ONE
    }
}

/// `s(n, k)` for `1 ≤ k ≤ 4` from the harmonic-number closed forms.
pub fn stirling1_closed(n: u64, k: u64) -> Result<RBig> {
    if !(1..=4).contains(&k) {
        return domain(format!("closed form covers 1 ≤ k ≤ 4, got k = {k}"));
    }
    if n == 0 {
        return domain("closed form requires n ≥ 1");
    }
    let f = RBig::from(factorial(n - 1));
    let h1 = h(n - 1, 1);
    let h2 = h(n - 1, 2);
    let h3 = h(n - 1, 3);
    Ok(match k {
        1 => sign(n + 1) * f,
        2 => sign(n) * f * h1,
        3 => sign(n + 1) * f / RBig::from(2) * (h1.clone() * h1 - h2),
        _ => {
            let cube = h1.clone() * h1.clone() * h1.clone();
            sign(n) * f / RBig::from(6) * (cube - RBig::from(3) * h1 * h2 + RBig::from(2) * h3)
        }
    })
}

/// `s(n+1, r+1)` through the Bell polynomial of alternating harmonic numbers.
pub fn stirling1_bell(n: u64, r: u64) -> IBig {
    if r > n {
        return IBig::ZERO;
    }
    let xs: Vec<RBig> = (1..=r)
        .map(|j| sign(j - 1) * RBig::from(factorial(j - 1)) * h(n, j as u32))
        .collect();
    let y = bell_eval(&xs);
    let v = sign(n + r) * RBig::from(factorial(n)) / RBig::from(factorial(r)) * y;
    debug_assert!(v.is_int());
    let (num, _) = v.into_parts();
    num
}
