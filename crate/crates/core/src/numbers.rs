//! Exact counting formulas.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan_number(n: u64) -> BigUint {
    // C_{k+1} = C_k * 2(2k+1) / (k+2); each division is exact.
    let mut c = BigUint::one();
    for k in 0..n {
        c = c * (2 * (2 * k + 1)) / (k + 2);
    }
    c
}

/// `p^l * C_{l-1}`, the number of norm-`l` elements of a free magma on `p` generators.
pub fn p_catalan_number(p: u64, l: u64) -> BigUint {
    if l == 0 {
        return BigUint::zero();
    }
    BigUint::from(p).pow(l as u32) * catalan_number(l - 1)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `N_{n,k} = binom(n-1, k) binom(n-1, k-1) / (n-1)`; zero outside `1 <= k <= n-1`.
pub fn narayana_value(n: u64, k: u64) -> BigUint {
    if n < 2 || k < 1 || k > n - 1 {
        return BigUint::zero();
    }
    binomial(n - 1, k) * binomial(n - 1, k - 1) / (n - 1)
}
