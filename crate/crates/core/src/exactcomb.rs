//! Exact binomial coefficients.

use num_bigint::BigUint;
use num_traits::One;

/// A nonnegative face or binomial count of unbounded size.
pub type Count = BigUint;

/// `C(n, k)`, with the convention that it vanishes for `k < 0` or `k > n`.
///
/// Uses the multiplicative formula with exact division after every factor, so
/// each intermediate value is itself a binomial coefficient. The product runs
/// in `u128` until a multiplication would overflow and then continues in
/// arbitrary precision from the same point.
pub fn binom(n: u64, k: i64) -> Count {
    if k < 0 || k as u64 > n {
        return BigUint::from(0u8);
    }
    let k = (k as u64).min(n - k as u64);
    let base = n - k;

    let mut small: u128 = 1;
    let mut i = 1;
    while i <= k {
        match small.checked_mul((base + i) as u128) {
            Some(p) => small = p / i as u128,
            None => break,
        }
        i += 1;
    }
    if i > k {
        return BigUint::from(small);
    }

    let mut big = BigUint::from(small);
    while i <= k {
        big *= base + i;
        big /= i;
        i += 1;
    }
    big
}

/// Row `n` of Pascal's triangle: `C(n,0), …, C(n,n)`.
pub fn pascal_row(n: u64) -> Vec<Count> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut current = BigUint::one();
    for k in 0..=n {
        row.push(current.clone());
        if k < n {
            current = current * (n - k) / (k + 1);
        }
    }
    row
}
