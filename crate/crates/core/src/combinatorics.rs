//! Exact binomials, binomial parity, and the alternating binomial identity
//! used to invert the coefficient recombination.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `C(n, k)` as a big integer; zero when `k < 0` or `k > n`.
pub fn binom(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc = C(n, i) here, so acc * (n - i) is divisible by i + 1.
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Row `n` of Pascal's triangle, `[C(n, 0), ..., C(n, n)]`.
pub fn binomial_row(n: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut acc = BigInt::one();
    row.push(acc.clone());
    for s in 0..n {
        acc *= n - s;
        acc /= s + 1;
        row.push(acc.clone());
    }
    row
}

/// Parity of `C(s, k)`: true when the binomial is odd.
///
/// By Lucas' theorem mod 2, `C(s, k)` is odd exactly when every set bit of
/// `k` is also set in `s`.
#[inline]
pub fn binom_parity(s: u64, k: u64) -> bool {
    k & s == k
}

/// Both sides of `sum_{n=r}^{m} (-1)^n C(m+1, n) C(n, r) = (-1)^m C(m+1, r)`.
///
/// The left side is evaluated by direct summation. Returns an error if the
/// two sides differ, which would indicate a bug in `binom`.
pub fn alt_binom_identity(m: u64, r: u64) -> Result<(BigInt, BigInt)> {
    if r > m {
        return Err(Error::OutOfRange(format!("need r <= m, got r = {r}, m = {m}")));
    }
    let mut lhs = BigInt::zero();
    for n in r..=m {
        let term = binom(m + 1, n as i64) * binom(n, r as i64);
        if n % 2 == 0 {
            lhs += term;
        } else {
            lhs -= term;
        }
    }
    let mut rhs = binom(m + 1, r as i64);
    if m % 2 == 1 {
        rhs = -rhs;
    }
    if lhs != rhs {
        return Err(Error::IdentityViolation { m, r, lhs, rhs });
    }
    Ok((lhs, rhs))
}
