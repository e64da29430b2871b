//! Exact binomial arithmetic.
//!
//! Every bound in this crate is an integer combination of binomial
//! coefficients whose top argument may drift below zero (an empty summation
//! range). [`binom`] therefore returns zero whenever `q < 0`, `q > m` or
//! `m < 0`; generalized binomials with negative tops are never used.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision signed integer used for every count.
pub type BigInteger = BigInt;
/// Reduced fraction with positive denominator.
pub type BigRational = num_rational::BigRational;

/// `m choose q`, zero outside `0 <= q <= m`.
pub fn binom(m: i64, q: i64) -> BigInteger {
    if m < 0 || q < 0 || q > m {
        return BigInteger::zero();
    }
    let q = q.min(m - q);
    let mut acc = BigInteger::one();
    // acc = C(m - q + i, i) after step i, so each division is exact.
    for i in 1..=q {
        acc *= m - q + i;
        acc /= i;
    }
    acc
}

/// `sum_{i=0}^{b} C(i+m, q)` in closed form: `C(b+m+1, q+1) - C(m, q+1)`.
pub fn hockey_stick(b: i64, m: i64, q: i64) -> BigInteger {
    debug_assert!(b >= 0 && m >= 0 && q >= 0);
    binom(b + m + 1, q + 1) - binom(m, q + 1)
}

/// The Castelnuovo step function `h(k) = min(d, k r + 1)`.
pub fn castelnuovo_step(d: i64, r: i64, k: i64) -> BigInteger {
    let line: BigInteger = BigInteger::from(k) * r + 1;
    line.min(BigInteger::from(d))
}

/// `depth`-fold iterated partial sum of the step function, evaluated at `t`:
///
/// `sum_{k_{n-1}=0}^{t} ... sum_{k_1=0}^{k_2} sum_{k=0}^{k_1} min(d, k r + 1)`
///
/// with `n = depth`. This is the brute-force counterpart of
/// [`crate::bounds::castelnuovo_lower_bound`]. A depth of zero returns `h(t)`.
pub fn iterated_castel_sum(d: i64, r: i64, depth: u32, t: i64) -> BigInteger {
    if t < 0 {
        return BigInteger::zero();
    }
    let mut row: Vec<BigInteger> = (0..=t).map(|k| castelnuovo_step(d, r, k)).collect();
    for _ in 0..depth {
        let mut running = BigInteger::zero();
        for v in row.iter_mut() {
            running += &*v;
            *v = running.clone();
        }
    }
    row.pop().unwrap_or_default()
}
