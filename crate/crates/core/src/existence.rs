//! Thresholds guaranteeing sections of `tL ⊗ J_Y`, and bounds on the lower
//! degree `δ_N` (the least degree of a form vanishing on `X ⊂ P^N`).
//!
//! Section criteria are one-sided: `false` means "not guaranteed", never
//! "no section exists".

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bounds::{castelnuovo_lower_bound, simplified_lower_bound, EmbeddedVariety};
use crate::combinatorics::{binom, BigInteger, BigRational};
use crate::error::{require, Result};

/// A `k`-dimensional subvariety `Y ⊂ X` of degree `delta = L^k · Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subvariety {
    pub k: i64,
    pub delta: i64,
    /// Codimension of `Y` in its linear span, when known.
    pub q: Option<i64>,
}

impl Subvariety {
    pub fn new(k: i64, delta: i64) -> Self {
        Subvariety { k, delta, q: None }
    }

    pub fn with_span_codim(mut self, q: i64) -> Self {
        self.q = Some(q);
        self
    }

    /// Checks the standalone invariants and those relative to `x`.
    pub fn validate_in(&self, x: &EmbeddedVariety) -> Result<()> {
        x.validate()?;
        require(self.k >= 1, "k >= 1")?;
        require(self.k < x.n, "k <= n - 1")?;
        require(self.delta >= 1, "delta >= 1")?;
        if let Some(q) = self.q {
            require(q >= 0, "q >= 0")?;
            require(self.delta > q, "delta >= q + 1")?;
            require(x.r >= q - 1, "r >= q - 1")?;
        }
        Ok(())
    }
}

/// `h^0(t L_Y) <= (δt+k)/(t+k) C(t+k, k)`, in integral form.
fn subvariety_upper(k: i64, delta: i64, t: i64) -> BigInteger {
    binom(t + k - 1, k) * delta + binom(t + k - 1, k - 1)
}

/// Whether the lower bound for `h^0(tL)` strictly exceeds the upper bound for
/// `h^0(tL_Y)`, which forces a nonzero section of `tL ⊗ J_Y`.
///
/// The simplified (`R = 0, c = 1`) bound is used unless `use_full_bound`.
pub fn section_guaranteed(
    x: &EmbeddedVariety,
    y: &Subvariety,
    t: i64,
    use_full_bound: bool,
) -> Result<bool> {
    x.require_nondegenerate()?;
    require(x.r >= 1, "r >= 1")?;
    y.validate_in(x)?;
    require(t >= 1, "t >= 1")?;
    let lower = if use_full_bound {
        castelnuovo_lower_bound(x, t)?
    } else {
        simplified_lower_bound(x.n, x.r, t)?
    };
    Ok(lower > subvariety_upper(y.k, y.delta, t))
}

/// Outcome of [`min_t_guaranteed`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinT {
    pub t: i64,
    /// Set when no `t <= delta + 1` passed the criterion and the value comes
    /// from spannedness of `J_Y(δ)` instead.
    pub mumford_fallback: bool,
}

/// Least `t` in `[1, δ+1]` passing [`section_guaranteed`]; otherwise `δ+1`
/// with the fallback tag. Linear scan: the bounds are not known to be
/// monotone in `t`.
pub fn min_t_guaranteed(x: &EmbeddedVariety, y: &Subvariety, use_full_bound: bool) -> Result<MinT> {
    let ceiling = y.delta + 1;
    for t in 1..=ceiling {
        if section_guaranteed(x, y, t, use_full_bound)? {
            return Ok(MinT { t, mumford_fallback: false });
        }
    }
    Ok(MinT { t: ceiling, mumford_fallback: true })
}

/// The exact right-hand side `n(δ-1)/(r+1) - n + 1` of the divisor criterion.
pub fn divisor_threshold_value(n: i64, r: i64, delta: i64) -> Result<BigRational> {
    require(n >= 2, "n >= 2")?;
    require(r >= 1, "r >= 1")?;
    require(delta > 1, "delta > 1")?;
    let lead = BigRational::new(BigInt::from(n) * (delta - 1), BigInt::from(r + 1));
    Ok(lead - BigRational::from_integer(BigInt::from(n - 1)))
}

/// Least `t >= 1` with `t > n(δ-1)/(r+1) - n + 1`; then `tL - D` has a
/// nonzero section for an irreducible divisor `D` of degree `δ`.
pub fn divisor_threshold(n: i64, r: i64, delta: i64) -> Result<i64> {
    let value = divisor_threshold_value(n, r, delta)?;
    let strictly_above: BigInt = value.floor().to_integer() + 1;
    let t = strictly_above.max(BigInt::one());
    Ok(i64::try_from(t).expect("threshold is bounded by n * delta"))
}

/// Codimension-two positivity polynomial for `h^0((δ-1)L ⊗ J_Y)`.
pub fn codim2_polynomial(n: i64, r: i64, delta: i64) -> BigInteger {
    let (n, r, e) = (BigInt::from(n), BigInt::from(r), BigInt::from(delta));
    let n2 = &n * &n;
    -&r * &n2 - 3 * &n2 + &e * &n2 - 2 * &r * &n * &e + 9 * &n - 4 * &e * &n + 5 * &r * &n - 6
        - 6 * &r
        + 5 * &e
        + 5 * &r * &e
        - &r * &e * &e
        - &e * &e
}

/// Whether the codimension-two criterion is positive.
pub fn codim2_positive(n: i64, r: i64, delta: i64) -> Result<bool> {
    require(n >= 3, "n >= 3")?;
    require(r >= 1, "r >= 1")?;
    require(delta >= 1, "delta >= 1")?;
    Ok(codim2_polynomial(n, r, delta) > BigInt::zero())
}

/// Number of consecutive failures checked past the first failing degree.
const REENTRY_WINDOW: i64 = 50;

/// Largest `δ >= 2` accepted by `holds`, scanning upward; `1` when `δ = 2`
/// already fails.
fn largest_accepted(mut holds: impl FnMut(i64) -> bool) -> i64 {
    if !holds(2) {
        return 1;
    }
    let mut best = 2;
    let mut delta = 3;
    loop {
        if holds(delta) {
            best = delta;
            delta += 1;
            continue;
        }
        match (delta + 1..=delta + REENTRY_WINDOW).find(|&e| holds(e)) {
            Some(e) => {
                best = e;
                delta = e + 1;
            }
            None => return best,
        }
    }
}

/// `(δ+N-1)...(δ+n-1) - n * N...(n+1) <= d * N...(n+1) * (δ-1)`, which is
/// the lower-degree inequality multiplied through by its positive
/// denominators.
fn lower_degree_holds(n: i64, big_n: i64, d: i64, delta: i64) -> bool {
    lower_degree_holds_i128(n, big_n, d, delta).unwrap_or_else(|| {
        let denom: BigInt = (n + 1..=big_n).map(BigInt::from).product();
        let rising: BigInt = (n - 1..=big_n - 1).map(|i| BigInt::from(delta + i)).product();
        rising - &denom * n <= denom * d * (delta - 1)
    })
}

fn lower_degree_holds_i128(n: i64, big_n: i64, d: i64, delta: i64) -> Option<bool> {
    let mut denom: i128 = 1;
    for j in n + 1..=big_n {
        denom = denom.checked_mul(i128::from(j))?;
    }
    let mut rising: i128 = 1;
    for i in n - 1..=big_n - 1 {
        rising = rising.checked_mul(i128::from(delta + i))?;
    }
    let lhs = rising.checked_sub(denom.checked_mul(i128::from(n))?)?;
    let rhs = denom.checked_mul(i128::from(d))?.checked_mul(i128::from(delta - 1))?;
    Some(lhs <= rhs)
}

/// Upper bound for the lower degree `δ_N` of a nondegenerate smooth
/// connected n-fold `X ⊂ P^N` of degree `d`: the largest `δ >= 2` with
///
/// `((δ+N-1)...(δ+n-1) / (N...(n+1)) - n) / (δ-1) <= d`.
pub fn lower_degree_bound(n: i64, big_n: i64, d: i64) -> Result<i64> {
    require(n >= 1, "n >= 1")?;
    require(big_n > n, "N > n")?;
    require(d >= 1, "d >= 1")?;
    Ok(largest_accepted(|delta| lower_degree_holds(n, big_n, d, delta)))
}

/// Evaluates `poly(δ) <= bound` exactly, `poly` given by ascending coefficients.
fn poly_at_most(coeffs: &[i64], delta: i64, bound: i64) -> bool {
    let exact = || {
        let value = coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, &c| acc * delta + c);
        value <= BigInt::from(bound)
    };
    let fast = coeffs.iter().rev().try_fold(0i128, |acc, &c| {
        acc.checked_mul(i128::from(delta))?.checked_add(i128::from(c))
    });
    match fast {
        Some(v) => v <= i128::from(bound),
        None => exact(),
    }
}

/// Surfaces in `P^N`, `N >= 5`: largest `δ >= 2` with
/// `δ^3 + 11δ^2 + 46δ + 96 <= 60d`.
pub fn surface_lower_degree(d: i64) -> Result<i64> {
    require(d >= 1, "d >= 1")?;
    let bound = d.checked_mul(60).ok_or_else(|| crate::Error::Domain("60 d fits in 64 bits".into()))?;
    Ok(largest_accepted(|delta| poly_at_most(&[96, 46, 11, 1], delta, bound)))
}

/// Threefolds in `P^N`: `δ^2 + 10δ + 36 <= 20d` for `N = 5`, and
/// `δ^3 + 15δ^2 + 86δ + 240 <= 120d` for `N >= 6`.
pub fn threefold_lower_degree(d: i64, big_n: i64) -> Result<i64> {
    require(d >= 1, "d >= 1")?;
    require(big_n >= 5, "N >= 5")?;
    let overflow = || crate::Error::Domain("d fits the bound in 64 bits".into());
    let accepted = if big_n == 5 {
        let bound = d.checked_mul(20).ok_or_else(overflow)?;
        largest_accepted(|delta| poly_at_most(&[36, 10, 1], delta, bound))
    } else {
        let bound = d.checked_mul(120).ok_or_else(overflow)?;
        largest_accepted(|delta| poly_at_most(&[240, 86, 15, 1], delta, bound))
    };
    Ok(accepted)
}

/// Exact rational form of the lower-degree left-hand side at `δ`, for reports.
pub fn lower_degree_lhs(n: i64, big_n: i64, delta: i64) -> Result<BigRational> {
    require(n >= 1 && big_n > n, "N > n >= 1")?;
    require(delta >= 2, "delta >= 2")?;
    let denom: BigInt = (n + 1..=big_n).map(BigInt::from).product();
    let rising: BigInt = (n - 1..=big_n - 1).map(|i| BigInt::from(delta + i)).product();
    let ratio = BigRational::new(rising, denom) - BigRational::from_integer(BigInt::from(n));
    Ok(ratio / BigRational::from_integer(BigInt::from(delta - 1)))
}
