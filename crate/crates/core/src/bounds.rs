//! Upper and lower bounds for `h^0(tL)` on an embedded n-fold.
//!
//! All bounds are evaluated through integral rearrangements of the rational
//! expressions, e.g. `(td+n)/(t+n) * C(t+n, n) = d C(t+n-1, n) + C(t+n-1, n-1)`,
//! so no fractions appear on the hot path.

use crate::combinatorics::{binom, BigInteger};
use crate::error::{require, Result};

/// `X ⊂ P^{n+r}` of degree `d = L^n`, polarized by the hyperplane bundle `L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EmbeddedVariety {
    pub n: i64,
    pub r: i64,
    pub d: i64,
    /// Declared nonnegative Kodaira dimension. Forces `d >= r n + 2`.
    pub kodaira_nonneg: bool,
}

impl EmbeddedVariety {
    pub fn new(n: i64, r: i64, d: i64) -> Result<Self> {
        let v = EmbeddedVariety { n, r, d, kodaira_nonneg: false };
        v.validate()?;
        Ok(v)
    }

    /// Marks the variety as having nonnegative Kodaira dimension.
    pub fn with_kodaira_nonneg(mut self) -> Result<Self> {
        self.kodaira_nonneg = true;
        self.validate()?;
        Ok(self)
    }

    /// Dimension `N = n + r` of the ambient projective space.
    pub fn ambient_dim(&self) -> i64 {
        self.n + self.r
    }

    pub fn validate(&self) -> Result<()> {
        require(self.n >= 1, "n >= 1")?;
        require(self.r >= 0, "r >= 0")?;
        require(self.d >= 1, "d >= 1")?;
        if self.kodaira_nonneg {
            require(
                self.d >= self.r * self.n + 2,
                "d >= r*n + 2 (nonnegative Kodaira dimension)",
            )?;
        }
        Ok(())
    }

    /// A nondegenerate variety has `d >= r + 1`.
    pub fn require_nondegenerate(&self) -> Result<()> {
        self.validate()?;
        require(self.d > self.r, "d >= r + 1 (nondegenerate)")
    }

    pub fn castelnuovo_profile(&self) -> Result<CastelnuovoProfile> {
        CastelnuovoProfile::new(self.d, self.r)
    }
}

/// Break point `c = floor((d-1)/r)` and remainder `R = d - 1 - c r` of the
/// step function `min(d, k r + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CastelnuovoProfile {
    pub c: i64,
    pub remainder: i64,
}

impl CastelnuovoProfile {
    pub fn new(d: i64, r: i64) -> Result<Self> {
        require(r >= 1, "r >= 1 (profile undefined for r = 0)")?;
        require(d >= 1, "d >= 1")?;
        let c = (d - 1) / r;
        Ok(CastelnuovoProfile { c, remainder: d - 1 - c * r })
    }
}

fn require_t(t: i64) -> Result<()> {
    require(t >= 0, "t >= 0")
}

/// `h^0(tL) <= (td+n)/(t+n) C(t+n, n)` for `L` big and spanned.
pub fn upper_bound_h0(v: &EmbeddedVariety, t: i64) -> Result<BigInteger> {
    v.validate()?;
    require_t(t)?;
    let (n, d) = (v.n, v.d);
    Ok(binom(t + n - 1, n) * d + binom(t + n - 1, n - 1))
}

/// `h^0(tL) >= C(t+n+1, n+1)`, valid for `t < d` when `L` is very ample.
pub fn easy_lower_bound(v: &EmbeddedVariety, t: i64) -> Result<BigInteger> {
    v.validate()?;
    require_t(t)?;
    require(t < v.d, "t < d")?;
    Ok(binom(t + v.n + 1, v.n + 1))
}

/// The Castelnuovo lower bound
///
/// `r C(n+t, n+1) + C(n+t, n) - r C(n+t-c-1, n+1) + (R-r) C(n+t-c-1, n)`
///
/// for a nondegenerate irreducible `X ⊂ P^{n+r}` with `r >= 1`.
pub fn castelnuovo_lower_bound(v: &EmbeddedVariety, t: i64) -> Result<BigInteger> {
    v.require_nondegenerate()?;
    require_t(t)?;
    let profile = v.castelnuovo_profile()?;
    let (n, r) = (v.n, v.r);
    let shifted = n + t - profile.c - 1;
    Ok(binom(n + t, n + 1) * r + binom(n + t, n) - binom(shifted, n + 1) * r
        + binom(shifted, n) * (profile.remainder - r))
}

/// Shared `R = 0` specialization: `r C(t+n, n+1) + C(t+n, n) - r C(t+n-c, n+1)`.
fn castelnuovo_flat(n: i64, r: i64, c: i64, t: i64) -> BigInteger {
    binom(t + n, n + 1) * r + binom(t + n, n) - binom(t + n - c, n + 1) * r
}

/// The Castelnuovo bound at its minimizing profile `R = 0, c = 1`:
/// `(tr+n+1)/(t+n+1) C(t+n+1, n+1) - r C(t+n-1, n+1)`.
pub fn simplified_lower_bound(n: i64, r: i64, t: i64) -> Result<BigInteger> {
    require(n >= 1, "n >= 1")?;
    require(r >= 1, "r >= 1")?;
    require_t(t)?;
    Ok(castelnuovo_flat(n, r, 1, t))
}

/// The Castelnuovo bound at `R = 0, c = n`, available when `X` has
/// nonnegative Kodaira dimension (then `d >= rn + 2`, so `c >= n`).
pub fn kodaira_lower_bound(v: &EmbeddedVariety, t: i64) -> Result<BigInteger> {
    require(v.kodaira_nonneg, "kodaira_nonneg flag set")?;
    v.validate()?;
    require(v.r >= 1, "r >= 1")?;
    require_t(t)?;
    Ok(castelnuovo_flat(v.n, v.r, v.n, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{iterated_castel_sum, BigRational};
    use crate::error::Error;

    fn big(v: i64) -> BigInteger {
        BigInteger::from(v)
    }

    fn var(n: i64, r: i64, d: i64) -> EmbeddedVariety {
        EmbeddedVariety::new(n, r, d).unwrap()
    }

    #[test]
    fn profile_invariants() {
        for r in 1..10 {
            for d in 1..60 {
                let p = CastelnuovoProfile::new(d, r).unwrap();
                assert_eq!(p.c * r + p.remainder, d - 1);
                assert!(p.remainder >= 0 && p.remainder < r);
            }
        }
        assert!(CastelnuovoProfile::new(5, 0).is_err());
    }

    #[test]
    fn upper_bound_examples() {
        // a curve: dt + 1
        assert_eq!(upper_bound_h0(&var(1, 3, 5), 3).unwrap(), big(16));
        for n in 1..6 {
            assert_eq!(upper_bound_h0(&var(n, 1, 7), 0).unwrap(), big(1));
        }
        // smooth quadric surface, h^0(O(3,3)) = 16
        assert_eq!(upper_bound_h0(&var(2, 1, 2), 3).unwrap(), big(16));
    }

    #[test]
    fn upper_bound_matches_rational_form() {
        for n in 1..=5 {
            for d in 1..=20 {
                for t in 0..=12 {
                    let rational = BigRational::new(big(t * d + n), big(t + n))
                        * BigRational::from_integer(binom(t + n, n));
                    let integral = upper_bound_h0(&var(n, 0, d), t).unwrap();
                    assert_eq!(rational, BigRational::from_integer(integral));
                }
            }
        }
    }

    #[test]
    fn easy_lower_examples() {
        assert_eq!(easy_lower_bound(&var(2, 1, 2), 1).unwrap(), big(4));
        assert_eq!(easy_lower_bound(&var(3, 2, 5), 0).unwrap(), big(1));
        assert_eq!(easy_lower_bound(&var(3, 2, 5), 2).unwrap(), big(15));
        assert!(matches!(easy_lower_bound(&var(3, 2, 5), 5), Err(Error::Domain(_))));
    }

    #[test]
    fn castelnuovo_examples() {
        assert_eq!(castelnuovo_lower_bound(&var(2, 3, 8), 2).unwrap(), big(18));
        // Segre threefold P1 x P2, h^0(O(1,1)) = 6
        assert_eq!(castelnuovo_lower_bound(&var(3, 2, 3), 1).unwrap(), big(6));
        assert_eq!(castelnuovo_lower_bound(&var(4, 3, 11), 0).unwrap(), big(1));
        assert!(castelnuovo_lower_bound(&var(3, 0, 1), 2).is_err());
        assert!(castelnuovo_lower_bound(&var(3, 4, 4), 2).is_err());
    }

    #[test]
    fn castelnuovo_matches_iterated_sum() {
        for n in 1..=4 {
            for r in 1..=4 {
                for d in (r + 1)..=20 {
                    for t in 0..=8 {
                        assert_eq!(
                            castelnuovo_lower_bound(&var(n, r, d), t).unwrap(),
                            iterated_castel_sum(d, r, n as u32, t),
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn simplified_examples() {
        assert_eq!(simplified_lower_bound(4, 4, 2).unwrap(), big(35));
        assert_eq!(simplified_lower_bound(4, 4, 1).unwrap(), big(9));
        assert_eq!(simplified_lower_bound(3, 2, 0).unwrap(), big(1));
        assert!(simplified_lower_bound(3, 0, 1).is_err());
    }

    #[test]
    fn simplified_matches_rational_form() {
        for n in 1..=5 {
            for r in 1..=6 {
                for t in 0..=10 {
                    let lead = BigRational::new(big(t * r + n + 1), big(t + n + 1))
                        * BigRational::from_integer(binom(t + n + 1, n + 1));
                    let expected = lead - BigRational::from_integer(binom(t + n - 1, n + 1) * r);
                    assert_eq!(
                        BigRational::from_integer(simplified_lower_bound(n, r, t).unwrap()),
                        expected
                    );
                }
            }
        }
    }

    #[test]
    fn simplified_never_exceeds_full_bound() {
        for n in 1..=5 {
            for r in 1..=6 {
                for d in (r + 1)..=40 {
                    for t in 0..=12 {
                        assert!(
                            simplified_lower_bound(n, r, t).unwrap()
                                <= castelnuovo_lower_bound(&var(n, r, d), t).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn kodaira_examples() {
        let surface = var(2, 1, 5).with_kodaira_nonneg().unwrap();
        assert_eq!(kodaira_lower_bound(&surface, 1).unwrap(), big(4));
        assert_eq!(kodaira_lower_bound(&surface, 0).unwrap(), big(1));
        // 9/6 * C(6,3) - 2 * C(3,3)
        let v = var(2, 2, 8).with_kodaira_nonneg().unwrap();
        assert_eq!(kodaira_lower_bound(&v, 3).unwrap(), big(28));
    }

    #[test]
    fn kodaira_requires_flag_and_degree() {
        assert!(kodaira_lower_bound(&var(2, 2, 8), 3).is_err());
        assert!(var(2, 2, 5).with_kodaira_nonneg().is_err());
    }

    #[test]
    fn flat_form_agrees_with_full_bound_when_profile_matches() {
        // d = r n + 1 gives c = n, R = 0 exactly
        for n in 1..=4 {
            for r in 1..=4 {
                let d = r * n + 1;
                for t in 0..=10 {
                    assert_eq!(
                        castelnuovo_flat(n, r, n, t),
                        castelnuovo_lower_bound(&var(n, r, d), t).unwrap()
                    );
                }
            }
        }
    }
}
