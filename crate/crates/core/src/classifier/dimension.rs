use num_bigint::BigInt;

use super::verdict::{BoundCondition, ClassificationVerdict, DimBound, VerdictTag};
use crate::citation::Citation;
use crate::combinatorics::BigRational;
use crate::error::{require, Result};

/// Declared hypotheses on a `k`-dimensional `Y ⊂ X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubvarietyProfile {
    pub k: i64,
    /// `L^k · Y = 1` and `Y ≅ P^k`.
    pub is_linear_pk: bool,
    /// `h^2(Y, Q)_alg = 1`.
    pub pic_rank_one: bool,
    /// `h^{2j}(Y, Q)_alg = 1` for all `j <= j_max`.
    pub cohomology_like_pk_through: Option<i64>,
    pub is_k_pi_1: bool,
    /// Whether `Y` is a complete intersection of `n - k` divisors in `|L|`,
    /// when the caller knows.
    pub complete_intersection: Option<bool>,
}

impl SubvarietyProfile {
    /// No hypotheses beyond the dimension.
    pub fn plain(k: i64) -> Self {
        SubvarietyProfile {
            k,
            is_linear_pk: false,
            pic_rank_one: false,
            cohomology_like_pk_through: None,
            is_k_pi_1: false,
            complete_intersection: None,
        }
    }

    /// A linear `P^k`.
    pub fn linear(k: i64) -> Self {
        SubvarietyProfile { is_linear_pk: true, pic_rank_one: true, ..Self::plain(k) }
    }

    pub fn has_pic_rank_one(&self) -> bool {
        self.pic_rank_one || self.is_linear_pk || self.cohomology_like_pk_through.is_some_and(|j| j >= 1)
    }

    /// Whether the algebraic cohomology agrees with that of `P^k` up to degree `2j`.
    pub fn cohomology_like_pk(&self, j: i64) -> bool {
        self.is_linear_pk || self.cohomology_like_pk_through.is_some_and(|m| m >= j)
    }

    fn not_complete_intersection(&self) -> bool {
        self.complete_intersection == Some(false)
    }

    pub fn validate(&self, n: i64) -> Result<()> {
        require(n >= 2, "n >= 2")?;
        require(self.k >= 1 && self.k < n, "1 <= k <= n - 1")?;
        require(
            !(self.is_linear_pk && self.is_k_pi_1),
            "a linear P^k is simply connected, not a K(pi,1)",
        )?;
        if let Some(j) = self.cohomology_like_pk_through {
            require(j >= 0, "cohomology_like_pk_through >= 0")?;
        }
        Ok(())
    }
}

/// `n - k + k/(n-k) - 1`.
fn grassmann_bound(n: i64, k: i64) -> BigRational {
    let w = n - k;
    BigRational::new(BigInt::from(k), BigInt::from(w)) + BigRational::from_integer(BigInt::from(w - 1))
}

/// `n - k + k/3 - 1`.
fn hartshorne_bound(n: i64, k: i64) -> BigRational {
    BigRational::new(BigInt::from(k), BigInt::from(3)) + BigRational::from_integer(BigInt::from(n - k - 1))
}

/// Lower bounds on `dim Z` implied by the profile of `Y`.
///
/// The universal bound `n - k - 1` is always present. `x_is_ci` declares
/// whether `X` itself is a complete intersection; it gates the
/// Hartshorne-conditional bound, which is only emitted when
/// `assume_hartshorne` is set.
pub fn dim_z_bounds(
    n: i64,
    y: &SubvarietyProfile,
    assume_hartshorne: bool,
    x_is_ci: bool,
) -> Result<ClassificationVerdict> {
    y.validate(n)?;
    let k = y.k;
    let codim = n - k;
    let mut v = ClassificationVerdict::default();

    v.bound(DimBound::integer(codim - 1, BoundCondition::Unconditional, Citation::TheoremDimension));

    // Whether dim Z >= n - k is already established.
    let mut beyond_equality = false;
    if y.not_complete_intersection() {
        v.bound(DimBound::integer(codim, BoundCondition::Unconditional, Citation::TheoremDimension));
        beyond_equality = true;
    }
    if y.is_k_pi_1 && k >= 2 {
        v.bound(DimBound::integer(codim, BoundCondition::Unconditional, Citation::CorKP1));
        beyond_equality = true;
    }

    if y.has_pic_rank_one() {
        let condition = if beyond_equality {
            BoundCondition::Unconditional
        } else {
            BoundCondition::IfDimAtLeastCodim
        };
        v.bound(DimBound::new(grassmann_bound(n, k), condition, Citation::PropBetterB));
        v.conclude(VerdictTag::CodimEqualityForcesHalf { n, k }, Citation::PropBetterB);
        if n < 2 * k {
            v.contradict(
                format!("dim Z = n-k = {codim} is excluded: it forces n >= 2k, but {n} < {}", 2 * k),
                Citation::PropBetterB,
            );
        }
    }

    if y.cohomology_like_pk(codim) {
        v.conclude(VerdictTag::CompleteIntersectionOrDimAtLeast { k }, Citation::TheoremThmB);
        if y.is_linear_pk {
            v.conclude(VerdictTag::ProjectiveSpaceOrDimAtLeast { k }, Citation::CorHardCor);
        }
        if y.not_complete_intersection() || beyond_equality {
            v.bound(DimBound::integer(k, BoundCondition::Unconditional, Citation::TheoremThmB));
        } else {
            v.bound(DimBound::integer(k, BoundCondition::UnlessCompleteIntersection, Citation::TheoremThmB));
        }
        if y.not_complete_intersection() {
            let half = BigRational::new(BigInt::from(n), BigInt::from(2));
            v.bound(DimBound::new(half, BoundCondition::Unconditional, Citation::CorCeil));
        } else {
            v.skip("Y is not declared to be a non-complete-intersection", Citation::CorCeil);
        }
    }

    if assume_hartshorne {
        if !y.is_linear_pk {
            v.skip("requires Y to be a linear P^k", Citation::PropHartC);
        } else if x_is_ci {
            v.skip("X is declared a complete intersection", Citation::PropHartC);
        } else {
            v.bound(DimBound::new(
                hartshorne_bound(n, k),
                BoundCondition::AssumingHartshorne,
                Citation::PropHartC,
            ));
        }
    }
    Ok(v)
}

/// Structural conclusions and exclusions at a given value of `dim Z`.
pub fn classify_at_dim(n: i64, y: &SubvarietyProfile, dim_z: i64) -> Result<ClassificationVerdict> {
    y.validate(n)?;
    let k = y.k;
    let codim = n - k;
    require(dim_z >= codim - 1, "dim Z >= n - k - 1")?;
    require(dim_z <= n, "dim Z <= n")?;
    let mut v = ClassificationVerdict::default();

    if dim_z == codim - 1 {
        v.conclude(VerdictTag::CompleteIntersectionImage { dim: codim - 1 }, Citation::TheoremDimension);
        if y.is_linear_pk {
            v.conclude(VerdictTag::ProjectiveSpace { n }, Citation::CorPk);
        }
        if y.not_complete_intersection() {
            v.contradict(
                "dim Z = n-k-1 forces Y to be a complete intersection, but Y is declared not to be one",
                Citation::TheoremDimension,
            );
        }
        if y.is_k_pi_1 && k >= 2 {
            v.contradict(
                "a K(pi,1) of dimension >= 2 cannot be a complete intersection, so dim Z = n-k-1 is impossible",
                Citation::CorKP1,
            );
        }
        return Ok(v);
    }

    if dim_z == codim && y.is_linear_pk {
        if k >= 2 {
            v.conclude(VerdictTag::Hypersurface { ambient: n + 1 }, Citation::TheoremAlan);
        } else {
            v.skip("requires k >= 2", Citation::TheoremAlan);
        }
    }

    if y.has_pic_rank_one() {
        let needed = grassmann_bound(n, k);
        if BigRational::from_integer(BigInt::from(dim_z)) < needed {
            v.contradict(
                format!("dim Z = {dim_z} is below n-k+k/(n-k)-1 = {needed}"),
                Citation::PropBetterB,
            );
        }
    }

    if y.cohomology_like_pk(codim) && dim_z < k {
        let rule = if y.is_linear_pk { Citation::CorHardCor } else { Citation::TheoremThmB };
        v.contradict(
            format!("dim Z = {dim_z} >= n-k rules out the complete-intersection case, so dim Z >= k = {k}"),
            rule,
        );
    }
    Ok(v)
}
