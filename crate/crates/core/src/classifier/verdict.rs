use std::fmt;

use num_bigint::BigInt;

use crate::citation::Citation;
use crate::combinatorics::BigRational;

/// Hypotheses under which a dimension bound holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundCondition {
    Unconditional,
    /// Holds once `dim Z >= n - k` is known.
    IfDimAtLeastCodim,
    /// Holds unless `Y` is a complete intersection (and then `Z = P^{n-k-1}`).
    UnlessCompleteIntersection,
    /// Holds if Hartshorne's complete-intersection conjecture is true.
    AssumingHartshorne,
}

impl BoundCondition {
    pub fn tag(self) -> &'static str {
        match self {
            BoundCondition::Unconditional => "unconditional",
            BoundCondition::IfDimAtLeastCodim => "if-dim-z-at-least-codim",
            BoundCondition::UnlessCompleteIntersection => "unless-complete-intersection",
            BoundCondition::AssumingHartshorne => "conditional-on-hartshorne",
        }
    }
}

/// A lower bound on `dim Z`. `ceiling` is the operative integer bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimBound {
    pub bound: BigRational,
    pub ceiling: i64,
    pub condition: BoundCondition,
    pub rule: Citation,
}

impl DimBound {
    pub(crate) fn new(bound: BigRational, condition: BoundCondition, rule: Citation) -> Self {
        let ceiling = i64::try_from(bound.ceil().to_integer()).expect("dimension bounds fit in i64");
        DimBound { bound, ceiling, condition, rule }
    }

    pub(crate) fn integer(bound: i64, condition: BoundCondition, rule: Citation) -> Self {
        DimBound::new(BigRational::from_integer(BigInt::from(bound)), condition, rule)
    }
}

/// Structural conclusions a rule forces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerdictTag {
    /// `Z ≅ P^{dim}` and `Y` is a complete intersection of `n - k` divisors in `|L|`.
    CompleteIntersectionImage { dim: i64 },
    /// `(X, L) ≅ (P^n, O(1))`.
    ProjectiveSpace { n: i64 },
    /// `X` is a hypersurface in `P^{n+1}` (so `h^0(L) <= n + 2`).
    Hypersurface { ambient: i64 },
    /// Either `Z ≅ P^{n-k-1}` with `Y` a complete intersection, or `dim Z >= k`.
    CompleteIntersectionOrDimAtLeast { k: i64 },
    /// Either `(X, L) ≅ (P^n, O(1))`, or `dim Z >= k`.
    ProjectiveSpaceOrDimAtLeast { k: i64 },
    /// `dim Z = n - k` is possible only when `n >= 2k`.
    CodimEqualityForcesHalf { n: i64, k: i64 },
    /// `δL - D` is 1-ample; `exception_possible` is false when `r >= 1` rules
    /// out `(P^n, O(1), O(δ))`.
    OneAmple { exception_possible: bool },
    /// The morphism of `|δL - D|` is birational.
    Birational,
    /// `δL - D` is very ample.
    VeryAmple,
    /// `(δ-q+1)L - D` is very ample, unless `X ≅ P^n` and `δL ≈ D`.
    CastelnuovoVeryAmple { exception_possible: bool },
    /// The morphism of `|(δ-q+1)L - D|` is birational.
    CastelnuovoBirational,
    /// Birationality of `|(δ-q+1)L - D|` is not decided here.
    CastelnuovoExceptional,
    /// `K_X + (n-1)L` fails to be spanned for a quadric with `dim Z = n - k`.
    QuadricException { dim_z: i64 },
    /// `(P^n, O(1))` with `dim Z = n - k - 1`.
    ProjectiveSpaceException { dim_z: i64 },
    /// Scroll over a curve with `Y` a section (`k = 1`).
    ScrollSectionException,
    /// `(P^{n-1} × P^1, O(1,1))` with `k = n - 1`.
    SegreScrollException,
    /// `(X, L) ≅ (P(O(s+1) ⊕ O(1)), ξ)` over `P^{n-1}`.
    ProjectiveBundle { s: i64 },
    /// `(X, L) ≅ (P^{n-1} × P^1, O(1,1))`.
    SegreProduct { n: i64 },
    /// The first reduction exists and is an isomorphism.
    OwnFirstReduction,
    /// The first reduction exists; it may blow down `P` to a single point.
    FirstReductionMayContractP,
    /// Blowup at one point of a complete intersection of three quadrics in `P^6`.
    BlownUpQuadricIntersection,
}

impl VerdictTag {
    pub fn slug(&self) -> &'static str {
        use VerdictTag::*;
        match self {
            CompleteIntersectionImage { .. } => "complete-intersection-image",
            ProjectiveSpace { .. } => "projective-space",
            Hypersurface { .. } => "hypersurface",
            CompleteIntersectionOrDimAtLeast { .. } => "complete-intersection-or-dim-at-least-k",
            ProjectiveSpaceOrDimAtLeast { .. } => "projective-space-or-dim-at-least-k",
            CodimEqualityForcesHalf { .. } => "codim-equality-forces-n-ge-2k",
            OneAmple { .. } => "one-ample",
            Birational => "birational",
            VeryAmple => "very-ample",
            CastelnuovoVeryAmple { .. } => "castelnuovo-very-ample",
            CastelnuovoBirational => "castelnuovo-birational",
            CastelnuovoExceptional => "castelnuovo-exceptional",
            QuadricException { .. } => "quadric",
            ProjectiveSpaceException { .. } => "projective-space-pair",
            ScrollSectionException => "scroll-section",
            SegreScrollException => "scroll-segre",
            ProjectiveBundle { .. } => "projective-bundle",
            SegreProduct { .. } => "segre-product",
            OwnFirstReduction => "own-first-reduction",
            FirstReductionMayContractP => "first-reduction-may-contract-p",
            BlownUpQuadricIntersection => "blown-up-quadric-intersection",
        }
    }
}

impl fmt::Display for VerdictTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use VerdictTag::*;
        match self {
            CompleteIntersectionImage { dim } => write!(
                f,
                "Z = P^{dim}, Y is a complete intersection of {} divisors in |L|",
                dim + 1
            ),
            ProjectiveSpace { n } => write!(f, "(X,L) = (P^{n}, O(1))"),
            Hypersurface { ambient } => write!(f, "X is a hypersurface in P^{ambient}"),
            CompleteIntersectionOrDimAtLeast { k } => write!(
                f,
                "either Z = P^(n-k-1) with Y a complete intersection, or dim Z >= {k}"
            ),
            ProjectiveSpaceOrDimAtLeast { k } => {
                write!(f, "either (X,L) = (P^n, O(1)), or dim Z >= {k}")
            }
            CodimEqualityForcesHalf { n, k } => {
                write!(f, "dim Z = {} forces n >= 2k ({n} >= {})", n - k, 2 * k)
            }
            OneAmple { exception_possible: true } => {
                write!(f, "delta L - D is 1-ample unless (X,L,D) = (P^n, O(1), O(delta))")
            }
            OneAmple { exception_possible: false } => write!(f, "delta L - D is 1-ample"),
            Birational => write!(f, "|delta L - D| gives a birational morphism"),
            VeryAmple => write!(f, "delta L - D is very ample"),
            CastelnuovoVeryAmple { exception_possible: true } => write!(
                f,
                "(delta-q+1)L - D is very ample unless X = P^n and delta L = D"
            ),
            CastelnuovoVeryAmple { exception_possible: false } => {
                write!(f, "(delta-q+1)L - D is very ample")
            }
            CastelnuovoBirational => write!(f, "|(delta-q+1)L - D| gives a birational morphism"),
            CastelnuovoExceptional => write!(
                f,
                "exceptional case: birationality of |(delta-q+1)L - D| is not decided"
            ),
            QuadricException { dim_z } => {
                write!(f, "(X,L) = (Q, O(1)), Q a quadric in P^(n+1), dim Z = {dim_z}")
            }
            ProjectiveSpaceException { dim_z } => write!(f, "(X,L) = (P^n, O(1)), dim Z = {dim_z}"),
            ScrollSectionException => write!(
                f,
                "scroll over a curve, Y a section corresponding to a summand O(1) of pi_* L"
            ),
            SegreScrollException => write!(f, "(X,L) = (P^(n-1) x P^1, O(1,1)), k = n-1"),
            ProjectiveBundle { s } => {
                write!(f, "(X,L) = (P(O({}) + O(1)), xi) over P^(n-1)", s + 1)
            }
            SegreProduct { n } => write!(f, "(X,L) = (P^{} x P^1, O(1,1))", n - 1),
            OwnFirstReduction => write!(f, "X is its own first reduction"),
            FirstReductionMayContractP => write!(
                f,
                "first reduction exists; it is an isomorphism unless it contracts P to one point"
            ),
            BlownUpQuadricIntersection => write!(
                f,
                "X is the blowup at one point of a complete intersection of three quadrics in P^6"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Structural {
    pub tag: VerdictTag,
    pub rule: Citation,
}

/// A declared configuration that a rule excludes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contradiction {
    pub message: String,
    pub rule: Citation,
}

/// A rule that was considered but does not apply to the inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skipped {
    pub reason: String,
    pub rule: Citation,
}

/// Everything the rule engine derived from the declared hypotheses.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClassificationVerdict {
    pub dim_z_lower_bounds: Vec<DimBound>,
    pub structural: Vec<Structural>,
    pub contradictions: Vec<Contradiction>,
    pub skipped: Vec<Skipped>,
}

impl ClassificationVerdict {
    pub(crate) fn bound(&mut self, bound: DimBound) {
        self.dim_z_lower_bounds.push(bound);
    }

    pub(crate) fn conclude(&mut self, tag: VerdictTag, rule: Citation) {
        self.structural.push(Structural { tag, rule });
    }

    pub(crate) fn contradict(&mut self, message: impl Into<String>, rule: Citation) {
        self.contradictions.push(Contradiction { message: message.into(), rule });
    }

    pub(crate) fn skip(&mut self, reason: impl Into<String>, rule: Citation) {
        self.skipped.push(Skipped { reason: reason.into(), rule });
    }

    /// Largest unconditional integer bound.
    pub fn unconditional_floor(&self) -> Option<i64> {
        self.dim_z_lower_bounds
            .iter()
            .filter(|b| b.condition == BoundCondition::Unconditional)
            .map(|b| b.ceiling)
            .max()
    }

    pub fn has_tag(&self, pred: impl Fn(&VerdictTag) -> bool) -> bool {
        self.structural.iter().any(|s| pred(&s.tag))
    }

    /// Every citation attached to an entry, deduplicated and sorted.
    pub fn citations(&self) -> Vec<Citation> {
        let mut all: Vec<Citation> = self
            .dim_z_lower_bounds
            .iter()
            .map(|b| b.rule)
            .chain(self.structural.iter().map(|s| s.rule))
            .chain(self.contradictions.iter().map(|c| c.rule))
            .collect();
        all.sort();
        all.dedup();
        all
    }
}
