use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use super::verdict::{ClassificationVerdict, DimBound, BoundCondition, Structural, VerdictTag};
use crate::citation::Citation;
use crate::combinatorics::{binom, BigInteger};
use crate::error::{require, Error, Result};

/// Refuse to enumerate more divisor pairs than this.
pub const MAX_PAIRS: u64 = 100_000;
/// Keeps trial-division factoring of `s + 1` fast.
pub const MAX_TWIST: i64 = 1_000_000_000_000;

/// A `P^{n-1}`-degenerate triple: `P ⊂ X` with normal bundle `O(-s)`,
/// projection of fiber degree `fiber_deg` onto a base of degree `base_deg`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegenerateTriple {
    pub n: i64,
    pub s: i64,
    pub fiber_deg: BigInteger,
    pub base_deg: BigInteger,
}

/// A pair `(fiber_deg, base_deg)` that no rule excludes, with the
/// conclusions attached to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurvivingPair {
    pub triple: DegenerateTriple,
    pub verdicts: Vec<Structural>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleAnalysis {
    pub degree: BigInteger,
    pub pairs: Vec<SurvivingPair>,
    /// Pairs allowed by `fiber_deg · base_deg = (s+1)^{n-1}` but ruled out.
    pub excluded: Vec<(DegenerateTriple, Citation)>,
    pub verdicts: ClassificationVerdict,
}

impl TripleAnalysis {
    pub fn triples(&self) -> impl Iterator<Item = &DegenerateTriple> {
        self.pairs.iter().map(|p| &p.triple)
    }

    /// `(fiber_deg, base_deg)` for each surviving pair, by increasing fiber degree.
    pub fn degree_pairs(&self) -> Vec<(BigInteger, BigInteger)> {
        self.triples().map(|t| (t.fiber_deg.clone(), t.base_deg.clone())).collect()
    }
}

/// `L^n = Σ_{j=1}^n C(n,j) s^{j-1}`.
pub fn degree_formula(n: i64, s: i64) -> Result<BigInteger> {
    require(n >= 1, "n >= 1")?;
    require(s >= 0, "s >= 0")?;
    let s = BigInt::from(s);
    let mut power = BigInt::one();
    let mut total = BigInt::zero();
    for j in 1..=n {
        total += binom(n, j) * &power;
        power *= &s;
    }
    Ok(total)
}

/// `((s+1)^n - 1)/s`, and `n` at `s = 0`.
pub fn degree_closed_form(n: i64, s: i64) -> Result<BigInteger> {
    require(n >= 1, "n >= 1")?;
    require(s >= 0, "s >= 0")?;
    if s == 0 {
        return Ok(BigInt::from(n));
    }
    let exp = u32::try_from(n).map_err(|_| Error::Domain("n too large".into()))?;
    Ok((BigInt::from(s + 1).pow(exp) - 1) / s)
}

fn factor(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// All divisors of `base^exp`, ascending.
fn divisors_of_power(base: u64, exp: u32) -> Result<Vec<BigInteger>> {
    let primes = factor(base);
    let count = primes
        .iter()
        .try_fold(1u64, |acc, &(_, e)| acc.checked_mul(u64::from(e) * u64::from(exp) + 1))
        .filter(|&c| c <= MAX_PAIRS)
        .ok_or_else(|| Error::Domain(format!("more than {MAX_PAIRS} divisor pairs")))?;
    let mut divs = Vec::with_capacity(count as usize);
    divs.push(BigInt::one());
    for (p, e) in primes {
        let p = BigInt::from(p);
        let current = divs.clone();
        let mut power = BigInt::one();
        for _ in 0..e * exp {
            power *= &p;
            divs.extend(current.iter().map(|d| d * &power));
        }
    }
    divs.sort();
    Ok(divs)
}

/// Degree, admissible `(fiber_deg, base_deg)` pairs, and structure of a
/// `P^{n-1}`-degenerate triple with normal bundle `O(-s)`.
pub fn degenerate_triple_analyze(n: i64, s: i64) -> Result<TripleAnalysis> {
    require(n >= 2, "n >= 2")?;
    require(s >= -1, "s >= -1")?;
    require(s <= MAX_TWIST, "s <= 10^12")?;
    let mut verdicts = ClassificationVerdict::default();
    if s == -1 {
        verdicts.conclude(VerdictTag::ProjectiveSpace { n }, Citation::PropKn1);
        return Ok(TripleAnalysis { degree: BigInt::one(), pairs: Vec::new(), excluded: Vec::new(), verdicts });
    }
    let exp = u32::try_from(n - 1).map_err(|_| Error::Domain("n too large".into()))?;
    let fibers = divisors_of_power((s + 1) as u64, exp)?;
    let degree = degree_formula(n, s)?;
    // the projection from P has an (n-1)-dimensional image
    verdicts.bound(DimBound::integer(n - 1, BoundCondition::Unconditional, Citation::PropKn1));
    if s == 0 {
        verdicts.conclude(VerdictTag::SegreProduct { n }, Citation::CorExCor);
    }

    let product = BigInt::from(s + 1).pow(exp);
    let mut pairs = Vec::new();
    let mut excluded = Vec::new();
    for fiber in fibers {
        let triple = DegenerateTriple { n, s, base_deg: &product / &fiber, fiber_deg: fiber };
        let is_one = triple.fiber_deg.is_one();
        let two = triple.fiber_deg == BigInt::from(2);
        if n == 3 && s == 1 && !is_one && triple.fiber_deg != BigInt::from(4) {
            excluded.push((triple, Citation::TheoremThreer1));
            continue;
        }
        if n == 3 && s >= 2 && two {
            excluded.push((triple, Citation::TheoremCaset2));
            continue;
        }
        let mut notes = Vec::new();
        if is_one {
            notes.push(Structural { tag: VerdictTag::ProjectiveBundle { s }, rule: Citation::PropExTh });
        } else if s == 1 {
            notes.push(Structural { tag: VerdictTag::FirstReductionMayContractP, rule: Citation::TheoremMoreAdj });
            if n == 3 {
                notes.push(Structural { tag: VerdictTag::BlownUpQuadricIntersection, rule: Citation::TheoremThreer1 });
            }
        } else if n >= 3 {
            notes.push(Structural { tag: VerdictTag::OwnFirstReduction, rule: Citation::TheoremMoreAdj });
        }
        pairs.push(SurvivingPair { triple, verdicts: notes });
    }
    for (t, rule) in &excluded {
        verdicts.contradict(format!("fiber degree {} is impossible for n = {n}, s = {s}", t.fiber_deg), *rule);
    }
    Ok(TripleAnalysis { degree, pairs, excluded, verdicts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pairs(n: i64, s: i64) -> Vec<(i64, i64)> {
        degenerate_triple_analyze(n, s)
            .unwrap()
            .degree_pairs()
            .into_iter()
            .map(|(a, b)| (i64::try_from(a).unwrap(), i64::try_from(b).unwrap()))
            .collect()
    }

    #[test]
    fn degree_examples() {
        assert_eq!(degree_formula(3, 1).unwrap(), BigInt::from(7));
        assert_eq!(degree_formula(6, 0).unwrap(), BigInt::from(6));
        assert_eq!(degree_formula(2, 3).unwrap(), BigInt::from(5));
        assert_eq!(degree_closed_form(2, 3).unwrap(), BigInt::from(5));
    }

    #[test]
    fn closed_form_identity() {
        for n in 1..=20 {
            for s in 0..=20 {
                let d = degree_formula(n, s).unwrap();
                assert_eq!(d, degree_closed_form(n, s).unwrap());
                assert_eq!(&d * s + 1, BigInt::from(s + 1).pow(n as u32));
            }
        }
    }

    #[test]
    fn threefold_s1() {
        let a = degenerate_triple_analyze(3, 1).unwrap();
        assert_eq!(a.degree, BigInt::from(7));
        assert_eq!(pairs(3, 1), vec![(1, 4), (4, 1)]);
        assert_eq!(a.excluded.len(), 1);
        assert_eq!(a.excluded[0].1, Citation::TheoremThreer1);
        let four = &a.pairs[1];
        assert!(four.verdicts.iter().any(|v| v.tag == VerdictTag::BlownUpQuadricIntersection));
    }

    #[test]
    fn threefold_s2() {
        let a = degenerate_triple_analyze(3, 2).unwrap();
        assert_eq!(a.degree, BigInt::from(13));
        assert_eq!(pairs(3, 2), vec![(1, 9), (3, 3), (9, 1)]);
        assert!(a.excluded.is_empty());
        // s = 3: (s+1)^2 = 16 has a fiber-degree-2 pair to remove
        let a = degenerate_triple_analyze(3, 3).unwrap();
        assert_eq!(pairs(3, 3), vec![(1, 16), (4, 4), (8, 2), (16, 1)]);
        assert_eq!(a.excluded[0].1, Citation::TheoremCaset2);
    }

    #[test]
    fn s_zero_is_segre_product() {
        for n in 2..=6 {
            let a = degenerate_triple_analyze(n, 0).unwrap();
            assert_eq!(a.degree, BigInt::from(n));
            assert_eq!(pairs(n, 0), vec![(1, 1)]);
            assert!(a.verdicts.has_tag(|t| *t == VerdictTag::SegreProduct { n }));
        }
    }

    #[test]
    fn s_minus_one_is_projective_space() {
        let a = degenerate_triple_analyze(4, -1).unwrap();
        assert_eq!(a.degree, BigInt::one());
        assert!(a.pairs.is_empty());
        assert_eq!(a.verdicts.structural.len(), 1);
        assert!(degenerate_triple_analyze(4, -2).is_err());
    }

    #[test]
    fn pair_count_matches_divisor_count() {
        // 12^4 = 2^8 3^4 has 9 * 5 divisors
        assert_eq!(pairs(5, 11).len(), 45);
    }

    #[test]
    fn refuses_huge_enumeration() {
        assert!(degenerate_triple_analyze(200_000, 1).is_err());
    }

    proptest! {
        #[test]
        fn pairs_multiply_out(n in 2i64..8, s in 0i64..40) {
            let a = degenerate_triple_analyze(n, s).unwrap();
            let product = BigInt::from(s + 1).pow((n - 1) as u32);
            for t in a.triples().chain(a.excluded.iter().map(|(t, _)| t)) {
                prop_assert_eq!(&t.fiber_deg * &t.base_deg, product.clone());
            }
            if s % 2 == 0 {
                prop_assert!(a.triples().all(|t| t.fiber_deg != BigInt::from(2)));
            }
        }
    }
}
