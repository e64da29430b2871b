use super::dimension::SubvarietyProfile;
use super::verdict::{Structural, VerdictTag};
use crate::citation::Citation;
use crate::error::{require, Result};

/// Lower bound `n - 2 - k` on the index of the first vanishing Chern class
/// of the normal bundle of a linear `P^k`.
pub fn chern_bound(n: i64, k: i64) -> Result<i64> {
    require(k >= 1 && k < n, "1 <= k <= n - 1")?;
    Ok(n - 2 - k)
}

/// The pairs `(X, L)` for which `K_X + (n-1)L` is not spanned at a generic
/// point of a linear `P^k`, restricted to those compatible with `k`.
pub fn adjoint_exceptions(n: i64, y: &SubvarietyProfile) -> Result<Vec<Structural>> {
    y.validate(n)?;
    require(y.is_linear_pk, "Y must be a linear P^k")?;
    let k = y.k;
    let mut out = vec![Structural {
        tag: VerdictTag::ProjectiveSpaceException { dim_z: n - k - 1 },
        rule: Citation::TheoremEasy,
    }];
    if 2 * k <= n {
        out.push(Structural { tag: VerdictTag::QuadricException { dim_z: n - k }, rule: Citation::TheoremEasy });
    }
    if k == 1 {
        out.push(Structural { tag: VerdictTag::ScrollSectionException, rule: Citation::TheoremEasy });
    }
    if k == n - 1 {
        out.push(Structural { tag: VerdictTag::SegreScrollException, rule: Citation::TheoremEasy });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chern_examples() {
        assert_eq!(chern_bound(5, 2).unwrap(), 1);
        assert_eq!(chern_bound(3, 1).unwrap(), 0);
        assert_eq!(chern_bound(10, 3).unwrap(), 5);
        assert_eq!(chern_bound(3, 2).unwrap(), -1);
        assert!(chern_bound(3, 3).is_err());
    }

    #[test]
    fn adjoint_case_counts() {
        let tags = |n, k| {
            adjoint_exceptions(n, &SubvarietyProfile::linear(k))
                .unwrap()
                .into_iter()
                .map(|s| s.tag)
                .collect::<Vec<_>>()
        };
        // curve in a surface: P^2, quadric, scroll with section and Segre scroll all possible
        assert_eq!(tags(2, 1).len(), 4);
        assert_eq!(
            tags(6, 4),
            vec![VerdictTag::ProjectiveSpaceException { dim_z: 1 }]
        );
        assert!(tags(6, 3).contains(&VerdictTag::QuadricException { dim_z: 3 }));
        assert!(tags(6, 5).contains(&VerdictTag::SegreScrollException));
        assert_eq!(
            tags(4, 3),
            vec![VerdictTag::ProjectiveSpaceException { dim_z: 0 }, VerdictTag::SegreScrollException]
        );
        assert_eq!(
            tags(3, 1),
            vec![
                VerdictTag::ProjectiveSpaceException { dim_z: 1 },
                VerdictTag::QuadricException { dim_z: 2 },
                VerdictTag::ScrollSectionException,
            ]
        );
        assert!(tags(5, 2).contains(&VerdictTag::QuadricException { dim_z: 3 }));
    }

    #[test]
    fn requires_linear() {
        assert!(adjoint_exceptions(4, &SubvarietyProfile::plain(2)).is_err());
    }
}
