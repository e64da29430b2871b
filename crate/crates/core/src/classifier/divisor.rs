use super::verdict::{ClassificationVerdict, VerdictTag};
use crate::bounds::EmbeddedVariety;
use crate::citation::Citation;
use crate::error::{require, Error, Result};
use crate::existence::Subvariety;

/// Positivity of `δL - D` for an effective divisor `D` of degree `δ`.
///
/// With `assume_castelnuovo` set, the Castelnuovo-type refinement for
/// `(δ-q+1)L - D` is added; that branch needs the span codimension `q`.
pub fn divisor_rules(
    x: &EmbeddedVariety,
    d: &Subvariety,
    assume_castelnuovo: bool,
) -> Result<ClassificationVerdict> {
    require(x.n >= 2, "n >= 2")?;
    require(d.k == x.n - 1, "D must be a divisor (k = n - 1)")?;
    d.validate_in(x)?;
    let (n, r, delta) = (x.n, x.r, d.delta);
    let mut v = ClassificationVerdict::default();

    // r = 0 means X = P^n embedded by O(1), which is the excluded triple.
    let exception_possible = r == 0;
    v.conclude(VerdictTag::OneAmple { exception_possible }, Citation::TheoremOneAmple);

    if delta == 1 {
        v.skip("requires delta > 1", Citation::TheoremProperties);
    } else if exception_possible {
        v.skip("(X,L,D) = (P^n, O(1), O(delta)) is excluded", Citation::TheoremProperties);
    } else {
        v.conclude(VerdictTag::Birational, Citation::TheoremProperties);
        if n >= r + 2 {
            v.conclude(VerdictTag::VeryAmple, Citation::TheoremProperties);
        } else {
            v.skip("very ampleness needs n >= r + 2", Citation::TheoremProperties);
        }
    }

    if assume_castelnuovo {
        let q = d.q.ok_or_else(|| {
            Error::Domain("the Castelnuovo refinement needs the span codimension q".into())
        })?;
        if delta == 1 {
            v.skip("requires delta > 1", Citation::PropPropertiesCast);
        } else if n >= r + 2 {
            v.conclude(
                VerdictTag::CastelnuovoVeryAmple { exception_possible },
                Citation::PropPropertiesCast,
            );
        } else if q == r + 1 && (n == r + 1 || delta == r + 2) {
            v.conclude(VerdictTag::CastelnuovoExceptional, Citation::PropPropertiesCast);
        } else {
            v.conclude(VerdictTag::CastelnuovoBirational, Citation::PropPropertiesCast);
        }
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: i64, r: i64, d: i64) -> EmbeddedVariety {
        EmbeddedVariety::new(n, r, d).unwrap()
    }

    #[test]
    fn very_ample_when_codim_small() {
        let v = divisor_rules(&x(5, 2, 10), &Subvariety::new(4, 3), false).unwrap();
        assert!(v.has_tag(|t| *t == VerdictTag::OneAmple { exception_possible: false }));
        assert!(v.has_tag(|t| *t == VerdictTag::Birational));
        assert!(v.has_tag(|t| *t == VerdictTag::VeryAmple));
    }

    #[test]
    fn birational_only_when_codim_large() {
        let v = divisor_rules(&x(3, 2, 10), &Subvariety::new(2, 3), false).unwrap();
        assert!(v.has_tag(|t| *t == VerdictTag::Birational));
        assert!(!v.has_tag(|t| *t == VerdictTag::VeryAmple));
    }

    #[test]
    fn delta_one_keeps_one_ampleness() {
        let v = divisor_rules(&x(3, 2, 10), &Subvariety::new(2, 1), false).unwrap();
        assert!(v.has_tag(|t| matches!(t, VerdictTag::OneAmple { .. })));
        assert!(!v.has_tag(|t| *t == VerdictTag::Birational));
        assert!(v.skipped.iter().any(|s| s.rule == Citation::TheoremProperties));
    }

    #[test]
    fn projective_space_exception() {
        let v = divisor_rules(&x(3, 0, 1), &Subvariety::new(2, 4), false).unwrap();
        assert!(v.has_tag(|t| *t == VerdictTag::OneAmple { exception_possible: true }));
        assert!(!v.has_tag(|t| *t == VerdictTag::Birational));
    }

    #[test]
    fn castelnuovo_branch() {
        // q = r + 1 = 3, n = r + 1 = 3: exceptional
        let d = Subvariety::new(2, 5).with_span_codim(3);
        let v = divisor_rules(&x(3, 2, 10), &d, true).unwrap();
        assert!(v.has_tag(|t| *t == VerdictTag::CastelnuovoExceptional));
        // n < r + 1 with delta = r + 2
        let d = Subvariety::new(2, 5).with_span_codim(4);
        let v = divisor_rules(&x(3, 3, 10), &d, true).unwrap();
        assert!(v.has_tag(|t| *t == VerdictTag::CastelnuovoExceptional));
        let d = Subvariety::new(2, 6).with_span_codim(4);
        let v = divisor_rules(&x(3, 3, 10), &d, true).unwrap();
        assert!(v.has_tag(|t| *t == VerdictTag::CastelnuovoBirational));
        let d = Subvariety::new(2, 5).with_span_codim(2);
        let v = divisor_rules(&x(3, 2, 10), &d, true).unwrap();
        assert!(v.has_tag(|t| *t == VerdictTag::CastelnuovoBirational));
        let d = Subvariety::new(4, 5).with_span_codim(1);
        let v = divisor_rules(&x(5, 2, 10), &d, true).unwrap();
        assert!(v.has_tag(|t| matches!(t, VerdictTag::CastelnuovoVeryAmple { .. })));
    }

    #[test]
    fn castelnuovo_branch_needs_q() {
        assert!(divisor_rules(&x(3, 2, 10), &Subvariety::new(2, 5), true).is_err());
    }

    #[test]
    fn rejects_non_divisor() {
        assert!(divisor_rules(&x(4, 2, 10), &Subvariety::new(2, 5), false).is_err());
    }
}
