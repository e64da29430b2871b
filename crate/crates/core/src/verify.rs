//! Cross-module consistency suites. Each suite recomputes one relation
//! between independently implemented quantities over a fixed grid.

use num_bigint::BigInt;

use crate::bounds::{castelnuovo_lower_bound, easy_lower_bound, upper_bound_h0, EmbeddedVariety};
use crate::citation::Citation;
use crate::classifier::{classify_at_dim, degenerate_triple_analyze, degree_formula, dim_z_bounds, SubvarietyProfile};
use crate::combinatorics::iterated_castel_sum;
use crate::existence::{divisor_threshold, section_guaranteed, surface_lower_degree, Subvariety};
use crate::oracle::{h0_multidegree, MultiProjective};

/// Failures recorded per suite before the rest are only counted.
const FAILURE_SAMPLE: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub citation: Citation,
    pub cases: u64,
    pub failures: u64,
    pub sample: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

struct Suite {
    report: SuiteReport,
}

impl Suite {
    fn new(name: &'static str, citation: Citation) -> Self {
        Suite { report: SuiteReport { name, citation, cases: 0, failures: 0, sample: Vec::new() } }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.report.cases += 1;
        if !ok {
            self.report.failures += 1;
            if self.report.sample.len() < FAILURE_SAMPLE {
                self.report.sample.push(describe());
            }
        }
    }

    fn done(self) -> SuiteReport {
        self.report
    }
}

/// Closed-form Castelnuovo bound against the iterated sum.
pub fn closed_form_vs_iterated() -> SuiteReport {
    let mut s = Suite::new("closed form = iterated sum", Citation::LemmaCastelL);
    for n in 1..=5i64 {
        for r in 1..=6i64 {
            for d in r + 1..=40 {
                let x = EmbeddedVariety::new(n, r, d).expect("valid grid point");
                for t in 0..=12 {
                    let closed = castelnuovo_lower_bound(&x, t).ok();
                    let brute = iterated_castel_sum(d, r, n as u32, t);
                    s.check(closed.as_ref() == Some(&brute), || format!("n={n} r={r} d={d} t={t}"));
                }
            }
        }
    }
    s.done()
}

/// Surface lower-degree values at the two quoted degrees.
pub fn surface_values() -> SuiteReport {
    let mut s = Suite::new("surface lower degree", Citation::CorLbSurf);
    for (d, want) in [(21, 6), (10_000, 80)] {
        let got = surface_lower_degree(d).ok();
        s.check(got == Some(want), || format!("d={d}: got {got:?}, want {want}"));
    }
    s.done()
}

/// Every applicable bound brackets the true `h^0(tL)` on Segre products.
pub fn segre_sandwich() -> SuiteReport {
    let mut s = Suite::new("easy <= castelnuovo <= h0 <= upper on products", Citation::LemmaUpper);
    let mut configs = Vec::new();
    for n in 1..=5i64 {
        partitions(n, n, &mut Vec::new(), &mut configs);
    }
    for dims in configs {
        let space = MultiProjective::new(dims.clone()).expect("positive dims");
        let x = space.segre_variety().expect("segre invariants");
        for t in 1..=8i64 {
            let h0 = h0_multidegree(&space, &space.segre_class().scaled(t)).expect("matching length");
            let upper = upper_bound_h0(&x, t).expect("valid variety");
            let mut ok = h0 <= upper;
            if x.r >= 1 {
                ok &= castelnuovo_lower_bound(&x, t).is_ok_and(|c| c <= h0);
            }
            if t < x.d {
                ok &= easy_lower_bound(&x, t).is_ok_and(|e| e <= h0);
            }
            s.check(ok, || format!("{dims:?} t={t}"));
        }
    }
    s.done()
}

fn partitions(n: i64, max: i64, current: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if n == 0 {
        out.push(current.clone());
        return;
    }
    for p in (1..=n.min(max)).rev() {
        current.push(p);
        partitions(n - p, p, current, out);
        current.pop();
    }
}

/// `divisor_threshold` is the least `t` at which the section criterion holds
/// for a divisor.
pub fn threshold_matches_criterion() -> SuiteReport {
    let mut s = Suite::new("divisor threshold = least passing t", Citation::PropCastelP);
    for n in 2..=7i64 {
        for r in 1..=8i64 {
            // R = 0, c = 1 profile: the simplified bound is exact here
            let x = EmbeddedVariety::new(n, r, r + 1).expect("valid");
            for delta in 2..30 {
                let y = Subvariety::new(n - 1, delta);
                let want = divisor_threshold(n, r, delta).expect("valid");
                let passes = |t| section_guaranteed(&x, &y, t, false).unwrap_or(false);
                let least = (1..=want.max(1) + 1).find(|&t| passes(t));
                s.check(least == Some(want), || format!("n={n} r={r} delta={delta}: {least:?} vs {want}"));
            }
        }
    }
    s.done()
}

/// Rule-engine guards over `n <= 10`.
pub fn rule_engine_soundness() -> SuiteReport {
    let mut s = Suite::new("dimension rules are sound", Citation::TheoremDimension);
    for n in 2..=10i64 {
        for k in 1..n {
            let plain = SubvarietyProfile::plain(k);
            let v = dim_z_bounds(n, &plain, true, false).expect("valid");
            s.check(v.dim_z_lower_bounds.iter().any(|b| b.ceiling == n - k - 1 && b.rule == Citation::TheoremDimension), || {
                format!("n={n} k={k}: universal bound missing")
            });
            s.check(classify_at_dim(n, &plain, n - k - 2).is_err(), || format!("n={n} k={k}: accepted dim Z below n-k-1"));
            let pic = SubvarietyProfile { pic_rank_one: true, ..plain };
            let v = dim_z_bounds(n, &pic, false, false).expect("valid");
            let flagged = v.contradictions.iter().any(|c| c.rule == Citation::PropBetterB);
            s.check(flagged == (n < 2 * k), || format!("n={n} k={k}: flag {flagged}"));
            let linear = dim_z_bounds(n, &SubvarietyProfile::linear(k), true, false).expect("valid");
            s.check(linear.dim_z_lower_bounds.iter().all(|b| b.ceiling <= n), || format!("n={n} k={k}: bound above n"));
        }
    }
    s.done()
}

/// Degenerate-triple arithmetic: pairs multiply out, no even-`s` pair has
/// fiber degree 2, and the degree sum form matches the closed form.
pub fn triple_arithmetic() -> SuiteReport {
    let mut s = Suite::new("degenerate triple arithmetic", Citation::PropKn1);
    for n in 2..=6i64 {
        for sv in 0..=10i64 {
            let a = degenerate_triple_analyze(n, sv).expect("valid");
            let product = num_traits::pow(BigInt::from(sv + 1), (n - 1) as usize);
            for t in a.triples() {
                s.check(&t.fiber_deg * &t.base_deg == product, || format!("n={n} s={sv}: product"));
                s.check(sv % 2 != 0 || t.fiber_deg != BigInt::from(2), || format!("n={n} s={sv}: fiber 2"));
            }
        }
    }
    for n in 1..=20i64 {
        for sv in 1..=20i64 {
            let d = degree_formula(n, sv).expect("valid");
            s.check(d * sv + 1 == num_traits::pow(BigInt::from(sv + 1), n as usize), || format!("n={n} s={sv}"));
        }
    }
    s.done()
}

pub fn all_suites() -> Vec<SuiteReport> {
    vec![
        closed_form_vs_iterated(),
        surface_values(),
        segre_sandwich(),
        threshold_matches_criterion(),
        rule_engine_soundness(),
        triple_arithmetic(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes() {
        for r in all_suites() {
            assert!(r.passed(), "{}: {:?}", r.name, r.sample);
            assert!(r.cases > 0);
        }
    }

    #[test]
    fn partitions_of_five() {
        let mut out = Vec::new();
        partitions(5, 5, &mut Vec::new(), &mut out);
        assert_eq!(out.len(), 7);
    }
}
