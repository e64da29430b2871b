//! Named worked examples, loaded from a TOML file and recomputed on demand.
//!
//! The bundled file is `fixtures/fixtures.toml`; setting `PROJBOUND_FIXTURES`
//! to a path replaces it.

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use serde::Deserialize;

use crate::bounds::EmbeddedVariety;
use crate::citation::Citation;
use crate::classifier::{
    classify_at_dim, degenerate_triple_analyze, degree_closed_form, degree_formula, divisor_rules,
    SubvarietyProfile, VerdictTag,
};
use crate::combinatorics::{binom, BigInteger};
use crate::error::{Error, Result};
use crate::existence::{divisor_threshold, min_t_guaranteed, Subvariety};
use crate::oracle::{h0_multidegree, intersection_number, segre_degree, MultiProjective, Multidegree};

pub const FIXTURES_ENV: &str = "PROJBOUND_FIXTURES";

const BUNDLED: &str = include_str!("../fixtures/fixtures.toml");

#[derive(Debug, Clone, Deserialize)]
struct FixtureFile {
    #[serde(default)]
    fixture: Vec<FixtureRecord>,
}

/// One fixture instance as stored on disk.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureRecord {
    pub name: String,
    #[serde(default)]
    pub instance: Option<String>,
    pub citation: String,
    #[serde(default)]
    pub factor_dims: Option<Vec<i64>>,
    #[serde(default)]
    pub bundles: BTreeMap<String, Vec<i64>>,
    #[serde(default)]
    pub invariants: BTreeMap<String, i64>,
    #[serde(default)]
    pub expected: Vec<Expected>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Expected {
    #[serde(flatten)]
    pub check: Check,
    pub value: ExpectedValue,
    #[serde(default)]
    pub citation: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum ExpectedValue {
    Bool(bool),
    Int(i64),
    Text(String),
}

impl ExpectedValue {
    pub fn render(&self) -> String {
        match self {
            ExpectedValue::Bool(b) => b.to_string(),
            ExpectedValue::Int(i) => i.to_string(),
            ExpectedValue::Text(s) => s.clone(),
        }
    }
}

/// What to recompute. Bundle expressions are sums of named classes with
/// integer coefficients, e.g. `2L-D`; a coefficient `t` is bound by the check.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Check {
    /// `L^n`.
    Degree,
    /// `O(1,...,1)^n`.
    SegreDegree,
    Intersection { classes: Vec<String> },
    H0 { bundle: String },
    /// Least `t >= 0` with `h^0 > 0`; it must stay positive up to `t_max`.
    FirstPositiveH0 { bundle: String, t_max: i64 },
    /// `r = h^0(L) - 1 - n`.
    EmbeddingCodim,
    /// `δ = L^{n-1} · D`.
    DivisorDegree,
    /// `q = h^0(L) - h^0(L-D) - n`, the codimension of `D` in its span.
    SpanCodim,
    /// `q - r`.
    SpanCodimMinusCodim,
    DivisorThreshold,
    MinTGuaranteed,
    CastelnuovoExceptional,
    DegreeFormula { n: i64, s: i64 },
    DegreeClosedForm { n: i64, s: i64 },
    /// Base degree paired with `fiber`, among the surviving pairs.
    TripleBaseDegree { n: i64, s: i64, fiber: i64 },
    /// Every `h >= 1` with `C(h+n-1, n-1) <= n`.
    BaseDegreeForced { n: i64 },
    HypersurfaceVerdict { n: i64, k: i64, dim_z: i64 },
}

impl Check {
    pub fn describe(&self) -> String {
        match self {
            Check::Degree => "L^n".into(),
            Check::SegreDegree => "segre degree".into(),
            Check::Intersection { classes } => classes.join(" . "),
            Check::H0 { bundle } => format!("h0({bundle})"),
            Check::FirstPositiveH0 { bundle, .. } => format!("least t with h0({bundle}) > 0"),
            Check::EmbeddingCodim => "r".into(),
            Check::DivisorDegree => "delta = L^(n-1) . D".into(),
            Check::SpanCodim => "q".into(),
            Check::SpanCodimMinusCodim => "q - r".into(),
            Check::DivisorThreshold => "divisor threshold".into(),
            Check::MinTGuaranteed => "least guaranteed t".into(),
            Check::CastelnuovoExceptional => "castelnuovo exceptional case".into(),
            Check::DegreeFormula { n, s } => format!("degree sum form (n={n}, s={s})"),
            Check::DegreeClosedForm { n, s } => format!("degree closed form (n={n}, s={s})"),
            Check::TripleBaseDegree { n, s, fiber } => {
                format!("base degree at fiber degree {fiber} (n={n}, s={s})")
            }
            Check::BaseDegreeForced { n } => format!("base degrees h with C(h+{}, {}) <= {n}", n - 1, n - 1),
            Check::HypersurfaceVerdict { n, k, dim_z } => {
                format!("hypersurface verdict (n={n}, k={k}, dim Z={dim_z})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub quantity: String,
    pub citation: String,
    pub expected: String,
    /// The recomputed value, or the error that prevented it.
    pub actual: std::result::Result<String, String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        matches!(&self.actual, Ok(a) if *a == self.expected)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureReport {
    pub name: String,
    pub instance: Option<String>,
    pub citation: String,
    pub checks: Vec<CheckOutcome>,
}

impl FixtureReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn title(&self) -> String {
        match &self.instance {
            Some(i) => format!("{} [{i}]", self.name),
            None => self.name.clone(),
        }
    }
}

fn to_i64(v: &BigInteger, what: &str) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::FixtureFormat(format!("{what} does not fit in i64")))
}

/// Parses `2L-D`, `tL - D`, `L`, ... into a multidegree.
fn parse_class(expr: &str, bundles: &BTreeMap<String, Vec<i64>>, t: Option<i64>, len: usize) -> Result<Multidegree> {
    let bad = |why: &str| Error::FixtureFormat(format!("bundle expression {expr:?}: {why}"));
    let chars: Vec<char> = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(bad("empty"));
    }
    let mut total = Multidegree::zero(len);
    let mut i = 0;
    while i < chars.len() {
        let mut sign = 1;
        if chars[i] == '+' || chars[i] == '-' {
            if chars[i] == '-' {
                sign = -1;
            }
            i += 1;
        } else if i > 0 {
            return Err(bad("expected + or -"));
        }
        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let mut coef: i64 = if start == i {
            1
        } else {
            chars[start..i].iter().collect::<String>().parse().map_err(|_| bad("coefficient"))?
        };
        if i < chars.len() && chars[i] == 't' {
            coef *= t.ok_or_else(|| bad("t is not bound here"))?;
            i += 1;
        }
        let start = i;
        while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
            i += 1;
        }
        let name: String = chars[start..i].iter().collect();
        let degrees = bundles.get(&name).ok_or_else(|| bad(&format!("unknown bundle {name:?}")))?;
        total = &total + &Multidegree::new(degrees.clone()).scaled(sign * coef);
    }
    Ok(total)
}

struct Context<'a> {
    rec: &'a FixtureRecord,
    space: Option<MultiProjective>,
}

impl<'a> Context<'a> {
    fn new(rec: &'a FixtureRecord) -> Result<Self> {
        let space = match &rec.factor_dims {
            Some(dims) => Some(
                MultiProjective::new(dims.clone())
                    .map_err(|e| Error::FixtureFormat(format!("{}: {e}", rec.name)))?,
            ),
            None => None,
        };
        Ok(Context { rec, space })
    }

    fn space(&self) -> Result<&MultiProjective> {
        self.space
            .as_ref()
            .ok_or_else(|| Error::FixtureFormat(format!("{} has no factor_dims", self.rec.name)))
    }

    fn class(&self, expr: &str, t: Option<i64>) -> Result<Multidegree> {
        let len = self.space()?.factor_dims().len();
        parse_class(expr, &self.rec.bundles, t, len)
    }

    fn declared(&self, key: &str) -> Result<BigInteger> {
        self.rec
            .invariants
            .get(key)
            .map(|&v| BigInt::from(v))
            .ok_or_else(|| Error::FixtureFormat(format!("{} declares no {key}", self.rec.name)))
    }

    fn h0(&self, expr: &str) -> Result<BigInteger> {
        h0_multidegree(self.space()?, &self.class(expr, None)?)
    }

    fn n(&self) -> Result<i64> {
        match &self.space {
            Some(s) => Ok(s.dim()),
            None => to_i64(&self.declared("n")?, "n"),
        }
    }

    fn h0_l(&self) -> Result<BigInteger> {
        match self.space {
            Some(_) => self.h0("L"),
            None => self.declared("h0_L"),
        }
    }

    fn h0_l_minus_d(&self) -> Result<BigInteger> {
        match self.space {
            Some(_) => self.h0("L-D"),
            None => self.declared("h0_L_minus_D"),
        }
    }

    fn intersect(&self, exprs: &[&str]) -> Result<BigInteger> {
        let classes = exprs.iter().map(|e| self.class(e, None)).collect::<Result<Vec<_>>>()?;
        intersection_number(self.space()?, &classes)
    }

    fn degree(&self) -> Result<BigInteger> {
        match self.space {
            Some(_) => self.intersect(&vec!["L"; self.n()? as usize]),
            None => self.declared("d"),
        }
    }

    fn delta(&self) -> Result<BigInteger> {
        match self.space {
            Some(_) => {
                let mut exprs = vec!["L"; self.n()? as usize - 1];
                exprs.push("D");
                self.intersect(&exprs)
            }
            None => self.declared("delta"),
        }
    }

    fn r(&self) -> Result<BigInteger> {
        Ok(self.h0_l()? - 1 - self.n()?)
    }

    fn q(&self) -> Result<BigInteger> {
        Ok(self.h0_l()? - self.h0_l_minus_d()? - self.n()?)
    }

    fn variety(&self) -> Result<EmbeddedVariety> {
        EmbeddedVariety::new(self.n()?, to_i64(&self.r()?, "r")?, to_i64(&self.degree()?, "d")?)
    }

    fn divisor(&self) -> Result<Subvariety> {
        Ok(Subvariety::new(self.n()? - 1, to_i64(&self.delta()?, "delta")?))
    }

    fn eval(&self, check: &Check) -> Result<String> {
        Ok(match check {
            Check::Degree => self.degree()?.to_string(),
            Check::SegreDegree => segre_degree(self.space()?).to_string(),
            Check::Intersection { classes } => {
                let exprs: Vec<&str> = classes.iter().map(String::as_str).collect();
                self.intersect(&exprs)?.to_string()
            }
            Check::H0 { bundle } => self.h0(bundle)?.to_string(),
            Check::FirstPositiveH0 { bundle, t_max } => {
                let positive = |t| -> Result<bool> {
                    Ok(h0_multidegree(self.space()?, &self.class(bundle, Some(t))?)? > BigInt::from(0))
                };
                let mut first = None;
                for t in 0..=*t_max {
                    match (first, positive(t)?) {
                        (None, true) => first = Some(t),
                        (Some(f), false) => {
                            return Ok(format!("not monotone: positive at {f}, zero at {t}"))
                        }
                        _ => {}
                    }
                }
                first.map_or_else(|| "none".to_string(), |t| t.to_string())
            }
            Check::EmbeddingCodim => self.r()?.to_string(),
            Check::DivisorDegree => self.delta()?.to_string(),
            Check::SpanCodim => self.q()?.to_string(),
            Check::SpanCodimMinusCodim => (self.q()? - self.r()?).to_string(),
            Check::DivisorThreshold => {
                let x = self.variety()?;
                divisor_threshold(x.n, x.r, self.divisor()?.delta)?.to_string()
            }
            Check::MinTGuaranteed => min_t_guaranteed(&self.variety()?, &self.divisor()?, false)?.t.to_string(),
            Check::CastelnuovoExceptional => {
                let d = self.divisor()?.with_span_codim(to_i64(&self.q()?, "q")?);
                let v = divisor_rules(&self.variety()?, &d, true)?;
                v.has_tag(|t| *t == VerdictTag::CastelnuovoExceptional).to_string()
            }
            Check::DegreeFormula { n, s } => degree_formula(*n, *s)?.to_string(),
            Check::DegreeClosedForm { n, s } => degree_closed_form(*n, *s)?.to_string(),
            Check::TripleBaseDegree { n, s, fiber } => {
                let a = degenerate_triple_analyze(*n, *s)?;
                let fiber = BigInt::from(*fiber);
                let base = a
                    .triples()
                    .find(|t| t.fiber_deg == fiber)
                    .map_or_else(|| "absent".to_string(), |t| t.base_deg.to_string());
                base
            }
            Check::BaseDegreeForced { n } => {
                // C(h+n-1, n-1) grows with h, so h <= n bounds the search
                let ok: Vec<String> = (1..=(*n).max(1))
                    .filter(|&h| binom(h + n - 1, n - 1) <= BigInt::from(*n))
                    .map(|h| h.to_string())
                    .collect();
                ok.join(",")
            }
            Check::HypersurfaceVerdict { n, k, dim_z } => {
                let v = classify_at_dim(*n, &SubvarietyProfile::linear(*k), *dim_z)?;
                (v.has_tag(|t| *t == VerdictTag::Hypersurface { ambient: n + 1 }) && v.contradictions.is_empty())
                    .to_string()
            }
        })
    }
}

fn run_record(rec: &FixtureRecord) -> FixtureReport {
    let ctx = Context::new(rec);
    let checks = rec
        .expected
        .iter()
        .map(|e| CheckOutcome {
            quantity: e.check.describe(),
            citation: e.citation.clone().unwrap_or_else(|| rec.citation.clone()),
            expected: e.value.render(),
            actual: ctx
                .as_ref()
                .map_err(|err| err.to_string())
                .and_then(|c| c.eval(&e.check).map_err(|err| err.to_string())),
        })
        .collect();
    FixtureReport { name: rec.name.clone(), instance: rec.instance.clone(), citation: rec.citation.clone(), checks }
}

/// The set of registered fixtures. Immutable once loaded.
#[derive(Debug, Clone)]
pub struct Registry {
    records: Vec<FixtureRecord>,
}

impl Registry {
    pub fn bundled() -> Self {
        Registry::from_toml(BUNDLED).expect("bundled fixtures parse")
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let file: FixtureFile = toml::from_str(text).map_err(|e| Error::FixtureFormat(e.to_string()))?;
        for rec in &file.fixture {
            let labels = std::iter::once(&rec.citation).chain(rec.expected.iter().filter_map(|e| e.citation.as_ref()));
            for label in labels {
                if Citation::from_label(label).is_none() {
                    return Err(Error::FixtureFormat(format!("{}: unknown citation {label:?}", rec.name)));
                }
            }
            if let Some(dims) = &rec.factor_dims {
                if let Some((b, _)) = rec.bundles.iter().find(|(_, v)| v.len() != dims.len()) {
                    return Err(Error::FixtureFormat(format!(
                        "{}: bundle {b} has the wrong number of entries",
                        rec.name
                    )));
                }
            }
        }
        Ok(Registry { records: file.fixture })
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::FixtureFormat(format!("{}: {e}", path.display())))?;
        Registry::from_toml(&text)
    }

    /// The file named by `PROJBOUND_FIXTURES`, or the bundled one.
    pub fn load() -> Result<Self> {
        match std::env::var_os(FIXTURES_ENV) {
            Some(path) => Registry::from_path(Path::new(&path)),
            None => Ok(Registry::bundled()),
        }
    }

    pub fn records(&self) -> &[FixtureRecord] {
        &self.records
    }

    /// Distinct fixture names in file order.
    pub fn names(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for r in &self.records {
            if !out.contains(&r.name.as_str()) {
                out.push(&r.name);
            }
        }
        out
    }

    /// Runs every instance registered under `name`.
    pub fn run(&self, name: &str) -> Result<Vec<FixtureReport>> {
        let reports: Vec<_> = self.records.iter().filter(|r| r.name == name).map(run_record).collect();
        if reports.is_empty() {
            return Err(Error::UnknownFixture(name.to_string()));
        }
        Ok(reports)
    }

    pub fn run_all(&self) -> Vec<FixtureReport> {
        self.records.iter().map(run_record).collect()
    }
}

/// Runs a fixture from the default registry.
pub fn run_fixture(name: &str) -> Result<Vec<FixtureReport>> {
    Registry::load()?.run(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bundles() -> BTreeMap<String, Vec<i64>> {
        [("L".to_string(), vec![1, 1]), ("D".to_string(), vec![2, 0])].into_iter().collect()
    }

    #[test]
    fn parses_expressions() {
        let b = bundles();
        assert_eq!(parse_class("2L-D", &b, None, 2).unwrap().degrees, vec![0, 2]);
        assert_eq!(parse_class(" t L - D ", &b, Some(5), 2).unwrap().degrees, vec![3, 5]);
        assert_eq!(parse_class("-D+3L", &b, None, 2).unwrap().degrees, vec![1, 3]);
        assert!(parse_class("tL", &b, None, 2).is_err());
        assert!(parse_class("E", &b, None, 2).is_err());
        assert!(parse_class("", &b, None, 2).is_err());
        assert!(parse_class("L D", &b, None, 2).is_err());
    }

    #[test]
    fn bundled_fixtures_pass() {
        let reg = Registry::bundled();
        assert_eq!(reg.names(), vec!["ExP", "Range1", "Range2", "Man7", "Hyper"]);
        for report in reg.run_all() {
            for c in &report.checks {
                assert!(c.passed(), "{}: {} expected {} got {:?}", report.title(), c.quantity, c.expected, c.actual);
            }
        }
    }

    #[test]
    fn unknown_fixture() {
        assert!(matches!(Registry::bundled().run("no-such"), Err(Error::UnknownFixture(_))));
    }

    #[test]
    fn wrong_value_fails() {
        let text = r#"
            [[fixture]]
            name = "Bad"
            citation = "Example (ExP)"
            factor_dims = [2, 2]
            bundles = { L = [1, 1], D = [2, 0] }
            [[fixture.expected]]
            kind = "segre_degree"
            value = 7
        "#;
        let reports = Registry::from_toml(text).unwrap().run("Bad").unwrap();
        assert!(!reports[0].passed());
        assert_eq!(reports[0].checks[0].actual, Ok("6".to_string()));
    }

    #[test]
    fn rejects_malformed_files() {
        assert!(Registry::from_toml("[[fixture]]\nname = 1").is_err());
        let unknown_citation = "[[fixture]]\nname = \"X\"\ncitation = \"Lemma (nope)\"\n";
        assert!(matches!(Registry::from_toml(unknown_citation), Err(Error::FixtureFormat(_))));
        let bad_len = "[[fixture]]\nname = \"X\"\ncitation = \"Example (ExP)\"\nfactor_dims = [1, 1]\nbundles = { L = [1] }\n";
        assert!(Registry::from_toml(bad_len).is_err());
    }

    #[test]
    fn missing_invariant_is_reported_not_panicked() {
        let text = "[[fixture]]\nname = \"X\"\ncitation = \"Example (Range2)\"\n[[fixture.expected]]\nkind = \"span_codim\"\nvalue = 1\n";
        let r = Registry::from_toml(text).unwrap().run("X").unwrap();
        assert!(r[0].checks[0].actual.is_err());
    }
}
