use std::collections::BTreeMap;

use serde_json::{json, Value};

use projbound::classifier::{
    adjoint_exceptions, chern_bound, degree_closed_form, BoundCondition, ClassificationVerdict, Structural,
};
use projbound::existence::{codim2_polynomial, divisor_threshold_value, lower_degree_bound};
use projbound::fixtures::FixtureReport;
use projbound::verify::{all_suites, SuiteReport};
use projbound::{
    castelnuovo_lower_bound, classify_at_dim, codim2_positive, degenerate_triple_analyze, degree_formula,
    dim_z_bounds, divisor_rules, divisor_threshold, easy_lower_bound, h0_multidegree, intersection_number,
    kodaira_lower_bound, min_t_guaranteed, section_guaranteed, segre_degree, simplified_lower_bound,
    surface_lower_degree, threefold_lower_degree, upper_bound_h0, BigInteger, Citation, EmbeddedVariety,
    MultiProjective, Multidegree, Registry, Subvariety, SubvarietyProfile,
};

use crate::command::CommandRequest;
use crate::envelope::ResultEnvelope;
use crate::CliError;

pub const HARTSHORNE_WARNING: &str = "conditional on Hartshorne's conjecture";
pub const CASTELNUOVO_WARNING: &str = "conditional on the Castelnuovo-type conjecture";
pub const MUMFORD_WARNING: &str = "mumford-fallback";

fn big(v: &BigInteger) -> Value {
    Value::String(v.to_string())
}

fn structural_json(s: &Structural) -> Value {
    json!({ "tag": s.tag.slug(), "text": s.tag.to_string(), "rule": s.rule.label() })
}

fn verdict_json(v: &ClassificationVerdict) -> Value {
    let bounds: Vec<Value> = v
        .dim_z_lower_bounds
        .iter()
        .map(|b| {
            json!({
                "bound": b.bound.to_string(),
                "ceiling": b.ceiling,
                "condition": b.condition.tag(),
                "rule": b.rule.label(),
            })
        })
        .collect();
    let structural: Vec<Value> = v.structural.iter().map(structural_json).collect();
    let contradictions: Vec<Value> =
        v.contradictions.iter().map(|c| json!({ "message": c.message, "rule": c.rule.label() })).collect();
    let skipped: Vec<Value> = v.skipped.iter().map(|s| json!({ "reason": s.reason, "rule": s.rule.label() })).collect();
    json!({
        "dim_z_lower_bounds": bounds,
        "structural": structural,
        "contradictions": contradictions,
        "skipped": skipped,
        "unconditional_floor": v.unconditional_floor(),
    })
}

fn put_verdict(env: &mut ResultEnvelope, v: &ClassificationVerdict) {
    env.value("verdict", verdict_json(v));
    for c in v.citations() {
        env.cite(c);
    }
    if v.dim_z_lower_bounds.iter().any(|b| b.condition == BoundCondition::AssumingHartshorne) {
        env.warn(HARTSHORNE_WARNING);
    }
}

fn variety(req: &CommandRequest) -> Result<EmbeddedVariety, CliError> {
    Ok(EmbeddedVariety::new(req.get_int("n")?, req.get_int("r")?, req.get_int("d")?)?)
}

fn profile(req: &CommandRequest) -> Result<SubvarietyProfile, CliError> {
    Ok(SubvarietyProfile {
        k: req.get_int("k")?,
        is_linear_pk: req.get_flag("linear"),
        pic_rank_one: req.get_flag("pic-rank-one"),
        cohomology_like_pk_through: req.opt_int("cohomology-through")?,
        is_k_pi_1: req.get_flag("k-pi-1"),
        complete_intersection: req.opt_bool("ci"),
    })
}

fn space(req: &CommandRequest) -> Result<MultiProjective, CliError> {
    Ok(MultiProjective::new(req.get_ints("dims")?.to_vec())?)
}

/// Routes a validated request to the library and packages the result.
pub fn dispatch(req: &CommandRequest, registry: &Registry) -> Result<ResultEnvelope, CliError> {
    let spec = req.validate()?;
    let mut env = ResultEnvelope::new(spec.path);
    match spec.path {
        "bounds upper" => {
            env.value("value", big(&upper_bound_h0(&variety(req)?, req.get_int("t")?)?)).cite(Citation::LemmaUpper);
        }
        "bounds easy" => {
            env.value("value", big(&easy_lower_bound(&variety(req)?, req.get_int("t")?)?)).cite(Citation::EasyLower);
        }
        "bounds lower" => {
            let x = variety(req)?;
            let value = castelnuovo_lower_bound(&x, req.get_int("t")?)?;
            let profile = x.castelnuovo_profile()?;
            env.value("value", big(&value))
                .value("c", profile.c)
                .value("remainder", profile.remainder)
                .cite(Citation::LemmaCastelL);
        }
        "bounds simplified" => {
            let v = simplified_lower_bound(req.get_int("n")?, req.get_int("r")?, req.get_int("t")?)?;
            env.value("value", big(&v)).cite(Citation::RemarkRckod).cite(Citation::LemmaCastelL);
        }
        "bounds kodaira" => {
            let x = variety(req)?.with_kodaira_nonneg()?;
            env.value("value", big(&kodaira_lower_bound(&x, req.get_int("t")?)?))
                .cite(Citation::RemarkRckod)
                .cite(Citation::LemmaCastelL);
        }
        "exists guaranteed" => {
            let y = Subvariety::new(req.get_int("k")?, req.get_int("delta")?);
            let full = req.get_flag("full");
            let ok = section_guaranteed(&variety(req)?, &y, req.get_int("t")?, full)?;
            env.value("value", ok).cite(Citation::PropCastelGen);
            if full {
                env.cite(Citation::LemmaCastelL);
            }
        }
        "exists min-t" => {
            let y = Subvariety::new(req.get_int("k")?, req.get_int("delta")?);
            let m = min_t_guaranteed(&variety(req)?, &y, req.get_flag("full"))?;
            env.value("value", m.t).value("mumford_fallback", m.mumford_fallback).cite(Citation::PropCastelGen);
            if m.mumford_fallback {
                env.cite(Citation::LemmaMumford).warn(MUMFORD_WARNING);
            }
        }
        "exists threshold" => {
            let (n, r, delta) = (req.get_int("n")?, req.get_int("r")?, req.get_int("delta")?);
            env.value("value", divisor_threshold(n, r, delta)?)
                .value("strictly_above", divisor_threshold_value(n, r, delta)?.to_string())
                .cite(Citation::PropCastelP);
        }
        "exists codim2" => {
            let (n, r, delta) = (req.get_int("n")?, req.get_int("r")?, req.get_int("delta")?);
            let positive = codim2_positive(n, r, delta)?;
            env.value("value", positive)
                .value("polynomial", big(&codim2_polynomial(n, r, delta)))
                .cite(Citation::RemarkCod2);
        }
        "lower-degree general" => {
            let v = lower_degree_bound(req.get_int("n")?, req.get_int("ambient")?, req.get_int("d")?)?;
            env.value("value", v).cite(Citation::PropLowerBound);
        }
        "lower-degree surface" => {
            env.value("value", surface_lower_degree(req.get_int("d")?)?).cite(Citation::CorLbSurf);
        }
        "lower-degree threefold" => {
            env.value("value", threefold_lower_degree(req.get_int("d")?, req.get_int("ambient")?)?)
                .cite(Citation::ThreefoldBounds);
        }
        "classify dim-bounds" => {
            let v = dim_z_bounds(req.get_int("n")?, &profile(req)?, req.get_flag("hartshorne"), req.get_flag("x-ci"))?;
            put_verdict(&mut env, &v);
        }
        "classify at-dim" => {
            let v = classify_at_dim(req.get_int("n")?, &profile(req)?, req.get_int("dim-z")?)?;
            put_verdict(&mut env, &v);
        }
        "classify divisor" => {
            let mut d = Subvariety::new(req.get_int("n")? - 1, req.get_int("delta")?);
            if let Some(q) = req.opt_int("q")? {
                d = d.with_span_codim(q);
            }
            let conj = req.get_flag("castelnuovo");
            put_verdict(&mut env, &divisor_rules(&variety(req)?, &d, conj)?);
            if conj {
                env.warn(CASTELNUOVO_WARNING);
            }
        }
        "classify chern" => {
            env.value("value", chern_bound(req.get_int("n")?, req.get_int("k")?)?).cite(Citation::CorChern1);
        }
        "classify adjoint" => {
            let y = SubvarietyProfile::linear(req.get_int("k")?);
            let cases = adjoint_exceptions(req.get_int("n")?, &y)?;
            env.value("exceptions", cases.iter().map(structural_json).collect::<Vec<_>>());
            for c in &cases {
                env.cite(c.rule);
            }
        }
        "triple analyze" => {
            let a = degenerate_triple_analyze(req.get_int("n")?, req.get_int("s")?)?;
            let pairs: Vec<Value> = a
                .pairs
                .iter()
                .map(|p| {
                    json!({
                        "fiber_deg": big(&p.triple.fiber_deg),
                        "base_deg": big(&p.triple.base_deg),
                        "verdicts": p.verdicts.iter().map(structural_json).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let excluded: Vec<Value> = a
                .excluded
                .iter()
                .map(|(t, rule)| json!({ "fiber_deg": big(&t.fiber_deg), "base_deg": big(&t.base_deg), "rule": rule.label() }))
                .collect();
            env.value("degree", big(&a.degree)).value("pairs", pairs).value("excluded", excluded);
            put_verdict(&mut env, &a.verdicts);
            for p in &a.pairs {
                for v in &p.verdicts {
                    env.cite(v.rule);
                }
            }
            if !a.pairs.is_empty() {
                env.cite(Citation::RelationProdRel);
            }
        }
        "triple degree" => {
            let (n, s) = (req.get_int("n")?, req.get_int("s")?);
            env.value("value", big(&degree_formula(n, s)?))
                .value("closed_form", big(&degree_closed_form(n, s)?))
                .cite(Citation::PropKn1);
        }
        "oracle h0" => {
            let deg = Multidegree::new(req.get_ints("deg")?.to_vec());
            env.value("value", big(&h0_multidegree(&space(req)?, &deg)?));
        }
        "oracle intersect" => {
            let classes: Vec<Multidegree> = req.get_rows("classes")?.iter().cloned().map(Multidegree::new).collect();
            env.value("value", big(&intersection_number(&space(req)?, &classes)?));
        }
        "oracle segre" => {
            env.value("value", big(&segre_degree(&space(req)?)));
        }
        "verify" => verify(req, registry, &mut env)?,
        other => return Err(CliError::Internal(format!("no handler for {other}"))),
    }
    Ok(env)
}

fn fixture_json(r: &FixtureReport) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| {
            json!({
                "quantity": c.quantity,
                "citation": c.citation,
                "expected": c.expected,
                "actual": match &c.actual { Ok(v) => v.clone(), Err(e) => format!("error: {e}") },
                "passed": c.passed(),
            })
        })
        .collect();
    json!({ "name": r.name, "instance": r.instance, "citation": r.citation, "passed": r.passed(), "checks": checks })
}

fn suite_json(s: &SuiteReport) -> Value {
    json!({
        "name": s.name,
        "citation": s.citation.label(),
        "cases": s.cases,
        "failures": s.failures,
        "sample": s.sample,
        "passed": s.passed(),
    })
}

fn verify(req: &CommandRequest, registry: &Registry, env: &mut ResultEnvelope) -> Result<(), CliError> {
    let (reports, suites) = match (req.get_flag("all"), req.opt_text("fixture")) {
        (true, None) => (registry.run_all(), all_suites()),
        (false, Some(name)) => (registry.run(name)?, Vec::new()),
        _ => return Err(CliError::Validation("verify needs exactly one of --all or --fixture NAME".into())),
    };
    let mut by_citation: BTreeMap<String, bool> = BTreeMap::new();
    let mut summary = Vec::new();
    for r in &reports {
        let ok = r.passed();
        summary.push(format!("{} {} ({})", if ok { "PASS" } else { "FAIL" }, r.title(), r.citation));
        for c in &r.checks {
            *by_citation.entry(c.citation.clone()).or_insert(true) &= c.passed();
            if !c.passed() {
                let actual = c.actual.clone().unwrap_or_else(|e| format!("error: {e}"));
                summary.push(format!("  {}: expected {}, got {actual}", c.quantity, c.expected));
            }
        }
        if let Some(c) = Citation::from_label(&r.citation) {
            env.cite(c);
        }
    }
    for s in &suites {
        summary.push(format!("{} {} [{} cases] ({})", if s.passed() { "PASS" } else { "FAIL" }, s.name, s.cases, s.citation.label()));
        summary.extend(s.sample.iter().map(|f| format!("  {f}")));
        *by_citation.entry(s.citation.label().to_string()).or_insert(true) &= s.passed();
        env.cite(s.citation);
    }
    let passed = reports.iter().all(FixtureReport::passed) && suites.iter().all(SuiteReport::passed);
    env.ok = passed;
    let by_citation: BTreeMap<String, Value> =
        by_citation.into_iter().map(|(k, ok)| (k, Value::from(if ok { "pass" } else { "fail" }))).collect();
    env.value("summary", summary)
        .value("by_citation", Value::Object(by_citation.into_iter().collect()))
        .value("fixtures", reports.iter().map(fixture_json).collect::<Vec<_>>())
        .value("suites", suites.iter().map(suite_json).collect::<Vec<_>>())
        .value("passed", passed);
    Ok(())
}
