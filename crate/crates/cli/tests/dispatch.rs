use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::Value;

use projbound::classifier::degree_closed_form;
use projbound::existence::lower_degree_bound;
use projbound::{
    castelnuovo_lower_bound, degenerate_triple_analyze, divisor_threshold, easy_lower_bound, h0_multidegree,
    intersection_number, min_t_guaranteed, section_guaranteed, segre_degree, simplified_lower_bound,
    surface_lower_degree, upper_bound_h0, EmbeddedVariety, MultiProjective, Multidegree, Registry, Subvariety,
};
use projbound_cli::{dispatch, CliError, CommandRequest, Param, ResultEnvelope};

fn value(env: &ResultEnvelope) -> String {
    match &env.values["value"] {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn nrdt(sub: &str, n: i64, r: i64, d: i64, t: i64) -> CommandRequest {
    CommandRequest::new(sub).int("n", n).int("r", r).int("d", d).int("t", t)
}

/// One random valid request and the value the library gives directly.
fn random_case(rng: &mut StdRng) -> (CommandRequest, String) {
    let n = rng.gen_range(1..=5i64);
    let r = rng.gen_range(1..=6i64);
    let d = rng.gen_range(r + 1..=40);
    let t = rng.gen_range(0..=12i64);
    let x = EmbeddedVariety::new(n, r, d).unwrap();
    match rng.gen_range(0..10) {
        0 => (nrdt("bounds upper", n, r, d, t), upper_bound_h0(&x, t).unwrap().to_string()),
        1 => {
            let t = rng.gen_range(0..d);
            (nrdt("bounds easy", n, r, d, t), easy_lower_bound(&x, t).unwrap().to_string())
        }
        2 => (nrdt("bounds lower", n, r, d, t), castelnuovo_lower_bound(&x, t).unwrap().to_string()),
        3 => (
            CommandRequest::new("bounds simplified").int("n", n).int("r", r).int("t", t),
            simplified_lower_bound(n, r, t).unwrap().to_string(),
        ),
        4 => {
            let n = rng.gen_range(2..=5);
            let x = EmbeddedVariety::new(n, r, d).unwrap();
            let k = rng.gen_range(1..n);
            let delta = rng.gen_range(1..=20);
            let t = rng.gen_range(1..=12);
            let full = rng.gen_bool(0.5);
            let req = CommandRequest::new("exists guaranteed")
                .int("n", n)
                .int("r", r)
                .int("d", d)
                .int("k", k)
                .int("delta", delta)
                .int("t", t)
                .flag("full", full);
            (req, section_guaranteed(&x, &Subvariety::new(k, delta), t, full).unwrap().to_string())
        }
        5 => {
            let n = rng.gen_range(2..=5);
            let x = EmbeddedVariety::new(n, r, d).unwrap();
            let k = rng.gen_range(1..n);
            let delta = rng.gen_range(1..=20);
            let req = CommandRequest::new("exists min-t").int("n", n).int("r", r).int("d", d).int("k", k).int("delta", delta);
            (req, min_t_guaranteed(&x, &Subvariety::new(k, delta), false).unwrap().t.to_string())
        }
        6 => {
            let n = rng.gen_range(2..=7);
            let delta = rng.gen_range(2..=50);
            let req = CommandRequest::new("exists threshold").int("n", n).int("r", r).int("delta", delta);
            (req, divisor_threshold(n, r, delta).unwrap().to_string())
        }
        7 => {
            let dd = rng.gen_range(1..=100_000);
            if rng.gen_bool(0.5) {
                (CommandRequest::new("lower-degree surface").int("d", dd), surface_lower_degree(dd).unwrap().to_string())
            } else {
                let n = rng.gen_range(1..=4);
                let big_n = rng.gen_range(n + 1..=10);
                let req = CommandRequest::new("lower-degree general").int("n", n).int("ambient", big_n).int("d", dd);
                (req, lower_degree_bound(n, big_n, dd).unwrap().to_string())
            }
        }
        8 => {
            let n = rng.gen_range(1..=20);
            let s = rng.gen_range(0..=20);
            (CommandRequest::new("triple degree").int("n", n).int("s", s), degree_closed_form(n, s).unwrap().to_string())
        }
        _ => {
            let m = rng.gen_range(1..=3);
            let dims: Vec<i64> = (0..m).map(|_| rng.gen_range(1..=3)).collect();
            let space = MultiProjective::new(dims.clone()).unwrap();
            let deg: Vec<i64> = (0..m).map(|_| rng.gen_range(-2..=5)).collect();
            match rng.gen_range(0..3) {
                0 => {
                    let req = CommandRequest::new("oracle h0").with("dims", Param::Ints(dims)).with("deg", Param::Ints(deg.clone()));
                    (req, h0_multidegree(&space, &Multidegree::new(deg)).unwrap().to_string())
                }
                1 => {
                    let rows: Vec<Vec<i64>> = (0..space.dim()).map(|_| (0..m).map(|_| rng.gen_range(-2..=3)).collect()).collect();
                    let classes: Vec<Multidegree> = rows.iter().cloned().map(Multidegree::new).collect();
                    let req = CommandRequest::new("oracle intersect").with("dims", Param::Ints(dims)).with("classes", Param::Rows(rows));
                    (req, intersection_number(&space, &classes).unwrap().to_string())
                }
                _ => (CommandRequest::new("oracle segre").with("dims", Param::Ints(dims)), segre_degree(&space).to_string()),
            }
        }
    }
}

#[test]
fn dispatch_is_a_thin_wrapper() {
    let registry = Registry::bundled();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..100 {
        let (req, direct) = random_case(&mut rng);
        let env = dispatch(&req, &registry).unwrap_or_else(|e| panic!("{req:?}: {e}"));
        assert_eq!(value(&env), direct, "{req:?}");
        assert!(env.ok);
    }
}

#[test]
fn json_round_trips() {
    let registry = Registry::bundled();
    let mut rng = StdRng::seed_from_u64(7);
    let mut reqs: Vec<CommandRequest> = (0..50).map(|_| random_case(&mut rng).0).collect();
    reqs.push(CommandRequest::new("triple analyze").int("n", 6).int("s", 11));
    reqs.push(CommandRequest::new("classify dim-bounds").int("n", 9).int("k", 4).flag("linear", true).flag("hartshorne", true));
    reqs.push(CommandRequest::new("verify").flag("all", true));
    // a value past 64 bits stays exact
    reqs.push(nrdt("bounds upper", 5, 6, 40, 100_000));
    for req in reqs {
        let env = dispatch(&req, &registry).unwrap();
        let text = env.to_json();
        let back = ResultEnvelope::from_json(&text).unwrap();
        assert_eq!(back, env);
        assert_eq!(back.to_json(), text, "serialization is deterministic");
    }
}

#[test]
fn big_values_are_decimal_strings() {
    let env = dispatch(&nrdt("bounds upper", 5, 6, 40, 100_000), &Registry::bundled()).unwrap();
    let Value::String(s) = &env.values["value"] else { panic!("not a string") };
    let x = EmbeddedVariety::new(5, 6, 40).unwrap();
    assert_eq!(*s, upper_bound_h0(&x, 100_000).unwrap().to_string());
    assert!(s.len() > 20 && s.chars().all(|c| c.is_ascii_digit()));
}

#[test]
fn documented_examples() {
    let registry = Registry::bundled();
    let env = dispatch(&nrdt("bounds lower", 2, 3, 8, 2), &registry).unwrap();
    assert_eq!(value(&env), "18");
    let env = dispatch(&CommandRequest::new("lower-degree surface").int("d", 21), &registry).unwrap();
    assert_eq!(value(&env), "6");
    let env = dispatch(&CommandRequest::new("triple analyze").int("n", 3).int("s", 1), &registry).unwrap();
    assert_eq!(env.values["degree"], Value::from("7"));
    let pairs: Vec<(String, String)> = env.values["pairs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| (p["fiber_deg"].as_str().unwrap().to_string(), p["base_deg"].as_str().unwrap().to_string()))
        .collect();
    assert_eq!(pairs, vec![("1".into(), "4".into()), ("4".into(), "1".into())]);
    let direct = degenerate_triple_analyze(3, 1).unwrap();
    assert_eq!(pairs.len(), direct.pairs.len());
}

#[test]
fn warnings_and_citations() {
    let registry = Registry::bundled();
    let req = CommandRequest::new("classify dim-bounds").int("n", 10).int("k", 6).flag("linear", true).flag("hartshorne", true);
    let env = dispatch(&req, &registry).unwrap();
    assert!(env.warnings.iter().any(|w| w == projbound_cli::HARTSHORNE_WARNING));
    assert!(env.citations.iter().any(|c| c.label == "Proposition (HartC)"));
    let req = CommandRequest::new("classify dim-bounds").int("n", 10).int("k", 6).flag("linear", true);
    assert!(dispatch(&req, &registry).unwrap().warnings.is_empty());

    // curve of degree 9 on a quadric surface: found by the scan, no fallback
    let req = CommandRequest::new("exists min-t").int("n", 2).int("r", 1).int("d", 2).int("k", 1).int("delta", 9);
    let env = dispatch(&req, &registry).unwrap();
    assert_eq!(env.values["mumford_fallback"], Value::Bool(false));
    assert_eq!(value(&env), "8");

    let req = CommandRequest::new("verify").with("fixture", Param::Text("ExP".into()));
    let env = dispatch(&req, &registry).unwrap();
    assert!(env.ok);
    assert!(env.citations.iter().any(|c| c.label == "Example (ExP)"));
}

#[test]
fn errors_map_to_exit_codes() {
    let registry = Registry::bundled();
    let e = dispatch(&nrdt("bounds lower", 2, 0, 8, 2), &registry).unwrap_err();
    assert!(matches!(e, CliError::Validation(_)));
    assert_eq!(e.exit_code(), 2);
    let e = dispatch(&CommandRequest::new("verify").with("fixture", Param::Text("no-such".into())), &registry).unwrap_err();
    assert_eq!(e, CliError::UnknownFixture("no-such".into()));
    assert_eq!(e.exit_code(), 2);
    let e = dispatch(&CommandRequest::new("verify"), &registry).unwrap_err();
    assert_eq!(e.exit_code(), 2);
    let e = dispatch(&CommandRequest::new("bounds lower").int("n", 2), &registry).unwrap_err();
    assert!(e.to_string().contains("missing --r"));
}

#[test]
fn failing_fixture_is_reported() {
    let registry = Registry::from_toml(
        "[[fixture]]\nname = \"Bad\"\ncitation = \"Example (ExP)\"\nfactor_dims = [2, 2]\nbundles = { L = [1, 1] }\n\
         [[fixture.expected]]\nkind = \"segre_degree\"\nvalue = 5\n",
    )
    .unwrap();
    let env = dispatch(&CommandRequest::new("verify").with("fixture", Param::Text("Bad".into())), &registry).unwrap();
    assert!(!env.ok);
    assert_eq!(env.exit_code(), 1);
    assert_eq!(env.values["by_citation"]["Example (ExP)"], Value::from("fail"));
}
