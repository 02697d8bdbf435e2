//! Theorem harness over a directory of complexes.
//!
//! Each member is a complex file. JSON members may carry an `"expect"`
//! object whose keys are compared against freshly computed values.

use std::fs;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rdelta::bier::bier_ball;
use rdelta::gamma::gamma_report;
use rdelta::groebner::shelling::quadratic_gb_test;
use rdelta::groebner::{has_quadratic_gb, is_shelling_order, Strategy};
use rdelta::homology::{serre_condition, serre_profile};
use rdelta::presentation::h_vector_r_delta;
use rdelta::resolutions::check_terai_yanagawa;
use rdelta::SimplicialComplex;
use serde_json::{json, Value};

use crate::commands::shellability;
use crate::{CliError, RunConfig};

/// Largest facet count for which every facet order is tried.
const DIRECT_FACETS: usize = 8;
/// Random facet orders tried per member.
const SAMPLED_ORDERS: usize = 4;

struct Member {
    checks: Vec<Value>,
}

impl Member {
    fn record(&mut self, check: &str, status: &str, detail: impl Into<String>) {
        self.checks.push(json!({"check": check, "status": status, "detail": detail.into()}));
    }

    fn expect(&mut self, check: &str, ok: bool, detail: impl Into<String>) {
        self.record(check, if ok { "pass" } else { "fail" }, detail);
    }
}

fn compare(m: &mut Member, key: &str, expected: &Value, got: Value) {
    let ok = *expected == got;
    let detail = if ok { got.to_string() } else { format!("expected {expected}, got {got}") };
    m.expect(&format!("expect.{key}"), ok, detail);
}

fn check_member(delta: &SimplicialComplex, expect: Option<&Value>, cfg: &RunConfig) -> Result<Vec<Value>, CliError> {
    let mut m = Member { checks: Vec::new() };
    let n = delta.n();
    let d = (delta.dim() + 1).max(0) as usize;

    let mut f = delta.f_vector();
    f.resize(n + 1, 0);
    let h_gamma = bier_ball(delta)?.gamma().h_vector()?;
    m.expect("bier_h_equals_f", h_gamma == f, format!("h(Γ) = {h_gamma:?}"));

    if !delta.is_pure() {
        m.record("pure", "skip", "not pure; remaining checks need purity");
        return Ok(m.checks);
    }

    for &c in &cfg.chars {
        for r in 2..=d {
            let ty = check_terai_yanagawa(delta, c, r)?;
            m.expect(
                &format!("serre_vs_linearity.char{}.r{r}", c.characteristic()),
                ty.agree(),
                format!("(S_{r}) = {}, linear for {} steps = {}", ty.serre, r - 1, ty.linear),
            );
        }
    }

    let report = gamma_report(delta)?;
    m.expect("gamma_methods_agree", report.methods_agree, format!("{:?}", report.to_json()["gamma"]));
    let h = delta.h_vector()?;
    if h.iter().all(|&x| x >= 0) {
        m.expect("gamma_sign_alternation", report.sign_pattern_ok, "h(Δ) >= 0");
    }

    if delta.is_flag() {
        check_shelling(&mut m, delta, cfg)?;
    } else {
        m.record("shellable_iff_quadratic_gb", "skip", "not flag");
    }

    if let Some(exp) = expect.and_then(Value::as_object) {
        for (key, want) in exp {
            let got = match key.as_str() {
                "f_vector" => json!(delta.f_vector()),
                "h_r_delta" => json!(h_vector_r_delta(delta)?),
                "gamma" => report.to_json()["gamma"].clone(),
                "serre_profile" => json!(serre_profile(delta, &expected_chars(want, cfg)?)?
                    .into_iter()
                    .map(|(c, r)| (c.to_string(), r))
                    .collect::<std::collections::BTreeMap<_, _>>()),
                "shellable" => shellability(delta, cfg)?["shellable"].clone(),
                other => {
                    m.record(&format!("expect.{other}"), "fail", "unknown expectation key");
                    continue;
                }
            };
            compare(&mut m, key, want, got);
        }
    }
    Ok(m.checks)
}

/// Characteristics named by an expected Serre profile, else the configured ones.
fn expected_chars(want: &Value, cfg: &RunConfig) -> Result<Vec<rdelta::FieldSpec>, CliError> {
    match want.as_object() {
        Some(obj) if !obj.is_empty() => obj
            .keys()
            .map(|k| {
                let c: u64 = k.parse().map_err(|_| rdelta::Error::Parse(format!("bad characteristic `{k}`")))?;
                Ok(rdelta::FieldSpec::new(c)?)
            })
            .collect(),
        _ => Ok(cfg.chars.clone()),
    }
}

fn check_shelling(m: &mut Member, delta: &SimplicialComplex, cfg: &RunConfig) -> Result<(), CliError> {
    let s2 = serre_condition(delta, 2, rdelta::FieldSpec::RATIONALS);
    let shell = shellability(delta, cfg)?;
    let shellable = shell["shellable"].as_bool();
    let facets = delta.facets().len();
    if facets <= DIRECT_FACETS {
        let direct = has_quadratic_gb(delta, Strategy::Direct { max_orders: 40_320 })?;
        m.expect(
            "shellable_iff_quadratic_gb",
            shellable == Some(direct),
            format!("shellable = {shellable:?}, some order gives a quadratic GB = {direct}"),
        );
    } else if let Some(order) = shell.get("order") {
        let text: Vec<&str> = order.as_array().into_iter().flatten().filter_map(Value::as_str).collect();
        let order = crate::input::parse_facet_order(delta, &text.join(","))?;
        let ok = quadratic_gb_test(delta, &order, rdelta::FieldSpec::RATIONALS)?;
        m.expect("shellable_iff_quadratic_gb", ok, "the shelling found gives a quadratic GB");
    } else {
        m.record("shellable_iff_quadratic_gb", "skip", format!("{facets} facets, too many orders to try"));
    }
    if !s2 {
        return Ok(());
    }
    // every sampled facet order: shelling order exactly when C_Δ is a GB
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut mismatches = 0;
    for _ in 0..SAMPLED_ORDERS {
        let mut order = delta.facets().to_vec();
        order.shuffle(&mut rng);
        let gb = quadratic_gb_test(delta, &order, rdelta::FieldSpec::RATIONALS)?;
        if gb != is_shelling_order(delta, &order)? {
            mismatches += 1;
        }
    }
    m.expect(
        "sampled_orders",
        mismatches == 0,
        format!("{mismatches} of {SAMPLED_ORDERS} random facet orders disagree"),
    );
    Ok(())
}

/// Runs the harness; the second value is true when nothing failed.
pub fn verify(dir: &str, cfg: &RunConfig) -> Result<(Value, bool), CliError> {
    let mut paths: Vec<_> = fs::read_dir(dir)
        .map_err(|e| CliError::Io(format!("{dir}: {e}")))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json" || x == "txt"))
        .collect();
    paths.sort();
    let mut members = Vec::new();
    let (mut pass, mut fail, mut skip) = (0, 0, 0);
    for path in paths {
        let name = path.file_name().and_then(|s| s.to_str()).unwrap_or("?").to_string();
        eprintln!("verifying {name}");
        let checks = match load_member(&path) {
            Ok((delta, expect)) => check_member(&delta, expect.as_ref(), cfg)?,
            Err(e) => vec![json!({"check": "load", "status": "fail", "detail": e.to_string()})],
        };
        for c in &checks {
            match c["status"].as_str() {
                Some("pass") => pass += 1,
                Some("skip") => skip += 1,
                _ => fail += 1,
            }
        }
        members.push(json!({"name": name, "checks": checks}));
    }
    let report = json!({"members": members, "summary": {"pass": pass, "fail": fail, "skip": skip}});
    Ok((report, fail == 0))
}

fn load_member(path: &Path) -> Result<(SimplicialComplex, Option<Value>), CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(e.to_string()))?;
    let expect = serde_json::from_str::<Value>(&text).ok().and_then(|v| v.get("expect").cloned());
    Ok((SimplicialComplex::parse(&text)?, expect))
}
