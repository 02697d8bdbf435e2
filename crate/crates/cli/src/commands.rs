use std::collections::BTreeMap;

use rdelta::bier::{bier_ball, canonical_module_generators};
use rdelta::field::Field;
use rdelta::gamma::{gamma_from_h, gamma_report, top_gamma_via_euler};
use rdelta::groebner::order::compatible_term_order_for;
use rdelta::groebner::shelling::quadratic_generators;
use rdelta::groebner::{
    buchberger, find_shelling, is_shelling_order, quadratic_gb_test, reduce, s_polynomial, Monomial,
    Polynomial, ShellingOutcome, TermOrder,
};
use rdelta::homology::{is_cohen_macaulay, reduced_homology, serre_profile};
use rdelta::presentation::{
    artinian_reduction, export, h_vector_r_delta, is_quadratic, minimal_presentation, r_delta_presentation,
    ExportFormat,
};
use rdelta::resolutions::{
    first_nonlinear_step, koszul_verdict, module_betti_over_gamma, monomial_ideal_betti, poincare_from_hilbert,
    poincare_r_delta, BettiTable, FlagRing,
};
use rdelta::{with_field, Error, FieldSpec, SimplicialComplex};
use serde_json::{json, Value};

use crate::input::{self, facet_name};
use crate::{CliError, RunConfig};

fn per_char<T>(cfg: &RunConfig, mut f: impl FnMut(FieldSpec) -> T) -> BTreeMap<String, T> {
    cfg.chars.iter().map(|&c| (c.characteristic().to_string(), f(c))).collect()
}

fn names(delta: &SimplicialComplex, order: &[rdelta::Face]) -> Vec<String> {
    order.iter().map(|&f| facet_name(delta, f)).collect()
}

/// First characteristic in which `Δ` is not Cohen–Macaulay.
fn non_cm_char(delta: &SimplicialComplex, cfg: &RunConfig) -> Result<Option<FieldSpec>, CliError> {
    for &c in &cfg.chars {
        if !is_cohen_macaulay(delta, c)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// Shellability, skipping the search when Cohen–Macaulayness already fails.
pub fn shellability(delta: &SimplicialComplex, cfg: &RunConfig) -> Result<Value, CliError> {
    if let Some(c) = non_cm_char(delta, cfg)? {
        return Ok(json!({"shellable": false, "reason": format!("not Cohen-Macaulay over {c}")}));
    }
    eprintln!("searching for a shelling (budget {} nodes)", cfg.budget);
    Ok(match find_shelling(delta, cfg.budget)? {
        ShellingOutcome::Shelling(order) => json!({"shellable": true, "order": names(delta, &order)}),
        ShellingOutcome::NotShellable => json!({"shellable": false, "reason": "exhaustive search"}),
    })
}

pub fn analyze(delta: &SimplicialComplex, cfg: &RunConfig) -> Result<Value, CliError> {
    let pure = delta.is_pure();
    let flag = delta.is_flag();
    let mut out = json!({
        "vertices": delta.n(),
        "facets": delta.facets().len(),
        "dimension": delta.dim(),
        "pure": pure,
        "flag": flag,
        "f_vector": delta.f_vector(),
    });
    let homology: BTreeMap<String, Vec<u64>> = cfg
        .chars
        .iter()
        .map(|&c| Ok((c.characteristic().to_string(), reduced_homology(delta, c)?.as_slice().to_vec())))
        .collect::<Result<_, Error>>()?;
    out["reduced_homology"] = json!(homology);
    if !pure {
        eprintln!("warning: complex is not pure; skipping Serre, Koszul and Gröbner analysis");
        return Ok(out);
    }
    out["h_vector"] = json!(delta.h_vector()?);
    out["h_r_delta"] = json!(h_vector_r_delta(delta)?);
    out["serre_profile"] = json!(serre_profile(delta, &cfg.chars)?
        .into_iter()
        .map(|(c, r)| (c.to_string(), r))
        .collect::<BTreeMap<_, _>>());
    out["cohen_macaulay"] = json!(per_char(cfg, |c| is_cohen_macaulay(delta, c).unwrap_or(false)));
    if !flag {
        eprintln!("warning: complex is not flag; R_Δ is not defined");
        return Ok(out);
    }
    let mut koszul = BTreeMap::new();
    for &c in &cfg.chars {
        let v = koszul_verdict(delta, c)?;
        koszul.insert(c.characteristic().to_string(), json!({"koszul": v.koszul, "reason": v.reason}));
    }
    out["koszul"] = json!(koszul);
    let mut quadratic = BTreeMap::new();
    for &c in &cfg.chars {
        quadratic.insert(c.characteristic().to_string(), is_quadratic(delta, c)?);
    }
    out["quadratic"] = json!(quadratic);
    match shellability(delta, cfg) {
        Ok(shell) => {
            let qgb = match shell.get("order") {
                Some(_) => {
                    let order = input::parse_facet_order(delta, &order_string(&shell))?;
                    Value::Bool(quadratic_gb_test(delta, &order, FieldSpec::RATIONALS)?)
                }
                None => Value::Bool(false),
            };
            out["shelling"] = shell;
            out["quadratic_gb"] = qgb;
        }
        Err(CliError::Core(e @ Error::BudgetExceeded { .. })) => {
            out["shelling"] = json!({"shellable": null, "reason": e.to_string()});
            out["quadratic_gb"] = Value::Null;
        }
        Err(e) => return Err(e),
    }
    Ok(out)
}

fn order_string(shell: &Value) -> String {
    shell["order"].as_array().into_iter().flatten().filter_map(Value::as_str).collect::<Vec<_>>().join(",")
}

pub fn present(delta: &SimplicialComplex, cfg: &RunConfig, full: bool, artinian: bool) -> Result<String, CliError> {
    let mut p = if full { r_delta_presentation(delta)? } else { minimal_presentation(delta)? };
    if artinian {
        p = artinian_reduction(&p);
    }
    let format = match cfg.format.as_str() {
        "table" => ExportFormat::Macaulay2,
        other => other.parse()?,
    };
    Ok(export(&p, format, cfg.chars[0]))
}

fn gb_log<F: Field>(field: &F, delta: &SimplicialComplex, order: &[rdelta::Face]) -> Result<Vec<Value>, CliError> {
    let (ring, gens) = quadratic_generators(delta)?;
    let term_order = compatible_term_order_for(&ring, &order.to_vec())?;
    let names = ring.variable_names();
    let polys: Vec<Polynomial<F>> =
        gens.iter().map(|g| Polynomial::from_int_terms(field, &term_order, &g.terms)).collect();
    let mut log = Vec::new();
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            let (f, g) = (&polys[i], &polys[j]);
            if f.is_monomial() && g.is_monomial() || f.lm().coprime(g.lm()) {
                continue;
            }
            let s = s_polynomial(field, &term_order, f, g);
            let r = reduce(field, &term_order, &s, &polys);
            log.push(json!({
                "pair": [gens[i].render(&names), gens[j].render(&names)],
                "s_polynomial": s.render(field, &names),
                "remainder": r.render(field, &names),
            }));
        }
    }
    Ok(log)
}

pub fn gb(
    delta: &SimplicialComplex,
    cfg: &RunConfig,
    order: Option<&str>,
    search: bool,
    log: bool,
) -> Result<Value, CliError> {
    let order = match (order, search) {
        (Some(text), _) => input::parse_facet_order(delta, text)?,
        (None, true) => match find_shelling(delta, cfg.budget)? {
            ShellingOutcome::Shelling(o) => o,
            ShellingOutcome::NotShellable => {
                return Ok(json!({"shellable": false, "quadratic_gb": false}));
            }
        },
        (None, false) => return Err(CliError::Usage("gb needs --order or --search".into())),
    };
    let spec = cfg.chars[0];
    let witness = rdelta::groebner::shelling::quadratic_gb_witness(delta, &order, spec)?;
    let mut out = json!({
        "order": names(delta, &order),
        "is_shelling_order": is_shelling_order(delta, &order)?,
        "quadratic_gb": witness.is_none(),
        "failed_pair": witness.map(|w| json!({
            "first": w.first,
            "second": w.second,
            "s_polynomial": w.s_polynomial,
            "remainder": w.remainder,
        })),
    });
    if log {
        out["log"] = json!(with_field!(spec, |f| gb_log(&f, delta, &order))?);
    }
    Ok(out)
}

/// Buchberger from the full presentation under seeded random weight orders.
pub fn gb_random(delta: &SimplicialComplex, cfg: &RunConfig, count: usize) -> Result<Value, CliError> {
    let p = r_delta_presentation(delta)?;
    let nvars = p.ring.nvars();
    let cap = cfg.degree_cap.max(2 * p.generators.iter().map(|g| g.degree()).max().unwrap_or(1));
    let spec = cfg.chars[0];
    let mut runs = Vec::new();
    let mut all_ok = true;
    for k in 0..count {
        let order = TermOrder::random(nvars, 2, cfg.seed.wrapping_add(k as u64));
        let (complete, added, shape_ok) = with_field!(spec, |f| {
            let polys: Vec<Polynomial<_>> =
                p.generators.iter().map(|g| Polynomial::from_int_terms(&f, &order, &g.terms)).collect();
            let res = buchberger(&f, &order, &polys, cap, false);
            let shape = res.basis.iter().all(|g| g.is_monomial() || g.is_pure_difference(&f));
            (res.is_complete(), res.added().len(), shape)
        });
        let ok = complete && added == 0 && shape_ok;
        all_ok &= ok;
        runs.push(json!({"seed": cfg.seed.wrapping_add(k as u64), "complete": complete, "added": added, "binomial_shape": shape_ok}));
    }
    Ok(json!({"generators": p.generators.len(), "orders": count, "universal": all_ok, "runs": runs}))
}

pub fn shelling(delta: &SimplicialComplex, cfg: &RunConfig) -> Result<Value, CliError> {
    eprintln!("searching for a shelling (budget {} nodes)", cfg.budget);
    Ok(match find_shelling(delta, cfg.budget)? {
        ShellingOutcome::Shelling(order) => json!({"shellable": true, "order": names(delta, &order)}),
        ShellingOutcome::NotShellable => json!({"shellable": false}),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum BettiMode {
    Hochster,
    GammaModule,
    Poincare,
}

/// Rendered Betti output; tables keep both renderings so `main` can choose.
pub struct BettiOutput {
    pub json: Value,
    pub tables: Vec<(String, BettiTable)>,
}

fn tables_json(tables: &[(String, BettiTable)]) -> Value {
    json!(tables.iter().map(|(k, t)| (k.clone(), t.to_json())).collect::<BTreeMap<_, _>>())
}

pub fn betti(arg: &str, mode: BettiMode, cfg: &RunConfig) -> Result<BettiOutput, CliError> {
    if input::is_ideal_file(arg) {
        let ideal = input::load_ideal(arg)?;
        let mut tables = Vec::new();
        for &c in &cfg.chars {
            let t = match mode {
                BettiMode::Hochster => monomial_ideal_betti(&ideal.generators, c, cfg.imax)?,
                BettiMode::GammaModule => {
                    let ring = ideal.ring.as_ref().ok_or_else(|| {
                        CliError::Usage("gamma-module mode needs `nonedges` in the ideal file".into())
                    })?;
                    module_betti_over_gamma(ring, &ideal.generators, cfg.imax, c)?
                }
                BettiMode::Poincare => {
                    return Err(CliError::Usage("poincare mode takes a complex, not an ideal".into()))
                }
            };
            tables.push((c.characteristic().to_string(), t));
        }
        let json = json!({"variables": ideal.variables, "tables": tables_json(&tables)});
        return Ok(BettiOutput { json, tables });
    }
    let delta = input::load_complex(arg)?;
    match mode {
        BettiMode::Hochster => {
            let n = delta.n();
            let gens: Vec<Monomial> = delta
                .alexander_dual_generators()
                .into_iter()
                .map(|f| Monomial::from_support(n, f.iter()))
                .collect();
            let mut tables = Vec::new();
            for &c in &cfg.chars {
                tables.push((c.characteristic().to_string(), monomial_ideal_betti(&gens, c, cfg.imax)?));
            }
            let json = json!({"ideal": "alexander_dual", "tables": tables_json(&tables)});
            Ok(BettiOutput { json, tables })
        }
        BettiMode::GammaModule => {
            let n = delta.n();
            let ring = FlagRing::from_complex(bier_ball(&delta)?.gamma())?;
            let gens: Vec<Monomial> = canonical_module_generators(&delta)?
                .into_iter()
                .map(|f| Monomial::from_support(2 * n, f.iter().map(|v| n + v)))
                .collect();
            let mut tables = Vec::new();
            for &c in &cfg.chars {
                tables.push((c.characteristic().to_string(), module_betti_over_gamma(&ring, &gens, cfg.imax, c)?));
            }
            let json = json!({"module": "canonical", "tables": tables_json(&tables)});
            Ok(BettiOutput { json, tables })
        }
        BettiMode::Poincare => Ok(BettiOutput { json: poincare(&delta, cfg)?, tables: Vec::new() }),
    }
}

fn poincare(delta: &SimplicialComplex, cfg: &RunConfig) -> Result<Value, CliError> {
    let h = h_vector_r_delta(delta)?;
    let strand = poincare_from_hilbert(&h, delta.n(), cfg.imax)?;
    let mut per = BTreeMap::new();
    for &c in &cfg.chars {
        let step = first_nonlinear_step(delta, c)?;
        // β_{i,i} is read off the Hilbert series as long as no β_{h,i} with h < i is nonzero,
        // which holds up to and including the first nonlinear step
        let certified = step.map_or(cfg.imax, |k| k.min(cfg.imax));
        let series = match poincare_r_delta(delta, c, cfg.imax) {
            Ok(s) => json!(s
                .terms()
                .map(|((i, j), b)| json!({"i": i, "j": j, "multiplicity": b.to_string()}))
                .collect::<Vec<_>>()),
            Err(e @ Error::SweepTooLarge { .. }) => json!({"skipped": e.to_string()}),
            Err(e) => return Err(e.into()),
        };
        per.insert(
            c.characteristic().to_string(),
            json!({"first_nonlinear_step": step, "linear_strand_certified_through": certified, "series": series}),
        );
    }
    Ok(json!({
        "h_r_delta": h,
        "krull_dimension": delta.n(),
        "linear_strand": strand.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
        "by_characteristic": per,
    }))
}

pub fn gamma(arg: &str, cfg: &RunConfig) -> Result<Value, CliError> {
    if let Some(h) = input::parse_int_list(arg) {
        let g = gamma_from_h(&h)?;
        let entries: Vec<Value> = match g.to_i64() {
            Some(v) => v.into_iter().map(Value::from).collect(),
            None => g.entries.iter().map(|x| Value::from(x.to_string())).collect(),
        };
        return Ok(json!({"h": h, "gamma": entries}));
    }
    let delta = input::load_complex(arg)?;
    let report = gamma_report(&delta)?;
    let mut out = report.to_json();
    let d = delta.dim() + 1;
    if d >= 3 && d % 2 == 1 {
        let top: BTreeMap<String, Value> = per_char(cfg, |c| match top_gamma_via_euler(&delta, c) {
            Ok(v) => json!(v.to_string()),
            Err(e) => json!({"skipped": e.to_string()}),
        });
        out["top_gamma_via_euler"] = json!(top);
    }
    Ok(out)
}
