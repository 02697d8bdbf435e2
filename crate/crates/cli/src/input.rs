//! Loading complexes, ideals and facet orders from the command line.

use std::fs;
use std::path::Path;

use rdelta::builtins;
use rdelta::complex::Face;
use rdelta::groebner::Monomial;
use rdelta::resolutions::FlagRing;
use rdelta::{Error, SimplicialComplex};
use serde_json::Value;

use crate::CliError;

/// `builtin:<name>` or a path to a JSON or text complex file.
pub fn load_complex(arg: &str) -> Result<SimplicialComplex, CliError> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        return Ok(builtins::by_name(name)?);
    }
    let text = read(arg)?;
    Ok(SimplicialComplex::parse(&text)?)
}

pub fn read(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))
}

/// Whether the file holds an ideal rather than a complex.
pub fn is_ideal_file(path: &str) -> bool {
    if path.starts_with("builtin:") || !Path::new(path).exists() {
        return false;
    }
    read(path)
        .ok()
        .and_then(|t| serde_json::from_str::<Value>(&t).ok())
        .is_some_and(|v| v.get("generators").is_some())
}

/// A monomial ideal read from JSON:
/// `{"variables": [...], "generators": ["y1*y2^2", ...], "nonedges": [["x1","y1"], ...]}`.
pub struct IdealInput {
    pub variables: Vec<String>,
    pub generators: Vec<Monomial>,
    pub ring: Option<FlagRing>,
}

pub fn load_ideal(path: &str) -> Result<IdealInput, CliError> {
    let v: Value = serde_json::from_str(&read(path)?).map_err(|e| Error::Parse(e.to_string()))?;
    let strings = |key: &str| -> Result<Vec<String>, CliError> {
        let arr = v.get(key).and_then(Value::as_array).ok_or_else(|| Error::Parse(format!("missing `{key}`")))?;
        arr.iter()
            .map(|x| x.as_str().map(str::to_string).ok_or_else(|| Error::Parse(format!("`{key}` must hold strings")).into()))
            .collect()
    };
    let variables = strings("variables")?;
    let generators = strings("generators")?
        .iter()
        .map(|g| parse_monomial(g, &variables))
        .collect::<Result<Vec<_>, _>>()?;
    let ring = match v.get("nonedges").and_then(Value::as_array) {
        None => None,
        Some(pairs) => {
            let mut idx = Vec::new();
            for p in pairs {
                let pair: Vec<&str> = p.as_array().into_iter().flatten().filter_map(Value::as_str).collect();
                let [a, b] = pair[..] else {
                    return Err(Error::Parse("each nonedge needs two variables".into()).into());
                };
                idx.push((var_index(a, &variables)?, var_index(b, &variables)?));
            }
            Some(FlagRing::from_nonedges(variables.clone(), &idx)?)
        }
    };
    Ok(IdealInput { variables, generators, ring })
}

fn var_index(name: &str, vars: &[String]) -> Result<usize, CliError> {
    vars.iter().position(|v| v == name).ok_or_else(|| Error::UnknownVertex(name.to_string()).into())
}

/// `1`, `x`, `x^2*y`, ...
pub fn parse_monomial(s: &str, vars: &[String]) -> Result<Monomial, CliError> {
    let mut exps = vec![0u16; vars.len()];
    let s = s.trim();
    if s == "1" {
        return Ok(Monomial::from_exponents(exps));
    }
    for factor in s.split('*') {
        let (name, e) = match factor.trim().split_once('^') {
            Some((n, e)) => (n, e.parse::<u16>().map_err(|_| Error::Parse(format!("bad exponent in `{s}`")))?),
            None => (factor.trim(), 1),
        };
        exps[var_index(name, vars)?] += e;
    }
    Ok(Monomial::from_exponents(exps))
}

/// `"123,234,345"`; facets with multi-character labels use `_` or spaces
/// between labels, e.g. `"1_10_11,2_10_11"`.
pub fn parse_facet_order(delta: &SimplicialComplex, text: &str) -> Result<Vec<Face>, CliError> {
    let single = delta.labels().iter().all(|l| l.chars().count() == 1);
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let labels: Vec<String> = if tok.contains('_') || tok.contains(' ') {
                tok.split(['_', ' ']).filter(|s| !s.is_empty()).map(str::to_string).collect()
            } else if single {
                tok.chars().map(|c| c.to_string()).collect()
            } else {
                vec![tok.to_string()]
            };
            Ok(delta.face_from_labels(&labels)?)
        })
        .collect()
}

/// Facet name in the same syntax accepted by [`parse_facet_order`].
pub fn facet_name(delta: &SimplicialComplex, f: Face) -> String {
    let labels = delta.face_labels(f);
    if delta.labels().iter().all(|l| l.chars().count() == 1) {
        labels.concat()
    } else {
        labels.join("_")
    }
}

/// `"1,14,24,14,1"` as an h-vector, if it looks like one.
pub fn parse_int_list(s: &str) -> Option<Vec<i64>> {
    if !s.contains(',') {
        return None;
    }
    s.split(',').map(|t| t.trim().parse().ok()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomials_and_orders() {
        let vars: Vec<String> = ["a", "b"].map(String::from).to_vec();
        assert_eq!(parse_monomial("a^2*b", &vars).unwrap().exps(), &[2, 1]);
        assert_eq!(parse_monomial("1", &vars).unwrap().exps(), &[0, 0]);
        assert!(parse_monomial("c", &vars).is_err());
        let path = builtins::path3();
        let order = parse_facet_order(&path, "234,123,345").unwrap();
        assert_eq!(facet_name(&path, order[0]), "234");
        assert_eq!(parse_int_list("1, 2,1"), Some(vec![1, 2, 1]));
        assert_eq!(parse_int_list("octahedron"), None);
    }
}
