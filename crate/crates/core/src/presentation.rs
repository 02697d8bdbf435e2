//! Defining equations of `R_Δ` and of its Artinian reduction.
//!
//! The ambient ring has variables `x_1..x_n, y_1..y_n` and one `z_F` per
//! facet `F` of `Δ`. Generators come in five families: nonface monomials
//! `x^N`, whiskers `x_i y_i`, all quadrics `z_F z_G` (squares included),
//! mixed monomials `x_i z_F` for `i ∉ F`, and binomials
//! `b_{F1,F2} = y^{F1∖F2} z_{F1} − y^{F2∖F1} z_{F2}`.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde_json::{json, Value};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::groebner::Monomial;
use crate::homology::serre_condition;

/// Variable layout of the ambient polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingContext {
    labels: Vec<String>,
    facets: Vec<Face>,
    artinian: bool,
}

impl RingContext {
    pub fn new(delta: &SimplicialComplex) -> Self {
        RingContext { labels: delta.labels().to_vec(), facets: delta.facets().to_vec(), artinian: false }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_artinian(&self) -> bool {
        self.artinian
    }

    /// `d = dim Δ + 1`.
    pub fn d(&self) -> usize {
        self.facets.first().map_or(0, |f| f.len())
    }

    /// The a-invariant `d - n` of the face ring of the Bier ball.
    pub fn a_invariant(&self) -> i64 {
        self.d() as i64 - self.n() as i64
    }

    pub fn nvars(&self) -> usize {
        self.z_offset() + self.facets.len()
    }

    pub fn x(&self, i: usize) -> usize {
        i
    }

    /// Index of `y_i`; in the Artinian ring `y_i` is identified with `x_i`.
    pub fn y(&self, i: usize) -> usize {
        if self.artinian {
            i
        } else {
            self.n() + i
        }
    }

    pub fn z(&self, facet: usize) -> usize {
        self.z_offset() + facet
    }

    pub fn z_offset(&self) -> usize {
        if self.artinian {
            self.n()
        } else {
            2 * self.n()
        }
    }

    pub fn facet_index(&self, f: Face) -> Option<usize> {
        self.facets.iter().position(|&g| g == f)
    }

    /// Concatenated labels; joined by `_` when some label has several characters.
    pub fn facet_name(&self, f: Face) -> String {
        let parts: Vec<&str> = f.iter().map(|i| self.labels[i].as_str()).collect();
        if self.labels.iter().all(|l| l.chars().count() == 1) {
            parts.concat()
        } else {
            parts.join("_")
        }
    }

    /// `x_<l>`, then `y_<l>` (omitted when Artinian), then `z_<facet>`.
    pub fn variable_names(&self) -> Vec<String> {
        let mut names: Vec<String> = self.labels.iter().map(|l| format!("x_{l}")).collect();
        if !self.artinian {
            names.extend(self.labels.iter().map(|l| format!("y_{l}")));
        }
        names.extend(self.facets.iter().map(|&f| format!("z_{}", self.facet_name(f))));
        names
    }

    /// Squarefree monomial `y^S` (or `x^S` when Artinian).
    pub fn y_monomial(&self, s: Face) -> Monomial {
        Monomial::from_support(self.nvars(), s.iter().map(|i| self.y(i)))
    }

    pub fn x_monomial(&self, s: Face) -> Monomial {
        Monomial::from_support(self.nvars(), s.iter().map(|i| self.x(i)))
    }

    /// `b_{F1,F2}` as signed terms.
    pub fn binomial(&self, f1: Face, f2: Face) -> Vec<(i64, Monomial)> {
        let (i1, i2) = (self.facet_index(f1).expect("facet"), self.facet_index(f2).expect("facet"));
        let t1 = self.y_monomial(f1.minus(f2)).mul_var(self.z(i1));
        let t2 = self.y_monomial(f2.minus(f1)).mul_var(self.z(i2));
        vec![(1, t1), (-1, t2)]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Nonface,
    Whisker,
    ZQuadric,
    Mixed,
    Binomial,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::Nonface => "nonface",
            Family::Whisker => "whisker",
            Family::ZQuadric => "z-quadric",
            Family::Mixed => "mixed",
            Family::Binomial => "binomial",
        };
        f.write_str(s)
    }
}

/// A generator with integer coefficients, valid in every characteristic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub family: Family,
    pub terms: Vec<(i64, Monomial)>,
    /// The facet pair `(F1, F2)` of a binomial, `F1` lexicographically larger.
    pub pair: Option<(Face, Face)>,
}

impl Generator {
    fn monomial(family: Family, m: Monomial) -> Self {
        Generator { family, terms: vec![(1, m)], pair: None }
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|t| t.1.degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.iter().all(|t| t.1.degree() == self.degree())
    }

    pub fn render(&self, names: &[String]) -> String {
        let mut out = String::new();
        for (k, (c, m)) in self.terms.iter().enumerate() {
            let body = m.render(names);
            let mag = c.unsigned_abs();
            let term = if mag == 1 { body } else { format!("{mag}*{body}") };
            if k == 0 {
                if *c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if *c < 0 { " - " } else { " + " });
            }
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub ring: RingContext,
    pub generators: Vec<Generator>,
}

impl Presentation {
    pub fn count(&self, family: Family) -> usize {
        self.generators.iter().filter(|g| g.family == family).count()
    }

    pub fn binomial_pairs(&self) -> Vec<(Face, Face)> {
        self.generators.iter().filter_map(|g| g.pair).collect()
    }
}

/// Unordered facet pair with the lexicographically larger facet first.
pub fn oriented_pair(a: Face, b: Face) -> (Face, Face) {
    if a > b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Generators of the four monomial families.
fn monomial_generators(delta: &SimplicialComplex, ring: &RingContext) -> Vec<Generator> {
    let nv = ring.nvars();
    let mut out: Vec<Generator> = delta
        .minimal_nonfaces()
        .into_iter()
        .map(|nf| Generator::monomial(Family::Nonface, ring.x_monomial(nf)))
        .collect();
    for i in 0..ring.n() {
        out.push(Generator::monomial(
            Family::Whisker,
            Monomial::from_support(nv, [ring.x(i), ring.y(i)]),
        ));
    }
    let m = ring.facets().len();
    for a in 0..m {
        for b in a..m {
            out.push(Generator::monomial(
                Family::ZQuadric,
                Monomial::from_support(nv, [ring.z(a), ring.z(b)]),
            ));
        }
    }
    for (k, &f) in ring.facets().iter().enumerate() {
        for i in 0..ring.n() {
            if !f.contains(i) {
                out.push(Generator::monomial(
                    Family::Mixed,
                    Monomial::from_support(nv, [ring.x(i), ring.z(k)]),
                ));
            }
        }
    }
    out
}

fn binomial_generator(ring: &RingContext, f1: Face, f2: Face) -> Generator {
    let (f1, f2) = oriented_pair(f1, f2);
    Generator { family: Family::Binomial, terms: ring.binomial(f1, f2), pair: Some((f1, f2)) }
}

/// All generators of the defining ideal, with one binomial for every facet pair.
pub fn r_delta_presentation(delta: &SimplicialComplex) -> Result<Presentation> {
    if !delta.is_pure() || delta.is_void() {
        return Err(Error::NotPure);
    }
    let ring = RingContext::new(delta);
    let mut generators = monomial_generators(delta, &ring);
    let facets = ring.facets().to_vec();
    for a in 0..facets.len() {
        for b in a + 1..facets.len() {
            generators.push(binomial_generator(&ring, facets[a], facets[b]));
        }
    }
    Ok(Presentation { ring, generators })
}

/// The presentation with redundant binomials removed.
pub fn minimal_presentation(delta: &SimplicialComplex) -> Result<Presentation> {
    Ok(binomial_redundancy_filter(&r_delta_presentation(delta)?))
}

/// Drops `b_{F1,F2}` when `F1` and `F2` are joined by a path of facets
/// containing `F1 ∩ F2` whose consecutive members meet in codimension one.
/// Codimension-one binomials always survive.
pub fn binomial_redundancy_filter(p: &Presentation) -> Presentation {
    let facets = p.ring.facets();
    let d = p.ring.d();
    let adjacent = |a: Face, b: Face| a.intersection(b).len() + 1 == d;
    let connected = |f1: Face, f2: Face| -> bool {
        let core = f1.intersection(f2);
        let allowed: Vec<Face> = facets.iter().copied().filter(|g| core.is_subset(*g)).collect();
        let mut seen = HashSet::from([f1]);
        let mut queue = VecDeque::from([f1]);
        while let Some(g) = queue.pop_front() {
            if g == f2 {
                return true;
            }
            for &h in &allowed {
                if !seen.contains(&h) && adjacent(g, h) {
                    seen.insert(h);
                    queue.push_back(h);
                }
            }
        }
        false
    };
    let generators = p
        .generators
        .iter()
        .filter(|g| match g.pair {
            Some((f1, f2)) => adjacent(f1, f2) || !connected(f1, f2),
            None => true,
        })
        .cloned()
        .collect();
    Presentation { ring: p.ring.clone(), generators }
}

/// Quadraticity of `R_Δ`, equivalent to (S₂).
pub fn is_quadratic(delta: &SimplicialComplex, spec: FieldSpec) -> Result<bool> {
    if !delta.is_pure() {
        return Err(Error::NotPure);
    }
    if !delta.is_flag() {
        return Err(Error::NotFlag);
    }
    Ok(serre_condition(delta, 2, spec))
}

/// `(1, f_0 + f_{d-1}, f_1 + f_{d-2}, ..., f_{d-1} + f_0, 1)`.
pub fn h_vector_r_delta(delta: &SimplicialComplex) -> Result<Vec<i64>> {
    if !delta.is_pure() || delta.is_void() {
        return Err(Error::NotPure);
    }
    let f = delta.f_vector();
    let d = f.len() - 1;
    let mut h = vec![1];
    for i in 1..=d {
        h.push(f[i] + f[d - i + 1]);
    }
    h.push(1);
    Ok(h)
}

/// Substitutes `y_i ↦ x_i`; the result lives in the variables `x` and `z`.
pub fn artinian_reduction(p: &Presentation) -> Presentation {
    if p.ring.artinian {
        return p.clone();
    }
    let mut ring = p.ring.clone();
    ring.artinian = true;
    let n = p.ring.n();
    let map = |m: &Monomial| -> Monomial {
        let e = m.exps();
        let mut out = vec![0u16; ring.nvars()];
        for i in 0..n {
            out[i] = e[i] + e[n + i];
        }
        for k in 0..ring.facets().len() {
            out[n + k] = e[2 * n + k];
        }
        Monomial::from_exponents(out)
    };
    let generators = p
        .generators
        .iter()
        .map(|g| Generator {
            family: g.family,
            terms: g.terms.iter().map(|(c, m)| (*c, map(m))).collect(),
            pair: g.pair,
        })
        .collect();
    Presentation { ring, generators }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Macaulay2,
    Singular,
    Json,
}

impl std::str::FromStr for ExportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "macaulay2" | "m2" => Ok(ExportFormat::Macaulay2),
            "singular" => Ok(ExportFormat::Singular),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

/// Canonical JSON: ring variables and generator records with family tags.
pub fn to_json(p: &Presentation, spec: FieldSpec) -> Value {
    let names = p.ring.variable_names();
    let gens: Vec<Value> = p
        .generators
        .iter()
        .map(|g| {
            let terms: Vec<Value> = g
                .terms
                .iter()
                .map(|(c, m)| {
                    let exps: serde_json::Map<String, Value> = m
                        .support()
                        .into_iter()
                        .map(|v| (names[v].clone(), json!(m.exp(v))))
                        .collect();
                    json!({"coefficient": c, "exponents": exps})
                })
                .collect();
            json!({
                "family": g.family.to_string(),
                "degree": g.degree(),
                "polynomial": g.render(&names),
                "terms": terms,
            })
        })
        .collect();
    json!({
        "characteristic": spec.characteristic(),
        "variables": names,
        "artinian": p.ring.artinian,
        "a_invariant": p.ring.a_invariant(),
        "generators": gens,
    })
}

pub fn export(p: &Presentation, format: ExportFormat, spec: FieldSpec) -> String {
    let names = p.ring.variable_names();
    let polys: Vec<String> = p.generators.iter().map(|g| g.render(&names)).collect();
    match format {
        ExportFormat::Json => {
            serde_json::to_string_pretty(&to_json(p, spec)).expect("json") + "\n"
        }
        ExportFormat::Macaulay2 => {
            let coeffs = match spec.characteristic() {
                0 => "QQ".to_string(),
                q => format!("ZZ/{q}"),
            };
            let vars = if names.is_empty() { "t".to_string() } else { names.join(", ") };
            let ideal = if polys.is_empty() { "0_R".to_string() } else { polys.join(",\n    ") };
            format!("R = {coeffs}[{vars}];\nI = ideal(\n    {ideal});\n")
        }
        ExportFormat::Singular => {
            let vars = if names.is_empty() { "t".to_string() } else { names.join(", ") };
            let ideal = if polys.is_empty() { "0".to_string() } else { polys.join(",\n    ") };
            format!(
                "ring R = {}, ({vars}), dp;\nideal I =\n    {ideal};\n",
                spec.characteristic()
            )
        }
    }
}
