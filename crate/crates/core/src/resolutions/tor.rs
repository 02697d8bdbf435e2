//! `Tor^{F[Γ]}(J, F)` for monomial ideals `J` of a flag Stanley–Reisner ring,
//! computed multidegree by multidegree from `J ⊗ GK`.

use std::collections::{HashMap, HashSet};

use super::koszul_dual::{basis_up_to, differential_terms, FlagRing};
use super::{monomial_ideal_betti, BettiTable};
use crate::error::{Error, Result};
use crate::field::{rank, Field, FieldSpec, SparseRow};
use crate::groebner::Monomial;
use crate::par::{self, Exec};
use crate::with_field;

/// Koszul dual basis up to some degree, indexed by support.
struct DualBasis {
    by_support: Vec<HashMap<Vec<u16>, Vec<Vec<u8>>>>,
}

impl DualBasis {
    fn new(ring: &FlagRing, j_max: usize) -> Self {
        let nv = ring.nvars();
        let by_support = basis_up_to(ring, j_max)
            .into_iter()
            .map(|words| {
                let mut map: HashMap<Vec<u16>, Vec<Vec<u8>>> = HashMap::new();
                for w in words {
                    let mut e = vec![0u16; nv];
                    for &l in &w {
                        e[l as usize] += 1;
                    }
                    map.entry(e).or_default().push(w);
                }
                map
            })
            .collect();
        DualBasis { by_support }
    }
}

/// Exponent vectors `n | m` with `|n| = size`.
fn divisors_of_degree(m: &[u16], size: usize) -> Vec<Vec<u16>> {
    fn go(m: &[u16], v: usize, left: usize, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if v == m.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest: usize = m[v + 1..].iter().map(|&e| e as usize).sum();
        let lo = left.saturating_sub(rest);
        for e in lo..=(m[v] as usize).min(left) {
            cur[v] = e as u16;
            go(m, v + 1, left - e, cur, out);
        }
        cur[v] = 0;
    }
    let mut out = Vec::new();
    go(m, 0, size, &mut vec![0; m.len()], &mut out);
    out
}

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

struct TorContext<'a> {
    ring: &'a FlagRing,
    gens: Vec<Vec<u16>>,
    dual: DualBasis,
}

impl TorContext<'_> {
    fn in_j(&self, u: &[u16]) -> bool {
        self.ring.is_blue_exps(u) && self.gens.iter().any(|g| divides(g, u))
    }

    /// Words `w` of length `i` with `m / supp(w)` a nonzero element of `J`.
    fn chain_basis(&self, i: usize, m: &[u16]) -> Vec<Vec<u8>> {
        let Some(level) = self.dual.by_support.get(i) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        for n in divisors_of_degree(m, i) {
            let Some(words) = level.get(&n) else { continue };
            let quotient: Vec<u16> = m.iter().zip(&n).map(|(a, b)| a - b).collect();
            if self.in_j(&quotient) {
                out.extend(words.iter().cloned());
            }
        }
        out
    }

    fn boundary_rank<F: Field>(&self, field: &F, source: &[Vec<u8>], target: &[Vec<u8>]) -> usize {
        if source.is_empty() || target.is_empty() {
            return 0;
        }
        let index: HashMap<&Vec<u8>, usize> = target.iter().enumerate().map(|(k, w)| (w, k)).collect();
        let rows: Vec<SparseRow<F::Elem>> = source
            .iter()
            .map(|w| {
                let mut row: SparseRow<F::Elem> = differential_terms(self.ring, w)
                    .into_iter()
                    .filter_map(|(c, _, t)| index.get(&t).map(|&k| (k, field.from_i64(c))))
                    .collect();
                row.sort_by_key(|e| e.0);
                row
            })
            .collect();
        rank(field, rows)
    }

    fn tor<F: Field>(&self, field: &F, i: usize, m: &[u16]) -> u64 {
        let here = self.chain_basis(i, m);
        if here.is_empty() {
            return 0;
        }
        let below = if i == 0 { Vec::new() } else { self.chain_basis(i - 1, m) };
        let above = self.chain_basis(i + 1, m);
        let r_out = self.boundary_rank(field, &here, &below);
        let r_in = self.boundary_rank(field, &above, &here);
        (here.len() - r_out - r_in) as u64
    }
}

fn context<'a>(ring: &'a FlagRing, generators: &[Monomial], j_max: usize) -> Result<TorContext<'a>> {
    if generators.iter().any(|g| g.nvars() != ring.nvars()) {
        return Err(Error::BadParams("generator has the wrong number of variables".into()));
    }
    if generators.iter().any(|g| !ring.is_blue(g)) {
        return Err(Error::NotBlueGenerators);
    }
    let gens = generators.iter().map(|g| g.exps().to_vec()).collect();
    Ok(TorContext { ring, gens, dual: DualBasis::new(ring, j_max) })
}

/// `dim Tor_i(J, F)_m` where `J ⊆ F[Γ]` is generated by the blue monomials `generators`.
pub fn tor_dimension(
    ring: &FlagRing,
    generators: &[Monomial],
    i: usize,
    m: &Monomial,
    spec: FieldSpec,
) -> Result<u64> {
    let ctx = context(ring, generators, i + 1)?;
    Ok(with_field!(spec, |f| ctx.tor(&f, i, m.exps())))
}

/// Tuning for the multidegree sweep.
#[derive(Clone, Copy, Debug)]
pub struct SweepOptions {
    pub exec: Exec,
    /// Largest number of candidate multidegrees before giving up.
    pub limit: u128,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { exec: Exec::default(), limit: 20_000_000 }
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n.saturating_sub(k));
    (0..k).fold(1u128, |acc, t| acc.saturating_mul(n - t) / (t + 1))
}

/// Monomials of degree `j` divisible by some generator.
fn candidates(nvars: usize, gens: &[Vec<u16>], j: usize) -> Vec<Vec<u16>> {
    let mut seen: HashSet<Vec<u16>> = HashSet::new();
    for g in gens {
        let dg: usize = g.iter().map(|&e| e as usize).sum();
        if dg > j {
            continue;
        }
        let mut stack = vec![(g.clone(), 0usize, j - dg)];
        while let Some((m, start, left)) = stack.pop() {
            if left == 0 {
                seen.insert(m);
                continue;
            }
            for v in start..nvars {
                let mut next = m.clone();
                next[v] += 1;
                stack.push((next, v, left - 1));
            }
        }
    }
    let mut out: Vec<Vec<u16>> = seen.into_iter().collect();
    out.sort();
    out
}

/// Betti numbers `β_{i,j}` of `J` over `F[Γ]` for `i <= i_max`.
///
/// Only `|m| <= i + reg` is swept, where `reg` is the regularity of the
/// ideal generated by the same monomials in the polynomial ring; Betti
/// numbers over `F[Γ]` vanish beyond it.
pub fn module_betti_over_gamma(
    ring: &FlagRing,
    generators: &[Monomial],
    i_max: usize,
    spec: FieldSpec,
) -> Result<BettiTable> {
    module_betti_over_gamma_with(ring, generators, i_max, spec, SweepOptions::default())
}

pub fn module_betti_over_gamma_with(
    ring: &FlagRing,
    generators: &[Monomial],
    i_max: usize,
    spec: FieldSpec,
    opts: SweepOptions,
) -> Result<BettiTable> {
    let mut table = BettiTable::new(i_max);
    if generators.is_empty() {
        return Ok(table);
    }
    let ctx = context(ring, generators, i_max + 1)?;
    let poly = monomial_ideal_betti(generators, spec, crate::complex::MAX_VERTICES)?;
    let reg = poly.regularity().unwrap_or(0).max(0) as usize;
    let g_min = generators.iter().map(|g| g.degree() as usize).min().unwrap_or(0);
    let nv = ring.nvars() as u128;
    let mut estimate = 0u128;
    for i in 0..=i_max {
        for j in i + g_min..=i + reg {
            estimate = estimate.saturating_add(binomial(j as u128 + nv - 1, nv - 1));
        }
    }
    if estimate > opts.limit {
        return Err(Error::SweepTooLarge { estimate });
    }
    let mut work: Vec<(usize, Vec<u16>)> = Vec::new();
    for i in 0..=i_max {
        for j in i + g_min..=i + reg {
            work.extend(candidates(ring.nvars(), &ctx.gens, j).into_iter().map(|m| (i, m)));
        }
    }
    let values = with_field!(spec, |f| par::map(opts.exec, &work, |(i, m)| ctx.tor(&f, *i, m)));
    for ((i, m), v) in work.into_iter().zip(values) {
        table.add_multigraded(i, m, v);
    }
    Ok(table)
}
