//! Hochster's formula for squarefree monomial ideals.

use std::collections::HashSet;

use super::BettiTable;
use crate::complex::{Face, SimplicialComplex, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::groebner::Monomial;
use crate::homology::{reduced_homology_range, serre_condition};
use crate::par::{self, Exec};
use crate::with_field;

/// Largest lcm lattice we are willing to enumerate.
const LATTICE_LIMIT: usize = 1 << 22;

/// A monomial ideal made squarefree by splitting each variable `v` with
/// maximal exponent `e` into `v_1, ..., v_e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polarization {
    /// Original variable of each polarized variable.
    pub origin: Vec<usize>,
    /// Number of original variables.
    pub nvars: usize,
    pub generators: Vec<Face>,
}

impl Polarization {
    /// Multidegree in the original variables of a set of polarized variables.
    pub fn depolarize(&self, sigma: Face) -> Vec<u16> {
        let mut m = vec![0u16; self.nvars];
        for v in sigma.iter() {
            m[self.origin[v]] += 1;
        }
        m
    }
}

pub fn polarize(generators: &[Monomial]) -> Result<Polarization> {
    let nvars = generators.first().map_or(0, |g| g.nvars());
    let mut top = vec![0u16; nvars];
    for g in generators {
        for (v, &e) in g.exps().iter().enumerate() {
            top[v] = top[v].max(e);
        }
    }
    let total: usize = top.iter().map(|&e| e as usize).sum();
    if total > MAX_VERTICES {
        return Err(Error::TooManyVertices { got: total, max: MAX_VERTICES });
    }
    let mut first = vec![0usize; nvars];
    let mut origin = Vec::with_capacity(total);
    for v in 0..nvars {
        first[v] = origin.len();
        origin.extend(std::iter::repeat(v).take(top[v] as usize));
    }
    let generators = generators
        .iter()
        .map(|g| {
            Face::from_indices(
                g.exps().iter().enumerate().flat_map(|(v, &e)| {
                    let base = first[v];
                    (0..e as usize).map(move |k| base + k)
                }),
            )
        })
        .collect();
    Ok(Polarization { origin, nvars, generators })
}

fn minimal_generators(gens: &[Face]) -> Vec<Face> {
    let mut out: Vec<Face> = Vec::new();
    let mut sorted = gens.to_vec();
    sorted.sort_by_key(|f| f.len());
    sorted.dedup();
    for g in sorted {
        if !out.iter().any(|h| h.is_subset(g)) {
            out.push(g);
        }
    }
    out
}

/// All unions of nonempty sets of generators.
fn lcm_lattice(gens: &[Face]) -> Result<Vec<Face>> {
    let mut seen: HashSet<Face> = gens.iter().copied().collect();
    let mut frontier: Vec<Face> = gens.to_vec();
    while let Some(s) = frontier.pop() {
        for &g in gens {
            let u = s.union(g);
            if seen.insert(u) {
                if seen.len() > LATTICE_LIMIT {
                    return Err(Error::SweepTooLarge { estimate: seen.len() as u128 });
                }
                frontier.push(u);
            }
        }
    }
    let mut out: Vec<Face> = seen.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    Ok(out)
}

/// Restriction to `sigma` of the complex whose nonfaces are generated by `gens`,
/// reindexed onto `0..|sigma|`.
fn restricted_complex(sigma: Face, gens: &[Face]) -> SimplicialComplex {
    let verts = sigma.to_vec();
    let local: Vec<Face> = gens
        .iter()
        .filter(|g| g.is_subset(sigma))
        .map(|g| Face::from_indices(g.iter().map(|v| verts.binary_search(&v).expect("inside sigma"))))
        .collect();
    let k = verts.len();
    let ok = |f: Face| !local.iter().any(|g| g.is_subset(f));
    let mut facets = Vec::new();
    let mut stack = vec![(Face::EMPTY, 0usize)];
    while let Some((f, start)) = stack.pop() {
        for v in start..k {
            let g = f.with(v);
            if ok(g) {
                stack.push((g, v + 1));
            }
        }
        if (0..k).all(|v| f.contains(v) || !ok(f.with(v))) {
            facets.push(f);
        }
    }
    let labels = (0..k).map(|v| v.to_string()).collect();
    SimplicialComplex::from_faces(labels, facets).expect("nonempty face list")
}

/// `β_{i,σ}` for `i <= i_max`, as `(i, σ, value)` with value nonzero.
fn squarefree_betti(exec: Exec, gens: &[Face], spec: FieldSpec, i_max: usize) -> Result<Vec<(usize, Face, u64)>> {
    let i_max = i_max.min(MAX_VERTICES);
    let gens = minimal_generators(gens);
    if gens.iter().any(|g| g.is_empty()) {
        return Ok(vec![(0, Face::EMPTY, 1)]);
    }
    let lattice = lcm_lattice(&gens)?;
    let per_sigma = par::map(exec, &lattice, |&sigma| {
        let k = sigma.len() as i32;
        let (lo, hi) = (k - i_max as i32 - 2, k - 2);
        let complex = restricted_complex(sigma, &gens);
        let dims = with_field!(spec, |f| reduced_homology_range(&f, &complex, lo, hi)).expect("nonvoid");
        let base = lo.max(-1);
        (0..=i_max)
            .filter_map(|i| {
                let deg = k - i as i32 - 2;
                let idx = deg - base;
                let v = if idx >= 0 { dims.get(idx as usize).copied().unwrap_or(0) } else { 0 };
                (v > 0).then_some((i, sigma, v))
            })
            .collect::<Vec<_>>()
    });
    Ok(per_sigma.into_iter().flatten().collect())
}

/// Graded and multigraded Betti numbers of the ideal generated by squarefree
/// monomials, over the polynomial ring, for `i <= i_max`.
pub fn hochster_betti(generators: &[Monomial], spec: FieldSpec, i_max: usize) -> Result<BettiTable> {
    if generators.iter().any(|g| !g.is_squarefree()) {
        return Err(Error::NotSquarefree);
    }
    monomial_ideal_betti(generators, spec, i_max)
}

/// Like [`hochster_betti`], polarizing non-squarefree generators first.
/// Multidegrees are reported in the original variables.
pub fn monomial_ideal_betti(generators: &[Monomial], spec: FieldSpec, i_max: usize) -> Result<BettiTable> {
    let mut table = BettiTable::new(i_max);
    if generators.is_empty() {
        return Ok(table);
    }
    let pol = polarize(generators)?;
    for (i, sigma, v) in squarefree_betti(Exec::default(), &pol.generators, spec, i_max)? {
        table.add_multigraded(i, pol.depolarize(sigma), v);
    }
    Ok(table)
}

/// Largest `k` such that `β_{i,j} = 0` for `1 <= i <= k` and `j > g + i`,
/// where all generators have degree `g`. `None` means linear throughout
/// the computed window.
pub fn linear_steps(table: &BettiTable, generator_degree: usize) -> Result<Option<usize>> {
    if table.entries().keys().any(|&(i, j)| i == 0 && j != generator_degree) {
        return Err(Error::MixedGenerators);
    }
    let first_bad = table
        .entries()
        .keys()
        .filter(|&&(i, j)| i >= 1 && j > generator_degree + i)
        .map(|&(i, _)| i)
        .min();
    Ok(first_bad.map(|i| i - 1))
}

/// Both sides of the Eagon–Reiner / Terai–Yanagawa equivalence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TyCheck {
    /// `Δ` satisfies (S_r).
    pub serre: bool,
    /// The Alexander dual ideal is linear for `r - 1` steps.
    pub linear: bool,
}

impl TyCheck {
    pub fn agree(&self) -> bool {
        self.serre == self.linear
    }
}

/// Computes (S_r) from link homology and the linearity of the Alexander
/// dual ideal from Hochster's formula, independently.
pub fn check_terai_yanagawa(delta: &SimplicialComplex, spec: FieldSpec, r: usize) -> Result<TyCheck> {
    let d = (delta.dim() + 1).max(0) as usize;
    if r < 2 || r > d {
        return Err(Error::BadParams(format!("need 2 <= r <= {d}, got r = {r}")));
    }
    let serre = serre_condition(delta, r, spec);
    let n = delta.n();
    let gens: Vec<Monomial> = delta
        .alexander_dual_generators()
        .into_iter()
        .map(|f| Monomial::from_support(n, f.iter()))
        .collect();
    let table = hochster_betti(&gens, spec, r - 1)?;
    let degrees: HashSet<u32> = gens.iter().map(|g| g.degree()).collect();
    let linear = match degrees.len() {
        1 => match linear_steps(&table, *degrees.iter().next().unwrap() as usize)? {
            None => true,
            Some(k) => k >= r - 1,
        },
        _ => false,
    };
    Ok(TyCheck { serre, linear })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;

    fn mono(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    /// Betti numbers from the Taylor complex: `β_{i,σ}` is the homology of
    /// the chain complex of generator subsets with lcm `σ`.
    fn taylor_oracle(gens: &[Face], i: usize, sigma: Face) -> u64 {
        use crate::field::{rank, Field, Rationals};
        let q = Rationals;
        let g = gens.len();
        let subsets_with_lcm = |size: usize| -> Vec<u64> {
            (1u64..1 << g)
                .filter(|s| s.count_ones() as usize == size)
                .filter(|s| (0..g).filter(|k| s >> k & 1 == 1).fold(Face::EMPTY, |a, k| a.union(gens[k])) == sigma)
                .collect()
        };
        let boundary_rank = |size: usize| -> usize {
            if size <= 1 {
                return 0;
            }
            let src = subsets_with_lcm(size);
            let tgt = subsets_with_lcm(size - 1);
            let rows = src
                .iter()
                .map(|s| {
                    let mut row = Vec::new();
                    let members: Vec<usize> = (0..g).filter(|k| s >> k & 1 == 1).collect();
                    for (pos, k) in members.iter().enumerate() {
                        let t = s & !(1 << k);
                        if let Some(idx) = tgt.iter().position(|&x| x == t) {
                            row.push((idx, q.from_i64(if pos % 2 == 0 { 1 } else { -1 })));
                        }
                    }
                    row.sort_by_key(|e| e.0);
                    row
                })
                .collect();
            rank(&q, rows)
        };
        let size = i + 1;
        let c = subsets_with_lcm(size).len();
        (c - boundary_rank(size) - boundary_rank(size + 1)) as u64
    }

    #[test]
    fn path_dual() {
        let gens = vec![mono(&[0, 0, 0, 1, 1]), mono(&[1, 0, 0, 0, 1]), mono(&[1, 1, 0, 0, 0])];
        let t = hochster_betti(&gens, FieldSpec::RATIONALS, 4).unwrap();
        assert_eq!(t.entries().iter().map(|(&k, &v)| (k, v)).collect::<Vec<_>>(), vec![((0, 2), 3), ((1, 3), 2)]);
        assert_eq!(linear_steps(&t, 2).unwrap(), None);
        let faces: Vec<Face> = gens.iter().map(|g| Face::from_indices(g.support())).collect();
        for (&(i, ref m), &v) in t.multigraded() {
            let sigma = Face::from_indices(m.iter().enumerate().filter(|e| *e.1 > 0).map(|e| e.0));
            assert_eq!(taylor_oracle(&faces, i, sigma), v);
        }
    }

    #[test]
    fn principal_and_unit() {
        let t = hochster_betti(&[mono(&[1, 1, 1])], FieldSpec::RATIONALS, 3).unwrap();
        assert_eq!(t.entries().len(), 1);
        assert_eq!(t.get(0, 3), 1);
        assert_eq!(linear_steps(&t, 3).unwrap(), None);
        let unit = hochster_betti(&[mono(&[0, 0])], FieldSpec::RATIONALS, 3).unwrap();
        assert_eq!(unit.get(0, 0), 1);
        assert_eq!(hochster_betti(&[mono(&[2, 0])], FieldSpec::RATIONALS, 1), Err(Error::NotSquarefree));
    }

    #[test]
    fn echo_polarized() {
        // y1y2, y2^2 y3^2, y3^4 in the variables y1, y2, y3
        let gens = vec![mono(&[1, 1, 0]), mono(&[0, 2, 2]), mono(&[0, 0, 4])];
        let t = monomial_ideal_betti(&gens, FieldSpec::RATIONALS, 3).unwrap();
        let got: Vec<((usize, usize), u64)> = t.entries().iter().map(|(&k, &v)| (k, v)).collect();
        assert_eq!(got, vec![((0, 2), 1), ((0, 4), 2), ((1, 5), 1), ((1, 6), 2), ((2, 7), 1)]);
        assert_eq!(t.regularity(), Some(5));
        assert_eq!(linear_steps(&t, 2), Err(Error::MixedGenerators));
    }

    #[test]
    fn rp2_dual_linearity() {
        let rp2 = builtins::rp2_flag();
        let n = rp2.n();
        let gens: Vec<Monomial> =
            rp2.alexander_dual_generators().into_iter().map(|f| Monomial::from_support(n, f.iter())).collect();
        let t2 = hochster_betti(&gens, FieldSpec::of(2), 3).unwrap();
        assert_eq!(linear_steps(&t2, 8).unwrap(), Some(1));
        let t3 = hochster_betti(&gens, FieldSpec::of(3), 3).unwrap();
        assert_eq!(linear_steps(&t3, 8).unwrap(), None);
    }

    #[test]
    fn terai_yanagawa() {
        let rp2 = builtins::rp2_flag();
        let c = check_terai_yanagawa(&rp2, FieldSpec::of(2), 3).unwrap();
        assert_eq!(c, TyCheck { serre: false, linear: false });
        let oct = builtins::cross_polytope_boundary(3).unwrap();
        assert_eq!(check_terai_yanagawa(&oct, FieldSpec::RATIONALS, 3).unwrap(), TyCheck { serre: true, linear: true });
        let simplex = SimplicialComplex::from_numbered(3, &[&[1, 2, 3]]).unwrap();
        for r in 2..=3 {
            assert_eq!(check_terai_yanagawa(&simplex, FieldSpec::of(5), r).unwrap(), TyCheck { serre: true, linear: true });
        }
        assert!(check_terai_yanagawa(&rp2, FieldSpec::of(2), 4).is_err());
    }
}
