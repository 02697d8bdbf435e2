//! Buchberger's algorithm with the product and chain criteria.

use std::collections::{BTreeSet, HashSet};

use super::poly::{reduce_traced, s_polynomial, ReductionStep};
use super::{Monomial, Polynomial, TermOrder};
use crate::error::{Error, Result};
use crate::field::Field;

/// Record of one S-pair: which basis elements, and how it reduced.
#[derive(Clone, Debug)]
pub struct PairRecord {
    pub i: usize,
    pub j: usize,
    pub lcm_degree: u32,
    pub steps: Vec<ReductionStep>,
    /// Index of the new basis element, if the remainder was nonzero.
    pub added: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct GbResult<F: Field> {
    pub basis: Vec<Polynomial<F>>,
    /// Number of input generators (the first entries of `basis`).
    pub inputs: usize,
    /// Pairs skipped because their lcm exceeded the degree cap.
    pub deferred: usize,
    pub pairs_reduced: usize,
    pub pairs_skipped_by_criteria: usize,
    pub log: Vec<PairRecord>,
}

impl<F: Field> GbResult<F> {
    /// True iff no S-pair was left unprocessed.
    pub fn is_complete(&self) -> bool {
        self.deferred == 0
    }

    /// Elements added beyond the inputs.
    pub fn added(&self) -> &[Polynomial<F>] {
        &self.basis[self.inputs..]
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| g.lm().clone()).collect()
    }
}

/// Gröbner basis of `generators`, processing S-pairs with lcm degree at
/// most `degree_cap` (lowest degree first, then by index). When pairs are
/// deferred the result is a truncated basis, correct up to `degree_cap`.
pub fn buchberger<F: Field>(
    field: &F,
    order: &TermOrder,
    generators: &[Polynomial<F>],
    degree_cap: u32,
    keep_log: bool,
) -> GbResult<F> {
    let mut basis: Vec<Polynomial<F>> =
        generators.iter().filter(|g| !g.is_zero()).map(|g| g.monic(field)).collect();
    let inputs = basis.len();
    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut deferred: HashSet<(usize, usize)> = HashSet::new();
    let push_pairs = |basis: &[Polynomial<F>], new: usize, queue: &mut BTreeSet<_>, pending: &mut HashSet<_>| {
        for i in 0..new {
            let deg = basis[i].lm().lcm(basis[new].lm()).degree();
            queue.insert((deg, i, new));
            pending.insert((i, new));
        }
    };
    for k in 0..basis.len() {
        push_pairs(&basis, k, &mut queue, &mut pending);
    }
    let mut result = GbResult {
        basis: Vec::new(),
        inputs,
        deferred: 0,
        pairs_reduced: 0,
        pairs_skipped_by_criteria: 0,
        log: Vec::new(),
    };
    while let Some((deg, i, j)) = queue.pop_first() {
        pending.remove(&(i, j));
        if deg > degree_cap {
            deferred.insert((i, j));
            continue;
        }
        let (fi, fj) = (&basis[i], &basis[j]);
        if fi.lm().coprime(fj.lm()) || chain_criterion(&basis, i, j, &pending, &deferred) {
            result.pairs_skipped_by_criteria += 1;
            continue;
        }
        let s = s_polynomial(field, order, fi, fj);
        let (r, steps) = reduce_traced(field, order, &s, &basis);
        result.pairs_reduced += 1;
        let mut added = None;
        if !r.is_zero() {
            basis.push(r.monic(field));
            let new = basis.len() - 1;
            push_pairs(&basis, new, &mut queue, &mut pending);
            added = Some(new);
        }
        if keep_log {
            result.log.push(PairRecord { i, j, lcm_degree: deg, steps, added });
        }
    }
    result.deferred = deferred.len();
    result.basis = basis;
    result
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Skip `(i, j)` if some `k` has `in(f_k) | lcm` and neither `(i, k)` nor
/// `(j, k)` is still waiting.
fn chain_criterion<F: Field>(
    basis: &[Polynomial<F>],
    i: usize,
    j: usize,
    pending: &HashSet<(usize, usize)>,
    deferred: &HashSet<(usize, usize)>,
) -> bool {
    let l = basis[i].lm().lcm(basis[j].lm());
    (0..basis.len()).any(|k| {
        k != i
            && k != j
            && basis[k].lm().divides(&l)
            && !pending.contains(&key(i, k))
            && !pending.contains(&key(j, k))
            && !deferred.contains(&key(i, k))
            && !deferred.contains(&key(j, k))
    })
}

/// Interreduced, monic Gröbner basis from a complete one.
pub fn reduced_basis<F: Field>(field: &F, order: &TermOrder, gb: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
    let mut keep: Vec<Polynomial<F>> = Vec::new();
    for (k, g) in gb.iter().enumerate() {
        let redundant = gb.iter().enumerate().any(|(l, h)| {
            l != k && h.lm().divides(g.lm()) && (h.lm() != g.lm() || l < k)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for k in 0..keep.len() {
        let others: Vec<Polynomial<F>> =
            keep.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, h)| h.clone()).collect();
        let head = Polynomial::monomial(field, keep[k].lm().clone()).scale_mono(
            field,
            keep[k].lc(),
            &Monomial::one(keep[k].lm().nvars()),
        );
        let tail = keep[k].sub_scaled(field, order, &field.one(), &Monomial::one(keep[k].lm().nvars()), &head);
        let tail = super::reduce(field, order, &tail, &others);
        let mut terms: Vec<(Monomial, F::Elem)> = head.terms().to_vec();
        terms.extend_from_slice(tail.terms());
        out.push(Polynomial::from_terms(field, order, terms).monic(field));
    }
    out.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
    out
}

/// Number of standard monomials of each degree `0..=up_to_degree`, i.e.
/// monomials divisible by no monomial in `leading`.
pub fn count_standard_monomials(nvars: usize, leading: &[Monomial], up_to_degree: u32) -> Vec<u64> {
    let mut out = vec![1u64];
    // standard monomials of the current degree, each with its largest variable
    let mut layer: Vec<(Monomial, usize)> = vec![(Monomial::one(nvars), 0)];
    for _ in 1..=up_to_degree {
        let mut next = Vec::new();
        for (m, start) in &layer {
            for v in *start..nvars {
                let cand = m.mul_var(v);
                if !leading.iter().any(|l| l.divides(&cand)) {
                    next.push((cand, v));
                }
            }
        }
        out.push(next.len() as u64);
        layer = next;
    }
    out
}

/// Hilbert function in degrees `0..=up_to_degree` of the quotient by the
/// ideal generated by `generators`, via a Gröbner basis truncated at
/// `up_to_degree`. Fails with `CapExceeded` when `up_to_degree > degree_cap`.
pub fn hilbert_function_by_normal_forms<F: Field>(
    field: &F,
    order: &TermOrder,
    nvars: usize,
    generators: &[Polynomial<F>],
    up_to_degree: u32,
    degree_cap: u32,
) -> Result<Vec<u64>> {
    if up_to_degree > degree_cap {
        return Err(Error::CapExceeded(degree_cap));
    }
    let gb = buchberger(field, order, generators, up_to_degree, false);
    Ok(count_standard_monomials(nvars, &gb.leading_monomials(), up_to_degree))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn mono(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn zero_ideal() {
        let q = Rationals;
        let gb = buchberger::<Rationals>(&q, &TermOrder::Grevlex, &[], 6, false);
        assert!(gb.basis.is_empty() && gb.is_complete());
        let h = hilbert_function_by_normal_forms::<Rationals>(&q, &TermOrder::Grevlex, 2, &[], 4, 6).unwrap();
        assert_eq!(h, vec![1, 2, 3, 4, 5]);
        assert_eq!(
            hilbert_function_by_normal_forms::<Rationals>(&q, &TermOrder::Grevlex, 2, &[], 7, 6),
            Err(Error::CapExceeded(6))
        );
    }

    #[test]
    fn twisted_cubic() {
        // ideal of 2x2 minors of [[a,b,c],[b,c,d]]: Hilbert function 3t+1
        let f = PrimeField::new(101).unwrap();
        let o = TermOrder::Grevlex;
        let gens: Vec<Polynomial<PrimeField>> = [
            vec![(1, mono(&[1, 0, 1, 0])), (-1, mono(&[0, 2, 0, 0]))],
            vec![(1, mono(&[1, 0, 0, 1])), (-1, mono(&[0, 1, 1, 0]))],
            vec![(1, mono(&[0, 1, 0, 1])), (-1, mono(&[0, 0, 2, 0]))],
        ]
        .iter()
        .map(|t| Polynomial::from_int_terms(&f, &o, t))
        .collect();
        let h = hilbert_function_by_normal_forms(&f, &o, 4, &gens, 5, 6).unwrap();
        assert_eq!(h, vec![1, 4, 7, 10, 13, 16]);
        let gb = buchberger(&f, &o, &gens, 6, true);
        assert!(gb.is_complete());
        let red = reduced_basis(&f, &o, &gb.basis);
        assert_eq!(red.len(), 3);
    }

    #[test]
    fn lex_like_weights_add_elements() {
        let q = Rationals;
        // x^2 - y, xy - 1 under a weight order preferring x
        let o = TermOrder::Weights { rows: vec![vec![10, 1]] };
        let gens = vec![
            Polynomial::from_int_terms(&q, &o, &[(1, mono(&[2, 0])), (-1, mono(&[0, 1]))]),
            Polynomial::from_int_terms(&q, &o, &[(1, mono(&[1, 1])), (-1, mono(&[0, 0]))]),
        ];
        let gb = buchberger(&q, &o, &gens, 10, true);
        assert!(gb.is_complete());
        let red = reduced_basis(&q, &o, &gb.basis);
        // reduced basis {x - y^2, y^3 - 1}
        let names = vec!["x".to_string(), "y".to_string()];
        let shown: Vec<String> = red.iter().map(|g| g.render(&q, &names)).collect();
        assert_eq!(shown, ["x - y^2", "y^3 - 1"]);
    }
}
