//! Shelling orders and quadratic Gröbner bases of `R_Δ`.

use std::collections::HashSet;

use super::order::compatible_term_order_for;
use super::{reduce, s_polynomial, Polynomial, TermOrder};
use crate::bier::FacetOrder;
use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::homology::serre_condition;
use crate::presentation::{oriented_pair, r_delta_presentation, Family, Generator, RingContext};
use crate::with_field;

fn require_pure(delta: &SimplicialComplex) -> Result<()> {
    if delta.is_void() || !delta.is_pure() {
        return Err(Error::NotPure);
    }
    Ok(())
}

/// Whether adding `f` after the facets in `earlier` is a shelling step:
/// `⟨f⟩ ∩ ⟨earlier⟩` must be pure of codimension one in `f`.
fn is_shelling_step(f: Face, earlier: &[Face]) -> bool {
    if earlier.is_empty() {
        return true;
    }
    // vertices v whose ridge f∖v is already present
    let mut restriction = Face::EMPTY;
    for v in f.iter() {
        let ridge = f.without(v);
        if earlier.iter().any(|g| ridge.is_subset(*g)) {
            restriction = restriction.with(v);
        }
    }
    // every intersection f∩g must lie in some present ridge
    earlier.iter().all(|g| !f.minus(*g).intersection(restriction).is_empty())
}

/// Checks that `order` lists every facet once and is a shelling.
pub fn is_shelling_order(delta: &SimplicialComplex, order: &FacetOrder) -> Result<bool> {
    require_pure(delta)?;
    let mut facets: Vec<Face> = order.clone();
    facets.sort();
    if facets != delta.facets() {
        return Err(Error::BadParams("facet order is not a permutation of the facets".into()));
    }
    Ok((1..order.len()).all(|i| is_shelling_step(order[i], &order[..i])))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShellingOutcome {
    Shelling(FacetOrder),
    NotShellable,
}

/// Facet subsets as bitsets over facet indices.
type Subset = Vec<u64>;

struct Search<'a> {
    facets: &'a [Face],
    failed: HashSet<Subset>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// Extends `prefix`; `Ok(true)` when a complete shelling was reached.
    fn extend(&mut self, prefix: &mut Vec<usize>, used: &mut Subset) -> Result<bool> {
        if prefix.len() == self.facets.len() {
            return Ok(true);
        }
        if self.failed.contains(used) {
            return Ok(false);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { nodes: self.nodes - 1 });
        }
        let earlier: Vec<Face> = prefix.iter().map(|&k| self.facets[k]).collect();
        for k in 0..self.facets.len() {
            if used[k / 64] >> (k % 64) & 1 == 1 || !is_shelling_step(self.facets[k], &earlier) {
                continue;
            }
            used[k / 64] |= 1 << (k % 64);
            prefix.push(k);
            if self.extend(prefix, used)? {
                return Ok(true);
            }
            prefix.pop();
            used[k / 64] &= !(1 << (k % 64));
        }
        self.failed.insert(used.clone());
        Ok(false)
    }
}

/// Depth-first search for a shelling, trying facets in lexicographic order
/// and remembering facet sets that admit no completion. Each expanded
/// search node counts against `node_budget`.
pub fn find_shelling(delta: &SimplicialComplex, node_budget: u64) -> Result<ShellingOutcome> {
    require_pure(delta)?;
    let facets = delta.facets();
    let mut search = Search { facets, failed: HashSet::new(), nodes: 0, budget: node_budget };
    let mut prefix = Vec::with_capacity(facets.len());
    let mut used = vec![0u64; facets.len().div_ceil(64)];
    if search.extend(&mut prefix, &mut used)? {
        Ok(ShellingOutcome::Shelling(prefix.into_iter().map(|k| facets[k]).collect()))
    } else {
        Ok(ShellingOutcome::NotShellable)
    }
}

/// Binomials `b_{F1,F2}` of facet pairs meeting in codimension one.
pub fn quadratic_binomials(delta: &SimplicialComplex) -> Result<Vec<Generator>> {
    require_pure(delta)?;
    let p = r_delta_presentation(delta)?;
    let d = p.ring.d();
    Ok(p
        .generators
        .into_iter()
        .filter(|g| matches!(g.pair, Some((a, b)) if a.intersection(b).len() + 1 == d))
        .collect())
}

/// `C_Δ`: the codimension-one binomials together with every monomial quadric.
pub fn quadratic_generators(delta: &SimplicialComplex) -> Result<(RingContext, Vec<Generator>)> {
    require_pure(delta)?;
    let p = r_delta_presentation(delta)?;
    let d = p.ring.d();
    let gens = p
        .generators
        .into_iter()
        .filter(|g| match g.family {
            Family::Binomial => matches!(g.pair, Some((a, b)) if a.intersection(b).len() + 1 == d),
            _ => g.degree() == 2,
        })
        .collect();
    Ok((p.ring, gens))
}

/// An S-pair of `C_Δ` with nonzero normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FailedPair {
    pub first: String,
    pub second: String,
    pub s_polynomial: String,
    pub remainder: String,
}

fn check_preconditions(delta: &SimplicialComplex, spec: FieldSpec) -> Result<()> {
    require_pure(delta)?;
    if !delta.is_flag() {
        return Err(Error::NotFlag);
    }
    if !serre_condition(delta, 2, spec) {
        return Err(Error::NotS2);
    }
    Ok(())
}

fn first_failure<F: Field>(
    field: &F,
    ring: &RingContext,
    gens: &[Generator],
    order: &TermOrder,
) -> Option<FailedPair> {
    let names = ring.variable_names();
    let polys: Vec<Polynomial<F>> =
        gens.iter().map(|g| Polynomial::from_int_terms(field, order, &g.terms)).collect();
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            let (f, g) = (&polys[i], &polys[j]);
            if f.is_monomial() && g.is_monomial() || f.lm().coprime(g.lm()) {
                continue;
            }
            let s = s_polynomial(field, order, f, g);
            let r = reduce(field, order, &s, &polys);
            if !r.is_zero() {
                return Some(FailedPair {
                    first: gens[i].render(&names),
                    second: gens[j].render(&names),
                    s_polynomial: s.render(field, &names),
                    remainder: r.render(field, &names),
                });
            }
        }
    }
    None
}

/// First S-pair of `C_Δ` that fails to reduce to zero under the order
/// compatible with `order`, or `None` when `C_Δ` is a Gröbner basis.
pub fn quadratic_gb_witness(
    delta: &SimplicialComplex,
    order: &FacetOrder,
    spec: FieldSpec,
) -> Result<Option<FailedPair>> {
    check_preconditions(delta, spec)?;
    let (ring, gens) = quadratic_generators(delta)?;
    let term_order = compatible_term_order_for(&ring, order)?;
    Ok(with_field!(spec, |f| first_failure(&f, &ring, &gens, &term_order)))
}

/// Whether `C_Δ` is a Gröbner basis for the order compatible with `order`.
pub fn quadratic_gb_test(delta: &SimplicialComplex, order: &FacetOrder, spec: FieldSpec) -> Result<bool> {
    Ok(quadratic_gb_witness(delta, order, spec)?.is_none())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Search for a shelling with the given node budget.
    Theorem { node_budget: u64 },
    /// Try facet orders in lexicographic order of permutations, giving up
    /// when there are more than `max_orders` of them.
    Direct { max_orders: u64 },
}

fn factorial_at_most(m: usize, bound: u64) -> bool {
    let mut acc: u64 = 1;
    for k in 2..=m as u64 {
        acc = match acc.checked_mul(k) {
            Some(v) if v <= bound => v,
            _ => return false,
        };
    }
    acc <= bound
}

/// Whether `R_Δ` of a pure flag complex has a quadratic Gröbner basis for
/// some order compatible with a facet order. Complexes failing (S₂) have no
/// quadratic presentation at all and give `false`.
pub fn has_quadratic_gb(delta: &SimplicialComplex, strategy: Strategy) -> Result<bool> {
    require_pure(delta)?;
    if !delta.is_flag() {
        return Err(Error::NotFlag);
    }
    let spec = FieldSpec::RATIONALS;
    if !serre_condition(delta, 2, spec) {
        return Ok(false);
    }
    match strategy {
        Strategy::Theorem { node_budget } => {
            Ok(matches!(find_shelling(delta, node_budget)?, ShellingOutcome::Shelling(_)))
        }
        Strategy::Direct { max_orders } => {
            let facets = delta.facets().to_vec();
            if !factorial_at_most(facets.len(), max_orders) {
                return Err(Error::BudgetExceeded { nodes: max_orders });
            }
            let (ring, gens) = quadratic_generators(delta)?;
            let mut perm: Vec<usize> = (0..facets.len()).collect();
            loop {
                let order: FacetOrder = perm.iter().map(|&k| facets[k]).collect();
                let term_order = compatible_term_order_for(&ring, &order)?;
                if with_field!(spec, |f| first_failure(&f, &ring, &gens, &term_order)).is_none() {
                    return Ok(true);
                }
                if !next_permutation(&mut perm) {
                    return Ok(false);
                }
            }
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// The binomial `b_{F1,F2}` with its leading term first under `order`.
pub fn oriented_binomial(ring: &RingContext, order: &TermOrder, a: Face, b: Face) -> Vec<(i64, super::Monomial)> {
    let (f1, f2) = oriented_pair(a, b);
    let mut t = ring.binomial(f1, f2);
    if order.cmp(&t[0].1, &t[1].1) == std::cmp::Ordering::Less {
        t.swap(0, 1);
        t[0].0 = 1;
        t[1].0 = -1;
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::field::Rationals;

    fn facets(delta: &SimplicialComplex, names: &[&str]) -> FacetOrder {
        names
            .iter()
            .map(|s| {
                let labels: Vec<String> = s.chars().map(|c| c.to_string()).collect();
                delta.face_from_labels(&labels).unwrap()
            })
            .collect()
    }

    #[test]
    fn path_shelling_orders() {
        let path = builtins::path3();
        assert!(is_shelling_order(&path, &facets(&path, &["123", "234", "345"])).unwrap());
        assert!(!is_shelling_order(&path, &facets(&path, &["123", "345", "234"])).unwrap());
        let single = SimplicialComplex::from_numbered(3, &[&[1, 2, 3]]).unwrap();
        assert!(is_shelling_order(&single, &single.facets().to_vec()).unwrap());
        assert_eq!(is_shelling_order(&builtins::bier_example(), &vec![]), Err(Error::NotPure));
    }

    #[test]
    fn search() {
        let oct = builtins::cross_polytope_boundary(3).unwrap();
        match find_shelling(&oct, 10_000).unwrap() {
            ShellingOutcome::Shelling(o) => assert!(is_shelling_order(&oct, &o).unwrap()),
            other => panic!("{other:?}"),
        }
        let two_edges = SimplicialComplex::from_numbered(4, &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(find_shelling(&two_edges, 100).unwrap(), ShellingOutcome::NotShellable);
        assert!(matches!(
            find_shelling(&builtins::rp2_flag(), 3),
            Err(Error::BudgetExceeded { nodes: 3 })
        ));
    }

    #[test]
    fn q_counts() {
        let path = builtins::path3();
        let names = RingContext::new(&path).variable_names();
        let q: Vec<String> = quadratic_binomials(&path).unwrap().iter().map(|g| g.render(&names)).collect();
        assert_eq!(q, ["y_4*z_234 - y_1*z_123", "y_5*z_345 - y_2*z_234"]);
        let single = SimplicialComplex::from_numbered(3, &[&[1, 2, 3]]).unwrap();
        assert!(quadratic_binomials(&single).unwrap().is_empty());
        let oct = builtins::cross_polytope_boundary(3).unwrap();
        assert_eq!(quadratic_binomials(&oct).unwrap().len(), 12);
        assert_eq!(quadratic_generators(&oct).unwrap().1.len(), 81);
    }

    #[test]
    fn path_quadratic_gb() {
        let path = builtins::path3();
        let good = facets(&path, &["123", "234", "345"]);
        let bad = facets(&path, &["123", "345", "234"]);
        for c in [0, 2, 3] {
            assert!(quadratic_gb_test(&path, &good, FieldSpec::of(c)).unwrap());
            assert!(!quadratic_gb_test(&path, &bad, FieldSpec::of(c)).unwrap());
        }
        let w = quadratic_gb_witness(&path, &bad, FieldSpec::RATIONALS).unwrap().unwrap();
        assert_eq!(w.s_polynomial, w.remainder);
        let mut terms: Vec<&str> = w.remainder.split(" - ").collect();
        terms.sort();
        assert_eq!(terms, ["y_1*y_2*z_123", "y_4*y_5*z_345"]);
    }

    #[test]
    fn path_leading_terms() {
        let path = builtins::path3();
        let ring = RingContext::new(&path);
        let names = ring.variable_names();
        let q = Rationals;
        let lead = |order: &[&str], a: &str, b: &str| {
            let o = compatible_term_order_for(&ring, &facets(&path, order)).unwrap();
            let fa = facets(&path, &[a, b]);
            let t = oriented_binomial(&ring, &o, fa[0], fa[1]);
            Polynomial::from_int_terms(&q, &o, &t).lm().render(&names)
        };
        assert_eq!(lead(&["123", "234", "345"], "234", "123"), "y_4*z_234");
        assert_eq!(lead(&["123", "234", "345"], "345", "234"), "y_5*z_345");
        assert_eq!(lead(&["123", "345", "234"], "345", "234"), "y_2*z_234");
    }

    #[test]
    fn preconditions() {
        let two_edges = SimplicialComplex::from_numbered(4, &[&[1, 2], &[3, 4]]).unwrap();
        let order = two_edges.facets().to_vec();
        assert_eq!(quadratic_gb_test(&two_edges, &order, FieldSpec::RATIONALS), Err(Error::NotS2));
        let square = SimplicialComplex::from_numbered(4, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]).unwrap();
        let order = square.facets().to_vec();
        assert_eq!(quadratic_gb_test(&square, &order, FieldSpec::RATIONALS), Err(Error::NotFlag));
        assert!(!has_quadratic_gb(&two_edges, Strategy::Theorem { node_budget: 100 }).unwrap());
        assert!(!has_quadratic_gb(&two_edges, Strategy::Direct { max_orders: 100 }).unwrap());
    }

    #[test]
    fn strategies_agree_on_small_cases() {
        for name in ["path3", "cross:2", "octahedron"] {
            let delta = builtins::by_name(name).unwrap();
            let a = has_quadratic_gb(&delta, Strategy::Theorem { node_budget: 100_000 }).unwrap();
            let b = has_quadratic_gb(&delta, Strategy::Direct { max_orders: 40_320 }).unwrap();
            assert!(a && b, "{name}");
        }
        assert_eq!(
            has_quadratic_gb(&builtins::rp2_flag(), Strategy::Direct { max_orders: 1000 }),
            Err(Error::BudgetExceeded { nodes: 1000 })
        );
    }

    #[test]
    fn permutations() {
        let mut p = vec![0, 1, 2];
        let mut count = 1;
        while next_permutation(&mut p) {
            count += 1;
        }
        assert_eq!(count, 6);
        assert_eq!(p, vec![2, 1, 0]);
    }
}
