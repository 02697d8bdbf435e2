use rdelta::field::Rationals;
use rdelta::groebner::poly::reduction_step;
use rdelta::groebner::{buchberger, compatible_term_order, is_shelling_order, reduce, s_polynomial, Polynomial, TermOrder};
use rdelta::groebner::shelling::quadratic_gb_test;
use rdelta::presentation::{minimal_presentation, RingContext};
use rdelta::{builtins, Face, FieldSpec, SimplicialComplex};

const Q: Rationals = Rationals;

fn octahedron() -> SimplicialComplex {
    let facets: Vec<Vec<usize>> =
        [1, 2].iter().flat_map(|&a| [3, 4].iter().flat_map(move |&b| [5, 6].map(move |c| vec![a, b, c]))).collect();
    let refs: Vec<&[usize]> = facets.iter().map(Vec::as_slice).collect();
    SimplicialComplex::from_numbered(6, &refs).unwrap()
}

fn face(delta: &SimplicialComplex, labels: &str) -> Face {
    let ls: Vec<String> = labels.chars().map(|c| c.to_string()).collect();
    delta.face_from_labels(&ls).unwrap()
}

fn order_of(delta: &SimplicialComplex, names: &[&str]) -> Vec<Face> {
    names.iter().map(|n| face(delta, n)).collect()
}

fn binomial(ring: &RingContext, order: &TermOrder, a: Face, b: Face) -> Polynomial<Rationals> {
    Polynomial::from_int_terms(&Q, order, &ring.binomial(a, b))
}

/// `y^S · b_{A,B}`.
fn scaled_binomial(ring: &RingContext, order: &TermOrder, s: Face, a: Face, b: Face) -> Polynomial<Rationals> {
    let y = ring.y_monomial(s);
    let terms: Vec<_> = ring.binomial(a, b).into_iter().map(|(c, m)| (c, m.mul(&y))).collect();
    Polynomial::from_int_terms(&Q, order, &terms)
}

fn negated(p: &Polynomial<Rationals>, order: &TermOrder) -> Polynomial<Rationals> {
    let terms = p.terms().iter().map(|(m, c)| (m.clone(), -c.clone())).collect();
    Polynomial::from_terms(&Q, order, terms)
}

fn equal_up_to_sign(p: &Polynomial<Rationals>, q: &Polynomial<Rationals>, order: &TermOrder) -> bool {
    *p == *q || *p == negated(q, order)
}

#[test]
fn s_pair_of_binomials_sharing_a_leading_z() {
    let oct = octahedron();
    let ring = RingContext::new(&oct);
    // F is last, so both binomials lead with z_F
    let (g1, g2, f) = (face(&oct, "146"), face(&oct, "246"), face(&oct, "135"));
    let mut order = oct.facets().to_vec();
    order.retain(|&x| x != f);
    order.push(f);
    let to = compatible_term_order(&oct, &order).unwrap();
    let s = s_polynomial(&Q, &to, &binomial(&ring, &to, f, g1), &binomial(&ring, &to, f, g2));
    let closed = scaled_binomial(&ring, &to, g1.intersection(g2).minus(f), g2, g1);
    assert!(equal_up_to_sign(&s, &closed, &to));
    assert_eq!(g1.intersection(g2).minus(f).len(), 2);

    let path = builtins::path3();
    let pr = RingContext::new(&path);
    let bad = order_of(&path, &["123", "345", "234"]);
    let to = compatible_term_order(&path, &bad).unwrap();
    let f = binomial(&pr, &to, face(&path, "234"), face(&path, "123"));
    let g = binomial(&pr, &to, face(&path, "234"), face(&path, "345"));
    let s = s_polynomial(&Q, &to, &f, &g);
    let closed = scaled_binomial(&pr, &to, Face::EMPTY, face(&path, "345"), face(&path, "123"));
    assert!(equal_up_to_sign(&s, &closed, &to));
    assert!(s_polynomial(&Q, &to, &f, &f).is_zero());
}

#[test]
fn single_reduction_step() {
    let path = builtins::path3();
    let ring = RingContext::new(&path);
    let shelling = order_of(&path, &["123", "234", "345"]);
    let to = compatible_term_order(&path, &shelling).unwrap();
    let (f1, f2, h) = (face(&path, "345"), face(&path, "123"), face(&path, "234"));
    let step = reduction_step(&Q, &to, &binomial(&ring, &to, f1, f2), &binomial(&ring, &to, f1, h)).unwrap();
    let closed = scaled_binomial(&ring, &to, f2.intersection(h.minus(f1)), h, f2);
    assert_eq!(step, closed);

    let oct = octahedron();
    let ring = RingContext::new(&oct);
    let (f1, f2, h) = (face(&oct, "246"), face(&oct, "135"), face(&oct, "136"));
    let mut order = oct.facets().to_vec();
    order.retain(|&x| x != f1 && x != h);
    order.extend([h, f1]);
    let to = compatible_term_order(&oct, &order).unwrap();
    assert!(f1.intersection(f2).is_subset(h));
    let step = reduction_step(&Q, &to, &binomial(&ring, &to, f1, f2), &binomial(&ring, &to, f1, h)).unwrap();
    assert_eq!(step, scaled_binomial(&ring, &to, f2.intersection(h.minus(f1)), h, f2));
    assert!(reduce(&Q, &to, &Polynomial::zero(), &[binomial(&ring, &to, f1, h)]).is_zero());
}

#[test]
fn bad_order_leaves_a_nonzero_remainder() {
    let path = builtins::path3();
    let ring = RingContext::new(&path);
    let bad = order_of(&path, &["123", "345", "234"]);
    assert!(!is_shelling_order(&path, &bad).unwrap());
    let to = compatible_term_order(&path, &bad).unwrap();
    let f = binomial(&ring, &to, face(&path, "234"), face(&path, "123"));
    let g = binomial(&ring, &to, face(&path, "345"), face(&path, "234"));
    let basis: Vec<_> = minimal_presentation(&path)
        .unwrap()
        .generators
        .iter()
        .filter(|gen| gen.degree() == 2)
        .map(|gen| Polynomial::from_int_terms(&Q, &to, &gen.terms))
        .collect();
    let nf = reduce(&Q, &to, &s_polynomial(&Q, &to, &f, &g), &basis);
    assert!(!nf.is_zero());
    assert!(nf.terms().iter().all(|(m, _)| basis.iter().all(|b| !b.lm().divides(m))));
    assert!(!quadratic_gb_test(&path, &bad, FieldSpec::RATIONALS).unwrap());
}

#[test]
fn octahedron_quadrics_are_a_groebner_basis() {
    let oct = octahedron();
    let p = minimal_presentation(&oct).unwrap();
    assert_eq!(p.generators.len(), 81);
    let shelling = order_of(&oct, &["135", "136", "145", "146", "235", "236", "245", "246"]);
    assert!(is_shelling_order(&oct, &shelling).unwrap());
    let to = compatible_term_order(&oct, &shelling).unwrap();
    let polys: Vec<Polynomial<Rationals>> =
        p.generators.iter().map(|g| Polynomial::from_int_terms(&Q, &to, &g.terms)).collect();
    let gb = buchberger(&Q, &to, &polys, 6, true);
    assert!(gb.is_complete());
    assert!(gb.added().is_empty());
    assert_eq!(gb.basis.len(), 81);
    assert!(gb.log.iter().all(|r| r.added.is_none()));
}
