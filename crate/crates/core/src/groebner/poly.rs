//! Sparse polynomials kept sorted by a term order.

use std::cmp::Ordering;

use super::{Monomial, TermOrder};
use crate::field::Field;

/// Terms in strictly decreasing order under the order used to build it.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<F: Field> {
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    /// Sorts and combines `terms`, dropping zero coefficients.
    pub fn from_terms(field: &F, order: &TermOrder, mut terms: Vec<(Monomial, F::Elem)>) -> Self {
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(&last.1, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| !field.is_zero(&t.1));
        Polynomial { terms: out }
    }

    /// Builds from integer coefficients.
    pub fn from_int_terms(field: &F, order: &TermOrder, terms: &[(i64, Monomial)]) -> Self {
        let t = terms.iter().map(|(c, m)| (m.clone(), field.from_i64(*c))).collect();
        Self::from_terms(field, order, t)
    }

    pub fn monomial(field: &F, m: Monomial) -> Self {
        Polynomial { terms: vec![(m, field.one())] }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &F::Elem {
        &self.terms[0].1
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// `m1 - m2` up to a unit: two terms whose coefficients sum to zero.
    pub fn is_pure_difference(&self, field: &F) -> bool {
        self.terms.len() == 2 && field.is_zero(&field.add(&self.terms[0].1, &self.terms[1].1))
    }

    pub fn monic(&self, field: &F) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = field.inv(self.lc());
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), field.mul(c, &inv))).collect() }
    }

    /// `self - c * m * other`, merging in order.
    pub fn sub_scaled(&self, field: &F, order: &TermOrder, c: &F::Elem, m: &Monomial, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let shifted: Vec<(Monomial, F::Elem)> = other
            .terms
            .iter()
            .map(|(om, oc)| (om.mul(m), field.neg(&field.mul(c, oc))))
            .collect();
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < shifted.len() {
            match order.cmp(&self.terms[i].0, &shifted[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(shifted[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let v = field.add(&self.terms[i].1, &shifted[j].1);
                    if !field.is_zero(&v) {
                        out.push((self.terms[i].0.clone(), v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&shifted[j..]);
        Polynomial { terms: out }
    }

    pub fn scale_mono(&self, field: &F, c: &F::Elem, m: &Monomial) -> Self {
        if field.is_zero(c) {
            return Self::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(tm, tc)| (tm.mul(m), field.mul(c, tc))).collect() }
    }

    pub fn render(&self, field: &F, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = match field.to_i64(c) {
                Some(v) if v < 0 => (true, field.render(&field.neg(c))),
                _ => (false, field.render(c)),
            };
            let body = m.render(names);
            let term = match (mag.as_str(), m.is_one()) {
                ("1", false) => body,
                (_, true) => mag,
                _ => format!("{mag}*{body}"),
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&term);
        }
        out
    }
}

/// `(L/in f) f / lc f − (L/in g) g / lc g` with `L = lcm(in f, in g)`.
pub fn s_polynomial<F: Field>(field: &F, order: &TermOrder, f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
    if f.is_zero() || g.is_zero() {
        return Polynomial::zero();
    }
    let l = f.lm().lcm(g.lm());
    let a = f.scale_mono(field, &field.inv(f.lc()), &f.lm().quotient_of(&l));
    a.sub_scaled(field, order, &field.inv(g.lc()), &g.lm().quotient_of(&l), g)
}

/// One step of a reduction chain: `p ← p − c·m·basis[index]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ReductionStep {
    pub divisor: usize,
    pub multiplier: Monomial,
}

/// Full normal form of `p` modulo `basis`, recording which divisors were used.
pub fn reduce_traced<F: Field>(
    field: &F,
    order: &TermOrder,
    p: &Polynomial<F>,
    basis: &[Polynomial<F>],
) -> (Polynomial<F>, Vec<ReductionStep>) {
    let mut rest = p.clone();
    let mut done: Vec<(Monomial, F::Elem)> = Vec::new();
    let mut steps = Vec::new();
    while !rest.is_zero() {
        let lm = rest.lm().clone();
        let divisor = basis.iter().position(|g| !g.is_zero() && g.lm().divides(&lm));
        match divisor {
            Some(k) => {
                let g = &basis[k];
                let m = g.lm().quotient_of(&lm);
                let c = field.mul(rest.lc(), &field.inv(g.lc()));
                rest = rest.sub_scaled(field, order, &c, &m, g);
                steps.push(ReductionStep { divisor: k, multiplier: m });
            }
            None => {
                let head = rest.terms.remove(0);
                done.push(head);
            }
        }
    }
    (Polynomial { terms: done }, steps)
}

/// Normal form of `p` modulo `basis`: no term is divisible by a leading monomial of `basis`.
pub fn reduce<F: Field>(field: &F, order: &TermOrder, p: &Polynomial<F>, basis: &[Polynomial<F>]) -> Polynomial<F> {
    reduce_traced(field, order, p, basis).0
}

/// A single top-reduction of `p` by `g`, if `in(g)` divides `in(p)`.
pub fn reduction_step<F: Field>(
    field: &F,
    order: &TermOrder,
    p: &Polynomial<F>,
    g: &Polynomial<F>,
) -> Option<Polynomial<F>> {
    if p.is_zero() || g.is_zero() || !g.lm().divides(p.lm()) {
        return None;
    }
    let m = g.lm().quotient_of(p.lm());
    let c = field.mul(p.lc(), &field.inv(g.lc()));
    Some(p.sub_scaled(field, order, &c, &m, g))
}
