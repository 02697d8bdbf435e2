//! The Koszul dual of a quadratic Stanley–Reisner ring and its generalized
//! Koszul complex.
//!
//! Letters are variable indices. Two distinct letters anticommute unless
//! their product lies in the ideal; every letter squares to zero. A word
//! class is stored through its lexicographically smallest representative.

use std::collections::HashMap;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::groebner::Monomial;

/// `F[Γ]` for a flag complex `Γ`, described by its quadratic monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagRing {
    labels: Vec<String>,
    /// `red[v]` has bit `w` set when `v w` lies in the ideal.
    red: Vec<u64>,
}

/// Colour of a multidegree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Color {
    Blue,
    /// Some `v w` in the ideal divides the multidegree.
    Red { v: usize, w: usize },
}

impl FlagRing {
    /// The Stanley–Reisner ring of a flag complex in which every vertex is a face.
    pub fn from_complex(c: &SimplicialComplex) -> Result<Self> {
        if !c.is_flag() {
            return Err(Error::NotFlag);
        }
        let mut red = vec![0u64; c.n()];
        for nf in c.minimal_nonfaces() {
            let vs = nf.to_vec();
            red[vs[0]] |= 1 << vs[1];
            red[vs[1]] |= 1 << vs[0];
        }
        Ok(FlagRing { labels: c.labels().to_vec(), red })
    }

    /// The ring with the given quadratic squarefree monomials `v w` as ideal.
    pub fn from_nonedges(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        if n > 64 {
            return Err(Error::TooManyVertices { got: n, max: 64 });
        }
        let mut red = vec![0u64; n];
        for &(v, w) in pairs {
            if v == w || v >= n || w >= n {
                return Err(Error::BadParams(format!("bad quadric ({v}, {w})")));
            }
            red[v] |= 1 << w;
            red[w] |= 1 << v;
        }
        Ok(FlagRing { labels, red })
    }

    pub fn nvars(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Whether `v w` lies in the ideal.
    pub fn is_red_pair(&self, v: usize, w: usize) -> bool {
        self.red[v] >> w & 1 == 1
    }

    /// Distinct letters whose product survives in the ring.
    pub fn anticommute(&self, v: usize, w: usize) -> bool {
        v != w && !self.is_red_pair(v, w)
    }

    pub fn classify(&self, m: &Monomial) -> Color {
        let support = m.support();
        for &v in &support {
            for &w in &support {
                if v < w && self.is_red_pair(v, w) {
                    return Color::Red { v, w };
                }
            }
        }
        Color::Blue
    }

    /// A monomial is blue iff it is nonzero in the ring.
    pub fn is_blue(&self, m: &Monomial) -> bool {
        self.classify(m) == Color::Blue
    }

    /// Blue test on a raw exponent vector.
    pub(crate) fn is_blue_exps(&self, e: &[u16]) -> bool {
        let mut support = 0u64;
        for (v, &x) in e.iter().enumerate() {
            if x > 0 {
                support |= 1 << v;
            }
        }
        e.iter().enumerate().all(|(v, &x)| x == 0 || self.red[v] & support == 0)
    }
}

/// A nonzero class `[w]`, stored as its lexicographically smallest word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WordClass {
    pub letters: Vec<u8>,
}

impl WordClass {
    /// Support exponent vector.
    pub fn support(&self, nvars: usize) -> Vec<u16> {
        let mut e = vec![0u16; nvars];
        for &l in &self.letters {
            e[l as usize] += 1;
        }
        e
    }

    /// `[Z_a Z_b ...]` using the ring's labels.
    pub fn render(&self, labels: &[String]) -> String {
        let body: String = self.letters.iter().map(|&l| format!("Z{}", labels[l as usize])).collect();
        format!("[{body}]")
    }
}

/// Normal form of the word `w` with its sign: `[w] = sign · [nf]`. `None`
/// when the class is zero.
pub(crate) fn normal_form(ring: &FlagRing, w: &[u8]) -> Option<(Vec<u8>, i64)> {
    // zero iff two consecutive occurrences of a letter are separated only
    // by letters anticommuting with it
    for q in 0..w.len() {
        if let Some(p) = (0..q).rev().find(|&p| w[p] == w[q]) {
            if w[p + 1..q].iter().all(|&b| ring.anticommute(b as usize, w[q] as usize)) {
                return None;
            }
        }
    }
    let mut rest: Vec<u8> = w.to_vec();
    let mut out = Vec::with_capacity(w.len());
    let mut sign = 1i64;
    while !rest.is_empty() {
        let mut best: Option<usize> = None;
        for k in 0..rest.len() {
            let movable = rest[..k].iter().all(|&b| ring.anticommute(b as usize, rest[k] as usize));
            if movable && best.is_none_or(|b| rest[k] < rest[b]) {
                best = Some(k);
            }
        }
        let k = best.expect("the first letter is always movable");
        if k % 2 == 1 {
            sign = -sign;
        }
        out.push(rest.remove(k));
    }
    Some((out, sign))
}

/// Positions `k` (0-based) whose letter can be moved to the front.
pub(crate) fn head(ring: &FlagRing, w: &[u8]) -> Vec<usize> {
    (0..w.len())
        .filter(|&k| w[..k].iter().all(|&b| ring.anticommute(b as usize, w[k] as usize)))
        .collect()
}

/// Terms `(coefficient, variable, target)` of `∂(1 ⊗ [w])`.
pub(crate) fn differential_terms(ring: &FlagRing, w: &[u8]) -> Vec<(i64, usize, Vec<u8>)> {
    head(ring, w)
        .into_iter()
        .filter_map(|k| {
            let mut rest = w.to_vec();
            let v = rest.remove(k);
            let (nf, s) = normal_form(ring, &rest)?;
            let sign = if k % 2 == 0 { 1 } else { -1 };
            Some((sign * s, v as usize, nf))
        })
        .collect()
}

/// Normal forms of all nonzero classes of `j`-letter words, sorted.
pub(crate) fn basis_up_to(ring: &FlagRing, j_max: usize) -> Vec<Vec<Vec<u8>>> {
    let mut out: Vec<Vec<Vec<u8>>> = vec![vec![Vec::new()]];
    for _ in 1..=j_max {
        let prev = out.last().expect("degree 0 present");
        let mut next: Vec<Vec<u8>> = Vec::new();
        let mut seen: HashMap<Vec<u8>, ()> = HashMap::new();
        for w in prev {
            for v in 0..ring.nvars() as u8 {
                let mut ext = w.clone();
                ext.push(v);
                if let Some((nf, _)) = normal_form(ring, &ext) {
                    if seen.insert(nf.clone(), ()).is_none() {
                        next.push(nf);
                    }
                }
            }
        }
        next.sort();
        out.push(next);
    }
    out
}

/// Basis of the degree-`j` part of the Koszul dual of `F[Γ]`.
pub fn gk_basis(gamma: &SimplicialComplex, j: usize) -> Result<Vec<WordClass>> {
    let ring = FlagRing::from_complex(gamma)?;
    let mut all = basis_up_to(&ring, j);
    Ok(all.pop().unwrap_or_default().into_iter().map(|letters| WordClass { letters }).collect())
}

/// One nonzero entry `sign · z_var` of the differential matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkEntry {
    /// Index into `target`.
    pub row: usize,
    /// Index into `source`.
    pub col: usize,
    pub sign: i64,
    pub var: usize,
}

/// Matrix of `GK_j → GK_{j-1}` in the normal-form bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkDifferential {
    pub source: Vec<WordClass>,
    pub target: Vec<WordClass>,
    pub entries: Vec<GkEntry>,
}

impl GkDifferential {
    /// Entry at `(row, col)` as `(sign, var)`, if nonzero.
    pub fn entry(&self, row: usize, col: usize) -> Option<(i64, usize)> {
        self.entries.iter().find(|e| e.row == row && e.col == col).map(|e| (e.sign, e.var))
    }
}

pub fn gk_differential(gamma: &SimplicialComplex, j: usize) -> Result<GkDifferential> {
    if j == 0 {
        return Err(Error::BadParams("the differential starts in degree 1".into()));
    }
    let ring = FlagRing::from_complex(gamma)?;
    let mut bases = basis_up_to(&ring, j);
    let source = bases.pop().expect("degree j");
    let target = bases.pop().expect("degree j - 1");
    let index: HashMap<&Vec<u8>, usize> = target.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let mut entries = Vec::new();
    for (col, w) in source.iter().enumerate() {
        for (sign, var, t) in differential_terms(&ring, w) {
            entries.push(GkEntry { row: index[&t], col, sign, var });
        }
    }
    entries.sort_by_key(|e| (e.row, e.col));
    let wrap = |v: Vec<Vec<u8>>| v.into_iter().map(|letters| WordClass { letters }).collect();
    Ok(GkDifferential { source: wrap(source), target: wrap(target), entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma() -> SimplicialComplex {
        SimplicialComplex::from_numbered(3, &[&[1, 2], &[2, 3]]).unwrap()
    }

    fn names(ws: &[WordClass], c: &SimplicialComplex) -> Vec<String> {
        ws.iter().map(|w| w.render(c.labels())).collect()
    }

    #[test]
    fn example_bases() {
        let s = sigma();
        assert_eq!(names(&gk_basis(&s, 2).unwrap(), &s), ["[Z1Z2]", "[Z1Z3]", "[Z2Z3]", "[Z3Z1]"]);
        assert_eq!(names(&gk_basis(&s, 3).unwrap(), &s), ["[Z1Z2Z3]", "[Z1Z3Z1]", "[Z2Z3Z1]", "[Z3Z1Z3]"]);
        let point = SimplicialComplex::from_numbered(1, &[&[1]]).unwrap();
        assert!(gk_basis(&point, 2).unwrap().is_empty());
        let square = SimplicialComplex::from_numbered(3, &[&[1, 2, 3]]).unwrap();
        assert_eq!(gk_basis(&square, 3).unwrap().len(), 1);
    }

    #[test]
    fn word_relations() {
        let ring = FlagRing::from_complex(&sigma()).unwrap();
        // [Z2 Z3 Z1] = -[Z3 Z2 Z1] = [Z3 Z1 Z2]
        let a = normal_form(&ring, &[1, 2, 0]).unwrap();
        let b = normal_form(&ring, &[2, 1, 0]).unwrap();
        let c = normal_form(&ring, &[2, 0, 1]).unwrap();
        assert_eq!(a.0, b.0);
        assert_eq!(a.1, -b.1);
        assert_eq!(a, c);
        assert_ne!(a.0, normal_form(&ring, &[1, 0, 2]).unwrap().0);
        assert_eq!(normal_form(&ring, &[0, 0]), None);
        assert_eq!(normal_form(&ring, &[0, 1, 0]), None);
        assert!(normal_form(&ring, &[0, 2, 0]).is_some());
    }

    #[test]
    fn example_differential() {
        let s = sigma();
        let d = gk_differential(&s, 3).unwrap();
        let z = |v: usize| v - 1;
        // columns Z1Z2Z3, Z1Z3Z1, Z2Z3Z1, Z3Z1Z3; rows Z1Z2, Z1Z3, Z2Z3, Z3Z1
        let expected: [[Option<(i64, usize)>; 4]; 4] = [
            [None, None, Some((1, z(3))), None],
            [Some((-1, z(2))), None, None, Some((1, z(3)))],
            [Some((1, z(1))), None, None, None],
            [None, Some((1, z(1))), Some((1, z(2))), None],
        ];
        for (r, row) in expected.iter().enumerate() {
            for (c, want) in row.iter().enumerate() {
                assert_eq!(d.entry(r, c), *want, "entry ({r}, {c})");
            }
        }
        let d1 = gk_differential(&s, 1).unwrap();
        assert_eq!(d1.entries.len(), 3);
        assert!(d1.entries.iter().all(|e| e.sign == 1 && e.var == e.col));
    }

    #[test]
    fn colors() {
        // x1 x2 x3 y1 y2 y3 with quadrics x1x2, x1x3, x1y1, x2y2, x3y3
        let labels = ["x1", "x2", "x3", "y1", "y2", "y3"].map(String::from).to_vec();
        let ring = FlagRing::from_nonedges(labels, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
        let m = |e: &[u16]| Monomial::from_exponents(e.to_vec());
        assert_eq!(ring.classify(&m(&[0, 0, 0, 1, 1, 1])), Color::Blue);
        assert_eq!(ring.classify(&m(&[1, 0, 0, 1, 0, 0])), Color::Red { v: 0, w: 3 });
        assert_eq!(ring.classify(&m(&[1, 1, 0, 0, 0, 0])), Color::Red { v: 0, w: 1 });
        assert!(ring.is_blue_exps(&[0, 2, 0, 0, 0, 3]));
        assert!(!ring.is_blue_exps(&[0, 2, 0, 0, 1, 0]));
    }
}
