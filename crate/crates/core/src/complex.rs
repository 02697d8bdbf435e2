//! Finite abstract simplicial complexes.
//!
//! Vertices carry string labels and are stored as dense indices `0..n` in
//! first-seen order. Faces are bitsets, so at most [`MAX_VERTICES`] vertices
//! are supported. Facets are kept as an antichain sorted lexicographically
//! by vertex index.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(pub u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Face {
        Face(it.into_iter().fold(0u64, |acc, i| acc | (1u64 << i)))
    }

    /// The face `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Face {
        if n >= 64 {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Face {
        Face(1u64 << i)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn minus(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with(self, i: usize) -> Face {
        Face(self.0 | 1u64 << i)
    }

    pub fn without(self, i: usize) -> Face {
        Face(self.0 & !(1u64 << i))
    }

    /// Vertex indices in increasing order.
    pub fn iter(self) -> FaceIter {
        FaceIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of this face, including the empty set and the face itself.
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let mask = self.0;
        let mut sub = mask;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = sub;
            if sub == 0 {
                done = true;
            } else {
                sub = (sub - 1) & mask;
            }
            Some(Face(out))
        })
    }
}

pub struct FaceIter(u64);

impl Iterator for FaceIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

/// Lexicographic order of the sorted index lists.
impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Face counts `f_{-1}, f_0, ..., f_{d-1}`.
pub type FVector = Vec<i64>;
/// Entries `h_0, ..., h_s`; may be negative in general.
pub type HVector = Vec<i64>;

/// A simplicial complex given by labelled vertices and its facets.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    facets: Vec<Face>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets: Vec<String> = self.facets.iter().map(|&g| self.face_label(g)).collect();
        write!(f, "⟨{}⟩", facets.join(", "))
    }
}

impl SimplicialComplex {
    /// Builds a complex from labels and facets given by label.
    ///
    /// Dominated faces are dropped. An empty facet list is rejected; pass a
    /// single empty facet to obtain the complex `{∅}`.
    pub fn new<S: AsRef<str>>(vertices: &[S], facets: &[Vec<S>]) -> Result<Self> {
        let labels: Vec<String> = vertices.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        let mut faces = Vec::with_capacity(facets.len());
        for facet in facets {
            let mut face = Face::EMPTY;
            for v in facet {
                let i = *index
                    .get(v.as_ref())
                    .ok_or_else(|| Error::UnknownVertex(v.as_ref().to_string()))?;
                face = face.with(i);
            }
            faces.push(face);
        }
        if faces.is_empty() {
            return Err(Error::EmptyInput);
        }
        Self::from_faces(labels, faces)
    }

    /// Builds a complex from labels and index bitsets. Dominated faces are dropped.
    pub fn from_faces(labels: Vec<String>, faces: Vec<Face>) -> Result<Self> {
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices { got: labels.len(), max: MAX_VERTICES });
        }
        let all = Face::full(labels.len());
        if let Some(bad) = faces.iter().find(|f| !f.is_subset(all)) {
            let i = bad.minus(all).iter().next().unwrap_or(0);
            return Err(Error::UnknownVertex(format!("#{i}")));
        }
        if faces.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(SimplicialComplex { labels, facets: maximal_faces(faces) })
    }

    /// Convenience constructor for labels `1..=n` and facets over those labels.
    pub fn from_numbered(n: usize, facets: &[&[usize]]) -> Result<Self> {
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let faces = facets
            .iter()
            .map(|f| Face::from_indices(f.iter().map(|&v| v - 1)))
            .collect();
        Self::from_faces(labels, faces)
    }

    /// The void complex (no faces at all) on the given vertices.
    pub fn void(labels: Vec<String>) -> Self {
        SimplicialComplex { labels, facets: Vec::new() }
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Looks up a face given by labels.
    pub fn face_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Face> {
        let mut f = Face::EMPTY;
        for l in labels {
            let i = self
                .vertex_index(l.as_ref())
                .ok_or_else(|| Error::UnknownVertex(l.as_ref().to_string()))?;
            f = f.with(i);
        }
        Ok(f)
    }

    /// Concatenated labels of a face, e.g. `"145"`.
    pub fn face_label(&self, f: Face) -> String {
        f.iter().map(|i| self.labels[i].as_str()).collect()
    }

    pub fn face_labels(&self, f: Face) -> Vec<String> {
        f.iter().map(|i| self.labels[i].clone()).collect()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn vertex_set(&self) -> Face {
        Face::full(self.n())
    }

    /// Maximal facet size minus one; `-1` for `{∅}` and `-2` for the void complex.
    pub fn dim(&self) -> i32 {
        self.facets.iter().map(|f| f.len() as i32 - 1).max().unwrap_or(-2)
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(f0) => self.facets.iter().all(|f| f.len() == f0.len()),
        }
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0] == self.vertex_set()
    }

    pub fn contains_face(&self, f: Face) -> bool {
        self.facets.iter().any(|g| f.is_subset(*g))
    }

    /// All faces, sorted by size and then lexicographically.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen = HashSet::new();
        for &f in &self.facets {
            for s in f.subsets() {
                seen.insert(s);
            }
        }
        let mut out: Vec<Face> = seen.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }

    /// `f_{-1}, ..., f_{dim}`; empty for the void complex.
    pub fn f_vector(&self) -> FVector {
        if self.is_void() {
            return Vec::new();
        }
        let mut f = vec![0i64; (self.dim() + 2) as usize];
        for face in self.faces() {
            f[face.len()] += 1;
        }
        f
    }

    /// h-vector of a pure complex, `h_0..h_d`.
    pub fn h_vector(&self) -> Result<HVector> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        Ok(h_from_f(&self.f_vector()))
    }

    /// Inclusion-minimal non-faces.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        let faces = self.faces();
        let set: HashSet<Face> = faces.iter().copied().collect();
        let mut out = BTreeSet::new();
        if self.is_void() {
            out.insert(Face::EMPTY);
            return out.into_iter().collect();
        }
        for &f in &faces {
            for v in 0..self.n() {
                if f.contains(v) {
                    continue;
                }
                let g = f.with(v);
                if set.contains(&g) {
                    continue;
                }
                if g.iter().all(|u| set.contains(&g.without(u))) {
                    out.insert(g);
                }
            }
        }
        let mut v: Vec<Face> = out.into_iter().collect();
        v.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        v
    }

    pub fn is_flag(&self) -> bool {
        self.minimal_nonfaces().iter().all(|f| f.len() == 2)
    }

    /// Link of `face`, on the vertices not in `face` (relabelled densely).
    pub fn link(&self, face: Face) -> Result<SimplicialComplex> {
        if !self.contains_face(face) {
            return Err(Error::NotAFace);
        }
        let facets: Vec<Face> = self
            .facets
            .iter()
            .filter(|g| face.is_subset(**g))
            .map(|g| g.minus(face))
            .collect();
        Ok(self.induced(self.vertex_set().minus(face), facets))
    }

    /// Faces contained in `w`, as a complex on the vertices of `w`.
    pub fn restriction(&self, w: Face) -> Result<SimplicialComplex> {
        if !w.is_subset(self.vertex_set()) {
            return Err(Error::UnknownVertex(format!("#{}", w.minus(self.vertex_set()).0.trailing_zeros())));
        }
        let facets: Vec<Face> = self.facets.iter().map(|g| g.intersection(w)).collect();
        Ok(self.induced(w, facets))
    }

    /// Re-index `faces` (all inside `keep`) onto the vertices of `keep`.
    fn induced(&self, keep: Face, faces: Vec<Face>) -> SimplicialComplex {
        let kept: Vec<usize> = keep.to_vec();
        let mut pos = [usize::MAX; 64];
        for (new, &old) in kept.iter().enumerate() {
            pos[old] = new;
        }
        let labels = kept.iter().map(|&i| self.labels[i].clone()).collect();
        let faces: Vec<Face> = faces
            .into_iter()
            .map(|f| Face::from_indices(f.iter().map(|i| pos[i])))
            .collect();
        if faces.is_empty() {
            return SimplicialComplex::void(labels);
        }
        SimplicialComplex { labels, facets: maximal_faces(faces) }
    }

    /// Complements of facets: generators of the Stanley–Reisner ideal of the Alexander dual.
    pub fn alexander_dual_generators(&self) -> Vec<Face> {
        let all = self.vertex_set();
        let mut out: Vec<Face> = self.facets.iter().map(|f| all.minus(*f)).collect();
        out.sort();
        out
    }

    /// `-f_{-1} + f_0 - f_1 + ...`
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { -c } else { c })
            .sum()
    }

    /// Canonical JSON value: `{"facets": [[labels]], "vertices": [labels]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vertices": self.labels,
            "facets": self.facets.iter().map(|&f| self.face_labels(f)).collect::<Vec<_>>(),
        })
    }

    /// Parses either the JSON format or the plain-text format (one facet per line).
    pub fn parse(text: &str) -> Result<SimplicialComplex> {
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            Self::parse_json(trimmed)
        } else {
            Self::parse_text(text)
        }
    }

    pub fn parse_json(text: &str) -> Result<SimplicialComplex> {
        #[derive(serde::Deserialize)]
        struct Raw {
            vertices: Option<Vec<serde_json::Value>>,
            facets: Vec<Vec<serde_json::Value>>,
        }
        let raw: Raw = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let as_label = |v: &serde_json::Value| -> Result<String> {
            match v {
                serde_json::Value::String(s) => Ok(s.clone()),
                serde_json::Value::Number(n) => Ok(n.to_string()),
                other => Err(Error::Parse(format!("bad vertex label {other}"))),
            }
        };
        let facets: Vec<Vec<String>> = raw
            .facets
            .iter()
            .map(|f| f.iter().map(as_label).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        let vertices: Vec<String> = match raw.vertices {
            Some(vs) => vs.iter().map(as_label).collect::<Result<_>>()?,
            None => first_seen(&facets),
        };
        Self::new(&vertices, &facets)
    }

    /// One facet per line, whitespace separated; `#` starts a comment. A line
    /// consisting of `{}` denotes the empty facet.
    pub fn parse_text(text: &str) -> Result<SimplicialComplex> {
        let mut facets = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if line == "{}" {
                facets.push(Vec::new());
                continue;
            }
            facets.push(line.split_whitespace().map(str::to_string).collect::<Vec<_>>());
        }
        let vertices = first_seen(&facets);
        Self::new(&vertices, &facets)
    }
}

fn first_seen(facets: &[Vec<String>]) -> Vec<String> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for f in facets {
        for v in f {
            if seen.insert(v.clone()) {
                out.push(v.clone());
            }
        }
    }
    out
}

/// Keeps the inclusion-maximal faces, deduplicated and sorted.
pub fn maximal_faces(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_by(|a, b| b.len().cmp(&a.len()));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::new();
    for f in faces {
        if !kept.iter().any(|g| f.is_subset(*g)) {
            kept.push(f);
        }
    }
    kept.sort();
    kept
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

/// h-vector from `f = (f_{-1}, ..., f_{d-1})`.
pub fn h_from_f(f: &[i64]) -> HVector {
    let d = f.len() as i64 - 1;
    (0..=d)
        .map(|i| {
            (0..=i)
                .map(|j| {
                    let sign = if (i - j) % 2 == 0 { 1 } else { -1 };
                    sign * binom(d - j, d - i) * f[j as usize]
                })
                .sum()
        })
        .collect()
}

/// Inverse of [`h_from_f`]: `f_{j-1} = Σ_i C(d-i, j-i) h_i`.
pub fn f_from_h(h: &[i64], d: usize) -> Result<FVector> {
    if h.len() != d + 1 {
        return Err(Error::LengthMismatch { expected: d + 1, got: h.len() });
    }
    let d = d as i64;
    Ok((0..=d)
        .map(|j| (0..=j).map(|i| binom(d - i, j - i) * h[i as usize]).sum())
        .collect())
}
