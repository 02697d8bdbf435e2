//! Reduced simplicial homology over a field, Serre conditions and
//! Cohen–Macaulayness.

use std::collections::{BTreeMap, HashMap};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::{rank, Field, FieldSpec, SparseRow};
use crate::par::{self, Exec};
use crate::with_field;

/// Reduced Betti numbers `dim H̃_i` for `i = -1..=dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyDims {
    dims: Vec<u64>,
}

impl HomologyDims {
    /// Dimension in degree `i` (zero outside the stored range).
    pub fn get(&self, i: i32) -> u64 {
        if i < -1 {
            return 0;
        }
        self.dims.get((i + 1) as usize).copied().unwrap_or(0)
    }

    /// Entries for degrees `-1, 0, 1, ...`.
    pub fn as_slice(&self) -> &[u64] {
        &self.dims
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Alternating sum `Σ (-1)^i dims[i]`.
    pub fn euler(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { -(c as i64) } else { c as i64 })
            .sum()
    }
}

/// Faces grouped by cardinality with positional indices, for boundary matrices.
struct Chains {
    by_size: Vec<Vec<Face>>,
    index: Vec<HashMap<Face, usize>>,
}

impl Chains {
    fn new(c: &SimplicialComplex) -> Self {
        let top = (c.dim() + 1).max(0) as usize;
        let mut by_size = vec![Vec::new(); top + 1];
        for f in c.faces() {
            by_size[f.len()].push(f);
        }
        let index = by_size
            .iter()
            .map(|fs| fs.iter().enumerate().map(|(i, f)| (*f, i)).collect())
            .collect();
        Chains { by_size, index }
    }

    fn count(&self, size: usize) -> usize {
        self.by_size.get(size).map_or(0, Vec::len)
    }

    /// Rank of the boundary map from faces of `size` to faces of `size - 1`.
    fn boundary_rank<F: Field>(&self, field: &F, size: usize) -> usize {
        if size == 0 || size >= self.by_size.len() {
            return 0;
        }
        let rows: Vec<SparseRow<F::Elem>> = self.by_size[size]
            .iter()
            .map(|f| {
                let mut row: SparseRow<F::Elem> = f
                    .iter()
                    .enumerate()
                    .map(|(k, v)| {
                        let sign = if k % 2 == 0 { 1 } else { -1 };
                        (self.index[size - 1][&f.without(v)], field.from_i64(sign))
                    })
                    .collect();
                row.sort_by_key(|e| e.0);
                row
            })
            .collect();
        rank(field, rows)
    }
}

/// Reduced homology dimensions in degrees `lo..=hi` (clamped to `-1..=dim`).
pub fn reduced_homology_range<F: Field>(
    field: &F,
    c: &SimplicialComplex,
    lo: i32,
    hi: i32,
) -> Result<Vec<u64>> {
    if c.is_void() {
        return Err(Error::VoidComplex);
    }
    let lo = lo.max(-1);
    let hi = hi.min(c.dim());
    if hi < lo {
        return Ok(Vec::new());
    }
    let chains = Chains::new(c);
    let mut ranks = HashMap::new();
    let mut rank_of = |size: usize| -> usize {
        *ranks.entry(size).or_insert_with(|| chains.boundary_rank(field, size))
    };
    let mut out = Vec::new();
    for i in lo..=hi {
        let size = (i + 1) as usize;
        let z = chains.count(size) - rank_of(size);
        out.push((z - rank_of(size + 1)) as u64);
    }
    Ok(out)
}

/// All reduced homology of a nonvoid complex.
pub fn reduced_homology(c: &SimplicialComplex, spec: FieldSpec) -> Result<HomologyDims> {
    let dims = with_field!(spec, |f| reduced_homology_range(&f, c, -1, c.dim()))?;
    Ok(HomologyDims { dims })
}

/// Lowest degree `i < bound` with `H̃_i(c) != 0`, if any.
fn first_nonvanishing_below<F: Field>(field: &F, c: &SimplicialComplex, bound: i32) -> Option<i32> {
    if bound <= -1 {
        return None;
    }
    let dims = reduced_homology_range(field, c, -1, bound - 1).ok()?;
    dims.iter().position(|&d| d != 0).map(|k| k as i32 - 1)
}

/// A face whose link has nonvanishing homology in a degree forbidden by (S_r).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SerreWitness {
    pub face: Face,
    pub degree: i32,
}

/// First violation of (S_r), or `None` if (S_r) holds.
///
/// For `r >= 2` a non-pure complex fails with a witness of degree `-2`.
pub fn serre_witness_with(
    exec: Exec,
    c: &SimplicialComplex,
    r: usize,
    spec: FieldSpec,
) -> Option<SerreWitness> {
    if r <= 1 || c.is_void() {
        return None;
    }
    if !c.is_pure() {
        return Some(SerreWitness { face: Face::EMPTY, degree: -2 });
    }
    let faces = c.faces();
    let found = with_field!(spec, |f| par::map(exec, &faces, |&face| {
        let lk = c.link(face).expect("face of c");
        let bound = (r as i32 - 1).min(lk.dim());
        first_nonvanishing_below(&f, &lk, bound).map(|degree| SerreWitness { face, degree })
    }));
    found.into_iter().flatten().next()
}

pub fn serre_condition_with(exec: Exec, c: &SimplicialComplex, r: usize, spec: FieldSpec) -> bool {
    serre_witness_with(exec, c, r, spec).is_none()
}

/// Serre's condition (S_r) over the given field.
pub fn serre_condition(c: &SimplicialComplex, r: usize, spec: FieldSpec) -> bool {
    serre_condition_with(Exec::default(), c, r, spec)
}

/// (S_d) for a pure complex of dimension `d - 1`.
pub fn is_cohen_macaulay(c: &SimplicialComplex, spec: FieldSpec) -> Result<bool> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    Ok(serre_condition(c, (c.dim() + 1).max(1) as usize, spec))
}

/// Largest `r <= d` with (S_r), per characteristic.
pub fn serre_profile(c: &SimplicialComplex, chars: &[FieldSpec]) -> Result<BTreeMap<u32, usize>> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    let d = (c.dim() + 1).max(0) as usize;
    let mut out = BTreeMap::new();
    for &spec in chars {
        let mut best = d.min(1);
        for r in 2..=d {
            if serre_condition(c, r, spec) {
                best = r;
            } else {
                break;
            }
        }
        out.insert(spec.characteristic(), best);
    }
    Ok(out)
}
