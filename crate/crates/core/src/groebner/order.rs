//! Monomial orders.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Monomial;
use crate::bier::FacetOrder;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::presentation::RingContext;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermOrder {
    /// Graded reverse lexicographic, `v0 > v1 > ...`.
    Grevlex,
    /// Block order: the z-block (variables from `z_offset` on) is compared
    /// first, by degree and then lexicographically with the z-variables
    /// listed in `z_desc` from largest to smallest; ties fall to grevlex on
    /// the rest.
    FacetCompatible { z_offset: usize, z_desc: Vec<usize> },
    /// Compare by each weight row in turn, then grevlex.
    Weights { rows: Vec<Vec<u32>> },
}

fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| {
        for v in (0..a.len()).rev() {
            if a[v] != b[v] {
                return b[v].cmp(&a[v]);
            }
        }
        Ordering::Equal
    })
}

impl TermOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Grevlex => grevlex(a.exps(), b.exps()),
            TermOrder::FacetCompatible { z_offset, z_desc } => {
                let (za, zb) = (&a.exps()[*z_offset..], &b.exps()[*z_offset..]);
                let dz = |z: &[u16]| z.iter().map(|&e| e as u32).sum::<u32>();
                dz(za)
                    .cmp(&dz(zb))
                    .then_with(|| {
                        for &k in z_desc {
                            if za[k] != zb[k] {
                                return za[k].cmp(&zb[k]);
                            }
                        }
                        Ordering::Equal
                    })
                    .then_with(|| grevlex(&a.exps()[..*z_offset], &b.exps()[..*z_offset]))
            }
            TermOrder::Weights { rows } => {
                for row in rows {
                    let w = |m: &Monomial| -> u64 {
                        m.exps().iter().zip(row).map(|(&e, &w)| e as u64 * w as u64).sum()
                    };
                    match w(a).cmp(&w(b)) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                grevlex(a.exps(), b.exps())
            }
        }
    }

    /// Weight order with `rows` rows of entries in `1..=100` from a seeded generator.
    pub fn random(nvars: usize, rows: usize, seed: u64) -> TermOrder {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rows = (0..rows).map(|_| (0..nvars).map(|_| rng.gen_range(1..=100)).collect()).collect();
        TermOrder::Weights { rows }
    }
}

/// Block order on the ring of `R_Δ` (or its Artinian reduction) in which
/// `in(b_{Fk,Fl}) = y^{Fk∖Fl} z_{Fk}` whenever `Fl` precedes `Fk`.
pub fn compatible_term_order_for(ring: &RingContext, order: &FacetOrder) -> Result<TermOrder> {
    let m = ring.facets().len();
    if order.len() != m {
        return Err(Error::BadParams(format!("facet order has {} entries, expected {m}", order.len())));
    }
    let mut rank = vec![usize::MAX; m];
    for (pos, f) in order.iter().enumerate() {
        let k = ring
            .facet_index(*f)
            .ok_or_else(|| Error::BadParams(format!("{f:?} is not a facet")))?;
        if rank[k] != usize::MAX {
            return Err(Error::BadParams(format!("facet {f:?} repeated")));
        }
        rank[k] = pos;
    }
    let mut z_desc: Vec<usize> = (0..m).collect();
    z_desc.sort_by_key(|&k| std::cmp::Reverse(rank[k]));
    Ok(TermOrder::FacetCompatible { z_offset: ring.z_offset(), z_desc })
}

pub fn compatible_term_order(delta: &SimplicialComplex, order: &FacetOrder) -> Result<TermOrder> {
    if !delta.is_pure() {
        return Err(Error::NotPure);
    }
    compatible_term_order_for(&RingContext::new(delta), order)
}
