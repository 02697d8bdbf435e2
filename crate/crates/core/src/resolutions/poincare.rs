//! Poincaré series of `F` over `F[Γ]` and over the idealization `R_Δ`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::koszul_dual::FlagRing;
use super::tor::module_betti_over_gamma;
use crate::bier::{bier_ball, canonical_module_generators};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::groebner::Monomial;
use crate::homology::{is_cohen_macaulay, serre_profile, serre_witness_with, SerreWitness};
use crate::par::Exec;

/// `Σ b_{i,j} s^j t^i` with `i <= i_max`. Each `t`-degree carries finitely
/// many `s`-degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BTreeMap<usize, BigInt>>,
}

impl TruncatedSeries {
    pub fn zero(i_max: usize) -> Self {
        TruncatedSeries { coeffs: vec![BTreeMap::new(); i_max + 1] }
    }

    pub fn one(i_max: usize) -> Self {
        let mut s = Self::zero(i_max);
        s.set(0, 0, BigInt::one());
        s
    }

    /// `Σ a_i (st)^i`.
    pub fn diagonal(a: &[BigInt], i_max: usize) -> Self {
        let mut s = Self::zero(i_max);
        for (i, c) in a.iter().enumerate().take(i_max + 1) {
            s.set(i, i, c.clone());
        }
        s
    }

    pub fn i_max(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        self.coeffs.get(i).and_then(|row| row.get(&j)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, i: usize, j: usize, c: BigInt) {
        if i > self.i_max() {
            return;
        }
        if c.is_zero() {
            self.coeffs[i].remove(&j);
        } else {
            self.coeffs[i].insert(j, c);
        }
    }

    fn add_to(&mut self, i: usize, j: usize, c: &BigInt) {
        if i > self.i_max() || c.is_zero() {
            return;
        }
        let e = self.coeffs[i].entry(j).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs[i].remove(&j);
        }
    }

    /// Nonzero `((i, j), b_{i,j})`.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &BigInt)> {
        self.coeffs.iter().enumerate().flat_map(|(i, row)| row.iter().map(move |(&j, c)| ((i, j), c)))
    }

    /// `Σ_j b_{i,j}`.
    pub fn total(&self, i: usize) -> BigInt {
        self.coeffs.get(i).map(|row| row.values().sum()).unwrap_or_default()
    }

    /// True iff `b_{i,j} = 0` whenever `i != j`.
    pub fn is_diagonal(&self) -> bool {
        self.terms().all(|((i, j), _)| i == j)
    }

    pub fn diagonal_coeffs(&self) -> Vec<BigInt> {
        (0..=self.i_max()).map(|i| self.get(i, i)).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let i_max = self.i_max().min(other.i_max());
        let mut out = Self::zero(i_max);
        for ((i, j), a) in self.terms() {
            for ((k, l), b) in other.terms() {
                if i + k > i_max {
                    continue;
                }
                out.add_to(i + k, j + l, &(a * b));
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((i, j), c) in other.terms() {
            out.add_to(i, j, &-c);
        }
        out
    }

    /// Multiplication by `t`, dropping the top `t`-degree.
    pub fn mul_t(&self) -> Self {
        let mut out = Self::zero(self.i_max());
        for ((i, j), c) in self.terms() {
            out.set(i + 1, j, c.clone());
        }
        out
    }

    /// Inverse of a series whose `t^0` part is exactly `1`.
    pub fn reciprocal(&self) -> Result<Self> {
        if self.coeffs[0].len() != 1 || self.get(0, 0) != BigInt::one() {
            return Err(Error::BadParams("series is not invertible over the integers".into()));
        }
        // u = 1 - self has no t^0 part, so 1/self = Σ u^k
        let u = Self::one(self.i_max()).sub(self);
        let mut out = Self::one(self.i_max());
        let mut power = Self::one(self.i_max());
        for _ in 0..self.i_max() {
            power = power.mul(&u);
            for ((i, j), c) in power.terms() {
                out.add_to(i, j, c);
            }
        }
        Ok(out)
    }
}

/// Coefficients of `(1 + t)^dim / h(-t)` up to `t^{i_max}`.
///
/// For a Koszul algebra with h-polynomial `h` and Krull dimension `dim`
/// these are the Betti numbers `β_{i,i}` of the residue field. For other
/// algebras they match only through the window where that resolution is
/// linear.
pub fn poincare_from_hilbert(h: &[i64], dim: usize, i_max: usize) -> Result<Vec<BigInt>> {
    if h.first() != Some(&1) {
        return Err(Error::BadParams("h-polynomial must have constant term 1".into()));
    }
    let len = i_max + 1;
    let signed: Vec<BigInt> =
        h.iter().enumerate().map(|(k, &c)| if k % 2 == 0 { BigInt::from(c) } else { -BigInt::from(c) }).collect();
    // inverse of h(-t) by the recursion q_i = -Σ_{k>=1} h'_k q_{i-k}
    let mut inv: Vec<BigInt> = vec![BigInt::zero(); len];
    inv[0] = BigInt::one();
    for i in 1..len {
        let mut acc = BigInt::zero();
        for k in 1..=i.min(signed.len() - 1) {
            acc += &signed[k] * &inv[i - k];
        }
        inv[i] = -acc;
    }
    let mut binom = vec![BigInt::zero(); len];
    let mut c = BigInt::one();
    for (k, slot) in binom.iter_mut().enumerate().take(dim.min(i_max) + 1) {
        *slot = c.clone();
        c = c * BigInt::from(dim - k) / BigInt::from(k + 1);
    }
    Ok((0..len).map(|i| (0..=i).map(|k| &binom[k] * &inv[i - k]).sum()).collect())
}

fn check_pure_flag(delta: &SimplicialComplex) -> Result<()> {
    if !delta.is_pure() {
        return Err(Error::NotPure);
    }
    if !delta.is_flag() {
        return Err(Error::NotFlag);
    }
    Ok(())
}

/// `P_{R_Δ}(s, t)` through `t^{i_max}`, from `P_{F[Γ]}` and the Betti numbers
/// of the canonical module of `F[Γ]` shifted to be generated in degree 1.
pub fn poincare_r_delta(delta: &SimplicialComplex, spec: FieldSpec, i_max: usize) -> Result<TruncatedSeries> {
    check_pure_flag(delta)?;
    let n = delta.n();
    let d = (delta.dim() + 1) as usize;
    let mut h_gamma = delta.f_vector();
    h_gamma.resize(n + 1, 0);
    let p_a = TruncatedSeries::diagonal(&poincare_from_hilbert(&h_gamma, n, i_max)?, i_max);
    if i_max == 0 {
        return Ok(p_a);
    }
    let ball = bier_ball(delta)?;
    let ring = FlagRing::from_complex(ball.gamma())?;
    let gens: Vec<Monomial> = canonical_module_generators(delta)?
        .into_iter()
        .map(|f| Monomial::from_support(2 * n, f.iter().map(|v| n + v)))
        .collect();
    let table = module_betti_over_gamma(&ring, &gens, i_max - 1, spec)?;
    // generators sit in degree n - d; move them to degree 1
    let shift = n as i64 - d as i64 - 1;
    let mut p_omega = TruncatedSeries::zero(i_max);
    for (&(i, j), &c) in table.entries() {
        let j = j as i64 - shift;
        debug_assert!(j >= 0);
        p_omega.set(i, j as usize, BigInt::from(c));
    }
    let denom = TruncatedSeries::one(i_max).sub(&p_omega.mul_t());
    Ok(p_a.mul(&denom.reciprocal()?))
}

/// Whether `R_Δ` is Koszul, decided by Cohen–Macaulayness of `Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulVerdict {
    pub koszul: bool,
    pub reason: String,
    /// Face whose link has homology below the top degree, when not Koszul.
    pub witness: Option<SerreWitness>,
}

pub fn koszul_verdict(delta: &SimplicialComplex, spec: FieldSpec) -> Result<KoszulVerdict> {
    check_pure_flag(delta)?;
    if is_cohen_macaulay(delta, spec)? {
        return Ok(KoszulVerdict {
            koszul: true,
            reason: format!("Δ is Cohen-Macaulay over {spec}"),
            witness: None,
        });
    }
    let d = (delta.dim() + 1) as usize;
    let w = serre_witness_with(Exec::default(), delta, d, spec).expect("not CM implies a witness");
    let face = if w.face.is_empty() { "∅".to_string() } else { delta.face_label(w.face) };
    Ok(KoszulVerdict {
        koszul: false,
        reason: format!("H̃_{}(lk {face}) ≠ 0 over {spec}", w.degree),
        witness: Some(w),
    })
}

/// First homological degree where the resolution of `F` over `R_Δ` has a
/// nonlinear syzygy, or `None` if it is linear. Uses that `R_Δ` is linear
/// for exactly `r` steps when `Δ` satisfies (S_r) but not (S_{r+1}).
pub fn first_nonlinear_step(delta: &SimplicialComplex, spec: FieldSpec) -> Result<Option<usize>> {
    check_pure_flag(delta)?;
    let d = (delta.dim() + 1).max(0) as usize;
    let r = serre_profile(delta, &[spec])?[&spec.characteristic()];
    Ok((r < d).then_some(r + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rp2_linear_strand() {
        assert_eq!(poincare_from_hilbert(&[1, 31, 60, 31, 1], 11, 3).unwrap(), ints(&[1, 42, 1297, 37883]));
    }

    #[test]
    fn single_vertex_series() {
        let odd: Vec<i64> = (0..8).map(|i| 2 * i + 1).collect();
        assert_eq!(poincare_from_hilbert(&[1, 2, 1], 1, 7).unwrap(), ints(&odd));
        let delta = SimplicialComplex::from_numbered(1, &[&[1]]).unwrap();
        let p = poincare_r_delta(&delta, FieldSpec::RATIONALS, 5).unwrap();
        assert!(p.is_diagonal());
        assert_eq!(p.diagonal_coeffs(), ints(&odd[..6]));
    }

    #[test]
    fn polynomial_ring_is_binomial() {
        assert_eq!(poincare_from_hilbert(&[1], 4, 6).unwrap(), ints(&[1, 4, 6, 4, 1, 0, 0]));
    }

    #[test]
    fn path_is_koszul() {
        let delta = builtins::path3();
        let p = poincare_r_delta(&delta, FieldSpec::RATIONALS, 3).unwrap();
        assert!(p.is_diagonal());
        let expect = poincare_from_hilbert(&[1, 8, 14, 8, 1], 5, 3).unwrap();
        assert_eq!(p.diagonal_coeffs(), expect);
        assert_eq!(expect[1], BigInt::from(13));
    }

    #[test]
    fn series_algebra() {
        let mut a = TruncatedSeries::one(3);
        a.set(1, 1, BigInt::from(-2));
        let inv = a.reciprocal().unwrap();
        assert_eq!(inv.diagonal_coeffs(), ints(&[1, 2, 4, 8]));
        assert_eq!(a.mul(&inv), TruncatedSeries::one(3));
        assert!(TruncatedSeries::zero(2).reciprocal().is_err());
    }

    #[test]
    fn verdicts() {
        let rp2 = builtins::rp2_flag();
        let two = FieldSpec::of(2);
        let three = FieldSpec::of(3);
        let v = koszul_verdict(&rp2, two).unwrap();
        assert!(!v.koszul);
        assert_eq!(v.witness.unwrap().degree, 1);
        assert!(koszul_verdict(&rp2, three).unwrap().koszul);
        assert_eq!(first_nonlinear_step(&rp2, two).unwrap(), Some(3));
        assert_eq!(first_nonlinear_step(&rp2, three).unwrap(), None);
        let oct = builtins::cross_polytope_boundary(3).unwrap();
        assert!(koszul_verdict(&oct, FieldSpec::RATIONALS).unwrap().koszul);
    }

    #[test]
    fn annulus_first_syzygy_off_the_diagonal() {
        let a = builtins::flag_annulus();
        let step = first_nonlinear_step(&a, FieldSpec::RATIONALS).unwrap();
        assert_eq!(step, Some(3));
        let p = poincare_r_delta(&a, FieldSpec::RATIONALS, 3).unwrap();
        assert_eq!(p.get(3, 4), BigInt::one());
        assert!(p.terms().all(|((i, j), _)| i == j || i >= 3));
        assert_eq!(p.get(1, 1), BigInt::from(24));
    }
}
