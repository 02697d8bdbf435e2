//! γ-vectors of palindromic h-polynomials.
//!
//! `h(t) = Σ γ_i t^i (1 + t)^{s - 2i}` for a palindromic `h` of degree `s`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::homology::is_cohen_macaulay;
use crate::presentation::h_vector_r_delta;

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaVector {
    /// `γ_0 ..= γ_{⌊s/2⌋}`.
    pub entries: Vec<BigInt>,
    /// Degree of the h-polynomial.
    pub s: usize,
}

impl GammaVector {
    /// Expands `Σ γ_i t^i (1 + t)^{s - 2i}`.
    pub fn to_h(&self) -> Vec<BigInt> {
        let s = self.s as i64;
        (0..=s)
            .map(|k| {
                self.entries
                    .iter()
                    .enumerate()
                    .map(|(i, g)| g * binom(s - 2 * i as i64, k - i as i64))
                    .sum()
            })
            .collect()
    }

    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.entries.iter().map(|g| i64::try_from(g).ok()).collect()
    }
}

/// `ℓ_{r,i}`: `2` at `(0,0)`, otherwise `C(r-i, i) + C(r-i-1, i-1)`.
pub fn lucas_coeff(r: usize, i: usize) -> Result<BigInt> {
    if 2 * i > r {
        return Err(Error::OutOfRange(format!("ℓ_{{{r},{i}}} needs 2i <= r")));
    }
    if r == 0 {
        return Ok(BigInt::from(2));
    }
    let (r, i) = (r as i64, i as i64);
    Ok(binom(r - i, i) + binom(r - i - 1, i - 1))
}

fn check_palindromic(h: &[i64]) -> Result<()> {
    if h.is_empty() {
        return Err(Error::BadParams("empty h-vector".into()));
    }
    if h.iter().zip(h.iter().rev()).any(|(a, b)| a != b) {
        return Err(Error::NotPalindromic);
    }
    Ok(())
}

/// Solves the defining system by Gaussian elimination over `Q`, checking
/// that it is consistent.
fn gamma_by_elimination(h: &[i64]) -> Option<Vec<BigInt>> {
    let s = h.len() as i64 - 1;
    let m = (s / 2 + 1) as usize;
    let mut rows: Vec<Vec<BigRational>> = (0..=s)
        .map(|k| {
            let mut row: Vec<BigRational> =
                (0..m).map(|i| BigRational::from(binom(s - 2 * i as i64, k - i as i64))).collect();
            row.push(BigRational::from(BigInt::from(h[k as usize])));
            row
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..m {
        let p = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(pivot_row, p);
        let inv = rows[pivot_row][col].recip();
        for x in rows[pivot_row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..=m {
                    let delta = &factor * &rows[pivot_row][c];
                    rows[r][c] -= delta;
                }
            }
        }
        pivot_row += 1;
    }
    if rows[m..].iter().any(|r| !r[m].is_zero()) {
        return None;
    }
    rows[..m].iter().map(|r| r[m].is_integer().then(|| r[m].to_integer())).collect()
}

/// `γ_i = h_i - Σ_{j<i} C(s - 2j, i - j) γ_j`.
fn gamma_by_recursion(h: &[i64]) -> Vec<BigInt> {
    let s = h.len() as i64 - 1;
    let mut g: Vec<BigInt> = Vec::new();
    for i in 0..=s / 2 {
        let mut v = BigInt::from(h[i as usize]);
        for (j, gj) in g.iter().enumerate() {
            v -= binom(s - 2 * j as i64, i - j as i64) * gj;
        }
        g.push(v);
    }
    g
}

/// γ-vector of a palindromic h-vector. Both the linear solve and the
/// recursion are run; disagreement is a bug and panics.
pub fn gamma_from_h(h: &[i64]) -> Result<GammaVector> {
    check_palindromic(h)?;
    let rec = gamma_by_recursion(h);
    let lin = gamma_by_elimination(h).expect("palindromic h always has a γ-vector");
    assert_eq!(rec, lin, "γ methods disagree on {h:?}");
    Ok(GammaVector { entries: rec, s: h.len() - 1 })
}

/// γ-vector of `R_Δ` straight from `h(Δ) = (h_0, ..., h_d)`.
pub fn gamma_closed_formula(h_delta: &[i64], d: usize) -> Result<GammaVector> {
    if h_delta.len() != d + 1 {
        return Err(Error::LengthMismatch { expected: d + 1, got: h_delta.len() });
    }
    let mut entries = vec![BigInt::from(h_delta[0])];
    for i in 1..=(d + 1) / 2 {
        let mut sum = BigInt::zero();
        for k in (2 * i - 1)..=d {
            sum += lucas_coeff(k - 1, i - 1)? * h_delta[k];
        }
        entries.push(if i % 2 == 1 { sum } else { -sum });
    }
    Ok(GammaVector { entries, s: d + 1 })
}

/// `γ_{(d+1)/2}(R_Δ) = (-1)^{(d-1)/2} · 2 · χ̃(Δ)` for Cohen–Macaulay `Δ` of odd `d`.
pub fn top_gamma_via_euler(delta: &SimplicialComplex, spec: FieldSpec) -> Result<BigInt> {
    let d = (delta.dim() + 1).max(0) as usize;
    if d < 3 || d % 2 == 0 {
        return Err(Error::EvenDimension(d));
    }
    if !is_cohen_macaulay(delta, spec)? {
        return Err(Error::NotCM(spec.characteristic()));
    }
    let v = BigInt::from(2 * delta.reduced_euler_characteristic());
    Ok(if (d - 1) / 2 % 2 == 0 { v } else { -v })
}

/// A violated identity found by [`verify_identities`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdentityViolation {
    Polynomial { r: usize },
    Binomial { n: usize, m: usize, r: usize },
}

/// Checks, for all `r, n, m <= r_max`:
/// `1 + t^r = Σ (-1)^i ℓ_{r,i} t^i (1+t)^{r-2i}` and
/// `C(n,m) + C(n,m-r) = Σ (-1)^i ℓ_{r,i} C(n+r-2i, m-i)`.
pub fn verify_identities(r_max: usize) -> Vec<IdentityViolation> {
    let mut bad = Vec::new();
    for r in 0..=r_max {
        let lucas: Vec<BigInt> = (0..=r / 2).map(|i| lucas_coeff(r, i).expect("in range")).collect();
        let signed = |i: usize| if i % 2 == 0 { lucas[i].clone() } else { -lucas[i].clone() };
        let ri = r as i64;
        let lhs: Vec<BigInt> = (0..=ri)
            .map(|k| BigInt::from((k == 0) as i64 + (k == ri) as i64))
            .collect();
        let rhs: Vec<BigInt> = (0..=ri)
            .map(|k| (0..=r / 2).map(|i| signed(i) * binom(ri - 2 * i as i64, k - i as i64)).sum())
            .collect();
        if lhs != rhs {
            bad.push(IdentityViolation::Polynomial { r });
        }
        for n in 0..=r_max as i64 {
            for m in 0..=r_max as i64 {
                let lhs = binom(n, m) + binom(n, m - ri);
                let rhs: BigInt =
                    (0..=r / 2).map(|i| signed(i) * binom(n + ri - 2 * i as i64, m - i as i64)).sum();
                if lhs != rhs {
                    bad.push(IdentityViolation::Binomial { n: n as usize, m: m as usize, r });
                }
            }
        }
    }
    bad
}

/// γ data for `R_Δ` with all three methods cross-checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaReport {
    pub h: Vec<i64>,
    pub gamma: GammaVector,
    pub methods_agree: bool,
    /// `(-1)^{i-1} γ_i >= 0` for `1 <= i <= ⌊(d+1)/2⌋`.
    pub sign_pattern_ok: bool,
}

impl GammaReport {
    pub fn to_json(&self) -> Value {
        let gamma: Vec<String> = self.gamma.entries.iter().map(|g| g.to_string()).collect();
        let gamma: Vec<Value> = match self.gamma.to_i64() {
            Some(v) => v.into_iter().map(Value::from).collect(),
            None => gamma.into_iter().map(Value::from).collect(),
        };
        json!({
            "h": self.h,
            "gamma": gamma,
            "methods_agree": self.methods_agree,
            "sign_pattern_ok": self.sign_pattern_ok,
        })
    }
}

pub fn gamma_report(delta: &SimplicialComplex) -> Result<GammaReport> {
    let h = h_vector_r_delta(delta)?;
    let gamma = gamma_from_h(&h)?;
    let d = (delta.dim() + 1) as usize;
    let closed = gamma_closed_formula(&delta.h_vector()?, d)?;
    let methods_agree = closed == gamma && gamma.to_h() == h.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    let sign_pattern_ok = gamma
        .entries
        .iter()
        .enumerate()
        .skip(1)
        .all(|(i, g)| if i % 2 == 1 { !g.is_negative() } else { !g.is_positive() });
    Ok(GammaReport { h, gamma, methods_agree, sign_pattern_ok })
}
