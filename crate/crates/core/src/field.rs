//! Exact scalar fields: the rationals and prime fields `F_p`.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A field, given as a value carrying its own parameters.
pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn characteristic(&self) -> u32;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    /// Small signed integer representative, if there is an obvious one.
    fn to_i64(&self, a: &Self::Elem) -> Option<i64>;
    fn render(&self, a: &Self::Elem) -> String;
}

/// `Z/p` for a prime `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if is_prime(p as u64) && (p as u64) < (1u64 << 31) {
            Ok(PrimeField { p: p as u64 })
        } else {
            Err(Error::InvalidField(p as u64))
        }
    }

    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % self.p;
            }
            b = b * b % self.p;
            e >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u32 {
        self.p as u32
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "division by zero in F_{}", self.p);
        self.pow(*a, self.p - 2)
    }
    fn to_i64(&self, a: &u64) -> Option<i64> {
        let a = *a as i64;
        let p = self.p as i64;
        Some(if a > p / 2 { a - p } else { a })
    }
    fn render(&self, a: &u64) -> String {
        self.to_i64(a).unwrap().to_string()
    }
}

/// The rationals, with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn characteristic(&self) -> u32 {
        0
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "division by zero in Q");
        a.recip()
    }
    fn to_i64(&self, a: &BigRational) -> Option<i64> {
        if a.is_integer() && a.numer().abs() < BigInt::from(i64::MAX) {
            a.numer().to_string().parse().ok()
        } else {
            None
        }
    }
    fn render(&self, a: &BigRational) -> String {
        a.to_string()
    }
}

/// A field chosen at run time by its characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    characteristic: u32,
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec { characteristic: 0 };

    pub fn new(characteristic: u64) -> Result<Self> {
        if characteristic == 0 || (characteristic < (1 << 31) && is_prime(characteristic)) {
            Ok(FieldSpec { characteristic: characteristic as u32 })
        } else {
            Err(Error::InvalidField(characteristic))
        }
    }

    /// Panicking shorthand for literals in tests and examples.
    pub fn of(characteristic: u32) -> Self {
        Self::new(characteristic as u64).expect("valid characteristic")
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.characteristic {
            0 => write!(f, "QQ"),
            p => write!(f, "F{p}"),
        }
    }
}

/// Runs `$body` with `$f` bound to the concrete field named by `$spec`.
#[macro_export]
macro_rules! with_field {
    ($spec:expr, |$f:ident| $body:expr) => {{
        let spec: $crate::field::FieldSpec = $spec;
        match spec.characteristic() {
            0 => {
                let $f = $crate::field::Rationals;
                $body
            }
            p => {
                let $f = $crate::field::PrimeField::new(p).expect("FieldSpec holds a prime");
                $body
            }
        }
    }};
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Sparse row: `(column, value)` pairs with strictly increasing columns and no zeros.
pub type SparseRow<E> = Vec<(usize, E)>;

/// Rank of a sparse matrix given by rows, by Gaussian elimination.
pub fn rank<F: Field>(field: &F, rows: Vec<SparseRow<F::Elem>>) -> usize {
    // pivot column -> normalized row with leading entry 1 at that column
    let mut pivots: std::collections::HashMap<usize, SparseRow<F::Elem>> =
        std::collections::HashMap::new();
    let mut rows = rows;
    // shorter rows first keeps fill-in down
    rows.sort_by_key(|r| r.len());
    for mut row in rows {
        loop {
            let Some((lead, coef)) = row.first().cloned() else { break };
            match pivots.get(&lead) {
                Some(p) => {
                    row = axpy(field, &row, &field.neg(&coef), p);
                }
                None => {
                    let inv = field.inv(&coef);
                    let normalized = row.iter().map(|(c, v)| (*c, field.mul(v, &inv))).collect();
                    pivots.insert(lead, normalized);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// `a + s * b` for sparse rows.
fn axpy<F: Field>(
    field: &F,
    a: &SparseRow<F::Elem>,
    s: &F::Elem,
    b: &SparseRow<F::Elem>,
) -> SparseRow<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cb = b.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            out.push((cb, field.mul(s, &b[j].1)));
            j += 1;
        } else {
            let v = field.add(&a[i].1, &field.mul(s, &b[j].1));
            if !field.is_zero(&v) {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_specs() {
        assert!(FieldSpec::new(4).is_err());
        assert!(FieldSpec::new(1).is_err());
        assert!(FieldSpec::new((1 << 31) + 11).is_err());
        assert_eq!(FieldSpec::of(0).to_string(), "QQ");
        assert_eq!(FieldSpec::of(3).to_string(), "F3");
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.to_i64(&6), Some(-1));
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // [[1,1],[1,-1]] has determinant -2
        let q = Rationals;
        let m = vec![
            vec![(0, q.from_i64(1)), (1, q.from_i64(1))],
            vec![(0, q.from_i64(1)), (1, q.from_i64(-1))],
        ];
        assert_eq!(rank(&q, m), 2);
        let p = PrimeField::new(2).unwrap();
        let m2 = vec![vec![(0, 1), (1, 1)], vec![(0, 1), (1, p.from_i64(-1))]];
        assert_eq!(rank(&p, m2), 1);
    }
}
