//! Exact linear algebra over a prime field GF(p) or over the rationals.
//!
//! Vectors are sparse rows: `(column, value)` pairs with strictly increasing
//! columns and no stored zeros. Subspaces are kept in reduced row-echelon
//! form, which makes equality of subspaces a plain comparison of rows.

mod echelon;
mod matrix;
mod subspace;

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub(crate) use echelon::Echelon;
pub use matrix::{rref, Matrix};
pub use subspace::Subspace;

/// A sparse vector: strictly increasing column indices, nonzero values.
pub type Row<E> = Vec<(usize, E)>;

/// Default modulus for computations.
pub const DEFAULT_PRIME: u64 = 32003;

/// Arithmetic in a field whose elements are plain values.
///
/// The field object itself carries any runtime parameters (the modulus),
/// so elements stay small and `Copy`-like.
pub trait Field: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    /// Short name such as `GF(32003)` or `Q`.
    fn name(&self) -> String;
    /// Signed, human readable form of an element.
    fn format(&self, a: &Self::Elem) -> String;
}

/// The prime field GF(p) for an odd or even prime `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p: p as u32 })
    }

    pub fn modulus(&self) -> u64 {
        self.p as u64
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        Self {
            p: DEFAULT_PRIME as u32,
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u32;

    #[inline]
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn one(&self) -> u32 {
        1
    }
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        let p = self.p as u64;
        (if s >= p { s - p } else { s }) as u32
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (*a as u64 + self.p as u64 - *b as u64) as u32
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> u32 {
        assert!(*a != 0, "inverse of zero in GF({})", self.p);
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        t0.rem_euclid(self.p as i64) as u32
    }
    fn name(&self) -> String {
        format!("GF({})", self.p)
    }
    fn format(&self, a: &u32) -> String {
        if *a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            format!("+{a}")
        }
    }
}

/// The rational numbers with arbitrary precision.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

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
        assert!(!a.is_zero(), "inverse of zero in Q");
        a.recip()
    }
    fn name(&self) -> String {
        "Q".to_string()
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_negative() {
            a.to_string()
        } else {
            format!("+{a}")
        }
    }
}

/// Builds a sparse row from integer coefficients, dropping zeros.
pub fn row_from_i64<F: Field>(
    field: &F,
    entries: impl IntoIterator<Item = (usize, i64)>,
) -> Row<F::Elem> {
    let mut row: Row<F::Elem> = entries
        .into_iter()
        .map(|(c, v)| (c, field.from_i64(v)))
        .filter(|(_, v)| !field.is_zero(v))
        .collect();
    row.sort_by_key(|(c, _)| *c);
    debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0), "duplicate column");
    row
}

/// `sum_i coeff_i * rows_i` for sparse rows.
pub(crate) fn combine<'a, F: Field>(
    field: &F,
    terms: impl IntoIterator<Item = (&'a F::Elem, &'a Row<F::Elem>)>,
) -> Row<F::Elem>
where
    F::Elem: 'a,
{
    let mut acc = std::collections::BTreeMap::new();
    for (c, row) in terms {
        for (col, v) in row {
            let t = field.mul(c, v);
            let e = acc.entry(*col).or_insert_with(|| field.zero());
            *e = field.add(e, &t);
        }
    }
    acc.into_iter().filter(|(_, v)| !field.is_zero(v)).collect()
}
