//! Exact field arithmetic over ℚ and prime fields F_p.
//!
//! Fields are values implementing [`Field`]; elements are plain data
//! (`BigRational` for ℚ, a canonical residue `u32` for F_p) and every
//! operation goes through the field so that the same algorithm code runs
//! over either.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which field, as parsed from text like `"Q"`, `"F5"` or `"Fp:5"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldDescriptor {
    Rationals,
    PrimeField { modulus: u64 },
}

impl FieldDescriptor {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Rationals => 0,
            FieldDescriptor::PrimeField { modulus } => *modulus,
        }
    }

    /// Number of elements, `None` for ℚ.
    pub fn size(&self) -> Option<u64> {
        match self {
            FieldDescriptor::Rationals => None,
            FieldDescriptor::PrimeField { modulus } => Some(*modulus),
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::PrimeField { modulus } => write!(f, "F{modulus}"),
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        make_field(s)
    }
}

/// Parses a field spec. Accepts `Q`, `F<p>`, `Fp:<p>` and `F_<p>`.
pub fn make_field(spec: &str) -> Result<FieldDescriptor> {
    let s = spec.trim();
    if s == "Q" || s == "QQ" {
        return Ok(FieldDescriptor::Rationals);
    }
    let digits = s
        .strip_prefix("Fp:")
        .or_else(|| s.strip_prefix("F_"))
        .or_else(|| s.strip_prefix('F'))
        .ok_or_else(|| Error::BadFieldSpec(spec.to_string()))?;
    let p: u64 = digits
        .parse()
        .map_err(|_| Error::BadFieldSpec(spec.to_string()))?;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p > u32::MAX as u64 / 2 {
        return Err(Error::BadFieldSpec(format!("{spec}: modulus too large")));
    }
    Ok(FieldDescriptor::PrimeField { modulus: p })
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

/// A field with exact arithmetic.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Ord + Send + Sync;

    fn descriptor(&self) -> FieldDescriptor;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    /// Maps a rational into the field; fails when the denominator vanishes.
    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem>;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Text encoding: integers, `num/den` for ℚ, canonical residues for F_p.
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem>;

    /// Element number `i` in the canonical enumeration of a finite field.
    fn element(&self, i: u64) -> Self::Elem;
    /// Inverse of [`Field::element`]. Only meaningful for finite fields.
    fn index_of(&self, a: &Self::Elem) -> u64;

    fn characteristic(&self) -> u64 {
        self.descriptor().characteristic()
    }

    fn size(&self) -> Option<u64> {
        self.descriptor().size()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn pow(&self, a: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// All elements of a finite field, `None` for ℚ.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        self.size().map(|q| (0..q).map(|i| self.element(i)).collect())
    }
}

/// The rational numbers, arbitrary precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Rationals
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }

    fn from_rational(&self, q: &BigRational) -> Result<BigRational> {
        Ok(q.clone())
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

    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(a.recip())
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn format(&self, a: &BigRational) -> String {
        format_rational(a)
    }

    fn parse(&self, s: &str) -> Result<BigRational> {
        parse_rational(s)
    }

    /// Enumerates 0, 1, -1, 2, -2, ... (integers only).
    fn element(&self, i: u64) -> BigRational {
        let k = i.div_ceil(2) as i64;
        self.from_i64(if i % 2 == 1 { k } else { -k })
    }

    fn index_of(&self, a: &BigRational) -> u64 {
        let n = a.to_integer().to_i64().unwrap_or(0);
        if n > 0 {
            (2 * n - 1) as u64
        } else {
            (-2 * n) as u64
        }
    }
}

/// F_p for a prime p (validated by [`make_field`] or [`PrimeField::new`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        match make_field(&format!("F{p}"))? {
            FieldDescriptor::PrimeField { modulus } => Ok(PrimeField { p: modulus as u32 }),
            FieldDescriptor::Rationals => unreachable!(),
        }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::PrimeField { modulus: self.p as u64 }
    }

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1 % self.p
    }

    fn from_i64(&self, n: i64) -> u32 {
        self.reduce_i64(n)
    }

    fn from_bigint(&self, n: &BigInt) -> u32 {
        let r = n.mod_floor(&BigInt::from(self.p));
        r.to_u32().expect("residue fits")
    }

    fn from_rational(&self, q: &BigRational) -> Result<u32> {
        let den = self.from_bigint(q.denom());
        if den == 0 {
            return Err(Error::NonInvertibleDenominator {
                den: q.denom().to_string(),
                p: self.p as u64,
            });
        }
        let num = self.from_bigint(q.numer());
        self.div(&num, &den)
    }

    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
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

    fn inv(&self, a: &u32) -> Result<u32> {
        if *a == 0 {
            return Err(Error::DivisionByZero);
        }
        // Fermat: a^(p-2)
        Ok(self.pow(a, self.p - 2))
    }

    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    fn format(&self, a: &u32) -> String {
        a.to_string()
    }

    fn parse(&self, s: &str) -> Result<u32> {
        let q = parse_rational(s)?;
        self.from_rational(&q)
    }

    fn element(&self, i: u64) -> u32 {
        (i % self.p as u64) as u32
    }

    fn index_of(&self, a: &u32) -> u64 {
        *a as u64
    }
}

pub fn format_rational(a: &BigRational) -> String {
    if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let bad = || Error::BadScalar(s.to_string());
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = n.parse().map_err(|_| bad())?;
    let den: BigInt = d.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(num, den))
}

/// Convenience for building rationals in code and tests.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `true` when the rational is a (possibly negative) integer.
pub fn is_integral(q: &BigRational) -> bool {
    q.is_integer()
}
