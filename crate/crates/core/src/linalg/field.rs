//! The two ground fields supported by the crate: the rationals and the prime
//! fields `F_p`.
//!
//! A field is a small value (a unit struct for `Q`, the modulus for `F_p`)
//! that performs arithmetic on its elements. Matrices carry their field, so
//! elements of different fields never meet in one computation.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arithmetic context for a field whose elements are `Self::Elem`.
pub trait Field: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync {
    type Elem: Clone + fmt::Debug + fmt::Display + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn from_bigint(&self, v: &BigInt) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// 0 for `Q`, `p` for `F_p`.
    fn characteristic(&self) -> u64;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|b| self.mul(a, &b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn dot(&self, a: &[Self::Elem], b: &[Self::Elem]) -> Self::Elem {
        a.iter()
            .zip(b)
            .fold(self.zero(), |acc, (x, y)| self.add(&acc, &self.mul(x, y)))
    }
}

/// The field of rational numbers with arbitrary-precision numerator and
/// denominator. `BigRational` keeps values in lowest terms with a positive
/// denominator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
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
    fn from_bigint(&self, v: &BigInt) -> BigRational {
        BigRational::from_integer(v.clone())
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
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

/// A residue class in `F_p`, always stored in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Residue(pub u64);

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Fails unless `p` is prime. Moduli are limited to 32 bits so products
    /// fit in a `u64` before reduction.
    pub fn new(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn residue(&self, v: u64) -> Residue {
        Residue(v % self.p)
    }

    /// Reduces a rational number, failing when the denominator is divisible by `p`.
    pub fn reduce_rational(&self, q: &BigRational) -> Result<Residue> {
        let num = self.from_bigint(q.numer());
        let den = self.from_bigint(q.denom());
        self.div(&num, &den)
            .ok_or(Error::DegenerateReduction { p: self.p })
    }
}

impl Field for PrimeField {
    type Elem = Residue;

    fn zero(&self) -> Residue {
        Residue(0)
    }
    fn one(&self) -> Residue {
        Residue(1 % self.p)
    }
    fn from_i64(&self, v: i64) -> Residue {
        Residue(v.rem_euclid(self.p as i64) as u64)
    }
    fn from_bigint(&self, v: &BigInt) -> Residue {
        let m = BigInt::from(self.p);
        let r = v.mod_floor(&m);
        Residue(r.to_u64().expect("residue below modulus"))
    }
    fn add(&self, a: &Residue, b: &Residue) -> Residue {
        Residue((a.0 + b.0) % self.p)
    }
    fn sub(&self, a: &Residue, b: &Residue) -> Residue {
        Residue((a.0 + self.p - b.0) % self.p)
    }
    fn mul(&self, a: &Residue, b: &Residue) -> Residue {
        Residue(a.0 * b.0 % self.p)
    }
    fn neg(&self, a: &Residue) -> Residue {
        Residue((self.p - a.0) % self.p)
    }
    fn inv(&self, a: &Residue) -> Option<Residue> {
        if a.0 == 0 {
            return None;
        }
        let e = (a.0 as i64).extended_gcd(&(self.p as i64));
        Some(self.from_i64(e.x))
    }
    fn is_zero(&self, a: &Residue) -> bool {
        a.0 == 0
    }
    fn characteristic(&self) -> u64 {
        self.p
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

/// Smallest prime `>= n`.
pub fn next_prime(n: u64) -> u64 {
    let mut c = n.max(2);
    while !is_prime(c) {
        c += 1;
    }
    c
}

/// Returns the integer value of a rational, if it is one.
/// Parses `a` or `a/b`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let q: BigRational = s.trim().parse().map_err(|_| Error::Parse(format!("`{s}` is not a rational number")))?;
    Ok(q)
}

pub fn as_integer(q: &BigRational) -> Option<&BigInt> {
    q.is_integer().then(|| q.numer())
}
