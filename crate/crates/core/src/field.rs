//! Exact scalar fields.
//!
//! A [`Field`] is a small context value; elements are plain data and every
//! operation goes through the context. This keeps runtime moduli cheap to
//! carry around.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

pub trait Field: Clone + Debug + PartialEq {
    type Elem: Clone + PartialEq + Debug;

    /// 0 for the rationals.
    fn characteristic(&self) -> u64;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Some square root, if one exists in the field.
    fn sqrt(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// JSON rendering: canonical integers for prime fields, integers or
    /// `"n/d"` strings for the rationals.
    fn to_json(&self, a: &Self::Elem) -> Value;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
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

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `a + b*c`, the inner step of every elimination loop.
    fn mul_add(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem {
        self.add(a, &self.mul(b, c))
    }
}

/// The prime field F_p, elements stored as canonical residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Fails unless `p` is a prime below 2^31.
    pub fn new(p: u64) -> Result<Self> {
        if !(2..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidParameter(format!("{p} is not a prime below 2^31")));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// All elements 0..p in order.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.p
    }

    /// Centered representative in (-p/2, p/2].
    pub fn centered(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }
    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    #[inline]
    fn mul_add(&self, a: &u64, b: &u64, c: &u64) -> u64 {
        (a + b * c) % self.p
    }

    // Tonelli-Shanks.
    fn sqrt(&self, a: &u64) -> Option<u64> {
        let p = self.p;
        if *a == 0 || p == 2 {
            return Some(*a);
        }
        if self.pow(a, (p - 1) / 2) != 1 {
            return None;
        }
        let mut q = p - 1;
        let mut s = 0;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let mut z = 2;
        while self.pow(&z, (p - 1) / 2) != p - 1 {
            z += 1;
        }
        let mut m = s;
        let mut c = self.pow(&z, q);
        let mut t = self.pow(a, q);
        let mut r = self.pow(a, q.div_ceil(2));
        while t != 1 {
            let mut i = 0;
            let mut tt = t;
            while tt != 1 {
                tt = self.mul(&tt, &tt);
                i += 1;
            }
            let b = self.pow(&c, 1 << (m - i - 1));
            m = i;
            c = self.mul(&b, &b);
            t = self.mul(&t, &c);
            r = self.mul(&r, &b);
        }
        Some(r)
    }

    fn to_json(&self, a: &u64) -> Value {
        Value::from(*a)
    }
}

/// The rational numbers with arbitrary precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn characteristic(&self) -> u64 {
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
    fn sqrt(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_negative() {
            return None;
        }
        let n = a.numer().sqrt();
        let d = a.denom().sqrt();
        if &(&n * &n) == a.numer() && &(&d * &d) == a.denom() {
            Some(BigRational::new(n, d))
        } else {
            None
        }
    }
    fn to_json(&self, a: &BigRational) -> Value {
        if a.is_integer() {
            if let Some(v) = a.numer().to_i64() {
                return Value::from(v);
            }
        }
        Value::from(a.to_string())
    }
}

/// Exact integer value of a rational, if it is one.
pub fn rational_to_i64(a: &BigRational) -> Option<i64> {
    if a.is_integer() {
        a.numer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(17).unwrap();
        assert_eq!(f.from_i64(-1), 16);
        for a in 1..17 {
            let ai = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &ai), 1);
        }
        assert!(PrimeField::new(15).is_err());
    }

    #[test]
    fn square_roots_mod_17() {
        let f = PrimeField::new(17).unwrap();
        let r2 = f.sqrt(&2).unwrap();
        assert_eq!(f.mul(&r2, &r2), 2);
        let i = f.sqrt(&16).unwrap();
        assert_eq!(f.mul(&i, &i), 16);
        assert!(f.sqrt(&3).is_none());
        let g = PrimeField::new(7).unwrap();
        assert!(g.sqrt(&6).is_none());
    }

    #[test]
    fn rational_sqrt() {
        let q = Rationals;
        let a = BigRational::new(9.into(), 4.into());
        assert_eq!(q.sqrt(&a), Some(BigRational::new(3.into(), 2.into())));
        assert!(q.sqrt(&q.from_i64(2)).is_none());
    }
}
