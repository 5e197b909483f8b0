//! Polynomials over prime fields F_p with machine-word p.

mod factor;
mod symmetric;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;

pub use factor::{factor_mod_p, squarefree_decomposition, FactorizationModP};
pub use symmetric::{involution_image, symmetric_common_factor, SymmetricCommonFactor, WitnessKind};

use crate::error::{Error, Result};
use crate::intfactor::is_probable_prime;
use crate::poly::IntPoly;

/// Largest admissible modulus (exclusive).
pub const MAX_MODULUS: u64 = 1 << 62;

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

/// Polynomial over F_p, coefficients ascending and reduced into `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyModP {
    p: u64,
    coeffs: Vec<u64>,
}

impl PolyModP {
    /// Builds a polynomial, reducing the coefficients mod `p`.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut poly = PolyModP {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        poly.trim();
        poly
    }

    /// Checked constructor: `p` must be a prime below 2^62.
    pub fn try_new(p: u64, coeffs: Vec<u64>) -> Result<Self> {
        check_modulus(p)?;
        Ok(Self::new(p, coeffs))
    }

    pub fn from_i64s(p: u64, coeffs: &[i64]) -> Self {
        Self::new(
            p,
            coeffs
                .iter()
                .map(|&c| c.rem_euclid(p as i64) as u64)
                .collect(),
        )
    }

    /// Coefficientwise reduction of an integer polynomial.
    pub fn from_int_poly(f: &IntPoly, p: u64) -> Self {
        let m = BigInt::from(p);
        Self::new(
            p,
            f.coeffs()
                .iter()
                .map(|c| c.mod_floor(&m).to_u64().expect("reduced below p"))
                .collect(),
        )
    }

    /// Lift to Z with coefficients in `[0, p)`.
    pub fn to_int_poly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn zero(p: u64) -> Self {
        PolyModP { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.leading(), self.p))
    }

    pub fn scale(&self, c: u64) -> Self {
        Self::new(self.p, self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let p = self.p;
        Self::new(
            p,
            (0..n)
                .map(|i| (self.c(i) + o.c(i)) % p)
                .collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let p = self.p;
        Self::new(
            p,
            (0..n)
                .map(|i| (self.c(i) + p - o.c(i)) % p)
                .collect(),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        Self::new(p, out)
    }

    fn c(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let p = self.p;
        let Some(n) = self.degree() else {
            return (Self::zero(p), Self::zero(p));
        };
        if n < dd {
            return (Self::zero(p), self.clone());
        }
        let inv = inv_mod(d.leading(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; n - dd + 1];
        for k in (0..=n - dd).rev() {
            let q = mul_mod(rem[k + dd], inv, p);
            if q == 0 {
                continue;
            }
            for (j, &dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = (rem[k + j] + p - mul_mod(q, dc, p)) % p;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (Self::new(p, quot), Self::new(p, rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Exact quotient; the remainder is asserted to vanish in debug builds.
    pub fn div(&self, d: &Self) -> Self {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    pub fn divides(&self, f: &Self) -> bool {
        !self.is_zero() && f.rem(self).is_zero()
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        Self::new(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
                .collect(),
        )
    }

    /// Monic gcd (zero only if both are zero).
    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: `(g, s, t)` with `s·self + t·o = g`, g monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = inv_mod(r0.leading(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    /// `self^e mod m` for a big exponent.
    pub fn pow_mod_big(&self, e: &BigUint, m: &Self) -> Self {
        let mut acc = Self::one(self.p).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    pub fn pow_mod(&self, e: u64, m: &Self) -> Self {
        self.pow_mod_big(&BigUint::from(e), m)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one(self.p);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }

    /// Composition `self(inner)`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(self.p), |acc, &c| {
            acc.mul(inner).add(&Self::new(self.p, vec![c]))
        })
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mul_mod(acc, x, p) + c) % p)
    }

    pub(crate) fn check_same(&self, o: &Self) -> Result<()> {
        if self.p != o.p {
            return Err(Error::ModulusMismatch(self.p, o.p));
        }
        Ok(())
    }
}

/// Checks that `p` is a prime below 2^62.
pub fn check_modulus(p: u64) -> Result<()> {
    if p >= MAX_MODULUS || !is_probable_prime(&BigUint::from(p)) {
        return Err(Error::BadModulus(p));
    }
    Ok(())
}

/// Monic gcd over F_p, rejecting mismatched moduli.
pub fn gcd_mod_p(f: &PolyModP, g: &PolyModP) -> Result<PolyModP> {
    f.check_same(g)?;
    Ok(f.gcd(g))
}

impl fmt::Display for PolyModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "{c}*x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " (mod {})", self.p)
    }
}

impl fmt::Debug for PolyModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyModP({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: u64, c: &[i64]) -> PolyModP {
        PolyModP::from_i64s(p, c)
    }

    #[test]
    fn gcd_examples() {
        let h = m(2, &[1, 1, 1]);
        assert_eq!(gcd_mod_p(&h, &h).unwrap(), h);
        let f1: IntPoly = "x^4 - 2*x^3 + 5*x^2 - 4*x + 1".parse().unwrap();
        let f2: IntPoly = "x^4 - 2*x^3 + 11*x^2 - 10*x + 3".parse().unwrap();
        let g = gcd_mod_p(&PolyModP::from_int_poly(&f1, 2), &PolyModP::from_int_poly(&f2, 2))
            .unwrap();
        assert_eq!(g, h.mul(&h));
        assert!(gcd_mod_p(&m(2, &[0, 1]), &m(2, &[1, 1])).unwrap().is_one());
        assert_eq!(
            gcd_mod_p(&m(2, &[1]), &m(3, &[1])),
            Err(Error::ModulusMismatch(2, 3))
        );
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = m(7, &[3, 0, 1, 5]);
        let b = m(7, &[1, 2, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn modulus_validation() {
        assert!(PolyModP::try_new(4, vec![1]).is_err());
        assert!(PolyModP::try_new(MAX_MODULUS + 1, vec![1]).is_err());
        assert!(PolyModP::try_new(2305843009213693951, vec![1]).is_ok());
    }

    #[test]
    fn reduction_of_negative_coefficients() {
        let f: IntPoly = "x^2 - x - 2".parse().unwrap();
        assert_eq!(PolyModP::from_int_poly(&f, 5).coeffs(), &[3, 4, 1]);
    }
}
