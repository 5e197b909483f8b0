//! Multifactor quadratic Hensel lifting over Z/p^k.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::modpoly::PolyModP;
use crate::poly::IntPoly;

/// Coefficients reduced into `[0, m)`.
pub(crate) fn reduce(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

/// Coefficients reduced into `(-m/2, m/2]`.
pub(crate) fn symmetric_reduce(f: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m / 2;
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn mul_mod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    reduce(&(a * b), m)
}

/// Division by a monic `d` with everything reduced mod `m`.
fn divrem_mod(a: &IntPoly, d: &IntPoly, m: &BigInt) -> (IntPoly, IntPoly) {
    let (q, r) = a.divrem_monic(d);
    (reduce(&q, m), reduce(&r, m))
}

pub(crate) fn inverse_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one(), "not invertible");
    e.x.mod_floor(m)
}

/// One quadratic step: from `f ≡ g·h`, `s·g + t·h ≡ 1 (mod m)` to the same
/// relations mod m². `h` stays monic.
fn hensel_step(
    f: &IntPoly,
    g: &IntPoly,
    h: &IntPoly,
    s: &IntPoly,
    t: &IntPoly,
    m: &BigInt,
) -> (IntPoly, IntPoly, IntPoly, IntPoly) {
    let m2 = m * m;
    let e = reduce(&(f - &(g * h)), &m2);
    let (q, r) = divrem_mod(&mul_mod(s, &e, &m2), h, &m2);
    let g_new = reduce(&(&(g + &(t * &e)) + &(&q * g)), &m2);
    let h_new = reduce(&(h + &r), &m2);
    let b = reduce(&(&(&(s * &g_new) + &(t * &h_new)) - &IntPoly::one()), &m2);
    let (c, d) = divrem_mod(&mul_mod(s, &b, &m2), &h_new, &m2);
    let s_new = reduce(&(s - &d), &m2);
    let t_new = reduce(&(&(t - &(t * &b)) - &(&c * &g_new)), &m2);
    (g_new, h_new, s_new, t_new)
}

fn product_mod_p(factors: &[PolyModP], p: u64) -> PolyModP {
    factors
        .iter()
        .fold(PolyModP::one(p), |acc, f| acc.mul(f))
}

/// Lifts `f ≡ lc(f)·Π factors (mod p)` (factors monic, pairwise coprime) to
/// monic factors mod `modulus`, in the same order.
///
/// `modulus` must be `p^(2^j)` so that repeated squaring lands on it exactly.
pub(crate) fn multifactor_lift(
    f: &IntPoly,
    factors: &[PolyModP],
    p: u64,
    modulus: &BigInt,
) -> Vec<IntPoly> {
    if factors.len() == 1 {
        let inv = inverse_mod(&f.leading(), modulus);
        return vec![reduce(&f.scale(&inv), modulus)];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let lc_p = PolyModP::from_int_poly(&IntPoly::constant(f.leading()), p);
    let g0 = product_mod_p(left, p).mul(&lc_p);
    let h0 = product_mod_p(right, p);
    let (one, s0, t0) = g0.ext_gcd(&h0);
    debug_assert!(one.is_one(), "modular factors must be coprime");

    let mut g = g0.to_int_poly();
    let mut h = h0.to_int_poly();
    let mut s = s0.to_int_poly();
    let mut t = t0.to_int_poly();
    let mut m = BigInt::from(p);
    while &m < modulus {
        (g, h, s, t) = hensel_step(f, &g, &h, &s, &t, &m);
        m = &m * &m;
    }
    debug_assert_eq!(&m, modulus);
    let mut out = multifactor_lift(&g, left, p, modulus);
    out.extend(multifactor_lift(&h, right, p, modulus));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modpoly::factor_mod_p;

    #[test]
    fn lifted_product_matches_mod_pk() {
        let f: IntPoly = "x^4 - 10*x^2 + 1".parse().unwrap();
        let p = 3;
        let fp = factor_mod_p(&PolyModP::from_int_poly(&f, p), 0).unwrap();
        let facs: Vec<PolyModP> = fp.factors.iter().map(|(q, _)| q.clone()).collect();
        let m = BigInt::from(3u32).pow(16);
        let lifted = multifactor_lift(&f, &facs, p, &m);
        let prod = lifted
            .iter()
            .fold(IntPoly::one(), |acc, g| reduce(&(&acc * g), &m));
        assert_eq!(prod, reduce(&f, &m));
        assert!(lifted.iter().all(IntPoly::is_monic));
    }

    #[test]
    fn nonmonic_lift() {
        let f: IntPoly = "6*x^2 + 5*x + 1".parse().unwrap(); // (2x + 1)(3x + 1)
        let p = 5;
        let fp = factor_mod_p(&PolyModP::from_int_poly(&f, p), 0).unwrap();
        let facs: Vec<PolyModP> = fp.factors.iter().map(|(q, _)| q.clone()).collect();
        let m = BigInt::from(5u32).pow(8);
        let lifted = multifactor_lift(&f, &facs, p, &m);
        let prod = lifted
            .iter()
            .fold(IntPoly::constant(f.leading()), |acc, g| reduce(&(&acc * g), &m));
        assert_eq!(prod, reduce(&f, &m));
    }
}
