//! Common factors invariant under the involution X ↦ 1 - X.
//!
//! A nonconstant h with h(1 - X) = h(X) has even degree in every
//! characteristic. Writing gcd(f, g) = Π q_i^{e_i} over F_p, a symmetric
//! common divisor exists iff one of the following holds:
//!
//! * an orbit pair q ≠ q̃ (q̃ the monic image of q(1 - X)) has both members
//!   dividing the gcd: h = q·q̃;
//! * some q = q̃ has even degree, hence q(1 - X) = q(X): h = q;
//! * p is odd and the fixed point X - 1/2 divides the gcd at least twice:
//!   h = (X - 1/2)^2.
//!
//! An odd-degree q with q = q̃ satisfies q(1 - X) = -q(X), which forces
//! q(1/2) = 0, so the third case is the only remaining one.

use super::{factor_mod_p, PolyModP};
use crate::error::{Error, Result};

/// Monic normalization of `h(1 - X)`.
pub fn involution_image(h: &PolyModP) -> PolyModP {
    let p = h.modulus();
    let one_minus_x = PolyModP::new(p, vec![1, p - 1]);
    h.compose(&one_minus_x).monic()
}

/// Which rule produced the witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    OrbitPair,
    FixedEvenDegree,
    SquaredFixedPoint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricCommonFactor {
    pub exists: bool,
    pub witness: Option<PolyModP>,
    pub kind: Option<WitnessKind>,
}

impl SymmetricCommonFactor {
    fn none() -> Self {
        SymmetricCommonFactor {
            exists: false,
            witness: None,
            kind: None,
        }
    }

    fn found(h: PolyModP, kind: WitnessKind) -> Self {
        SymmetricCommonFactor {
            exists: true,
            witness: Some(h),
            kind: Some(kind),
        }
    }
}

/// Decides whether `f` and `g` share a nonconstant factor h with
/// h(1 - X) = h(X) over F_p, and returns a minimal such h.
///
/// Candidates are tried in the canonical factor order, with the even-degree
/// fixed factors first, so the witness does not depend on argument order.
pub fn symmetric_common_factor(
    f: &PolyModP,
    g: &PolyModP,
    seed: u64,
) -> Result<SymmetricCommonFactor> {
    f.check_same(g)?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroInput);
    }
    let p = f.modulus();
    let d = f.gcd(g);
    if d.degree().unwrap_or(0) == 0 {
        return Ok(SymmetricCommonFactor::none());
    }
    let fact = factor_mod_p(&d, seed)?;
    for (q, _) in &fact.factors {
        if q.degree().unwrap_or(0) % 2 == 0 && involution_image(q) == *q {
            return Ok(SymmetricCommonFactor::found(q.clone(), WitnessKind::FixedEvenDegree));
        }
    }
    for (q, _) in &fact.factors {
        let image = involution_image(q);
        if image != *q && fact.factors.iter().any(|(r, _)| *r == image) {
            return Ok(SymmetricCommonFactor::found(q.mul(&image), WitnessKind::OrbitPair));
        }
    }
    if p != 2 {
        let half = (1 + p) / 2;
        let fixed_point = PolyModP::new(p, vec![p - half, 1]);
        if let Some((_, m)) = fact.factors.iter().find(|(q, _)| *q == fixed_point) {
            if *m >= 2 {
                return Ok(SymmetricCommonFactor::found(
                    fixed_point.mul(&fixed_point),
                    WitnessKind::SquaredFixedPoint,
                ));
            }
        }
    }
    Ok(SymmetricCommonFactor::none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPoly;

    fn m(p: u64, c: &[i64]) -> PolyModP {
        PolyModP::from_i64s(p, c)
    }

    #[test]
    fn involution_examples() {
        let h = m(2, &[1, 1, 1]);
        assert_eq!(involution_image(&h), h);
        assert_eq!(involution_image(&m(7, &[0, 1])), m(7, &[6, 1]));
        assert_eq!(involution_image(&m(7, &[1])), m(7, &[1]));
        let q = m(11, &[3, 5, 1]);
        assert_eq!(involution_image(&involution_image(&q)), q);
    }

    #[test]
    fn first_fixture_at_two() {
        let f1: IntPoly = "x^4 - 2*x^3 + 5*x^2 - 4*x + 1".parse().unwrap();
        let f2: IntPoly = "x^4 - 2*x^3 + 11*x^2 - 10*x + 3".parse().unwrap();
        let r = symmetric_common_factor(
            &PolyModP::from_int_poly(&f1, 2),
            &PolyModP::from_int_poly(&f2, 2),
            0,
        )
        .unwrap();
        assert!(r.exists);
        assert_eq!(r.witness, Some(m(2, &[1, 1, 1])));
    }

    #[test]
    fn coprime_and_single_fixed_point() {
        let r = symmetric_common_factor(&m(5, &[0, 1]), &m(5, &[1, 1]), 0).unwrap();
        assert!(!r.exists);
        // (1 + 5)/2 = 3
        let q = m(5, &[-3, 1]);
        let r = symmetric_common_factor(&q, &q, 0).unwrap();
        assert!(!r.exists);
        let q2 = q.mul(&q);
        let r = symmetric_common_factor(&q2, &q2.mul(&m(5, &[1, 1])), 0).unwrap();
        assert_eq!(r.witness, Some(q2));
        assert_eq!(r.kind, Some(WitnessKind::SquaredFixedPoint));
    }

    #[test]
    fn orbit_pairs() {
        // X and X - 1 swap under the involution
        let f = m(7, &[0, 6, 1]); // X(X - 1)
        let r = symmetric_common_factor(&f, &f, 0).unwrap();
        assert_eq!(r.kind, Some(WitnessKind::OrbitPair));
        assert_eq!(r.witness, Some(f.clone()));
        let r = symmetric_common_factor(&f, &m(7, &[0, 1]), 0).unwrap();
        assert!(!r.exists);
    }

    #[test]
    fn mismatched_moduli() {
        assert_eq!(
            symmetric_common_factor(&m(2, &[1, 1]), &m(3, &[1, 1]), 0),
            Err(Error::ModulusMismatch(2, 3))
        );
    }
}
