//! Invariants checked on random inputs.

mod common;

use common::*;
use knotsig::matrix::{signature_exact, IntMatrix};
use knotsig::modpoly::{factor_mod_p, PolyModP};
use knotsig::obstruction::pi_set;
use knotsig::poly::{delta_to_p, p_to_delta, resultant};
use knotsig::realroots::{isolate_roots, sturm_count, Endpoint};
use knotsig::zfactor::factor_z;
use knotsig::IntPoly;
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn int_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-bound..=bound, 1..=max_deg + 1).prop_map(|c| IntPoly::from_i64s(&c))
}

fn nonzero_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    int_poly(max_deg, bound).prop_filter("nonzero", |f| !f.is_zero())
}

fn reciprocal(max_half: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    (1..=max_half, any::<u64>())
        .prop_map(move |(n, seed)| random_reciprocal(n, bound, &mut ChaCha8Rng::seed_from_u64(seed)))
}

fn symmetric_factors() -> Vec<IntPoly> {
    let mut out = vec![f1(), f2(), delta_to_p(&g1()).unwrap()];
    for a in 0..=5 {
        out.push(delta_to_p(&delta_a(a)).unwrap());
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn delta_p_round_trip(d in reciprocal(4, 9)) {
        // P drops degree exactly when Δ(1) = 0
        prop_assume!(!d.eval_int(&BigInt::from(1)).is_zero());
        let p = delta_to_p(&d).unwrap();
        prop_assert_eq!(p.degree(), d.degree());
        prop_assert_eq!(p_to_delta(&p).unwrap(), d);
    }

    #[test]
    fn parse_display_round_trip(f in int_poly(8, 50)) {
        let back: IntPoly = f.to_string().parse().unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn factor_z_expands(f in nonzero_poly(7, 6), g in nonzero_poly(4, 4)) {
        let h = &f * &g;
        let fac = factor_z(&h, 1).unwrap();
        prop_assert_eq!(fac.expand(), h);
        for (q, _) in &fac.factors {
            prop_assert!(q.degree().unwrap() >= 1);
            prop_assert!(q.leading() > BigInt::from(0));
        }
    }

    #[test]
    fn factorization_seed_independent(f in nonzero_poly(6, 5), seed in any::<u64>()) {
        let (a, b) = (factor_z(&f, seed).unwrap(), factor_z(&f, 0).unwrap());
        prop_assert_eq!((a.content, a.factors), (b.content, b.factors));
    }

    #[test]
    fn resultant_antisymmetry(f in nonzero_poly(5, 7), g in nonzero_poly(5, 7)) {
        let (df, dg) = (f.degree().unwrap(), g.degree().unwrap());
        let r = resultant(&f, &g);
        let sign = if df * dg % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
        prop_assert_eq!(resultant(&g, &f), sign * r);
    }

    #[test]
    fn resultant_multiplicative(f in nonzero_poly(3, 5), g in nonzero_poly(3, 5), h in nonzero_poly(3, 5)) {
        prop_assert_eq!(resultant(&(&f * &g), &h), resultant(&f, &h) * resultant(&g, &h));
    }

    #[test]
    fn factor_mod_p_expands(c in prop::collection::vec(0u64..1000, 2..12), pi in 0usize..5, seed in any::<u64>()) {
        let p = [2u64, 3, 7, 101, 1_000_003][pi];
        let f = PolyModP::new(p, c);
        prop_assume!(!f.is_zero());
        let fac = factor_mod_p(&f, seed).unwrap();
        prop_assert_eq!(fac.expand(p), f);
        for (q, _) in &fac.factors {
            prop_assert!(q.is_monic());
        }
    }

    #[test]
    fn isolation_agrees_with_sturm(f in nonzero_poly(7, 8)) {
        prop_assume!(f.degree().unwrap() >= 1 && f.is_squarefree());
        let r = f.to_rat();
        let (lo, hi) = (Endpoint::NegInfinity, Endpoint::PosInfinity);
        let ivs = isolate_roots(&r, &lo, &hi).unwrap();
        prop_assert_eq!(ivs.len(), sturm_count(&r, &lo, &hi).unwrap());
        for w in ivs.windows(2) {
            prop_assert!(w[0].is_disjoint(&w[1]));
        }
    }

    #[test]
    fn pi_set_symmetric(i in 0usize..9, j in 0usize..9) {
        let fs = symmetric_factors();
        prop_assume!(fs[i] != fs[j]);
        let a = pi_set(&fs[i], &fs[j], 0).unwrap();
        let b = pi_set(&fs[j], &fs[i], 0).unwrap();
        prop_assert_eq!(a.primes, b.primes);
    }
}

fn float_signature(m: &IntMatrix) -> Option<i64> {
    let f = m.to_f64();
    let n = f.len();
    let d = DMatrix::from_fn(n, n, |i, j| f[i][j]);
    let eig = d.symmetric_eigen();
    let mut sig = 0;
    for &v in eig.eigenvalues.iter() {
        if v.abs() < 1e-6 {
            return None;
        }
        sig += if v > 0.0 { 1 } else { -1 };
    }
    Some(sig)
}

#[test]
fn signature_exact_matches_floating_eigenvalues() {
    let mut rng = ChaCha8Rng::seed_from_u64(200);
    let bases = [
        IntMatrix::from_i64(&[&[0, 1], &[1, 0]]),
        IntMatrix::from_i64(&[&[1]]),
        IntMatrix::from_i64(&[&[-1]]),
        knotsig::matrix::e8_gram(),
    ];
    let mut checked = 0;
    for k in 0..200 {
        let mut s = bases[k % bases.len()].clone();
        s = s.direct_sum(&bases[(k / 4) % 3]);
        let g = random_unimodular(s.nrows(), &mut rng);
        let m = g.transpose().mul(&s).unwrap().mul(&g).unwrap();
        assert!(m.is_symmetric());
        assert_eq!(m.det().unwrap().magnitude(), &num_bigint::BigUint::from(1u8));
        let exact = signature_exact(&m).unwrap();
        assert_eq!(exact, signature_exact(&s).unwrap(), "congruence changed the signature");
        if let Some(fl) = float_signature(&m) {
            assert_eq!(exact, fl, "float oracle disagrees on {m}");
            checked += 1;
        }
    }
    assert!(checked >= 150, "only {checked} matrices were well conditioned");
}
