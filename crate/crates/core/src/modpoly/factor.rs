use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::PolyModP;
use crate::error::{Error, Result};

/// `unit · Π factor^mult` with monic irreducible, pairwise distinct factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationModP {
    pub unit: u64,
    pub factors: Vec<(PolyModP, usize)>,
}

impl FactorizationModP {
    pub fn expand(&self, p: u64) -> PolyModP {
        self.factors
            .iter()
            .fold(PolyModP::new(p, vec![self.unit]), |acc, (f, m)| {
                acc.mul(&f.pow(*m as u32))
            })
    }

    /// Degrees of the irreducible factors, repeated by multiplicity.
    pub fn degrees(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(f, m)| std::iter::repeat_n(f.degree().unwrap_or(0), *m))
            .collect();
        out.sort_unstable();
        out
    }
}

/// Squarefree decomposition of a monic polynomial: pairs `(g_i, i)` with
/// `f = Π g_i^i`, each `g_i` squarefree and pairwise coprime.
pub fn squarefree_decomposition(f: &PolyModP) -> Vec<(PolyModP, usize)> {
    let p = f.modulus();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.div(&y);
        if !z.is_one() {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = c.div(&w);
    }
    if !c.is_one() {
        // c is a p-th power: c(x) = r(x^p) and r^p = c
        let root = PolyModP::new(
            p,
            c.coeffs().iter().step_by(p as usize).copied().collect(),
        );
        for (g, m) in squarefree_decomposition(&root) {
            out.push((g, m * p as usize));
        }
    }
    out
}

/// Splits a monic squarefree polynomial into products of irreducibles of a
/// common degree.
fn distinct_degree(f: &PolyModP) -> Vec<(PolyModP, usize)> {
    let p = f.modulus();
    let x = PolyModP::x(p);
    let mut out = Vec::new();
    let mut g = f.clone();
    let mut h = x.rem(&g);
    let mut d = 1;
    while g.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(p, &g);
        let gd = g.gcd(&h.sub(&x));
        if !gd.is_one() {
            g = g.div(&gd);
            h = h.rem(&g);
            out.push((gd, d));
        }
        d += 1;
    }
    if g.degree().unwrap_or(0) > 0 {
        let dg = g.degree().unwrap();
        out.push((g, dg));
    }
    out
}

fn random_below_degree(p: u64, n: usize, rng: &mut ChaCha8Rng) -> PolyModP {
    PolyModP::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect())
}

/// Equal-degree splitting of a product of irreducibles of degree `d`.
fn equal_degree(f: &PolyModP, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<PolyModP>) {
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return;
    }
    if n == d {
        out.push(f.clone());
        return;
    }
    let p = f.modulus();
    let exponent = if p == 2 {
        BigUint::from(0u32)
    } else {
        (BigUint::from(p).pow(d as u32) - 1u32) / 2u32
    };
    loop {
        let a = random_below_degree(p, n, rng);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // absolute trace a + a^2 + ... + a^(2^(d-1))
            let mut term = a.rem(f);
            let mut acc = term.clone();
            for _ in 1..d {
                term = term.mul(&term).rem(f);
                acc = acc.add(&term);
            }
            acc
        } else {
            a.pow_mod_big(&exponent, f).sub(&PolyModP::one(p))
        };
        let t = f.gcd(&b);
        let dt = t.degree().unwrap_or(0);
        if dt > 0 && dt < n {
            let other = f.div(&t);
            equal_degree(&t, d, rng, out);
            equal_degree(&other, d, rng, out);
            return;
        }
    }
}

/// Complete factorization over F_p (Cantor-Zassenhaus).
///
/// The seed only drives the random splitting; factors come back sorted by
/// degree, then coefficients, so the result does not depend on it.
pub fn factor_mod_p(f: &PolyModP, seed: u64) -> Result<FactorizationModP> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let p = f.modulus();
    let unit = f.leading();
    let monic = f.monic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(&monic) {
        for (block, d) in distinct_degree(&part) {
            let mut irreducibles = Vec::new();
            equal_degree(&block, d, &mut rng, &mut irreducibles);
            factors.extend(irreducibles.into_iter().map(|q| (q, mult)));
        }
    }
    factors.sort_by(|(a, _), (b, _)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
    });
    debug_assert_eq!(
        FactorizationModP { unit, factors: factors.clone() }.expand(p),
        *f
    );
    Ok(FactorizationModP { unit, factors })
}
