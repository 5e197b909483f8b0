//! Factorization over Z: content, squarefree decomposition, then
//! Zassenhaus (factor mod p, Hensel lift, recombine subsets).

mod hensel;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intfactor::is_probable_prime;
use crate::modpoly::{factor_mod_p, PolyModP};
use crate::poly::{symmetric_check, IntPoly};

use hensel::{multifactor_lift, symmetric_reduce};

/// Maximum number of modular factors entering subset recombination.
pub const MAX_MODULAR_FACTORS: usize = 16;

/// Number of auxiliary primes used for degree-pattern pruning.
const AUX_PRIMES: usize = 3;

/// Mod-p factor degrees of one irreducible factor at several primes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCertificate {
    pub patterns: Vec<(u64, Vec<usize>)>,
    /// Subset sums of every pattern intersect to {0, deg}: the patterns alone
    /// prove irreducibility.
    pub proves_irreducible: bool,
    /// Subsets tried during recombination of the squarefree part it came from.
    pub subsets_tested: usize,
}

/// `content · Π factor^mult`, factors primitive with positive leading
/// coefficient, sorted by degree then coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationZ {
    pub content: BigInt,
    pub factors: Vec<(IntPoly, usize)>,
    pub certificates: Vec<DegreeCertificate>,
}

impl FactorizationZ {
    pub fn expand(&self) -> IntPoly {
        self.factors
            .iter()
            .fold(IntPoly::constant(self.content.clone()), |acc, (f, m)| {
                &acc * &f.pow(*m as u32)
            })
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Squarefree decomposition of a primitive polynomial with positive leading
/// coefficient: `f = Π g_i^i` with primitive, pairwise coprime `g_i`.
pub fn squarefree_parts(f: &IntPoly) -> Vec<(IntPoly, usize)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let fr = f.to_rat();
    let mut c = fr.gcd(&fr.derivative());
    let mut w = fr.divrem(&c).expect("nonzero gcd").0;
    let mut i = 1;
    while w.degree().unwrap_or(0) > 0 {
        let y = w.gcd(&c);
        let z = w.divrem(&y).expect("nonzero").0;
        if z.degree().unwrap_or(0) > 0 {
            out.push((z.to_primitive_int(), i));
        }
        i += 1;
        w = y;
        c = c.divrem(&w).expect("nonzero").0;
    }
    out
}

fn next_prime(after: u64) -> u64 {
    let mut n = after + 1;
    while !is_probable_prime(&n.into()) {
        n += 1;
    }
    n
}

/// Prime p ≥ 3 not dividing the leading coefficient with `f mod p` squarefree.
fn is_good_prime(f: &IntPoly, p: u64) -> bool {
    let fp = PolyModP::from_int_poly(f, p);
    fp.degree() == f.degree() && fp.gcd(&fp.derivative()).is_one()
}

fn good_primes(f: &IntPoly, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut p = 2;
    while out.len() < count {
        p = next_prime(p);
        if is_good_prime(f, p) {
            out.push(p);
        }
    }
    out
}

/// Bitmask over 0..=deg of the degrees reachable as subset sums.
fn subset_sums(degrees: &[usize], deg: usize) -> Vec<bool> {
    let mut reach = vec![false; deg + 1];
    reach[0] = true;
    for &d in degrees {
        for s in (d..=deg).rev() {
            if reach[s - d] {
                reach[s] = true;
            }
        }
    }
    reach
}

/// `2^deg · ‖f‖₂`, rounded up: bounds every coefficient of every factor.
fn mignotte_bound(f: &IntPoly) -> BigInt {
    let norm2: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let root = norm2.sqrt() + 1;
    root << f.degree().unwrap_or(0)
}

fn for_each_subset(n: usize, k: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if visit(&idx) {
            return;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
            if i == 0 {
                return;
            }
        }
        if idx[i] >= n - k + i {
            return;
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

struct SquarefreeResult {
    factors: Vec<IntPoly>,
    subsets_tested: usize,
}

/// Irreducible factors of a primitive squarefree polynomial of positive
/// degree with positive leading coefficient.
fn factor_squarefree(f: &IntPoly, seed: u64) -> Result<SquarefreeResult> {
    let deg = f.degree().expect("positive degree");
    if deg == 1 {
        return Ok(SquarefreeResult {
            factors: vec![f.clone()],
            subsets_tested: 0,
        });
    }
    let primes = good_primes(f, 1 + AUX_PRIMES);
    let p = primes[0];
    let mut allowed = vec![true; deg + 1];
    for &q in &primes {
        let fq = factor_mod_p(&PolyModP::from_int_poly(f, q), seed)?;
        let degs = fq.degrees();
        let reach = subset_sums(&degs, deg);
        for (a, r) in allowed.iter_mut().zip(&reach) {
            *a &= *r;
        }
    }
    let irreducible_by_degrees = allowed[1..deg].iter().all(|a| !a);
    if irreducible_by_degrees {
        return Ok(SquarefreeResult {
            factors: vec![f.clone()],
            subsets_tested: 0,
        });
    }
    let modular: Vec<PolyModP> = factor_mod_p(&PolyModP::from_int_poly(f, p), seed)?
        .factors
        .into_iter()
        .map(|(q, _)| q)
        .collect();
    if modular.len() > MAX_MODULAR_FACTORS {
        return Err(Error::TooManyModularFactors(modular.len()));
    }
    if modular.len() == 1 {
        return Ok(SquarefreeResult {
            factors: vec![f.clone()],
            subsets_tested: 0,
        });
    }

    // lift past 2·B·|lc| with an exponent that is a power of two
    let target = BigInt::from(2) * mignotte_bound(f) * f.leading().abs();
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    while modulus <= target {
        modulus = &modulus * &modulus;
    }
    let lifted = multifactor_lift(f, &modular, p, &modulus);
    let degs: Vec<usize> = lifted.iter().map(|g| g.degree().unwrap_or(0)).collect();

    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut current = f.clone();
    let mut found = Vec::new();
    let mut tested = 0usize;
    let mut size = 1;
    while 2 * size <= remaining.len() {
        let mut hit: Option<(Vec<usize>, IntPoly, IntPoly)> = None;
        let lc = current.leading();
        let cur_deg = current.degree().unwrap_or(0);
        for_each_subset(remaining.len(), size, |sel| {
            let chosen: Vec<usize> = sel.iter().map(|&i| remaining[i]).collect();
            let d: usize = chosen.iter().map(|&i| degs[i]).sum();
            if d >= allowed.len() || !allowed[d] || d == cur_deg {
                return false;
            }
            tested += 1;
            let prod = chosen.iter().fold(IntPoly::constant(lc.clone()), |acc, &i| {
                hensel::reduce(&(&acc * &lifted[i]), &modulus)
            });
            let candidate = symmetric_reduce(&prod, &modulus).primitive_part();
            if let Some(q) = current.div_exact(&candidate) {
                hit = Some((chosen, candidate, q));
                return true;
            }
            false
        });
        match hit {
            Some((chosen, g, q)) => {
                remaining.retain(|i| !chosen.contains(i));
                found.push(g);
                current = q;
            }
            None => size += 1,
        }
    }
    if current.degree().unwrap_or(0) > 0 {
        found.push(current.primitive_part());
    }
    Ok(SquarefreeResult {
        factors: found,
        subsets_tested: tested,
    })
}

fn canonical_order(a: &IntPoly, b: &IntPoly) -> std::cmp::Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
}

/// Complete factorization over Z.
///
/// The seed only steers the randomized splitting mod p; the returned
/// factorization is the same for every seed.
pub fn factor_z(f: &IntPoly, seed: u64) -> Result<FactorizationZ> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut content = f.content();
    if f.leading().is_negative() {
        content = -content;
    }
    let prim = f.primitive_part();
    let mut factors = Vec::new();
    let mut certificates = Vec::new();
    for (part, mult) in squarefree_parts(&prim) {
        let res = factor_squarefree(&part, seed)?;
        for g in res.factors {
            let cert = degree_certificate_with(&g, seed, res.subsets_tested)?;
            factors.push((g, mult));
            certificates.push(cert);
        }
    }
    let mut order: Vec<usize> = (0..factors.len()).collect();
    order.sort_by(|&i, &j| canonical_order(&factors[i].0, &factors[j].0));
    let factors: Vec<_> = order.iter().map(|&i| factors[i].clone()).collect();
    let certificates: Vec<_> = order.iter().map(|&i| certificates[i].clone()).collect();
    let out = FactorizationZ {
        content,
        factors,
        certificates,
    };
    if out.expand() != *f {
        return Err(Error::Assumptions(
            "factorization failed the re-multiplication check".into(),
        ));
    }
    Ok(out)
}

fn degree_certificate_with(g: &IntPoly, seed: u64, subsets_tested: usize) -> Result<DegreeCertificate> {
    let deg = g.degree().unwrap_or(0);
    if deg <= 1 {
        return Ok(DegreeCertificate {
            patterns: Vec::new(),
            proves_irreducible: true,
            subsets_tested,
        });
    }
    let mut allowed = vec![true; deg + 1];
    let mut patterns = Vec::new();
    for q in good_primes(g, AUX_PRIMES) {
        let degs = factor_mod_p(&PolyModP::from_int_poly(g, q), seed)?.degrees();
        for (a, r) in allowed.iter_mut().zip(subset_sums(&degs, deg)) {
            *a &= r;
        }
        patterns.push((q, degs));
    }
    Ok(DegreeCertificate {
        patterns,
        proves_irreducible: allowed[1..deg].iter().all(|a| !a),
        subsets_tested,
    })
}

/// Irreducible factor set of P together with the standing-assumption flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricFactorSet {
    pub factors: Vec<IntPoly>,
    /// Every irreducible factor satisfies f(1 - X) = f(X).
    pub all_symmetric: bool,
    /// No repeated factor.
    pub squarefree: bool,
    /// P is monic (so every factor is).
    pub monic: bool,
    /// Per-factor symmetry flags, aligned with `factors`.
    pub symmetric_flags: Vec<bool>,
}

impl SymmetricFactorSet {
    pub fn satisfied(&self) -> bool {
        self.all_symmetric && self.squarefree && self.monic
    }

    /// Human-readable violated assumptions.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.monic {
            out.push("P is not monic".to_string());
        }
        if !self.squarefree {
            out.push("P is not square-free".to_string());
        }
        for (f, sym) in self.factors.iter().zip(&self.symmetric_flags) {
            if !sym {
                out.push(format!("irreducible factor {f} is not symmetric: f(1 - X) ≠ f(X)"));
            }
        }
        out
    }
}

/// Factors P and reports squarefreeness, monicity and symmetry of every
/// irreducible factor.
pub fn standing_assumptions(p: &IntPoly, seed: u64) -> Result<SymmetricFactorSet> {
    let fac = factor_z(p, seed)?;
    let squarefree = fac.factors.iter().all(|(_, m)| *m == 1) && fac.content.abs().is_one();
    let monic = p.is_monic();
    let factors: Vec<IntPoly> = fac.factors.into_iter().map(|(f, _)| f).collect();
    let symmetric_flags: Vec<bool> = factors.iter().map(symmetric_check).collect();
    Ok(SymmetricFactorSet {
        all_symmetric: symmetric_flags.iter().all(|s| *s),
        squarefree,
        monic,
        factors,
        symmetric_flags,
    })
}
