//! Sturm sequences, root isolation and the unit-circle root count ρ.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{symmetric_check, trace_polynomial, v_polynomial, IntPoly, RatPoly};

/// A rational number or ±∞.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Endpoint {
    NegInfinity,
    Finite(BigRational),
    PosInfinity,
}

impl Endpoint {
    pub fn int(v: i64) -> Self {
        Endpoint::Finite(BigRational::from_integer(v.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Endpoint::Finite(BigRational::new(n.into(), d.into()))
    }
}

impl From<BigRational> for Endpoint {
    fn from(v: BigRational) -> Self {
        Endpoint::Finite(v)
    }
}

impl PartialOrd for Endpoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        use Endpoint::*;
        Some(match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (NegInfinity, NegInfinity) | (PosInfinity, PosInfinity) => Ordering::Equal,
            (NegInfinity, _) | (_, PosInfinity) => Ordering::Less,
            (PosInfinity, _) | (_, NegInfinity) => Ordering::Greater,
        })
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::NegInfinity => f.write_str("-inf"),
            Endpoint::PosInfinity => f.write_str("inf"),
            Endpoint::Finite(v) => write!(f, "{v}"),
        }
    }
}

/// Open-closed interval `(lo, hi]` holding exactly one root of the polynomial
/// it was computed for; neither endpoint is a root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolatingInterval {
    #[serde(with = "rat_str")]
    pub lo: BigRational,
    #[serde(with = "rat_str")]
    pub hi: BigRational,
}

impl IsolatingInterval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn is_disjoint(&self, other: &IsolatingInterval) -> bool {
        self.hi <= other.lo || other.hi <= self.lo
    }

    /// Halves the interval (against `f`, the polynomial it isolates a root
    /// of) until it is narrower than `width`.
    pub fn refine(&self, f: &RatPoly, width: &BigRational) -> IsolatingInterval {
        let mut cur = self.clone();
        let lo_sign = sign(&f.evaluate(&cur.lo));
        while &cur.width() >= width {
            let mid = split_point(f, &cur.lo, &cur.hi);
            if sign(&f.evaluate(&mid)) == lo_sign {
                cur.lo = mid;
            } else {
                cur.hi = mid;
            }
        }
        cur
    }
}

impl fmt::Display for IsolatingInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}]", self.lo, self.hi)
    }
}

/// An element X² − X − λ of Irr_R(P), where λ < −1/4 is the root of the
/// v-polynomial isolated by `v_root_interval`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrrRFactor {
    pub v_root_interval: IsolatingInterval,
}

impl IrrRFactor {
    /// Interval for u = −λ > 1/4, i.e. for the factor written X² − X + u.
    pub fn u_interval(&self) -> (BigRational, BigRational) {
        (-&self.v_root_interval.hi, -&self.v_root_interval.lo)
    }
}

impl fmt::Display for IrrRFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.u_interval();
        write!(f, "X^2 - X + u, u in [{lo}, {hi})")
    }
}

fn sign(v: &BigRational) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

fn sturm_sequence(f: &RatPoly) -> Vec<RatPoly> {
    let mut seq = vec![f.clone(), f.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let (_, r) = seq[n - 2].divrem(&seq[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        seq.push(r.scale(&-BigRational::one()));
    }
    seq
}

fn sign_at(g: &RatPoly, x: &Endpoint) -> i8 {
    match x {
        Endpoint::Finite(v) => sign(&g.evaluate(v)),
        Endpoint::PosInfinity => sign(&g.leading()),
        Endpoint::NegInfinity => {
            let s = sign(&g.leading());
            if g.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }
    }
}

fn variations(seq: &[RatPoly], x: &Endpoint) -> usize {
    let signs: Vec<i8> = seq.iter().map(|g| sign_at(g, x)).filter(|s| *s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

fn check_squarefree(f: &RatPoly) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    if f.gcd(&f.derivative()).degree().unwrap_or(0) > 0 {
        return Err(Error::NotSquarefree);
    }
    Ok(())
}

fn check_interval(f: &RatPoly, a: &Endpoint, b: &Endpoint) -> Result<()> {
    if a >= b {
        return Err(Error::EmptyInterval);
    }
    for e in [a, b] {
        if let Endpoint::Finite(v) = e {
            if f.evaluate(v).is_zero() {
                return Err(Error::EndpointRoot(v.to_string()));
            }
        }
    }
    Ok(())
}

/// Number of real roots of a squarefree `f` in the open interval `(a, b)`.
pub fn sturm_count(f: &RatPoly, a: &Endpoint, b: &Endpoint) -> Result<usize> {
    check_squarefree(f)?;
    check_interval(f, a, b)?;
    let seq = sturm_sequence(f);
    Ok(variations(&seq, a) - variations(&seq, b))
}

/// Cauchy bound: every root lies strictly inside (−B, B).
fn root_bound(f: &RatPoly) -> BigRational {
    let lc = f.leading().abs();
    let max = f
        .coeffs()
        .iter()
        .map(|c| c.abs() / &lc)
        .max()
        .unwrap_or_else(BigRational::zero);
    max + BigRational::from_integer(2.into())
}

/// A non-root strictly inside (lo, hi), as close to the midpoint as the
/// dyadic offsets allow.
fn split_point(f: &RatPoly, lo: &BigRational, hi: &BigRational) -> BigRational {
    let two = BigRational::from_integer(2.into());
    let mid = (lo + hi) / &two;
    if !f.evaluate(&mid).is_zero() {
        return mid;
    }
    let mut offset = (hi - lo) / BigRational::from_integer(8.into());
    loop {
        for cand in [&mid + &offset, &mid - &offset] {
            if !f.evaluate(&cand).is_zero() {
                return cand;
            }
        }
        offset /= &two;
    }
}

/// Default isolation width, 2^-10.
pub fn default_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(1024))
}

/// Disjoint isolating intervals, sorted, one per real root of `f` in `(a, b)`,
/// each narrower than 2^-10.
pub fn isolate_roots(f: &RatPoly, a: &Endpoint, b: &Endpoint) -> Result<Vec<IsolatingInterval>> {
    check_squarefree(f)?;
    check_interval(f, a, b)?;
    let seq = sturm_sequence(f);
    let bound = root_bound(f);
    let lo = match a {
        Endpoint::Finite(v) => v.clone().max(-&bound),
        _ => -&bound,
    };
    let hi = match b {
        Endpoint::Finite(v) => v.clone().min(bound.clone()),
        _ => bound.clone(),
    };
    if lo >= hi {
        return Ok(Vec::new());
    }
    let width = default_width();
    let count = |x: &BigRational| variations(&seq, &Endpoint::Finite(x.clone()));
    let mut out = Vec::new();
    // (lo, hi, variations at lo, variations at hi)
    let mut stack = vec![(lo.clone(), hi.clone(), count(&lo), count(&hi))];
    while let Some((l, h, vl, vh)) = stack.pop() {
        let n = vl - vh;
        if n == 0 {
            continue;
        }
        if n == 1 && &h - &l < width {
            out.push(IsolatingInterval { lo: l, hi: h });
            continue;
        }
        let m = split_point(f, &l, &h);
        let vm = count(&m);
        stack.push((m.clone(), h, vm, vh));
        stack.push((l, m, vl, vm));
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    Ok(out)
}

fn is_reciprocal(delta: &IntPoly) -> bool {
    delta.reversed() == *delta
}

/// ρ(Δ): the number of roots of Δ on the unit circle, counted through the
/// real roots of the trace polynomial in (−2, 2).
pub fn rho_delta(delta: &IntPoly) -> Result<usize> {
    if delta.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !is_reciprocal(delta) {
        return Err(Error::NotReciprocal);
    }
    if !delta.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    for unit in [1i32, -1] {
        if delta.eval_int(&BigInt::from(unit)).is_zero() {
            return Err(Error::RootAtUnit(unit));
        }
    }
    let d = trace_polynomial(delta)?;
    if d.degree().unwrap_or(0) == 0 {
        return Ok(0);
    }
    let n = sturm_count(&d.to_rat(), &Endpoint::int(-2), &Endpoint::int(2))?;
    Ok(2 * n)
}

fn v_roots_below_quarter(p: &IntPoly) -> Result<(RatPoly, Vec<IsolatingInterval>)> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !symmetric_check(p) {
        return Err(Error::NotSymmetric);
    }
    if !p.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let q = v_polynomial(p)?.to_rat();
    if q.degree().unwrap_or(0) == 0 {
        return Ok((q, Vec::new()));
    }
    let roots = isolate_roots(&q, &Endpoint::NegInfinity, &Endpoint::ratio(-1, 4))?;
    Ok((q, roots))
}

/// ρ(P): twice the number of roots λ < −1/4 of the v-polynomial of P.
pub fn rho_p(p: &IntPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !symmetric_check(p) {
        return Err(Error::NotSymmetric);
    }
    if !p.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let q = v_polynomial(p)?.to_rat();
    if q.degree().unwrap_or(0) == 0 {
        return Ok(0);
    }
    let n = sturm_count(&q, &Endpoint::NegInfinity, &Endpoint::ratio(-1, 4))?;
    Ok(2 * n)
}

/// Irr_R(P), one entry per root λ < −1/4 of the v-polynomial, sorted by λ.
pub fn irr_r_factors(p: &IntPoly) -> Result<Vec<IrrRFactor>> {
    let (_, roots) = v_roots_below_quarter(p)?;
    Ok(roots
        .into_iter()
        .map(|v_root_interval| IrrRFactor { v_root_interval })
        .collect())
}

mod rat_str {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
