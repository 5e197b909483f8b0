//! Alexander-side conditions and the substitutions linking Δ, P, Q and D.
//!
//! * `P(X) = (-1)^n X^{2n} Δ(1 - 1/X)` relates a reciprocal Δ of degree 2n to a
//!   polynomial P with `P(1 - X) = P(X)`.
//! * `P(X) = Q(X^2 - X)` for symmetric P.
//! * `Δ(X) = X^n D(X + 1/X)` for reciprocal Δ.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::IntPoly;
use crate::error::{Error, Result};

/// Outcome of the three classical conditions on an Alexander polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub degree_even: bool,
    /// `Δ(X) = X^{2n} Δ(1/X)`
    pub cond_reciprocal: bool,
    /// `Δ(1) = (-1)^n`
    pub cond_at_one: bool,
    /// `Δ(-1)` is a perfect square
    pub cond_at_minus_one: bool,
    pub n: usize,
    #[serde(with = "crate::bigint_str")]
    pub delta_one: BigInt,
    #[serde(with = "crate::bigint_str")]
    pub delta_minus_one: BigInt,
    #[serde(with = "crate::bigint_str::option")]
    pub square_root_witness: Option<BigInt>,
}

impl ConditionReport {
    pub fn all_hold(&self) -> bool {
        self.degree_even && self.cond_reciprocal && self.cond_at_one && self.cond_at_minus_one
    }

    /// Human-readable statements of the violated conditions.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.degree_even {
            out.push("condition (1): Δ has odd degree".to_string());
        } else if !self.cond_reciprocal {
            out.push(format!("condition (1): Δ(X) ≠ X^{}·Δ(X^-1)", 2 * self.n));
        }
        if !self.cond_at_one {
            let expect = if self.n % 2 == 0 { 1 } else { -1 };
            out.push(format!(
                "condition (2): Δ(1) = {} ≠ (-1)^{} = {expect}",
                self.delta_one, self.n
            ));
        }
        if !self.cond_at_minus_one {
            out.push(format!(
                "condition (3): Δ(-1) = {} is not a perfect square",
                self.delta_minus_one
            ));
        }
        out
    }
}

/// Exact square root of a non-negative perfect square.
fn exact_sqrt(v: &BigInt) -> Option<BigInt> {
    if v.is_negative() {
        return None;
    }
    let r = v.sqrt();
    (&r * &r == *v).then_some(r)
}

fn is_palindrome(p: &IntPoly) -> bool {
    let c = p.coeffs();
    c.iter().eq(c.iter().rev())
}

/// Checks Δ against conditions (1)-(3); odd degree is a failure of (1).
pub fn alexander_check(delta: &IntPoly) -> Result<ConditionReport> {
    let deg = delta.degree().ok_or(Error::ZeroInput)?;
    let degree_even = deg % 2 == 0;
    let n = deg / 2;
    let delta_one = delta.eval_int(&BigInt::one());
    let delta_minus_one = delta.eval_int(&-BigInt::one());
    let expected_one = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let square_root_witness = exact_sqrt(&delta_minus_one);
    Ok(ConditionReport {
        degree_even,
        cond_reciprocal: degree_even && is_palindrome(delta),
        cond_at_one: degree_even && delta_one == expected_one,
        cond_at_minus_one: square_root_witness.is_some(),
        n,
        delta_one,
        delta_minus_one,
        square_root_witness,
    })
}

fn sign_pow(n: usize) -> BigInt {
    if n % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `P(X) = (-1)^n Σ c_k (X-1)^k X^{2n-k}` for `Δ = Σ c_k X^k` of degree 2n.
pub fn delta_to_p(delta: &IntPoly) -> Result<IntPoly> {
    let deg = delta.degree().ok_or(Error::ZeroInput)?;
    if deg % 2 == 1 {
        return Err(Error::OddDegree(deg));
    }
    let x_minus_one = IntPoly::from_i64s(&[-1, 1]);
    let mut acc = IntPoly::zero();
    let mut power = IntPoly::one();
    for (k, c) in delta.coeffs().iter().enumerate() {
        if !c.is_zero() {
            let term = &power * &IntPoly::monomial(c.clone(), deg - k);
            acc = &acc + &term;
        }
        power = &power * &x_minus_one;
    }
    Ok(acc.scale(&sign_pow(deg / 2)))
}

/// Inverse of [`delta_to_p`]: `Δ(X) = (-1)^n Σ p_k X^k (X-1)^{2n-k}`.
pub fn p_to_delta(p: &IntPoly) -> Result<IntPoly> {
    let deg = p.degree().ok_or(Error::ZeroInput)?;
    if !symmetric_check(p) {
        return Err(Error::NotSymmetric);
    }
    if p.coeff(0).is_zero() {
        return Err(Error::VanishingConstant);
    }
    let x_minus_one = IntPoly::from_i64s(&[-1, 1]);
    // powers[j] = (X - 1)^j
    let mut powers = Vec::with_capacity(deg + 1);
    powers.push(IntPoly::one());
    for j in 1..=deg {
        powers.push(&powers[j - 1] * &x_minus_one);
    }
    let mut acc = IntPoly::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            acc = &acc + &(&IntPoly::monomial(c.clone(), k) * &powers[deg - k]);
        }
    }
    Ok(acc.scale(&sign_pow(deg / 2)))
}

/// `true` iff `f(1 - X) = f(X)` coefficientwise.
pub fn symmetric_check(f: &IntPoly) -> bool {
    f.reflect() == *f
}

/// Q with `P(X) = Q(X^2 - X)`, by base-(X^2 - X) expansion.
pub fn v_polynomial(p: &IntPoly) -> Result<IntPoly> {
    if !symmetric_check(p) {
        return Err(Error::NotSymmetric);
    }
    let base = IntPoly::from_i64s(&[0, -1, 1]);
    let mut digits = Vec::new();
    let mut rest = p.clone();
    while !rest.is_zero() {
        let (q, r) = rest.divrem_monic(&base);
        if r.degree().unwrap_or(0) > 0 {
            return Err(Error::NotSymmetric);
        }
        digits.push(r.coeff(0));
        rest = q;
    }
    let q = IntPoly::new(digits);
    debug_assert_eq!(q.compose(&base), *p);
    if q.compose(&base) != *p {
        return Err(Error::NotSymmetric);
    }
    Ok(q)
}

/// D of degree n with `Δ(X) = X^n D(X + 1/X)` for reciprocal Δ of degree 2n.
pub fn trace_polynomial(delta: &IntPoly) -> Result<IntPoly> {
    let deg = delta.degree().ok_or(Error::ZeroInput)?;
    if deg % 2 == 1 {
        return Err(Error::OddDegree(deg));
    }
    if !is_palindrome(delta) {
        return Err(Error::NotReciprocal);
    }
    let n = deg / 2;
    // X^j + X^-j = T_j(Y): T_0 = 2, T_1 = Y, T_{j+1} = Y T_j - T_{j-1}
    let y = IntPoly::x();
    let mut t_prev = IntPoly::from_i64s(&[2]);
    let mut t_cur = y.clone();
    let mut d = IntPoly::constant(delta.coeff(n));
    for j in 1..=n {
        if j > 1 {
            let next = &(&y * &t_cur) - &t_prev;
            t_prev = std::mem::replace(&mut t_cur, next);
        }
        d = &d + &t_cur.scale(&delta.coeff(n + j));
    }
    Ok(d)
}
