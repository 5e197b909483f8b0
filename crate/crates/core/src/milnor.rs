//! Milnor signature assignments: maps Irr_R(P) → {−2, 2}, and the subsets
//! Mil_s summing to a prescribed signature s.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::realroots::irr_r_factors;

/// Enumeration stops above this ρ (2^(ρ/2) candidates).
pub const MAX_RHO: usize = 64;

/// One τ, indexed by the sorted order of the v-root isolating intervals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MilnorAssignment {
    pub values: Vec<i8>,
}

impl MilnorAssignment {
    pub fn sum(&self) -> i64 {
        self.values.iter().map(|v| *v as i64).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MilnorFamily {
    pub rho: usize,
    pub s: i64,
    pub assignments: Vec<MilnorAssignment>,
}

/// Mil_s is nonempty iff |s| ≤ ρ and s ≡ ρ (mod 4).
pub fn mil_nonempty(rho: usize, s: i64) -> bool {
    let rho = rho as i64;
    s.abs() <= rho && (s - rho).rem_euclid(4) == 0
}

/// |Mil_s| for k = ρ/2 factors: C(k, (s + 2k)/4) when 4 | s + 2k.
pub fn mil_count(rho: usize, s: i64) -> BigInt {
    let k = (rho / 2) as i64;
    let num = s + 2 * k;
    if rho % 2 == 1 || num < 0 || num % 4 != 0 || num / 4 > k {
        return BigInt::from(0);
    }
    let plus = num / 4;
    let mut c = BigInt::from(1);
    for i in 0..plus {
        c = c * BigInt::from(k - i) / BigInt::from(i + 1);
    }
    c
}

/// All ±2 assignments on `k` factors summing to `s`, in lexicographic order
/// with −2 before +2.
pub fn assignments_for(k: usize, s: i64) -> Result<Vec<MilnorAssignment>> {
    if 2 * k > MAX_RHO {
        return Err(Error::RhoTooLarge(2 * k));
    }
    let num = s + 2 * k as i64;
    if num < 0 || num % 4 != 0 || num / 4 > k as i64 {
        return Ok(Vec::new());
    }
    let plus = (num / 4) as usize;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fill(k, plus, &mut cur, &mut out);
    Ok(out)
}

fn fill(k: usize, plus: usize, cur: &mut Vec<i8>, out: &mut Vec<MilnorAssignment>) {
    let left = k - cur.len();
    if left == 0 {
        out.push(MilnorAssignment { values: cur.clone() });
        return;
    }
    let used = cur.iter().filter(|v| **v > 0).count();
    let need = plus - used;
    if need < left {
        cur.push(-2);
        fill(k, plus, cur, out);
        cur.pop();
    }
    if need > 0 {
        cur.push(2);
        fill(k, plus, cur, out);
        cur.pop();
    }
}

/// Mil_s(P) over the isolated Irr_R factors of P.
pub fn mil_enum(p: &IntPoly, s: i64) -> Result<MilnorFamily> {
    let k = irr_r_factors(p)?.len();
    Ok(MilnorFamily {
        rho: 2 * k,
        s,
        assignments: assignments_for(k, s)?,
    })
}
