//! Prime factorization of desk-scale integers: trial division up to 10^4,
//! then Pollard's rho with Brent's cycle detection.

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

const TRIAL_LIMIT: u32 = 10_000;

/// Total number of rho iterations allowed across one factorization.
pub const RHO_BUDGET: u64 = 1_000_000;

const MR_BASES: [u32; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];

/// Miller-Rabin with the first 20 prime bases; deterministic below 3.3·10^24.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for &p in &MR_BASES {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_one = n - 1u32;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'bases: for &a in &MR_BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Prime factorization of `|n|` as a sorted multiset.
///
/// `n = ±1` yields an empty list. The seed drives the rho starting points;
/// the result is the same for every seed.
pub fn integer_factor(n: &BigInt, seed: u64) -> Result<Vec<BigInt>> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut m = n.abs().to_biguint().expect("non-negative");
    let mut out: Vec<BigUint> = Vec::new();
    for p in 2..TRIAL_LIMIT {
        if BigUint::from(p) * BigUint::from(p) > m {
            break;
        }
        while (&m % p).is_zero() {
            out.push(BigUint::from(p));
            m /= p;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut budget = RHO_BUDGET;
    let mut stack = vec![m];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if m < BigUint::from(TRIAL_LIMIT) * BigUint::from(TRIAL_LIMIT) || is_probable_prime(&m) {
            // anything below 10^8 left after trial division is prime
            out.push(m);
            continue;
        }
        let d = pollard_brent(&m, &mut rng, &mut budget)
            .ok_or_else(|| Error::FactorBudgetExceeded(n.to_string()))?;
        let other = &m / &d;
        stack.push(d);
        stack.push(other);
    }
    out.sort();
    Ok(out.into_iter().map(BigInt::from).collect())
}

/// Distinct primes dividing `n`, ascending.
pub fn prime_support(n: &BigInt, seed: u64) -> Result<Vec<BigInt>> {
    let mut ps = integer_factor(n, seed)?;
    ps.dedup();
    Ok(ps)
}

/// One nontrivial divisor of the composite `n`, or `None` when the budget runs
/// out.
fn pollard_brent(n: &BigUint, rng: &mut ChaCha8Rng, budget: &mut u64) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    let one = BigUint::one();
    loop {
        let mut y = rng.gen_biguint_below(n);
        let c = rng.gen_biguint_range(&one, n);
        let m = 128u64;
        let mut g = one.clone();
        let mut r = 1u64;
        let mut q = one.clone();
        let mut x = y.clone();
        let mut ys = y.clone();
        let f = |v: &BigUint| (v * v + &c) % n;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let steps = m.min(r - k);
                for _ in 0..steps {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                *budget = budget.checked_sub(steps)?;
                g = q.gcd(n);
                k += steps;
            }
            r *= 2;
        }
        if g == *n {
            // backtrack one step at a time
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                *budget = budget.checked_sub(1)?;
                if !g.is_one() {
                    break;
                }
            }
        }
        if g != *n {
            return Some(g);
        }
        // degenerate cycle, retry with fresh parameters
    }
}

/// Small-prime helper used when a machine-word prime is required.
pub fn to_u64_prime(p: &BigInt) -> Option<u64> {
    p.to_u64().filter(|&v| v < (1u64 << 62))
}
