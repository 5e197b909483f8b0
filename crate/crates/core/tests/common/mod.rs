#![allow(dead_code)]

use knotsig::matrix::IntMatrix;
use knotsig::IntPoly;
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn poly(s: &str) -> IntPoly {
    s.parse().expect("fixture parses")
}

pub fn delta1() -> IntPoly {
    poly("x^4 - x^2 + 1")
}

pub fn delta2() -> IntPoly {
    poly("3*x^4 - 2*x^3 - x^2 - 2*x + 3")
}

pub fn f1() -> IntPoly {
    poly("x^4 - 2*x^3 + 5*x^2 - 4*x + 1")
}

pub fn f2() -> IntPoly {
    poly("x^4 - 2*x^3 + 11*x^2 - 10*x + 3")
}

pub fn g1() -> IntPoly {
    poly("x^6 - 3*x^5 - x^4 + 5*x^3 - x^2 - 3*x + 1")
}

pub fn g2() -> IntPoly {
    poly("x^4 - x^2 + 1")
}

/// Δ_a = X⁶ − aX⁵ − X⁴ + (2a−1)X³ − X² − aX + 1.
pub fn delta_a(a: i64) -> IntPoly {
    IntPoly::from_i64s(&[1, -a, -1, 2 * a - 1, -1, -a, 1])
}

pub fn hyperbolic_form() -> IntMatrix {
    IntMatrix::from_i64(&[&[0, 2], &[-1, 0]])
}

/// Alexander polynomials of the corpus that satisfy every standing
/// assumption.
pub fn corpus() -> Vec<IntPoly> {
    let mut out = vec![delta1(), delta2(), &delta1() * &delta2(), g1(), &g1() * &g2()];
    for a in 0..=5 {
        out.push(delta_a(a));
    }
    out.push(&delta_a(0) * &delta_a(2));
    out
}

/// Random unimodular matrix: a product of elementary row operations with
/// multipliers in [−2, 2] and a few sign flips.
pub fn random_unimodular(n: usize, rng: &mut ChaCha8Rng) -> IntMatrix {
    let mut g = IntMatrix::identity(n);
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            continue;
        }
        let c = BigInt::from(rng.gen_range(-2i64..=2));
        for k in 0..n {
            let v = g.get(i, k) + &c * g.get(j, k);
            g.set(i, k, v);
        }
    }
    if rng.gen_bool(0.5) {
        let i = rng.gen_range(0..n);
        for k in 0..n {
            let v = -g.get(i, k);
            g.set(i, k, v);
        }
    }
    g
}

/// Random palindromic polynomial of degree 2n with coefficients in [−b, b]
/// and nonzero leading coefficient.
pub fn random_reciprocal(n: usize, b: i64, rng: &mut ChaCha8Rng) -> IntPoly {
    let mut half: Vec<i64> = (0..=n).map(|_| rng.gen_range(-b..=b)).collect();
    if half[0] == 0 {
        half[0] = if rng.gen_bool(0.5) { 1 } else { -1 };
    }
    let mut c = half.clone();
    c.extend(half[..n].iter().rev());
    IntPoly::from_i64s(&c)
}

pub fn random_poly(deg: usize, b: i64, rng: &mut ChaCha8Rng) -> IntPoly {
    let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-b..=b)).collect();
    if c[deg] == 0 {
        c[deg] = 1;
    }
    IntPoly::from_i64s(&c)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
