use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPoly;

fn pow(b: &BigInt, e: usize) -> BigInt {
    num_traits::pow(b.clone(), e)
}

/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let da = a.degree().expect("nonzero");
    let db = b.degree().expect("nonzero");
    let lc = b.leading();
    let mut rem: Vec<BigInt> = a.coeffs().to_vec();
    let mut steps = 0;
    for k in (0..=da - db).rev() {
        let top = rem[k + db].clone();
        for r in rem.iter_mut() {
            *r *= &lc;
        }
        for (j, d) in b.coeffs().iter().enumerate() {
            rem[k + j] -= &top * d;
        }
        steps += 1;
    }
    debug_assert_eq!(steps, da - db + 1);
    rem.truncate(db);
    IntPoly::new(rem)
}

/// Resultant over Z by the subresultant polynomial remainder sequence.
///
/// Uses the convention `Res(f, g) = lc(f)^deg g · lc(g)^deg f · Π (α_i - β_j)`,
/// so `Res(x - 1, x + 1) = 2`. Zero inputs give 0.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return BigInt::zero();
    };
    let (mut a, mut b, mut sign) = if df < dg {
        (g.clone(), f.clone(), df % 2 == 1 && dg % 2 == 1)
    } else {
        (f.clone(), g.clone(), false)
    };
    let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
    if db == 0 {
        let r = pow(&b.leading(), da);
        return if sign { -r } else { r };
    }
    let ca = a.content();
    let cb = b.content();
    a = a.div_scalar_exact(&ca).unwrap();
    b = b.div_scalar_exact(&cb).unwrap();
    let t = pow(&ca, db) * pow(&cb, da);
    let mut g_ = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign = !sign;
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        if r.is_zero() {
            return BigInt::zero();
        }
        let divisor = &g_ * pow(&h, delta);
        b = r.div_scalar_exact(&divisor).expect("subresultant division is exact");
        g_ = a.leading();
        h = if delta == 0 {
            h
        } else {
            pow(&g_, delta) / pow(&h, delta - 1)
        };
        let db = b.degree().unwrap();
        if db == 0 {
            let da = a.degree().unwrap();
            let num = pow(&b.leading(), da);
            let hh = num / pow(&h, da - 1);
            let res = t * hh;
            return if sign { -res } else { res };
        }
    }
}

/// Sylvester matrix of `f` (degree m) and `g` (degree n), size (m+n)².
///
/// Rows are shifted coefficient vectors in descending degree order, so its
/// determinant equals [`resultant`].
pub fn sylvester_matrix(f: &IntPoly, g: &IntPoly) -> Vec<Vec<BigInt>> {
    let m = f.degree().unwrap_or(0);
    let n = g.degree().unwrap_or(0);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    let desc = |p: &IntPoly| -> Vec<BigInt> { p.coeffs().iter().rev().cloned().collect() };
    let (fd, gd) = (desc(f), desc(g));
    for i in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in fd.iter().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in gd.iter().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}
