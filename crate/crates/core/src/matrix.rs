//! Small dense integer matrices with exact determinant, rank, characteristic
//! polynomial and signature.
//!
//! Bilinear forms use the row-vector convention `B(x, y) = xᵀ B y`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    /// Builds a matrix from rows; all rows must share one length.
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        if let Some(first) = rows.first() {
            if rows.iter().any(|r| r.len() != first.len()) {
                return Err(Error::DimensionMismatch);
            }
        }
        Ok(IntMatrix { rows })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn zeros(n: usize, m: usize) -> Self {
        IntMatrix {
            rows: vec![vec![BigInt::zero(); m]; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = BigInt::one();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.rows[i][j] = v;
    }

    pub fn transpose(&self) -> Self {
        let (n, m) = (self.nrows(), self.ncols());
        IntMatrix {
            rows: (0..m)
                .map(|j| (0..n).map(|i| self.rows[i][j].clone()).collect())
                .collect(),
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.ncols() != other.nrows() {
            return Err(Error::DimensionMismatch);
        }
        let (n, k, m) = (self.nrows(), self.ncols(), other.ncols());
        let mut out = Self::zeros(n, m);
        for i in 0..n {
            for l in 0..k {
                let a = &self.rows[i][l];
                if a.is_zero() {
                    continue;
                }
                for j in 0..m {
                    out.rows[i][j] += a * &other.rows[l][j];
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &IntMatrix, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Result<Self> {
        if self.nrows() != other.nrows() || self.ncols() != other.ncols() {
            return Err(Error::DimensionMismatch);
        }
        Ok(IntMatrix {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(r, s)| r.iter().zip(s).map(|(a, b)| f(a, b)).collect())
                .collect(),
        })
    }

    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        IntMatrix {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|a| a * c).collect())
                .collect(),
        }
    }

    pub fn neg(&self) -> IntMatrix {
        self.scale(&-BigInt::one())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &IntMatrix) -> IntMatrix {
        let (n, m) = (self.nrows(), other.nrows());
        let mut out = Self::zeros(n + m, self.ncols() + other.ncols());
        for i in 0..n {
            for j in 0..self.ncols() {
                out.rows[i][j] = self.rows[i][j].clone();
            }
        }
        for i in 0..m {
            for j in 0..other.ncols() {
                out.rows[n + i][self.ncols() + j] = other.rows[i][j].clone();
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        Ok(bareiss_det(self.rows.clone()))
    }

    /// Rank over Q.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigRational>> = self.to_rational();
        let (n, cols) = (self.nrows(), self.ncols());
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..n).find(|&r| !m[r][c].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let inv = m[rank][c].recip();
            for r in 0..n {
                if r != rank && !m[r][c].is_zero() {
                    let f = &m[r][c] * &inv;
                    for k in c..cols {
                        let v = &f * &m[rank][k];
                        m[r][k] -= v;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Inverse of a matrix with determinant ±1.
    pub fn unimodular_inverse(&self) -> Result<IntMatrix> {
        let inv = self.rational_inverse()?;
        let mut rows = Vec::with_capacity(inv.len());
        for r in inv {
            let mut row = Vec::with_capacity(r.len());
            for v in r {
                if !v.is_integer() {
                    return Err(Error::NotUnimodular(self.det()?.to_string()));
                }
                row.push(v.to_integer());
            }
            rows.push(row);
        }
        Ok(IntMatrix { rows })
    }

    /// Inverse over Q by Gauss-Jordan elimination.
    pub fn rational_inverse(&self) -> Result<Vec<Vec<BigRational>>> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let n = self.nrows();
        let mut a = self.to_rational();
        let mut inv: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                    .collect()
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !a[r][c].is_zero()).ok_or(Error::Singular)?;
            a.swap(c, p);
            inv.swap(c, p);
            let pinv = a[c][c].recip();
            for k in 0..n {
                a[c][k] *= &pinv;
                inv[c][k] *= &pinv;
            }
            for r in 0..n {
                if r != c && !a[r][c].is_zero() {
                    let f = a[r][c].clone();
                    for k in 0..n {
                        let (va, vi) = (&f * &a[c][k], &f * &inv[c][k]);
                        a[r][k] -= va;
                        inv[r][k] -= vi;
                    }
                }
            }
        }
        Ok(inv)
    }

    /// Characteristic polynomial `det(X·I - M)` by Faddeev-LeVerrier.
    pub fn charpoly(&self) -> Result<IntPoly> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let n = self.nrows();
        // c[k] is the coefficient of X^k
        let mut c = vec![BigInt::zero(); n + 1];
        c[n] = BigInt::one();
        let mut mk = IntMatrix::zeros(n, n);
        for k in 1..=n {
            let mut next = self.mul(&mk)?;
            for i in 0..n {
                next.rows[i][i] += &c[n - k + 1];
            }
            mk = next;
            let am = self.mul(&mk)?;
            let tr: BigInt = (0..n).map(|i| am.rows[i][i].clone()).sum();
            c[n - k] = -(tr / BigInt::from(k));
        }
        Ok(IntPoly::new(c))
    }

    /// `f(M)` for a square matrix, by Horner's rule.
    pub fn eval_poly(&self, f: &IntPoly) -> Result<IntMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let n = self.nrows();
        let mut acc = IntMatrix::zeros(n, n);
        for c in f.coeffs().iter().rev() {
            acc = acc.mul(self)?;
            for i in 0..n {
                acc.rows[i][i] += c;
            }
        }
        Ok(acc)
    }

    pub fn to_rational(&self) -> Vec<Vec<BigRational>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|v| BigRational::from_integer(v.clone())).collect())
            .collect()
    }

    /// Entries as `f64`, for floating-point cross-checks.
    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        use num_traits::ToPrimitive;
        self.rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_f64().unwrap_or(f64::NAN)).collect())
            .collect()
    }
}

fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Determinant of a matrix of integers given as rows.
pub fn det_rows(rows: &[Vec<BigInt>]) -> BigInt {
    bareiss_det(rows.to_vec())
}

/// Signature of a nonsingular symmetric integer matrix, by congruence
/// diagonalization over Q.
///
/// When every remaining diagonal entry vanishes, the congruence
/// `e_i ↦ e_i + e_j` (with `M_ij ≠ 0`) makes the pivot `2 M_ij` nonzero.
pub fn signature_exact(m: &IntMatrix) -> Result<i64> {
    if !m.is_square() {
        return Err(Error::NotSquare);
    }
    if !m.is_symmetric() {
        return Err(Error::InvalidPair("matrix is not symmetric".into()));
    }
    signature_rational(m.to_rational())
}

/// Signature of a nonsingular symmetric rational matrix.
pub fn signature_rational(mut a: Vec<Vec<BigRational>>) -> Result<i64> {
    let n = a.len();
    let mut sig = 0i64;
    for i in 0..n {
        if a[i][i].is_zero() {
            if let Some(j) = (i + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(i, j);
                for row in a.iter_mut() {
                    row.swap(i, j);
                }
            } else if let Some(j) = (i + 1..n).find(|&j| !a[i][j].is_zero()) {
                // row_i += row_j, col_i += col_j
                for k in 0..n {
                    let v = a[j][k].clone();
                    a[i][k] += v;
                }
                for k in 0..n {
                    let v = a[k][j].clone();
                    a[k][i] += v;
                }
            } else {
                return Err(Error::Singular);
            }
        }
        let pivot = a[i][i].clone();
        sig += if pivot.is_positive() { 1 } else { -1 };
        for r in i + 1..n {
            if a[r][i].is_zero() {
                continue;
            }
            let f = &a[r][i] / &pivot;
            for k in i..n {
                let v = &f * &a[i][k];
                a[r][k] -= v;
            }
            // symmetric column update
            for k in i..n {
                let v = &f * &a[k][i];
                a[k][r] -= v;
            }
        }
    }
    Ok(sig)
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, v) in r.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix({self})")
    }
}

/// Parses row-major bracketed integers such as `[[0,2],[-1,0]]`.
impl FromStr for IntMatrix {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = cleaned
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("matrix must be bracketed: {s:?}")))?;
        if inner.is_empty() {
            return Ok(IntMatrix { rows: Vec::new() });
        }
        let body = inner
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("rows must be bracketed: {s:?}")))?;
        let rows = body
            .split("],[")
            .map(|row| {
                if row.is_empty() {
                    return Ok(Vec::new());
                }
                row.split(',')
                    .map(|t| {
                        t.parse::<BigInt>()
                            .map_err(|_| Error::Parse(format!("bad matrix entry {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        IntMatrix::new(rows).map_err(|_| Error::Parse("ragged matrix rows".into()))
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Gram matrix of the E8 root lattice (Cartan matrix, Bourbaki labelling).
pub fn e8_gram() -> IntMatrix {
    let edges = [(0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)];
    let mut m = IntMatrix::zeros(8, 8);
    for i in 0..8 {
        m.set(i, i, BigInt::from(2));
    }
    for (i, j) in edges {
        m.set(i, j, BigInt::from(-1));
        m.set(j, i, BigInt::from(-1));
    }
    m
}
