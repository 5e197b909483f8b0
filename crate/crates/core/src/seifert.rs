//! Seifert forms A and Seifert pairs (S, a).
//!
//! Bilinear forms evaluate as `A(x, y) = xᵀ·A·y`. With that convention
//! `A(x, y) = S(ax, y)` reads `A = aᵀ·S`, so `a = S⁻¹·Aᵀ`, and the pair
//! relation `S(ax, y) = S(x, (1 - a)y)` reads `aᵀ·S + S·a = S`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{e8_gram, signature_exact, signature_rational, IntMatrix};
use crate::poly::{delta_to_p, v_polynomial, IntPoly};
use crate::realroots::{irr_r_factors, IrrRFactor};

/// Outcome of a validity check, with the failed conditions spelled out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Validation {
    pub valid: bool,
    pub diagnostics: Vec<String>,
}

impl Validation {
    fn from_diagnostics(diagnostics: Vec<String>) -> Self {
        Validation {
            valid: diagnostics.is_empty(),
            diagnostics,
        }
    }
}

/// A Seifert pair: even unimodular symmetric `s` with an injective `a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertPair {
    pub s: IntMatrix,
    pub a: IntMatrix,
}

/// `A + Aᵀ` must have determinant ±1.
pub fn validate_form(a: &IntMatrix) -> Validation {
    let mut diag = Vec::new();
    if !a.is_square() {
        diag.push(format!("matrix is {}x{}, not square", a.nrows(), a.ncols()));
        return Validation::from_diagnostics(diag);
    }
    if a.nrows() % 2 == 1 {
        diag.push(format!("rank {} is odd", a.nrows()));
    }
    let s = a.add(&a.transpose()).expect("same shape");
    let d = s.det().expect("square");
    if d != BigInt::one() && d != -BigInt::one() {
        diag.push(format!("det(A + Aᵀ) = {d}, not ±1"));
    }
    Validation::from_diagnostics(diag)
}

/// Checks evenness and unimodularity of `s`, injectivity of `a` and the
/// relation `S(ax, y) = S(x, (1 - a)y)`.
pub fn validate_pair(s: &IntMatrix, a: &IntMatrix) -> Validation {
    let mut diag = Vec::new();
    if !s.is_square() || !a.is_square() {
        diag.push("matrices must be square".to_string());
        return Validation::from_diagnostics(diag);
    }
    if s.nrows() != a.nrows() {
        diag.push(format!("S is {0}x{0} but a is {1}x{1}", s.nrows(), a.nrows()));
        return Validation::from_diagnostics(diag);
    }
    if !s.is_symmetric() {
        diag.push("S is not symmetric".to_string());
    }
    let two = BigInt::from(2);
    if let Some(i) = (0..s.nrows()).find(|&i| !(s.get(i, i) % &two).is_zero()) {
        diag.push(format!("S is not even: S[{i}][{i}] = {}", s.get(i, i)));
    }
    let ds = s.det().expect("square");
    if ds != BigInt::one() && ds != -BigInt::one() {
        diag.push(format!("det S = {ds}, not ±1"));
    }
    if a.det().expect("square").is_zero() {
        diag.push("a is not injective (det a = 0)".to_string());
    }
    let lhs = a.transpose().mul(s).and_then(|m| m.add(&s.mul(a)?));
    if lhs.as_ref() != Ok(s) {
        diag.push("relation S(ax, y) = S(x, (1 - a)y) fails".to_string());
    }
    Validation::from_diagnostics(diag)
}

fn require(v: Validation, err: fn(String) -> Error) -> Result<()> {
    if v.valid {
        Ok(())
    } else {
        Err(err(v.diagnostics.join("; ")))
    }
}

/// The pair `(A + Aᵀ, a)` with `A(x, y) = S(ax, y)`.
pub fn form_to_pair(a: &IntMatrix) -> Result<SeifertPair> {
    require(validate_form(a), Error::InvalidForm)?;
    if a.det()?.is_zero() {
        return Err(Error::DegenerateForm);
    }
    let s = a.add(&a.transpose())?;
    let comp = s.unimodular_inverse()?.mul(&a.transpose())?;
    Ok(SeifertPair { s, a: comp })
}

/// `A(x, y) = S(ax, y)`, i.e. `A = aᵀ·S`.
pub fn pair_to_form(s: &IntMatrix, a: &IntMatrix) -> Result<IntMatrix> {
    require(validate_pair(s, a), Error::InvalidPair)?;
    a.transpose().mul(s)
}

/// Newton interpolation through `(0, v_0), …, (n, v_n)`; the values must come
/// from an integer polynomial of degree ≤ n.
fn interpolate(values: &[BigInt]) -> IntPoly {
    let n = values.len();
    let mut dd: Vec<BigRational> = values.iter().cloned().map(BigRational::from_integer).collect();
    for k in 1..n {
        for i in (k..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / BigRational::from_integer(BigInt::from(k));
        }
    }
    // expand Σ dd[k]·Π_{j<k} (X - j)
    let mut out = vec![BigRational::zero(); n];
    let mut basis = vec![BigRational::one()];
    for (k, c) in dd.iter().enumerate() {
        for (i, b) in basis.iter().enumerate() {
            out[i] += c * b;
        }
        let mut next = vec![BigRational::zero(); basis.len() + 1];
        for (i, b) in basis.iter().enumerate() {
            next[i + 1] += b;
            next[i] -= b * BigRational::from_integer(BigInt::from(k));
        }
        basis = next;
    }
    IntPoly::new(
        out.into_iter()
            .map(|c| {
                debug_assert!(c.is_integer());
                c.to_integer()
            })
            .collect(),
    )
}

/// Δ_A(X) = det(X·A + Aᵀ).
pub fn alexander_of_form(a: &IntMatrix) -> Result<IntPoly> {
    if !a.is_square() {
        return Err(Error::NotSquare);
    }
    let at = a.transpose();
    let n = a.nrows();
    let values: Vec<BigInt> = (0..=n)
        .map(|x| {
            let m = a.scale(&BigInt::from(x)).add(&at)?;
            m.det()
        })
        .collect::<Result<_>>()?;
    Ok(interpolate(&values))
}

/// Characteristic polynomial P_a of the companion.
pub fn charpoly_of_pair(s: &IntMatrix, a: &IntMatrix) -> Result<IntPoly> {
    require(validate_pair(s, a), Error::InvalidPair)?;
    a.charpoly()
}

/// Milnor signatures of a concrete pair, one per element of Irr_R(P_a).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MilnorAssignmentComputed {
    pub factors: Vec<IrrRFactor>,
    /// Signature of S restricted to Ker f(a), in {−2, 0, 2}.
    pub values: Vec<i64>,
    pub kernel_dims: Vec<usize>,
    pub total: i64,
    /// Total signature of S, computed independently.
    pub signature: i64,
    /// Some restriction has signature 0, i.e. is not definite.
    pub zero_value: bool,
}

/// Signature of the form `S((b - c)x, y)`, nondegenerate unless c is an
/// eigenvalue of b.
fn shifted_signature(sb: &IntMatrix, s: &IntMatrix, c: &BigRational) -> Result<i64> {
    let sb = sb.to_rational();
    let s = s.to_rational();
    let m: Vec<Vec<BigRational>> = sb
        .iter()
        .zip(&s)
        .map(|(r1, r2)| r1.iter().zip(r2).map(|(x, y)| x - c * y).collect())
        .collect();
    signature_rational(m)
}

/// Milnor signatures of (S, a) by exact arithmetic.
///
/// `b = a² - a` is S-self-adjoint and Ker f(a) = Ker(b - λ) for
/// f = X² - X - λ. The form `S((b - c)x, y)` has signature
/// `Σ sign(λ - c)·σ_λ` over the real eigenvalues λ of b, where σ_λ is the
/// signature of S on Ker(b - λ); complex eigenvalue pairs contribute 0.
/// Evaluating at the two rational ends of an isolating interval of λ thus
/// gives `2·σ_λ` as a difference of two exact signatures.
pub fn milnor_signatures(s: &IntMatrix, a: &IntMatrix) -> Result<MilnorAssignmentComputed> {
    require(validate_pair(s, a), Error::InvalidPair)?;
    let p = a.charpoly()?;
    if !p.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let b = a.eval_poly(&IntPoly::from_i64s(&[0, -1, 1]))?;
    // charpoly(b) = Q², so each eigenvalue of b has a 2-dimensional eigenspace
    let q = v_polynomial(&p)?;
    let cb = b.charpoly()?;
    if cb != &q * &q {
        return Err(Error::Milnor(format!(
            "charpoly of a² - a is {cb}, expected the square of {q}"
        )));
    }
    let sb = s.mul(&b)?;
    let factors = irr_r_factors(&p)?;
    let mut values = Vec::with_capacity(factors.len());
    for f in &factors {
        let below = shifted_signature(&sb, s, &f.v_root_interval.lo)?;
        let above = shifted_signature(&sb, s, &f.v_root_interval.hi)?;
        let diff = below - above;
        if diff % 2 != 0 || !(-4..=4).contains(&diff) {
            return Err(Error::Milnor(format!(
                "signature jump {diff} across {} is not in {{-4, 0, 4}}",
                f.v_root_interval
            )));
        }
        values.push(diff / 2);
    }
    let total: i64 = values.iter().sum();
    let signature = signature_exact(s)?;
    if total != signature {
        return Err(Error::Milnor(format!(
            "Milnor signatures sum to {total} but S has signature {signature}"
        )));
    }
    Ok(MilnorAssignmentComputed {
        kernel_dims: vec![2; factors.len()],
        zero_value: values.contains(&0),
        factors,
        values,
        total,
        signature,
    })
}

/// The isometry t of a unimodular Seifert form, `A(tx, y) = -A(y, x)`.
pub fn unimodular_t(a: &IntMatrix) -> Result<IntMatrix> {
    require(validate_form(a), Error::InvalidForm)?;
    let d = a.det()?;
    if d != BigInt::one() && d != -BigInt::one() {
        return Err(Error::NotUnimodular(d.to_string()));
    }
    // tᵀ·A = -Aᵀ
    let tt = a.transpose().neg().mul(&a.unimodular_inverse()?)?;
    let t = tt.transpose();
    let s = a.add(&a.transpose())?;
    debug_assert_eq!(t.transpose().mul(&s)?.mul(&t)?, s);
    Ok(t)
}

/// `gᵀ·A·g`, the form in the basis given by the columns of g.
pub fn base_change_form(a: &IntMatrix, g: &IntMatrix) -> Result<IntMatrix> {
    g.transpose().mul(a)?.mul(g)
}

/// The pair `(gᵀ·S·g, g⁻¹·a·g)` for a unimodular g.
pub fn base_change_pair(pair: &SeifertPair, g: &IntMatrix) -> Result<SeifertPair> {
    Ok(SeifertPair {
        s: base_change_form(&pair.s, g)?,
        a: g.unimodular_inverse()?.mul(&pair.a)?.mul(g)?,
    })
}

/// Identity plus the strict upper triangle of the E8 Gram matrix; its
/// symmetrization is E8.
pub fn e8_half() -> IntMatrix {
    let g = e8_gram();
    let mut a = IntMatrix::identity(8);
    for i in 0..8 {
        for j in i + 1..8 {
            a.set(i, j, g.get(i, j).clone());
        }
    }
    a
}

/// Consistency of a pair with the transform from its form: P_a equals the
/// companion of Δ_A.
pub fn charpoly_matches_alexander(pair: &SeifertPair) -> Result<bool> {
    let form = pair_to_form(&pair.s, &pair.a)?;
    let p = charpoly_of_pair(&pair.s, &pair.a)?;
    Ok(delta_to_p(&alexander_of_form(&form)?)? == p)
}
