//! End-to-end analysis of (Δ, m, s) or (Δ, m, τ) into a verdict.

mod report;

pub use report::{report_render, Format};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};
use crate::milnor::{assignments_for, mil_count, mil_nonempty, MilnorAssignment, MAX_RHO};
use crate::obstruction::{obstruction_group, ObstructionGroup, PiEntry};
use crate::poly::{alexander_check, delta_to_p, ConditionReport, IntPoly};
use crate::realroots::{rho_delta, rho_p};
use crate::zfactor::{standing_assumptions, SymmetricFactorSet};

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

/// Assignments listed in a report before truncation.
pub const LISTED_ASSIGNMENTS: usize = 64;

/// What the knot should realize: a total signature or a full Milnor
/// assignment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    Signature(i64),
    Tau(Vec<i64>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisRequest {
    pub delta: IntPoly,
    /// Knot dimension, m ≡ 3 (mod 4).
    pub m: u64,
    pub target: Target,
    pub seed: u64,
}

impl AnalysisRequest {
    pub fn signature(delta: IntPoly, m: u64, s: i64) -> Self {
        AnalysisRequest {
            delta,
            m,
            target: Target::Signature(s),
            seed: crate::DEFAULT_SEED,
        }
    }

    pub fn tau(delta: IntPoly, m: u64, tau: Vec<i64>) -> Self {
        AnalysisRequest {
            delta,
            m,
            target: Target::Tau(tau),
            seed: crate::DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Realizable,
    NotAdmissible,
    ObstructionUnknown,
    OutOfScope,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Realizable => "REALIZABLE",
            Verdict::NotAdmissible => "NOT_ADMISSIBLE",
            Verdict::ObstructionUnknown => "OBSTRUCTION_UNKNOWN",
            Verdict::OutOfScope => "OUT_OF_SCOPE",
        })
    }
}

/// State of the homomorphism ε_τ : G_P → Z/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EpsilonStatus {
    #[serde(rename = "trivially zero")]
    TriviallyZero,
    #[serde(rename = "requires external evaluation")]
    RequiresExternalEvaluation,
    #[serde(rename = "not applicable")]
    NotApplicable,
}

impl fmt::Display for EpsilonStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EpsilonStatus::TriviallyZero => "trivially zero",
            EpsilonStatus::RequiresExternalEvaluation => "requires external evaluation",
            EpsilonStatus::NotApplicable => "not applicable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MilSection {
    pub rho: usize,
    pub s: i64,
    /// |Mil_s|, as a decimal string.
    pub count: String,
    /// The assignment supplied by the caller, if any.
    pub tau: Option<MilnorAssignment>,
    pub assignments: Vec<MilnorAssignment>,
    pub truncated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Witnesses {
    /// A realizable assignment (first element of Mil_s) or the supplied τ.
    pub tau: Option<MilnorAssignment>,
    /// Failed conditions or assumptions, verbatim.
    pub reasons: Vec<String>,
    /// Which arithmetic regime applies.
    pub regime: String,
    /// Informational remarks, never affecting the verdict.
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub delta: IntPoly,
    pub m: u64,
    pub target: Target,
    pub conditions: ConditionReport,
    pub p: Option<IntPoly>,
    pub factors: Option<SymmetricFactorSet>,
    pub rho: Option<usize>,
    pub pi_table: Vec<PiEntry>,
    pub group: Option<ObstructionGroup>,
    pub mil: Option<MilSection>,
    pub verdict: Verdict,
    pub witnesses: Witnesses,
    pub epsilon_status: EpsilonStatus,
    pub tool_version: String,
    pub seed: u64,
}

fn check_m(m: u64) -> Result<()> {
    if m < 3 || m % 4 != 3 {
        return Err(Error::Parse(format!(
            "knot dimension m = {m} must satisfy m ≥ 3 and m ≡ 3 (mod 4)"
        )));
    }
    Ok(())
}

/// Signatures must be divisible by this for dimension m.
fn signature_modulus(m: u64) -> i64 {
    if m == 3 {
        16
    } else {
        8
    }
}

fn regime(m: u64) -> String {
    if m == 3 {
        "m = 3: signatures divisible by 16, realizable up to S-equivalence of the Seifert form".into()
    } else {
        format!("m = {m} ≥ 7: signatures divisible by 8")
    }
}

/// Runs the full decision sequence. Only malformed requests and exhausted
/// computation budgets are errors; everything else is a verdict.
pub fn analyze(req: &AnalysisRequest) -> Result<AnalysisReport> {
    check_m(req.m)?;
    if let Target::Tau(t) = &req.target {
        if let Some(v) = t.iter().find(|v| v.abs() != 2) {
            return Err(Error::TauValue(*v));
        }
    }
    let conditions = alexander_check(&req.delta)?;
    let mut report = AnalysisReport {
        schema_version: SCHEMA_VERSION,
        delta: req.delta.clone(),
        m: req.m,
        target: req.target.clone(),
        conditions: conditions.clone(),
        p: None,
        factors: None,
        rho: None,
        pi_table: Vec::new(),
        group: None,
        mil: None,
        verdict: Verdict::OutOfScope,
        witnesses: Witnesses {
            regime: regime(req.m),
            ..Witnesses::default()
        },
        epsilon_status: EpsilonStatus::NotApplicable,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        seed: req.seed,
    };

    // (i) conditions on Δ
    if !conditions.all_hold() {
        report.witnesses.reasons = conditions.violations();
        return Ok(report);
    }
    let p = delta_to_p(&req.delta)?;
    report.p = Some(p.clone());

    // (ii) standing assumptions on P
    let set = standing_assumptions(&p, req.seed)?;
    report.factors = Some(set.clone());
    if !set.squarefree || !set.all_symmetric {
        report.witnesses.reasons = set.violations();
        return Ok(report);
    }
    let rho = rho_p(&p)?;
    debug_assert_eq!(rho_delta(&req.delta), Ok(rho));
    report.rho = Some(rho);

    // (iii) admissibility
    let (s, tau) = match &req.target {
        Target::Signature(s) => (*s, None),
        Target::Tau(t) => {
            if t.len() != rho / 2 {
                return Err(Error::TauDomain {
                    expected: rho / 2,
                    got: t.len(),
                });
            }
            let tau = MilnorAssignment {
                values: t.iter().map(|v| *v as i8).collect(),
            };
            (tau.sum(), Some(tau))
        }
    };
    let modulus = signature_modulus(req.m);
    let mut reasons = Vec::new();
    if s % modulus != 0 {
        reasons.push(format!("s = {s} is not divisible by {modulus}"));
    }
    if s.unsigned_abs() as usize > rho {
        reasons.push(format!("|s| = {} exceeds ρ = {rho}", s.abs()));
    }
    if !mil_nonempty(rho, s) {
        reasons.push(format!(
            "Mil_s is empty: no assignment of ±2 to the {} factors of Irr_R(P) sums to {s}",
            rho / 2
        ));
    }
    let count = mil_count(rho, s);
    let listed = if tau.is_none() && count <= BigInt::from(LISTED_ASSIGNMENTS) && rho <= MAX_RHO {
        assignments_for(rho / 2, s)?
    } else if tau.is_none() && rho <= MAX_RHO && count > BigInt::from(0) {
        // first element only, built directly
        vec![first_assignment(rho / 2, s)]
    } else {
        Vec::new()
    };
    let truncated = BigInt::from(listed.len()) < count && tau.is_none();
    report.mil = Some(MilSection {
        rho,
        s,
        count: count.to_string(),
        tau: tau.clone(),
        assignments: listed.clone(),
        truncated,
    });
    if !reasons.is_empty() {
        report.verdict = Verdict::NotAdmissible;
        report.witnesses.reasons = reasons;
        return Ok(report);
    }

    // (iv)/(v) the obstruction group
    let (group, table) = obstruction_group(&set, req.seed)?;
    report.pi_table = table;
    report.witnesses.tau = tau.or_else(|| listed.first().cloned());
    if group.is_trivial() {
        report.verdict = Verdict::Realizable;
        report.epsilon_status = EpsilonStatus::TriviallyZero;
        if let Some(note) = indecomposability_note(&set, req.m, s)? {
            report.witnesses.notes.push(note);
        }
    } else {
        report.verdict = Verdict::ObstructionUnknown;
        report.epsilon_status = EpsilonStatus::RequiresExternalEvaluation;
        report.witnesses.reasons.push(format!(
            "G_P has rank {}; realizability depends on ε_τ, which is not evaluated",
            group.rank
        ));
    }
    report.group = Some(group);
    Ok(report)
}

/// Same as [`analyze`] with an explicit assignment τ.
pub fn analyze_tau(delta: &IntPoly, m: u64, tau: &[i64], seed: u64) -> Result<AnalysisReport> {
    analyze(&AnalysisRequest {
        delta: delta.clone(),
        m,
        target: Target::Tau(tau.to_vec()),
        seed,
    })
}

/// Lexicographically first element of Mil_s on `k` factors: −2s first.
fn first_assignment(k: usize, s: i64) -> MilnorAssignment {
    let plus = ((s + 2 * k as i64) / 4) as usize;
    let mut values = vec![-2i8; k - plus];
    values.extend(std::iter::repeat_n(2i8, plus));
    MilnorAssignment { values }
}

/// When Δ splits and no factor alone admits a nonzero signature, a knot
/// realizing s ≠ 0 cannot be a connected sum along that splitting.
fn indecomposability_note(set: &SymmetricFactorSet, m: u64, s: i64) -> Result<Option<String>> {
    if set.factors.len() < 2 || s == 0 {
        return Ok(None);
    }
    let modulus = signature_modulus(m) as usize;
    let mut rhos = Vec::new();
    for f in &set.factors {
        let r = rho_p(f)?;
        if r >= modulus {
            return Ok(None);
        }
        rhos.push(r);
    }
    Ok(Some(format!(
        "each irreducible factor has ρ < {modulus} (ρ = {rhos:?}), so a knot whose Alexander \
         polynomial is a single factor has signature 0; a knot realizing s = {s} is indecomposable"
    )))
}
