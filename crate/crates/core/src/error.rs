use thiserror::Error;

/// Failures raised by the algebraic routines.
///
/// Mathematical outcomes of an analysis (a signature that is not admissible,
/// an input outside the standing assumptions) are verdicts, not errors; the
/// variants here are reserved for violated preconditions, malformed input and
/// exhausted computation budgets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial has odd degree {0}; an even degree 2n is required")]
    OddDegree(usize),

    #[error("polynomial is not reciprocal: Δ(X) ≠ X^deg·Δ(1/X)")]
    NotReciprocal,

    #[error("polynomial is not symmetric: f(1 - X) ≠ f(X)")]
    NotSymmetric,

    #[error("polynomial is not square-free")]
    NotSquarefree,

    #[error("{0} is a root; the interval endpoint must not vanish")]
    EndpointRoot(String),

    #[error("invalid interval: lower end must be below upper end")]
    EmptyInterval,

    #[error("Δ({0}) = 0: roots at ±1 are excluded")]
    RootAtUnit(i32),

    #[error("P(0) = 0: no Alexander polynomial of full degree corresponds")]
    VanishingConstant,

    #[error("zero polynomial or zero value where a nonzero one is required")]
    ZeroInput,

    #[error("moduli differ: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("modulus {0} is not a prime below 2^62")]
    BadModulus(u64),

    #[error("{0} modular factors exceed the recombination cap of 16")]
    TooManyModularFactors(usize),

    #[error("factorization of {0} did not finish within the Pollard rho budget; candidate set incomplete")]
    FactorBudgetExceeded(String),

    #[error("the two factors must differ")]
    IdenticalFactors,

    #[error("factor set violates the standing assumptions: {0}")]
    Assumptions(String),

    #[error("matrix is not square")]
    NotSquare,

    #[error("matrix dimensions do not match")]
    DimensionMismatch,

    #[error("matrix is singular")]
    Singular,

    #[error("degenerate form, no injective companion (det A = 0)")]
    DegenerateForm,

    #[error("invalid Seifert form: {0}")]
    InvalidForm(String),

    #[error("invalid Seifert pair: {0}")]
    InvalidPair(String),

    #[error("form is not unimodular: det A = {0}")]
    NotUnimodular(String),

    #[error("Milnor signatures unavailable: {0}")]
    Milnor(String),

    #[error("signature assignment has {got} entries but Irr_R(P) has {expected} factors")]
    TauDomain { expected: usize, got: usize },

    #[error("signature assignment values must be ±2, got {0}")]
    TauValue(i64),

    #[error("ρ = {0} exceeds the enumeration cap of 64")]
    RhoTooLarge(usize),

    #[error("unknown format {0:?}")]
    UnknownFormat(String),
}

impl Error {
    /// True for failures caused by an exhausted computation budget rather than
    /// by the input itself.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::FactorBudgetExceeded(_) | Error::TooManyModularFactors(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
