//! Exact-arithmetic toolkit for deciding which signatures occur for
//! high-dimensional knots (m ≡ 3 mod 4) with a given square-free Alexander
//! polynomial.
//!
//! The pipeline goes Δ → P → factors → ρ, the Π table and the obstruction
//! group G_P → admissible Milnor signature assignments → verdict. The
//! [`seifert`] module carries the matching linear algebra on Seifert forms and
//! Seifert pairs.

pub mod error;
pub mod intfactor;
pub mod matrix;
pub mod milnor;
pub mod modpoly;
pub mod obstruction;
pub mod pipeline;
pub mod poly;
pub mod realroots;
pub mod seifert;
pub mod zfactor;

pub use error::{Error, Result};
pub use poly::{IntPoly, RatPoly};

/// Default seed for every randomized subroutine.
pub const DEFAULT_SEED: u64 = 0;

/// Serde adapter writing big integers as decimal strings.
pub(crate) mod bigint_str {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
            match v {
                Some(v) => s.collect_str(v),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
            Option::<String>::deserialize(d)?
                .map(|s| s.parse().map_err(serde::de::Error::custom))
                .transpose()
        }
    }
}
