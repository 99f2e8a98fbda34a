//! Independent checks of algebraic identities: exact pointwise membership
//! tests and the three functional representations, evaluated at seeded
//! random rational points in general position.

pub mod indicator;
pub mod laplace;
pub mod point;
pub mod verify;

pub use point::{sample_generic_point, Genericity, GenericityPolicy, RationalPoint};
pub use verify::{eval_side, verify_identity, Counterexample, Side, VerificationReport};

use crate::error::{Error, Result};

/// Which independent evaluation backs a comparison: signed indicator sums on
/// the zero-sum hyperplane, or one of the three functional representations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleKind {
    Indicator,
    P,
    HatP1,
    P1,
}

impl OracleKind {
    pub const ALL: [OracleKind; 4] = [
        OracleKind::Indicator,
        OracleKind::P,
        OracleKind::HatP1,
        OracleKind::P1,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            OracleKind::Indicator => "indicator",
            OracleKind::P => "P",
            OracleKind::HatP1 => "hatP1",
            OracleKind::P1 => "P1",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "indicator" => Ok(OracleKind::Indicator),
            "P" => Ok(OracleKind::P),
            "hatP1" => Ok(OracleKind::HatP1),
            "P1" => Ok(OracleKind::P1),
            other => Err(Error::domain(format!(
                "unknown oracle '{other}' (expected indicator, P, hatP1 or P1)"
            ))),
        }
    }

    /// The kind of general position the oracle's points must be in.
    pub fn genericity(&self) -> Genericity {
        match self {
            OracleKind::Indicator => Genericity::Additive,
            OracleKind::P => Genericity::Multiplicative,
            OracleKind::HatP1 | OracleKind::P1 => Genericity::FreeDistinct,
        }
    }
}
