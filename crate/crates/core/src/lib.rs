//! Pell equations `x² − d·y² = N` by continued fractions and by the classical
//! descents, with a brute-force oracle to check both.
//!
//! Every solver is generic over [`PellInt`]; the aliases below fix the scalar to
//! [`num_bigint::BigInt`].

pub mod arith;
pub mod contfrac;
pub mod descent;
pub mod error;
pub mod identities;
pub mod lifts;
pub mod oracle;
pub mod report;
pub mod scalar;
pub mod solution;
pub mod tables;
pub mod verify;

pub use error::{PellError, Result};
pub use scalar::PellInt;

pub type Int = num_bigint::BigInt;
pub type Solution = solution::PellSolution<Int>;
pub type Expansion = contfrac::CfExpansion<Int>;
pub type Representation = arith::Representation<Int>;
pub type Certificate = descent::Certificate<Int>;
pub type Descent = descent::Descent<Int>;
pub type Report = report::MethodReport<Int>;
pub type Verdict = descent::CriteriaVerdict<Int>;
