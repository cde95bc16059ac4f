//! Exact base-phi and Zeckendorf numeration.

pub mod arith;
pub mod beatty;
pub mod error;
pub mod numeration;
pub mod occurrence;
pub mod structure;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
pub use numeration::{DigitWord, PhiExpansion};
pub use occurrence::{ClosedForm, OccurrenceReport, Verdict};
pub use table::{CentralPattern, ExpansionTable};
pub use verify::{run_check, CheckReport, VerifyConfig, CHECK_IDS};

/// Arbitrary-precision natural numbers and offsets.
pub type Big = num_bigint::BigInt;
/// `a + b sqrt 5` over arbitrary precision.
pub type BigQuadInt = arith::QuadInt<Big>;
/// Generalized Beatty parameters over arbitrary precision.
pub type BigGbs = beatty::GbsParams<Big>;
/// Generalized Beatty parameters over machine integers.
pub type Gbs = beatty::GbsParams<i64>;
