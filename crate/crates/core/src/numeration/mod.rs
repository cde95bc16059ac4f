//! Digit words, the Zeckendorf codec and base-phi expansions.

mod phi;
mod skip;
mod word;
mod zeck;

pub use phi::{
    beta_parts, gamma_minus, normalize, phi_add_one, phi_decode, phi_decode_paths, phi_encode,
    BetaParts, DecodePaths, PackedExpansion, PhiCounter, PhiExpansion, RawExpansion,
};
pub use skip::{
    skip_count, skip_count_definition, skip_count_proof, skip_divergences, skip_term,
    verify_zeckphi, SkipDivergence, ZeckPhiMismatch, ZeckPhiReport,
};
pub use word::DigitWord;
pub use zeck::{zeck_decode, zeck_encode};
