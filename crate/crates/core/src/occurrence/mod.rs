//! Where digit blocks occur: scanners, predicted closed forms, tridents,
//! codes, permutations and the prefix-block classifier.

pub mod conjecture;
pub mod negative;
pub mod prefix;
pub mod report;
pub mod scan;
pub mod suffix;

pub use conjecture::{
    classify_prefix, conjecture_scan, is_lucas, trident_position, ClassifiedSequence,
    ConjectureEntry, ScanStructure,
};
pub use negative::{
    code, gamma_border_check, gamma_recursive, pi_essential, pi_permutation, rotation_permutation,
    trident_splitting_holds, tridents, verify_all_gamma, verify_pi_arithmetic, Convention,
    PiPermutation, RotationPermutation, Trident, XiGrouping,
};
pub use prefix::{
    check_prefix_tree, predict_prefix_small, prefix_report, prefix_table, prefix_zero_as_printed,
};
pub use report::{compare, BlockKind, ClosedForm, OccurrenceReport, Verdict};
pub use scan::{scan_central, scan_prefix, scan_suffix};
pub use suffix::{
    check_suffix_tree, coupling_check, is_special_suffix, one_tree, predict_suffix, r0_candidates,
    special_family_reports, suffix_difference_check, suffix_law, suffix_letters, suffix_report,
    zero_tree, CouplingCheck, SuffixLaw, TreeNodeCheck,
};
