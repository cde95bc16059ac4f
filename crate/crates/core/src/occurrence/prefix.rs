//! Occurrence sequences `R_{.v}` of start blocks of `beta-`.

use crate::beatty::GbsParams;
use crate::error::Result;
use crate::numeration::DigitWord;
use crate::table::ExpansionTable;

use super::report::{BlockKind, ClosedForm, OccurrenceReport};
use super::scan::scan_prefix;

fn v(p: i64, q: i64, r: i64) -> GbsParams<i64> {
    GbsParams::new(p, q, r)
}

fn v0(p: i64, q: i64, r: i64) -> GbsParams<i64> {
    GbsParams::new0(p, q, r)
}

/// The closed forms for all start blocks of length at most 3. `.0` uses
/// `V(1,2,[-1,0,1])`; see [`prefix_zero_as_printed`].
pub fn prefix_table() -> Vec<(&'static str, ClosedForm)> {
    use ClosedForm as F;
    vec![
        ("0", F::trident(v(1, 2, -1))),
        ("1", F::gbs(v(3, 1, 1))),
        ("00", F::trident(v(3, 1, 2))),
        ("01", F::trident(v0(4, 3, 2))),
        ("10", F::gbs(v(3, 1, 1))),
        ("000", F::trident(v(4, 3, -1))),
        ("001", F::trident(v(7, 4, 2))),
        ("010", F::trident(v0(4, 3, 2))),
        ("100", F::gbs(v(4, 3, -2))),
        ("101", F::gbs(v(7, 4, 1))),
    ]
}

/// The other printed form of `R_{.0}`, `V(2,1,[-1,0,1])`.
pub fn prefix_zero_as_printed() -> ClosedForm {
    ClosedForm::trident(v(2, 1, -1))
}

/// Closed form of `R_{.v}` for `|v| <= 3`; `None` beyond the table.
pub fn predict_prefix_small(w: &DigitWord) -> Option<ClosedForm> {
    let key = w.to_string();
    prefix_table()
        .into_iter()
        .find(|(k, _)| *k == key)
        .map(|(_, f)| f)
}

pub fn prefix_report(
    w: &DigitWord,
    horizon: u64,
    table: &ExpansionTable,
) -> Result<OccurrenceReport> {
    let scanned = scan_prefix(w, horizon, table)?;
    OccurrenceReport::new(
        format!(".{w}"),
        BlockKind::Prefix,
        horizon,
        scanned,
        predict_prefix_small(w),
    )
}

/// Every labeled word node of the tree of start blocks. The root `.`
/// (all `N >= 2`) carries no closed form and is left out.
pub fn check_prefix_tree(horizon: u64, table: &ExpansionTable) -> Result<Vec<OccurrenceReport>> {
    prefix_table()
        .into_iter()
        .map(|(k, _)| prefix_report(&k.parse()?, horizon, table))
        .collect()
}
