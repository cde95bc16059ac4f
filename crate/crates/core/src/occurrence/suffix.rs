//! Occurrence sequences `R_w` of end blocks of `beta+`.

use serde::{Deserialize, Serialize};

use crate::arith::lucas;
use crate::beatty::{differences, fibonacci_word, GbsParams};
use crate::error::{precondition, Result};
use crate::numeration::DigitWord;
use crate::table::ExpansionTable;

use super::report::{compare, BlockKind, ClosedForm, OccurrenceReport, Verdict};
use super::scan::{scan_central, scan_suffix};

fn l(k: usize) -> i64 {
    lucas::<i64>(k)
}

/// What is known about `R_w` before scanning.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SuffixLaw {
    /// Fully determined.
    Closed(ClosedForm),
    /// Lucas-Wythoff `V(p, q, gamma_w)` with the offset left open.
    Slope { p: i64, q: i64 },
}

impl SuffixLaw {
    /// Fixes `gamma_w` from the first occurrence, i.e. `V(1) = p + q + gamma`.
    pub fn resolve(&self, first: Option<u64>) -> Option<ClosedForm> {
        match self {
            SuffixLaw::Closed(f) => Some(f.clone()),
            SuffixLaw::Slope { p, q } => {
                first.map(|n| ClosedForm::gbs(GbsParams::new(*p, *q, n as i64 - p - q)))
            }
        }
    }
}

/// Number of zeros between the last two ones of `w`, when `w` ends in 1
/// and has another 1.
fn gap_before_final_one(d: &[u8]) -> Option<usize> {
    let body = &d[..d.len() - 1];
    let prev = body.iter().rposition(|&x| x == 1)?;
    Some(body.len() - 1 - prev)
}

pub fn suffix_law(w: &DigitWord) -> Result<SuffixLaw> {
    w.check_admissible()?;
    if w.is_empty() {
        return precondition("suffix law needs a nonempty word");
    }
    let d = w.digits();
    let m = d.len();
    if d.iter().all(|&x| x == 0) {
        let form = if m == 1 {
            ClosedForm::gbs(GbsParams::new0(-1, 3, 0))
        } else if m.is_multiple_of(2) {
            let k = m / 2;
            ClosedForm::union(vec![
                GbsParams::new(l(2 * k), l(2 * k - 1), 1),
                GbsParams::new0(l(2 * k - 1), l(2 * k - 2), 0),
            ])
        } else {
            let k = m / 2;
            ClosedForm::union(vec![
                GbsParams::new0(l(2 * k + 1), l(2 * k), 0),
                GbsParams::new(l(2 * k), l(2 * k - 1), 1),
            ])
        };
        return Ok(SuffixLaw::Closed(form));
    }
    if d[m - 1] == 1 {
        match gap_before_final_one(d) {
            None => {
                // 0^j 1
                let k = (m - 1) / 2;
                return Ok(SuffixLaw::Closed(ClosedForm::gbs(GbsParams::new0(
                    l(2 * k + 1),
                    l(2 * k),
                    1,
                ))));
            }
            Some(j) if j >= 2 && j % 2 == 0 => return Ok(SuffixLaw::Closed(ClosedForm::Empty)),
            Some(j) if j % 2 == 1 && m == j + 2 => {
                // exactly 1 0^{2k+1} 1
                let k = (j - 1) / 2;
                return Ok(SuffixLaw::Closed(ClosedForm::gbs(GbsParams::new(
                    l(2 * k + 2),
                    l(2 * k + 1),
                    1 - l(2 * k + 1),
                ))));
            }
            Some(_) => {}
        }
    }
    Ok(if d[0] == 1 {
        SuffixLaw::Slope {
            p: l(m - 1),
            q: l(m - 2),
        }
    } else {
        SuffixLaw::Slope {
            p: l(m - 2),
            q: l(m - 3),
        }
    })
}

/// Closed form for `R_w`, anchoring an open offset at the first scanned
/// occurrence.
pub fn predict_suffix(w: &DigitWord, scanned: &[u64]) -> Result<Option<ClosedForm>> {
    Ok(suffix_law(w)?.resolve(scanned.first().copied()))
}

pub fn suffix_report(
    w: &DigitWord,
    horizon: u64,
    table: &ExpansionTable,
) -> Result<OccurrenceReport> {
    let scanned = scan_suffix(w, horizon, table)?;
    let predicted = predict_suffix(w, &scanned)?;
    OccurrenceReport::new(
        w.to_string(),
        BlockKind::Suffix,
        horizon,
        scanned,
        predicted,
    )
}

fn v(p: i64, q: i64, r: i64) -> GbsParams<i64> {
    GbsParams::new(p, q, r)
}

fn v0(p: i64, q: i64, r: i64) -> GbsParams<i64> {
    GbsParams::new0(p, q, r)
}

/// Labeled nodes of the tree of end blocks ending in 0, as printed.
pub fn zero_tree() -> Vec<(&'static str, ClosedForm)> {
    use ClosedForm as F;
    vec![
        ("0", F::gbs(v0(-1, 3, 0))),
        ("00", F::union(vec![v0(1, 2, 0), v(3, 1, 1)])),
        ("000", F::union(vec![v0(4, 3, 0), v(3, 1, 1)])),
        ("0000", F::union(vec![v0(4, 3, 0), v(7, 4, 1)])),
        ("1000", F::gbs(v(4, 3, -2))),
        ("100", F::gbs(v(3, 1, -1))),
        ("0100", F::gbs(v(3, 1, -1))),
        ("10", F::gbs(v(1, 2, -1))),
        ("010", F::gbs(v(1, 2, -1))),
        ("0010", F::gbs(v(3, 1, -2))),
        ("1010", F::gbs(v(4, 3, -1))),
    ]
}

/// Labeled nodes of the tree of end blocks ending in 1, as printed.
pub fn one_tree() -> Vec<(&'static str, ClosedForm)> {
    use ClosedForm as F;
    vec![
        ("1", F::gbs(v0(1, 2, 1))),
        ("01", F::gbs(v0(1, 2, 1))),
        ("001", F::gbs(v0(4, 3, 1))),
        ("0001", F::gbs(v0(4, 3, 1))),
        ("00001", F::gbs(v0(11, 7, 1))),
        ("10001", F::gbs(v(7, 4, -3))),
        ("1001", F::Empty),
        ("101", F::gbs(v(3, 1, 0))),
        ("0101", F::gbs(v(3, 1, 0))),
        ("00101", F::gbs(v(4, 3, -3))),
        ("10101", F::gbs(v(7, 4, 0))),
    ]
}

/// A tree node scanned against its printed label and against
/// [`predict_suffix`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeNodeCheck {
    pub report: OccurrenceReport,
    pub predictor_agrees: bool,
}

impl TreeNodeCheck {
    pub fn passed(&self) -> bool {
        self.report.is_match() && self.predictor_agrees
    }
}

pub fn check_suffix_tree(
    nodes: &[(&'static str, ClosedForm)],
    horizon: u64,
    table: &ExpansionTable,
) -> Result<Vec<TreeNodeCheck>> {
    nodes
        .iter()
        .map(|(word, label)| {
            let w: DigitWord = word.parse()?;
            let scanned = scan_suffix(&w, horizon, table)?;
            let ours = predict_suffix(&w, &scanned)?;
            let predictor_agrees = compare(&scanned, ours.as_ref(), horizon)? == Verdict::Match;
            let report = OccurrenceReport::new(
                word.to_string(),
                BlockKind::Suffix,
                horizon,
                scanned,
                Some(label.clone()),
            )?;
            Ok(TreeNodeCheck {
                report,
                predictor_agrees,
            })
        })
        .collect()
}

/// `R_0` against both printed forms: `V(-1, 3, 0)` and `V0(-1, 3, 0)`.
pub fn r0_candidates(horizon: u64, table: &ExpansionTable) -> Result<(Verdict, Verdict)> {
    let scanned = scan_suffix(&"0".parse()?, horizon, table)?;
    Ok((
        compare(&scanned, Some(&ClosedForm::gbs(v(-1, 3, 0))), horizon)?,
        compare(&scanned, Some(&ClosedForm::gbs(v0(-1, 3, 0))), horizon)?,
    ))
}

fn zeros(n: usize) -> DigitWord {
    DigitWord::zeros(n)
}

fn one_zeros(n: usize) -> DigitWord {
    DigitWord::repeat("1", 1).concat(&zeros(n))
}

fn report(
    left: DigitWord,
    right: Option<DigitWord>,
    form: ClosedForm,
    horizon: u64,
    table: &ExpansionTable,
) -> Result<OccurrenceReport> {
    let (scanned, kind, block) = match &right {
        Some(r) => (
            scan_central(&left, r, horizon, table)?,
            BlockKind::Central,
            format!("{left}.{r}"),
        ),
        None => (
            scan_suffix(&left, horizon, table)?,
            BlockKind::Suffix,
            left.to_string(),
        ),
    };
    OccurrenceReport::new(block, kind, horizon, scanned, Some(form))
}

/// The all-zero and `0^j 1`, `10^j 1` families for `m = 1..=max_m`,
/// including the central refinements `0^j . 0` and `0^j . 1`.
pub fn special_family_reports(
    max_m: usize,
    horizon: u64,
    table: &ExpansionTable,
) -> Result<Vec<OccurrenceReport>> {
    use ClosedForm as F;
    let one: DigitWord = "1".parse()?;
    let zero: DigitWord = "0".parse()?;
    let mut out = Vec::new();
    for m in 1..=max_m {
        let even = 2 * m;
        let odd = 2 * m + 1;
        out.push(report(
            zeros(even),
            Some(zero.clone()),
            F::gbs(v0(l(2 * m - 1), l(2 * m - 2), 0)),
            horizon,
            table,
        )?);
        out.push(report(
            zeros(even),
            Some(one.clone()),
            F::gbs(v(l(2 * m), l(2 * m - 1), 1)),
            horizon,
            table,
        )?);
        out.push(report(
            zeros(odd),
            Some(zero.clone()),
            F::gbs(v0(l(2 * m + 1), l(2 * m), 0)),
            horizon,
            table,
        )?);
        out.push(report(
            zeros(odd),
            Some(one.clone()),
            F::gbs(v(l(2 * m), l(2 * m - 1), 1)),
            horizon,
            table,
        )?);
        out.push(report(
            zeros(even),
            None,
            F::union(vec![
                v(l(2 * m), l(2 * m - 1), 1),
                v0(l(2 * m - 1), l(2 * m - 2), 0),
            ]),
            horizon,
            table,
        )?);
        out.push(report(
            zeros(odd),
            None,
            F::union(vec![
                v0(l(2 * m + 1), l(2 * m), 0),
                v(l(2 * m), l(2 * m - 1), 1),
            ]),
            horizon,
            table,
        )?);
        let ones_family = F::gbs(v0(l(2 * m + 1), l(2 * m), 1));
        out.push(report(
            zeros(even).concat(&one),
            None,
            ones_family.clone(),
            horizon,
            table,
        )?);
        out.push(report(
            zeros(odd).concat(&one),
            None,
            ones_family,
            horizon,
            table,
        )?);
        out.push(report(
            one_zeros(even).concat(&one),
            None,
            F::Empty,
            horizon,
            table,
        )?);
        out.push(report(
            one_zeros(odd).concat(&one),
            None,
            F::gbs(v(l(2 * m + 2), l(2 * m + 1), 1 - l(2 * m + 1))),
            horizon,
            table,
        )?);
        // the blocks 10^{2m+1} . 1 and 10^{2m+2} . 0 from the induction
        let u1 = F::gbs(v(l(2 * m + 1), l(2 * m), 1 - l(2 * m)));
        out.push(report(
            one_zeros(odd),
            Some(one.clone()),
            u1.clone(),
            horizon,
            table,
        )?);
        out.push(report(one_zeros(odd), None, u1, horizon, table)?);
        let u0 = F::gbs(v(l(2 * m + 2), l(2 * m + 1), -l(2 * m + 1)));
        out.push(report(
            one_zeros(odd + 1),
            Some(zero.clone()),
            u0.clone(),
            horizon,
            table,
        )?);
        out.push(report(one_zeros(odd + 1), None, u0, horizon, table)?);
    }
    Ok(out)
}

/// `R_w` for `w = ..1` against `R_{w' . 0} + 1`, where `w'` is `w` with the
/// final digit set to 0, and against the shorter `R_{w'} + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CouplingCheck {
    pub word: String,
    pub nonempty: bool,
    pub with_central_zero: bool,
    pub without_central_zero: bool,
}

pub fn coupling_check(
    w: &DigitWord,
    horizon: u64,
    table: &ExpansionTable,
) -> Result<CouplingCheck> {
    if w.len() < 2 || w.last() != Some(1) {
        return precondition(format!(
            "coupling needs a word of length >= 2 ending in 1, got {w}"
        ));
    }
    let mut d = w.digits().to_vec();
    *d.last_mut().unwrap() = 0;
    let breve = DigitWord::new(d);
    let rw = scan_suffix(w, horizon, table)?;
    let shifted = |s: Vec<u64>| -> Vec<u64> {
        s.into_iter()
            .map(|n| n + 1)
            .filter(|&n| n <= horizon)
            .collect()
    };
    let central = shifted(scan_central(&breve, &"0".parse()?, horizon, table)?);
    let plain = shifted(scan_suffix(&breve, horizon, table)?);
    Ok(CouplingCheck {
        word: w.to_string(),
        nonempty: !rw.is_empty(),
        with_central_zero: rw == central,
        without_central_zero: rw == plain,
    })
}

/// Letters of `Delta R_w` for a Lucas-Wythoff `R_w`: `(L_{m+1}, L_m)` for a
/// leading 1 and `(L_m, L_{m-1})` for a leading 0, with `m = |w|`.
pub fn suffix_letters(w: &DigitWord) -> Result<(i64, i64)> {
    let m = w.len();
    if m < 2 {
        return precondition("letters need |w| >= 2");
    }
    Ok(if w.first() == Some(1) {
        (l(m + 1), l(m))
    } else {
        (l(m), l(m - 1))
    })
}

/// Words outside the Lucas-Wythoff regime: all zeros, `0^j 1`, and
/// suffix `10^{2k} 1`.
pub fn is_special_suffix(w: &DigitWord) -> bool {
    let d = w.digits();
    if d.iter().all(|&x| x == 0) {
        return true;
    }
    if d.last() == Some(&1) {
        return match gap_before_final_one(d) {
            None => true,
            Some(j) => j >= 2 && j % 2 == 0,
        };
    }
    false
}

/// Whether `Delta R_w` is the Fibonacci word on [`suffix_letters`].
pub fn suffix_difference_check(
    w: &DigitWord,
    horizon: u64,
    table: &ExpansionTable,
) -> Result<bool> {
    let (a, b) = suffix_letters(w)?;
    let scanned: Vec<i64> = scan_suffix(w, horizon, table)?
        .into_iter()
        .map(|n| n as i64)
        .collect();
    if scanned.len() < 2 {
        return Ok(false);
    }
    let d = differences(&scanned);
    Ok(fibonacci_word(a, b, d.len()) == d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> DigitWord {
        s.parse().unwrap()
    }

    fn table() -> ExpansionTable {
        ExpansionTable::sequential(3000).unwrap()
    }

    #[test]
    fn law_examples() {
        let t = table();
        let f = |s: &str| {
            let scanned = scan_suffix(&w(s), 3000, &t).unwrap();
            predict_suffix(&w(s), &scanned)
                .unwrap()
                .unwrap()
                .to_string()
        };
        assert_eq!(f("100"), "V(3,1,-1)");
        assert_eq!(f("000"), "V0(4,3,0) u V(3,1,1)");
        assert_eq!(f("10001"), "V(7,4,-3)");
        assert_eq!(f("1001"), "empty");
        assert_eq!(f("0"), "V0(-1,3,0)");
    }

    #[test]
    fn trees_match_to_small_horizon() {
        let t = table();
        for node in check_suffix_tree(&zero_tree(), 3000, &t)
            .unwrap()
            .into_iter()
            .chain(check_suffix_tree(&one_tree(), 3000, &t).unwrap())
        {
            assert!(node.passed(), "{node:?}");
        }
    }

    #[test]
    fn r0_contains_zero() {
        let (plain, with_zero) = r0_candidates(3000, &table()).unwrap();
        assert_eq!(plain, Verdict::Mismatch { index: 0 });
        assert_eq!(with_zero, Verdict::Match);
    }

    #[test]
    fn coupling_needs_the_central_zero() {
        let t = table();
        let c = coupling_check(&w("01"), 3000, &t).unwrap();
        assert!(c.with_central_zero);
        assert!(!c.without_central_zero);
        assert!(coupling_check(&w("10"), 3000, &t).is_err());
    }

    #[test]
    fn special_words() {
        assert!(is_special_suffix(&w("000")));
        assert!(is_special_suffix(&w("0001")));
        assert!(is_special_suffix(&w("01001")));
        assert!(!is_special_suffix(&w("10001")));
        assert!(!is_special_suffix(&w("0100")));
    }
}
