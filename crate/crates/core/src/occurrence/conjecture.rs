//! Classification of start-block occurrence sequences `R_{.w}` by their
//! difference words.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::lucas;
use crate::beatty::{classify_difference_word, DiffTag, DiffWordClass};
use crate::error::{precondition, Result};
use crate::numeration::DigitWord;
use crate::table::ExpansionTable;

use super::scan::scan_prefix;

/// Fewer terms than this leave a sequence unclassified.
pub const MIN_TERMS: usize = 8;

/// How the numbers of a prefix scan sit among the runs of equal `beta-`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanStructure {
    Singletons,
    Tridents,
    Mixed,
}

/// Position of `N` in its run of equal `beta-`: 0 for a singleton, 1..=3
/// inside a trident, `None` for any other run.
pub fn trident_position(n: u64, table: &ExpansionTable) -> Option<u8> {
    let same = |a: u64, b: u64| {
        let (x, y) = (table.packed(a), table.packed(b));
        x.right_bits == y.right_bits && x.right_len == y.right_len
    };
    let mut lo = n;
    while lo > 2 && same(lo - 1, n) {
        lo -= 1;
    }
    let mut hi = n;
    while hi < table.max_n() && same(hi + 1, n) {
        hi += 1;
    }
    match hi - lo {
        0 => Some(0),
        2 => Some((n - lo + 1) as u8),
        _ => None,
    }
}

pub fn is_lucas(x: i64) -> bool {
    (0..)
        .map(lucas::<i64>)
        .take_while(|&l| l <= x.max(2))
        .any(|l| l == x)
}

/// One classified sequence: the whole scan, or one trident position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifiedSequence {
    /// 1..=3 for trident positions, absent for a whole scan.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub position: Option<u8>,
    pub terms: usize,
    /// Absent when there are fewer than [`MIN_TERMS`] terms.
    pub class: Option<DiffWordClass>,
    pub lucas_letters: bool,
}

impl ClassifiedSequence {
    fn new(position: Option<u8>, seq: &[u64]) -> Self {
        let seq: Vec<i64> = seq.iter().map(|&n| n as i64).collect();
        let class = (seq.len() >= MIN_TERMS).then(|| classify_difference_word(&seq));
        let lucas_letters = class
            .as_ref()
            .is_some_and(|c| c.tag != DiffTag::None && is_lucas(c.a) && is_lucas(c.b));
        ClassifiedSequence {
            position,
            terms: seq.len(),
            class,
            lucas_letters,
        }
    }

    pub fn is_undersampled(&self) -> bool {
        self.class.is_none()
    }

    pub fn is_none(&self) -> bool {
        matches!(&self.class, Some(c) if c.tag == DiffTag::None)
    }
}

impl fmt::Display for ClassifiedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.position {
            write!(f, "[{p}] ")?;
        }
        match &self.class {
            None => write!(f, "UNDERSAMPLED({})", self.terms),
            Some(c) if self.lucas_letters => write!(f, "{c} lucas"),
            Some(c) => write!(f, "{c}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureEntry {
    pub word: String,
    pub structure: ScanStructure,
    pub sequences: Vec<ClassifiedSequence>,
}

impl ConjectureEntry {
    /// Every sequence classified with Lucas letters.
    pub fn supports(&self) -> bool {
        self.structure != ScanStructure::Mixed
            && self
                .sequences
                .iter()
                .all(|s| !s.is_undersampled() && s.lucas_letters)
    }
}

impl fmt::Display for ConjectureEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, ".{} {:?}:", self.word, self.structure)?;
        for s in &self.sequences {
            write!(f, " {s}")?;
        }
        Ok(())
    }
}

pub fn classify_prefix(
    w: &DigitWord,
    horizon: u64,
    table: &ExpansionTable,
) -> Result<ConjectureEntry> {
    if table.max_n() < horizon + 2 {
        return precondition(format!(
            "conjecture scan to {horizon} needs a table to {}",
            horizon + 2
        ));
    }
    let scanned = scan_prefix(w, horizon, table)?;
    let positions: Vec<Option<u8>> = scanned
        .iter()
        .map(|&n| trident_position(n, table))
        .collect();
    let structure = if positions.iter().all(|p| *p == Some(0)) {
        ScanStructure::Singletons
    } else if positions.iter().all(|p| matches!(p, Some(1..=3))) {
        ScanStructure::Tridents
    } else {
        ScanStructure::Mixed
    };
    let sequences = if structure == ScanStructure::Tridents {
        (1..=3u8)
            .map(|k| {
                let sub: Vec<u64> = scanned
                    .iter()
                    .zip(&positions)
                    .filter(|(_, p)| **p == Some(k))
                    .map(|(n, _)| *n)
                    .collect();
                ClassifiedSequence::new(Some(k), &sub)
            })
            .collect()
    } else {
        vec![ClassifiedSequence::new(None, &scanned)]
    };
    Ok(ConjectureEntry {
        word: w.to_string(),
        structure,
        sequences,
    })
}

/// All admissible start blocks of length `1..=max_len`.
pub fn conjecture_scan(
    max_len: usize,
    horizon: u64,
    table: &ExpansionTable,
) -> Result<Vec<ConjectureEntry>> {
    let mut out = Vec::new();
    for len in 1..=max_len {
        for w in DigitWord::admissible_words(len) {
            out.push(classify_prefix(&w, horizon, table)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lucas_membership() {
        assert!([1, 2, 3, 4, 7, 11, 18, 29].iter().all(|&x| is_lucas(x)));
        assert!(![0, 5, 6, 8, 10, 19].iter().any(|&x| is_lucas(x)));
    }

    #[test]
    fn small_examples() {
        let t = ExpansionTable::sequential(20_002).unwrap();
        let e = classify_prefix(&"10".parse().unwrap(), 20_000, &t).unwrap();
        assert_eq!(e.structure, ScanStructure::Singletons);
        assert_eq!(
            e.sequences[0].class.as_ref().unwrap().to_string(),
            "X_F(7,4)"
        );
        let e = classify_prefix(&"1001".parse().unwrap(), 20_000, &t).unwrap();
        assert_eq!(
            e.sequences[0].class.as_ref().unwrap().to_string(),
            "X_G(29,18)"
        );
        let e = classify_prefix(&"0100".parse().unwrap(), 20_000, &t).unwrap();
        assert_eq!(e.structure, ScanStructure::Tridents);
        assert_eq!(
            e.sequences[0].class.as_ref().unwrap().to_string(),
            "X_H(18,11)"
        );
        assert!(e.supports());
    }
}
