use std::fmt;

use serde::{Deserialize, Serialize};

use crate::beatty::GbsParams;
use crate::error::Result;

/// Where a block is looked for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockKind {
    /// Suffix of `beta+`, left padded with zeros.
    Suffix,
    /// Suffix of `beta+` together with a prefix of `beta-`.
    Central,
    /// Prefix of `beta-`, right padded with zeros.
    Prefix,
}

/// Predicted occurrence sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum ClosedForm {
    Empty,
    Gbs { params: GbsParams<i64> },
    Union { parts: Vec<GbsParams<i64>> },
}

impl ClosedForm {
    pub fn gbs(params: GbsParams<i64>) -> Self {
        ClosedForm::Gbs { params }
    }

    pub fn union(parts: Vec<GbsParams<i64>>) -> Self {
        ClosedForm::Union { parts }
    }

    /// `V(p, q, [r, r+1, r+2])`.
    pub fn trident(params: GbsParams<i64>) -> Self {
        let r = params.r;
        ClosedForm::union((0..3).map(|k| params.with_offset(r + k)).collect())
    }

    /// All terms `<= bound`, sorted; unions keep repeated values so that
    /// overlapping parts show up as a mismatch.
    pub fn terms_up_to(&self, bound: u64) -> Result<Vec<u64>> {
        let parts: Vec<&GbsParams<i64>> = match self {
            ClosedForm::Empty => Vec::new(),
            ClosedForm::Gbs { params } => vec![params],
            ClosedForm::Union { parts } => parts.iter().collect(),
        };
        let mut out = Vec::new();
        for p in parts {
            for v in p.terms_up_to(bound as i64)? {
                if v >= 0 {
                    out.push(v as u64);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedForm::Empty => write!(f, "empty"),
            ClosedForm::Gbs { params } => write!(f, "{params}"),
            ClosedForm::Union { parts } => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " u ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Match,
    Mismatch { index: usize },
    NoPrediction,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Match => write!(f, "MATCH"),
            Verdict::Mismatch { index } => write!(f, "MISMATCH@{index}"),
            Verdict::NoPrediction => write!(f, "NO_PREDICTION"),
        }
    }
}

/// First index where the scan and the prediction (both up to `horizon`)
/// disagree.
pub fn compare(scanned: &[u64], predicted: Option<&ClosedForm>, horizon: u64) -> Result<Verdict> {
    let Some(form) = predicted else {
        return Ok(Verdict::NoPrediction);
    };
    let expected = form.terms_up_to(horizon)?;
    let n = scanned.len().max(expected.len());
    for i in 0..n {
        if scanned.get(i) != expected.get(i) {
            return Ok(Verdict::Mismatch { index: i });
        }
    }
    Ok(Verdict::Match)
}

/// A scanned occurrence sequence against its predicted closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OccurrenceReport {
    pub block: String,
    pub kind: BlockKind,
    pub horizon: u64,
    pub scanned: Vec<u64>,
    pub predicted: Option<ClosedForm>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl OccurrenceReport {
    pub fn new(
        block: String,
        kind: BlockKind,
        horizon: u64,
        scanned: Vec<u64>,
        predicted: Option<ClosedForm>,
    ) -> Result<Self> {
        let verdict = compare(&scanned, predicted.as_ref(), horizon)?;
        Ok(OccurrenceReport {
            block,
            kind,
            horizon,
            scanned,
            predicted,
            verdict,
            note: None,
        })
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn is_match(&self) -> bool {
        self.verdict == Verdict::Match
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_terms_are_merged() {
        let f = ClosedForm::trident(GbsParams::new(1, 2, -1));
        assert_eq!(f.terms_up_to(11).unwrap(), [2, 3, 4, 6, 7, 8, 9, 10, 11]);
        assert_eq!(
            ClosedForm::Empty.terms_up_to(100).unwrap(),
            Vec::<u64>::new()
        );
    }

    #[test]
    fn verdicts() {
        let f = ClosedForm::gbs(GbsParams::new(3, 1, 1));
        assert_eq!(compare(&[5, 12, 16], Some(&f), 16).unwrap(), Verdict::Match);
        assert_eq!(
            compare(&[5, 13], Some(&f), 16).unwrap(),
            Verdict::Mismatch { index: 1 }
        );
        assert_eq!(compare(&[5], None, 16).unwrap(), Verdict::NoPrediction);
    }

    #[test]
    fn json_round_trip() {
        let r = OccurrenceReport::new(
            "00.1".into(),
            BlockKind::Central,
            16,
            vec![5, 12, 16],
            Some(ClosedForm::union(vec![
                GbsParams::new0(1, 2, 0),
                GbsParams::new(3, 1, 1),
            ])),
        )
        .unwrap()
        .with_note("x");
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<OccurrenceReport>(&s).unwrap(), r);
    }
}
