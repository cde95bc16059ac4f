use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Finite word of digits, most significant first.
///
/// Admissible words use only 0 and 1 with no factor `11`. Digit 2 is
/// accepted by the parser so that raw carry inputs can be written down.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct DigitWord {
    digits: Vec<u8>,
}

impl DigitWord {
    pub fn new(digits: Vec<u8>) -> Self {
        DigitWord { digits }
    }

    pub fn empty() -> Self {
        DigitWord::default()
    }

    pub fn zeros(n: usize) -> Self {
        DigitWord::new(vec![0; n])
    }

    /// `block` repeated `times` times.
    pub fn repeat(block: &str, times: usize) -> Self {
        let w: DigitWord = block.parse().expect("static block");
        DigitWord::new(w.digits.repeat(times))
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn into_digits(self) -> Vec<u8> {
        self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn is_admissible(&self) -> bool {
        self.digits.iter().all(|&d| d <= 1) && !self.digits.windows(2).any(|p| p == [1, 1])
    }

    pub fn check_admissible(&self) -> Result<()> {
        if self.is_admissible() {
            Ok(())
        } else {
            Err(Error::Inadmissible(self.to_string()))
        }
    }

    pub fn first(&self) -> Option<u8> {
        self.digits.first().copied()
    }

    pub fn last(&self) -> Option<u8> {
        self.digits.last().copied()
    }

    pub fn concat(&self, other: &DigitWord) -> DigitWord {
        let mut digits = self.digits.clone();
        digits.extend_from_slice(&other.digits);
        DigitWord::new(digits)
    }

    pub fn starts_with(&self, prefix: &DigitWord) -> bool {
        self.digits.starts_with(&prefix.digits)
    }

    pub fn ends_with(&self, suffix: &DigitWord) -> bool {
        self.digits.ends_with(&suffix.digits)
    }

    /// Suffix test where the word is padded on the left with zeros.
    pub fn ends_with_padded(&self, suffix: &DigitWord) -> bool {
        let (n, m) = (self.len(), suffix.len());
        if m <= n {
            return self.ends_with(suffix);
        }
        let pad = m - n;
        suffix.digits[..pad].iter().all(|&d| d == 0) && suffix.digits[pad..] == self.digits[..]
    }

    /// Prefix test where the word is padded on the right with zeros.
    pub fn starts_with_padded(&self, prefix: &DigitWord) -> bool {
        let (n, m) = (self.len(), prefix.len());
        if m <= n {
            return self.starts_with(prefix);
        }
        prefix.digits[..n] == self.digits[..] && prefix.digits[n..].iter().all(|&d| d == 0)
    }

    /// The last `m` digits, left-padded with zeros.
    pub fn suffix_padded(&self, m: usize) -> DigitWord {
        let n = self.len();
        if m <= n {
            DigitWord::new(self.digits[n - m..].to_vec())
        } else {
            let mut d = vec![0; m - n];
            d.extend_from_slice(&self.digits);
            DigitWord::new(d)
        }
    }

    /// The first `m` digits, right-padded with zeros.
    pub fn prefix_padded(&self, m: usize) -> DigitWord {
        let mut d: Vec<u8> = self.digits.iter().copied().take(m).collect();
        d.resize(m, 0);
        DigitWord::new(d)
    }

    pub fn strip_leading_zeros(&self) -> DigitWord {
        let start = self
            .digits
            .iter()
            .position(|&d| d != 0)
            .unwrap_or(self.len());
        DigitWord::new(self.digits[start..].to_vec())
    }

    /// Free-group cancellation `(prefix)^{-1} w`; the prefix must be present.
    pub fn cancel_prefix(&self, prefix: &'static str) -> Result<DigitWord> {
        let p: DigitWord = prefix.parse().expect("static prefix");
        if self.starts_with(&p) {
            Ok(DigitWord::new(self.digits[p.len()..].to_vec()))
        } else {
            Err(Error::Surgery {
                word: self.to_string(),
                expected: prefix,
                side: "start",
            })
        }
    }

    /// Free-group cancellation `w (suffix)^{-1}`; the suffix must be present.
    pub fn cancel_suffix(&self, suffix: &'static str) -> Result<DigitWord> {
        let s: DigitWord = suffix.parse().expect("static suffix");
        if self.ends_with(&s) {
            Ok(DigitWord::new(self.digits[..self.len() - s.len()].to_vec()))
        } else {
            Err(Error::Surgery {
                word: self.to_string(),
                expected: suffix,
                side: "end",
            })
        }
    }

    /// All admissible words of length `m`, in lexicographic order.
    /// There are `F_{m+2}` of them.
    pub fn admissible_words(m: usize) -> Vec<DigitWord> {
        let mut out = vec![Vec::new()];
        for _ in 0..m {
            let mut next = Vec::with_capacity(out.len() * 2);
            for w in &out {
                let mut w0: Vec<u8> = w.clone();
                w0.push(0);
                next.push(w0);
                if w.last() != Some(&1) {
                    let mut w1 = w.clone();
                    w1.push(1);
                    next.push(w1);
                }
            }
            out = next;
        }
        let mut words: Vec<DigitWord> = out.into_iter().map(DigitWord::new).collect();
        words.sort();
        words
    }

    /// Packs the word into an integer, last digit in bit 0.
    pub fn to_suffix_bits(&self) -> u64 {
        assert!(self.len() <= 64);
        self.digits
            .iter()
            .fold(0u64, |acc, &d| (acc << 1) | d as u64)
    }

    /// Packs the word into an integer, first digit in bit 0.
    pub fn to_prefix_bits(&self) -> u64 {
        assert!(self.len() <= 64);
        self.digits
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &d)| acc | ((d as u64) << i))
    }
}

impl fmt::Display for DigitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for DigitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DigitWord({self})")
    }
}

impl FromStr for DigitWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                '2' => Ok(2),
                other => Err(Error::InvalidDigit(other)),
            })
            .collect::<Result<Vec<u8>>>()
            .map(DigitWord::new)
    }
}

impl From<DigitWord> for String {
    fn from(w: DigitWord) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for DigitWord {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> DigitWord {
        s.parse().unwrap()
    }

    #[test]
    fn admissibility() {
        assert!(w("10100101").is_admissible());
        assert!(!w("0110").is_admissible());
        assert!(!w("102").is_admissible());
        assert!(w("").is_admissible());
    }

    #[test]
    fn parse_rejects_other_characters() {
        assert_eq!("10a".parse::<DigitWord>(), Err(Error::InvalidDigit('a')));
        assert!("3".parse::<DigitWord>().is_err());
    }

    #[test]
    fn zeckendorf_word_counts() {
        // |Z_m| = F_{m+2}, fibs[i] = F_{i+2}
        let fibs = [1usize, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144];
        for (m, &count) in fibs.iter().enumerate() {
            let words = DigitWord::admissible_words(m);
            assert_eq!(words.len(), count, "m = {m}");
            assert!(words.iter().all(|x| x.is_admissible() && x.len() == m));
        }
    }

    #[test]
    fn padded_matching() {
        assert!(w("1").ends_with_padded(&w("001")));
        assert!(!w("1").ends_with_padded(&w("011")));
        assert!(w("01").starts_with_padded(&w("0100")));
        assert!(!w("01").starts_with_padded(&w("0101")));
        assert_eq!(w("101").suffix_padded(5), w("00101"));
        assert_eq!(w("101").prefix_padded(5), w("10100"));
    }

    #[test]
    fn surgery() {
        assert_eq!(w("1010").cancel_prefix("10").unwrap(), w("10"));
        assert_eq!(w("0001").cancel_suffix("01").unwrap(), w("00"));
        assert!(w("0001").cancel_prefix("10").is_err());
    }

    #[test]
    fn bit_packing() {
        assert_eq!(w("100").to_suffix_bits(), 0b100);
        assert_eq!(w("100").to_prefix_bits(), 0b001);
    }
}
