//! Precomputed expansions `beta(0..=max_n)` in bit-packed form, plus
//! central block patterns that match against them.

use std::fmt;
use std::thread;

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Result};
use crate::numeration::{DigitWord, PackedExpansion, PhiCounter, PhiExpansion};
use crate::structure::phi_encode_recursive;

fn mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// `beta(N)` for every `N <= max_n`.
#[derive(Clone, Debug)]
pub struct ExpansionTable {
    entries: Vec<PackedExpansion>,
}

impl ExpansionTable {
    /// Single add-one pass from zero; the reference construction.
    pub fn sequential(max_n: u64) -> Result<Self> {
        let mut entries = Vec::with_capacity(max_n as usize + 1);
        let mut c = PhiCounter::new();
        entries.push(c.packed()?);
        for _ in 0..max_n {
            c.increment()?;
            entries.push(c.packed()?);
        }
        Ok(ExpansionTable { entries })
    }

    /// Splits `0..=max_n` into `jobs` chunks, seeds each chunk with the
    /// recursive encoder and continues by add-one. The result does not
    /// depend on `jobs`.
    pub fn build(max_n: u64, jobs: usize) -> Result<Self> {
        let jobs = jobs.max(1) as u64;
        let total = max_n + 1;
        if jobs == 1 || total < 4096 {
            return ExpansionTable::sequential(max_n);
        }
        let chunk = total.div_ceil(jobs);
        let parts: Vec<Result<Vec<PackedExpansion>>> = thread::scope(|s| {
            let handles: Vec<_> = (0..jobs)
                .map(|j| j * chunk)
                .filter(|&start| start < total)
                .map(|start| {
                    let end = (start + chunk).min(total);
                    s.spawn(move || -> Result<Vec<PackedExpansion>> {
                        let seed = phi_encode_recursive(&(start as i64))?;
                        let mut c = PhiCounter::starting_at(&seed, start);
                        let mut out = Vec::with_capacity((end - start) as usize);
                        out.push(c.packed()?);
                        for _ in start + 1..end {
                            c.increment()?;
                            out.push(c.packed()?);
                        }
                        Ok(out)
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("table worker panicked"))
                .collect()
        });
        let mut entries = Vec::with_capacity(total as usize);
        for p in parts {
            entries.extend(p?);
        }
        Ok(ExpansionTable { entries })
    }

    pub fn max_n(&self) -> u64 {
        self.entries.len() as u64 - 1
    }

    pub fn packed(&self, n: u64) -> &PackedExpansion {
        &self.entries[n as usize]
    }

    pub fn expansion(&self, n: u64) -> PhiExpansion {
        self.entries[n as usize].unpack()
    }

    pub fn require(&self, max_n: u64) -> Result<()> {
        if max_n > self.max_n() {
            return precondition(format!(
                "table covers N <= {}, {} requested",
                self.max_n(),
                max_n
            ));
        }
        Ok(())
    }

    /// All `N <= max_n` matching `pattern`.
    pub fn scan(&self, pattern: &CentralPattern, max_n: u64) -> Result<Vec<u64>> {
        self.require(max_n)?;
        Ok((0..=max_n)
            .filter(|&n| pattern.matches(self.packed(n)))
            .collect())
    }
}

/// Central block `d_{k-1} .. d_0 . d_{-1} .. d_{-j}` with zero padding on
/// both sides; either side may be empty.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CentralPattern {
    pub left: DigitWord,
    pub right: DigitWord,
}

impl CentralPattern {
    pub fn new(left: DigitWord, right: DigitWord) -> Result<Self> {
        left.check_admissible()?;
        right.check_admissible()?;
        if left.len() > 64 || right.len() > 64 {
            return precondition("central pattern longer than 64 digits");
        }
        Ok(CentralPattern { left, right })
    }

    pub fn suffix(left: DigitWord) -> Result<Self> {
        CentralPattern::new(left, DigitWord::empty())
    }

    pub fn prefix(right: DigitWord) -> Result<Self> {
        CentralPattern::new(DigitWord::empty(), right)
    }

    pub fn matches(&self, e: &PackedExpansion) -> bool {
        let (k, j) = (self.left.len(), self.right.len());
        e.left_bits & mask(k) == self.left.to_suffix_bits()
            && e.right_bits & mask(j) == self.right.to_prefix_bits()
    }

    pub fn matches_expansion(&self, e: &PhiExpansion) -> bool {
        let (l, r) = e.central(self.left.len(), self.right.len());
        l == self.left && r == self.right
    }
}

impl fmt::Display for CentralPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.left, self.right)
    }
}

impl fmt::Debug for CentralPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CentralPattern({self})")
    }
}

impl std::str::FromStr for CentralPattern {
    type Err = crate::error::Error;

    /// `"00.1"`, `"100."`, `".01"`; without a point the word is a suffix.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('.') {
            Some((l, r)) => CentralPattern::new(l.parse()?, r.parse()?),
            None => CentralPattern::suffix(s.parse()?),
        }
    }
}

/// Central `2q`-digit block as packed bits `(left, right)`.
pub fn central_bits(e: &PackedExpansion, q: usize) -> (u64, u64) {
    (e.left_bits & mask(q), e.right_bits & mask(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_build_matches_sequential() {
        let a = ExpansionTable::sequential(20_000).unwrap();
        let b = ExpansionTable::build(20_000, 4).unwrap();
        assert_eq!(a.entries, b.entries);
        assert_eq!(b.expansion(5).to_string(), "1000.1001");
    }

    #[test]
    fn pattern_matching() {
        let t = ExpansionTable::sequential(30).unwrap();
        let p: CentralPattern = "00.1".parse().unwrap();
        assert_eq!(t.scan(&p, 16).unwrap(), [5, 12, 16]);
        let p: CentralPattern = "00.0".parse().unwrap();
        assert_eq!(t.scan(&p, 11).unwrap(), [0, 3, 7, 10]);
        let p: CentralPattern = "10".parse().unwrap();
        assert_eq!(t.scan(&p, 11).unwrap(), [2, 6, 9]);
        for n in 0..=30 {
            assert_eq!(p.matches(t.packed(n)), p.matches_expansion(&t.expansion(n)));
        }
        assert!(t.scan(&p, 31).is_err());
        assert!("11.".parse::<CentralPattern>().is_err());
    }
}
