//! Negative parts: tridents, codes `C(N) = Z^-1(gamma-(N))`, the
//! permutation of the essential elements of `Xi_n`, and the rotation that
//! produces it.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{fib, frac_phi_compare, lucas, scalar, Scalar};
use crate::error::{precondition, Error, Result};
use crate::numeration::{gamma_minus, zeck_decode, DigitWord};
use crate::structure::{lambda_interval, locate, piece_of, xi_interval};
use crate::table::ExpansionTable;

fn fibu(k: usize) -> u64 {
    fib::<i64>(k) as u64
}

fn lucu(k: usize) -> u64 {
    lucas::<i64>(k) as u64
}

/// Three consecutive numbers sharing `beta-`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trident {
    pub start: u64,
}

impl Trident {
    pub fn members(&self) -> [u64; 3] {
        [self.start, self.start + 1, self.start + 2]
    }

    pub fn essential(&self) -> u64 {
        self.start + 1
    }
}

/// `Xi_n` cut into runs of equal `beta-`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiGrouping {
    pub n: usize,
    pub tridents: Vec<Trident>,
    pub singletons: Vec<u64>,
    /// Runs of length other than 1 and 3.
    pub anomalies: Vec<(u64, u64)>,
}

impl XiGrouping {
    /// `F_{2n-1}` tridents, `F_{2n-2}` singletons, no other runs.
    pub fn counts_hold(&self) -> bool {
        self.anomalies.is_empty()
            && self.tridents.len() as u64 == fibu(2 * self.n - 1)
            && self.singletons.len() as u64 == fibu(2 * self.n - 2)
    }
}

fn same_negative(table: &ExpansionTable, a: u64, b: u64) -> bool {
    let (x, y) = (table.packed(a), table.packed(b));
    x.right_bits == y.right_bits && x.right_len == y.right_len
}

pub fn tridents(n: usize, table: &ExpansionTable) -> Result<XiGrouping> {
    let xi = xi_interval::<i64>(n)?.span();
    table.require(xi.end)?;
    let mut g = XiGrouping {
        n,
        tridents: Vec::new(),
        singletons: Vec::new(),
        anomalies: Vec::new(),
    };
    let mut start = xi.start;
    while start <= xi.end {
        let mut end = start;
        while end < xi.end && same_negative(table, start, end + 1) {
            end += 1;
        }
        match end - start {
            0 => g.singletons.push(start),
            2 => g.tridents.push(Trident { start }),
            _ => g.anomalies.push((start, end)),
        }
        start = end + 1;
    }
    Ok(g)
}

/// Singletons and trident middles of `Xi_n`, increasing.
pub fn pi_essential(n: usize, table: &ExpansionTable) -> Result<Vec<u64>> {
    let g = tridents(n, table)?;
    let mut out: Vec<u64> = g.singletons.clone();
    out.extend(g.tridents.iter().map(Trident::essential));
    out.sort_unstable();
    Ok(out)
}

/// The last number of `Lambda_{2n-1}` and the first two of `Lambda_{2n}`
/// form a trident.
pub fn trident_splitting_holds(n: usize, table: &ExpansionTable) -> Result<bool> {
    if n < 1 {
        return precondition("trident splitting needs n >= 1");
    }
    let last = lambda_interval::<i64>(2 * n - 1).end as u64;
    let g = tridents(n, table)?;
    Ok(g.tridents.contains(&Trident { start: last }))
}

/// `C(N) = Z^-1(gamma-(N))`.
pub fn code(n: u64, table: &ExpansionTable) -> Result<u64> {
    if n < 2 {
        return precondition(format!("code needs N >= 2, got {n}"));
    }
    table.require(n)?;
    Ok(zeck_decode::<i64>(&gamma_minus(&table.expansion(n))?)? as u64)
}

/// `gamma-(N)` through the Lucas interval pieces: `gamma-(N - L_shift)`
/// followed by the tail of the piece.
pub fn gamma_recursive<T: Scalar>(n: &T) -> Result<DigitWord> {
    if n < &scalar::<T>(2) {
        return precondition(format!("gamma- needs N >= 2, got {n}"));
    }
    if n <= &scalar::<T>(4) {
        return Ok(DigitWord::empty());
    }
    let m = locate(n)?;
    let (piece, inner) = piece_of(m, n)?;
    Ok(gamma_recursive(&inner)?.concat(&piece.gamma_tail.parse()?))
}

/// `gamma-` and `C` at `L_{2n}`, `L_{2n+1}`, `L_{2n+1} + 1`, `L_{2n+2} - 1`
/// against their closed forms. Returns the first failing number.
pub fn gamma_border_check(n: usize, table: &ExpansionTable) -> Result<Option<u64>> {
    if n < 1 {
        return precondition("border check needs n >= 1");
    }
    let cases = [
        (lucu(2 * n), DigitWord::zeros(2 * n - 2), 0),
        (
            lucu(2 * n + 1),
            DigitWord::repeat("01", n - 1),
            fibu(2 * n - 1) - 1,
        ),
        (
            lucu(2 * n + 1) + 1,
            DigitWord::repeat("10", n),
            fibu(2 * n + 2) - 1,
        ),
        (lucu(2 * n + 2) - 1, DigitWord::zeros(2 * n), 0),
    ];
    for (at, gamma, c) in cases {
        table.require(at)?;
        if gamma_minus(&table.expansion(at))? != gamma || code(at, table)? != c {
            return Ok(Some(at));
        }
    }
    Ok(None)
}

/// Codes of the essential elements of `Xi_n` in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiPermutation {
    pub n: usize,
    pub values: Vec<u64>,
}

impl fmt::Display for PiPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

fn is_permutation(values: &[u64]) -> bool {
    let mut seen = vec![false; values.len()];
    values.iter().all(|&v| {
        let ok = (v as usize) < seen.len() && !seen[v as usize];
        if ok {
            seen[v as usize] = true;
        }
        ok
    })
}

/// Errors unless the codes form a permutation of `0..F_{2n}`.
pub fn pi_permutation(n: usize, table: &ExpansionTable) -> Result<PiPermutation> {
    let values = pi_essential(n, table)?
        .into_iter()
        .map(|e| code(e, table))
        .collect::<Result<Vec<u64>>>()?;
    if values.len() as u64 != fibu(2 * n) || !is_permutation(&values) {
        return Err(Error::Inconsistent(format!(
            "codes of the essential elements of Xi_{n} are not a permutation of 0..F_{}",
            2 * n
        )));
    }
    Ok(PiPermutation { n, values })
}

/// Starts at `F_{2n} - 1` and steps by `F_{2n-2}` modulo `F_{2n}`.
pub fn verify_pi_arithmetic(p: &PiPermutation) -> bool {
    let n = p.n;
    let modulus = fibu(2 * n);
    let step = fibu(2 * n - 2);
    p.values.first() == Some(&(modulus - 1))
        && p.values.windows(2).all(|w| w[1] == (w[0] + step) % modulus)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    /// `u_j = (j - 1) F_{2n-1} mod F_{2n}`, reversed and shifted.
    PaperSketch,
    /// Ranks `j = 1..F_{2n}` by decreasing `{j phi}`.
    RawOrbit,
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sketch" | "paper_sketch" => Ok(Convention::PaperSketch),
            "raw" | "raw_orbit" => Ok(Convention::RawOrbit),
            _ => precondition(format!("unknown convention {s:?}, expected sketch or raw")),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::PaperSketch => "sketch",
            Convention::RawOrbit => "raw",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationPermutation {
    pub n: usize,
    pub convention: Convention,
    /// The orbit before the final recipe: `(u_1, .., u_N)` for the sketch,
    /// the indices `j` in increasing `{j phi}` for the raw orbit.
    pub intermediate: Vec<u64>,
    pub values: Vec<u64>,
}

pub fn rotation_permutation(n: usize, convention: Convention) -> Result<RotationPermutation> {
    if n < 1 {
        return precondition("rotation needs n >= 1");
    }
    let big_n = fibu(2 * n);
    let (intermediate, values) = match convention {
        Convention::PaperSketch => {
            let u2 = fibu(2 * n - 1);
            let mut u: Vec<u64> = (0..big_n).map(|j| (j * u2) % big_n).collect();
            let intermediate = u.clone();
            u.push(big_n);
            let values = u[1..].iter().rev().map(|&x| x - 1).collect();
            (intermediate, values)
        }
        Convention::RawOrbit => {
            let mut js: Vec<u64> = (1..=big_n).collect();
            let mut failure = None;
            js.sort_by(|a, b| match frac_phi_compare(&(*a as i64), &(*b as i64)) {
                Ok(o) => o,
                Err(e) => {
                    failure.get_or_insert(e);
                    Ordering::Equal
                }
            });
            if let Some(e) = failure {
                return Err(e);
            }
            let values = js.iter().rev().map(|&j| j - 1).collect();
            (js, values)
        }
    };
    Ok(RotationPermutation {
        n,
        convention,
        intermediate,
        values,
    })
}

/// `{beta-(N) : N in Xi_n}` is the set of admissible words of length `2n`
/// ending in 1.
pub fn verify_all_gamma(n: usize, table: &ExpansionTable) -> Result<bool> {
    let xi = xi_interval::<i64>(n)?.span();
    table.require(xi.end)?;
    let seen: BTreeSet<DigitWord> = xi
        .iter()
        .map(|k| table.expansion(k).right().clone())
        .collect();
    let all: BTreeSet<DigitWord> = DigitWord::admissible_words(2 * n)
        .into_iter()
        .filter(|w| w.last() == Some(1))
        .collect();
    Ok(seen == all && all.len() as u64 == fibu(2 * n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn table() -> ExpansionTable {
        ExpansionTable::sequential(2000).unwrap()
    }

    #[test]
    fn grouping_examples() {
        let t = table();
        let g = tridents(1, &t).unwrap();
        assert_eq!(g.tridents, [Trident { start: 2 }]);
        let g = tridents(2, &t).unwrap();
        assert_eq!(g.tridents, [Trident { start: 6 }, Trident { start: 9 }]);
        assert_eq!(g.singletons, [5]);
        for n in 1..=6 {
            assert!(tridents(n, &t).unwrap().counts_hold());
            assert!(trident_splitting_holds(n, &t).unwrap());
        }
    }

    #[test]
    fn codes() {
        let t = table();
        assert_eq!(code(12, &t).unwrap(), 7);
        assert_eq!(code(23, &t).unwrap(), 6);
        assert!(code(1, &t).is_err());
        for n in 1..=6 {
            assert_eq!(gamma_border_check(n, &t).unwrap(), None);
        }
    }

    #[test]
    fn recursive_gamma() {
        let t = table();
        assert_eq!(gamma_recursive(&13i64).unwrap().to_string(), "0010");
        assert_eq!(gamma_recursive(&20i64).unwrap().to_string(), "0100");
        assert_eq!(gamma_recursive(&17i64).unwrap().to_string(), "0000");
        for n in 2..=2000u64 {
            assert_eq!(
                gamma_recursive(&(n as i64)).unwrap(),
                gamma_minus(&t.expansion(n)).unwrap(),
                "N = {n}"
            );
        }
        let big: BigInt = "1000000000000000000000000".parse().unwrap();
        assert!(gamma_recursive(&big).is_ok());
    }

    #[test]
    fn permutations() {
        let t = table();
        assert_eq!(pi_permutation(1, &t).unwrap().values, [0]);
        assert_eq!(pi_permutation(2, &t).unwrap().values, [2, 0, 1]);
        let p6 = pi_permutation(3, &t).unwrap();
        assert_eq!(p6.values, [7, 2, 5, 0, 3, 6, 1, 4]);
        assert_eq!(p6.to_string(), "(7 2 5 0 3 6 1 4)");
        assert!(verify_pi_arithmetic(&p6));
        assert!(verify_all_gamma(3, &t).unwrap());
    }

    #[test]
    fn rotation_conventions() {
        let s = rotation_permutation(3, Convention::PaperSketch).unwrap();
        assert_eq!(s.intermediate, [0, 5, 2, 7, 4, 1, 6, 3]);
        assert_eq!(s.values, [7, 2, 5, 0, 3, 6, 1, 4]);
        let r = rotation_permutation(3, Convention::RawOrbit).unwrap();
        assert_eq!(r.values, s.values);
        assert_eq!(
            rotation_permutation(2, Convention::PaperSketch)
                .unwrap()
                .values,
            [2, 0, 1]
        );
        assert!("bogus".parse::<Convention>().is_err());
    }
}
