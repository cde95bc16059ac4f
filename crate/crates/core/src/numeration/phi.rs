//! Base-phi expansions: canonical form, carry normalization, add-one and the
//! two decoding paths.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{fib_signed, lucas_signed, scalar, QuadInt, Scalar};
use crate::error::{precondition, Error, Result};

use super::word::DigitWord;

/// Admissible base-phi expansion `beta+ . beta-` of a natural number.
///
/// `left` holds `d_L .. d_0` and `right` holds `d_{-1} .. d_R`. The empty
/// expansion represents zero.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct PhiExpansion {
    left: DigitWord,
    right: DigitWord,
}

impl PhiExpansion {
    /// Validates admissibility (also across the radix point) and the
    /// canonical trimming of both sides.
    pub fn new(left: DigitWord, right: DigitWord) -> Result<Self> {
        let e = PhiExpansion { left, right };
        let shown = e.to_string();
        if !e.left.is_admissible() || !e.right.is_admissible() {
            return Err(Error::Inadmissible(shown));
        }
        if e.left.last() == Some(1) && e.right.first() == Some(1) {
            return Err(Error::Inadmissible(shown));
        }
        if e.left.first() == Some(0) {
            return Err(Error::NonCanonical(shown, "leading zero"));
        }
        if e.right.last() == Some(0) {
            return Err(Error::NonCanonical(shown, "trailing zero"));
        }
        Ok(e)
    }

    pub fn zero() -> Self {
        PhiExpansion::default()
    }

    pub fn left(&self) -> &DigitWord {
        &self.left
    }

    pub fn right(&self) -> &DigitWord {
        &self.right
    }

    /// Digit at exponent `i`, zero outside the written range.
    pub fn digit(&self, i: i64) -> u8 {
        if i >= 0 {
            let i = i as usize;
            let n = self.left.len();
            if i < n {
                self.left.digits()[n - 1 - i]
            } else {
                0
            }
        } else {
            let k = (-i - 1) as usize;
            self.right.digits().get(k).copied().unwrap_or(0)
        }
    }

    /// Central block `d_{k-1} .. d_0 . d_{-1} .. d_{-j}`, zero padded.
    pub fn central(&self, k: usize, j: usize) -> (DigitWord, DigitWord) {
        (self.left.suffix_padded(k), self.right.prefix_padded(j))
    }

    /// `2 * value` as an element of `Z[sqrt 5]`.
    pub fn value_doubled<T: Scalar>(&self) -> QuadInt<T> {
        let (exact, _) = doubled_values(&self.left, &self.right);
        exact
    }

    /// Exponent range `(L, R)`: leftmost and rightmost written exponents.
    pub fn shape(&self) -> (i64, i64) {
        (self.left.len() as i64 - 1, -(self.right.len() as i64))
    }
}

impl fmt::Display for PhiExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.left.is_empty() && self.right.is_empty() {
            return write!(f, "0.");
        }
        write!(f, "{}.{}", self.left, self.right)
    }
}

impl fmt::Debug for PhiExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PhiExpansion({self})")
    }
}

fn split_point(s: &str) -> Result<(DigitWord, DigitWord)> {
    let mut parts = s.splitn(2, '.');
    let left: DigitWord = parts.next().unwrap_or("").parse()?;
    let right: DigitWord = parts.next().unwrap_or("").parse()?;
    Ok((left, right))
}

impl FromStr for PhiExpansion {
    type Err = Error;

    /// Parses `"1000.1001"`; the radix point is optional and `"0."` is zero.
    fn from_str(s: &str) -> Result<Self> {
        let (left, right) = split_point(s)?;
        if left.digits() == [0] && right.is_empty() {
            return Ok(PhiExpansion::zero());
        }
        PhiExpansion::new(left, right)
    }
}

impl From<PhiExpansion> for String {
    fn from(e: PhiExpansion) -> String {
        e.to_string()
    }
}

impl TryFrom<String> for PhiExpansion {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Unnormalized expansion: any digits, any zero padding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawExpansion {
    pub left: DigitWord,
    pub right: DigitWord,
}

impl RawExpansion {
    pub fn new(left: DigitWord, right: DigitWord) -> Self {
        RawExpansion { left, right }
    }

    pub fn value_doubled<T: Scalar>(&self) -> QuadInt<T> {
        doubled_values(&self.left, &self.right).0
    }
}

impl From<&PhiExpansion> for RawExpansion {
    fn from(e: &PhiExpansion) -> Self {
        RawExpansion::new(e.left.clone(), e.right.clone())
    }
}

impl FromStr for RawExpansion {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (left, right) = split_point(s)?;
        Ok(RawExpansion::new(left, right))
    }
}

impl fmt::Display for RawExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.left, self.right)
    }
}

/// Doubled exact value of the whole word and of its left part alone.
///
/// Walks exponents upward from the lowest one, carrying `(L_e, F_e)` pairs
/// so that each power costs one addition.
fn doubled_values<T: Scalar>(left: &DigitWord, right: &DigitWord) -> (QuadInt<T>, QuadInt<T>) {
    let low = -(right.len() as i64);
    let mut l: (T, T) = (lucas_signed(low), lucas_signed(low + 1));
    let mut f: (T, T) = (fib_signed(low), fib_signed(low + 1));
    let mut exact = QuadInt::zero();
    let mut positive = QuadInt::zero();
    let digits = right
        .digits()
        .iter()
        .rev()
        .chain(left.digits().iter().rev());
    for (k, &d) in digits.enumerate() {
        let e = low + k as i64;
        if d != 0 {
            let term = QuadInt::new(
                scalar::<T>(d as i64) * l.0.clone(),
                scalar::<T>(d as i64) * f.0.clone(),
            );
            if e >= 0 {
                positive = positive + term.clone();
            }
            exact = exact + term;
        }
        l = (l.1.clone(), l.0 + l.1);
        f = (f.1.clone(), f.0 + f.1);
    }
    (exact, positive)
}

/// Digit register indexed by exponent, used by the rewriting engine.
#[derive(Clone, Debug)]
struct Register {
    // digit at exponent e is digits[e - low]
    digits: Vec<u32>,
    low: i64,
}

impl Register {
    fn from_words(left: &DigitWord, right: &DigitWord) -> Self {
        let mut digits: Vec<u32> = right.digits().iter().rev().map(|&d| d as u32).collect();
        digits.extend(left.digits().iter().rev().map(|&d| d as u32));
        Register {
            digits,
            low: -(right.len() as i64),
        }
    }

    fn high(&self) -> i64 {
        self.low + self.digits.len() as i64 - 1
    }

    fn get(&self, e: i64) -> u32 {
        if e < self.low {
            return 0;
        }
        self.digits
            .get((e - self.low) as usize)
            .copied()
            .unwrap_or(0)
    }

    fn slot(&mut self, e: i64) -> &mut u32 {
        if e < self.low {
            let k = (self.low - e) as usize;
            self.digits.splice(0..0, std::iter::repeat_n(0, k));
            self.low = e;
        }
        let idx = (e - self.low) as usize;
        if idx >= self.digits.len() {
            self.digits.resize(idx + 1, 0);
        }
        &mut self.digits[idx]
    }

    /// Rewrites to the admissible form with the same value.
    ///
    /// Each pass sweeps from the most significant exponent down, first
    /// resolving digits >= 2 by the double carry `2 phi^e = phi^{e+1} +
    /// phi^{e-2}`, then applying golden mean shifts `011 -> 100`. Passes
    /// repeat until nothing changes.
    fn normalize(&mut self) -> Result<()> {
        let cap = 10_000 + 100 * self.digits.len();
        for _ in 0..cap {
            let mut changed = false;
            let mut e = self.high();
            while e >= self.low {
                let d = self.get(e);
                if d >= 2 {
                    let k = d / 2;
                    *self.slot(e) = d % 2;
                    *self.slot(e + 1) += k;
                    *self.slot(e - 2) += k;
                    changed = true;
                }
                e -= 1;
            }
            let mut e = self.high() - 1;
            while e >= self.low {
                if self.get(e + 2) == 0 && self.get(e + 1) >= 1 && self.get(e) >= 1 {
                    *self.slot(e + 1) -= 1;
                    *self.slot(e) -= 1;
                    *self.slot(e + 2) += 1;
                    changed = true;
                }
                e -= 1;
            }
            if !changed {
                return Ok(());
            }
        }
        Err(Error::NormalizeDiverged(cap))
    }

    fn to_expansion(&self) -> PhiExpansion {
        let mut left = Vec::new();
        let top = self.high().max(0);
        for e in (0..=top).rev() {
            let d = self.get(e) as u8;
            if left.is_empty() && d == 0 {
                continue;
            }
            left.push(d);
        }
        let mut right: Vec<u8> = (self.low.min(-1)..0)
            .rev()
            .map(|e| self.get(e) as u8)
            .collect();
        while right.last() == Some(&0) {
            right.pop();
        }
        PhiExpansion {
            left: DigitWord::new(left),
            right: DigitWord::new(right),
        }
    }

    fn packed(&self) -> Option<PackedExpansion> {
        let mut p = PackedExpansion::default();
        for e in self.low..=self.high() {
            let d = self.get(e);
            if d == 0 {
                continue;
            }
            if e >= 0 {
                if e >= 64 {
                    return None;
                }
                p.left_bits |= 1 << e;
                p.left_len = p.left_len.max(e as u8 + 1);
            } else {
                let k = (-e) as u32;
                if k > 64 {
                    return None;
                }
                p.right_bits |= 1 << (k - 1);
                p.right_len = p.right_len.max(k as u8);
            }
        }
        Some(p)
    }
}

/// Bit-packed admissible expansion: bit `i` of `left_bits` is `d_i`, bit
/// `k - 1` of `right_bits` is `d_{-k}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct PackedExpansion {
    pub left_bits: u64,
    pub right_bits: u64,
    pub left_len: u8,
    pub right_len: u8,
}

impl PackedExpansion {
    pub fn unpack(&self) -> PhiExpansion {
        let left = (0..self.left_len)
            .rev()
            .map(|i| ((self.left_bits >> i) & 1) as u8)
            .collect();
        let right = (0..self.right_len)
            .map(|k| ((self.right_bits >> k) & 1) as u8)
            .collect();
        PhiExpansion {
            left: DigitWord::new(left),
            right: DigitWord::new(right),
        }
    }
}

/// Rewrites a raw expansion (digits of any size) into the admissible
/// expansion of the same exact value.
pub fn normalize(raw: &RawExpansion) -> Result<PhiExpansion> {
    let mut reg = Register::from_words(&raw.left, &raw.right);
    reg.normalize()?;
    Ok(reg.to_expansion())
}

/// `beta(N) -> beta(N + 1)`: raw increment of `d_0`, then normalization.
pub fn phi_add_one(e: &PhiExpansion) -> Result<PhiExpansion> {
    let mut reg = Register::from_words(&e.left, &e.right);
    *reg.slot(0) += 1;
    reg.normalize()?;
    Ok(reg.to_expansion())
}

/// Sequential generator of `beta(0), beta(1), ...` by repeated add-one.
#[derive(Clone, Debug)]
pub struct PhiCounter {
    reg: Register,
    n: u64,
}

impl PhiCounter {
    pub fn new() -> Self {
        PhiCounter {
            reg: Register {
                digits: vec![0],
                low: 0,
            },
            n: 0,
        }
    }

    /// Resumes counting from a known expansion of `n`.
    pub fn starting_at(e: &PhiExpansion, n: u64) -> Self {
        PhiCounter {
            reg: Register::from_words(&e.left, &e.right),
            n,
        }
    }

    pub fn value(&self) -> u64 {
        self.n
    }

    pub fn increment(&mut self) -> Result<()> {
        *self.reg.slot(0) += 1;
        self.reg.normalize()?;
        self.n += 1;
        Ok(())
    }

    pub fn expansion(&self) -> PhiExpansion {
        self.reg.to_expansion()
    }

    pub fn packed(&self) -> Result<PackedExpansion> {
        self.reg.packed().ok_or(Error::TableOverflow(self.n))
    }
}

impl Default for PhiCounter {
    fn default() -> Self {
        PhiCounter::new()
    }
}

/// Reference encoder: `n` add-one steps from the empty expansion.
pub fn phi_encode(n: u64) -> Result<PhiExpansion> {
    let mut c = PhiCounter::new();
    for _ in 0..n {
        c.increment()?;
    }
    Ok(c.expansion())
}

/// Both decoding routes for an admissible expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodePaths<T> {
    /// Exact evaluation of the whole word.
    pub exact: T,
    /// Ceiling of the positive part alone.
    pub ceiling: T,
}

pub fn phi_decode_paths<T: Scalar>(e: &PhiExpansion) -> Result<DecodePaths<T>> {
    let (exact, positive) = doubled_values::<T>(&e.left, &e.right);
    let two = scalar::<T>(2);
    if !exact.b.is_zero() || !exact.a.is_even() || exact.a.is_negative() {
        return Err(Error::NonIntegerValue(e.to_string()));
    }
    Ok(DecodePaths {
        exact: exact.a / two,
        ceiling: positive.ceil_half(),
    })
}

/// Decodes via exact evaluation and cross-checks `N = ceil(beta+(N))`.
pub fn phi_decode<T: Scalar>(e: &PhiExpansion) -> Result<T> {
    let paths = phi_decode_paths::<T>(e)?;
    if paths.exact != paths.ceiling {
        return Err(Error::CeilingMismatch {
            word: e.to_string(),
            exact: paths.exact.to_string(),
            ceiling: paths.ceiling.to_string(),
        });
    }
    Ok(paths.exact)
}

/// `gamma-(N)`: the negative part with its final `01` removed.
pub fn gamma_minus(e: &PhiExpansion) -> Result<DigitWord> {
    if e.right.is_empty() {
        return precondition(format!("gamma- is undefined for {e} (N < 2)"));
    }
    e.right.cancel_suffix("01")
}

/// `(beta+, beta-, gamma-)`; `gamma-` is `None` for N < 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaParts {
    pub positive: DigitWord,
    pub negative: DigitWord,
    pub gamma: Option<DigitWord>,
}

pub fn beta_parts(e: &PhiExpansion) -> Result<BetaParts> {
    let gamma = if e.right.is_empty() {
        None
    } else {
        Some(gamma_minus(e)?)
    };
    Ok(BetaParts {
        positive: e.left.clone(),
        negative: e.right.clone(),
        gamma,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> PhiExpansion {
        s.parse().unwrap()
    }

    #[test]
    fn worked_carry_example() {
        let raw: RawExpansion = "102.01".parse().unwrap();
        assert_eq!(normalize(&raw).unwrap(), e("1000.1001"));
        let raw: RawExpansion = "110.02".parse().unwrap();
        assert_eq!(normalize(&raw).unwrap(), e("1000.1001"));
    }

    #[test]
    fn admissible_input_is_a_fixpoint() {
        let raw: RawExpansion = "1.".parse().unwrap();
        assert_eq!(normalize(&raw).unwrap(), e("1."));
        let raw: RawExpansion = "00101.0100".parse().unwrap();
        assert_eq!(normalize(&raw).unwrap(), e("101.01"));
    }

    #[test]
    fn double_two_preserves_value() {
        let raw: RawExpansion = "0200.".parse().unwrap();
        let out = normalize(&raw).unwrap();
        assert_eq!(out.value_doubled::<i64>(), raw.value_doubled::<i64>());
        assert!(out.left().is_admissible() && out.right().is_admissible());
    }

    #[test]
    fn add_one_examples() {
        assert_eq!(phi_add_one(&e("101.01")).unwrap(), e("1000.1001"));
        assert_eq!(phi_add_one(&e("1.")).unwrap(), e("10.01"));
        assert_eq!(
            phi_add_one(&e("101000.100001")).unwrap(),
            e("101010.000001")
        );
        assert_eq!(phi_add_one(&PhiExpansion::zero()).unwrap(), e("1."));
    }

    #[test]
    fn encode_examples() {
        assert_eq!(phi_encode(2).unwrap(), e("10.01"));
        assert_eq!(phi_encode(18).unwrap(), e("1000000.000001"));
        assert_eq!(phi_encode(0).unwrap(), PhiExpansion::zero());
    }

    #[test]
    fn decode_examples() {
        assert_eq!(phi_decode::<i64>(&e("1000.1001")).unwrap(), 5);
        assert_eq!(phi_decode::<i64>(&e("10.01")).unwrap(), 2);
        let only_positive = PhiExpansion::new("1000".parse().unwrap(), DigitWord::empty()).unwrap();
        // phi^3 ~ 4.236 is not an integer, but its ceiling is 5
        assert!(phi_decode::<i64>(&only_positive).is_err());
        let paths = phi_decode_paths::<i64>(&e("1000.1001")).unwrap();
        assert_eq!(paths.ceiling, 5);
        assert_eq!(phi_decode::<i64>(&PhiExpansion::zero()).unwrap(), 0);
    }

    #[test]
    fn canonical_form_is_enforced() {
        assert!("0110.01".parse::<PhiExpansion>().is_err());
        assert!("01.01".parse::<PhiExpansion>().is_err());
        assert!("10.010".parse::<PhiExpansion>().is_err());
        assert!("1.1".parse::<PhiExpansion>().is_err());
        assert!("10.2".parse::<PhiExpansion>().is_err());
        assert_eq!("0.".parse::<PhiExpansion>().unwrap(), PhiExpansion::zero());
        assert_eq!(PhiExpansion::zero().to_string(), "0.");
    }

    #[test]
    fn gamma_parts() {
        let p = beta_parts(&e("100000.101001")).unwrap();
        assert_eq!(p.gamma.unwrap().to_string(), "1010");
        assert_eq!(gamma_minus(&e("1000.1001")).unwrap().to_string(), "10");
        assert_eq!(gamma_minus(&e("10.01")).unwrap(), DigitWord::empty());
        assert!(gamma_minus(&e("1.")).is_err());
        assert_eq!(beta_parts(&e("1.")).unwrap().gamma, None);
    }

    #[test]
    fn counter_packing_round_trips() {
        let mut c = PhiCounter::new();
        for _ in 0..300 {
            c.increment().unwrap();
            assert_eq!(c.packed().unwrap().unpack(), c.expansion());
        }
    }

    #[test]
    fn digit_access() {
        let x = e("100000.101001");
        assert_eq!(x.digit(5), 1);
        assert_eq!(x.digit(0), 0);
        assert_eq!(x.digit(-1), 1);
        assert_eq!(x.digit(-6), 1);
        assert_eq!(x.digit(-7), 0);
        assert_eq!(x.digit(9), 0);
        assert_eq!(x.shape(), (5, -6));
    }
}
