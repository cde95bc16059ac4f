//! The skip function relating `beta+` to Zeckendorf words.

use serde::{Deserialize, Serialize};

use crate::arith::{floor_phi, scalar, Scalar};
use crate::error::Result;

use super::phi::PhiCounter;
use super::word::DigitWord;
use super::zeck::zeck_encode;

/// `V(k) = 3 floor(k phi) + k + 1`, the positions of the central block `00.1`.
pub fn skip_term<T: Scalar>(k: &T) -> T {
    scalar::<T>(3) * floor_phi(k) + k.clone() + T::one()
}

/// Largest `k` in `[0, hi)` with `pred(k)`, for a monotone predicate that
/// holds at 0. `hi` must fail the predicate.
fn last_true<T: Scalar>(hi: T, pred: impl Fn(&T) -> bool) -> T {
    let (mut lo, mut hi) = (T::zero(), hi);
    let two = scalar::<T>(2);
    while hi.clone() - lo.clone() > T::one() {
        let mid = (lo.clone() + hi.clone()) / two.clone();
        if pred(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// `S(N) = #{k >= 1 : V(k) < N}`.
pub fn skip_count<T: Scalar>(n: &T) -> T {
    if n <= &T::one() {
        return T::zero();
    }
    // V(k) >= 4k + 1, so every counted k is below n/4 + 1
    let hi = n.clone() / scalar::<T>(4) + scalar::<T>(2);
    last_true(hi, |k| k.is_zero() || skip_term(k) < *n)
}

/// The printed definition `max{k >= 0 : V(k) <= N} - 1`; `None` when the
/// set is empty (N = 0).
pub fn skip_count_definition<T: Scalar>(n: &T) -> Option<T> {
    if skip_term(&T::zero()) > *n {
        return None;
    }
    let hi = n.clone() / scalar::<T>(4) + scalar::<T>(2);
    Some(last_true(hi, |k| skip_term(k) <= *n) - T::one())
}

/// The variant used inside the proof: `max{k >= 0 : 3 floor(k phi) + k <= N}`.
pub fn skip_count_proof<T: Scalar>(n: &T) -> T {
    let hi = n.clone() / scalar::<T>(4) + scalar::<T>(2);
    last_true(hi, |k| scalar::<T>(3) * floor_phi(k) + k.clone() <= *n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkipDivergence {
    pub n: u64,
    pub operational: u64,
    pub definition: Option<u64>,
    pub proof: u64,
}

/// Every `N <= max_n` where one of the printed formulas differs from the
/// operational count.
pub fn skip_divergences(max_n: u64) -> Vec<SkipDivergence> {
    (0..=max_n)
        .filter_map(|n| {
            let n = n as i64;
            let operational = skip_count(&n) as u64;
            let definition = skip_count_definition(&n).map(|v| v as u64);
            let proof = skip_count_proof(&n) as u64;
            (definition != Some(operational) || proof != operational).then_some(SkipDivergence {
                n: n as u64,
                operational,
                definition,
                proof,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeckPhiMismatch {
    pub n: u64,
    pub beta_plus: DigitWord,
    pub zeck: DigitWord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeckPhiReport {
    pub max_n: u64,
    pub checked: u64,
    pub first_counterexample: Option<ZeckPhiMismatch>,
}

impl ZeckPhiReport {
    pub fn passed(&self) -> bool {
        self.first_counterexample.is_none()
    }
}

/// Checks `beta+(N) = Z(N + S(N))` for `0 <= N <= max_n`.
pub fn verify_zeckphi(max_n: u64) -> Result<ZeckPhiReport> {
    let mut counter = PhiCounter::new();
    let mut report = ZeckPhiReport {
        max_n,
        checked: 0,
        first_counterexample: None,
    };
    // S is a step function, so track it incrementally instead of searching
    let mut skips: i64 = 0;
    for n in 0..=max_n {
        if n > 0 {
            counter.increment()?;
        }
        while skip_term(&(skips + 1)) < n as i64 {
            skips += 1;
        }
        let beta_plus = counter.expansion().left().clone();
        let zeck = zeck_encode(&(n as i64 + skips))?;
        report.checked += 1;
        if beta_plus != zeck {
            report.first_counterexample = Some(ZeckPhiMismatch { n, beta_plus, zeck });
            break;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn operational_examples() {
        assert_eq!(skip_count(&5i64), 0);
        assert_eq!(skip_count(&6i64), 1);
        assert_eq!(skip_count(&13i64), 2);
        assert_eq!(skip_count(&0i64), 0);
        assert_eq!(skip_count(&BigInt::from(13)), BigInt::from(2));
    }

    #[test]
    fn skip_terms() {
        let v: Vec<i64> = (1..=3).map(|k| skip_term(&k)).collect();
        assert_eq!(v, [5, 12, 16]);
    }

    #[test]
    fn step_sizes_are_zero_or_one() {
        let mut prev = 0i64;
        for n in 0..5000i64 {
            let s = skip_count(&n);
            assert!(s == prev || s == prev + 1);
            prev = s;
        }
    }

    #[test]
    fn printed_formulas_diverge() {
        let d = skip_divergences(18);
        assert!(d.iter().any(|x| x.n == 6));
        assert!(d.iter().any(|x| x.n == 12));
    }

    #[test]
    fn zeckphi_small() {
        assert!(verify_zeckphi(0).unwrap().passed());
        let r = verify_zeckphi(2000).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.checked, 2001);
    }
}
