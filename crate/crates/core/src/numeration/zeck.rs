//! Zeckendorf codec over the twice shifted Fibonacci numbers 1, 2, 3, 5, 8, ...

use crate::arith::{scalar, Scalar};
use crate::error::{precondition, Result};

use super::word::DigitWord;

/// Greedy Zeckendorf expansion of `n`; the empty word for zero.
pub fn zeck_encode<T: Scalar>(n: &T) -> Result<DigitWord> {
    if n.is_negative() {
        return precondition(format!("zeck_encode expects a natural number, got {n}"));
    }
    // shifted[i] = F_{i+2}
    let mut shifted: Vec<T> = vec![T::one(), scalar(2)];
    while shifted.last().unwrap() <= n {
        let k = shifted.len();
        let next = shifted[k - 1].clone() + shifted[k - 2].clone();
        shifted.push(next);
    }
    let mut rest = n.clone();
    let mut digits = Vec::with_capacity(shifted.len());
    for f in shifted.iter().rev() {
        if *f <= rest {
            rest = rest - f.clone();
            digits.push(1);
        } else {
            digits.push(0);
        }
    }
    Ok(DigitWord::new(digits).strip_leading_zeros())
}

/// Value of an admissible word; leading zeros are ignored.
pub fn zeck_decode<T: Scalar>(w: &DigitWord) -> Result<T> {
    w.check_admissible()?;
    let (mut lo, mut hi) = (T::one(), scalar::<T>(2));
    let mut total = T::zero();
    for &d in w.digits().iter().rev() {
        if d == 1 {
            total = total + lo.clone();
        }
        let next = lo + hi.clone();
        lo = std::mem::replace(&mut hi, next);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn w(s: &str) -> DigitWord {
        s.parse().unwrap()
    }

    #[test]
    fn table_values() {
        let table = [
            (1, "1"),
            (2, "10"),
            (3, "100"),
            (4, "101"),
            (5, "1000"),
            (9, "10001"),
            (12, "10101"),
            (17, "100101"),
            (18, "101000"),
        ];
        for (n, z) in table {
            assert_eq!(zeck_encode(&{ n }).unwrap(), w(z), "n = {n}");
            assert_eq!(zeck_decode::<i64>(&w(z)).unwrap(), n);
        }
    }

    #[test]
    fn edge_cases() {
        assert_eq!(zeck_encode(&0i64).unwrap(), DigitWord::empty());
        assert_eq!(zeck_decode::<i64>(&DigitWord::empty()).unwrap(), 0);
        assert_eq!(zeck_decode::<i64>(&w("0000010001")).unwrap(), 9);
        assert!(zeck_decode::<i64>(&w("0110")).is_err());
        assert!(zeck_decode::<i64>(&w("120")).is_err());
        assert!(zeck_encode(&-1i64).is_err());
    }

    #[test]
    fn big_values_round_trip() {
        let n: BigInt = "123456789012345678901234567890".parse().unwrap();
        let z = zeck_encode(&n).unwrap();
        assert!(z.is_admissible());
        assert_eq!(zeck_decode::<BigInt>(&z).unwrap(), n);
    }
}
