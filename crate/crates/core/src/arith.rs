//! Exact integer and `Z[sqrt 5]` arithmetic.
//!
//! Everything here is generic over a signed integer scalar. `i64` and `i128`
//! are convenient for bounded scans, [`num_bigint::BigInt`] is the default for
//! anything whose magnitude is not known in advance. No floating point is
//! used anywhere: floors, ceilings and orderings of irrational quantities are
//! decided by integer comparisons.

use std::cmp::Ordering;
use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{precondition, Result};

/// Signed integer type usable as the scalar of every exact computation.
pub trait Scalar:
    Integer
    + Signed
    + Clone
    + Debug
    + Display
    + FromPrimitive
    + ToPrimitive
    + Hash
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + FromPrimitive
        + ToPrimitive
        + Hash
        + Send
        + Sync
        + 'static
{
}

/// Converts a small constant into the scalar type.
///
/// Panics if the scalar is too narrow, which only happens for machine
/// integers used beyond their documented range.
pub fn scalar<T: Scalar>(v: i64) -> T {
    T::from_i64(v).unwrap_or_else(|| panic!("{v} does not fit the scalar type"))
}

pub fn scalar_u64<T: Scalar>(v: u64) -> T {
    T::from_u64(v).unwrap_or_else(|| panic!("{v} does not fit the scalar type"))
}

/// Integer square root: the unique `k` with `k^2 <= n < (k+1)^2`.
///
/// Starts from a power of two above the root and runs Newton's iteration
/// downwards, which is monotone for integer division.
pub fn isqrt<T: Scalar>(n: &T) -> T {
    assert!(!n.is_negative(), "isqrt of a negative number");
    if n.is_zero() {
        return T::zero();
    }
    let two = scalar::<T>(2);
    let mut x = T::one();
    while x.clone() * x.clone() <= *n {
        x = x * two.clone();
    }
    loop {
        let y = (x.clone() + n.clone() / x.clone()) / two.clone();
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// `floor(n * phi)` computed as `floor((n + isqrt(5 n^2)) / 2)`.
pub fn floor_phi<T: Scalar>(n: &T) -> T {
    assert!(!n.is_negative(), "floor_phi expects a natural number");
    let five = scalar::<T>(5);
    let root = isqrt(&(five * n.clone() * n.clone()));
    (n.clone() + root).div_floor(&scalar(2))
}

/// Exact element `a + b sqrt(5)` of `Z[sqrt 5]`.
///
/// Half-integers such as `phi = (1 + sqrt 5) / 2` are handled by callers
/// working with doubled values; see [`QuadInt::floor_half`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadInt<T> {
    pub a: T,
    pub b: T,
}

impl<T: Scalar> QuadInt<T> {
    pub fn new(a: T, b: T) -> Self {
        QuadInt { a, b }
    }

    pub fn zero() -> Self {
        QuadInt::new(T::zero(), T::zero())
    }

    pub fn from_int(a: T) -> Self {
        QuadInt::new(a, T::zero())
    }

    /// `2 phi^e = L_e + F_e sqrt 5`, valid for every integer exponent.
    pub fn doubled_phi_power(e: i64) -> Self {
        QuadInt::new(lucas_signed(e), fib_signed(e))
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Exact sign, decided by comparing `a^2` with `5 b^2` when the signs of
    /// the two parts differ.
    pub fn signum(&self) -> Ordering {
        let zero = T::zero();
        let sa = self.a.cmp(&zero);
        let sb = self.b.cmp(&zero);
        match (sa, sb) {
            (s, Ordering::Equal) => s,
            (Ordering::Equal, s) => s,
            (x, y) if x == y => x,
            _ => {
                let a2 = self.a.clone() * self.a.clone();
                let b2 = scalar::<T>(5) * self.b.clone() * self.b.clone();
                if sa == Ordering::Greater {
                    a2.cmp(&b2)
                } else {
                    b2.cmp(&a2)
                }
            }
        }
    }

    /// `floor(b sqrt 5)`; exact because `b sqrt 5` is irrational for `b != 0`.
    fn floor_surd(&self) -> T {
        let five = scalar::<T>(5);
        let root = isqrt(&(five * self.b.clone() * self.b.clone()));
        if self.b.is_negative() {
            -root - T::one()
        } else {
            root
        }
    }

    /// `floor((a + b sqrt 5) / 2)`.
    pub fn floor_half(&self) -> T {
        let two = scalar::<T>(2);
        if self.b.is_zero() {
            return self.a.div_floor(&two);
        }
        (self.a.clone() + self.floor_surd()).div_floor(&two)
    }

    /// `ceil((a + b sqrt 5) / 2)`.
    pub fn ceil_half(&self) -> T {
        let two = scalar::<T>(2);
        if self.b.is_zero() {
            return self.a.div_ceil(&two);
        }
        self.floor_half() + T::one()
    }
}

impl<T: Scalar> Add for QuadInt<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        QuadInt::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl<T: Scalar> Sub for QuadInt<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        QuadInt::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl<T: Scalar> Neg for QuadInt<T> {
    type Output = Self;
    fn neg(self) -> Self {
        QuadInt::new(-self.a, -self.b)
    }
}

impl<T: Scalar> Mul for QuadInt<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let five = scalar::<T>(5);
        QuadInt::new(
            self.a.clone() * rhs.a.clone() + five * self.b.clone() * rhs.b.clone(),
            self.a * rhs.b + self.b * rhs.a,
        )
    }
}

impl<T: Scalar> Display for QuadInt<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt5", self.a, self.b)
    }
}

/// Orders the fractional parts `{i phi}` and `{j phi}`.
///
/// `{i phi} - {j phi} = (i - j) phi - (floor(i phi) - floor(j phi))`; doubled,
/// this is an element of `Z[sqrt 5]` whose sign is decided exactly. Equal
/// arguments are rejected since distinct multiples of an irrational never
/// share a fractional part.
pub fn frac_phi_compare<T: Scalar>(i: &T, j: &T) -> Result<Ordering> {
    if i == j {
        return precondition(format!(
            "frac_phi_compare needs distinct arguments, got {i} twice"
        ));
    }
    if !i.is_positive() || !j.is_positive() {
        return precondition("frac_phi_compare expects positive integers");
    }
    let d = i.clone() - j.clone();
    let floors = floor_phi(i) - floor_phi(j);
    let diff = QuadInt::new(d.clone() - scalar::<T>(2) * floors, d);
    Ok(diff.signum())
}

/// Fibonacci number `F_n` with `F_0 = 0`, `F_1 = 1`.
pub fn fib<T: Scalar>(n: usize) -> T {
    let (mut a, mut b) = (T::zero(), T::one());
    for _ in 0..n {
        let next = a.clone() + b.clone();
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Lucas number `L_n` with `L_0 = 2`, `L_1 = 1`.
pub fn lucas<T: Scalar>(n: usize) -> T {
    let (mut a, mut b) = (scalar::<T>(2), T::one());
    for _ in 0..n {
        let next = a.clone() + b.clone();
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `F_n` extended to negative indices by `F_{-k} = (-1)^{k+1} F_k`.
pub fn fib_signed<T: Scalar>(n: i64) -> T {
    let k = n.unsigned_abs() as usize;
    let v = fib::<T>(k);
    if n < 0 && k.is_multiple_of(2) {
        -v
    } else {
        v
    }
}

/// `L_n` extended to negative indices by `L_{-k} = (-1)^k L_k`.
pub fn lucas_signed<T: Scalar>(n: i64) -> T {
    let k = n.unsigned_abs() as usize;
    let v = lucas::<T>(k);
    if n < 0 && k % 2 == 1 {
        -v
    } else {
        v
    }
}

/// Precomputed Fibonacci and Lucas tables, read-only after construction.
#[derive(Clone, Debug)]
pub struct FibCache<T> {
    fib: Vec<T>,
    lucas: Vec<T>,
}

impl<T: Scalar> FibCache<T> {
    /// Tables covering indices `0..=max_index` (plus two for the shifted view).
    pub fn new(max_index: usize) -> Self {
        let len = max_index + 3;
        let mut fib = Vec::with_capacity(len);
        let mut lucas = Vec::with_capacity(len);
        fib.extend([T::zero(), T::one()]);
        lucas.extend([scalar::<T>(2), T::one()]);
        for i in 2..len {
            fib.push(fib[i - 1].clone() + fib[i - 2].clone());
            lucas.push(lucas[i - 1].clone() + lucas[i - 2].clone());
        }
        FibCache { fib, lucas }
    }

    pub fn max_index(&self) -> usize {
        self.fib.len() - 3
    }

    pub fn fib(&self, n: usize) -> &T {
        &self.fib[n]
    }

    pub fn lucas(&self, n: usize) -> &T {
        &self.lucas[n]
    }

    /// Twice shifted Fibonacci number `F_{n+2}`: 1, 2, 3, 5, 8, ...
    pub fn shifted(&self, n: usize) -> &T {
        &self.fib[n + 2]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn isqrt_small_values() {
        assert_eq!(isqrt(&0i64), 0);
        assert_eq!(isqrt(&1i64), 1);
        assert_eq!(isqrt(&80i64), 8);
        assert_eq!(isqrt(&81i64), 9);
        for n in 0i64..5000 {
            let k = isqrt(&n);
            assert!(k * k <= n && (k + 1) * (k + 1) > n, "n = {n}");
        }
    }

    #[test]
    fn floor_phi_seed_values() {
        assert_eq!(floor_phi(&1i64), 1);
        assert_eq!(floor_phi(&2i64), 3);
        assert_eq!(floor_phi(&3i64), 4);
        assert_eq!(floor_phi(&0i64), 0);
    }

    #[test]
    fn lucas_list_and_seeds() {
        let expect = [2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123, 199, 322];
        for (i, &l) in expect.iter().enumerate() {
            assert_eq!(lucas::<i64>(i), l);
        }
        assert_eq!(fib::<i64>(0), 0);
        assert_eq!(fib::<i64>(1), 1);
        assert_eq!(lucas::<i64>(6), 18);
        assert_eq!(lucas::<i64>(12), 322);
    }

    #[test]
    fn negative_indices() {
        // F_{-1} = 1, F_{-2} = -1, L_{-1} = -1, L_{-2} = 3
        assert_eq!(fib_signed::<i64>(-1), 1);
        assert_eq!(fib_signed::<i64>(-2), -1);
        assert_eq!(lucas_signed::<i64>(-1), -1);
        assert_eq!(lucas_signed::<i64>(-2), 3);
        // phi^-1 + phi^-2 = 1, doubled: 2
        let s = QuadInt::<i64>::doubled_phi_power(-1) + QuadInt::doubled_phi_power(-2);
        assert_eq!(s, QuadInt::new(2, 0));
    }

    #[test]
    fn lucas_exceeds_u64_without_overflow() {
        let l: BigInt = lucas(100);
        assert!(l > BigInt::from(u64::MAX));
        let c = FibCache::<BigInt>::new(100);
        assert_eq!(*c.lucas(100), l);
        assert_eq!(c.lucas(100).clone(), c.fib(99).clone() + c.fib(101).clone());
    }

    #[test]
    fn signum_cases() {
        assert_eq!(QuadInt::new(3i64, -1).signum(), Ordering::Greater); // 3 > 2.236
        assert_eq!(QuadInt::new(2i64, -1).signum(), Ordering::Less);
        assert_eq!(QuadInt::new(-3i64, 1).signum(), Ordering::Less);
        assert_eq!(QuadInt::new(-2i64, 1).signum(), Ordering::Greater);
        assert_eq!(QuadInt::new(0i64, 0).signum(), Ordering::Equal);
    }

    #[test]
    fn floor_and_ceil_half() {
        // phi = (1 + sqrt5)/2 ~ 1.618
        let phi = QuadInt::new(1i64, 1);
        assert_eq!(phi.floor_half(), 1);
        assert_eq!(phi.ceil_half(), 2);
        // tau = (1 - sqrt5)/2 ~ -0.618
        let tau = QuadInt::new(1i64, -1);
        assert_eq!(tau.floor_half(), -1);
        assert_eq!(tau.ceil_half(), 0);
        assert_eq!(QuadInt::new(7i64, 0).floor_half(), 3);
        assert_eq!(QuadInt::new(7i64, 0).ceil_half(), 4);
    }

    #[test]
    fn frac_compare_examples() {
        assert_eq!(frac_phi_compare(&1i64, &2).unwrap(), Ordering::Greater);
        assert_eq!(frac_phi_compare(&5i64, &2).unwrap(), Ordering::Less);
        assert!(frac_phi_compare(&4i64, &4).is_err());
    }

    #[test]
    fn mul_matches_definition() {
        let x = QuadInt::new(1i64, 1);
        // (1 + s)^2 = 6 + 2s
        assert_eq!(x.clone() * x, QuadInt::new(6, 2));
    }
}
