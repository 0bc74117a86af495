//! Exact integer scalars used as Burnside-ring coefficients.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact signed integer type: `i64`, `i128` or `num_bigint::BigInt`.
/// Divisions that must be exact go through [`exact_div`].
pub trait Scalar:
    Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count fits in scalar")
    }

    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("i64 fits in scalar")
    }
}

impl<T> Scalar for T where
    T: Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

/// `num / den` if `den` divides `num`, `None` otherwise (or when `den` is zero).
pub fn exact_div<T: Scalar>(num: &T, den: &T) -> Option<T> {
    if den.is_zero() {
        return None;
    }
    let (q, r) = num.div_rem(den);
    r.is_zero().then_some(q)
}

/// `(-1)^e` as a scalar.
pub fn sign_power<T: Scalar>(e: i64) -> T {
    if e.rem_euclid(2) == 0 {
        T::one()
    } else {
        -T::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn exact_division() {
        assert_eq!(exact_div(&12i64, &4), Some(3));
        assert_eq!(exact_div(&-12i64, &4), Some(-3));
        assert_eq!(exact_div(&13i64, &4), None);
        assert_eq!(exact_div(&13i64, &0), None);
        let big = BigInt::from(1i64 << 40) * BigInt::from(6);
        assert_eq!(exact_div(&big, &BigInt::from(3)), Some(BigInt::from(1i64 << 41)));
    }

    #[test]
    fn signs() {
        assert_eq!(sign_power::<i64>(0), 1);
        assert_eq!(sign_power::<i64>(3), -1);
        assert_eq!(sign_power::<i64>(-1), -1);
        assert_eq!(sign_power::<i64>(-2), 1);
    }
}
