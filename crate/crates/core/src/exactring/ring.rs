use std::fmt::{Debug, Display};
use std::ops::{Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// Commutative ring with exact division, the scalar interface shared by the
/// determinant engines and the series arithmetic.
pub trait Ring:
    Clone + Eq + Debug + Display + Send + Sync + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    fn from_i64(v: i64) -> Self;

    fn add_ref(&self, rhs: &Self) -> Self;

    fn sub_ref(&self, rhs: &Self) -> Self;

    fn mul_ref(&self, rhs: &Self) -> Self;

    /// Quotient `self / divisor`, failing unless the remainder vanishes.
    fn exact_div(&self, divisor: &Self) -> Result<Self>;

    /// Inverse of `self` when it is `+1` or `-1`.
    fn unit_inverse(&self) -> Option<Self>;

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

impl Ring for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (quot, rem) = self.div_rem(divisor);
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::InexactDivision {
                dividend: self.to_string(),
                divisor: divisor.to_string(),
            })
        }
    }

    fn unit_inverse(&self) -> Option<Self> {
        (self.abs().is_one()).then(|| self.clone())
    }
}

/// Sign `(-1)^e`.
pub fn sign_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `C(m, 2) = m(m-1)/2`, extended to negative `m`.
pub fn choose2(m: i64) -> i64 {
    m * (m - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_exact_division() {
        let a = BigInt::from(84);
        assert_eq!(a.exact_div(&BigInt::from(-7)).unwrap(), BigInt::from(-12));
        assert!(matches!(
            a.exact_div(&BigInt::from(5)),
            Err(Error::InexactDivision { .. })
        ));
        assert_eq!(a.exact_div(&BigInt::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn integer_units() {
        assert_eq!(BigInt::from(-1).unit_inverse(), Some(BigInt::from(-1)));
        assert_eq!(BigInt::from(2).unit_inverse(), None);
        assert_eq!(BigInt::zero().unit_inverse(), None);
    }

    #[test]
    fn pow_by_squaring() {
        assert_eq!(Ring::pow(&BigInt::from(3), 0), BigInt::one());
        assert_eq!(Ring::pow(&BigInt::from(-2), 7), BigInt::from(-128));
    }

    #[test]
    fn choose2_negative_arguments() {
        assert_eq!(choose2(-1), 1);
        assert_eq!(choose2(-2), 3);
        assert_eq!(choose2(0), 0);
        assert_eq!(choose2(1), 0);
        assert_eq!(choose2(4), 6);
    }
}
