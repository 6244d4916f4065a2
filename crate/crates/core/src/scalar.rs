//! The scalar abstraction every algorithm in the crate is generic over.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::rational::Rational;

/// An exact field of characteristic zero.
///
/// Elimination decides rank by testing entries against zero, so only exact
/// types may implement this; floating point is deliberately excluded.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Debug
    + Display
    + FromStr
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_i64(v: i64) -> Self;

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }

    /// `self -= a * b`
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = self.clone() - a.clone() * b.clone();
    }

    /// `self += a * b`
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = self.clone() + a.clone() * b.clone();
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    fn from_sign(sign: i32) -> Self {
        Self::from_i64(sign as i64)
    }
}

impl Field for Rational {
    fn from_i64(v: i64) -> Self {
        Rational::from_int(v)
    }

    fn inv(&self) -> Self {
        self.recip()
    }

    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        Rational::sub_mul_assign(self, a, b)
    }

    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        Rational::add_mul_assign(self, a, b)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

/// Plain arbitrary-precision rationals; slower, but useful as an
/// independent scalar for cross-checking the default one.
impl Field for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn inv(&self) -> Self {
        self.recip()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}
