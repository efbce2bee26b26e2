//! The scalar trait for series and matrix coefficients.
//!
//! All algebra in this crate is written against [`Coeff`], a field-like
//! scalar built from the `num-traits` vocabulary. The shipped instantiation
//! is [`crate::Rat`] (arbitrary-precision rationals), for which every
//! operation is exact; `f32`/`f64` also satisfy the trait for approximate
//! use.

use std::fmt::{Debug, Display};
use std::ops::{Div, Neg, Sub};

use num_traits::{FromPrimitive, One, Zero};

use crate::Rat;

/// Minimum requirements on coefficients: field arithmetic, an embedding of
/// the small integers, and exact integer detection.
pub trait Coeff:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
    + FromPrimitive
{
    /// Returns `Some(m)` when the value equals the integer `m` exactly.
    fn as_integer(&self) -> Option<i64>;
}

impl Coeff for Rat {
    fn as_integer(&self) -> Option<i64> {
        if self.is_integer() {
            num_traits::ToPrimitive::to_i64(self.numer())
        } else {
            None
        }
    }
}

macro_rules! impl_coeff_float {
    ($t:ty) => {
        impl Coeff for $t {
            fn as_integer(&self) -> Option<i64> {
                if self.is_finite() && self.fract() == 0.0 && self.abs() < i64::MAX as $t {
                    Some(*self as i64)
                } else {
                    None
                }
            }
        }
    };
}

impl_coeff_float!(f32);
impl_coeff_float!(f64);

/// Embeds a machine integer into the coefficient field.
pub fn from_int<T: Coeff>(n: i64) -> T {
    T::from_i64(n).expect("coefficient field must embed small integers")
}

/// n! computed inside the coefficient field (exact for rationals, never
/// overflows a machine word).
pub fn factorial_in<T: Coeff>(n: usize) -> T {
    (1..=n).fold(T::one(), |acc, i| acc * from_int::<T>(i as i64))
}

/// Integer power of a nonzero scalar; negative exponents use the inverse.
pub fn scalar_powi<T: Coeff>(base: &T, exp: i64) -> T {
    let positive = (0..exp.unsigned_abs()).fold(T::one(), |acc, _| acc * base.clone());
    if exp >= 0 {
        positive
    } else {
        T::one() / positive
    }
}

/// Convenience constructor for exact rationals.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(num_bigint::BigInt::from(numer), num_bigint::BigInt::from(denom))
}
