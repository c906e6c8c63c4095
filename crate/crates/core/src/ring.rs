//! The minimal commutative-ring interface the polynomial evaluators need.

use crate::arith::{to_f64, Rational};
use crate::pi::PiValue;
use num_traits::{One, Zero};

/// Commutative ring with an action of the rationals.
///
/// Implemented for [`Rational`], [`PiValue`] and `f64`, so one evaluator can
/// serve the exact and the floating-point backends.
pub trait Ring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, q: &Rational) -> Self;

    fn neg(&self) -> Self {
        self.scale(&-<Rational as One>::one())
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, q: &Rational) -> Self {
        self * q
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Ring for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, q: &Rational) -> Self {
        self * to_f64(q)
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Ring for PiValue {
    fn zero() -> Self {
        PiValue::zero()
    }
    fn one() -> Self {
        PiValue::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, q: &Rational) -> Self {
        self.scale(q)
    }
    fn neg(&self) -> Self {
        -self
    }
}
