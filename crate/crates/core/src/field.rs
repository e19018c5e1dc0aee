//! The exact coefficient domains that curves and quartics are defined over:
//! the rationals, and rational functions in one or more parameters.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{rational_sqrt, Integer, Rational};
use crate::multipoly::RatFunc;

pub trait ExactField: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero_el() -> Self;
    fn one_el() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_rational(v: &Rational) -> Self;
    fn vanishes(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    fn checked_div(&self, o: &Self) -> Result<Self>;
    /// Square root with a fixed sign convention: nonnegative for rationals,
    /// positive leading coefficients for rational functions.
    fn sqrt_exact(&self) -> Option<Self>;
    /// Size measure used only to order otherwise symmetric choices.
    fn complexity(&self) -> u64;

    fn scaled(&self, k: i64) -> Self {
        self.times(&Self::from_i64(k))
    }

    fn square(&self) -> Self {
        self.times(self)
    }

    fn powi(&self, e: u32) -> Self {
        (0..e).fold(Self::one_el(), |acc, _| acc.times(self))
    }
}

impl ExactField for Rational {
    fn zero_el() -> Self {
        Zero::zero()
    }
    fn one_el() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(Integer::from(v))
    }
    fn from_rational(v: &Rational) -> Self {
        v.clone()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self.clone()
    }
    fn checked_div(&self, o: &Self) -> Result<Self> {
        if Zero::is_zero(o) {
            return Err(Error::Domain("division by zero".into()));
        }
        Ok(self / o)
    }
    fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        rational_sqrt(self)
    }
    fn complexity(&self) -> u64 {
        self.numer().bits() + self.denom().bits()
    }
}

impl ExactField for RatFunc {
    fn zero_el() -> Self {
        RatFunc::zero()
    }
    fn one_el() -> Self {
        RatFunc::one()
    }
    fn from_i64(v: i64) -> Self {
        RatFunc::from_int(v)
    }
    fn from_rational(v: &Rational) -> Self {
        RatFunc::from_rational(v.clone())
    }
    fn vanishes(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn checked_div(&self, o: &Self) -> Result<Self> {
        RatFunc::checked_div(self, o)
    }
    fn sqrt_exact(&self) -> Option<Self> {
        self.sqrt()
    }
    fn complexity(&self) -> u64 {
        u64::from(self.num().total_degree() + self.den().total_degree())
    }
}
