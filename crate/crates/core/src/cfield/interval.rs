//! Outward-rounded fixed-point intervals used to settle most sign queries
//! without exact arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// The closed interval `[lo / 2^prec, hi / 2^prec]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Interval {
    pub lo: BigInt,
    pub hi: BigInt,
}

fn floor_shift(x: BigInt, prec: u32) -> BigInt {
    x.div_floor(&(BigInt::from(1) << prec))
}

fn ceil_shift(x: BigInt, prec: u32) -> BigInt {
    -floor_shift(-x, prec)
}

fn ceil_sqrt(x: &BigInt) -> BigInt {
    let r = x.sqrt();
    if &(&r * &r) < x {
        r + 1
    } else {
        r
    }
}

impl Interval {
    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        let scaled = q.numer() << prec;
        Interval {
            lo: scaled.div_floor(q.denom()),
            hi: Integer::div_ceil(&scaled, q.denom()),
        }
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn mul(&self, other: &Interval, prec: u32) -> Interval {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let min = products.iter().min().cloned().unwrap_or_default();
        let max = products.iter().max().cloned().unwrap_or_default();
        Interval {
            lo: floor_shift(min, prec),
            hi: ceil_shift(max, prec),
        }
    }

    /// Square root of the non-negative part of the interval.
    pub fn sqrt(&self, prec: u32) -> Interval {
        let clamp = |x: &BigInt| if x.is_negative() { BigInt::zero() } else { x.clone() };
        Interval {
            lo: (clamp(&self.lo) << prec).sqrt(),
            hi: ceil_sqrt(&(clamp(&self.hi) << prec)),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    /// Midpoint as an exact rational.
    pub fn midpoint(&self, prec: u32) -> BigRational {
        BigRational::new(&self.lo + &self.hi, BigInt::from(2) << prec)
    }
}
