//! The scalar abstraction the geometry is generic over.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cfield::CReal;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_rational(q: &BigRational) -> Sign {
        if q.is_zero() {
            Sign::Zero
        } else if q.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Positive,
            _ => Sign::Negative,
        }
    }

    pub fn to_ordering(self) -> Ordering {
        match self {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

/// An ordered field with a (possibly partial) square root.
///
/// Exact implementations decide signs exactly; the float implementations
/// compare against zero directly and are only as reliable as the rounding.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn sign(&self) -> Sign;
    fn try_div(&self, rhs: &Self) -> Result<Self>;
    fn try_sqrt(&self) -> Result<Self>;
    fn from_rational(q: &BigRational) -> Self;
    fn to_f64(&self) -> f64;

    /// Square-root nesting of the representation.
    fn sqrt_depth(&self) -> u32 {
        0
    }

    fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(&BigRational::new(n.into(), d.into()))
    }

    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }
}

impl Scalar for CReal {
    fn sign(&self) -> Sign {
        CReal::sign(self)
    }
    fn try_div(&self, rhs: &Self) -> Result<Self> {
        self.checked_div(rhs)
    }
    fn try_sqrt(&self) -> Result<Self> {
        self.sqrt()
    }
    fn from_rational(q: &BigRational) -> Self {
        CReal::from(q.clone())
    }
    fn to_f64(&self) -> f64 {
        CReal::to_f64(self)
    }
    fn sqrt_depth(&self) -> u32 {
        self.depth()
    }
}

impl Scalar for BigRational {
    fn sign(&self) -> Sign {
        Sign::of_rational(self)
    }
    fn try_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(self / rhs)
        }
    }
    fn try_sqrt(&self) -> Result<Self> {
        if self.is_negative() {
            return Err(Error::NegativeRadicand);
        }
        let root = |n: &BigInt| Some(n.sqrt()).filter(|r| r * r == *n);
        match (root(self.numer()), root(self.denom())) {
            (Some(n), Some(d)) => Ok(BigRational::new(n, d)),
            _ => Err(Error::NotRepresentable),
        }
    }
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

macro_rules! impl_float {
    ($t:ty) => {
        impl Scalar for $t {
            fn sign(&self) -> Sign {
                if *self > 0.0 {
                    Sign::Positive
                } else if *self < 0.0 {
                    Sign::Negative
                } else {
                    Sign::Zero
                }
            }
            fn try_div(&self, rhs: &Self) -> Result<Self> {
                if *rhs == 0.0 {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(self / rhs)
                }
            }
            fn try_sqrt(&self) -> Result<Self> {
                if *self < 0.0 {
                    Err(Error::NegativeRadicand)
                } else {
                    Ok(self.sqrt())
                }
            }
            fn from_rational(q: &BigRational) -> Self {
                ToPrimitive::to_f64(q).unwrap_or(f64::NAN) as $t
            }
            fn to_f64(&self) -> f64 {
                f64::from(*self)
            }
        }
    };
}

impl_float!(f32);
impl_float!(f64);
