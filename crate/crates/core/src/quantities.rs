//! Segment lengths and angle measures.
//!
//! Lengths are non-negative scalars. Angle measures are exact unit rotations
//! `(cos, sin)`, added by composition, with the full angle identified with
//! the null angle.

use std::cmp::Ordering;

use crate::error::{require, Result};
use crate::model::{collinear, coincide_points, Decision, Point, Ray};
use crate::scalar::{Scalar, Sign};

#[derive(Clone, Debug)]
pub struct Length<S> {
    value: S,
}

#[derive(Clone, Debug)]
pub struct Rotation<S> {
    c: S,
    s: S,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AngleClass {
    Null,
    Convex,
    Straight,
    Reflex,
}

impl<S: Scalar> Length<S> {
    pub fn new(value: S) -> Result<Self> {
        require(value.sign() != Sign::Negative, "length", "value non-negative")?;
        Ok(Length { value })
    }

    pub fn zero() -> Self {
        Length { value: S::zero() }
    }

    pub fn value(&self) -> &S {
        &self.value
    }

    /// A segment of this length: the origin and a point on the positive x axis.
    pub fn representative(&self) -> (Point<S>, Point<S>) {
        (
            Point::new(S::zero(), S::zero()),
            Point::new(self.value.clone(), S::zero()),
        )
    }
}

impl<S: Scalar> PartialEq for Length<S> {
    fn eq(&self, other: &Self) -> bool {
        length_decide(self, other) == Ordering::Equal
    }
}

impl<S: Scalar> Rotation<S> {
    pub fn new(c: S, s: S) -> Result<Self> {
        let norm = c.clone() * c.clone() + s.clone() * s.clone() - S::one();
        require(norm.sign() == Sign::Zero, "rotation", "unit vector")?;
        Ok(Rotation { c, s })
    }

    pub fn null() -> Self {
        Rotation { c: S::one(), s: S::zero() }
    }

    pub fn straight() -> Self {
        Rotation { c: -S::one(), s: S::zero() }
    }

    pub fn c(&self) -> &S {
        &self.c
    }

    pub fn s(&self) -> &S {
        &self.s
    }

    /// Inverse measure, the rotation by the explementary angle.
    pub fn conjugate(&self) -> Self {
        Rotation { c: self.c.clone(), s: -self.s.clone() }
    }

    /// An angle of this measure: rays from the origin toward `(1, 0)` and `(c, s)`.
    pub fn representative(&self) -> (Ray<S>, Ray<S>) {
        let o = Point::new(S::zero(), S::zero());
        let initial = Ray::new(o.clone(), Point::new(S::one(), S::zero()));
        let terminal = Ray::new(o, Point::new(self.c.clone(), self.s.clone()));
        (
            initial.expect("unit point differs from origin"),
            terminal.expect("unit point differs from origin"),
        )
    }

    /// Approximate measure in degrees in `[0, 360)`.
    pub fn approx_degrees(&self) -> f64 {
        let d = self.s.to_f64().atan2(self.c.to_f64()).to_degrees();
        if d < 0.0 {
            d + 360.0
        } else {
            d
        }
    }
}

impl<S: Scalar> PartialEq for Rotation<S> {
    fn eq(&self, other: &Self) -> bool {
        (self.c.clone() - other.c.clone()).sign() == Sign::Zero
            && (self.s.clone() - other.s.clone()).sign() == Sign::Zero
    }
}

pub fn length_of<S: Scalar>(a: &Point<S>, b: &Point<S>) -> Result<Length<S>> {
    let dx = b.x.clone() - a.x.clone();
    let dy = b.y.clone() - a.y.clone();
    Ok(Length {
        value: (dx.clone() * dx + dy.clone() * dy).try_sqrt()?,
    })
}

pub fn length_decide<S: Scalar>(a: &Length<S>, b: &Length<S>) -> Ordering {
    (a.value.clone() - b.value.clone()).sign().to_ordering()
}

pub fn length_less<S: Scalar>(a: &Length<S>, b: &Length<S>) -> bool {
    length_decide(a, b) == Ordering::Less
}

/// Given `a < b`, `c` exceeds `a` (first) or falls below `b` (second).
pub fn length_cotrans<S: Scalar>(a: &Length<S>, b: &Length<S>, c: &Length<S>) -> Result<Decision> {
    require(length_less(a, b), "length_cotrans", "a less than b")?;
    Ok(if length_less(a, c) {
        Decision::First
    } else {
        Decision::Second
    })
}

pub fn length_add<S: Scalar>(a: &Length<S>, b: &Length<S>) -> Length<S> {
    Length {
        value: a.value.clone() + b.value.clone(),
    }
}

/// The rotation carrying the direction of `a` onto that of `b`.
pub fn measure_of<S: Scalar>(a: &Ray<S>, b: &Ray<S>) -> Result<Rotation<S>> {
    require(
        coincide_points(a.origin(), b.origin()),
        "measure_of",
        "rays share an origin",
    )?;
    let o = a.origin();
    let (ux, uy) = (a.director().x.clone() - o.x.clone(), a.director().y.clone() - o.y.clone());
    let (vx, vy) = (b.director().x.clone() - o.x.clone(), b.director().y.clone() - o.y.clone());
    let uu = ux.clone() * ux.clone() + uy.clone() * uy.clone();
    let vv = vx.clone() * vx.clone() + vy.clone() * vy.clone();
    let n = (uu * vv).try_sqrt()?;
    let dot = ux.clone() * vx.clone() + uy.clone() * vy.clone();
    let cross = ux * vy - uy * vx;
    Ok(Rotation {
        c: dot.try_div(&n)?,
        s: cross.try_div(&n)?,
    })
}

pub fn angle_add<S: Scalar>(a: &Rotation<S>, b: &Rotation<S>) -> Rotation<S> {
    Rotation {
        c: a.c.clone() * b.c.clone() - a.s.clone() * b.s.clone(),
        s: a.s.clone() * b.c.clone() + a.c.clone() * b.s.clone(),
    }
}

pub fn angle_classify<S: Scalar>(a: &Rotation<S>) -> AngleClass {
    match a.s.sign() {
        Sign::Positive => AngleClass::Convex,
        Sign::Negative => AngleClass::Reflex,
        Sign::Zero if a.c.sign() == Sign::Positive => AngleClass::Null,
        Sign::Zero => AngleClass::Straight,
    }
}

/// Order of angle measures: by class, then by cosine within a class.
pub fn angle_decide<S: Scalar>(a: &Rotation<S>, b: &Rotation<S>) -> Ordering {
    let (ka, kb) = (angle_classify(a), angle_classify(b));
    match ka.cmp(&kb) {
        Ordering::Equal => match ka {
            AngleClass::Null | AngleClass::Straight => Ordering::Equal,
            AngleClass::Convex => (b.c.clone() - a.c.clone()).sign().to_ordering(),
            AngleClass::Reflex => (a.c.clone() - b.c.clone()).sign().to_ordering(),
        },
        unequal => unequal,
    }
}

pub fn angle_less<S: Scalar>(a: &Rotation<S>, b: &Rotation<S>) -> bool {
    angle_decide(a, b) == Ordering::Less
}

/// Convex measure of the angle `a o b`, whichever way it is traversed.
pub fn nonoriented_measure<S: Scalar>(
    a: &Point<S>,
    o: &Point<S>,
    b: &Point<S>,
) -> Result<Rotation<S>> {
    require(!collinear(a, o, b), "nonoriented_measure", "A, O, B not collinear")?;
    let m = measure_of(&Ray::new(o.clone(), a.clone())?, &Ray::new(o.clone(), b.clone())?)?;
    Ok(if m.s.sign() == Sign::Positive { m } else { m.conjugate() })
}
