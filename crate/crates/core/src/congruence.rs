//! Triangles, congruence, constructive superposition and angle transfer.

use std::cmp::Ordering;

use crate::constructions::transfer_segment;
use crate::error::{require, Result};
use crate::kernel::{self, collinear, orientation, Flag, KernelCtx, Orientation, Point, Ray};
use crate::quantities::{
    angle_classify, angle_decide, length_decide, length_of, nonoriented_measure, AngleClass,
    Rotation,
};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct Triangle<S> {
    a: Point<S>,
    b: Point<S>,
    c: Point<S>,
}

impl<S: Scalar> Triangle<S> {
    pub fn new(a: Point<S>, b: Point<S>, c: Point<S>) -> Result<Self> {
        require(!collinear(&a, &b, &c), "triangle", "vertices not collinear")?;
        Ok(Triangle { a, b, c })
    }

    pub fn vertices(&self) -> [&Point<S>; 3] {
        [&self.a, &self.b, &self.c]
    }
}

fn same_length<S: Scalar>(a: &Point<S>, b: &Point<S>, c: &Point<S>, d: &Point<S>) -> Result<bool> {
    Ok(length_decide(&length_of(a, b)?, &length_of(c, d)?) == Ordering::Equal)
}

/// Corresponding sides and corresponding angles are equal.
pub fn congruent<S: Scalar>(t1: &Triangle<S>, t2: &Triangle<S>) -> Result<bool> {
    let [a, b, c] = t1.vertices();
    let [d, e, f] = t2.vertices();
    let sides = same_length(a, b, d, e)? && same_length(b, c, e, f)? && same_length(c, a, f, d)?;
    if !sides {
        return Ok(false);
    }
    let angle = |p, o, q, p2, o2, q2| -> Result<bool> {
        Ok(angle_decide(&nonoriented_measure(p, o, q)?, &nonoriented_measure(p2, o2, q2)?)
            == Ordering::Equal)
    };
    Ok(angle(b, a, c, e, d, f)? && angle(a, b, c, d, e, f)? && angle(a, c, b, d, f, e)?)
}

/// The point `f'` on the side of `f_side` making `d e f'` congruent to `a b c`.
#[allow(clippy::too_many_arguments)]
pub fn superpose<S: Scalar>(
    ctx: &mut KernelCtx,
    a: &Point<S>,
    b: &Point<S>,
    c: &Point<S>,
    d: &Point<S>,
    e: &Point<S>,
    f_side: &Point<S>,
) -> Result<Point<S>> {
    const OP: &str = "superpose";
    require(!collinear(a, b, c), OP, "A, B, C not collinear")?;
    require(!collinear(d, e, f_side), OP, "D, E, F not collinear")?;
    require(same_length(a, b, d, e)?, OP, "|AB| equals |DE|")?;
    let near1 = transfer_segment(ctx, d, e, a, c)?;
    let far1 = kernel::cut_line_circle(&near1, d, &near1)?;
    let near2 = transfer_segment(ctx, e, d, b, c)?;
    let far2 = kernel::cut_line_circle(&near2, e, &near2)?;
    kernel::cut_circles(d, &far1, &near1, e, &near2, &far2, f_side)
}

/// A point `p'` on the side of `p` with angle `a2 o2 p'` equal to angle `a o b`.
#[allow(clippy::too_many_arguments)]
pub fn transfer_angle<S: Scalar>(
    ctx: &mut KernelCtx,
    a: &Point<S>,
    o: &Point<S>,
    b: &Point<S>,
    o2: &Point<S>,
    a2: &Point<S>,
    p: &Point<S>,
) -> Result<Point<S>> {
    const OP: &str = "transfer_angle";
    require(!collinear(a, o, b), OP, "A, O, B not collinear")?;
    require(!kernel::coincide_points(o2, a2), OP, "O2 distinct from A2")?;
    require(!collinear(o2, a2, p), OP, "O2, A2, P not collinear")?;
    let base_end = transfer_segment(ctx, o2, a2, o, a)?;
    superpose(ctx, o, a, b, o2, &base_end, p)
}

/// [`transfer_angle`] returning the constructed ray from `o2`.
#[allow(clippy::too_many_arguments)]
pub fn transfer_angle_ray<S: Scalar>(
    ctx: &mut KernelCtx,
    a: &Point<S>,
    o: &Point<S>,
    b: &Point<S>,
    o2: &Point<S>,
    a2: &Point<S>,
    p: &Point<S>,
) -> Result<Ray<S>> {
    let q = transfer_angle(ctx, a, o, b, o2, a2, p)?;
    Ray::new(o2.clone(), q)
}

/// The ray `b` from the origin of `a` with `measure_of(a, b) = alpha`.
pub fn draw_angle_oriented<S: Scalar>(
    ctx: &mut KernelCtx,
    a: &Ray<S>,
    alpha: &Rotation<S>,
) -> Result<Ray<S>> {
    let (o, dir) = (a.origin(), a.director());
    let class = angle_classify(alpha);
    let convex = match class {
        AngleClass::Null => return Ok(a.clone()),
        AngleClass::Straight => {
            return Ray::new(o.clone(), kernel::cut_line_circle(dir, o, dir)?);
        }
        AngleClass::Convex => alpha.clone(),
        AngleClass::Reflex => alpha.conjugate(),
    };
    let wanted = if class == AngleClass::Convex {
        Orientation::Left
    } else {
        Orientation::Right
    };
    let mut side = kernel::point_off_line(ctx, &a.carrier());
    let probe = Flag::new(a.clone(), Ray::new(o.clone(), side.clone())?)?;
    if orientation(&probe) != wanted {
        side = kernel::cut_line_circle(&side, o, &side)?;
    }
    let (w0, w1) = convex.representative();
    transfer_angle_ray(ctx, w0.director(), w0.origin(), w1.director(), o, dir, &side)
}
