//! The primitive constructions and decisions as executable operations.
//!
//! Every operation checks its precondition and returns a result satisfying
//! the postcondition exactly. This module is the only gateway through which
//! higher layers obtain new points and lines; it also re-exports the model
//! predicates so those layers can decide facts without touching coordinates.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{require, Result};
use crate::scalar::{Scalar, Sign};

pub use crate::model::{
    between, between_oo, between_ox, between_xo, coincide_lines, coincide_points, collinear,
    flipped_flag, incident, lines_intersect, opposite_flag, opposite_ray, opposite_side,
    ordered4, orientation, parallel, ray_between, ray_same_side, rays_coincide, same_direction,
    same_ray, same_side, side_of_line, Decision, Flag, Line, Orientation, Point, Ray, Side,
};

/// Source of the "arbitrary" choices in the postulates.
///
/// The same seed and the same sequence of calls give the same points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelCtx {
    pub seed: u64,
    pub counter: u64,
}

impl KernelCtx {
    pub fn new(seed: u64) -> Self {
        KernelCtx { seed, counter: 0 }
    }
}

/// An arbitrary point.
pub fn draw_point<S: Scalar>(ctx: &mut KernelCtx) -> Point<S> {
    let n = ctx.counter;
    ctx.counter += 1;
    if n == 0 {
        return Point::from_ints(0, 0);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ n.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    loop {
        let (xn, yn) = (rng.gen_range(-12i64..=12), rng.gen_range(-12i64..=12));
        let (xd, yd) = (rng.gen_range(1i64..=4), rng.gen_range(1i64..=4));
        if xn != 0 || yn != 0 {
            return Point::new(S::from_ratio(xn, xd), S::from_ratio(yn, yd));
        }
    }
}

/// A point distinct from `a`.
pub fn draw_distinct_point<S: Scalar>(_ctx: &mut KernelCtx, a: &Point<S>) -> Point<S> {
    Point::new(a.x.clone() + S::one(), a.y.clone())
}

/// `c` is distinct from `a` (first) or from `b` (second).
pub fn decide_distinct<S: Scalar>(a: &Point<S>, b: &Point<S>, c: &Point<S>) -> Result<Decision> {
    require(!coincide_points(a, b), "decide_distinct", "A distinct from B")?;
    Ok(if !coincide_points(a, c) {
        Decision::First
    } else {
        Decision::Second
    })
}

/// A point on `x`.
pub fn point_on_line<S: Scalar>(_ctx: &mut KernelCtx, x: &Line<S>) -> Point<S> {
    x.p().clone()
}

/// A point on `x` distinct from `a`.
pub fn distinct_point_on_line<S: Scalar>(
    _ctx: &mut KernelCtx,
    x: &Line<S>,
    a: &Point<S>,
) -> Result<Point<S>> {
    require(incident(a, x), "distinct_point_on_line", "A on x")?;
    Ok(if coincide_points(a, x.p()) {
        x.q().clone()
    } else {
        x.p().clone()
    })
}

/// A point off `x`, at the unit left normal offset from its first point.
pub fn point_off_line<S: Scalar>(_ctx: &mut KernelCtx, x: &Line<S>) -> Point<S> {
    let (a, b, _) = x.coefficients();
    Point::new(x.p().x.clone() + a, x.p().y.clone() + b)
}

/// The line through two distinct points.
pub fn join<S: Scalar>(a: &Point<S>, b: &Point<S>) -> Result<Line<S>> {
    require(!coincide_points(a, b), "join", "points distinct")?;
    Line::new(a.clone(), b.clone())
}

/// Of two distinct points on `x`, one is off `y`.
pub fn decide_off_line<S: Scalar>(
    a: &Point<S>,
    b: &Point<S>,
    x: &Line<S>,
    y: &Line<S>,
) -> Result<Decision> {
    require(!coincide_points(a, b), "decide_off_line", "A distinct from B")?;
    require(incident(a, x) && incident(b, x), "decide_off_line", "A and B on x")?;
    require(!coincide_lines(x, y), "decide_off_line", "x distinct from y")?;
    Ok(if !incident(a, y) {
        Decision::First
    } else {
        Decision::Second
    })
}

/// The common point of two intersecting lines.
pub fn meet<S: Scalar>(x: &Line<S>, y: &Line<S>) -> Result<Point<S>> {
    require(
        !coincide_lines(x, y) && lines_intersect(x, y),
        "meet",
        "lines intersect",
    )?;
    let (a1, b1, c1) = x.coefficients();
    let (a2, b2, c2) = y.coefficients();
    let d = a1.clone() * b2.clone() - a2.clone() * b1.clone();
    let px = (b1 * c2.clone() - b2 * c1.clone()).try_div(&d)?;
    let py = (a2 * c1 - a1 * c2).try_div(&d)?;
    Ok(Point::new(px, py))
}

fn squared_distance<S: Scalar>(a: &Point<S>, b: &Point<S>) -> S {
    let dx = a.x.clone() - b.x.clone();
    let dy = a.y.clone() - b.y.clone();
    dx.clone() * dx + dy.clone() * dy
}

/// Line-circle postulate: the point `c` on line `ao` beyond `o` with `|oc| = |ob|`.
pub fn cut_line_circle<S: Scalar>(a: &Point<S>, o: &Point<S>, b: &Point<S>) -> Result<Point<S>> {
    require(!coincide_points(a, o), "cut_line_circle", "A distinct from O")?;
    let k = squared_distance(o, b).try_div(&squared_distance(o, a))?.try_sqrt()?;
    Ok(Point::new(
        o.x.clone() + k.clone() * (o.x.clone() - a.x.clone()),
        o.y.clone() + k * (o.y.clone() - a.y.clone()),
    ))
}

/// Pasch postulate: `x` separates `a` from `c` (first) or `c` from `b` (second).
pub fn decide_pasch<S: Scalar>(
    a: &Point<S>,
    b: &Point<S>,
    c: &Point<S>,
    x: &Line<S>,
) -> Result<Decision> {
    require(opposite_side(x, a, b), "decide_pasch", "x separates A and B")?;
    require(!incident(c, x), "decide_pasch", "C off x")?;
    Ok(if opposite_side(x, a, c) {
        Decision::First
    } else {
        Decision::Second
    })
}

/// Circle-circle postulate: the common point of circles `o(a)` and `o2(a2)`
/// on the side of line `o o2` containing `p`.
#[allow(clippy::too_many_arguments)]
pub fn cut_circles<S: Scalar>(
    o: &Point<S>,
    a: &Point<S>,
    b: &Point<S>,
    o2: &Point<S>,
    a2: &Point<S>,
    b2: &Point<S>,
    p: &Point<S>,
) -> Result<Point<S>> {
    const OP: &str = "cut_circles";
    require(!collinear(o, o2, p), OP, "P off the line of centres")?;
    let r1 = squared_distance(o, a);
    let r2 = squared_distance(o2, a2);
    require(
        between(a, o, b) && (r1.clone() - squared_distance(o, b)).sign() == Sign::Zero,
        OP,
        "A, B diametrical on the first circle",
    )?;
    require(
        between(a2, o2, b2) && (r2.clone() - squared_distance(o2, b2)).sign() == Sign::Zero,
        OP,
        "A2, B2 diametrical on the second circle",
    )?;
    require(ordered4(a, a2, b, b2), OP, "A, A2, B, B2 in order")?;

    let vx = o2.x.clone() - o.x.clone();
    let vy = o2.y.clone() - o.y.clone();
    let d = vx.clone() * vx.clone() + vy.clone() * vy.clone();
    let two = S::from_int(2);
    let t = (d.clone() + r1.clone() - r2).try_div(&(two * d.clone()))?;
    let s = (r1.try_div(&d)? - t.clone() * t.clone()).try_sqrt()?;
    let side = vx.clone() * (p.y.clone() - o.y.clone()) - vy.clone() * (p.x.clone() - o.x.clone());
    let s = if side.sign() == Sign::Negative { -s } else { s };
    Ok(Point::new(
        o.x.clone() + t.clone() * vx.clone() - s.clone() * vy.clone(),
        o.y.clone() + t * vy + s * vx,
    ))
}
