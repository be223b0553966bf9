//! Construction problems solved by composing kernel operations.
//!
//! Nothing here reads or builds coordinates; new points come only from the
//! postulates in [`crate::kernel`].

use crate::error::{require, Result};
use crate::kernel::{
    self, coincide_lines, coincide_points, collinear, incident, lines_intersect, orientation,
    same_direction, Decision, Flag, KernelCtx, Line, Point, Ray,
};
use crate::scalar::Scalar;

/// The point `r` with `center` between `p` and `r` and `|center r| = |center p|`.
fn reflect_through<S: Scalar>(p: &Point<S>, center: &Point<S>) -> Result<Point<S>> {
    kernel::cut_line_circle(p, center, p)
}

/// A common point of the circles `o(t1)` and `o2(t2)` on the side of `side`.
fn intersect_circles<S: Scalar>(
    o: &Point<S>,
    t1: &Point<S>,
    o2: &Point<S>,
    t2: &Point<S>,
    side: &Point<S>,
) -> Result<Point<S>> {
    let a = kernel::cut_line_circle(o2, o, t1)?;
    let b = kernel::cut_line_circle(&a, o, t1)?;
    let b2 = kernel::cut_line_circle(o, o2, t2)?;
    let a2 = kernel::cut_line_circle(&b2, o2, t2)?;
    kernel::cut_circles(o, &a, &b, o2, &a2, &b2, side)
}

pub fn line_through_point<S: Scalar>(ctx: &mut KernelCtx, a: &Point<S>) -> Result<Line<S>> {
    let b = kernel::draw_distinct_point(ctx, a);
    kernel::join(a, &b)
}

pub fn any_line<S: Scalar>(ctx: &mut KernelCtx) -> Result<Line<S>> {
    let a = kernel::draw_point(ctx);
    line_through_point(ctx, &a)
}

pub fn line_avoiding_point<S: Scalar>(ctx: &mut KernelCtx, a: &Point<S>) -> Result<Line<S>> {
    let b = kernel::draw_distinct_point(ctx, a);
    let y = kernel::join(a, &b)?;
    let c = kernel::point_off_line(ctx, &y);
    kernel::join(&b, &c)
}

pub fn distinct_line_through<S: Scalar>(
    ctx: &mut KernelCtx,
    a: &Point<S>,
    x: &Line<S>,
) -> Result<Line<S>> {
    require(incident(a, x), "distinct_line_through", "A on x")?;
    let b = kernel::point_off_line(ctx, x);
    kernel::join(a, &b)
}

pub fn any_crossing_line<S: Scalar>(ctx: &mut KernelCtx, x: &Line<S>) -> Result<Line<S>> {
    let a = kernel::point_on_line(ctx, x);
    distinct_line_through(ctx, &a, x)
}

/// Given two lines through `a`, one of them misses `b`.
pub fn decide_point_off_two_lines<S: Scalar>(
    ctx: &mut KernelCtx,
    a: &Point<S>,
    b: &Point<S>,
    x: &Line<S>,
    y: &Line<S>,
) -> Result<Decision> {
    const OP: &str = "decide_point_off_two_lines";
    require(!coincide_points(a, b), OP, "A distinct from B")?;
    require(incident(a, x) && incident(a, y), OP, "A on x and y")?;
    require(!coincide_lines(x, y), OP, "x distinct from y")?;
    let z = kernel::join(a, b)?;
    let c = kernel::distinct_point_on_line(ctx, x, a)?;
    let d = kernel::distinct_point_on_line(ctx, y, a)?;
    let t = kernel::join(&c, &d)?;
    kernel::decide_off_line(&c, &d, &t, &z)
}

/// Midpoint of `a b`, found on the perpendicular bisector.
pub fn point_between<S: Scalar>(
    ctx: &mut KernelCtx,
    a: &Point<S>,
    b: &Point<S>,
) -> Result<Point<S>> {
    require(!coincide_points(a, b), "point_between", "A distinct from B")?;
    let l = kernel::join(a, b)?;
    let p = kernel::point_off_line(ctx, &l);
    let p2 = reflect_through(&p, a)?;
    let q1 = equilateral(a, b, &p)?;
    let q2 = equilateral(a, b, &p2)?;
    kernel::meet(&kernel::join(&q1, &q2)?, &l)
}

pub fn point_beyond<S: Scalar>(a: &Point<S>, b: &Point<S>) -> Result<Point<S>> {
    require(!coincide_points(a, b), "point_beyond", "A distinct from B")?;
    kernel::cut_line_circle(a, b, a)
}

fn require_divergent<S: Scalar>(a: &Ray<S>, b: &Ray<S>, op: &'static str) -> Result<()> {
    require(
        coincide_points(a.origin(), b.origin())
            && !collinear(a.origin(), a.director(), b.director()),
        op,
        "rays divergent",
    )
}

pub fn ray_between<S: Scalar>(ctx: &mut KernelCtx, a: &Ray<S>, b: &Ray<S>) -> Result<Ray<S>> {
    require_divergent(a, b, "ray_between")?;
    let m = point_between(ctx, a.director(), b.director())?;
    Ray::new(a.origin().clone(), m)
}

pub fn ray_beyond<S: Scalar>(a: &Ray<S>, b: &Ray<S>) -> Result<Ray<S>> {
    require_divergent(a, b, "ray_beyond")?;
    let c = point_beyond(a.director(), b.director())?;
    Ray::new(a.origin().clone(), c)
}

/// Rays on one line point the same way (first) or opposite ways (second).
pub fn decide_ray_direction<S: Scalar>(a: &Ray<S>, b: &Ray<S>) -> Result<Decision> {
    require(
        collinear(a.origin(), a.director(), b.origin())
            && collinear(a.origin(), a.director(), b.director()),
        "decide_ray_direction",
        "carriers collinear",
    )?;
    Ok(if same_direction(a, b) {
        Decision::First
    } else {
        Decision::Second
    })
}

/// Flags have the same orientation (first) or opposite ones (second).
pub fn decide_flag_orientation<S: Scalar>(x: &Flag<S>, y: &Flag<S>) -> Decision {
    if orientation(x) == orientation(y) {
        Decision::First
    } else {
        Decision::Second
    }
}

/// Apex of the equilateral triangle on `a b` on the side of `p`.
pub fn equilateral<S: Scalar>(a: &Point<S>, b: &Point<S>, p: &Point<S>) -> Result<Point<S>> {
    require(!collinear(a, b, p), "equilateral", "A, B, P not collinear")?;
    intersect_circles(a, b, b, a, p)
}

/// The point `d` on ray `o a` with `|o d| = |b c|`.
pub fn transfer_segment<S: Scalar>(
    ctx: &mut KernelCtx,
    o: &Point<S>,
    a: &Point<S>,
    b: &Point<S>,
    c: &Point<S>,
) -> Result<Point<S>> {
    require(!coincide_points(o, a), "transfer_segment", "O distinct from A")?;
    let behind = reflect_through(a, o)?;
    let radius_end = if coincide_points(o, b) {
        c.clone()
    } else {
        let side = kernel::point_off_line(ctx, &kernel::join(o, b)?);
        let e = equilateral(o, b, &side)?;
        let g = kernel::cut_line_circle(&e, b, c)?;
        let back = reflect_through(o, &e)?;
        kernel::cut_line_circle(&back, &e, &g)?
    };
    kernel::cut_line_circle(&behind, o, &radius_end)
}

/// Perpendicular to `x` through `a`.
fn perpendicular<S: Scalar>(ctx: &mut KernelCtx, a: &Point<S>, x: &Line<S>) -> Result<Line<S>> {
    if incident(a, x) {
        let b = kernel::distinct_point_on_line(ctx, x, a)?;
        let b2 = reflect_through(&b, a)?;
        let side = kernel::point_off_line(ctx, x);
        let q = equilateral(&b, &b2, &side)?;
        kernel::join(a, &q)
    } else {
        let p = kernel::point_on_line(ctx, x);
        let q = kernel::distinct_point_on_line(ctx, x, &p)?;
        let other_side = reflect_through(a, &p)?;
        let mirror = intersect_circles(&p, a, &q, a, &other_side)?;
        kernel::join(a, &mirror)
    }
}

/// The line through `a` parallel to `x`, as a perpendicular to a perpendicular.
pub fn parallel_through<S: Scalar>(
    ctx: &mut KernelCtx,
    a: &Point<S>,
    x: &Line<S>,
) -> Result<Line<S>> {
    let y = perpendicular(ctx, a, x)?;
    perpendicular(ctx, a, &y)
}

/// Given crossing `x` and `y`, `z` crosses `x` (first) or `y` (second).
pub fn decide_lines_cross<S: Scalar>(x: &Line<S>, y: &Line<S>, z: &Line<S>) -> Result<Decision> {
    require(lines_intersect(x, y), "decide_lines_cross", "x and y intersect")?;
    Ok(if lines_intersect(x, z) {
        Decision::First
    } else {
        Decision::Second
    })
}

/// Given distinct `x` and `y`, `z` differs from `x` (first) or from `y` (second).
pub fn decide_lines_distinct<S: Scalar>(
    x: &Line<S>,
    y: &Line<S>,
    z: &Line<S>,
) -> Result<Decision> {
    require(!coincide_lines(x, y), "decide_lines_distinct", "x distinct from y")?;
    Ok(if !coincide_lines(x, z) {
        Decision::First
    } else {
        Decision::Second
    })
}
