//! Coordinate model of points, lines, rays and flags, with decidable
//! implementations of the incidence, order and orientation predicates.

use std::fmt;

use serde::Serialize;

use crate::error::{require, Result};
use crate::scalar::{Scalar, Sign};

#[derive(Clone, Debug)]
pub struct Point<S> {
    pub x: S,
    pub y: S,
}

#[derive(Clone, Debug)]
pub struct Line<S> {
    p: Point<S>,
    q: Point<S>,
}

#[derive(Clone, Debug)]
pub struct Ray<S> {
    origin: Point<S>,
    director: Point<S>,
}

#[derive(Clone, Debug)]
pub struct Flag<S> {
    initial: Ray<S>,
    terminal: Ray<S>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Orientation {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Decision {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Same,
    Opposite,
    OnLine,
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl<S: Scalar> Point<S> {
    pub fn new(x: S, y: S) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(S::from_int(x), S::from_int(y))
    }

    fn minus(&self, other: &Point<S>) -> (S, S) {
        (self.x.clone() - other.x.clone(), self.y.clone() - other.y.clone())
    }

    /// Largest square-root nesting among the coordinates.
    pub fn sqrt_depth(&self) -> u32 {
        self.x.sqrt_depth().max(self.y.sqrt_depth())
    }
}

impl<S: Scalar> PartialEq for Point<S> {
    fn eq(&self, other: &Self) -> bool {
        coincide_points(self, other)
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for Point<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

fn det<S: Scalar>(u: &(S, S), v: &(S, S)) -> S {
    u.0.clone() * v.1.clone() - u.1.clone() * v.0.clone()
}

fn dot<S: Scalar>(u: &(S, S), v: &(S, S)) -> S {
    u.0.clone() * v.0.clone() + u.1.clone() * v.1.clone()
}

impl<S: Scalar> Line<S> {
    pub fn new(p: Point<S>, q: Point<S>) -> Result<Self> {
        require(!coincide_points(&p, &q), "line", "defining points distinct")?;
        Ok(Line { p, q })
    }

    pub fn p(&self) -> &Point<S> {
        &self.p
    }

    pub fn q(&self) -> &Point<S> {
        &self.q
    }

    /// Coefficients `(a, b, c)` with `a x + b y + c = 0` on the line.
    pub fn coefficients(&self) -> (S, S, S) {
        let a = self.p.y.clone() - self.q.y.clone();
        let b = self.q.x.clone() - self.p.x.clone();
        let c = self.p.x.clone() * self.q.y.clone() - self.q.x.clone() * self.p.y.clone();
        (a, b, c)
    }

    fn direction(&self) -> (S, S) {
        self.q.minus(&self.p)
    }

    /// Sign of the point's position relative to the oriented line.
    fn side_sign(&self, a: &Point<S>) -> Sign {
        det(&self.direction(), &a.minus(&self.p)).sign()
    }
}

impl<S: Scalar> Ray<S> {
    pub fn new(origin: Point<S>, director: Point<S>) -> Result<Self> {
        require(!coincide_points(&origin, &director), "ray", "origin and director distinct")?;
        Ok(Ray { origin, director })
    }

    pub fn origin(&self) -> &Point<S> {
        &self.origin
    }

    pub fn director(&self) -> &Point<S> {
        &self.director
    }

    /// The line carrying the ray.
    pub fn carrier(&self) -> Line<S> {
        Line {
            p: self.origin.clone(),
            q: self.director.clone(),
        }
    }

    fn offset(&self) -> (S, S) {
        self.director.minus(&self.origin)
    }
}

impl<S: Scalar> Flag<S> {
    pub fn new(initial: Ray<S>, terminal: Ray<S>) -> Result<Self> {
        require(
            coincide_points(&initial.origin, &terminal.origin),
            "flag",
            "rays share an origin",
        )?;
        require(
            !collinear(&initial.origin, &initial.director, &terminal.director),
            "flag",
            "rays divergent",
        )?;
        Ok(Flag { initial, terminal })
    }

    pub fn initial(&self) -> &Ray<S> {
        &self.initial
    }

    pub fn terminal(&self) -> &Ray<S> {
        &self.terminal
    }

    pub fn vertex(&self) -> &Point<S> {
        &self.initial.origin
    }
}

pub fn coincide_points<S: Scalar>(a: &Point<S>, b: &Point<S>) -> bool {
    (a.x.clone() - b.x.clone()).sign() == Sign::Zero
        && (a.y.clone() - b.y.clone()).sign() == Sign::Zero
}

pub fn incident<S: Scalar>(a: &Point<S>, x: &Line<S>) -> bool {
    x.side_sign(a) == Sign::Zero
}

pub fn coincide_lines<S: Scalar>(x: &Line<S>, y: &Line<S>) -> bool {
    incident(&x.p, y) && incident(&x.q, y)
}

/// Lines cross in exactly one point.
pub fn lines_intersect<S: Scalar>(x: &Line<S>, y: &Line<S>) -> bool {
    det(&x.direction(), &y.direction()).sign() != Sign::Zero
}

/// Lines do not cross; coincident lines count as parallel.
pub fn parallel<S: Scalar>(x: &Line<S>, y: &Line<S>) -> bool {
    !lines_intersect(x, y)
}

pub fn collinear<S: Scalar>(a: &Point<S>, b: &Point<S>, c: &Point<S>) -> bool {
    det(&b.minus(a), &c.minus(a)).sign() == Sign::Zero
}

pub fn between<S: Scalar>(a: &Point<S>, b: &Point<S>, c: &Point<S>) -> bool {
    collinear(a, b, c)
        && !coincide_points(a, b)
        && !coincide_points(b, c)
        && dot(&a.minus(b), &c.minus(b)).sign() == Sign::Negative
}

/// Betweenness allowing `a = b` (but not `b = c`).
pub fn between_ox<S: Scalar>(a: &Point<S>, b: &Point<S>, c: &Point<S>) -> bool {
    between(a, b, c) || (coincide_points(a, b) && !coincide_points(b, c))
}

/// Betweenness allowing `b = c` (but not `a = b`).
pub fn between_xo<S: Scalar>(a: &Point<S>, b: &Point<S>, c: &Point<S>) -> bool {
    between(a, b, c) || (!coincide_points(a, b) && coincide_points(b, c))
}

/// Betweenness allowing either endpoint to coincide with `b`.
pub fn between_oo<S: Scalar>(a: &Point<S>, b: &Point<S>, c: &Point<S>) -> bool {
    between(a, b, c) || coincide_points(a, b) || coincide_points(b, c)
}

pub fn side_of_line<S: Scalar>(x: &Line<S>, a: &Point<S>, b: &Point<S>) -> Side {
    match x.side_sign(a).times(x.side_sign(b)) {
        Sign::Zero => Side::OnLine,
        Sign::Positive => Side::Same,
        Sign::Negative => Side::Opposite,
    }
}

pub fn same_side<S: Scalar>(x: &Line<S>, a: &Point<S>, b: &Point<S>) -> bool {
    side_of_line(x, a, b) == Side::Same
}

pub fn opposite_side<S: Scalar>(x: &Line<S>, a: &Point<S>, b: &Point<S>) -> bool {
    side_of_line(x, a, b) == Side::Opposite
}

pub fn same_ray<S: Scalar>(o: &Point<S>, a: &Point<S>, b: &Point<S>) -> bool {
    !coincide_points(o, a) && !coincide_points(o, b) && collinear(o, a, b) && !between(a, o, b)
}

pub fn ordered4<S: Scalar>(a: &Point<S>, b: &Point<S>, c: &Point<S>, d: &Point<S>) -> bool {
    between(a, b, c) && between(a, b, d) && between(a, c, d) && between(b, c, d)
}

pub fn rays_coincide<S: Scalar>(a: &Ray<S>, b: &Ray<S>) -> bool {
    coincide_points(&a.origin, &b.origin) && same_ray(&a.origin, &a.director, &b.director)
}

pub fn opposite_ray<S: Scalar>(a: &Ray<S>) -> Ray<S> {
    let (dx, dy) = a.offset();
    Ray {
        origin: a.origin.clone(),
        director: Point::new(a.origin.x.clone() - dx, a.origin.y.clone() - dy),
    }
}

/// Same direction, decided by collinear carriers and a positive dot product.
pub fn same_direction<S: Scalar>(a: &Ray<S>, b: &Ray<S>) -> bool {
    collinear(&a.origin, &a.director, &b.origin)
        && collinear(&a.origin, &a.director, &b.director)
        && dot(&a.offset(), &b.offset()).sign() == Sign::Positive
}

/// Same direction, decided by the three-alternative definition.
pub fn same_direction_by_definition<S: Scalar>(a: &Ray<S>, b: &Ray<S>) -> bool {
    let (a0, a1, b0, b1) = (&a.origin, &a.director, &b.origin, &b.director);
    (coincide_points(a0, b0) && same_ray(a0, a1, b1))
        || (same_ray(a0, a1, b0) && between(a0, b0, b1))
        || (same_ray(b0, b1, a0) && between(b0, a0, a1))
}

/// Directors of `b` and `c` lie strictly on one side of the carrier of `a`.
pub fn ray_same_side<S: Scalar>(a: &Ray<S>, b: &Ray<S>, c: &Ray<S>) -> Result<bool> {
    require(
        coincide_points(&a.origin, &b.origin) && coincide_points(&a.origin, &c.origin),
        "ray_same_side",
        "rays share an origin",
    )?;
    Ok(same_side(&a.carrier(), &b.director, &c.director))
}

/// `b` lies inside the convex region bounded by `a` and `c`.
pub fn ray_between<S: Scalar>(a: &Ray<S>, b: &Ray<S>, c: &Ray<S>) -> Result<bool> {
    Ok(ray_same_side(a, b, c)? && ray_same_side(c, b, a)?)
}

pub fn opposite_flag<S: Scalar>(x: &Flag<S>) -> Flag<S> {
    Flag {
        initial: opposite_ray(&x.initial),
        terminal: opposite_ray(&x.terminal),
    }
}

/// The flag with its terminal ray reversed.
pub fn flipped_flag<S: Scalar>(x: &Flag<S>) -> Flag<S> {
    Flag {
        initial: x.initial.clone(),
        terminal: opposite_ray(&x.terminal),
    }
}

pub fn orientation<S: Scalar>(x: &Flag<S>) -> Orientation {
    if det(&x.initial.offset(), &x.terminal.offset()).sign() == Sign::Positive {
        Orientation::Left
    } else {
        Orientation::Right
    }
}

fn rays_same_side_unchecked<S: Scalar>(a: &Ray<S>, b: &Ray<S>, c: &Ray<S>) -> bool {
    same_side(&a.carrier(), &b.director, &c.director)
}

/// Rotational equivalence of two flags sharing a vertex.
pub fn flag_equiv_rot<S: Scalar>(x: &Flag<S>, y: &Flag<S>) -> Result<bool> {
    require(
        coincide_points(x.vertex(), y.vertex()),
        "flag_equiv_rot",
        "flags share a vertex",
    )?;
    let (x0, x1, y0, y1) = (&x.initial, &x.terminal, &y.initial, &y.terminal);
    let ss = rays_same_side_unchecked::<S>;
    Ok((rays_coincide(x0, y0) && ss(x0, x1, y1))
        || (rays_coincide(x0, &opposite_ray(y0)) && ss(x0, y1, &opposite_ray(x1)))
        || (ss(x0, x1, y0) && ss(y0, y1, &opposite_ray(x0)))
        || (ss(y0, y1, x0) && ss(x0, x1, &opposite_ray(y0))))
}

/// Translational equivalence of two flags whose initial rays share a direction.
pub fn flag_equiv_tr<S: Scalar>(x: &Flag<S>, y: &Flag<S>) -> Result<bool> {
    require(
        same_direction(&x.initial, &y.initial),
        "flag_equiv_tr",
        "initial rays share a direction",
    )?;
    Ok(same_side(&x.initial.carrier(), &x.terminal.director, &y.terminal.director))
}

pub fn flag_equiv<S: Scalar>(x: &Flag<S>, y: &Flag<S>) -> bool {
    orientation(x) == orientation(y)
}

/// Orientational equivalence by exhibiting the intermediate flags: `x` is
/// rotated onto a flag at its vertex aimed at `y`'s vertex, translated along
/// that direction, and rotated onto `y`.
pub fn flag_equiv_witnessed<S: Scalar>(x: &Flag<S>, y: &Flag<S>) -> bool {
    let (vx, vy) = (x.vertex(), y.vertex());
    if coincide_points(vx, vy) {
        return flag_equiv_rot(x, y).unwrap_or(false);
    }
    let (dx, dy) = vy.minus(vx);
    let shift = |p: &Point<S>, u: &S, v: &S| Point::new(p.x.clone() + u.clone(), p.y.clone() + v.clone());
    [S::one(), -S::one()].iter().any(|k| {
        let (nx, ny) = (-dy.clone() * k.clone(), dx.clone() * k.clone());
        let xs = Flag {
            initial: Ray { origin: vx.clone(), director: vy.clone() },
            terminal: Ray { origin: vx.clone(), director: shift(vx, &nx, &ny) },
        };
        let ys = Flag {
            initial: Ray { origin: vy.clone(), director: shift(vy, &dx, &dy) },
            terminal: Ray { origin: vy.clone(), director: shift(vy, &nx, &ny) },
        };
        flag_equiv_rot(x, &xs).unwrap_or(false)
            && flag_equiv_tr(&xs, &ys).unwrap_or(false)
            && flag_equiv_rot(&ys, y).unwrap_or(false)
    })
}
