use std::cmp::Ordering;

use euclid_core::constructions::{
    decide_flag_orientation, decide_lines_cross, decide_lines_distinct,
    decide_point_off_two_lines, decide_ray_direction,
};
use euclid_core::kernel::{
    coincide_lines, coincide_points, decide_distinct, decide_off_line, decide_pasch, incident,
    join, lines_intersect, opposite_ray, opposite_side, same_direction, Decision, KernelCtx,
};
use euclid_core::quantities::{
    angle_decide, angle_less, length_cotrans, length_decide, length_less, length_of, measure_of,
};
use euclid_core::{CReal, Flag, Line, Point, Ray, Sign};
use rand::Rng;

use super::gen::{self, R};
use super::{ensure, ok};

/// Either a fresh point or one of `choices`, so both branches get exercised.
fn maybe_one_of(rng: &mut R, choices: &[&Point]) -> Point {
    if rng.gen_bool(0.4) {
        choices[rng.gen_range(0..choices.len())].clone()
    } else {
        gen::point(rng)
    }
}

/// A line through `a`, sometimes `x` itself.
fn line_through(rng: &mut R, a: &Point) -> Line {
    ok(join(a, &gen::other_point(rng, a))).expect("distinct")
}

/// A line parallel to `x` through a random point.
fn parallel_to(rng: &mut R, x: &Line) -> Line {
    let a = gen::point(rng);
    let b = Point::new(
        a.x.clone() + x.q().x.clone() - x.p().x.clone(),
        a.y.clone() + x.q().y.clone() - x.p().y.clone(),
    );
    join(&a, &b).expect("distinct")
}

pub fn distinct_points(rng: &mut R) -> Result<(), String> {
    let a = gen::point(rng);
    let b = gen::other_point(rng, &a);
    let c = maybe_one_of(rng, &[&a, &b]);
    match ok(decide_distinct(&a, &b, &c))? {
        Decision::First => ensure!(!coincide_points(&c, &a), "c should differ from a"),
        Decision::Second => ensure!(!coincide_points(&c, &b), "c should differ from b"),
    }
    Ok(())
}

pub fn off_line(rng: &mut R) -> Result<(), String> {
    let x = gen::line(rng);
    let a = gen::on_line(rng, x.p(), x.q());
    let b = loop {
        let b = gen::on_line(rng, x.p(), x.q());
        if b != a {
            break b;
        }
    };
    let y = match rng.gen_range(0..3) {
        0 => line_through(rng, &a),
        1 => line_through(rng, &b),
        _ => gen::line(rng),
    };
    if coincide_lines(&x, &y) {
        return Ok(());
    }
    match ok(decide_off_line(&a, &b, &x, &y))? {
        Decision::First => ensure!(!incident(&a, &y)),
        Decision::Second => ensure!(!incident(&b, &y)),
    }
    Ok(())
}

pub fn pasch(rng: &mut R) -> Result<(), String> {
    let a = gen::point(rng);
    let b = gen::other_point(rng, &a);
    let m = gen::along(&a, &b, &CReal::ratio(rng.gen_range(1..10), 10));
    let x = line_through(rng, &m);
    let c = gen::point(rng);
    if !opposite_side(&x, &a, &b) || incident(&c, &x) {
        return Ok(());
    }
    match ok(decide_pasch(&a, &b, &c, &x))? {
        Decision::First => ensure!(opposite_side(&x, &a, &c)),
        Decision::Second => ensure!(opposite_side(&x, &c, &b)),
    }
    Ok(())
}

pub fn lines_cross(rng: &mut R) -> Result<(), String> {
    let x = gen::line(rng);
    let y = gen::line(rng);
    if !lines_intersect(&x, &y) {
        return Ok(());
    }
    let z = match rng.gen_range(0..3) {
        0 => parallel_to(rng, &x),
        1 => parallel_to(rng, &y),
        _ => gen::line(rng),
    };
    match ok(decide_lines_cross(&x, &y, &z))? {
        Decision::First => ensure!(lines_intersect(&x, &z)),
        Decision::Second => ensure!(lines_intersect(&y, &z)),
    }
    Ok(())
}

pub fn lines_distinct(rng: &mut R) -> Result<(), String> {
    let x = gen::line(rng);
    let y = if rng.gen_bool(0.3) { parallel_to(rng, &x) } else { gen::line(rng) };
    if coincide_lines(&x, &y) {
        return Ok(());
    }
    let z = match rng.gen_range(0..3) {
        0 => join(&gen::on_line(rng, x.p(), x.q()), x.p()).unwrap_or_else(|_| x.clone()),
        1 => y.clone(),
        _ => gen::line(rng),
    };
    match ok(decide_lines_distinct(&x, &y, &z))? {
        Decision::First => ensure!(!coincide_lines(&x, &z)),
        Decision::Second => ensure!(!coincide_lines(&y, &z)),
    }
    Ok(())
}

pub fn point_off_two_lines(rng: &mut R) -> Result<(), String> {
    let mut ctx = KernelCtx::new(rng.gen());
    let a = gen::point(rng);
    let x = line_through(rng, &a);
    let y = line_through(rng, &a);
    if coincide_lines(&x, &y) {
        return Ok(());
    }
    let b = match rng.gen_range(0..3) {
        0 => gen::on_line(rng, x.p(), x.q()),
        1 => gen::on_line(rng, y.p(), y.q()),
        _ => gen::point(rng),
    };
    if coincide_points(&a, &b) {
        return Ok(());
    }
    match ok(decide_point_off_two_lines(&mut ctx, &a, &b, &x, &y))? {
        Decision::First => ensure!(!incident(&b, &x)),
        Decision::Second => ensure!(!incident(&b, &y)),
    }
    Ok(())
}

pub fn ray_direction(rng: &mut R) -> Result<(), String> {
    let x = gen::line(rng);
    let mut on_x = || gen::on_line(rng, x.p(), x.q());
    let (a0, a1, b0, b1) = (on_x(), on_x(), on_x(), on_x());
    if a0 == a1 || b0 == b1 {
        return Ok(());
    }
    let a = Ray::new(a0, a1).expect("distinct");
    let b = Ray::new(b0, b1).expect("distinct");
    match ok(decide_ray_direction(&a, &b))? {
        Decision::First => ensure!(same_direction(&a, &b)),
        Decision::Second => ensure!(same_direction(&a, &opposite_ray(&b))),
    }
    Ok(())
}

/// Sign of the turn from `a`'s offset to `b`'s, from raw coordinates.
fn turn(f: &Flag) -> Sign {
    let (o, p, q) = (f.vertex(), f.initial().director(), f.terminal().director());
    let (ux, uy) = (p.x.clone() - o.x.clone(), p.y.clone() - o.y.clone());
    let (vx, vy) = (q.x.clone() - o.x.clone(), q.y.clone() - o.y.clone());
    (ux * vy - uy * vx).sign()
}

pub fn flag_orientation(rng: &mut R) -> Result<(), String> {
    let flag = |rng: &mut R| loop {
        let (o, p, q) = gen::triangle(rng);
        if let Ok(f) = Flag::new(Ray::new(o.clone(), p).expect("distinct"), Ray::new(o, q).expect("distinct")) {
            break f;
        }
    };
    let (x, y) = (flag(rng), flag(rng));
    match decide_flag_orientation(&x, &y) {
        Decision::First => ensure!(turn(&x) == turn(&y)),
        Decision::Second => ensure!(turn(&x) != turn(&y)),
    }
    Ok(())
}

pub fn length_cotransitivity(rng: &mut R) -> Result<(), String> {
    let o = gen::point(rng);
    let mut lengths: Vec<_> = (0..3)
        .map(|_| length_of(&o, &gen::point(rng)))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    if rng.gen_bool(0.2) {
        lengths[2] = lengths[rng.gen_range(0..2)].clone();
    }
    let (a, b, c) = (&lengths[0], &lengths[1], &lengths[2]);
    if !length_less(a, b) {
        return Ok(());
    }
    let less = |p: &CReal, q: &CReal| (q.clone() - p.clone()).sign() == Sign::Positive;
    match ok(length_cotrans(a, b, c))? {
        Decision::First => ensure!(less(a.value(), c.value())),
        Decision::Second => ensure!(less(c.value(), b.value())),
    }
    Ok(())
}

pub fn length_trichotomy(rng: &mut R) -> Result<(), String> {
    let (a, b) = (gen::point(rng), gen::point(rng));
    let (c, d) = if rng.gen_bool(0.2) {
        (b.clone(), a.clone())
    } else {
        (gen::point(rng), gen::point(rng))
    };
    let (x, y) = (ok(length_of(&a, &b))?, ok(length_of(&c, &d))?);
    let ord = length_decide(&x, &y);
    let outcomes = [length_less(&x, &y), x == y, length_less(&y, &x)];
    ensure!(outcomes.iter().filter(|o| **o).count() == 1, "exactly one of <, =, >");
    let squares = (gen::squared(&a, &b) - gen::squared(&c, &d)).sign();
    ensure!(ord == squares.to_ordering(), "order agrees with squared lengths");
    Ok(())
}

pub fn angle_trichotomy(rng: &mut R) -> Result<(), String> {
    let o = gen::point(rng);
    let base = gen::ray_from(rng, &o);
    let r1 = gen::ray_from(rng, &o);
    let r2 = match rng.gen_range(0..4) {
        0 => r1.clone(),
        1 => opposite_ray(&base),
        2 => base.clone(),
        _ => gen::ray_from(rng, &o),
    };
    let (x, y) = (ok(measure_of(&base, &r1))?, ok(measure_of(&base, &r2))?);
    let outcomes = [angle_less(&x, &y), x == y, angle_less(&y, &x)];
    ensure!(outcomes.iter().filter(|o| **o).count() == 1, "exactly one of <, =, >");
    let ord = angle_decide(&x, &y);
    ensure!(ord == angle_decide(&y, &x).reverse(), "antisymmetric");
    ensure!((ord == Ordering::Equal) == (x == y));
    Ok(())
}

pub const ALL: &[(&str, super::Prop)] = &[
    ("distinct points", distinct_points),
    ("point off a line", off_line),
    ("pasch", pasch),
    ("crossing lines", lines_cross),
    ("distinct lines", lines_distinct),
    ("point off two lines", point_off_two_lines),
    ("ray direction", ray_direction),
    ("flag orientation", flag_orientation),
    ("length cotransitivity", length_cotransitivity),
    ("length trichotomy", length_trichotomy),
    ("angle trichotomy", angle_trichotomy),
];
