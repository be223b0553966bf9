use euclid_core::congruence::{
    congruent, draw_angle_oriented, superpose, transfer_angle, transfer_angle_ray,
};
use euclid_core::constructions::{
    any_crossing_line, any_line, distinct_line_through, equilateral, line_avoiding_point,
    line_through_point, parallel_through, point_between, point_beyond, ray_beyond,
    ray_between as construct_ray_between, transfer_segment,
};
use euclid_core::kernel::{
    between, coincide_lines, coincide_points, collinear, cut_circles, incident, join,
    lines_intersect, parallel, ray_between, rays_coincide, same_ray, same_side, KernelCtx,
};
use euclid_core::quantities::{length_of, measure_of, nonoriented_measure};
use euclid_core::{CReal, Line, Point, Ray, Triangle};
use rand::Rng;

use super::gen::{self, R};
use super::{ensure, ok};

fn ctx(rng: &mut R) -> KernelCtx {
    KernelCtx::new(rng.gen())
}

pub fn lines(rng: &mut R) -> Result<(), String> {
    let mut ctx = ctx(rng);
    let a = gen::point(rng);
    let l = ok(line_through_point(&mut ctx, &a))?;
    ensure!(incident(&a, &l), "line through point");
    let _: Line = ok(any_line(&mut ctx))?;
    ensure!(!incident(&a, &ok(line_avoiding_point(&mut ctx, &a))?), "line avoiding point");
    let x = gen::line(rng);
    let on_x = gen::on_line(rng, x.p(), x.q());
    let y = ok(distinct_line_through(&mut ctx, &on_x, &x))?;
    ensure!(incident(&on_x, &y) && !coincide_lines(&x, &y) && lines_intersect(&x, &y));
    let z = ok(any_crossing_line(&mut ctx, &x))?;
    ensure!(!parallel(&x, &z), "crossing line");
    let m = ok(parallel_through(&mut ctx, &a, &x))?;
    ensure!(incident(&a, &m) && parallel(&m, &x), "parallel through point");
    Ok(())
}

pub fn points_on_segments(rng: &mut R) -> Result<(), String> {
    let mut ctx = ctx(rng);
    let a = gen::point(rng);
    let b = gen::other_point(rng, &a);
    let m = ok(point_between(&mut ctx, &a, &b))?;
    ensure!(between(&a, &m, &b), "point between");
    ensure!(ok(length_of(&a, &m))? == ok(length_of(&m, &b))?, "midpoint");
    let c = ok(point_beyond(&a, &b))?;
    ensure!(between(&a, &b, &c), "point beyond");
    Ok(())
}

pub fn rays(rng: &mut R) -> Result<(), String> {
    let mut ctx = ctx(rng);
    let (o, p, q) = gen::triangle(rng);
    let a = Ray::new(o.clone(), p).expect("distinct");
    let b = Ray::new(o, q).expect("distinct");
    let inner = ok(construct_ray_between(&mut ctx, &a, &b))?;
    ensure!(ok(ray_between(&a, &inner, &b))?, "ray between");
    let outer = ok(ray_beyond(&a, &b))?;
    ensure!(ok(ray_between(&a, &b, &outer))?, "ray beyond");
    Ok(())
}

pub fn equilateral_triangles(rng: &mut R) -> Result<(), String> {
    let (a, b, p) = gen::triangle(rng);
    let c = ok(equilateral(&a, &b, &p))?;
    let ab = ok(length_of(&a, &b))?;
    ensure!(ab == ok(length_of(&b, &c))? && ab == ok(length_of(&c, &a))?, "equal sides");
    ensure!(same_side(&ok(join(&a, &b))?, &c, &p), "requested side");
    Ok(())
}

pub fn segment_transfer(rng: &mut R) -> Result<(), String> {
    let mut ctx = ctx(rng);
    let o = gen::point(rng);
    let a = gen::other_point(rng, &o);
    let b = gen::point(rng);
    let c = if rng.gen_bool(0.15) { b.clone() } else { gen::point(rng) };
    let d = ok(transfer_segment(&mut ctx, &o, &a, &b, &c))?;
    ensure!(ok(length_of(&o, &d))? == ok(length_of(&b, &c))?, "transferred length");
    ensure!(same_ray(&o, &a, &d) || (d == o && b == c), "on the ray");
    Ok(())
}

pub fn superposition(rng: &mut R) -> Result<(), String> {
    let mut ctx = ctx(rng);
    let (a, b, c) = gen::light_triangle(rng);
    let d = gen::light_point(rng);
    let toward = gen::other_point(rng, &d);
    let e = ok(transfer_segment(&mut ctx, &d, &toward, &a, &b))?;
    let p = gen::point(rng);
    if collinear(&d, &e, &p) {
        return Ok(());
    }
    let f = ok(superpose(&mut ctx, &a, &b, &c, &d, &e, &p))?;
    let t1 = ok(Triangle::new(a, b, c))?;
    ensure!(ok(congruent(&t1, &ok(Triangle::new(d.clone(), e.clone(), f.clone()))?))?);
    ensure!(same_side(&ok(join(&d, &e))?, &f, &p));
    Ok(())
}

pub fn angle_transfer(rng: &mut R) -> Result<(), String> {
    let mut ctx = ctx(rng);
    let (a, o, b) = gen::light_triangle(rng);
    let (o2, a2, p) = gen::light_triangle(rng);
    let q = ok(transfer_angle(&mut ctx, &a, &o, &b, &o2, &a2, &p))?;
    ensure!(same_side(&ok(join(&o2, &a2))?, &q, &p), "requested side");
    ensure!(ok(nonoriented_measure(&a2, &o2, &q))? == ok(nonoriented_measure(&a, &o, &b))?, "equal angle");
    let r = ok(transfer_angle_ray(&mut ctx, &a, &o, &b, &o2, &a2, &p))?;
    ensure!(rays_coincide(&r, &Ray::new(o2, q).expect("distinct")), "ray wrapper");
    Ok(())
}

pub fn oriented_drawing(rng: &mut R) -> Result<(), String> {
    let mut ctx = ctx(rng);
    let o = gen::light_point(rng);
    let a = gen::ray_from(rng, &o);
    let o2 = gen::rat_point(rng);
    let alpha = ok(measure_of(&gen::ray_from(rng, &o2), &gen::ray_from(rng, &o2)))?;
    let b = ok(draw_angle_oriented(&mut ctx, &a, &alpha))?;
    ensure!(coincide_points(b.origin(), &o));
    ensure!(ok(measure_of(&a, &b))? == alpha, "oriented measure");
    Ok(())
}

fn pt(x: i64, y: i64) -> Point {
    Point::from_ints(x, y)
}

/// The fixed values: equilateral apex, segment transfer, circle-circle cut.
pub fn exact_examples() -> Result<(), String> {
    let mut ctx = KernelCtx::new(0);
    let half = CReal::ratio(1, 2);
    let root3 = gen::root(3);
    let apex = ok(equilateral(&pt(0, 0), &pt(1, 0), &pt(0, 1)))?;
    ensure!(apex == Point::new(half.clone(), root3 * half.clone()), "apex {apex}");
    let d = ok(transfer_segment(&mut ctx, &pt(0, 0), &pt(1, 0), &pt(3, 0), &pt(7, 0)))?;
    ensure!(d == pt(4, 0), "transfer {d}");
    let q = ok(cut_circles(&pt(0, 0), &pt(-2, 0), &pt(2, 0), &pt(3, 0), &pt(1, 0), &pt(5, 0), &pt(0, 1)))?;
    ensure!(q == Point::new(CReal::ratio(3, 2), gen::root(7) * half), "circles {q}");
    Ok(())
}

pub const ALL: &[(&str, super::Prop)] = &[
    ("line constructions", lines),
    ("point between and beyond", points_on_segments),
    ("ray between and beyond", rays),
    ("equilateral triangle", equilateral_triangles),
    ("segment transfer", segment_transfer),
    ("constructive superposition", superposition),
    ("angle transfer", angle_transfer),
    ("oriented angle drawing", oriented_drawing),
];
