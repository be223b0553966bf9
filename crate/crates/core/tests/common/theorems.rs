use std::cmp::Ordering;

use euclid_core::congruence::{congruent, superpose, transfer_angle};
use euclid_core::constructions::transfer_segment;
use euclid_core::kernel::{
    between, coincide_lines, coincide_points, collinear, cut_line_circle, flipped_flag, incident,
    join, meet, opposite_ray, opposite_side, ordered4, orientation, parallel, same_direction,
    same_ray, same_side, KernelCtx,
};
use euclid_core::model::{flag_equiv, flag_equiv_witnessed, same_direction_by_definition};
use euclid_core::quantities::{
    angle_add, angle_decide, angle_less, length_add, length_decide, length_less, length_of,
    nonoriented_measure, measure_of,
};
use euclid_core::{CReal, Flag, Length, Point, Ray, Rotation, Triangle};
use rand::Rng;

use super::field::{eval, expr};
use super::gen::{self, R};
use super::{ensure, ok};

fn collinear_pair(rng: &mut R, a: &Point, b: &Point) -> (Point, Point) {
    let ts = gen::increasing(rng, 2);
    (gen::along(a, b, &ts[0]), gen::along(a, b, &ts[1]))
}

pub fn incidence_uniqueness(rng: &mut R) -> Result<(), String> {
    let a = gen::point(rng);
    let b = gen::other_point(rng, &a);
    let (c, d) = collinear_pair(rng, &a, &b);
    ensure!(coincide_lines(&ok(join(&a, &b))?, &ok(join(&c, &d))?), "two lines through two points");
    let x = gen::line(rng);
    let y = gen::line(rng);
    if !coincide_lines(&x, &y) && !parallel(&x, &y) {
        let m = ok(meet(&x, &y))?;
        ensure!(incident(&m, &x) && incident(&m, &y));
        let p = gen::on_line(rng, x.p(), x.q());
        ensure!(!incident(&p, &y) || coincide_points(&p, &m), "two common points coincide");
    }
    Ok(())
}

pub fn noncollinear_distinct(rng: &mut R) -> Result<(), String> {
    let (a, b, c) = (gen::point(rng), gen::point(rng), gen::point(rng));
    if !collinear(&a, &b, &c) {
        ensure!(a != b && b != c && a != c);
    }
    let (a, b, c) = gen::triangle(rng);
    ensure!(a != b && b != c && a != c);
    Ok(())
}

pub fn half_planes(rng: &mut R) -> Result<(), String> {
    let x = gen::line(rng);
    let pts: Vec<Point> = (0..3).map(|_| gen::point(rng)).collect();
    if pts.iter().any(|p| incident(p, &x)) {
        return Ok(());
    }
    let (a, b, c) = (&pts[0], &pts[1], &pts[2]);
    ensure!(same_side(&x, a, a), "reflexive");
    ensure!(same_side(&x, a, b) == same_side(&x, b, a), "symmetric");
    ensure!(same_side(&x, a, b) != opposite_side(&x, a, b), "exactly one relation");
    if same_side(&x, a, b) && same_side(&x, b, c) {
        ensure!(same_side(&x, a, c), "transitive");
    }
    if opposite_side(&x, a, b) {
        ensure!(opposite_side(&x, a, c) != opposite_side(&x, c, b), "cotransitivity from opposite");
    }
    if same_side(&x, a, b) && opposite_side(&x, b, c) {
        ensure!(opposite_side(&x, a, c), "opposite from same and opposite");
    }
    if opposite_side(&x, a, b) && opposite_side(&x, b, c) {
        ensure!(same_side(&x, a, c), "two opposites make same");
    }
    Ok(())
}

pub fn betweenness_and_rays(rng: &mut R) -> Result<(), String> {
    let a = gen::point(rng);
    let e = gen::other_point(rng, &a);
    let picks: Vec<CReal> = (0..3).map(|_| gen::rat(rng, 4)).collect();
    let [p, q, r] = [0, 1, 2].map(|i| gen::along(&a, &e, &picks[i]));
    let characterised = same_ray(&p, &q, &r) && same_ray(&r, &q, &p);
    ensure!(between(&p, &q, &r) == characterised, "between iff two same-ray conditions");

    let ts = gen::increasing(rng, 4);
    let [w, x, y, z] = [0, 1, 2, 3].map(|i| gen::along(&a, &e, &ts[i]));
    ensure!(between(&w, &x, &y) && between(&x, &y, &z));
    ensure!(ordered4(&w, &x, &y, &z), "four points from consecutive triples");
    ensure!(between(&w, &y, &z));
    ensure!(ordered4(&w, &x, &y, &z), "four points from nested triples");
    Ok(())
}

fn scaled_ray(rng: &mut R, r: &Ray, sign: i64) -> Ray {
    let o2 = gen::on_line(rng, r.origin(), r.director());
    let k = gen::positive_rat(rng, 4) * CReal::from(sign);
    let d = r.director();
    let o = r.origin();
    let dir = Point::new(
        o2.x.clone() + k.clone() * (d.x.clone() - o.x.clone()),
        o2.y.clone() + k * (d.y.clone() - o.y.clone()),
    );
    Ray::new(o2, dir).expect("non-zero offset")
}

pub fn direction_classes(rng: &mut R) -> Result<(), String> {
    let o = gen::point(rng);
    let a = gen::ray_from(rng, &o);
    let rays: Vec<Ray> = (0..3)
        .map(|_| {
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            scaled_ray(rng, &a, sign)
        })
        .collect();
    for b in &rays {
        ensure!(same_direction(&a, b) == same_direction_by_definition(&a, b), "fast path agrees");
        ensure!(same_direction(&a, b) != same_direction(&a, &opposite_ray(b)), "never both, never neither");
        ensure!(same_direction(b, b));
        ensure!(same_direction(&a, b) == same_direction(b, &a));
    }
    let (b, c) = (&rays[1], &rays[2]);
    if same_direction(&a, b) && same_direction(b, c) {
        ensure!(same_direction(&a, c), "transitive");
    }
    if same_direction(&a, &rays[0]) == same_direction(&a, b) {
        ensure!(same_direction(&rays[0], b), "two classes per carrier");
    }
    Ok(())
}

fn random_flag(rng: &mut R) -> Flag {
    let (o, a, b) = gen::triangle(rng);
    Flag::new(Ray::new(o.clone(), a).expect("distinct"), Ray::new(o, b).expect("distinct"))
        .expect("non-collinear")
}

pub fn orientation_classes(rng: &mut R) -> Result<(), String> {
    let x = random_flag(rng);
    let y = random_flag(rng);
    let z = random_flag(rng);
    ensure!(orientation(&x) != orientation(&flipped_flag(&x)), "flip inverts");
    ensure!(orientation(&flipped_flag(&flipped_flag(&x))) == orientation(&x));
    ensure!(flag_equiv(&x, &y) == flag_equiv_witnessed(&x, &y), "determinant agrees with definition");
    if !flag_equiv(&x, &y) && !flag_equiv(&y, &z) {
        ensure!(flag_equiv(&x, &z), "only two classes");
    }
    Ok(())
}

fn length(rng: &mut R) -> Length {
    Length::new(eval(&expr(rng, 3)).abs()).expect("non-negative")
}

pub fn length_order(rng: &mut R) -> Result<(), String> {
    let (a, b, c) = (length(rng), length(rng), length(rng));
    ensure!(!length_less(&a, &Length::zero()), "non-negative");
    ensure!(!length_less(&a, &a), "irreflexive");
    let relations = [length_less(&a, &b), a == b, length_less(&b, &a)];
    ensure!(relations.iter().filter(|r| **r).count() == 1, "trichotomy");
    ensure!(match length_decide(&a, &b) {
        Ordering::Less => relations[0],
        Ordering::Equal => relations[1],
        Ordering::Greater => relations[2],
    });
    if length_less(&a, &b) && length_less(&b, &c) {
        ensure!(length_less(&a, &c), "transitive");
    }
    if length_less(&a, &b) {
        ensure!(length_less(&length_add(&a, &c), &length_add(&b, &c)), "compatible with addition");
    }
    Ok(())
}

fn angle(rng: &mut R) -> Rotation {
    let o = gen::rat_point(rng);
    let a = gen::ray_from(rng, &o);
    let b = gen::ray_from(rng, &o);
    measure_of(&a, &b).expect("shared origin")
}

pub fn angle_order(rng: &mut R) -> Result<(), String> {
    let (a, b, c) = (angle(rng), angle(rng), angle(rng));
    ensure!(!angle_less(&a, &Rotation::null()), "nothing below the null angle");
    ensure!(!angle_less(&a, &a), "irreflexive");
    let relations = [angle_less(&a, &b), a == b, angle_less(&b, &a)];
    ensure!(relations.iter().filter(|r| **r).count() == 1, "trichotomy");
    ensure!((angle_decide(&a, &b) == Ordering::Less) == relations[0]);
    if angle_less(&a, &b) && angle_less(&b, &c) {
        ensure!(angle_less(&a, &c), "transitive");
    }
    Ok(())
}

pub fn length_addition(rng: &mut R) -> Result<(), String> {
    let (a, b, c) = (length(rng), length(rng), length(rng));
    ensure!(length_add(&a, &Length::zero()) == a, "identity");
    ensure!(length_add(&a, &b) == length_add(&b, &a), "commutative");
    ensure!(
        length_add(&length_add(&a, &b), &c) == length_add(&a, &length_add(&b, &c)),
        "associative"
    );
    let d = if rng.gen_bool(0.5) { a.clone() } else { length(rng) };
    ensure!((length_add(&a, &c) == length_add(&d, &c)) == (a == d), "cancellation");

    let p = gen::point(rng);
    let r = gen::other_point(rng, &p);
    let q = gen::along(&p, &r, &CReal::ratio(rng.gen_range(0..=10), 10));
    let parts = length_add(&ok(length_of(&p, &q))?, &ok(length_of(&q, &r))?);
    ensure!(parts == ok(length_of(&p, &r))?, "sum of parts");
    Ok(())
}

pub fn angle_addition(rng: &mut R) -> Result<(), String> {
    let (a, b, c) = (angle(rng), angle(rng), angle(rng));
    ensure!(angle_add(&a, &Rotation::null()) == a, "identity");
    ensure!(angle_add(&a, &b) == angle_add(&b, &a), "commutative");
    ensure!(angle_add(&angle_add(&a, &b), &c) == angle_add(&a, &angle_add(&b, &c)), "associative");
    ensure!(angle_add(&a, &a.conjugate()) == Rotation::null(), "inverse");
    let d = if rng.gen_bool(0.5) { a.clone() } else { angle(rng) };
    ensure!((angle_add(&a, &c) == angle_add(&d, &c)) == (a == d), "cancellation");
    Ok(())
}

fn side_point(rng: &mut R, d: &Point, e: &Point) -> Point {
    loop {
        let p = gen::point(rng);
        if !collinear(d, e, &p) {
            return p;
        }
    }
}

fn tri(a: &Point, b: &Point, c: &Point) -> Result<Triangle, String> {
    ok(Triangle::new(a.clone(), b.clone(), c.clone()))
}

pub fn congruence_criteria(rng: &mut R) -> Result<(), String> {
    let mut ctx = KernelCtx::new(rng.gen());
    let (a, b, c) = gen::light_triangle(rng);
    let abc = tri(&a, &b, &c)?;
    let d = gen::rat_point(rng);
    let toward = gen::other_point(rng, &d);
    let e = ok(transfer_segment(&mut ctx, &d, &toward, &a, &b))?;
    let p = side_point(rng, &d, &e);

    // SAS: angle at D, then side DF.
    let on_ray = ok(transfer_angle(&mut ctx, &b, &a, &c, &d, &e, &p))?;
    let f_sas = ok(transfer_segment(&mut ctx, &d, &on_ray, &a, &c))?;
    ensure!(ok(congruent(&abc, &tri(&d, &e, &f_sas)?))?, "SAS");

    // ASA: angles at D and E, third vertex where the rays meet.
    let from_e = ok(transfer_angle(&mut ctx, &a, &b, &c, &e, &d, &p))?;
    let f_asa = ok(meet(&ok(join(&d, &on_ray))?, &ok(join(&e, &from_e))?))?;
    ensure!(ok(congruent(&abc, &tri(&d, &e, &f_asa)?))?, "ASA");

    // SSS: the superposed point has matching sides, hence matching angles.
    let f = ok(superpose(&mut ctx, &a, &b, &c, &d, &e, &p))?;
    ensure!(ok(length_of(&d, &f))? == ok(length_of(&a, &c))?);
    ensure!(ok(length_of(&e, &f))? == ok(length_of(&b, &c))?);
    ensure!(ok(nonoriented_measure(&e, &d, &f))? == ok(nonoriented_measure(&b, &a, &c))?, "SSS");
    ensure!(f == f_sas && f == f_asa);

    // Congruence bis: with two sides equal, third sides agree iff the included angles do.
    let w = gen::other_point(rng, &d);
    for g in [f_sas.clone(), ok(transfer_segment(&mut ctx, &d, &w, &a, &c))?] {
        if collinear(&d, &e, &g) {
            continue;
        }
        let sides = ok(length_of(&e, &g))? == ok(length_of(&b, &c))?;
        let angles = ok(nonoriented_measure(&e, &d, &g))? == ok(nonoriented_measure(&b, &a, &c))?;
        ensure!(sides == angles, "third side iff opposite angle");
    }

    // Triangle inequality.
    let [x, y, z] = [(&a, &b), (&b, &c), (&c, &a)].map(|(p, q)| length_of(p, q).expect("length"));
    ensure!(length_less(&x, &length_add(&y, &z)) && length_less(&y, &length_add(&z, &x)), "triangle inequality");
    ensure!(length_less(&z, &length_add(&x, &y)));
    Ok(())
}

pub fn circle_ordering(rng: &mut R) -> Result<(), String> {
    let o = gen::point(rng);
    let o2 = gen::other_point(rng, &o);
    let (u, v) = loop {
        let u = CReal::ratio(rng.gen_range(1..40), 20);
        let v = CReal::ratio(rng.gen_range(1..40), 20);
        let diff = (u.clone() - v.clone()).abs();
        if diff < CReal::one() && CReal::one() < u.clone() + v.clone() {
            break (u, v);
        }
    };
    let r1 = gen::along(&o, &o2, &u);
    let r2 = gen::along(&o2, &o, &v);
    let a = ok(cut_line_circle(&o2, &o, &r1))?;
    let b = ok(cut_line_circle(&a, &o, &a))?;
    let b2 = ok(cut_line_circle(&o, &o2, &r2))?;
    let a2 = ok(cut_line_circle(&b2, &o2, &b2))?;
    ensure!(ordered4(&a, &a2, &b, &b2), "intersecting circles cut the centre line in order");
    Ok(())
}

pub fn parallels_and_angle_sum(rng: &mut R) -> Result<(), String> {
    let x = gen::line(rng);
    let offset = |rng: &mut R| {
        let s = gen::rat_point(rng);
        let moved = |p: &Point| Point::new(p.x.clone() + s.x.clone(), p.y.clone() + s.y.clone());
        join(&moved(x.p()), &moved(x.q())).expect("translate keeps points distinct")
    };
    let (y, z) = (offset(rng), offset(rng));
    ensure!(parallel(&x, &x), "reflexive");
    ensure!(parallel(&x, &y) && parallel(&y, &x), "symmetric");
    ensure!(parallel(&y, &z) && parallel(&x, &z), "transitive");
    let w = gen::line(rng);
    ensure!(parallel(&x, &w) == parallel(&w, &x));

    let (a, b, c) = gen::triangle(rng);
    let sum = angle_add(
        &angle_add(&ok(nonoriented_measure(&b, &a, &c))?, &ok(nonoriented_measure(&a, &b, &c))?),
        &ok(nonoriented_measure(&a, &c, &b))?,
    );
    ensure!(sum == Rotation::straight(), "interior angles sum to a straight angle");
    Ok(())
}

pub const ALL: &[(&str, super::Prop)] = &[
    ("incidence uniqueness", incidence_uniqueness),
    ("non-collinear points are distinct", noncollinear_distinct),
    ("half-plane equivalence and cotransitivity", half_planes),
    ("betweenness, rays and four-point order", betweenness_and_rays),
    ("two directions, never both", direction_classes),
    ("two orientations, never both", orientation_classes),
    ("length order", length_order),
    ("angle order", angle_order),
    ("length addition", length_addition),
    ("angle addition", angle_addition),
    ("SAS, ASA, SSS and triangle inequality", congruence_criteria),
    ("circle ordering", circle_ordering),
    ("parallel equivalence and angle sum", parallels_and_angle_sum),
];
