use std::fmt;

/// Static kind of a bound identifier or argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Point,
    Line,
    Ray,
    Decision,
    Length,
    Angle,
    /// A literal point `(x, y)`; only `point` accepts one.
    Literal,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Point => "point",
            Kind::Line => "line",
            Kind::Ray => "ray",
            Kind::Decision => "decision",
            Kind::Length => "length",
            Kind::Angle => "angle",
            Kind::Literal => "literal point",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A `let` operation: mnemonic, implementing function, accepted argument
/// kinds, result kind, and the argument positions that must name distinct
/// objects (checked by the linter).
#[derive(Debug)]
pub struct OpSpec {
    pub name: &'static str,
    pub target: &'static str,
    pub sigs: &'static [&'static [Kind]],
    pub result: Kind,
    pub distinct: &'static [(usize, usize)],
}

#[derive(Debug)]
pub struct PredSpec {
    pub name: &'static str,
    pub target: &'static str,
    pub sigs: &'static [&'static [Kind]],
}

use Kind::{Angle as A, Length as N, Line as L, Point as P, Ray as R};

const P7: &[Kind] = &[P, P, P, P, P, P, P];
const P6: &[Kind] = &[P, P, P, P, P, P];
const P4: &[Kind] = &[P, P, P, P];

macro_rules! op {
    ($name:literal, $target:literal, [$($sig:expr),*], $res:expr) => {
        op!($name, $target, [$($sig),*], $res, [])
    };
    ($name:literal, $target:literal, [$($sig:expr),*], $res:expr, [$($d:expr),*]) => {
        OpSpec { name: $name, target: $target, sigs: &[$($sig),*], result: $res, distinct: &[$($d),*] }
    };
}

pub const LET_OPS: &[OpSpec] = &[
    op!("point", "kernel::draw_point", [&[], &[Kind::Literal]], P),
    op!("distinct_point", "kernel::draw_distinct_point", [&[P]], P),
    op!("decide_distinct", "kernel::decide_distinct", [&[P, P, P]], Kind::Decision, [(0, 1)]),
    op!("point_on", "kernel::point_on_line", [&[L]], P),
    op!("distinct_point_on", "kernel::distinct_point_on_line", [&[L, P]], P),
    op!("point_off", "kernel::point_off_line", [&[L]], P),
    op!("join", "kernel::join", [&[P, P]], L, [(0, 1)]),
    op!("decide_off_line", "kernel::decide_off_line", [&[P, P, L, L]], Kind::Decision, [(0, 1), (2, 3)]),
    op!("meet", "kernel::meet", [&[L, L]], P, [(0, 1)]),
    op!("cut_line_circle", "kernel::cut_line_circle", [&[P, P, P]], P, [(0, 1), (1, 2)]),
    op!("decide_pasch", "kernel::decide_pasch", [&[P, P, P, L]], Kind::Decision, [(0, 1)]),
    op!("cut_circles", "kernel::cut_circles", [P7], P, [(0, 3), (1, 2), (4, 5)]),
    op!("line_through", "constructions::line_through_point", [&[P]], L),
    op!("any_line", "constructions::any_line", [&[]], L),
    op!("line_avoiding", "constructions::line_avoiding_point", [&[P]], L),
    op!("distinct_line_through", "constructions::distinct_line_through", [&[P, L]], L),
    op!("crossing_line", "constructions::any_crossing_line", [&[L]], L),
    op!("decide_point_off_lines", "constructions::decide_point_off_two_lines", [&[P, P, L, L]], Kind::Decision, [(0, 1), (2, 3)]),
    op!("point_between", "constructions::point_between", [&[P, P]], P, [(0, 1)]),
    op!("point_beyond", "constructions::point_beyond", [&[P, P]], P, [(0, 1)]),
    op!("ray", "model::Ray::new", [&[P, P]], R, [(0, 1)]),
    op!("opposite_ray", "model::opposite_ray", [&[R]], R),
    op!("ray_between", "constructions::ray_between", [&[R, R]], R, [(0, 1)]),
    op!("ray_beyond", "constructions::ray_beyond", [&[R, R]], R, [(0, 1)]),
    op!("decide_ray_direction", "constructions::decide_ray_direction", [&[R, R]], Kind::Decision),
    op!("decide_orientation", "constructions::decide_flag_orientation", [&[R, R, R, R]], Kind::Decision, [(0, 1), (2, 3)]),
    op!("equilateral", "constructions::equilateral", [&[P, P, P]], P, [(0, 1), (0, 2), (1, 2)]),
    op!("transfer_segment", "constructions::transfer_segment", [P4], P, [(0, 1)]),
    op!("parallel_through", "constructions::parallel_through", [&[P, L]], L),
    op!("decide_lines_cross", "constructions::decide_lines_cross", [&[L, L, L]], Kind::Decision, [(0, 1)]),
    op!("decide_lines_distinct", "constructions::decide_lines_distinct", [&[L, L, L]], Kind::Decision, [(0, 1)]),
    op!("length", "quantities::length_of", [&[P, P]], N),
    op!("len_add", "quantities::length_add", [&[N, N]], N),
    op!("len_cotrans", "quantities::length_cotrans", [&[N, N, N]], Kind::Decision),
    op!("len_compare", "quantities::length_decide", [&[N, N]], Kind::Decision),
    op!("measure", "quantities::measure_of", [&[R, R]], A),
    op!("angle_add", "quantities::angle_add", [&[A, A]], A),
    op!("angle_class", "quantities::angle_classify", [&[A]], Kind::Decision),
    op!("angle_compare", "quantities::angle_decide", [&[A, A]], Kind::Decision),
    op!("nonoriented", "quantities::nonoriented_measure", [&[P, P, P]], A, [(0, 1), (1, 2)]),
    op!("transfer_angle", "congruence::transfer_angle", [P6], P, [(3, 4)]),
    op!("transfer_angle_ray", "congruence::transfer_angle_ray", [P6], R, [(3, 4)]),
    op!("superpose", "congruence::superpose", [P6], P, [(3, 4)]),
    op!("draw_angle", "congruence::draw_angle_oriented", [&[R, A]], R),
];

macro_rules! pred {
    ($name:literal, $target:literal, [$($sig:expr),*]) => {
        PredSpec { name: $name, target: $target, sigs: &[$($sig),*] }
    };
}

pub const PREDICATES: &[PredSpec] = &[
    pred!("eq", "model::coincide_points", [&[P, P]]),
    pred!("neq", "model::coincide_points", [&[P, P]]),
    pred!("same_line", "model::coincide_lines", [&[L, L]]),
    pred!("intersect", "model::lines_intersect", [&[L, L]]),
    pred!("incident", "model::incident", [&[P, L]]),
    pred!("not_incident", "model::incident", [&[P, L]]),
    pred!("collinear", "model::collinear", [&[P, P, P]]),
    pred!("between", "model::between", [&[P, P, P]]),
    pred!("same_side", "model::same_side", [&[L, P, P]]),
    pred!("opposite_side", "model::opposite_side", [&[L, P, P]]),
    pred!("same_ray", "model::same_ray", [&[P, P, P]]),
    pred!("same_direction", "model::same_direction", [&[R, R]]),
    pred!("parallel", "model::parallel", [&[L, L]]),
    pred!("len_eq", "quantities::length_decide", [&[N, N], P4]),
    pred!("len_less", "quantities::length_less", [&[N, N], P4]),
    pred!("angle_eq", "quantities::angle_decide", [&[A, A], P6]),
    pred!("angle_less", "quantities::angle_less", [&[A, A], P6]),
    pred!("congruent", "congruence::congruent", [P6]),
];

/// Every tag a decision-valued step can produce.
pub const DECISION_TAGS: &[&str] = &[
    "First", "Second", "Less", "Equal", "Greater", "Null", "Convex", "Straight", "Reflex",
];

pub fn let_op(name: &str) -> Option<&'static OpSpec> {
    LET_OPS.iter().find(|o| o.name == name)
}

pub fn predicate(name: &str) -> Option<&'static PredSpec> {
    PREDICATES.iter().find(|p| p.name == name)
}

/// Human-readable arity list, e.g. `0 or 1`.
pub fn arities(sigs: &[&[Kind]]) -> String {
    let mut n: Vec<usize> = sigs.iter().map(|s| s.len()).collect();
    n.sort_unstable();
    n.dedup();
    n.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(" or ")
}
