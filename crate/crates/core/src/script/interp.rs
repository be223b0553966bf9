use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use super::{Arg, Program, Stmt};
use crate::cfield::{with_depth_limit, CReal, DEFAULT_DEPTH_LIMIT};
use crate::congruence;
use crate::constructions as cons;
use crate::error::Error;
use crate::kernel::{self, KernelCtx};
use crate::model;
use crate::quantities::{self as q, AngleClass};
use crate::{Flag, Length, Line, Point, Ray, Rotation, Triangle};

/// Execution settings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub seed: u64,
    /// Digits after the decimal point in approximations.
    pub digits: usize,
    pub max_depth: u32,
}

impl Default for Options {
    fn default() -> Self {
        Options { seed: 0, digits: 6, max_depth: DEFAULT_DEPTH_LIMIT }
    }
}

/// A value bound by a `let`.
#[derive(Debug, Clone)]
pub enum Value {
    Point(Point),
    Line(Line),
    Ray(Ray),
    Decision(&'static str),
    Length(Length),
    Angle(Rotation),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Point(_) => "point",
            Value::Line(_) => "line",
            Value::Ray(_) => "ray",
            Value::Decision(_) => "decision",
            Value::Length(_) => "length",
            Value::Angle(_) => "angle",
        }
    }

    /// Largest square-root nesting depth among the coordinates.
    pub fn sqrt_depth(&self) -> u32 {
        let pts: Vec<&Point> = match self {
            Value::Point(p) => vec![p],
            Value::Line(l) => vec![l.p(), l.q()],
            Value::Ray(r) => vec![r.origin(), r.director()],
            Value::Decision(_) => vec![],
            Value::Length(n) => return n.value().depth(),
            Value::Angle(a) => return a.c().depth().max(a.s().depth()),
        };
        pts.iter().map(|p| p.x.depth().max(p.y.depth())).max().unwrap_or(0)
    }

    fn scalars(&self) -> Vec<&CReal> {
        match self {
            Value::Point(p) => vec![&p.x, &p.y],
            Value::Line(l) => vec![&l.p().x, &l.p().y, &l.q().x, &l.q().y],
            Value::Ray(r) => vec![&r.origin().x, &r.origin().y, &r.director().x, &r.director().y],
            Value::Decision(_) => vec![],
            Value::Length(n) => vec![n.value()],
            Value::Angle(a) => vec![a.c(), a.s()],
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Point(p) => write!(f, "{p}"),
            Value::Line(l) => write!(f, "line({}, {})", l.p(), l.q()),
            Value::Ray(r) => write!(f, "ray({}, {})", r.origin(), r.director()),
            Value::Decision(t) => f.write_str(t),
            Value::Length(n) => write!(f, "|{}|", n.value()),
            Value::Angle(a) => write!(f, "rot({}, {})", a.c(), a.s()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Step {
    pub i: usize,
    /// Identifier bound by the step.
    pub name: String,
    pub op: String,
    pub args: Vec<String>,
    pub kind: &'static str,
    pub exact: Vec<String>,
    pub approx: Vec<String>,
    #[serde(skip)]
    pub value: Value,
    /// Values of the arguments, in order; literal points appear as points.
    #[serde(skip)]
    pub inputs: Vec<Value>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AssertRecord {
    pub i: usize,
    pub pred: String,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Trace {
    pub version: u32,
    pub seed: u64,
    pub steps: Vec<Step>,
    pub asserts: Vec<AssertRecord>,
}

impl Trace {
    fn new(seed: u64) -> Self {
        Trace { version: 1, seed, steps: Vec::new(), asserts: Vec::new() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serializes")
    }

    /// Largest square-root nesting depth over all step values.
    pub fn max_sqrt_depth(&self) -> u32 {
        self.steps.iter().map(|s| s.value.sqrt_depth()).max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExecError {
    #[error("step {step}: {op}: precondition `{name}` violated")]
    PreconditionViolated { step: usize, op: String, name: String },
    #[error("step {step}: assertion failed: {rendering}")]
    AssertionFailed { step: usize, pred: String, rendering: String },
    #[error("step {step}: square root nesting exceeds depth limit {limit}")]
    DepthLimitExceeded { step: usize, limit: u32 },
    #[error("step {step}: {message}")]
    Arithmetic { step: usize, message: String },
}

impl ExecError {
    pub fn step(&self) -> usize {
        match self {
            ExecError::PreconditionViolated { step, .. }
            | ExecError::AssertionFailed { step, .. }
            | ExecError::DepthLimitExceeded { step, .. }
            | ExecError::Arithmetic { step, .. } => *step,
        }
    }

    fn from_core(step: usize, e: Error) -> Self {
        match e {
            Error::PreconditionViolated { op, name } => ExecError::PreconditionViolated {
                step,
                op: op.to_string(),
                name: name.to_string(),
            },
            Error::DepthLimitExceeded { limit, .. } => ExecError::DepthLimitExceeded { step, limit },
            other => ExecError::Arithmetic { step, message: other.to_string() },
        }
    }
}

/// A failed run together with the trace up to the failing step.
#[derive(Debug, Clone, Error)]
#[error("{error}")]
pub struct ExecFailure {
    pub error: ExecError,
    pub trace: Box<Trace>,
}

fn tag(d: model::Decision) -> &'static str {
    match d {
        model::Decision::First => "First",
        model::Decision::Second => "Second",
    }
}

fn ordering_tag(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "Less",
        Ordering::Equal => "Equal",
        Ordering::Greater => "Greater",
    }
}

fn class_tag(c: AngleClass) -> &'static str {
    match c {
        AngleClass::Null => "Null",
        AngleClass::Convex => "Convex",
        AngleClass::Straight => "Straight",
        AngleClass::Reflex => "Reflex",
    }
}

fn pt(v: &Value) -> &Point {
    match v {
        Value::Point(p) => p,
        other => unreachable!("statically checked point, found {}", other.kind()),
    }
}

fn ln(v: &Value) -> &Line {
    match v {
        Value::Line(l) => l,
        other => unreachable!("statically checked line, found {}", other.kind()),
    }
}

fn ry(v: &Value) -> &Ray {
    match v {
        Value::Ray(r) => r,
        other => unreachable!("statically checked ray, found {}", other.kind()),
    }
}

fn len(v: &Value) -> &Length {
    match v {
        Value::Length(n) => n,
        other => unreachable!("statically checked length, found {}", other.kind()),
    }
}

fn ang(v: &Value) -> &Rotation {
    match v {
        Value::Angle(a) => a,
        other => unreachable!("statically checked angle, found {}", other.kind()),
    }
}

fn apply(ctx: &mut KernelCtx, op: &str, a: &[Value]) -> crate::Result<Value> {
    use Value::{Angle, Decision, Length as Len, Line as L, Point as P, Ray as R};
    Ok(match (op, a.len()) {
        ("point", 0) => P(kernel::draw_point(ctx)),
        ("point", 1) => P(pt(&a[0]).clone()),
        ("distinct_point", _) => P(kernel::draw_distinct_point(ctx, pt(&a[0]))),
        ("decide_distinct", _) => Decision(tag(kernel::decide_distinct(pt(&a[0]), pt(&a[1]), pt(&a[2]))?)),
        ("point_on", _) => P(kernel::point_on_line(ctx, ln(&a[0]))),
        ("distinct_point_on", _) => P(kernel::distinct_point_on_line(ctx, ln(&a[0]), pt(&a[1]))?),
        ("point_off", _) => P(kernel::point_off_line(ctx, ln(&a[0]))),
        ("join", _) => L(kernel::join(pt(&a[0]), pt(&a[1]))?),
        ("decide_off_line", _) => Decision(tag(kernel::decide_off_line(
            pt(&a[0]),
            pt(&a[1]),
            ln(&a[2]),
            ln(&a[3]),
        )?)),
        ("meet", _) => P(kernel::meet(ln(&a[0]), ln(&a[1]))?),
        ("cut_line_circle", _) => P(kernel::cut_line_circle(pt(&a[0]), pt(&a[1]), pt(&a[2]))?),
        ("decide_pasch", _) => Decision(tag(kernel::decide_pasch(
            pt(&a[0]),
            pt(&a[1]),
            pt(&a[2]),
            ln(&a[3]),
        )?)),
        ("cut_circles", _) => P(kernel::cut_circles(
            pt(&a[0]),
            pt(&a[1]),
            pt(&a[2]),
            pt(&a[3]),
            pt(&a[4]),
            pt(&a[5]),
            pt(&a[6]),
        )?),
        ("line_through", _) => L(cons::line_through_point(ctx, pt(&a[0]))?),
        ("any_line", _) => L(cons::any_line(ctx)?),
        ("line_avoiding", _) => L(cons::line_avoiding_point(ctx, pt(&a[0]))?),
        ("distinct_line_through", _) => L(cons::distinct_line_through(ctx, pt(&a[0]), ln(&a[1]))?),
        ("crossing_line", _) => L(cons::any_crossing_line(ctx, ln(&a[0]))?),
        ("decide_point_off_lines", _) => Decision(tag(cons::decide_point_off_two_lines(
            ctx,
            pt(&a[0]),
            pt(&a[1]),
            ln(&a[2]),
            ln(&a[3]),
        )?)),
        ("point_between", _) => P(cons::point_between(ctx, pt(&a[0]), pt(&a[1]))?),
        ("point_beyond", _) => P(cons::point_beyond(pt(&a[0]), pt(&a[1]))?),
        ("ray", _) => R(Ray::new(pt(&a[0]).clone(), pt(&a[1]).clone())?),
        ("opposite_ray", _) => R(model::opposite_ray(ry(&a[0]))),
        ("ray_between", _) => R(cons::ray_between(ctx, ry(&a[0]), ry(&a[1]))?),
        ("ray_beyond", _) => R(cons::ray_beyond(ry(&a[0]), ry(&a[1]))?),
        ("decide_ray_direction", _) => Decision(tag(cons::decide_ray_direction(ry(&a[0]), ry(&a[1]))?)),
        ("decide_orientation", _) => {
            let x = Flag::new(ry(&a[0]).clone(), ry(&a[1]).clone())?;
            let y = Flag::new(ry(&a[2]).clone(), ry(&a[3]).clone())?;
            Decision(tag(cons::decide_flag_orientation(&x, &y)))
        }
        ("equilateral", _) => P(cons::equilateral(pt(&a[0]), pt(&a[1]), pt(&a[2]))?),
        ("transfer_segment", _) => P(cons::transfer_segment(
            ctx,
            pt(&a[0]),
            pt(&a[1]),
            pt(&a[2]),
            pt(&a[3]),
        )?),
        ("parallel_through", _) => L(cons::parallel_through(ctx, pt(&a[0]), ln(&a[1]))?),
        ("decide_lines_cross", _) => Decision(tag(cons::decide_lines_cross(ln(&a[0]), ln(&a[1]), ln(&a[2]))?)),
        ("decide_lines_distinct", _) => Decision(tag(cons::decide_lines_distinct(
            ln(&a[0]),
            ln(&a[1]),
            ln(&a[2]),
        )?)),
        ("length", _) => Len(q::length_of(pt(&a[0]), pt(&a[1]))?),
        ("len_add", _) => Len(q::length_add(len(&a[0]), len(&a[1]))),
        ("len_cotrans", _) => Decision(tag(q::length_cotrans(len(&a[0]), len(&a[1]), len(&a[2]))?)),
        ("len_compare", _) => Decision(ordering_tag(q::length_decide(len(&a[0]), len(&a[1])))),
        ("measure", _) => Angle(q::measure_of(ry(&a[0]), ry(&a[1]))?),
        ("angle_add", _) => Angle(q::angle_add(ang(&a[0]), ang(&a[1]))),
        ("angle_class", _) => Decision(class_tag(q::angle_classify(ang(&a[0])))),
        ("angle_compare", _) => Decision(ordering_tag(q::angle_decide(ang(&a[0]), ang(&a[1])))),
        ("nonoriented", _) => Angle(q::nonoriented_measure(pt(&a[0]), pt(&a[1]), pt(&a[2]))?),
        ("transfer_angle", _) => P(congruence::transfer_angle(
            ctx,
            pt(&a[0]),
            pt(&a[1]),
            pt(&a[2]),
            pt(&a[3]),
            pt(&a[4]),
            pt(&a[5]),
        )?),
        ("transfer_angle_ray", _) => R(congruence::transfer_angle_ray(
            ctx,
            pt(&a[0]),
            pt(&a[1]),
            pt(&a[2]),
            pt(&a[3]),
            pt(&a[4]),
            pt(&a[5]),
        )?),
        ("superpose", _) => P(congruence::superpose(
            ctx,
            pt(&a[0]),
            pt(&a[1]),
            pt(&a[2]),
            pt(&a[3]),
            pt(&a[4]),
            pt(&a[5]),
        )?),
        ("draw_angle", _) => R(congruence::draw_angle_oriented(ctx, ry(&a[0]), ang(&a[1]))?),
        (other, n) => unreachable!("unchecked operation {other}/{n}"),
    })
}

fn holds(pred: &str, a: &[Value]) -> crate::Result<bool> {
    let lengths = |a: &[Value]| -> crate::Result<(Length, Length)> {
        Ok(if a.len() == 2 {
            (len(&a[0]).clone(), len(&a[1]).clone())
        } else {
            (q::length_of(pt(&a[0]), pt(&a[1]))?, q::length_of(pt(&a[2]), pt(&a[3]))?)
        })
    };
    let angles = |a: &[Value]| -> crate::Result<(Rotation, Rotation)> {
        Ok(if a.len() == 2 {
            (ang(&a[0]).clone(), ang(&a[1]).clone())
        } else {
            (
                q::nonoriented_measure(pt(&a[0]), pt(&a[1]), pt(&a[2]))?,
                q::nonoriented_measure(pt(&a[3]), pt(&a[4]), pt(&a[5]))?,
            )
        })
    };
    Ok(match pred {
        "eq" => model::coincide_points(pt(&a[0]), pt(&a[1])),
        "neq" => !model::coincide_points(pt(&a[0]), pt(&a[1])),
        "same_line" => model::coincide_lines(ln(&a[0]), ln(&a[1])),
        "intersect" => model::lines_intersect(ln(&a[0]), ln(&a[1])),
        "incident" => model::incident(pt(&a[0]), ln(&a[1])),
        "not_incident" => !model::incident(pt(&a[0]), ln(&a[1])),
        "collinear" => model::collinear(pt(&a[0]), pt(&a[1]), pt(&a[2])),
        "between" => model::between(pt(&a[0]), pt(&a[1]), pt(&a[2])),
        "same_side" => model::same_side(ln(&a[0]), pt(&a[1]), pt(&a[2])),
        "opposite_side" => model::opposite_side(ln(&a[0]), pt(&a[1]), pt(&a[2])),
        "same_ray" => model::same_ray(pt(&a[0]), pt(&a[1]), pt(&a[2])),
        "same_direction" => model::same_direction(ry(&a[0]), ry(&a[1])),
        "parallel" => model::parallel(ln(&a[0]), ln(&a[1])),
        "len_eq" => {
            let (x, y) = lengths(a)?;
            q::length_decide(&x, &y) == Ordering::Equal
        }
        "len_less" => {
            let (x, y) = lengths(a)?;
            q::length_less(&x, &y)
        }
        "angle_eq" => {
            let (x, y) = angles(a)?;
            q::angle_decide(&x, &y) == Ordering::Equal
        }
        "angle_less" => {
            let (x, y) = angles(a)?;
            q::angle_less(&x, &y)
        }
        "congruent" => {
            let t1 = Triangle::new(pt(&a[0]).clone(), pt(&a[1]).clone(), pt(&a[2]).clone())?;
            let t2 = Triangle::new(pt(&a[3]).clone(), pt(&a[4]).clone(), pt(&a[5]).clone())?;
            congruence::congruent(&t1, &t2)?
        }
        other => unreachable!("unchecked predicate {other}"),
    })
}

fn arg_text(arg: &Arg) -> Vec<String> {
    match arg {
        Arg::Name(id) => vec![id.name.clone()],
        Arg::Literal { x, y, .. } => vec![CReal::from(x.clone()).to_string(), CReal::from(y.clone()).to_string()],
    }
}

struct Machine<'o> {
    ctx: KernelCtx,
    opts: &'o Options,
    trace: Trace,
    next: usize,
}

impl Machine<'_> {
    fn resolve(&self, args: &[Arg], env: &HashMap<String, Value>) -> Vec<Value> {
        args.iter()
            .map(|a| match a {
                Arg::Name(id) => env.get(&id.name).cloned().expect("statically checked identifier"),
                Arg::Literal { x, y, .. } => {
                    Value::Point(Point::new(CReal::from(x.clone()), CReal::from(y.clone())))
                }
            })
            .collect()
    }

    fn block(&mut self, stmts: &[Stmt], env: &mut HashMap<String, Value>) -> Result<(), ExecError> {
        for stmt in stmts {
            match stmt {
                Stmt::Let { name, op, args } => {
                    let i = self.next;
                    self.next += 1;
                    let inputs = self.resolve(args, env);
                    let value = apply(&mut self.ctx, &op.name, &inputs)
                        .map_err(|e| ExecError::from_core(i, e))?;
                    let digits = self.opts.digits;
                    let (exact, approx) = match &value {
                        Value::Decision(t) => (vec![t.to_string()], Vec::new()),
                        v => (
                            v.scalars().iter().map(|s| s.to_string()).collect(),
                            v.scalars().iter().map(|s| s.to_decimal(digits)).collect(),
                        ),
                    };
                    self.trace.steps.push(Step {
                        i,
                        name: name.name.clone(),
                        op: op.name.clone(),
                        args: args.iter().flat_map(arg_text).collect(),
                        kind: value.kind(),
                        exact,
                        approx,
                        value: value.clone(),
                        inputs,
                    });
                    env.insert(name.name.clone(), value);
                }
                Stmt::Assert { pred, args } => {
                    let i = self.next;
                    self.next += 1;
                    let inputs = self.resolve(args, env);
                    let ok = holds(&pred.name, &inputs).map_err(|e| ExecError::from_core(i, e))?;
                    self.trace.asserts.push(AssertRecord { i, pred: pred.name.clone(), ok });
                    if !ok {
                        let operands: Vec<String> = args
                            .iter()
                            .zip(&inputs)
                            .map(|(a, v)| match a {
                                Arg::Name(id) => format!("{} = {}", id.name, v),
                                Arg::Literal { .. } => v.to_string(),
                            })
                            .collect();
                        return Err(ExecError::AssertionFailed {
                            step: i,
                            pred: pred.name.clone(),
                            rendering: format!("{}({})", pred.name, operands.join(", ")),
                        });
                    }
                }
                Stmt::Branch { decision, tag, body } => {
                    let taken = matches!(env.get(&decision.name), Some(Value::Decision(t)) if *t == tag.name);
                    if taken {
                        let mut inner = env.clone();
                        self.block(body, &mut inner)?;
                    } else {
                        self.next += Program { stmts: body.clone() }.executable_count();
                    }
                }
                Stmt::Comment(_) | Stmt::Blank => {}
            }
        }
        Ok(())
    }
}

/// Runs a checked program. Replaying with the same options gives an
/// identical trace.
pub fn execute(program: &Program, opts: &Options) -> Result<Trace, ExecFailure> {
    with_depth_limit(opts.max_depth, || {
        let mut m = Machine { ctx: KernelCtx::new(opts.seed), opts, trace: Trace::new(opts.seed), next: 0 };
        let mut env = HashMap::new();
        match m.block(&program.stmts, &mut env) {
            Ok(()) => Ok(m.trace),
            Err(error) => Err(ExecFailure { error, trace: Box::new(m.trace) }),
        }
    })
}
