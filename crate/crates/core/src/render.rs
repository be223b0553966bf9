//! SVG diagrams of executed scripts.
//!
//! All geometry, including the viewport and the clipping of lines and rays,
//! is computed exactly; only the final coordinates are rounded to decimals.

use thiserror::Error;

use crate::cfield::CReal;
use crate::quantities::length_of;
use crate::script::{Step, Trace, Value};
use crate::Point;

pub const DEFAULT_DIGITS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("trace has no steps")]
    EmptyTrace,
    #[error(transparent)]
    Arithmetic(#[from] crate::Error),
}

enum Shape {
    Circle { class: &'static str, c: Point, r: CReal },
    Segment { class: &'static str, a: Point, b: Point },
    Line { class: &'static str, p: Point, q: Point, ray: bool, name: String },
    Label { at: Point, text: String },
}

fn midpoint(a: &Point, b: &Point) -> Point {
    let half = CReal::ratio(1, 2);
    Point::new(
        (a.x.clone() + b.x.clone()) * half.clone(),
        (a.y.clone() + b.y.clone()) * half,
    )
}

fn point_of(v: &Value) -> Option<&Point> {
    match v {
        Value::Point(p) => Some(p),
        _ => None,
    }
}

fn circle(c: &Point, through: &Point) -> crate::Result<Shape> {
    Ok(Shape::Circle {
        class: "circle",
        c: c.clone(),
        r: length_of(c, through)?.value().clone(),
    })
}

fn shapes_for(step: &Step) -> crate::Result<Vec<Shape>> {
    let inputs: Vec<&Point> = step.inputs.iter().filter_map(point_of).collect();
    let mut out = Vec::new();
    match step.op.as_str() {
        "cut_line_circle" => out.push(circle(inputs[1], inputs[2])?),
        "cut_circles" => {
            out.push(circle(inputs[0], inputs[1])?);
            out.push(circle(inputs[3], inputs[4])?);
        }
        "equilateral" => {
            out.push(circle(inputs[0], inputs[1])?);
            out.push(circle(inputs[1], inputs[0])?);
        }
        _ => {}
    }
    match &step.value {
        Value::Point(p) => {
            if step.op == "equilateral" {
                for (a, b) in [(inputs[0], inputs[1]), (inputs[1], p), (p, inputs[0])] {
                    out.push(Shape::Segment { class: "segment", a: a.clone(), b: b.clone() });
                }
            }
            out.push(Shape::Circle { class: "point", c: p.clone(), r: CReal::zero() });
            out.push(Shape::Label { at: p.clone(), text: step.name.clone() });
        }
        Value::Line(l) => {
            out.push(Shape::Line {
                class: "line",
                p: l.p().clone(),
                q: l.q().clone(),
                ray: false,
                name: step.name.clone(),
            });
        }
        Value::Ray(r) => {
            out.push(Shape::Line {
                class: "ray",
                p: r.origin().clone(),
                q: r.director().clone(),
                ray: true,
                name: step.name.clone(),
            });
        }
        Value::Length(_) if inputs.len() == 2 => {
            out.push(Shape::Segment { class: "segment", a: inputs[0].clone(), b: inputs[1].clone() });
            out.push(Shape::Label { at: midpoint(inputs[0], inputs[1]), text: step.name.clone() });
        }
        _ => {}
    }
    Ok(out)
}

#[derive(Clone)]
struct Bounds {
    min_x: CReal,
    min_y: CReal,
    max_x: CReal,
    max_y: CReal,
}

impl Bounds {
    fn cover(b: &mut Option<Bounds>, x0: CReal, y0: CReal, x1: CReal, y1: CReal) {
        match b {
            None => *b = Some(Bounds { min_x: x0, min_y: y0, max_x: x1, max_y: y1 }),
            Some(b) => {
                b.min_x = b.min_x.clone().min(x0);
                b.min_y = b.min_y.clone().min(y0);
                b.max_x = b.max_x.clone().max(x1);
                b.max_y = b.max_y.clone().max(y1);
            }
        }
    }

    fn of(shapes: &[Shape]) -> Option<Bounds> {
        let mut b = None;
        let mut add = |p: &Point, r: &CReal| {
            Bounds::cover(
                &mut b,
                p.x.clone() - r.clone(),
                p.y.clone() - r.clone(),
                p.x.clone() + r.clone(),
                p.y.clone() + r.clone(),
            )
        };
        let zero = CReal::zero();
        for s in shapes {
            match s {
                Shape::Circle { c, r, .. } => add(c, r),
                Shape::Segment { a, b, .. } | Shape::Line { p: a, q: b, .. } => {
                    add(a, &zero);
                    add(b, &zero);
                }
                Shape::Label { at, .. } => add(at, &zero),
            }
        }
        b
    }

    fn padded(self) -> Bounds {
        let w = self.max_x.clone() - self.min_x.clone();
        let h = self.max_y.clone() - self.min_y.clone();
        let base = w.max(h);
        let pad = if base == CReal::zero() { CReal::one() } else { base * CReal::ratio(1, 10) };
        Bounds {
            min_x: self.min_x - pad.clone(),
            min_y: self.min_y - pad.clone(),
            max_x: self.max_x + pad.clone(),
            max_y: self.max_y + pad,
        }
    }

    /// Parameter interval of `p + t (q - p)` inside the box.
    fn clip(&self, p: &Point, q: &Point, ray: bool) -> (Point, Point) {
        let d = [q.x.clone() - p.x.clone(), q.y.clone() - p.y.clone()];
        let origin = [&p.x, &p.y];
        let lo_edge = [&self.min_x, &self.min_y];
        let hi_edge = [&self.max_x, &self.max_y];
        let mut t_lo: Option<CReal> = ray.then(CReal::zero);
        let mut t_hi: Option<CReal> = None;
        for k in 0..2 {
            if d[k] == CReal::zero() {
                continue;
            }
            let inv = d[k].inv().expect("non-zero direction");
            let mut t1 = (lo_edge[k].clone() - origin[k].clone()) * inv.clone();
            let mut t2 = (hi_edge[k].clone() - origin[k].clone()) * inv;
            if t1 > t2 {
                std::mem::swap(&mut t1, &mut t2);
            }
            t_lo = Some(t_lo.map_or(t1.clone(), |t| t.max(t1)));
            t_hi = Some(t_hi.map_or(t2.clone(), |t| t.min(t2)));
        }
        let at = |t: CReal| Point::new(p.x.clone() + t.clone() * d[0].clone(), p.y.clone() + t * d[1].clone());
        (at(t_lo.expect("direction non-zero")), at(t_hi.expect("direction non-zero")))
    }
}

struct Writer {
    digits: usize,
    out: String,
}

impl Writer {
    fn n(&self, v: &CReal) -> String {
        v.to_decimal(self.digits)
    }

    fn x(&self, p: &Point) -> String {
        self.n(&p.x)
    }

    fn y(&self, p: &Point) -> String {
        self.n(&-p.y.clone())
    }

    fn line(&mut self, class: &str, a: &Point, b: &Point) {
        let s = format!(
            "  <line class=\"{class}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
            self.x(a),
            self.y(a),
            self.x(b),
            self.y(b)
        );
        self.out.push_str(&s);
    }
}

/// An SVG 1.1 document showing every step of `trace`, in trace order.
pub fn render_svg(trace: &Trace, digits: usize) -> Result<String, RenderError> {
    if trace.steps.is_empty() {
        return Err(RenderError::EmptyTrace);
    }
    let mut shapes = Vec::new();
    for step in &trace.steps {
        shapes.extend(shapes_for(step)?);
    }
    let bounds = Bounds::of(&shapes).ok_or(RenderError::EmptyTrace)?.padded();
    let width = bounds.max_x.clone() - bounds.min_x.clone();
    let height = bounds.max_y.clone() - bounds.min_y.clone();
    let size = width.clone().max(height.clone());
    let stroke = size.clone() * CReal::ratio(1, 400);
    let dot = size.clone() * CReal::ratio(1, 150);
    let font = size.clone() * CReal::ratio(1, 30);
    let nudge = size * CReal::ratio(1, 100);

    let mut w = Writer { digits, out: String::new() };
    let header = format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">\n\
         \x20 <style>\n\
         \x20   .point {{ fill: #000; }}\n\
         \x20   .circle {{ fill: none; stroke: #8a8a8a; stroke-width: {s}; }}\n\
         \x20   .line {{ stroke: #3465a4; stroke-width: {s}; }}\n\
         \x20   .ray {{ stroke: #4e9a06; stroke-width: {s}; }}\n\
         \x20   .segment {{ stroke: #000; stroke-width: {s}; }}\n\
         \x20   .label {{ font-family: sans-serif; font-size: {f}px; }}\n\
         \x20 </style>\n",
        w.n(&bounds.min_x),
        w.n(&-bounds.max_y.clone()),
        w.n(&width),
        w.n(&height),
        s = w.n(&stroke),
        f = w.n(&font),
    );
    w.out.push_str(&header);
    let label = |w: &mut Writer, at: &Point, text: &str| {
        let s = format!(
            "  <text class=\"label\" x=\"{}\" y=\"{}\">{}</text>\n",
            w.n(&(at.x.clone() + nudge.clone())),
            w.n(&-(at.y.clone() + nudge.clone())),
            text
        );
        w.out.push_str(&s);
    };
    for shape in &shapes {
        match shape {
            Shape::Circle { class, c, r } => {
                let r = if *class == "point" { dot.clone() } else { r.clone() };
                let s = format!(
                    "  <circle class=\"{class}\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>\n",
                    w.x(c),
                    w.y(c),
                    w.n(&r)
                );
                w.out.push_str(&s);
            }
            Shape::Segment { class, a, b } => w.line(class, a, b),
            Shape::Line { class, p, q, ray, name } => {
                let (a, b) = bounds.clip(p, q, *ray);
                w.line(class, &a, &b);
                let at = if *ray { q.clone() } else { midpoint(&a, &b) };
                label(&mut w, &at, name);
            }
            Shape::Label { at, text } => label(&mut w, at, text),
        }
    }
    w.out.push_str("</svg>\n");
    Ok(w.out)
}
