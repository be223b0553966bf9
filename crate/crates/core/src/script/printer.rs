use std::fmt::Write;

use num_rational::BigRational;

use super::{Arg, Program, Stmt};

fn rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn args(args: &[Arg]) -> String {
    args.iter()
        .map(|a| match a {
            Arg::Name(id) => id.name.clone(),
            Arg::Literal { x, y, .. } => format!("({}, {})", rational(x), rational(y)),
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn stmt(out: &mut String, s: &Stmt, indent: &str) {
    match s {
        Stmt::Let { name, op, args: a } => {
            let _ = writeln!(out, "{indent}let {} = {}({})", name.name, op.name, args(a));
        }
        Stmt::Assert { pred, args: a } => {
            let _ = writeln!(out, "{indent}assert {}({})", pred.name, args(a));
        }
        Stmt::Branch { decision, tag, body } => {
            let _ = writeln!(out, "{indent}branch {} {}:", decision.name, tag.name);
            for inner in body {
                stmt(out, inner, "  ");
            }
            let _ = writeln!(out, "{indent}end");
        }
        Stmt::Comment(text) if text.is_empty() => {
            let _ = writeln!(out, "{indent}#");
        }
        Stmt::Comment(text) => {
            let _ = writeln!(out, "{indent}# {text}");
        }
        Stmt::Blank => out.push('\n'),
    }
}

/// Canonical source text; `parse(print(p))` equals `p`.
pub fn print(program: &Program) -> String {
    let mut out = String::new();
    for s in &program.stmts {
        stmt(&mut out, s, "");
    }
    out
}
