use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::vocab::{self, arities, Kind, DECISION_TAGS};
use super::{Arg, Ident, Pos, Program, ScriptError, Stmt};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Slash,
    LParen,
    RParen,
    Comma,
    Eq,
    Colon,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Slash => "`/`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Colon => "`:`".into(),
        }
    }
}

struct Line {
    toks: Vec<(Tok, usize)>,
    comment: Option<(String, usize)>,
    end_col: usize,
}

fn parse_error(line: usize, col: usize, message: impl Into<String>, expected: &[&str]) -> ScriptError {
    let expected: Vec<String> = expected.iter().map(|s| s.to_string()).collect();
    let mut message = message.into();
    if !expected.is_empty() {
        message = format!("{message}; expected {}", expected.join(", "));
    }
    ScriptError::Parse { line, col, message, expected }
}

fn lex_line(text: &str, line: usize) -> Result<Line, ScriptError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' | '\r' => i += 1,
            '#' => {
                let rest: String = chars[i + 1..].iter().collect();
                return Ok(Line {
                    toks,
                    comment: Some((rest.trim().to_string(), col)),
                    end_col: col,
                });
            }
            '(' | ')' | ',' | '=' | ':' | '/' => {
                toks.push((
                    match c {
                        '(' => Tok::LParen,
                        ')' => Tok::RParen,
                        ',' => Tok::Comma,
                        '=' => Tok::Eq,
                        ':' => Tok::Colon,
                        _ => Tok::Slash,
                    },
                    col,
                ));
                i += 1;
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
            }
            c if c.is_ascii_digit()
                || (c == '-' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) =>
            {
                let start = i;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                toks.push((Tok::Int(s.parse().expect("digits")), col));
            }
            other => return Err(parse_error(line, col, format!("unexpected character `{other}`"), &[])),
        }
    }
    Ok(Line { toks, comment: None, end_col: chars.len() + 1 })
}

struct Cursor<'a> {
    line: usize,
    src: &'a Line,
    at: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<&'a Tok> {
        self.src.toks.get(self.at).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.src.toks.get(self.at).map_or(self.src.end_col, |(_, c)| *c)
    }

    fn pos(&self) -> Pos {
        Pos { line: self.line, col: self.col() }
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, ScriptError> {
        let found = self.peek().map_or("end of line".to_string(), Tok::describe);
        Err(parse_error(self.line, self.col(), format!("unexpected {found}"), expected))
    }

    fn expect(&mut self, tok: Tok, label: &str) -> Result<(), ScriptError> {
        if self.peek() == Some(&tok) {
            self.at += 1;
            Ok(())
        } else {
            self.fail(&[label])
        }
    }

    fn ident(&mut self) -> Result<Ident, ScriptError> {
        let pos = self.pos();
        match self.peek() {
            Some(Tok::Ident(name)) => {
                self.at += 1;
                Ok(Ident { name: name.clone(), pos })
            }
            _ => self.fail(&["identifier"]),
        }
    }

    fn rational(&mut self) -> Result<BigRational, ScriptError> {
        let num = match self.peek() {
            Some(Tok::Int(n)) => n.clone(),
            _ => return self.fail(&["rational"]),
        };
        self.at += 1;
        if self.peek() != Some(&Tok::Slash) {
            return Ok(BigRational::from_integer(num));
        }
        self.at += 1;
        match self.peek() {
            Some(Tok::Int(d)) if d.is_positive() => {
                let d = d.clone();
                self.at += 1;
                Ok(BigRational::new(num, d))
            }
            Some(Tok::Int(d)) if d.is_zero() || d.is_negative() => Err(parse_error(
                self.line,
                self.col(),
                "denominator must be a positive integer",
                &[],
            )),
            _ => self.fail(&["positive integer"]),
        }
    }

    /// Argument list after the opening parenthesis, consuming the closing one.
    fn args(&mut self) -> Result<Vec<Arg>, ScriptError> {
        match self.peek() {
            Some(Tok::RParen) => {
                self.at += 1;
                Ok(Vec::new())
            }
            Some(Tok::LParen) => {
                let pos = self.pos();
                self.at += 1;
                let x = self.rational()?;
                self.expect(Tok::Comma, "`,`")?;
                let y = self.rational()?;
                self.expect(Tok::RParen, "`)`")?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(vec![Arg::Literal { x, y, pos }])
            }
            Some(Tok::Ident(_)) => {
                let mut args = vec![Arg::Name(self.ident()?)];
                loop {
                    match self.peek() {
                        Some(Tok::Comma) => {
                            self.at += 1;
                            args.push(Arg::Name(self.ident()?));
                        }
                        Some(Tok::RParen) => {
                            self.at += 1;
                            return Ok(args);
                        }
                        _ => return self.fail(&["`,`", "`)`"]),
                    }
                }
            }
            _ => self.fail(&["identifier", "`(`", "`)`"]),
        }
    }

    fn finish(&self) -> Result<(), ScriptError> {
        if self.at < self.src.toks.len() {
            self.fail(&["end of line"])
        } else {
            Ok(())
        }
    }
}

enum Header {
    Stmt(Stmt),
    Branch(Pos, Ident, Ident),
    End(Pos),
}

fn parse_line(line: usize, src: &Line) -> Result<Option<Header>, ScriptError> {
    let mut cur = Cursor { line, src, at: 0 };
    let keyword = match cur.peek() {
        None => return Ok(None),
        Some(Tok::Ident(k)) => k.as_str(),
        Some(_) => return cur.fail(&["`let`", "`assert`", "`branch`", "`end`", "`#`"]),
    };
    let start = cur.pos();
    cur.at += 1;
    let header = match keyword {
        "let" => {
            let name = cur.ident()?;
            cur.expect(Tok::Eq, "`=`")?;
            let op = cur.ident()?;
            cur.expect(Tok::LParen, "`(`")?;
            let args = cur.args()?;
            Header::Stmt(Stmt::Let { name, op, args })
        }
        "assert" => {
            let pred = cur.ident()?;
            cur.expect(Tok::LParen, "`(`")?;
            let args = cur.args()?;
            Header::Stmt(Stmt::Assert { pred, args })
        }
        "branch" => {
            let decision = cur.ident()?;
            let tag = cur.ident()?;
            cur.expect(Tok::Colon, "`:`")?;
            Header::Branch(start, decision, tag)
        }
        "end" => Header::End(start),
        _ => {
            cur.at -= 1;
            return cur.fail(&["`let`", "`assert`", "`branch`", "`end`", "`#`"]);
        }
    };
    cur.finish()?;
    Ok(Some(header))
}

fn push_line(out: &mut Vec<Stmt>, header: Option<Header>, comment: Option<String>) {
    match header {
        Some(Header::Stmt(s)) => out.push(s),
        None if comment.is_none() => out.push(Stmt::Blank),
        _ => {}
    }
    if let Some(c) = comment {
        out.push(Stmt::Comment(c));
    }
}

/// Parses and statically checks a script.
pub fn parse(source: &str) -> Result<Program, ScriptError> {
    let mut stmts = Vec::new();
    let mut open: Option<(Ident, Ident, Vec<Stmt>)> = None;
    let mut last_line = 0;
    for (idx, text) in source.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let lexed = lex_line(text, line)?;
        let comment = lexed.comment.as_ref().map(|(c, _)| c.clone());
        let header = parse_line(line, &lexed)?;
        match (header, &mut open) {
            (Some(Header::Branch(_, d, t)), None) => {
                open = Some((d, t, Vec::new()));
                if let Some(c) = comment {
                    stmts.push(Stmt::Comment(c));
                }
            }
            (Some(Header::Branch(pos, _, _)), Some(_)) => {
                return Err(parse_error(pos.line, pos.col, "branches cannot be nested", &["`end`"]));
            }
            (Some(Header::End(pos)), None) => {
                return Err(parse_error(pos.line, pos.col, "`end` without an open branch", &[]));
            }
            (Some(Header::End(_)), Some(_)) => {
                let (decision, tag, body) = open.take().expect("open branch");
                stmts.push(Stmt::Branch { decision, tag, body });
                if let Some(c) = comment {
                    stmts.push(Stmt::Comment(c));
                }
            }
            (h, Some((_, _, body))) => push_line(body, h, comment),
            (h, None) => push_line(&mut stmts, h, comment),
        }
    }
    if open.is_some() {
        return Err(parse_error(last_line + 1, 1, "unexpected end of input", &["`end`"]));
    }
    let program = Program { stmts };
    check(&program)?;
    Ok(program)
}

type Scope = HashMap<String, (Kind, &'static str)>;

fn arg_kind(arg: &Arg, scope: &Scope) -> Result<Kind, ScriptError> {
    match arg {
        Arg::Literal { .. } => Ok(Kind::Literal),
        Arg::Name(id) => scope.get(&id.name).map(|(k, _)| *k).ok_or_else(|| {
            ScriptError::UnknownIdentifier {
                line: id.pos.line,
                col: id.pos.col,
                name: id.name.clone(),
            }
        }),
    }
}

fn check_call(op: &Ident, args: &[Arg], sigs: &[&[Kind]], scope: &Scope) -> Result<(), ScriptError> {
    if !sigs.iter().any(|s| s.len() == args.len()) {
        return Err(ScriptError::ArityMismatch {
            line: op.pos.line,
            col: op.pos.col,
            op: op.name.clone(),
            expected: arities(sigs),
            found: args.len(),
        });
    }
    let kinds = args.iter().map(|a| arg_kind(a, scope)).collect::<Result<Vec<_>, _>>()?;
    let candidates: Vec<&[Kind]> = sigs.iter().copied().filter(|s| s.len() == args.len()).collect();
    if candidates.contains(&kinds.as_slice()) {
        return Ok(());
    }
    let sig = candidates[0];
    let index = (0..kinds.len()).find(|&i| kinds[i] != sig[i]).expect("some kind differs");
    let pos = args[index].pos();
    Err(ScriptError::KindMismatch {
        line: pos.line,
        col: pos.col,
        op: op.name.clone(),
        index: index + 1,
        expected: sig[index].to_string(),
        found: kinds[index].to_string(),
    })
}

/// The outcomes a decision produced by `op` can take.
pub(crate) fn tags_of(op: &str) -> &'static [&'static str] {
    match op {
        "len_compare" | "angle_compare" => &DECISION_TAGS[2..5],
        "angle_class" => &DECISION_TAGS[5..9],
        _ => &DECISION_TAGS[0..2],
    }
}

fn check_block(stmts: &[Stmt], scope: &mut Scope, nested: bool) -> Result<(), ScriptError> {
    for stmt in stmts {
        match stmt {
            Stmt::Let { name, op, args } => {
                let spec = vocab::let_op(&op.name).ok_or_else(|| ScriptError::UnknownIdentifier {
                    line: op.pos.line,
                    col: op.pos.col,
                    name: op.name.clone(),
                })?;
                check_call(op, args, spec.sigs, scope)?;
                if scope.contains_key(&name.name) {
                    return Err(ScriptError::DuplicateDefinition {
                        line: name.pos.line,
                        col: name.pos.col,
                        name: name.name.clone(),
                    });
                }
                scope.insert(name.name.clone(), (spec.result, spec.name));
            }
            Stmt::Assert { pred, args } => {
                let spec = vocab::predicate(&pred.name).ok_or_else(|| ScriptError::UnknownIdentifier {
                    line: pred.pos.line,
                    col: pred.pos.col,
                    name: pred.name.clone(),
                })?;
                check_call(pred, args, spec.sigs, scope)?;
            }
            Stmt::Branch { decision, tag, body } => {
                debug_assert!(!nested);
                let (kind, op) = *scope.get(&decision.name).ok_or_else(|| ScriptError::UnknownIdentifier {
                    line: decision.pos.line,
                    col: decision.pos.col,
                    name: decision.name.clone(),
                })?;
                if kind != Kind::Decision {
                    return Err(ScriptError::KindMismatch {
                        line: decision.pos.line,
                        col: decision.pos.col,
                        op: "branch".into(),
                        index: 1,
                        expected: Kind::Decision.to_string(),
                        found: kind.to_string(),
                    });
                }
                let tags = tags_of(op);
                if !tags.contains(&tag.name.as_str()) {
                    let expected: Vec<String> = tags.iter().map(|t| format!("`{t}`")).collect();
                    let expected: Vec<&str> = expected.iter().map(String::as_str).collect();
                    return Err(parse_error(
                        tag.pos.line,
                        tag.pos.col,
                        format!("`{}` is not an outcome of `{}`", tag.name, op),
                        &expected,
                    ));
                }
                let mut inner = scope.clone();
                check_block(body, &mut inner, true)?;
            }
            Stmt::Comment(_) | Stmt::Blank => {}
        }
    }
    Ok(())
}

fn check(program: &Program) -> Result<(), ScriptError> {
    check_block(&program.stmts, &mut Scope::new(), false)
}

/// A statically detectable precondition violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lint {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

/// Flags calls that pass the same object where distinct ones are required.
pub fn lint(program: &Program) -> Vec<Lint> {
    fn walk(stmts: &[Stmt], out: &mut Vec<Lint>) {
        for stmt in stmts {
            match stmt {
                Stmt::Let { op, args, .. } => {
                    let Some(spec) = vocab::let_op(&op.name) else { continue };
                    for &(i, j) in spec.distinct {
                        if let (Some(Arg::Name(a)), Some(Arg::Name(b))) = (args.get(i), args.get(j)) {
                            if a.name == b.name {
                                out.push(Lint {
                                    line: b.pos.line,
                                    col: b.pos.col,
                                    message: format!(
                                        "`{}` requires arguments {} and {} to differ",
                                        op.name,
                                        i + 1,
                                        j + 1
                                    ),
                                });
                            }
                        }
                    }
                }
                Stmt::Branch { body, .. } => walk(body, out),
                _ => {}
            }
        }
    }
    let mut out = Vec::new();
    walk(&program.stmts, &mut out);
    out
}
