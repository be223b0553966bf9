//! A small line-oriented language for recording constructions.
//!
//! ```text
//! let A = point((0, 0))
//! let B = point((1, 0))
//! let P = point((0, 1))
//! let C = equilateral(A, B, P)
//! assert len_eq(A, B, B, C)
//! ```

mod interp;
mod parser;
mod printer;
mod vocab;

use std::fmt;

use num_rational::BigRational;
use thiserror::Error;

pub use interp::{execute, AssertRecord, ExecError, ExecFailure, Options, Step, Trace, Value};
pub use parser::{lint, parse, Lint};
pub use printer::print;
pub use vocab::{Kind, OpSpec, PredSpec, DECISION_TAGS, LET_OPS, PREDICATES};

/// A 1-based source position.
///
/// Positions are bookkeeping only and never take part in structural
/// equality, so a program equals its reformatted reparse.
#[derive(Debug, Clone, Copy, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl PartialEq for Pos {
    fn eq(&self, _other: &Pos) -> bool {
        true
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Ident {
    pub name: String,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Arg {
    Name(Ident),
    Literal { x: BigRational, y: BigRational, pos: Pos },
}

impl Arg {
    pub fn pos(&self) -> Pos {
        match self {
            Arg::Name(id) => id.pos,
            Arg::Literal { pos, .. } => *pos,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Stmt {
    Let { name: Ident, op: Ident, args: Vec<Arg> },
    Assert { pred: Ident, args: Vec<Arg> },
    Branch { decision: Ident, tag: Ident, body: Vec<Stmt> },
    Comment(String),
    Blank,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Program {
    pub stmts: Vec<Stmt>,
}

impl Program {
    /// Executable statements (`let` and `assert`) in source order,
    /// including those inside branches.
    pub fn executable_count(&self) -> usize {
        fn count(stmts: &[Stmt]) -> usize {
            stmts
                .iter()
                .map(|s| match s {
                    Stmt::Let { .. } | Stmt::Assert { .. } => 1,
                    Stmt::Branch { body, .. } => count(body),
                    Stmt::Comment(_) | Stmt::Blank => 0,
                })
                .sum()
        }
        count(&self.stmts)
    }
}

/// Static errors found while parsing and checking a script.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScriptError {
    #[error("{line}:{col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
        expected: Vec<String>,
    },
    #[error("{line}:{col}: unknown identifier `{name}`")]
    UnknownIdentifier { line: usize, col: usize, name: String },
    #[error("{line}:{col}: `{name}` is already defined")]
    DuplicateDefinition { line: usize, col: usize, name: String },
    #[error("{line}:{col}: `{op}` takes {expected} argument(s), found {found}")]
    ArityMismatch {
        line: usize,
        col: usize,
        op: String,
        expected: String,
        found: usize,
    },
    #[error("{line}:{col}: argument {index} of `{op}` must be a {expected}, found a {found}")]
    KindMismatch {
        line: usize,
        col: usize,
        op: String,
        index: usize,
        expected: String,
        found: String,
    },
}

impl ScriptError {
    pub fn position(&self) -> (usize, usize) {
        match self {
            ScriptError::Parse { line, col, .. }
            | ScriptError::UnknownIdentifier { line, col, .. }
            | ScriptError::DuplicateDefinition { line, col, .. }
            | ScriptError::ArityMismatch { line, col, .. }
            | ScriptError::KindMismatch { line, col, .. } => (*line, *col),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            ScriptError::Parse { .. } => "ParseError",
            ScriptError::UnknownIdentifier { .. } => "UnknownIdentifier",
            ScriptError::DuplicateDefinition { .. } => "DuplicateDefinition",
            ScriptError::ArityMismatch { .. } => "ArityMismatch",
            ScriptError::KindMismatch { .. } => "KindMismatch",
        }
    }
}
