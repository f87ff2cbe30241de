use std::fmt;

use thiserror::Error;

use crate::logic::{Connective, LogicId};

/// Byte offsets into a parsed input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
}

impl SourceSpan {
    pub fn new(start: usize, end: usize) -> Self {
        debug_assert!(start <= end);
        SourceSpan { start, end }
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at {span}: expected {expected}")]
    Syntax { span: SourceSpan, expected: String },

    #[error("connective `{connective}` is not part of {logic}")]
    IllegalConnective { connective: Connective, logic: LogicId, span: Option<SourceSpan> },

    #[error("{0} does not admit an empty antecedent")]
    EmptyAntecedent(LogicId),

    #[error("{logic} sequents have exactly one succedent formula, found {found}")]
    MultipleSuccedents { logic: LogicId, found: usize },

    #[error("antecedent shape does not match {0}")]
    AntecedentShape(LogicId),

    #[error("resource limit reached: {what} exceeded {limit}")]
    ResourceLimit { what: &'static str, limit: u64 },

    #[error("{operation} is not defined for {logic}")]
    UnsupportedLogic { logic: LogicId, operation: &'static str },

    #[error("connection references position {0}, which is not an atom of this matrix")]
    ForeignPosition(usize),

    #[error("malformed structural link: {0}")]
    MalformedStructuralLink(String),

    #[error("malformed proof structure: {0}")]
    MalformedStructure(String),

    #[error("structure file line {line}: {message}")]
    StructureFile { line: usize, message: String },

    #[error("sequent is not provable")]
    NotProvable,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
