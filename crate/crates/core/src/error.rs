use std::collections::BTreeSet;

use thiserror::Error;

use crate::addresses::NWord;
use crate::terms::Term;

/// Position inside a tree value, as the sequence of child indices taken from
/// the root (0 = left operand, 1 = right operand).
pub type TreePath = Vec<u8>;

pub(crate) fn show_path(path: &[u8]) -> String {
    if path.is_empty() {
        return "root".to_string();
    }
    path.iter()
        .map(|d| if *d == 0 { "L" } else { "R" })
        .collect::<Vec<_>>()
        .join(".")
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("`{prefix}` is not an initial segment of `{word}`")]
    NotAPrefix { prefix: NWord, word: NWord },

    #[error("not a nominal arity: `{shorter}` is a proper initial segment of `{longer}`")]
    NotPrefixFree { shorter: NWord, longer: NWord },

    #[error("illegitimate insertion at {}: {reason}", show_path(.path))]
    IllegitimateInsertion { path: TreePath, reason: String },

    #[error("value out of domain: {0}")]
    OutOfDomain(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("invalid generator signature: {0}")]
    InvalidSignature(String),

    #[error("flavor mismatch: {0}")]
    FlavorMismatch(String),

    #[error("type mismatch at {}: {reason}", show_path(.path))]
    TypeMismatch { path: TreePath, reason: String },

    #[error("illegitimate index at {}: {reason}", show_path(.path))]
    IllegitimateIndex { path: TreePath, reason: String },

    #[error("syntax error at line {line}, column {column}: expected {}", .expected.join(" or "))]
    Syntax {
        line: usize,
        column: usize,
        expected: Vec<String>,
    },

    #[error("generator {0} is not in the generator set")]
    GeneratorMissing(String),

    #[error("closure bound of {bound} distinct terms exceeded")]
    BoundExceeded {
        bound: usize,
        partial: Box<BTreeSet<Term>>,
    },

    #[error("invalid tree input: {0}")]
    InvalidTree(String),

    #[error("internal soundness failure: {0}")]
    Soundness(String),
}

pub type Result<T> = std::result::Result<T, Error>;
