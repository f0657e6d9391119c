use thiserror::Error;

use crate::capability::{Capability, OpticKind};

/// Errors raised while building, composing or running optics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum OpticError {
    /// A combinator was applied to an optic kind it does not support.
    #[error("{combinator} cannot be applied to {}", a(.kind))]
    Kind {
        combinator: &'static str,
        kind: OpticKind,
    },
    /// A combinator module was asked to lift through a capability it lacks.
    #[error("the {carrier} module cannot lift through the {capability} action")]
    Capability {
        carrier: &'static str,
        capability: Capability,
    },
    /// A module was handed an optic whose direction or effects it cannot run.
    #[error("the {carrier} module cannot run {what}")]
    Unrunnable {
        carrier: &'static str,
        what: &'static str,
    },
    #[error("cannot compose {} with {}", a(.outer), a(.inner))]
    Composition { outer: OpticKind, inner: OpticKind },
    #[error("{} cannot be used as {}", a(.from), a(.to))]
    Upcast { from: OpticKind, to: OpticKind },
    #[error("no normal form can be extracted for {0}")]
    NormalForm(OpticKind),
    /// The document does not have the shape the optic expects.
    #[error("focus error: {0}")]
    Focus(String),
    #[error("rebuild expected {expected} values but received {found}")]
    Length { expected: usize, found: usize },
    #[error("cannot classify against an empty training set")]
    EmptyTraining,
    #[error("cannot aggregate an empty input")]
    EmptyInput,
    #[error("cannot bind {} computation inside {} computation", a(.found), a(.expected))]
    EffectMismatch {
        expected: &'static str,
        found: &'static str,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl OpticError {
    pub fn focus(message: impl Into<String>) -> Self {
        OpticError::Focus(message.into())
    }
}

/// `a lens`, `an adapter`.
pub fn a(word: &impl std::fmt::Display) -> String {
    let word = word.to_string();
    let article = if word.starts_with(['a', 'e', 'i', 'o', 'u']) { "an" } else { "a" };
    format!("{article} {word}")
}

pub type Result<T, E = OpticError> = std::result::Result<T, E>;
