//! Effect contexts for the update side of monadic lenses.

use crate::error::{OpticError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EffectKind {
    /// A value paired with an ordered log of text lines.
    Writer,
    /// A value that may be absent.
    Optional,
}

impl EffectKind {
    fn name(self) -> &'static str {
        match self {
            EffectKind::Writer => "writer",
            EffectKind::Optional => "optional",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Effect<T> {
    Writer { value: T, log: Vec<String> },
    Optional(Option<T>),
}

impl<T> Effect<T> {
    pub fn pure(kind: EffectKind, value: T) -> Self {
        match kind {
            EffectKind::Writer => Effect::Writer {
                value,
                log: Vec::new(),
            },
            EffectKind::Optional => Effect::Optional(Some(value)),
        }
    }

    /// A writer computation that records one line.
    pub fn tell(value: T, line: impl Into<String>) -> Self {
        Effect::Writer {
            value,
            log: vec![line.into()],
        }
    }

    pub fn absent() -> Self {
        Effect::Optional(None)
    }

    pub fn kind(&self) -> EffectKind {
        match self {
            Effect::Writer { .. } => EffectKind::Writer,
            Effect::Optional(_) => EffectKind::Optional,
        }
    }

    /// The carried value, if there is one.
    pub fn value(&self) -> Option<&T> {
        match self {
            Effect::Writer { value, .. } => Some(value),
            Effect::Optional(v) => v.as_ref(),
        }
    }

    pub fn log(&self) -> &[String] {
        match self {
            Effect::Writer { log, .. } => log,
            Effect::Optional(_) => &[],
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Effect<U> {
        match self {
            Effect::Writer { value, log } => Effect::Writer {
                value: f(value),
                log,
            },
            Effect::Optional(v) => Effect::Optional(v.map(f)),
        }
    }

    pub fn try_map<U>(self, f: impl FnOnce(T) -> Result<U>) -> Result<Effect<U>> {
        Ok(match self {
            Effect::Writer { value, log } => Effect::Writer {
                value: f(value)?,
                log,
            },
            Effect::Optional(v) => Effect::Optional(v.map(f).transpose()?),
        })
    }

    /// Sequences a continuation; writer logs concatenate left to right and
    /// absence short-circuits.
    pub fn bind<U>(self, k: impl FnOnce(T) -> Result<Effect<U>>) -> Result<Effect<U>> {
        match self {
            Effect::Writer { value, mut log } => match k(value)? {
                Effect::Writer {
                    value,
                    log: mut rest,
                } => {
                    log.append(&mut rest);
                    Ok(Effect::Writer { value, log })
                }
                other => Err(mismatch(EffectKind::Writer, other.kind())),
            },
            Effect::Optional(None) => Ok(Effect::Optional(None)),
            Effect::Optional(Some(value)) => match k(value)? {
                Effect::Optional(v) => Ok(Effect::Optional(v)),
                other => Err(mismatch(EffectKind::Optional, other.kind())),
            },
        }
    }

    /// Pairs a plain value into the context.
    pub fn strength<X>(x: X, eff: Effect<T>) -> Effect<(X, T)> {
        eff.map(|t| (x, t))
    }
}

fn mismatch(expected: EffectKind, found: EffectKind) -> OpticError {
    OpticError::EffectMismatch {
        expected: expected.name(),
        found: found.name(),
    }
}
