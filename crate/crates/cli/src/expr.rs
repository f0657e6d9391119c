//! Dot-separated optic expressions: `address.street`, `each.field("a b")`.
//!
//! ```text
//! expr    := segment ("." segment)*
//! segment := IDENT | IDENT "(" STRING ")"
//! ```
//!
//! STRING is a JSON string literal.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub name: String,
    pub arg: Option<String>,
}

impl Segment {
    pub fn name(name: impl Into<String>) -> Self {
        Segment {
            name: name.into(),
            arg: None,
        }
    }

    pub fn call(name: impl Into<String>, arg: impl Into<String>) -> Self {
        Segment {
            name: name.into(),
            arg: Some(arg.into()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpticExpr {
    pub segments: Vec<Segment>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message} at position {position}")]
pub struct ExprError {
    /// Character offset, counting from zero.
    pub position: usize,
    pub message: String,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '-'
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn describe(&self) -> String {
        match self.peek() {
            Some(c) => format!("unexpected '{c}'"),
            None => "unexpected end of expression".into(),
        }
    }

    fn ident(&mut self) -> Result<String, ExprError> {
        match self.peek() {
            Some(c) if is_ident_start(c) => {}
            _ => return self.fail(format!("{}, expected a name", self.describe())),
        }
        let start = self.pos;
        while self.peek().is_some_and(is_ident_char) {
            self.pos += 1;
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn string(&mut self) -> Result<String, ExprError> {
        if self.peek() != Some('"') {
            return self.fail(format!("{}, expected a quoted string", self.describe()));
        }
        let start = self.pos;
        self.pos += 1;
        loop {
            match self.peek() {
                None => {
                    return Err(ExprError {
                        position: start,
                        message: "unterminated string".into(),
                    })
                }
                Some('\\') => self.pos += 2,
                Some('"') => {
                    self.pos += 1;
                    break;
                }
                Some(_) => self.pos += 1,
            }
        }
        let literal: String = self.chars[start..self.pos.min(self.chars.len())].iter().collect();
        serde_json::from_str::<String>(&literal).map_err(|e| ExprError {
            position: start,
            message: format!("bad string literal: {e}"),
        })
    }

    fn segment(&mut self) -> Result<Segment, ExprError> {
        let name = self.ident()?;
        if self.peek() != Some('(') {
            return Ok(Segment::name(name));
        }
        self.pos += 1;
        let arg = self.string()?;
        if self.peek() != Some(')') {
            return self.fail(format!("{}, expected ')'", self.describe()));
        }
        self.pos += 1;
        Ok(Segment::call(name, arg))
    }

    fn expr(&mut self) -> Result<OpticExpr, ExprError> {
        if self.text.is_empty() {
            return self.fail("empty expression");
        }
        let mut segments = vec![self.segment()?];
        while self.peek().is_some() {
            if self.peek() != Some('.') {
                return self.fail(format!("{}, expected '.'", self.describe()));
            }
            self.pos += 1;
            segments.push(self.segment()?);
        }
        Ok(OpticExpr { segments })
    }
}

pub fn parse_expr(text: &str) -> Result<OpticExpr, ExprError> {
    Parser {
        chars: text.chars().collect(),
        pos: 0,
        text,
    }
    .expr()
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        if let Some(arg) = &self.arg {
            let quoted = serde_json::to_string(arg).map_err(|_| fmt::Error)?;
            write!(f, "({quoted})")?;
        }
        Ok(())
    }
}

impl fmt::Display for OpticExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.segments.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}
