//! JSON-like documents and the built-in optics over them.

use std::fmt;
use std::sync::Arc;

use indexmap::IndexMap;

use crate::error::{OpticError, Result};
use crate::optic::{Extraction, Match, Optic};

/// A structured document.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Null,
    Bool(bool),
    Number(f64),
    Text(String),
    List(Vec<Value>),
    Record(IndexMap<String, Value>),
    /// Written in JSON as a single-key object `{"@tag": payload}`.
    Tagged(String, Box<Value>),
}

/// An optic from documents to documents.
pub type ValueOptic = Optic<Value, Value, Value, Value>;

impl Value {
    pub fn text(s: impl Into<String>) -> Value {
        Value::Text(s.into())
    }

    pub fn record<K: Into<String>>(fields: impl IntoIterator<Item = (K, Value)>) -> Value {
        Value::Record(fields.into_iter().map(|(k, v)| (k.into(), v)).collect())
    }

    pub fn tagged(tag: impl Into<String>, payload: Value) -> Value {
        Value::Tagged(tag.into(), Box::new(payload))
    }

    pub fn type_name(&self) -> &'static str {
        match self {
            Value::Null => "null",
            Value::Bool(_) => "boolean",
            Value::Number(_) => "number",
            Value::Text(_) => "text",
            Value::List(_) => "list",
            Value::Record(_) => "record",
            Value::Tagged(..) => "tagged value",
        }
    }

    pub fn as_text(&self) -> Result<&str> {
        match self {
            Value::Text(s) => Ok(s),
            other => Err(expected("text", other)),
        }
    }

    pub fn as_number(&self) -> Result<f64> {
        match self {
            Value::Number(n) => Ok(*n),
            other => Err(expected("number", other)),
        }
    }

    pub fn as_list(&self) -> Result<&[Value]> {
        match self {
            Value::List(items) => Ok(items),
            other => Err(expected("list", other)),
        }
    }

    pub fn field(&self, key: &str) -> Result<&Value> {
        match self {
            Value::Record(fields) => fields
                .get(key)
                .ok_or_else(|| OpticError::focus(format!("missing field \"{key}\""))),
            other => Err(expected("record", other)),
        }
    }

    fn to_json(&self) -> serde_json::Value {
        use serde_json::Value as J;
        match self {
            Value::Null => J::Null,
            Value::Bool(b) => J::Bool(*b),
            Value::Number(n) => number_to_json(*n),
            Value::Text(s) => J::String(s.clone()),
            Value::List(items) => J::Array(items.iter().map(Value::to_json).collect()),
            Value::Record(fields) => J::Object(fields.iter().map(|(k, v)| (k.clone(), v.to_json())).collect()),
            Value::Tagged(tag, payload) => {
                let mut obj = serde_json::Map::new();
                obj.insert(format!("@{tag}"), payload.to_json());
                J::Object(obj)
            }
        }
    }

    fn from_json(j: serde_json::Value) -> Value {
        use serde_json::Value as J;
        match j {
            J::Null => Value::Null,
            J::Bool(b) => Value::Bool(b),
            J::Number(n) => Value::Number(n.as_f64().unwrap_or(f64::NAN)),
            J::String(s) => Value::Text(s),
            J::Array(items) => Value::List(items.into_iter().map(Value::from_json).collect()),
            J::Object(obj) => {
                if obj.len() == 1 {
                    let key = obj.keys().next().expect("one key");
                    if let Some(tag) = key.strip_prefix('@') {
                        let tag = tag.to_string();
                        let payload = obj.into_iter().next().expect("one entry").1;
                        return Value::Tagged(tag, Box::new(Value::from_json(payload)));
                    }
                }
                Value::Record(obj.into_iter().map(|(k, v)| (k, Value::from_json(v))).collect())
            }
        }
    }

    /// Compact JSON.
    pub fn to_json_string(&self) -> String {
        self.to_json().to_string()
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("documents always serialize")
    }
}

fn number_to_json(n: f64) -> serde_json::Value {
    // Integral values print without a fractional part.
    if n.is_finite() && n.fract() == 0.0 && n.abs() < 9.0e15 {
        serde_json::Value::from(n as i64)
    } else {
        serde_json::Number::from_f64(n).map_or(serde_json::Value::Null, serde_json::Value::Number)
    }
}

fn expected(what: &str, found: &Value) -> OpticError {
    OpticError::focus(format!("expected a {what} but found a {}", found.type_name()))
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json_string())
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

impl From<f64> for Value {
    fn from(n: f64) -> Self {
        Value::Number(n)
    }
}

impl From<i64> for Value {
    fn from(n: i64) -> Self {
        Value::Number(n as f64)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

/// Parses a JSON document. A single-key object whose key starts with `@`
/// becomes a tagged value.
pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str::<serde_json::Value>(text)
        .map(Value::from_json)
        .map_err(|e| OpticError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
}

/// The lens onto one field of a record.
pub fn field_lens(key: &str) -> ValueOptic {
    let k1 = key.to_string();
    let k2 = key.to_string();
    Optic::lens(
        move |s: Value| s.field(&k1).cloned(),
        move |s: Value, b| match s {
            Value::Record(mut fields) => match fields.get_mut(&k2) {
                Some(slot) => {
                    *slot = b;
                    Ok(Value::Record(fields))
                }
                None => Err(OpticError::focus(format!("missing field \"{k2}\""))),
            },
            other => Err(expected("record", &other)),
        },
    )
}

/// The traversal over the elements of a list.
pub fn each_traversal() -> ValueOptic {
    Optic::traversal(|s: Value| match s {
        Value::List(items) => Ok(Extraction::new(items, Arc::new(|bs| Ok(Value::List(bs))))),
        other => Err(expected("list", &other)),
    })
}

/// The prism onto the payload of a tagged value with the given tag.
pub fn variant_prism(tag: &str) -> ValueOptic {
    let t1 = tag.to_string();
    let t2 = tag.to_string();
    Optic::prism(
        move |s: Value| match s {
            Value::Tagged(t, payload) if t == t1 => Ok(Match::Focus(*payload)),
            other => Ok(Match::Miss(other)),
        },
        move |b| Ok(Value::tagged(t2.clone(), b)),
    )
}
