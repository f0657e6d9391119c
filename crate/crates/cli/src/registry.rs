//! Names an expression may use, and how they resolve to optics.

use std::collections::BTreeMap;

use mixoptic_core::composition::{compose, join_kind, JoinResult};
use mixoptic_core::error::a;
use mixoptic_core::fixtures;
use mixoptic_core::value::{each_traversal, field_lens, variant_prism, ValueOptic};
use serde::Deserialize;

use crate::expr::{OpticExpr, Segment};
use crate::CliError;

/// A user definition from a `--defs` file.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum Definition {
    Field { key: String },
    Variant { tag: String },
    Each,
}

impl Definition {
    fn optic(&self) -> ValueOptic {
        match self {
            Definition::Field { key } => field_lens(key),
            Definition::Variant { tag } => variant_prism(tag),
            Definition::Each => each_traversal(),
        }
    }
}

/// Names taking no argument.
pub const NAMED: [&str; 7] = ["address", "street", "city", "country", "each", "measure", "aggregate"];

/// Names taking one string argument.
pub const PARAMETERISED: [&str; 2] = ["field", "variant"];

#[derive(Debug, Clone, Default)]
pub struct Registry {
    defs: BTreeMap<String, Definition>,
}

/// A composed optic and any warnings raised while composing it.
pub struct Built {
    pub optic: ValueOptic,
    pub warnings: Vec<String>,
}

impl Registry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn define(&mut self, name: &str, def: Definition) -> Result<(), CliError> {
        if NAMED.contains(&name) || PARAMETERISED.contains(&name) {
            return Err(CliError::Usage(format!("cannot redefine the built-in name \"{name}\"")));
        }
        self.defs.insert(name.to_string(), def);
        Ok(())
    }

    /// Reads a JSON object mapping names to definitions, e.g.
    /// `{"town": {"kind": "field", "key": "city"}}`.
    pub fn load_defs(&mut self, text: &str) -> Result<(), CliError> {
        let defs: BTreeMap<String, Definition> =
            serde_json::from_str(text).map_err(|e| CliError::Usage(format!("bad definitions file: {e}")))?;
        for (name, def) in defs {
            self.define(&name, def)?;
        }
        Ok(())
    }

    pub fn resolve(&self, segment: &Segment) -> Result<ValueOptic, CliError> {
        let name = segment.name.as_str();
        let arity = |expected: bool| {
            CliError::Usage(if expected {
                format!("\"{name}\" needs one quoted argument")
            } else {
                format!("\"{name}\" takes no argument")
            })
        };
        match (name, &segment.arg) {
            ("field", Some(key)) => Ok(field_lens(key)),
            ("variant", Some(tag)) => Ok(variant_prism(tag)),
            ("field" | "variant", None) => Err(arity(true)),
            (_, Some(_)) if NAMED.contains(&name) || self.defs.contains_key(name) => Err(arity(false)),
            ("address", None) => Ok(fixtures::address_value()),
            ("street", None) => Ok(fixtures::street_value()),
            ("city", None) => Ok(fixtures::city_value()),
            ("country", None) => Ok(fixtures::country_value()),
            ("each", None) => Ok(each_traversal()),
            ("measure", None) => Ok(fixtures::measure_value()),
            ("aggregate", None) => Ok(fixtures::aggregate_value()),
            _ => match self.defs.get(name) {
                Some(def) => Ok(def.optic()),
                None => Err(CliError::Usage(format!("unknown optic \"{name}\""))),
            },
        }
    }

    /// Resolves every segment, then composes left to right.
    pub fn build(&self, expr: &OpticExpr) -> Result<Built, CliError> {
        let optics = expr
            .segments
            .iter()
            .map(|s| self.resolve(s))
            .collect::<Result<Vec<_>, _>>()?;
        let mut warnings = Vec::new();
        let mut iter = optics.into_iter();
        let mut acc = iter.next().ok_or_else(|| CliError::Usage("empty optic expression".into()))?;
        for next in iter {
            if let JoinResult::Fallback(kind) = join_kind(acc.kind(), next.kind()) {
                warnings.push(format!(
                    "warning: {} composed with {} has no common optic kind; using it as {}",
                    a(&acc.kind()),
                    a(&next.kind()),
                    a(&kind)
                ));
            }
            acc = compose(acc, next)?;
        }
        Ok(Built { optic: acc, warnings })
    }
}
