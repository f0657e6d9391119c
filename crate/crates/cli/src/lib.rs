//! The `mixoptic` command: parse an optic expression, run one combinator
//! on a JSON document, print the result.

pub mod expr;
pub mod registry;

use std::io::Read;
use std::path::PathBuf;
use std::sync::Arc;

use mixoptic_core::combinators as c;
use mixoptic_core::fixtures::{self, Flower};
use mixoptic_core::value::{parse_json, Value};
use mixoptic_core::{Fun, OpticError};

use crate::expr::{parse_expr, ExprError};
use crate::registry::Registry;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("bad optic expression: {0}")]
    Expr(#[from] ExprError),
    #[error("{0}")]
    Optic(#[from] OpticError),
}

impl CliError {
    /// 1 for errors met while running on the document, 2 for everything
    /// that is wrong with the request itself.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Expr(_) => 2,
            CliError::Optic(e) => match e {
                OpticError::Kind { .. }
                | OpticError::Capability { .. }
                | OpticError::Unrunnable { .. }
                | OpticError::Parse { .. } => 2,
                _ => 1,
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Action {
    View,
    Preview,
    Set,
    Over,
    Review,
    Aggregate,
    Classify,
    Tolist,
}

impl Action {
    fn wants_arg(self) -> bool {
        !matches!(self, Action::View | Action::Preview | Action::Tolist)
    }

    /// Review builds a document from its argument alone.
    fn reads_input(self) -> bool {
        self != Action::Review
    }
}

#[derive(Debug, Clone)]
pub struct Request {
    pub action: Action,
    pub optic: String,
    pub input: Option<PathBuf>,
    pub arg: Option<String>,
    pub defs: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Functions usable with `over`.
pub const MAPPINGS: [&str; 3] = ["uppercase", "lowercase", "increment"];

/// Functions usable with `aggregate`.
pub const FOLDS: [&str; 4] = ["mean", "maximum", "minimum", "head"];

pub fn mapping(name: &str) -> Result<Fun<Value, Value>, CliError> {
    let f: Fun<Value, Value> = match name {
        "uppercase" => Arc::new(|v: Value| Ok(Value::text(v.as_text()?.to_uppercase()))),
        "lowercase" => Arc::new(|v: Value| Ok(Value::text(v.as_text()?.to_lowercase()))),
        "increment" => Arc::new(|v: Value| Ok(Value::Number(v.as_number()? + 1.0))),
        _ => {
            return Err(CliError::Usage(format!(
                "over needs one of {}, not \"{name}\"",
                MAPPINGS.join(", ")
            )))
        }
    };
    Ok(f)
}

pub fn fold(name: &str) -> Result<Fun<Vec<Value>, Value>, CliError> {
    let f = match name {
        "mean" => fixtures::mean(),
        "maximum" => fixtures::maximum(),
        "minimum" => fixtures::minimum(),
        "head" => fixtures::head(),
        _ => {
            return Err(CliError::Usage(format!(
                "aggregate needs one of {}, not \"{name}\"",
                FOLDS.join(", ")
            )))
        }
    };
    Ok(Arc::new(move |vs: Vec<Value>| {
        let xs = vs.iter().map(Value::as_number).collect::<Result<Vec<_>, _>>()?;
        Ok(Value::Number(f(xs)?))
    }))
}

fn json_arg(arg: &str) -> Result<Value, CliError> {
    parse_json(arg).map_err(|e| CliError::Usage(format!("--arg is not valid JSON: {e}")))
}

fn batch(doc: Value) -> Result<Vec<Value>, CliError> {
    match doc {
        Value::List(items) => Ok(items),
        other => Err(CliError::Usage(format!("expected a list of documents, found a {}", other.type_name()))),
    }
}

/// Flowers print as the figure line, anything else as JSON.
fn render_point(v: &Value) -> String {
    Flower::from_value(v).map_or_else(|_| v.to_json_string(), |f| f.to_string())
}

fn read_input(path: Option<&PathBuf>, stdin: &mut dyn Read) -> Result<Value, CliError> {
    let mut text = String::new();
    match path {
        Some(p) => {
            text = std::fs::read_to_string(p).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display())))?
        }
        None => {
            stdin
                .read_to_string(&mut text)
                .map_err(|e| CliError::Usage(format!("cannot read standard input: {e}")))?;
        }
    }
    parse_json(&text).map_err(CliError::from)
}

fn run(req: &Request, stdin: &mut dyn Read, warnings: &mut Vec<String>) -> Result<String, CliError> {
    let expr = parse_expr(&req.optic)?;
    let mut registry = Registry::new();
    if let Some(path) = &req.defs {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        registry.load_defs(&text)?;
    }
    let arg = match (req.action.wants_arg(), &req.arg) {
        (true, Some(a)) => Some(a.as_str()),
        (false, None) => None,
        (true, None) => return Err(CliError::Usage(format!("{:?} needs --arg", req.action).to_lowercase())),
        (false, Some(_)) => return Err(CliError::Usage(format!("{:?} takes no --arg", req.action).to_lowercase())),
    };
    // Check the argument before the optic: both are usage errors, but a
    // bad function name should not be masked by a composition failure.
    let arg_value = match req.action {
        Action::Set | Action::Review | Action::Classify => Some(json_arg(arg.unwrap_or_default())?),
        _ => None,
    };
    let over_fn = match req.action {
        Action::Over => Some(mapping(arg.unwrap_or_default())?),
        _ => None,
    };
    let fold_fn = match req.action {
        Action::Aggregate => Some(fold(arg.unwrap_or_default())?),
        _ => None,
    };
    let built = registry.build(&expr)?;
    warnings.extend(built.warnings);
    let o = &built.optic;
    let doc = if req.action.reads_input() {
        Some(read_input(req.input.as_ref(), stdin)?)
    } else {
        None
    };
    let doc = || doc.clone().expect("input was read");
    Ok(match req.action {
        Action::View => c::view(o, doc())?.to_json_string(),
        Action::Preview => c::preview(o, doc())?.unwrap_or(Value::Null).to_json_string(),
        Action::Set => c::set(o, arg_value.expect("parsed"), doc())?.to_json_string(),
        Action::Over => c::over(o, over_fn.expect("resolved"), doc())?.to_json_string(),
        Action::Review => c::review(o, arg_value.expect("parsed"))?.to_json_string(),
        Action::Tolist => Value::List(c::to_list_of(o, doc())?).to_json_string(),
        Action::Aggregate => render_point(&c::aggregate(o, fold_fn.expect("resolved"), batch(doc())?)?),
        Action::Classify => render_point(&c::classify(o, batch(doc())?, arg_value.expect("parsed"))?),
    })
}

/// Runs one request. Nothing is written to `stdout` unless the exit code
/// is 0.
pub fn execute(req: &Request, stdin: &mut dyn Read) -> Outcome {
    let mut warnings = Vec::new();
    let result = run(req, stdin, &mut warnings);
    let mut stderr: String = warnings.iter().map(|w| format!("{w}\n")).collect();
    match result {
        Ok(out) => Outcome {
            code: 0,
            stdout: format!("{out}\n"),
            stderr,
        },
        Err(e) => {
            stderr.push_str(&format!("mixoptic: {e}\n"));
            Outcome {
                code: e.exit_code(),
                stdout: String::new(),
                stderr,
            }
        }
    }
}
