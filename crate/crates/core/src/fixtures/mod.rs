//! The worked examples: postal addresses, the iris dataset, a logging box
//! and a mailing list, both as typed optics and as optics over [`Value`].

mod iris_data;

use std::fmt;
use std::sync::Arc;

use crate::composition::compose;
use crate::effect::Effect;
use crate::error::{OpticError, Result};
use crate::func::{Data, Fun};
use crate::optic::{Match, Optic};
use crate::value::{field_lens, Value, ValueOptic};

pub const HOME: &str = "221b Baker St, London, UK";

pub const MAIL: [&str; 3] = [
    "43 Adlington Rd, Wilmslow, United Kingdom",
    "26 Westcott Rd, Princeton, USA",
    "St James's Square, London, United Kingdom",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Address {
    pub street: String,
    pub city: String,
    pub country: String,
}

impl Address {
    pub fn new(street: &str, city: &str, country: &str) -> Self {
        Address {
            street: street.into(),
            city: city.into(),
            country: country.into(),
        }
    }

    pub fn to_value(&self) -> Value {
        Value::record([
            ("street", Value::text(&self.street)),
            ("city", Value::text(&self.city)),
            ("country", Value::text(&self.country)),
        ])
    }

    pub fn from_value(v: &Value) -> Result<Self> {
        Ok(Address {
            street: v.field("street")?.as_text()?.into(),
            city: v.field("city")?.as_text()?.into(),
            country: v.field("country")?.as_text()?.into(),
        })
    }
}

/// Splits before the first `c`; the remainder keeps the separator.
fn read_until(c: char, s: &str) -> Option<(&str, &str)> {
    s.find(c).map(|i| s.split_at(i))
}

/// Drops the first two characters, failing on shorter input.
fn tail2(s: &str) -> Option<&str> {
    let mut chars = s.chars();
    chars.next()?;
    chars.next()?;
    Some(chars.as_str())
}

pub fn match_postal(s: &str) -> Option<Address> {
    let (street, b) = read_until(',', s)?;
    let (city, c) = read_until(',', tail2(b)?)?;
    Some(Address::new(street, city, tail2(c)?))
}

pub fn build_postal(a: &Address) -> String {
    format!("{}, {}, {}", a.street, a.city, a.country)
}

/// Parses a postal address out of a string.
pub fn address() -> Optic<String, String, Address, Address> {
    Optic::prism(
        |s: String| {
            Ok(match match_postal(&s) {
                Some(a) => Match::Focus(a),
                None => Match::Miss(s),
            })
        },
        |a: Address| Ok(build_postal(&a)),
    )
}

pub fn street() -> Optic<Address, Address, String, String> {
    Optic::lens(|a: Address| Ok(a.street), |a, street| Ok(Address { street, ..a }))
}

pub fn city() -> Optic<Address, Address, String, String> {
    Optic::lens(|a: Address| Ok(a.city), |a, city| Ok(Address { city, ..a }))
}

pub fn country() -> Optic<Address, Address, String, String> {
    Optic::lens(|a: Address| Ok(a.country), |a, country| Ok(Address { country, ..a }))
}

/// The address prism over documents: text on the outside, an address
/// record on the inside. Non-text documents miss.
pub fn address_value() -> ValueOptic {
    Optic::prism(
        |s: Value| {
            let parsed = match &s {
                Value::Text(t) => match_postal(t),
                _ => None,
            };
            Ok(match parsed {
                Some(a) => Match::Focus(a.to_value()),
                None => Match::Miss(s),
            })
        },
        |b: Value| Ok(Value::Text(build_postal(&Address::from_value(&b)?))),
    )
}

pub fn street_value() -> ValueOptic {
    field_lens("street")
}

pub fn city_value() -> ValueOptic {
    field_lens("city")
}

pub fn country_value() -> ValueOptic {
    field_lens("country")
}

pub fn home() -> Value {
    Value::text(HOME)
}

pub fn mail() -> Value {
    Value::List(MAIL.iter().map(|s| Value::text(*s)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Species {
    Setosa,
    Versicolor,
    Virginica,
}

impl Species {
    pub const ALL: [Species; 3] = [Species::Setosa, Species::Versicolor, Species::Virginica];

    pub fn tag(self) -> &'static str {
        match self {
            Species::Setosa => "Setosa",
            Species::Versicolor => "Versicolor",
            Species::Virginica => "Virginica",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Species> {
        Species::ALL.into_iter().find(|s| s.tag() == tag)
    }
}

impl fmt::Display for Species {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Iris {}", self.tag())
    }
}

/// Sepal and petal sizes in centimetres.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Measurements {
    pub sepal_le: f64,
    pub sepal_wi: f64,
    pub petal_le: f64,
    pub petal_wi: f64,
}

impl Measurements {
    pub fn new(sepal_le: f64, sepal_wi: f64, petal_le: f64, petal_wi: f64) -> Self {
        Measurements {
            sepal_le,
            sepal_wi,
            petal_le,
            petal_wi,
        }
    }

    pub fn components(&self) -> [f64; 4] {
        [self.sepal_le, self.sepal_wi, self.petal_le, self.petal_wi]
    }

    pub fn distance(&self, other: &Measurements) -> f64 {
        self.components()
            .iter()
            .zip(other.components())
            .map(|(a, b)| (a - b).powi(2))
            .sum::<f64>()
            .sqrt()
    }

    pub fn to_value(&self) -> Value {
        Value::record([
            ("sepalLe", Value::Number(self.sepal_le)),
            ("sepalWi", Value::Number(self.sepal_wi)),
            ("petalLe", Value::Number(self.petal_le)),
            ("petalWi", Value::Number(self.petal_wi)),
        ])
    }

    pub fn from_value(v: &Value) -> Result<Self> {
        Ok(Measurements::new(
            v.field("sepalLe")?.as_number()?,
            v.field("sepalWi")?.as_number()?,
            v.field("petalLe")?.as_number()?,
            v.field("petalWi")?.as_number()?,
        ))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Flower {
    pub measurements: Measurements,
    pub species: Species,
}

impl Flower {
    pub fn to_value(&self) -> Value {
        Value::record([
            ("measurements", self.measurements.to_value()),
            ("species", Value::tagged(self.species.tag(), Value::record::<&str>([]))),
        ])
    }

    pub fn from_value(v: &Value) -> Result<Self> {
        let species = match v.field("species")? {
            Value::Tagged(tag, _) => {
                Species::from_tag(tag).ok_or_else(|| OpticError::focus(format!("unknown species \"{tag}\"")))?
            }
            other => {
                return Err(OpticError::focus(format!(
                    "expected a tagged species but found a {}",
                    other.type_name()
                )))
            }
        };
        Ok(Flower {
            measurements: Measurements::from_value(v.field("measurements")?)?,
            species,
        })
    }
}

/// Three decimals, truncated, without trailing zeros beyond the first.
pub fn format_measure(x: f64) -> String {
    let thousandths = ((x * 1.0e6).round() / 1.0e3).trunc() as i64;
    let sign = if thousandths < 0 { "-" } else { "" };
    let abs = thousandths.unsigned_abs();
    let mut frac = format!("{:03}", abs % 1000);
    while frac.len() > 1 && frac.ends_with('0') {
        frac.pop();
    }
    format!("{sign}{}.{frac}", abs / 1000)
}

/// `Iris Versicolor; Sepal (5.843, 3.054); Petal (3.758, 1.198)`
impl fmt::Display for Flower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.measurements;
        write!(
            f,
            "{}; Sepal ({}, {}); Petal ({}, {})",
            self.species,
            format_measure(m.sepal_le),
            format_measure(m.sepal_wi),
            format_measure(m.petal_le),
            format_measure(m.petal_wi)
        )
    }
}

/// The 150 flowers of the iris dataset.
pub fn iris() -> Vec<Flower> {
    iris_data::IRIS_ROWS
        .iter()
        .map(|&(a, b, c, d, species)| Flower {
            measurements: Measurements::new(a, b, c, d),
            species,
        })
        .collect()
}

pub fn iris_value() -> Value {
    Value::List(iris().iter().map(Flower::to_value).collect())
}

/// Nearest neighbour by Euclidean distance; the first of equal minima wins.
pub fn learn(training: &[Flower], m: Measurements) -> Result<Flower> {
    let mut best: Option<(f64, Species)> = None;
    for flower in training {
        let d = m.distance(&flower.measurements);
        if best.map_or(true, |(bd, _)| d < bd) {
            best = Some((d, flower.species));
        }
    }
    let (_, species) = best.ok_or(OpticError::EmptyTraining)?;
    Ok(Flower {
        measurements: m,
        species,
    })
}

/// The classifying lens onto a flower's measurements.
pub fn measure() -> Optic<Flower, Flower, Measurements, Measurements> {
    Optic::algebraic_lens(|f: Flower| Ok(f.measurements), |l: Vec<Flower>, m| learn(&l, m))
}

/// Folds each of the four measurements independently.
pub fn aggregate() -> Optic<Measurements, Measurements, f64, f64> {
    Optic::kaleidoscope(|f: Fun<Vec<f64>, f64>, l: Vec<Measurements>| {
        let column = |g: fn(&Measurements) -> f64| f(l.iter().map(g).collect());
        Ok(Measurements::new(
            column(|m| m.sepal_le)?,
            column(|m| m.sepal_wi)?,
            column(|m| m.petal_le)?,
            column(|m| m.petal_wi)?,
        ))
    })
}

fn nonempty(xs: &[f64]) -> Result<()> {
    if xs.is_empty() {
        Err(OpticError::EmptyInput)
    } else {
        Ok(())
    }
}

pub fn mean() -> Fun<Vec<f64>, f64> {
    Arc::new(|xs: Vec<f64>| {
        nonempty(&xs)?;
        Ok(xs.iter().sum::<f64>() / xs.len() as f64)
    })
}

pub fn maximum() -> Fun<Vec<f64>, f64> {
    Arc::new(|xs: Vec<f64>| {
        nonempty(&xs)?;
        Ok(xs.into_iter().fold(f64::NEG_INFINITY, f64::max))
    })
}

pub fn minimum() -> Fun<Vec<f64>, f64> {
    Arc::new(|xs: Vec<f64>| {
        nonempty(&xs)?;
        Ok(xs.into_iter().fold(f64::INFINITY, f64::min))
    })
}

pub fn head() -> Fun<Vec<f64>, f64> {
    Arc::new(|xs: Vec<f64>| xs.first().copied().ok_or(OpticError::EmptyInput))
}

fn flower_adapter() -> Optic<Value, Value, Flower, Flower> {
    Optic::adapter(|v: Value| Flower::from_value(&v), |f: Flower| Ok(f.to_value()))
}

fn measurements_adapter() -> Optic<Value, Value, Measurements, Measurements> {
    Optic::adapter(|v: Value| Measurements::from_value(&v), |m: Measurements| Ok(m.to_value()))
}

fn inverse<S: Data, A: Data>(o: Optic<S, S, A, A>) -> Result<Optic<A, A, S, S>> {
    match o {
        Optic::Adapter { forward, backward } => Ok(Optic::Adapter {
            forward: backward,
            backward: forward,
        }),
        other => Err(OpticError::Upcast {
            from: other.kind(),
            to: crate::capability::OpticKind::Adapter,
        }),
    }
}

/// [`measure`] over flower documents.
pub fn measure_value() -> ValueOptic {
    let outer = compose(flower_adapter(), measure()).expect("adapter and algebraic lens compose");
    compose(outer, inverse(measurements_adapter()).expect("adapter")).expect("algebraic lens and adapter compose")
}

/// [`aggregate`] over measurement documents.
pub fn aggregate_value() -> ValueOptic {
    let number: Optic<f64, f64, Value, Value> = Optic::adapter(|x: f64| Ok(Value::Number(x)), |v: Value| v.as_number());
    let outer = compose(measurements_adapter(), aggregate()).expect("adapter and kaleidoscope compose");
    compose(outer, number).expect("kaleidoscope and adapter compose")
}

/// How the box renders new contents in its log.
pub trait Render {
    fn render(&self) -> String;
}

impl Render for String {
    fn render(&self) -> String {
        Value::text(self.as_str()).to_json_string()
    }
}

impl Render for i64 {
    fn render(&self) -> String {
        self.to_string()
    }
}

impl Render for f64 {
    fn render(&self) -> String {
        Value::Number(*self).to_json_string()
    }
}

impl Render for Value {
    fn render(&self) -> String {
        self.to_json_string()
    }
}

/// A data holder.
#[derive(Debug, Clone, PartialEq)]
pub struct DataBox<A> {
    pub contents: A,
}

impl<A: fmt::Debug> fmt::Display for DataBox<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Box{{{:?}}}", self.contents)
    }
}

/// The monadic lens into a box that logs every change.
pub fn box_lens<A: Data, B: Data + Render>() -> Optic<DataBox<A>, DataBox<B>, A, B> {
    Optic::monadic_lens(
        crate::effect::EffectKind::Writer,
        |b: DataBox<A>| Ok(b.contents),
        |_, b: B| {
            let line = format!("[box]: contents changed to {}.", b.render());
            Ok(Effect::tell(DataBox { contents: b }, line))
        },
    )
}
