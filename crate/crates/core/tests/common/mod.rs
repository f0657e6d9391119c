//! Shared test catalog: one optic of every kind over a single recursive
//! document shape, so that any two of them compose meaningfully, plus a
//! probe that runs every combinator module a transformer admits.
#![allow(dead_code)]

pub mod laws;

use std::sync::Arc;

use mixoptic_core::combinators as c;
use mixoptic_core::composition::{compose, join_kind, JoinResult};
use mixoptic_core::encoding::{compose_prof, ex2prof, prof2ex, ProfOptic};
use mixoptic_core::modules::*;
use mixoptic_core::value::{each_traversal, field_lens, variant_prism, Value, ValueOptic};
use mixoptic_core::{Effect, EffectKind, Extraction, Fun, Match, Optic, OpticError, OpticKind, Result};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Documents drawn from `T := number | {a: T, b: T} | [T] | @L T | @R T`.
pub fn tree(rng: &mut StdRng, depth: u32) -> Value {
    let leaf = |rng: &mut StdRng| Value::Number(rng.gen_range(-5..=5) as f64);
    if depth == 0 {
        return leaf(rng);
    }
    match rng.gen_range(0..10) {
        0 | 1 => leaf(rng),
        2..=5 => Value::record([("a", tree(rng, depth - 1)), ("b", tree(rng, depth - 1))]),
        6 | 7 => {
            let n = rng.gen_range(0..=3);
            Value::List((0..n).map(|_| tree(rng, depth - 1)).collect())
        }
        _ => {
            let tag = if rng.gen_bool(0.5) { "L" } else { "R" };
            Value::tagged(tag, tree(rng, depth - 1))
        }
    }
}

pub fn map_numbers(v: &Value, f: &dyn Fn(f64) -> f64) -> Value {
    match v {
        Value::Number(n) => Value::Number(f(*n)),
        Value::List(xs) => Value::List(xs.iter().map(|x| map_numbers(x, f)).collect()),
        Value::Record(fields) => Value::Record(fields.iter().map(|(k, x)| (k.clone(), map_numbers(x, f))).collect()),
        Value::Tagged(t, x) => Value::tagged(t.clone(), map_numbers(x, f)),
        other => other.clone(),
    }
}

pub fn numbers(v: &Value, out: &mut Vec<Value>) {
    match v {
        Value::Number(_) => out.push(v.clone()),
        Value::List(xs) => xs.iter().for_each(|x| numbers(x, out)),
        Value::Record(fields) => fields.values().for_each(|x| numbers(x, out)),
        Value::Tagged(_, x) => numbers(x, out),
        _ => {}
    }
}

fn field(v: &Value, k: &str) -> Result<Value> {
    v.field(k).cloned()
}

pub fn bump() -> Fun<Value, Value> {
    Arc::new(|v: Value| Ok(map_numbers(&v, &|n| n + 1.0)))
}

pub fn catalog() -> Vec<(OpticKind, ValueOptic)> {
    let negate = |v: Value| Ok(map_numbers(&v, &|n| -n));
    let a = || field_lens("a");
    let set_a = |s: Value, b: Value| c::set(&field_lens("a"), b, s);
    vec![
        (OpticKind::Adapter, Optic::adapter(negate, negate)),
        (OpticKind::Lens, a()),
        (
            OpticKind::AchromaticLens,
            Optic::achromatic_lens(
                |s: Value| field(&s, "a"),
                set_a,
                |b| Ok(Value::record([("a", b), ("b", Value::Null)])),
            ),
        ),
        (
            OpticKind::AlgebraicLens,
            Optic::algebraic_lens(
                |s: Value| field(&s, "a"),
                |ss: Vec<Value>, b| {
                    let seen = ss.iter().map(|s| field(s, "b")).collect::<Result<_>>()?;
                    Ok(Value::record([("a", b), ("b", Value::List(seen))]))
                },
            ),
        ),
        (
            OpticKind::MonadicLens,
            Optic::monadic_lens(
                EffectKind::Writer,
                |s: Value| field(&s, "a"),
                move |s, b: Value| {
                    let line = format!("a := {b}");
                    Ok(Effect::tell(set_a(s, b)?, line))
                },
            ),
        ),
        (OpticKind::Prism, variant_prism("L")),
        (
            OpticKind::AffineTraversal,
            Optic::affine(|s: Value| match s {
                Value::List(xs) if !xs.is_empty() => {
                    let first = xs[0].clone();
                    let k: Fun<Value, Value> = Arc::new(move |b| {
                        let mut ys = xs.clone();
                        ys[0] = b;
                        Ok(Value::List(ys))
                    });
                    Ok(Match::Focus((first, k)))
                }
                other => Ok(Match::Miss(other)),
            }),
        ),
        (OpticKind::Traversal, each_traversal()),
        (
            OpticKind::Kaleidoscope,
            Optic::kaleidoscope(|f: Fun<Vec<Value>, Value>, ss: Vec<Value>| {
                let col = |k: &str| ss.iter().map(|s| field(s, k)).collect::<Result<Vec<_>>>();
                Ok(Value::record([("a", f(col("a")?)?), ("b", f(col("b")?)?)]))
            }),
        ),
        (
            OpticKind::Grate,
            Optic::grate(|f: Fun<Fun<Value, Value>, Value>| {
                let pa: Fun<Value, Value> = Arc::new(|s| field(&s, "a"));
                let pb: Fun<Value, Value> = Arc::new(|s| field(&s, "b"));
                Ok(Value::record([("a", f(pa)?), ("b", f(pb)?)]))
            }),
        ),
        (
            OpticKind::Glass,
            Optic::glass(|f: Fun<Fun<Value, Value>, Value>, s: Value| {
                let pa: Fun<Value, Value> = Arc::new(|s| field(&s, "a"));
                Ok(Value::record([("a", f(pa)?), ("b", field(&s, "b")?)]))
            }),
        ),
        (
            OpticKind::Setter,
            Optic::setter(|f: Fun<Value, Value>, s: Value| {
                let err = std::cell::RefCell::new(None);
                let out = map_numbers(&s, &|n| match f(Value::Number(n)).and_then(|v| v.as_number()) {
                    Ok(m) => m,
                    Err(e) => {
                        err.borrow_mut().get_or_insert(e);
                        n
                    }
                });
                err.into_inner().map_or(Ok(out), Err)
            }),
        ),
        (OpticKind::Getter, Optic::getter(|s: Value| field(&s, "a"))),
        (OpticKind::Review, Optic::review_only(|b: Value| Ok(Value::tagged("R", b)))),
        (
            OpticKind::Fold,
            Optic::fold(|s: Value| {
                let mut out = Vec::new();
                numbers(&s, &mut out);
                Ok(out)
            }),
        ),
    ]
}

pub fn entry(kind: OpticKind) -> ValueOptic {
    catalog().into_iter().find(|(k, _)| *k == kind).expect("catalog covers every kind").1
}

/// One generated input for every combinator.
#[derive(Clone)]
pub struct Case {
    pub s: Value,
    pub s2: Value,
    pub b: Value,
    pub batch: Vec<Value>,
}

impl Case {
    pub fn generate(rng: &mut StdRng) -> Case {
        let s = tree(rng, 3);
        let mut batch = vec![s.clone()];
        for _ in 0..rng.gen_range(0..3) {
            batch.push(tree(rng, 3));
        }
        Case {
            s,
            s2: tree(rng, 3),
            b: tree(rng, 2),
            batch,
        }
    }

    pub fn many(seed: u64, n: usize) -> Vec<Case> {
        let mut rng = StdRng::seed_from_u64(seed);
        (0..n).map(|_| Case::generate(&mut rng)).collect()
    }

    pub fn constant(&self) -> Fun<Value, Value> {
        let b = self.b.clone();
        Arc::new(move |_| Ok(b.clone()))
    }

    pub fn aggregator(&self) -> Fun<Vec<Value>, Value> {
        Arc::new(|xs| Ok(Value::List(xs)))
    }

    /// `\h -> [bump (h s), h s2]`
    pub fn continuation(&self) -> Fun<Fun<Value, Value>, Value> {
        let (s1, s2) = (self.s.clone(), self.s2.clone());
        let bump = bump();
        Arc::new(move |h: Fun<Value, Value>| Ok(Value::List(vec![bump(h(s1.clone())?)?, h(s2.clone())?])))
    }
}

/// Errors are compared by variant only: a fused composite and a stack of
/// transformers may visit a batch in a different order and trip over a
/// different bad element first.
fn show<T: std::fmt::Debug>(r: Result<T>) -> String {
    match r {
        Ok(v) => format!("Ok({v:?})"),
        Err(e) => {
            let e = format!("{e:?}");
            let variant = e.split(|c: char| !c.is_alphanumeric()).next().unwrap_or_default();
            format!("Err({variant})")
        }
    }
}

/// Runs `p` on the identity of every module its signature admits.
pub fn probe<P: ProfOptic<Value, Value, Value, Value>>(p: &P, case: &Case) -> Vec<(ModuleKind, String)> {
    let sig = p.signature();
    let mut out = Vec::new();
    for m in ModuleKind::ALL {
        if sig.check(m).is_err() {
            continue;
        }
        let s = case.s.clone();
        let r = match m {
            ModuleKind::Viewing => show(p.viewing(Viewing::id()).and_then(|q| (q.run)(s))),
            ModuleKind::Previewing => show(p.previewing(Previewing::id()).and_then(|q| (q.run)(s))),
            ModuleKind::Folding => show(p.folding(Folding::id()).and_then(|q| (q.run)(s))),
            ModuleKind::Setting => show(p.setting(Setting::id()).and_then(|q| (q.run)(case.constant(), s))),
            ModuleKind::Replacing => show(p.replacing(Replacing::id()).and_then(|q| (q.run)(bump(), s))),
            ModuleKind::Classifying => {
                show(p.classifying(Classifying::id()).and_then(|q| (q.run)(case.batch.clone(), case.b.clone())))
            }
            ModuleKind::Aggregating => {
                show(p.aggregating(Aggregating::id()).and_then(|q| (q.run)(case.batch.clone(), case.aggregator())))
            }
            ModuleKind::Updating => {
                show(p.updating(Updating::id(EffectKind::Writer)).and_then(|q| (q.run)(case.b.clone(), s)))
            }
            ModuleKind::Reviewing => show(p.reviewing(Reviewing::id()).and_then(|q| (q.run)(case.b.clone()))),
            ModuleKind::Grating => show(p.grating(Grating::id()).and_then(|q| (q.run)(case.continuation()))),
            ModuleKind::Glassing => show(p.glassing(Glassing::id()).and_then(|q| (q.run)(case.continuation(), s))),
        };
        out.push((m, r));
    }
    out
}

/// Every combinator applied directly to the concrete optic.
pub fn observe(o: &ValueOptic, case: &Case) -> Vec<(&'static str, String)> {
    let s = || case.s.clone();
    vec![
        ("view", show(c::view(o, s()))),
        ("preview", show(c::preview(o, s()))),
        ("set", show(c::set(o, case.b.clone(), s()))),
        ("over", show(c::over(o, bump(), s()))),
        ("toListOf", show(c::to_list_of(o, s()))),
        ("classify", show(c::classify(o, case.batch.clone(), case.b.clone()))),
        ("aggregate", show(c::aggregate(o, case.aggregator(), case.batch.clone()))),
        ("mupdate", show(c::mupdate(o, case.b.clone(), s()))),
        ("review", show(c::review(o, case.b.clone()))),
        ("grate", show(c::grate_apply(o, case.continuation(), Some(s())))),
    ]
}

fn first_difference<K: std::fmt::Debug + PartialEq>(left: &[(K, String)], right: &[(K, String)]) -> Option<String> {
    if left.len() != right.len() {
        return Some(format!("different module sets: {left:?} vs {right:?}"));
    }
    left.iter()
        .zip(right)
        .find(|(l, r)| l != r)
        .map(|(l, r)| format!("{:?}: {} vs {}", l.0, l.1, r.1))
}

/// Kinds whose round trip was checked, and any failures.
pub fn roundtrip_failures(cases: usize) -> (usize, Vec<String>) {
    let mut failures = Vec::new();
    let mut kinds = 0;
    for (kind, o) in catalog() {
        kinds += 1;
        let back: ValueOptic = match prof2ex(&ex2prof(o.clone()), kind) {
            Ok(back) => back,
            Err(e) => {
                failures.push(format!("{kind}: prof2ex failed with {e}"));
                continue;
            }
        };
        if back.kind() != kind {
            failures.push(format!("{kind}: recovered a {}", back.kind()));
        }
        for (i, case) in Case::many(kind as u64, cases).iter().enumerate() {
            if let Some(d) = first_difference(&observe(&o, case), &observe(&back, case)) {
                failures.push(format!("{kind} case {i}: {d}"));
                break;
            }
            if let Some(d) = first_difference(&probe(&ex2prof(o.clone()), case), &probe(&ex2prof(back.clone()), case)) {
                failures.push(format!("{kind} case {i}: {d}"));
                break;
            }
        }
    }
    (kinds, failures)
}

/// Checks every cell of the join table against transformer composition.
/// Returns the number of cells with a concrete formula, and failures.
pub fn oracle_failures(cases: usize) -> (usize, Vec<String>) {
    let mut failures = Vec::new();
    let mut cells = 0;
    for (k1, o1) in catalog() {
        for (k2, o2) in catalog() {
            let join = join_kind(k1, k2);
            let composite = compose(o1.clone(), o2.clone());
            let Some(kind) = join.kind() else {
                if !matches!(composite, Err(OpticError::Composition { .. })) {
                    failures.push(format!("{k1}∘{k2}: expected a composition error"));
                }
                continue;
            };
            cells += 1;
            let composite = match composite {
                Ok(o) if o.kind() == kind => o,
                Ok(o) => {
                    failures.push(format!("{k1}∘{k2}: built a {} instead of a {kind}", o.kind()));
                    continue;
                }
                Err(e) => {
                    failures.push(format!("{k1}∘{k2}: {e}"));
                    continue;
                }
            };
            let concrete = ex2prof(composite.clone());
            let transformer = compose_prof(ex2prof(o1.clone()), ex2prof(o2.clone()));
            let shared: Vec<ModuleKind> = ModuleKind::ALL
                .into_iter()
                .filter(|m| concrete.signature().check(*m).is_ok() && transformer.signature().check(*m).is_ok())
                .collect();
            if shared.is_empty() {
                failures.push(format!("{k1}∘{k2}: no module runs both sides"));
                continue;
            }
            let seed = (k1 as u64) * 100 + k2 as u64;
            for (i, case) in Case::many(seed, cases).iter().enumerate() {
                let keep = |obs: Vec<(ModuleKind, String)>| -> Vec<(ModuleKind, String)> {
                    obs.into_iter().filter(|(m, _)| shared.contains(m)).collect()
                };
                let left = keep(probe(&concrete, case));
                let right = keep(probe(&transformer, case));
                if let Some(d) = first_difference(&left, &right) {
                    failures.push(format!("{k1}∘{k2} case {i}: {d}"));
                    break;
                }
            }
            if let JoinResult::Fallback(_) = join {
                // The fallback setter must agree with nested `over`.
                for case in Case::many(seed + 1, cases) {
                    let inner = o2.clone();
                    let f = bump();
                    let nested: Fun<Value, Value> = Arc::new(move |a| c::over(&inner, f.clone(), a));
                    let direct = show(c::over(&composite, bump(), case.s.clone()));
                    let expected = show(c::over(&o1, nested, case.s.clone()));
                    if direct != expected {
                        failures.push(format!("{k1}∘{k2}: fallback over differs: {direct} vs {expected}"));
                        break;
                    }
                }
            }
        }
    }
    (cells, failures)
}

pub fn extraction_of(xs: Vec<Value>) -> Extraction<Value, Value, Value> {
    Extraction::new(xs, Arc::new(|bs| Ok(Value::List(bs))))
}
