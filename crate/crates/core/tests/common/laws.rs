//! Property suites for the optic laws, written against proptest's runner so
//! that the law tests and the acceptance report share one implementation.

use std::sync::Arc;

use mixoptic_core::combinators as c;
use mixoptic_core::composition::{compose, join_kind, JoinResult};
use mixoptic_core::fixtures::{self, Address};
use mixoptic_core::value::{each_traversal, field_lens, parse_json, variant_prism, Value, ValueOptic};
use mixoptic_core::{Fun, FunList, Match, OpticError, OpticKind, Optic};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use super::catalog;

pub const CASES: u32 = 256;

fn run<S: Strategy>(name: &str, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Vec<String> {
    let config = Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    match runner.run(&strategy, test) {
        Ok(()) => Vec::new(),
        Err(e) => vec![format!("{name}: {e}")],
    }
}

fn ok<T>(r: mixoptic_core::Result<T>) -> Result<T, TestCaseError> {
    r.map_err(|e| TestCaseError::fail(e.to_string()))
}

pub fn key() -> impl Strategy<Value = String> {
    "[a-z]{1,4}"
}

/// Arbitrary documents. Numbers are finite; record keys never look like a
/// tag.
pub fn value() -> impl Strategy<Value = Value> {
    let leaf = prop_oneof![
        Just(Value::Null),
        any::<bool>().prop_map(Value::Bool),
        (-1e6f64..1e6).prop_map(Value::Number),
        (-1000i64..1000).prop_map(|n| Value::Number(n as f64)),
        "\\PC{0,8}".prop_map(Value::Text),
    ];
    leaf.prop_recursive(3, 24, 4, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 0..4).prop_map(Value::List),
            prop::collection::vec((key(), inner.clone()), 0..4).prop_map(Value::record),
            ("[A-Z][a-z]{0,5}", inner).prop_map(|(t, v)| Value::tagged(t, v)),
        ]
    })
}

/// Records guaranteed to hold `k`, at a random position.
fn record_with(k: &'static str) -> impl Strategy<Value = Value> {
    (prop::collection::vec((key(), value()), 0..4), value(), any::<prop::sample::Index>()).prop_map(
        move |(fields, v, at)| {
            let mut fields: Vec<(String, Value)> = fields.into_iter().filter(|(name, _)| name != k).collect();
            let at = at.index(fields.len() + 1);
            fields.insert(at, (k.to_string(), v));
            Value::record(fields)
        },
    )
}

fn lens_laws<S: mixoptic_core::Data + PartialEq + std::fmt::Debug, A: mixoptic_core::Data + PartialEq + std::fmt::Debug>(
    o: &Optic<S, S, A, A>,
    s: S,
    a1: A,
    a2: A,
) -> Result<(), TestCaseError> {
    // get-put, put-get, put-put
    prop_assert_eq!(ok(c::set(o, ok(c::view(o, s.clone()))?, s.clone()))?, s.clone());
    prop_assert_eq!(ok(c::view(o, ok(c::set(o, a1.clone(), s.clone()))?))?, a1.clone());
    prop_assert_eq!(
        ok(c::set(o, a2.clone(), ok(c::set(o, a1, s.clone()))?))?,
        ok(c::set(o, a2, s))?
    );
    Ok(())
}

fn text_field() -> impl Strategy<Value = String> {
    "[A-Za-z0-9][A-Za-z0-9 ]{0,11}"
}

fn address_strategy() -> impl Strategy<Value = Address> {
    (text_field(), text_field(), text_field()).prop_map(|(s, c, k)| Address::new(&s, &c, &k))
}

pub fn lens() -> Vec<String> {
    let mut failures = run("field lens", (record_with("city"), value(), value()), |(s, a1, a2)| {
        lens_laws(&field_lens("city"), s, a1, a2)
    });
    failures.extend(run(
        "street lens",
        (address_strategy(), text_field(), text_field()),
        |(s, a1, a2)| lens_laws(&fixtures::street(), s, a1, a2),
    ));
    failures.extend(run(
        "composed lens",
        (record_with("a"), value(), value()),
        |(inner, a1, a2)| {
            let outer = Value::record([("a", inner), ("b", Value::Null)]);
            let o = ok(compose(field_lens("a"), field_lens("a")))?;
            prop_assert_eq!(o.kind(), OpticKind::Lens);
            lens_laws(&o, outer, a1, a2)
        },
    ));
    failures
}

fn prism_laws<S, A>(o: &Optic<S, S, A, A>, s: S, a: A) -> Result<(), TestCaseError>
where
    S: mixoptic_core::Data + PartialEq + std::fmt::Debug,
    A: mixoptic_core::Data + PartialEq + std::fmt::Debug,
{
    let Optic::Prism { matcher, build } = o else {
        return Err(TestCaseError::fail("not a prism"));
    };
    // match (build a) = Focus a
    prop_assert_eq!(ok(matcher(ok(build(a.clone()))?))?, Match::Focus(a));
    match ok(matcher(s.clone()))? {
        // match s = Focus a  =>  build a = s
        Match::Focus(found) => prop_assert_eq!(ok(build(found))?, s),
        // match s = Miss t  =>  match t = Miss t
        Match::Miss(t) => prop_assert_eq!(ok(matcher(t.clone()))?, Match::Miss(t)),
    }
    Ok(())
}

pub fn prism() -> Vec<String> {
    let well_formed = || address_strategy().prop_map(|a| fixtures::build_postal(&a)).boxed();
    let any_text = prop_oneof![well_formed(), "\\PC{0,24}".boxed(), "[a-z, ]{0,12}".boxed()];
    let mut failures = run("address prism", (well_formed(), address_strategy()), |(s, a)| {
        prism_laws(&fixtures::address(), s, a)
    });
    // Off the documented domain only the miss law is promised.
    failures.extend(run("address prism misses", any_text, |s| {
        let Optic::Prism { matcher, .. } = fixtures::address() else { unreachable!() };
        if let Match::Miss(t) = ok(matcher(s))? {
            prop_assert_eq!(ok(matcher(t.clone()))?, Match::Miss(t));
        }
        Ok(())
    }));
    failures.extend(run("variant prism", (value(), value()), |(s, a)| {
        prism_laws(&variant_prism("Some"), s, a)
    }));
    failures
}

fn list() -> impl Strategy<Value = Value> {
    prop::collection::vec(value(), 0..6).prop_map(Value::List)
}

fn affine() -> impl Strategy<Value = (i64, i64)> {
    (-3i64..4, -5i64..6)
}

/// `n -> a*n + b` on numbers, identity elsewhere.
fn affine_fn((a, b): (i64, i64)) -> Fun<Value, Value> {
    Arc::new(move |v: Value| {
        Ok(match v {
            Value::Number(n) => Value::Number(a as f64 * n + b as f64),
            other => other,
        })
    })
}

fn then(f: Fun<Value, Value>, g: Fun<Value, Value>) -> Fun<Value, Value> {
    Arc::new(move |v| g(f(v)?))
}

pub fn traversal() -> Vec<String> {
    let each = each_traversal();
    let mut failures = run("traversal identity", list(), |s| {
        prop_assert_eq!(ok(c::over(&each, Arc::new(Ok), s.clone()))?, s);
        Ok(())
    });
    failures.extend(run("traversal length", (list(), value()), |(s, extra)| {
        let Optic::Traversal { extract } = &each else { unreachable!() };
        let e = ok(extract(s.clone()))?;
        let n = e.len();
        prop_assert_eq!(n, s.as_list().unwrap().len());
        let foci = e.foci().to_vec();
        prop_assert_eq!(ok(e.rebuild(foci.clone()))?, s);
        let mut longer = foci.clone();
        longer.push(extra);
        let too_long = matches!(e.rebuild(longer), Err(OpticError::Length { expected, found }) if expected == n && found == n + 1);
        prop_assert!(too_long);
        if n > 0 {
            let too_short = matches!(e.rebuild(foci[1..].to_vec()), Err(OpticError::Length { .. }));
            prop_assert!(too_short);
        }
        Ok(())
    }));
    failures.extend(run(
        "traversal over keeps length",
        (list(), affine()),
        |(s, f)| {
            let out = ok(c::over(&each, affine_fn(f), s.clone()))?;
            prop_assert_eq!(ok(c::to_list_of(&each, out))?.len(), ok(c::to_list_of(&each, s))?.len());
            Ok(())
        },
    ));
    failures
}

pub fn setter() -> Vec<String> {
    let mut setters: Vec<(String, ValueOptic)> = vec![
        ("deep".into(), super::entry(OpticKind::Setter)),
        ("each".into(), ok(mixoptic_core::composition::upcast(each_traversal(), OpticKind::Setter)).unwrap()),
    ];
    for (outer, inner) in [(OpticKind::Grate, OpticKind::Prism), (OpticKind::Kaleidoscope, OpticKind::Lens)] {
        assert!(matches!(join_kind(outer, inner), JoinResult::Fallback(_)));
        let o = compose(super::entry(outer), super::entry(inner)).expect("fallback composes");
        setters.push((format!("{outer}∘{inner}"), o));
    }
    let mut failures = Vec::new();
    for (name, o) in setters {
        let doc = prop_oneof![value(), list()];
        failures.extend(run(&format!("setter {name}"), (doc, affine(), affine()), |(s, f, g)| {
            let (f, g) = (affine_fn(f), affine_fn(g));
            // over (g . f) = over g . over f, and over id = id
            let fused = c::over(&o, then(f.clone(), g.clone()), s.clone());
            let staged = c::over(&o, f, s.clone()).and_then(|t| c::over(&o, g, t));
            prop_assert_eq!(format!("{fused:?}"), format!("{staged:?}"));
            if let Ok(t) = c::over(&o, Arc::new(Ok), s.clone()) {
                prop_assert_eq!(t, s);
            }
            Ok(())
        }));
    }
    failures
}

// FunList laws. Payloads are affine in the foci so that two lists can be
// compared by their sources and by evaluating at a few focus vectors.

type Ints = FunList<i64, i64, i64>;
type Arrows = FunList<i64, i64, Fun<i64, i64>>;

#[derive(Debug, Clone)]
pub struct Shape {
    sources: Vec<i64>,
    coeffs: Vec<i64>,
    constant: i64,
}

fn shape() -> impl Strategy<Value = Shape> {
    prop::collection::vec(-9i64..10, 0..=4).prop_flat_map(|sources| {
        let n = sources.len();
        (Just(sources), prop::collection::vec(-3i64..4, n), -9i64..10).prop_map(|(sources, coeffs, constant)| Shape {
            sources,
            coeffs,
            constant,
        })
    })
}

fn dot(coeffs: &[i64], foci: &[i64]) -> i64 {
    coeffs.iter().zip(foci).map(|(a, b)| a * b).sum()
}

fn ints(s: &Shape) -> Ints {
    let (coeffs, k) = (s.coeffs.clone(), s.constant);
    FunList::from_parts(s.sources.clone(), Arc::new(move |v: Vec<i64>| Ok(dot(&coeffs, &v) + k)))
}

/// `foci -> x -> slope*x + coeffs.foci + constant`
fn arrows(s: &Shape, slope: i64) -> Arrows {
    let (coeffs, k) = (s.coeffs.clone(), s.constant);
    FunList::from_parts(
        s.sources.clone(),
        Arc::new(move |v: Vec<i64>| {
            let offset = dot(&coeffs, &v) + k;
            let f: Fun<i64, i64> = Arc::new(move |x| Ok(slope * x + offset));
            Ok(f)
        }),
    )
}

fn focus_vectors(n: usize) -> Vec<Vec<i64>> {
    vec![vec![0; n], (1..=n as i64).collect(), (0..n as i64).map(|i| 7 - 3 * i).collect()]
}

fn observe<B: mixoptic_core::Data>(l: &FunList<i64, i64, B>, at: impl Fn(B) -> String) -> String {
    let n = l.depth();
    let outs: Vec<String> = focus_vectors(n)
        .into_iter()
        .map(|v| l.clone().run_with(v).map(&at).unwrap_or_else(|e| format!("{e:?}")))
        .collect();
    format!("{:?} {:?}", l.sources(), outs)
}

fn observe_ints(l: &Ints) -> String {
    observe(l, |b| b.to_string())
}

fn observe_arrows(l: &Arrows) -> String {
    observe(l, |f| format!("{:?}", [-2, 0, 5].map(|x| f(x).ok())))
}

fn compose_fn() -> Fun<Fun<i64, i64>, Fun<Fun<i64, i64>, Fun<i64, i64>>> {
    Arc::new(|g: Fun<i64, i64>| {
        let h: Fun<Fun<i64, i64>, Fun<i64, i64>> = Arc::new(move |f: Fun<i64, i64>| {
            let g = g.clone();
            let gf: Fun<i64, i64> = Arc::new(move |x| g(f(x)?));
            Ok(gf)
        });
        Ok(h)
    })
}

pub fn funlist() -> Vec<String> {
    let mut failures = run("funlist identity", shape(), |v| {
        let id: Fun<i64, i64> = Arc::new(Ok);
        let lhs = FunList::pure(id).ap(ints(&v));
        prop_assert_eq!(observe_ints(&lhs), observe_ints(&ints(&v)));
        Ok(())
    });
    failures.extend(run("funlist homomorphism", (-9i64..10, -9i64..10, -9i64..10), |(a, b, x)| {
        let f: Fun<i64, i64> = Arc::new(move |x| Ok(a * x + b));
        let lhs: Ints = FunList::pure(f.clone()).ap(FunList::pure(x));
        prop_assert_eq!(observe_ints(&lhs), observe_ints(&FunList::pure(f(x).unwrap())));
        Ok(())
    }));
    failures.extend(run("funlist interchange", (shape(), -3i64..4, -9i64..10), |(u, slope, y)| {
        let lhs = arrows(&u, slope).ap(FunList::pure(y));
        let apply_to_y: Fun<Fun<i64, i64>, i64> = Arc::new(move |f: Fun<i64, i64>| f(y));
        let rhs = FunList::pure(apply_to_y).ap(arrows(&u, slope));
        prop_assert_eq!(observe_ints(&lhs), observe_ints(&rhs));
        Ok(())
    }));
    failures.extend(run(
        "funlist composition",
        (shape(), shape(), shape(), -3i64..4, -3i64..4),
        |(u, v, w, su, sv)| {
            // pure (.) <*> u <*> v <*> w = u <*> (v <*> w)
            let lhs = FunList::pure(compose_fn()).ap(arrows(&u, su)).ap(arrows(&v, sv)).ap(ints(&w));
            let rhs = arrows(&u, su).ap(arrows(&v, sv).ap(ints(&w)));
            prop_assert_eq!(observe_ints(&lhs), observe_ints(&rhs));
            Ok(())
        },
    ));
    failures.extend(run("funlist functor identity", shape(), |v| {
        prop_assert_eq!(observe_ints(&ints(&v).map(Arc::new(Ok))), observe_ints(&ints(&v)));
        Ok(())
    }));
    failures.extend(run("funlist noFun round trip", shape(), |v| {
        let (sources, payload) = ints(&v).no_fun();
        prop_assert_eq!(observe_ints(&FunList::from_parts(sources, payload)), observe_ints(&ints(&v)));
        Ok(())
    }));
    failures.extend(run("funlist arrows are observable", (shape(), -3i64..4), |(u, s)| {
        let l = arrows(&u, s);
        prop_assert_eq!(l.depth(), u.sources.len());
        let expected = format!("{:?}", u.sources);
        prop_assert!(observe_arrows(&l).starts_with(&expected));
        Ok(())
    }));
    failures
}

pub fn json() -> Vec<String> {
    run("json round trip", value(), |v| {
        prop_assert_eq!(ok(parse_json(&v.to_json_string()))?, v.clone());
        prop_assert_eq!(ok(parse_json(&v.to_json_pretty()))?, v);
        Ok(())
    })
}

/// Every law suite that counts towards the acceptance report.
pub fn all() -> Vec<(&'static str, Vec<String>)> {
    let _ = catalog;
    vec![
        ("lens laws", lens()),
        ("prism laws", prism()),
        ("traversal laws", traversal()),
        ("setter composition", setter()),
        ("FunList applicative laws", funlist()),
    ]
}
