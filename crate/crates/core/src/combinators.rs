//! Applying concrete optics: the combinators each family supports.

use std::sync::Arc;

use crate::effect::Effect;
use crate::error::{OpticError, Result};
use crate::func::{Data, Fun};
use crate::optic::{Match, Optic};

fn unsupported<S, T, A, B>(combinator: &'static str, o: &Optic<S, T, A, B>) -> OpticError {
    OpticError::Kind {
        combinator,
        kind: o.kind(),
    }
}

/// Reads the single focus.
pub fn view<S: Data, T: Data, A: Data, B: Data>(o: &Optic<S, T, A, B>, s: S) -> Result<A> {
    match o {
        Optic::Adapter { forward: get, .. }
        | Optic::Lens { view: get, .. }
        | Optic::AchromaticLens { view: get, .. }
        | Optic::AlgebraicLens { view: get, .. }
        | Optic::MonadicLens { view: get, .. }
        | Optic::Getter { get } => get(s),
        _ => Err(unsupported("view", o)),
    }
}

/// Reads the focus if the optic matches.
pub fn preview<S: Data, T: Data, A: Data, B: Data>(o: &Optic<S, T, A, B>, s: S) -> Result<Option<A>> {
    match o {
        Optic::Prism { matcher, .. } => Ok(matcher(s)?.focus()),
        Optic::AffineTraversal { access } => Ok(access(s)?.focus().map(|(a, _)| a)),
        Optic::Adapter { .. }
        | Optic::Lens { .. }
        | Optic::AchromaticLens { .. }
        | Optic::AlgebraicLens { .. }
        | Optic::Getter { .. } => view(o, s).map(Some),
        _ => Err(unsupported("preview", o)),
    }
}

/// Replaces the focus; a miss returns the whole unchanged.
pub fn set<S: Data, T: Data, A: Data, B: Data>(o: &Optic<S, T, A, B>, b: B, s: S) -> Result<T> {
    match o {
        Optic::Adapter { .. }
        | Optic::Lens { .. }
        | Optic::AchromaticLens { .. }
        | Optic::AlgebraicLens { .. }
        | Optic::Prism { .. }
        | Optic::AffineTraversal { .. } => over(o, Arc::new(move |_| Ok(b.clone())), s),
        _ => Err(unsupported("set", o)),
    }
}

/// Maps a function over every focus.
pub fn over<S: Data, T: Data, A: Data, B: Data>(o: &Optic<S, T, A, B>, f: Fun<A, B>, s: S) -> Result<T> {
    match o {
        Optic::Adapter { forward, backward } => backward(f(forward(s)?)?),
        Optic::Lens { view, update } | Optic::AchromaticLens { view, update, .. } => {
            let b = f(view(s.clone())?)?;
            update(s, b)
        }
        Optic::AlgebraicLens { view, classify } => {
            let b = f(view(s.clone())?)?;
            classify(vec![s], b)
        }
        Optic::Prism { matcher, build } => match matcher(s)? {
            Match::Miss(t) => Ok(t),
            Match::Focus(a) => build(f(a)?),
        },
        Optic::AffineTraversal { access } => match access(s)? {
            Match::Miss(t) => Ok(t),
            Match::Focus((a, rebuild)) => rebuild(f(a)?),
        },
        Optic::Traversal { extract } => {
            let ex = extract(s)?;
            let bs = ex.foci().iter().cloned().map(|a| f(a)).collect::<Result<Vec<_>>>()?;
            ex.rebuild(bs)
        }
        Optic::Kaleidoscope { aggregate } => {
            let pointwise: Fun<Vec<A>, B> = Arc::new(move |mut v: Vec<A>| match (v.pop(), v.is_empty()) {
                (Some(a), true) => f(a),
                _ => Err(OpticError::Length {
                    expected: 1,
                    found: v.len() + 1,
                }),
            });
            aggregate(pointwise, vec![s])
        }
        Optic::Grate { grate } => {
            let g: Fun<Fun<S, A>, B> = Arc::new(move |k: Fun<S, A>| f(k(s.clone())?));
            grate(g)
        }
        Optic::Glass { glass } => {
            let at = s.clone();
            let g: Fun<Fun<S, A>, B> = Arc::new(move |k: Fun<S, A>| f(k(at.clone())?));
            glass(g, s)
        }
        Optic::Setter { over } => over(f, s),
        Optic::MonadicLens { .. } | Optic::Getter { .. } | Optic::Review { .. } | Optic::Fold { .. } => {
            Err(unsupported("over", o))
        }
    }
}

/// Every focus, in extraction order.
pub fn to_list_of<S: Data, T: Data, A: Data, B: Data>(o: &Optic<S, T, A, B>, s: S) -> Result<Vec<A>> {
    match o {
        Optic::Fold { to_list } => to_list(s),
        Optic::Traversal { extract } => Ok(extract(s)?.into_foci()),
        Optic::Prism { .. } | Optic::AffineTraversal { .. } => Ok(preview(o, s)?.into_iter().collect()),
        Optic::Adapter { .. }
        | Optic::Lens { .. }
        | Optic::AchromaticLens { .. }
        | Optic::AlgebraicLens { .. }
        | Optic::Getter { .. } => Ok(vec![view(o, s)?]),
        _ => Err(unsupported("toListOf", o)),
    }
}

/// Rebuilds a whole from a new focus, trained on `training`.
pub fn classify<S: Data, T: Data, A: Data, B: Data>(o: &Optic<S, T, A, B>, training: Vec<S>, b: B) -> Result<T> {
    match o {
        Optic::AlgebraicLens { classify, .. } => {
            if training.is_empty() {
                return Err(OpticError::EmptyTraining);
            }
            classify(training, b)
        }
        Optic::Adapter { backward, .. } => {
            if training.is_empty() {
                return Err(OpticError::EmptyTraining);
            }
            backward(b)
        }
        _ => Err(unsupported("classify", o)),
    }
}

/// Folds the foci of a batch pointwise with `f`.
pub fn aggregate<S: Data, T: Data, A: Data, B: Data>(
    o: &Optic<S, T, A, B>,
    f: Fun<Vec<A>, B>,
    ss: Vec<S>,
) -> Result<T> {
    if !matches!(
        o,
        Optic::Kaleidoscope { .. } | Optic::AlgebraicLens { .. } | Optic::Adapter { .. }
    ) {
        return Err(unsupported("aggregate", o));
    }
    if ss.is_empty() {
        return Err(OpticError::EmptyInput);
    }
    match o {
        Optic::Kaleidoscope { aggregate } => aggregate(f, ss),
        Optic::AlgebraicLens { view, classify } => {
            let foci = ss.iter().cloned().map(|s| view(s)).collect::<Result<Vec<_>>>()?;
            classify(ss, f(foci)?)
        }
        Optic::Adapter { forward, backward } => {
            let foci = ss.into_iter().map(|s| forward(s)).collect::<Result<Vec<_>>>()?;
            backward(f(foci)?)
        }
        _ => unreachable!(),
    }
}

/// Effectful update through a monadic lens.
pub fn mupdate<S: Data, T: Data, A: Data, B: Data>(o: &Optic<S, T, A, B>, b: B, s: S) -> Result<Effect<T>> {
    match o {
        Optic::MonadicLens { update, .. } => update(s, b),
        _ => Err(unsupported("mupdate", o)),
    }
}

/// Builds a whole from a focus alone.
pub fn review<S: Data, T: Data, A: Data, B: Data>(o: &Optic<S, T, A, B>, b: B) -> Result<T> {
    match o {
        Optic::Prism { build, .. } => build(b),
        Optic::Review { review } => review(b),
        Optic::Adapter { backward, .. } => backward(b),
        Optic::AchromaticLens { create, .. } => create(b),
        _ => Err(unsupported("review", o)),
    }
}

/// Runs a grate-like optic on a continuation. Glasses and lenses need the
/// source `s`; grates and adapters ignore it.
pub fn grate_apply<S: Data, T: Data, A: Data, B: Data>(
    o: &Optic<S, T, A, B>,
    f: Fun<Fun<S, A>, B>,
    s: Option<S>,
) -> Result<T> {
    let need_source = || OpticError::focus(format!("{} needs a source value", crate::error::a(&o.kind())));
    match o {
        Optic::Grate { grate } => grate(f),
        Optic::Glass { glass } => glass(f, s.ok_or_else(need_source)?),
        Optic::Adapter { forward, backward } => backward(f(forward.clone())?),
        Optic::Lens { view, update } | Optic::AchromaticLens { view, update, .. } => {
            let s = s.ok_or_else(need_source)?;
            update(s, f(view.clone())?)
        }
        _ => Err(unsupported("grate", o)),
    }
}
