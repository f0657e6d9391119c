//! The kind lattice, upcasts and composition of concrete optics.

use std::sync::Arc;

use crate::capability::{CapabilitySet, Direction, OpticKind};
use crate::combinators;
use crate::effect::EffectKind;
use crate::error::{OpticError, Result};
use crate::func::{Data, Fun};
use crate::optic::{Extraction, Match, Optic};

/// The kind of a composite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JoinResult {
    Kind(OpticKind),
    /// No named kind fits; the composite can only be used as a setter.
    Fallback(OpticKind),
    Incompatible,
}

impl JoinResult {
    /// The kind the composite is built as, if any.
    pub fn kind(self) -> Option<OpticKind> {
        match self {
            JoinResult::Kind(k) | JoinResult::Fallback(k) => Some(k),
            JoinResult::Incompatible => None,
        }
    }
}

/// Whether an optic of kind `from` can be used where `to` is expected.
pub fn can_upcast(from: OpticKind, to: OpticKind) -> bool {
    if from == to {
        return true;
    }
    let effect_ok = match (from.is_effectful(), to) {
        (true, OpticKind::Getter) => true,
        (true, _) => false,
        (false, _) => true,
    };
    effect_ok && from.direction().serves(to.direction()) && from.capabilities().closure().is_subset(to.admits())
}

/// The least kind both `outer` and `inner` can be upcast to, such that the
/// composite's required capabilities are admitted.
pub fn join_kind(outer: OpticKind, inner: OpticKind) -> JoinResult {
    if outer.is_effectful() || inner.is_effectful() {
        let lenslike = |k: OpticKind| can_upcast(k, OpticKind::MonadicLens);
        return if lenslike(outer) && lenslike(inner) {
            JoinResult::Kind(OpticKind::MonadicLens)
        } else {
            JoinResult::Incompatible
        };
    }
    let Some(direction) = outer.direction().meet(inner.direction()) else {
        return JoinResult::Incompatible;
    };
    let needed = outer.capabilities().union(inner.capabilities()).closure();
    match least_admitting(needed, direction) {
        Some(k) => JoinResult::Kind(k),
        None if direction == Direction::Both => {
            if outer == OpticKind::Setter || inner == OpticKind::Setter {
                JoinResult::Kind(OpticKind::Setter)
            } else {
                JoinResult::Fallback(OpticKind::Setter)
            }
        }
        None => JoinResult::Incompatible,
    }
}

/// The named kind (other than setter) flowing `direction` whose admitted
/// set contains `needed` and is contained in every other such kind's.
pub fn least_admitting(needed: CapabilitySet, direction: Direction) -> Option<OpticKind> {
    let candidates: Vec<OpticKind> = OpticKind::ALL
        .into_iter()
        .filter(|k| {
            *k != OpticKind::Setter
                && !k.is_effectful()
                && k.direction() == direction
                && needed.is_subset(k.admits())
        })
        .collect();
    candidates
        .iter()
        .copied()
        .find(|k| candidates.iter().all(|other| k.admits().is_subset(other.admits())))
}

fn upcast_error(from: OpticKind, to: OpticKind) -> OpticError {
    OpticError::Upcast { from, to }
}

fn view_of<S: Data, T: Data, A: Data, B: Data>(o: &Optic<S, T, A, B>) -> Option<Fun<S, A>> {
    match o {
        Optic::Adapter { forward: v, .. }
        | Optic::Lens { view: v, .. }
        | Optic::AchromaticLens { view: v, .. }
        | Optic::AlgebraicLens { view: v, .. }
        | Optic::MonadicLens { view: v, .. }
        | Optic::Getter { get: v } => Some(v.clone()),
        _ => None,
    }
}

type Update<S, B, T> = crate::func::Fun2<S, B, T>;

fn update_of<S: Data, T: Data, A: Data, B: Data>(o: &Optic<S, T, A, B>) -> Option<Update<S, B, T>> {
    match o {
        Optic::Adapter { backward, .. } => {
            let backward = backward.clone();
            Some(Arc::new(move |_, b| backward(b)))
        }
        Optic::Lens { update, .. } | Optic::AchromaticLens { update, .. } => Some(update.clone()),
        Optic::AlgebraicLens { classify, .. } => {
            let classify = classify.clone();
            Some(Arc::new(move |s, b| classify(vec![s], b)))
        }
        _ => None,
    }
}

fn build_of<S: Data, T: Data, A: Data, B: Data>(o: &Optic<S, T, A, B>) -> Option<Fun<B, T>> {
    match o {
        Optic::Adapter { backward: r, .. }
        | Optic::AchromaticLens { create: r, .. }
        | Optic::Prism { build: r, .. }
        | Optic::Review { review: r } => Some(r.clone()),
        _ => None,
    }
}

fn access_of<S: Data, T: Data, A: Data, B: Data>(o: &Optic<S, T, A, B>) -> Option<Fun<S, Match<T, (A, Fun<B, T>)>>> {
    if let Optic::AffineTraversal { access } = o {
        return Some(access.clone());
    }
    if let Optic::Prism { matcher, build } = o {
        let (matcher, build) = (matcher.clone(), build.clone());
        return Some(Arc::new(move |s| {
            Ok(match matcher(s)? {
                Match::Miss(t) => Match::Miss(t),
                Match::Focus(a) => Match::Focus((a, build.clone())),
            })
        }));
    }
    let view = view_of(o)?;
    let update = update_of(o)?;
    Some(Arc::new(move |s: S| {
        let a = view(s.clone())?;
        let update = update.clone();
        let k: Fun<B, T> = Arc::new(move |b| update(s.clone(), b));
        Ok(Match::Focus((a, k)))
    }))
}

/// Converts `o` to an optic of kind `to`, when `can_upcast` allows it.
/// Monadic lenses are reached with the writer effect; use
/// [`Optic::lift_pure`] on a lens to choose another.
pub fn upcast<S: Data, T: Data, A: Data, B: Data>(o: Optic<S, T, A, B>, to: OpticKind) -> Result<Optic<S, T, A, B>> {
    let from = o.kind();
    if from == to {
        return Ok(o);
    }
    if !can_upcast(from, to) {
        return Err(upcast_error(from, to));
    }
    let missing = || upcast_error(from, to);
    Ok(match to {
        OpticKind::Lens => Optic::Lens {
            view: view_of(&o).ok_or_else(missing)?,
            update: update_of(&o).ok_or_else(missing)?,
        },
        OpticKind::AchromaticLens => Optic::AchromaticLens {
            view: view_of(&o).ok_or_else(missing)?,
            update: update_of(&o).ok_or_else(missing)?,
            create: build_of(&o).ok_or_else(missing)?,
        },
        OpticKind::AlgebraicLens => {
            let backward = build_of(&o).ok_or_else(missing)?;
            Optic::AlgebraicLens {
                view: view_of(&o).ok_or_else(missing)?,
                classify: Arc::new(move |_, b| backward(b)),
            }
        }
        OpticKind::MonadicLens => upcast(o, OpticKind::Lens)?.lift_pure(EffectKind::Writer)?,
        OpticKind::Prism => {
            let forward = view_of(&o).ok_or_else(missing)?;
            Optic::Prism {
                matcher: Arc::new(move |s| Ok(Match::Focus(forward(s)?))),
                build: build_of(&o).ok_or_else(missing)?,
            }
        }
        OpticKind::AffineTraversal => Optic::AffineTraversal {
            access: access_of(&o).ok_or_else(missing)?,
        },
        OpticKind::Traversal => {
            let access = access_of(&o).ok_or_else(missing)?;
            Optic::Traversal {
                extract: Arc::new(move |s| {
                    Ok(match access(s)? {
                        Match::Miss(t) => Extraction::new(Vec::new(), Arc::new(move |_| Ok(t.clone()))),
                        Match::Focus((a, k)) => Extraction::new(
                            vec![a],
                            Arc::new(move |mut bs: Vec<B>| match bs.pop() {
                                Some(b) => k(b),
                                None => Err(OpticError::Length { expected: 1, found: 0 }),
                            }),
                        ),
                    })
                }),
            }
        }
        OpticKind::Kaleidoscope => {
            let view = view_of(&o).ok_or_else(missing)?;
            let classify: Update<Vec<S>, B, T> = match &o {
                Optic::AlgebraicLens { classify, .. } => classify.clone(),
                _ => {
                    let backward = build_of(&o).ok_or_else(missing)?;
                    Arc::new(move |_, b| backward(b))
                }
            };
            Optic::Kaleidoscope {
                aggregate: Arc::new(move |f: Fun<Vec<A>, B>, ss: Vec<S>| {
                    let foci = ss.iter().cloned().map(|s| view(s)).collect::<Result<Vec<_>>>()?;
                    classify(ss, f(foci)?)
                }),
            }
        }
        OpticKind::Grate => {
            let forward = view_of(&o).ok_or_else(missing)?;
            let backward = build_of(&o).ok_or_else(missing)?;
            Optic::Grate {
                grate: Arc::new(move |f| backward(f(forward.clone())?)),
            }
        }
        OpticKind::Glass => match o {
            Optic::Grate { grate } => Optic::Glass {
                glass: Arc::new(move |f, _| grate(f)),
            },
            o => {
                let view = view_of(&o).ok_or_else(missing)?;
                let update = update_of(&o).ok_or_else(missing)?;
                Optic::Glass {
                    glass: Arc::new(move |f, s| update(s, f(view.clone())?)),
                }
            }
        },
        OpticKind::Setter => Optic::Setter {
            over: Arc::new(move |f, s| combinators::over(&o, f, s)),
        },
        OpticKind::Getter => Optic::Getter {
            get: view_of(&o).ok_or_else(missing)?,
        },
        OpticKind::Fold => Optic::Fold {
            to_list: Arc::new(move |s| combinators::to_list_of(&o, s)),
        },
        OpticKind::Review => Optic::Review {
            review: build_of(&o).ok_or_else(missing)?,
        },
        OpticKind::Adapter => return Err(missing()),
    })
}

fn effect_of<S, T, A, B>(o: &Optic<S, T, A, B>) -> Option<EffectKind> {
    match o {
        Optic::MonadicLens { effect, .. } => Some(*effect),
        _ => None,
    }
}

fn into_monadic<S: Data, T: Data, A: Data, B: Data>(
    o: Optic<S, T, A, B>,
    effect: EffectKind,
) -> Result<Optic<S, T, A, B>> {
    match o {
        m @ Optic::MonadicLens { .. } => Ok(m),
        o => upcast(o, OpticKind::Lens)?.lift_pure(effect),
    }
}

/// `outer` after `inner`: the composite focuses on what `inner` focuses on
/// inside `outer`'s focus. Both are first upcast to their join.
pub fn compose<S, T, A, B, X, Y>(outer: Optic<S, T, A, B>, inner: Optic<A, B, X, Y>) -> Result<Optic<S, T, X, Y>>
where
    S: Data,
    T: Data,
    A: Data,
    B: Data,
    X: Data,
    Y: Data,
{
    let (ko, ki) = (outer.kind(), inner.kind());
    let kind = join_kind(ko, ki)
        .kind()
        .ok_or(OpticError::Composition { outer: ko, inner: ki })?;
    if kind == OpticKind::MonadicLens {
        let effect = effect_of(&outer).or(effect_of(&inner)).unwrap_or(EffectKind::Writer);
        return compose_same(into_monadic(outer, effect)?, into_monadic(inner, effect)?);
    }
    compose_same(upcast(outer, kind)?, upcast(inner, kind)?)
}

/// Composition of two optics already of the same kind.
pub fn compose_same<S, T, A, B, X, Y>(
    outer: Optic<S, T, A, B>,
    inner: Optic<A, B, X, Y>,
) -> Result<Optic<S, T, X, Y>>
where
    S: Data,
    T: Data,
    A: Data,
    B: Data,
    X: Data,
    Y: Data,
{
    use crate::func::then;
    let mismatch = OpticError::Composition {
        outer: outer.kind(),
        inner: inner.kind(),
    };
    Ok(match (outer, inner) {
        (Optic::Adapter { forward: f1, backward: b1 }, Optic::Adapter { forward: f2, backward: b2 }) => Optic::Adapter {
            forward: then(f1, f2),
            backward: then(b2, b1),
        },
        (Optic::Lens { view: v1, update: u1 }, Optic::Lens { view: v2, update: u2 }) => Optic::Lens {
            view: then(v1.clone(), v2),
            update: Arc::new(move |s: S, y| u1(s.clone(), u2(v1(s)?, y)?)),
        },
        (
            Optic::AchromaticLens {
                view: v1,
                update: u1,
                create: c1,
            },
            Optic::AchromaticLens {
                view: v2,
                update: u2,
                create: c2,
            },
        ) => Optic::AchromaticLens {
            view: then(v1.clone(), v2),
            update: Arc::new(move |s: S, y| u1(s.clone(), u2(v1(s)?, y)?)),
            create: then(c2, c1),
        },
        (Optic::AlgebraicLens { view: v1, classify: c1 }, Optic::AlgebraicLens { view: v2, classify: c2 }) => {
            Optic::AlgebraicLens {
                view: then(v1.clone(), v2),
                classify: Arc::new(move |ss: Vec<S>, y| {
                    let foci = ss.iter().cloned().map(|s| v1(s)).collect::<Result<Vec<_>>>()?;
                    c1(ss, c2(foci, y)?)
                }),
            }
        }
        (
            Optic::MonadicLens {
                effect,
                view: v1,
                update: u1,
            },
            Optic::MonadicLens { view: v2, update: u2, .. },
        ) => Optic::MonadicLens {
            effect,
            view: then(v1.clone(), v2),
            update: Arc::new(move |s: S, y| {
                let u1 = u1.clone();
                u2(v1(s.clone())?, y)?.bind(move |b| u1(s, b))
            }),
        },
        (Optic::Prism { matcher: m1, build: b1 }, Optic::Prism { matcher: m2, build: b2 }) => {
            let rebuild = b1.clone();
            Optic::Prism {
                matcher: Arc::new(move |s| {
                    Ok(match m1(s)? {
                        Match::Miss(t) => Match::Miss(t),
                        Match::Focus(a) => match m2(a)? {
                            Match::Miss(b) => Match::Miss(rebuild(b)?),
                            Match::Focus(x) => Match::Focus(x),
                        },
                    })
                }),
                build: then(b2, b1),
            }
        }
        (Optic::AffineTraversal { access: a1 }, Optic::AffineTraversal { access: a2 }) => Optic::AffineTraversal {
            access: Arc::new(move |s| {
                Ok(match a1(s)? {
                    Match::Miss(t) => Match::Miss(t),
                    Match::Focus((a, k1)) => match a2(a)? {
                        Match::Miss(b) => Match::Miss(k1(b)?),
                        Match::Focus((x, k2)) => Match::Focus((x, then(k2, k1))),
                    },
                })
            }),
        },
        (Optic::Traversal { extract: x1 }, Optic::Traversal { extract: x2 }) => Optic::Traversal {
            extract: Arc::new(move |s| {
                let outer = x1(s)?;
                let inners = outer
                    .foci()
                    .iter()
                    .cloned()
                    .map(|a| x2(a))
                    .collect::<Result<Vec<_>>>()?;
                let foci: Vec<X> = inners.iter().flat_map(|e| e.foci().iter().cloned()).collect();
                Ok(Extraction::new(
                    foci,
                    Arc::new(move |ys: Vec<Y>| {
                        let mut ys = ys.into_iter();
                        let bs = inners
                            .iter()
                            .map(|e| e.rebuild(ys.by_ref().take(e.len()).collect()))
                            .collect::<Result<Vec<_>>>()?;
                        outer.rebuild(bs)
                    }),
                ))
            }),
        },
        (Optic::Kaleidoscope { aggregate: g1 }, Optic::Kaleidoscope { aggregate: g2 }) => Optic::Kaleidoscope {
            aggregate: Arc::new(move |f: Fun<Vec<X>, Y>, ss| {
                let g2 = g2.clone();
                g1(Arc::new(move |as_: Vec<A>| g2(f.clone(), as_)), ss)
            }),
        },
        (Optic::Grate { grate: g1 }, Optic::Grate { grate: g2 }) => Optic::Grate {
            grate: Arc::new(move |f: Fun<Fun<S, X>, Y>| {
                let g2 = g2.clone();
                g1(Arc::new(move |k1: Fun<S, A>| {
                    let f = f.clone();
                    g2(Arc::new(move |k2: Fun<A, X>| f(then(k1.clone(), k2))))
                }))
            }),
        },
        (Optic::Glass { glass: g1 }, Optic::Glass { glass: g2 }) => Optic::Glass {
            glass: Arc::new(move |f: Fun<Fun<S, X>, Y>, s: S| {
                let g2 = g2.clone();
                let at = s.clone();
                g1(
                    Arc::new(move |k1: Fun<S, A>| {
                        let f = f.clone();
                        let inner = k1(at.clone())?;
                        g2(Arc::new(move |k2: Fun<A, X>| f(then(k1.clone(), k2))), inner)
                    }),
                    s,
                )
            }),
        },
        (Optic::Setter { over: o1 }, Optic::Setter { over: o2 }) => Optic::Setter {
            over: Arc::new(move |f, s| {
                let o2 = o2.clone();
                o1(Arc::new(move |a| o2(f.clone(), a)), s)
            }),
        },
        (Optic::Getter { get: g1 }, Optic::Getter { get: g2 }) => Optic::Getter { get: then(g1, g2) },
        (Optic::Fold { to_list: t1 }, Optic::Fold { to_list: t2 }) => Optic::Fold {
            to_list: Arc::new(move |s| {
                let mut out = Vec::new();
                for a in t1(s)? {
                    out.extend(t2(a)?);
                }
                Ok(out)
            }),
        },
        (Optic::Review { review: r1 }, Optic::Review { review: r2 }) => Optic::Review { review: then(r2, r1) },
        _ => return Err(mismatch),
    })
}
