//! Optics as transformers of combinator modules.
//!
//! [`ex2prof`] turns a concrete optic into a [`ProfOptic`], which
//! transports any module able to lift through the optic's capabilities.
//! [`prof2ex`] recovers a concrete optic by running a transformer on the
//! identity element of the right modules.

use std::collections::VecDeque;
use std::marker::PhantomData;
use std::sync::{Arc, Mutex};

use crate::capability::{CapabilitySet, Direction, OpticKind};
use crate::effect::{Effect, EffectKind};
use crate::error::{OpticError, Result};
use crate::func::{Data, Fun, Fun2};
use crate::funlist::FunList;
use crate::modules::*;
use crate::optic::{Extraction, Match, Optic};

/// What a transformer demands of the modules it is run on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    /// Closed under implication.
    pub capabilities: CapabilitySet,
    /// `None` when no data can flow through (a read-only part composed
    /// with a build-only one).
    pub direction: Option<Direction>,
    pub effect: Option<EffectKind>,
}

impl Signature {
    pub fn of_kind(kind: OpticKind, effect: Option<EffectKind>) -> Self {
        Signature {
            capabilities: kind.capabilities().closure(),
            direction: Some(kind.direction()),
            effect,
        }
    }

    /// The signature of `outer` after `inner`.
    pub fn then(self, inner: Signature) -> Self {
        Signature {
            capabilities: self.capabilities.union(inner.capabilities).closure(),
            direction: self.direction.zip(inner.direction).and_then(|(a, b)| a.meet(b)),
            effect: self.effect.or(inner.effect),
        }
    }

    /// Checks that `module` can run an optic with this signature.
    pub fn check(self, module: ModuleKind) -> Result<()> {
        if let Some(missing) = self.capabilities.iter().find(|c| !module.supports().contains(*c)) {
            return Err(module.missing(missing));
        }
        let what = match self.direction {
            None => Some("an optic that neither reads nor builds"),
            Some(d) if !module.allows(d) => Some(match d {
                Direction::ReadOnly => "a read-only optic",
                _ => "a build-only optic",
            }),
            _ => None,
        };
        let what = what.or_else(|| {
            (self.effect.is_some() && !module.allows_effects()).then_some("an effectful optic")
        });
        match what {
            Some(what) => Err(OpticError::Unrunnable {
                carrier: module.name(),
                what,
            }),
            None => Ok(()),
        }
    }

    /// Whether a concrete optic of `kind` can be recovered from this
    /// signature.
    pub fn fits(self, kind: OpticKind) -> bool {
        let Some(direction) = self.direction else {
            return false;
        };
        let effect_ok = match kind {
            OpticKind::MonadicLens | OpticKind::Getter => true,
            _ => self.effect.is_none(),
        };
        effect_ok && direction.serves(kind.direction()) && self.capabilities.is_subset(kind.admits())
    }
}

/// An optic `S T A B` as a family of module transformers.
pub trait ProfOptic<S: Data, T: Data, A: Data, B: Data>: Send + Sync {
    fn signature(&self) -> Signature;

    fn viewing<X: Data>(&self, p: Viewing<X, A>) -> Result<Viewing<X, S>>;
    fn previewing<X: Data>(&self, p: Previewing<X, A>) -> Result<Previewing<X, S>>;
    fn folding<X: Data>(&self, p: Folding<X, A>) -> Result<Folding<X, S>>;
    fn setting<X: Data, Y: Data>(&self, p: Setting<X, Y, A, B>) -> Result<Setting<X, Y, S, T>>;
    fn replacing<X: Data, Y: Data>(&self, p: Replacing<X, Y, A, B>) -> Result<Replacing<X, Y, S, T>>;
    fn classifying<Y: Data>(&self, p: Classifying<Y, A, B>) -> Result<Classifying<Y, S, T>>;
    fn aggregating<X: Data, Y: Data>(&self, p: Aggregating<X, Y, A, B>) -> Result<Aggregating<X, Y, S, T>>;
    fn updating<Y: Data>(&self, p: Updating<Y, A, B>) -> Result<Updating<Y, S, T>>;
    fn reviewing<Y: Data>(&self, p: Reviewing<Y, B>) -> Result<Reviewing<Y, T>>;
    fn grating<X: Data, Y: Data>(&self, p: Grating<X, Y, A, B>) -> Result<Grating<X, Y, S, T>>;
    fn glassing<X: Data, Y: Data>(&self, p: Glassing<X, Y, A, B>) -> Result<Glassing<X, Y, S, T>>;
}

/// A concrete optic seen as a module transformer.
#[derive(Clone, Debug)]
pub struct Encoded<S, T, A, B>(pub Optic<S, T, A, B>);

pub fn ex2prof<S: Data, T: Data, A: Data, B: Data>(o: Optic<S, T, A, B>) -> Encoded<S, T, A, B> {
    Encoded(o)
}

fn split<S: Data, A: Data>(view: &Fun<S, A>) -> Fun<S, (S, A)> {
    let view = view.clone();
    Arc::new(move |s: S| Ok((s.clone(), view(s)?)))
}

fn split_pointed<S: Data, A: Data>(view: &Fun<S, A>) -> Fun<S, (Option<S>, A)> {
    let view = view.clone();
    Arc::new(move |s: S| Ok((Some(s.clone()), view(s)?)))
}

fn split_list<S: Data, A: Data>(view: &Fun<S, A>) -> Fun<S, (Vec<S>, A)> {
    let view = view.clone();
    Arc::new(move |s: S| Ok((vec![s.clone()], view(s)?)))
}

fn merge<S: Data, B: Data, T: Data>(update: &Fun2<S, B, T>) -> Fun<(S, B), T> {
    let update = update.clone();
    Arc::new(move |(s, b)| update(s, b))
}

fn merge_pointed<S: Data, B: Data, T: Data>(update: &Fun2<S, B, T>, create: &Fun<B, T>) -> Fun<(Option<S>, B), T> {
    let update = update.clone();
    let create = create.clone();
    Arc::new(move |(ms, b)| match ms {
        Some(s) => update(s, b),
        None => create(b),
    })
}

fn either<T: Data, B: Data>(build: &Fun<B, T>) -> Fun<Match<T, B>, T> {
    let build = build.clone();
    Arc::new(move |m| match m {
        Match::Miss(t) => Ok(t),
        Match::Focus(b) => build(b),
    })
}

/// The affine decomposition with the residual on the left of the pair.
fn affine_split<S: Data, T: Data, A: Data, B: Data>(
    access: &Fun<S, Match<T, (A, Fun<B, T>)>>,
) -> Fun<S, Match<T, (Fun<B, T>, A)>> {
    let access = access.clone();
    Arc::new(move |s| {
        Ok(match access(s)? {
            Match::Miss(t) => Match::Miss(t),
            Match::Focus((a, k)) => Match::Focus((k, a)),
        })
    })
}

fn affine_merge<T: Data, B: Data>() -> Fun<Match<T, (Fun<B, T>, B)>, T> {
    Arc::new(|m| match m {
        Match::Miss(t) => Ok(t),
        Match::Focus((k, b)) => k(b),
    })
}

fn traversal_split<S: Data, T: Data, A: Data, B: Data>(
    extract: &Fun<S, Extraction<A, B, T>>,
) -> Fun<S, FunList<A, B, T>> {
    let extract = extract.clone();
    Arc::new(move |s| {
        let e = extract(s)?;
        let rebuild = e.rebuilder();
        Ok(FunList::from_parts(e.into_foci(), rebuild))
    })
}

fn kaleidoscope_merge<S: Data, T: Data, A: Data, B: Data>(
    aggregate: &crate::optic::Aggregator<S, T, A, B>,
) -> Fun<FunList<S, A, B>, T> {
    let aggregate = aggregate.clone();
    Arc::new(move |l: FunList<S, A, B>| {
        let (ss, h) = l.no_fun();
        aggregate(h, ss)
    })
}

fn grate_split<S: Data, A: Data>() -> Fun<S, Fun<Fun<S, A>, A>> {
    Arc::new(|s: S| {
        let at: Fun<Fun<S, A>, A> = Arc::new(move |k: Fun<S, A>| k(s.clone()));
        Ok(at)
    })
}

fn glass_split<S: Data, A: Data>() -> Fun<S, (S, Fun<Fun<S, A>, A>)> {
    Arc::new(|s: S| {
        let t = s.clone();
        let at: Fun<Fun<S, A>, A> = Arc::new(move |k: Fun<S, A>| k(t.clone()));
        Ok((s, at))
    })
}

impl<S: Data, T: Data, A: Data, B: Data> Encoded<S, T, A, B> {
    fn effect(&self) -> Option<EffectKind> {
        match &self.0 {
            Optic::MonadicLens { effect, .. } => Some(*effect),
            _ => None,
        }
    }
}

impl<S: Data, T: Data, A: Data, B: Data> ProfOptic<S, T, A, B> for Encoded<S, T, A, B> {
    fn signature(&self) -> Signature {
        Signature::of_kind(self.0.kind(), self.effect())
    }

    fn viewing<X: Data>(&self, p: Viewing<X, A>) -> Result<Viewing<X, S>> {
        self.signature().check(ModuleKind::Viewing)?;
        Ok(match &self.0 {
            Optic::Adapter { forward, .. } => p.premap(forward.clone()),
            Optic::Lens { view, .. } | Optic::MonadicLens { view, .. } => p.lift_product::<S>().premap(split(view)),
            Optic::AchromaticLens { view, .. } => p.lift_pointed::<Option<S>>().premap(split_pointed(view)),
            Optic::AlgebraicLens { view, .. } => p.lift_list_algebra::<Vec<S>>().premap(split_list(view)),
            Optic::Getter { get } => p.premap(get.clone()),
            o => return Err(unrunnable(ModuleKind::Viewing, o)),
        })
    }

    fn previewing<X: Data>(&self, p: Previewing<X, A>) -> Result<Previewing<X, S>> {
        self.signature().check(ModuleKind::Previewing)?;
        Ok(match &self.0 {
            Optic::Adapter { forward, .. } => p.premap(forward.clone()),
            Optic::Lens { view, .. } => p.lift_product::<S>().premap(split(view)),
            Optic::AchromaticLens { view, .. } => p.lift_pointed::<Option<S>>().premap(split_pointed(view)),
            Optic::AlgebraicLens { view, .. } => p.lift_list_algebra::<Vec<S>>().premap(split_list(view)),
            Optic::Prism { matcher, .. } => p.lift_sum::<T>().premap(matcher.clone()),
            Optic::AffineTraversal { access } => p
                .lift_product::<Fun<B, T>>()
                .lift_sum::<T>()
                .premap(affine_split(access)),
            Optic::Getter { get } => p.premap(get.clone()),
            o => return Err(unrunnable(ModuleKind::Previewing, o)),
        })
    }

    fn folding<X: Data>(&self, p: Folding<X, A>) -> Result<Folding<X, S>> {
        self.signature().check(ModuleKind::Folding)?;
        Ok(match &self.0 {
            Optic::Adapter { forward, .. } => p.premap(forward.clone()),
            Optic::Lens { view, .. } => p.lift_product::<S>().premap(split(view)),
            Optic::AchromaticLens { view, .. } => p.lift_pointed::<Option<S>>().premap(split_pointed(view)),
            Optic::AlgebraicLens { view, .. } => p.lift_list_algebra::<Vec<S>>().premap(split_list(view)),
            Optic::Prism { matcher, .. } => p.lift_sum::<T>().premap(matcher.clone()),
            Optic::AffineTraversal { access } => p
                .lift_product::<Fun<B, T>>()
                .lift_sum::<T>()
                .premap(affine_split(access)),
            Optic::Traversal { extract } => p.lift_traversable::<B, T>().premap(traversal_split(extract)),
            Optic::Getter { get } => p.premap(get.clone()),
            Optic::Fold { to_list } => {
                let to_list = to_list.clone();
                p.lift_traversable::<(), ()>().premap(Arc::new(move |s| {
                    Ok(FunList::from_parts(to_list(s)?, Arc::new(|_| Ok(()))))
                }))
            }
            o => return Err(unrunnable(ModuleKind::Folding, o)),
        })
    }

    fn setting<X: Data, Y: Data>(&self, p: Setting<X, Y, A, B>) -> Result<Setting<X, Y, S, T>> {
        self.signature().check(ModuleKind::Setting)?;
        Ok(match &self.0 {
            Optic::Adapter { forward, backward } => p.dimap(forward.clone(), backward.clone()),
            Optic::Lens { view, update } => p.lift_product::<S>().dimap(split(view), merge(update)),
            Optic::AchromaticLens { view, update, create } => p
                .lift_pointed::<Option<S>>()
                .dimap(split_pointed(view), merge_pointed(update, create)),
            Optic::AlgebraicLens { view, classify } => p
                .lift_list_algebra::<Vec<S>>()
                .dimap(split_list(view), merge(classify)),
            Optic::Prism { matcher, build } => p.lift_sum::<T>().dimap(matcher.clone(), either(build)),
            Optic::AffineTraversal { access } => p
                .lift_product::<Fun<B, T>>()
                .lift_sum::<T>()
                .dimap(affine_split(access), affine_merge()),
            o => return Err(unrunnable(ModuleKind::Setting, o)),
        })
    }

    fn replacing<X: Data, Y: Data>(&self, p: Replacing<X, Y, A, B>) -> Result<Replacing<X, Y, S, T>> {
        self.signature().check(ModuleKind::Replacing)?;
        Ok(match &self.0 {
            Optic::Adapter { forward, backward } => p.dimap(forward.clone(), backward.clone()),
            Optic::Lens { view, update } => p.lift_product::<S>().dimap(split(view), merge(update)),
            Optic::AchromaticLens { view, update, create } => p
                .lift_pointed::<Option<S>>()
                .dimap(split_pointed(view), merge_pointed(update, create)),
            Optic::AlgebraicLens { view, classify } => p
                .lift_list_algebra::<Vec<S>>()
                .dimap(split_list(view), merge(classify)),
            Optic::Prism { matcher, build } => p.lift_sum::<T>().dimap(matcher.clone(), either(build)),
            Optic::AffineTraversal { access } => p
                .lift_product::<Fun<B, T>>()
                .lift_sum::<T>()
                .dimap(affine_split(access), affine_merge()),
            Optic::Traversal { extract } => p
                .lift_traversable::<B, T>()
                .dimap(traversal_split(extract), Arc::new(|l: FunList<B, B, T>| l.eval())),
            Optic::Kaleidoscope { aggregate } => p
                .lift_applicative::<S, A>()
                .dimap(Arc::new(|s| Ok(FunList::singleton(s))), kaleidoscope_merge(aggregate)),
            Optic::Grate { grate } => p.lift_closed::<Fun<S, A>>().dimap(grate_split(), grate.clone()),
            Optic::Glass { glass } => {
                let glass = glass.clone();
                p.lift_closed::<Fun<S, A>>()
                    .lift_product::<S>()
                    .dimap(glass_split(), Arc::new(move |(s, g)| glass(g, s)))
            }
            Optic::Setter { over } => p.through(over.clone()),
            o => return Err(unrunnable(ModuleKind::Replacing, o)),
        })
    }

    fn classifying<Y: Data>(&self, p: Classifying<Y, A, B>) -> Result<Classifying<Y, S, T>> {
        self.signature().check(ModuleKind::Classifying)?;
        Ok(match &self.0 {
            Optic::Adapter { forward, backward } => p.dimap(forward.clone(), backward.clone()),
            Optic::AlgebraicLens { view, classify } => p
                .lift_list_algebra::<Vec<S>>()
                .dimap(split_list(view), merge(classify)),
            o => return Err(unrunnable(ModuleKind::Classifying, o)),
        })
    }

    fn aggregating<X: Data, Y: Data>(&self, p: Aggregating<X, Y, A, B>) -> Result<Aggregating<X, Y, S, T>> {
        self.signature().check(ModuleKind::Aggregating)?;
        Ok(match &self.0 {
            Optic::Adapter { forward, backward } => p.dimap(forward.clone(), backward.clone()),
            Optic::AlgebraicLens { view, classify } => p
                .lift_list_algebra::<Vec<S>>()
                .dimap(split_list(view), merge(classify)),
            Optic::Kaleidoscope { aggregate } => p
                .lift_applicative::<S, A>()
                .dimap(Arc::new(|s| Ok(FunList::singleton(s))), kaleidoscope_merge(aggregate)),
            o => return Err(unrunnable(ModuleKind::Aggregating, o)),
        })
    }

    fn updating<Y: Data>(&self, p: Updating<Y, A, B>) -> Result<Updating<Y, S, T>> {
        self.signature().check(ModuleKind::Updating)?;
        Ok(match &self.0 {
            Optic::Adapter { forward, backward } => p.dimap(forward.clone(), backward.clone()),
            Optic::Lens { view, update } => p.lift_product::<S>().dimap(split(view), merge(update)),
            Optic::AchromaticLens { view, update, create } => p
                .lift_pointed::<Option<S>>()
                .dimap(split_pointed(view), merge_pointed(update, create)),
            Optic::AlgebraicLens { view, classify } => p
                .lift_list_algebra::<Vec<S>>()
                .dimap(split_list(view), merge(classify)),
            Optic::MonadicLens { view, update, .. } => {
                let update = update.clone();
                p.lift_product::<S>()
                    .dimap_kleisli(split(view), Arc::new(move |(s, b)| update(s, b)))
            }
            o => return Err(unrunnable(ModuleKind::Updating, o)),
        })
    }

    fn reviewing<Y: Data>(&self, p: Reviewing<Y, B>) -> Result<Reviewing<Y, T>> {
        self.signature().check(ModuleKind::Reviewing)?;
        Ok(match &self.0 {
            Optic::Adapter { backward, .. } => p.postmap(backward.clone()),
            Optic::AchromaticLens { update, create, .. } => {
                p.lift_pointed::<Option<S>>().postmap(merge_pointed(update, create))
            }
            Optic::Prism { build, .. } => p.lift_sum::<T>().postmap(either(build)),
            Optic::Review { review } => p.postmap(review.clone()),
            o => return Err(unrunnable(ModuleKind::Reviewing, o)),
        })
    }

    fn grating<X: Data, Y: Data>(&self, p: Grating<X, Y, A, B>) -> Result<Grating<X, Y, S, T>> {
        self.signature().check(ModuleKind::Grating)?;
        Ok(match &self.0 {
            Optic::Adapter { forward, backward } => p.dimap(forward.clone(), backward.clone()),
            Optic::Grate { grate } => p.lift_closed::<Fun<S, A>>().dimap(grate_split(), grate.clone()),
            o => return Err(unrunnable(ModuleKind::Grating, o)),
        })
    }

    fn glassing<X: Data, Y: Data>(&self, p: Glassing<X, Y, A, B>) -> Result<Glassing<X, Y, S, T>> {
        self.signature().check(ModuleKind::Glassing)?;
        Ok(match &self.0 {
            Optic::Adapter { forward, backward } => p.dimap(forward.clone(), backward.clone()),
            Optic::Lens { view, update } => p.lift_product::<S>().dimap(split(view), merge(update)),
            Optic::AchromaticLens { view, update, create } => p
                .lift_pointed::<Option<S>>()
                .dimap(split_pointed(view), merge_pointed(update, create)),
            Optic::AlgebraicLens { view, classify } => p
                .lift_list_algebra::<Vec<S>>()
                .dimap(split_list(view), merge(classify)),
            Optic::Grate { grate } => p.lift_closed::<Fun<S, A>>().dimap(grate_split(), grate.clone()),
            Optic::Glass { glass } => {
                let glass = glass.clone();
                p.lift_closed::<Fun<S, A>>()
                    .lift_product::<S>()
                    .dimap(glass_split(), Arc::new(move |(s, g)| glass(g, s)))
            }
            o => return Err(unrunnable(ModuleKind::Glassing, o)),
        })
    }
}

// Only reachable if a kind's capabilities disagree with the arms above.
fn unrunnable<S, T, A, B>(module: ModuleKind, o: &Optic<S, T, A, B>) -> OpticError {
    OpticError::Kind {
        combinator: module.name(),
        kind: o.kind(),
    }
}

/// `outer` after `inner`, as transformers: every module is first
/// transported by `inner`, then by `outer`.
pub struct Composed<P, Q, A, B> {
    pub outer: P,
    pub inner: Q,
    focus: PhantomData<fn() -> (A, B)>,
}

impl<P: Clone, Q: Clone, A, B> Clone for Composed<P, Q, A, B> {
    fn clone(&self) -> Self {
        Composed {
            outer: self.outer.clone(),
            inner: self.inner.clone(),
            focus: PhantomData,
        }
    }
}

pub fn compose_prof<P, Q, A, B>(outer: P, inner: Q) -> Composed<P, Q, A, B> {
    Composed {
        outer,
        inner,
        focus: PhantomData,
    }
}

impl<S, T, A, B, X2, Y2, P, Q> ProfOptic<S, T, X2, Y2> for Composed<P, Q, A, B>
where
    S: Data,
    T: Data,
    A: Data,
    B: Data,
    X2: Data,
    Y2: Data,
    P: ProfOptic<S, T, A, B>,
    Q: ProfOptic<A, B, X2, Y2>,
{
    fn signature(&self) -> Signature {
        self.outer.signature().then(self.inner.signature())
    }

    fn viewing<X: Data>(&self, p: Viewing<X, X2>) -> Result<Viewing<X, S>> {
        self.outer.viewing(self.inner.viewing(p)?)
    }
    fn previewing<X: Data>(&self, p: Previewing<X, X2>) -> Result<Previewing<X, S>> {
        self.outer.previewing(self.inner.previewing(p)?)
    }
    fn folding<X: Data>(&self, p: Folding<X, X2>) -> Result<Folding<X, S>> {
        self.outer.folding(self.inner.folding(p)?)
    }
    fn setting<X: Data, Y: Data>(&self, p: Setting<X, Y, X2, Y2>) -> Result<Setting<X, Y, S, T>> {
        self.outer.setting(self.inner.setting(p)?)
    }
    fn replacing<X: Data, Y: Data>(&self, p: Replacing<X, Y, X2, Y2>) -> Result<Replacing<X, Y, S, T>> {
        self.outer.replacing(self.inner.replacing(p)?)
    }
    fn classifying<Y: Data>(&self, p: Classifying<Y, X2, Y2>) -> Result<Classifying<Y, S, T>> {
        self.outer.classifying(self.inner.classifying(p)?)
    }
    fn aggregating<X: Data, Y: Data>(&self, p: Aggregating<X, Y, X2, Y2>) -> Result<Aggregating<X, Y, S, T>> {
        self.outer.aggregating(self.inner.aggregating(p)?)
    }
    fn updating<Y: Data>(&self, p: Updating<Y, X2, Y2>) -> Result<Updating<Y, S, T>> {
        self.outer.updating(self.inner.updating(p)?)
    }
    fn reviewing<Y: Data>(&self, p: Reviewing<Y, Y2>) -> Result<Reviewing<Y, T>> {
        self.outer.reviewing(self.inner.reviewing(p)?)
    }
    fn grating<X: Data, Y: Data>(&self, p: Grating<X, Y, X2, Y2>) -> Result<Grating<X, Y, S, T>> {
        self.outer.grating(self.inner.grating(p)?)
    }
    fn glassing<X: Data, Y: Data>(&self, p: Glassing<X, Y, X2, Y2>) -> Result<Glassing<X, Y, S, T>> {
        self.outer.glassing(self.inner.glassing(p)?)
    }
}

fn no_focus<X, Y>() -> Fun<X, Y> {
    Arc::new(|_| Err(OpticError::focus("a missed match has no focus to replace")))
}

/// Recovers a concrete optic of `kind` from a transformer.
pub fn prof2ex<S, T, A, B, P>(p: &P, kind: OpticKind) -> Result<Optic<S, T, A, B>>
where
    S: Data,
    T: Data,
    A: Data,
    B: Data,
    P: ProfOptic<S, T, A, B>,
{
    let sig = p.signature();
    if !sig.fits(kind) {
        return Err(OpticError::NormalForm(kind));
    }
    let view = || p.viewing(Viewing::<A, A>::id()).map(|v| v.run);
    let build = || p.reviewing(Reviewing::<B, B>::id()).map(|r| r.run);
    let setting = || p.setting(Setting::<A, B, A, B>::id()).map(|s| s.run);
    let replace = || p.replacing(Replacing::<A, B, A, B>::id()).map(|s| s.run);
    Ok(match kind {
        OpticKind::Adapter => Optic::Adapter {
            forward: view()?,
            backward: build()?,
        },
        OpticKind::Lens => {
            let set = setting()?;
            Optic::Lens {
                view: view()?,
                update: Arc::new(move |s, b: B| set(Arc::new(move |_| Ok(b.clone())), s)),
            }
        }
        OpticKind::AchromaticLens => {
            let set = setting()?;
            Optic::AchromaticLens {
                view: view()?,
                update: Arc::new(move |s, b: B| set(Arc::new(move |_| Ok(b.clone())), s)),
                create: build()?,
            }
        }
        OpticKind::AlgebraicLens => Optic::AlgebraicLens {
            view: view()?,
            classify: p.classifying(Classifying::<B, A, B>::id())?.run,
        },
        OpticKind::MonadicLens => {
            let effect = sig.effect.unwrap_or(EffectKind::Writer);
            Optic::MonadicLens {
                effect,
                view: view()?,
                update: {
                    let run = p.updating(Updating::<B, A, B>::id(effect))?.run;
                    Arc::new(move |s, b| run(b, s))
                },
            }
        }
        OpticKind::Prism => {
            let preview = p.previewing(Previewing::<A, A>::id())?.run;
            let set = setting()?;
            Optic::Prism {
                matcher: Arc::new(move |s: S| match preview(s.clone())? {
                    Some(a) => Ok(Match::Focus(a)),
                    None => Ok(Match::Miss(set(no_focus(), s)?)),
                }),
                build: build()?,
            }
        }
        OpticKind::AffineTraversal => {
            let preview = p.previewing(Previewing::<A, A>::id())?.run;
            let set = setting()?;
            Optic::AffineTraversal {
                access: Arc::new(move |s: S| match preview(s.clone())? {
                    Some(a) => {
                        let set = set.clone();
                        let k: Fun<B, T> = Arc::new(move |b: B| set(Arc::new(move |_| Ok(b.clone())), s.clone()));
                        Ok(Match::Focus((a, k)))
                    }
                    None => Ok(Match::Miss(set(no_focus(), s)?)),
                }),
            }
        }
        OpticKind::Traversal => {
            let fold = p.folding(Folding::<A, A>::id())?.run;
            let rep = replace()?;
            Optic::Traversal {
                extract: Arc::new(move |s: S| {
                    let foci = fold(s.clone())?;
                    let rep = rep.clone();
                    let rebuild: Fun<Vec<B>, T> = Arc::new(move |bs: Vec<B>| {
                        let expected = bs.len();
                        let queue = Arc::new(Mutex::new(VecDeque::from(bs)));
                        let q = queue.clone();
                        let next: Fun<A, B> = Arc::new(move |_| {
                            q.lock()
                                .expect("rebuild queue poisoned")
                                .pop_front()
                                .ok_or(OpticError::Length { expected, found: expected + 1 })
                        });
                        let t = rep(next, s.clone())?;
                        let left = queue.lock().expect("rebuild queue poisoned").len();
                        if left > 0 {
                            return Err(OpticError::Length {
                                expected,
                                found: expected - left,
                            });
                        }
                        Ok(t)
                    });
                    Ok(Extraction::new(foci, rebuild))
                }),
            }
        }
        OpticKind::Kaleidoscope => {
            let run = p.aggregating(Aggregating::<A, B, A, B>::id())?.run;
            Optic::Kaleidoscope {
                aggregate: Arc::new(move |f, ss| run(ss, f)),
            }
        }
        OpticKind::Grate => Optic::Grate {
            grate: p.grating(Grating::<A, B, A, B>::id())?.run,
        },
        OpticKind::Glass => Optic::Glass {
            glass: p.glassing(Glassing::<A, B, A, B>::id())?.run,
        },
        OpticKind::Setter => Optic::Setter { over: replace()? },
        OpticKind::Getter => Optic::Getter { get: view()? },
        OpticKind::Review => Optic::Review { review: build()? },
        OpticKind::Fold => Optic::Fold {
            to_list: p.folding(Folding::<A, A>::id())?.run,
        },
    })
}

/// The effect carried by the result of `mupdate` through a transformer.
pub fn run_updating<S: Data, T: Data, A: Data, B: Data, P: ProfOptic<S, T, A, B>>(
    p: &P,
    effect: EffectKind,
    s: S,
    b: B,
) -> Result<Effect<T>> {
    (p.updating(Updating::<B, A, B>::id(effect))?.run)(b, s)
}
