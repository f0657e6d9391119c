//! Combinator modules: profunctor-like carriers, each able to run one
//! combinator, together with the lifts (Tambara structure maps) through the
//! monoidal actions they support.
//!
//! Each carrier is indexed by the outer focus `X`/`Y` it was created for
//! and the current pair `S`/`T` it has been transported to.

use std::sync::Arc;

use crate::capability::{Capability, CapabilitySet, Direction};
use crate::effect::{Effect, EffectKind};
use crate::error::{OpticError, Result};
use crate::func::{Data, Fun, Fun2};
use crate::funlist::FunList;
use crate::optic::Match;

/// Residuals carrying an algebra for the list monad (monoids).
pub trait ListAlgebra: Data {
    fn algebra(items: Vec<Self>) -> Self;
}

impl<S: Data> ListAlgebra for Vec<S> {
    fn algebra(items: Vec<Self>) -> Self {
        items.into_iter().flatten().collect()
    }
}

impl ListAlgebra for () {
    fn algebra(_: Vec<Self>) -> Self {}
}

impl<M: ListAlgebra, N: ListAlgebra> ListAlgebra for (M, N) {
    fn algebra(items: Vec<Self>) -> Self {
        let (ms, ns): (Vec<M>, Vec<N>) = items.into_iter().unzip();
        (M::algebra(ms), N::algebra(ns))
    }
}

/// Residuals carrying an algebra for the maybe monad (pointed objects).
pub trait PointedAlgebra: Data {
    fn point() -> Self;
}

impl<S: Data> PointedAlgebra for Option<S> {
    fn point() -> Self {
        None
    }
}

impl PointedAlgebra for () {
    fn point() -> Self {}
}

impl<M: PointedAlgebra, N: PointedAlgebra> PointedAlgebra for (M, N) {
    fn point() -> Self {
        (M::point(), N::point())
    }
}

/// The available combinator modules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModuleKind {
    Viewing,
    Previewing,
    Folding,
    Setting,
    Replacing,
    Classifying,
    Aggregating,
    Updating,
    Reviewing,
    Grating,
    Glassing,
}

impl ModuleKind {
    pub const ALL: [ModuleKind; 11] = [
        ModuleKind::Viewing,
        ModuleKind::Previewing,
        ModuleKind::Folding,
        ModuleKind::Setting,
        ModuleKind::Replacing,
        ModuleKind::Classifying,
        ModuleKind::Aggregating,
        ModuleKind::Updating,
        ModuleKind::Reviewing,
        ModuleKind::Grating,
        ModuleKind::Glassing,
    ];

    /// Capabilities this module can lift through. Always closed under
    /// implication.
    pub fn supports(self) -> CapabilitySet {
        use Capability::*;
        match self {
            ModuleKind::Viewing | ModuleKind::Updating => CapabilitySet::of(&[Product, Pointed, ListAlgebra]),
            ModuleKind::Previewing | ModuleKind::Setting => {
                CapabilitySet::of(&[Product, Sum, Pointed, ListAlgebra])
            }
            ModuleKind::Folding => CapabilitySet::of(&[Product, Sum, Pointed, ListAlgebra, FunListTraversable]),
            ModuleKind::Replacing => CapabilitySet::all(),
            ModuleKind::Classifying => CapabilitySet::of(&[ListAlgebra]),
            ModuleKind::Aggregating => CapabilitySet::of(&[ListAlgebra, FunListApplicative]),
            ModuleKind::Reviewing => CapabilitySet::of(&[Sum, Pointed]),
            ModuleKind::Grating => CapabilitySet::of(&[Closed]),
            ModuleKind::Glassing => CapabilitySet::of(&[Product, Pointed, ListAlgebra, Closed]),
        }
    }

    pub fn allows(self, direction: Direction) -> bool {
        match direction {
            Direction::Both => true,
            Direction::ReadOnly => matches!(
                self,
                ModuleKind::Viewing | ModuleKind::Previewing | ModuleKind::Folding
            ),
            Direction::BuildOnly => self == ModuleKind::Reviewing,
        }
    }

    /// Modules that can run optics whose rebuild side is effectful.
    pub fn allows_effects(self) -> bool {
        matches!(self, ModuleKind::Viewing | ModuleKind::Updating)
    }

    pub fn name(self) -> &'static str {
        match self {
            ModuleKind::Viewing => "Viewing",
            ModuleKind::Previewing => "Previewing",
            ModuleKind::Folding => "Folding",
            ModuleKind::Setting => "Setting",
            ModuleKind::Replacing => "Replacing",
            ModuleKind::Classifying => "Classifying",
            ModuleKind::Aggregating => "Aggregating",
            ModuleKind::Updating => "Updating",
            ModuleKind::Reviewing => "Reviewing",
            ModuleKind::Grating => "Grating",
            ModuleKind::Glassing => "Glassing",
        }
    }

    /// The error for a lift this module lacks.
    pub fn missing(self, capability: Capability) -> OpticError {
        OpticError::Capability {
            carrier: self.name(),
            capability,
        }
    }
}

fn fst_all<M, S>(pairs: Vec<(M, S)>) -> (Vec<M>, Vec<S>) {
    pairs.into_iter().unzip()
}

// Viewing

/// Carrier of `view`: `S -> X`.
pub struct Viewing<X, S> {
    pub run: Fun<S, X>,
}

impl<X, S> Clone for Viewing<X, S> {
    fn clone(&self) -> Self {
        Viewing { run: self.run.clone() }
    }
}

impl<X: Data> Viewing<X, X> {
    pub fn id() -> Self {
        Viewing { run: Arc::new(Ok) }
    }
}

impl<X: Data, S: Data> Viewing<X, S> {
    pub fn premap<S2: Data>(self, l: Fun<S2, S>) -> Viewing<X, S2> {
        let run = self.run;
        Viewing {
            run: Arc::new(move |s| run(l(s)?)),
        }
    }

    /// `Viewing (f . snd)`
    pub fn lift_product<M: Data>(self) -> Viewing<X, (M, S)> {
        let run = self.run;
        Viewing {
            run: Arc::new(move |(_, s)| run(s)),
        }
    }

    pub fn lift_pointed<M: PointedAlgebra>(self) -> Viewing<X, (M, S)> {
        self.lift_product()
    }

    pub fn lift_list_algebra<M: ListAlgebra>(self) -> Viewing<X, (M, S)> {
        self.lift_product()
    }
}

// Previewing

/// Carrier of `preview`: `S -> Option<X>`.
pub struct Previewing<X, S> {
    pub run: Fun<S, Option<X>>,
}

impl<X, S> Clone for Previewing<X, S> {
    fn clone(&self) -> Self {
        Previewing { run: self.run.clone() }
    }
}

impl<X: Data> Previewing<X, X> {
    pub fn id() -> Self {
        Previewing {
            run: Arc::new(|x| Ok(Some(x))),
        }
    }
}

impl<X: Data, S: Data> Previewing<X, S> {
    pub fn premap<S2: Data>(self, l: Fun<S2, S>) -> Previewing<X, S2> {
        let run = self.run;
        Previewing {
            run: Arc::new(move |s| run(l(s)?)),
        }
    }

    pub fn lift_product<M: Data>(self) -> Previewing<X, (M, S)> {
        let run = self.run;
        Previewing {
            run: Arc::new(move |(_, s)| run(s)),
        }
    }

    /// `either (\_ -> Nothing) f`
    pub fn lift_sum<M: Data>(self) -> Previewing<X, Match<M, S>> {
        let run = self.run;
        Previewing {
            run: Arc::new(move |m| match m {
                Match::Miss(_) => Ok(None),
                Match::Focus(s) => run(s),
            }),
        }
    }

    pub fn lift_pointed<M: PointedAlgebra>(self) -> Previewing<X, (M, S)> {
        self.lift_product()
    }

    pub fn lift_list_algebra<M: ListAlgebra>(self) -> Previewing<X, (M, S)> {
        self.lift_product()
    }
}

// Folding

/// Carrier of `toListOf`: `S -> [X]`.
pub struct Folding<X, S> {
    pub run: Fun<S, Vec<X>>,
}

impl<X, S> Clone for Folding<X, S> {
    fn clone(&self) -> Self {
        Folding { run: self.run.clone() }
    }
}

impl<X: Data> Folding<X, X> {
    pub fn id() -> Self {
        Folding {
            run: Arc::new(|x| Ok(vec![x])),
        }
    }
}

impl<X: Data, S: Data> Folding<X, S> {
    pub fn premap<S2: Data>(self, l: Fun<S2, S>) -> Folding<X, S2> {
        let run = self.run;
        Folding {
            run: Arc::new(move |s| run(l(s)?)),
        }
    }

    pub fn lift_product<M: Data>(self) -> Folding<X, (M, S)> {
        let run = self.run;
        Folding {
            run: Arc::new(move |(_, s)| run(s)),
        }
    }

    pub fn lift_sum<M: Data>(self) -> Folding<X, Match<M, S>> {
        let run = self.run;
        Folding {
            run: Arc::new(move |m| match m {
                Match::Miss(_) => Ok(Vec::new()),
                Match::Focus(s) => run(s),
            }),
        }
    }

    pub fn lift_pointed<M: PointedAlgebra>(self) -> Folding<X, (M, S)> {
        self.lift_product()
    }

    pub fn lift_list_algebra<M: ListAlgebra>(self) -> Folding<X, (M, S)> {
        self.lift_product()
    }

    /// Folds every source of a `FunList`, in order.
    pub fn lift_traversable<R1: Data, R2: Data>(self) -> Folding<X, FunList<S, R1, R2>> {
        let run = self.run;
        Folding {
            run: Arc::new(move |l: FunList<S, R1, R2>| {
                let mut out = Vec::new();
                for s in l.sources() {
                    out.extend(run(s)?);
                }
                Ok(out)
            }),
        }
    }
}

// Setting and Replacing share a shape: `(X -> Y) -> S -> T`.

macro_rules! mapping_carrier {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        pub struct $name<X, Y, S, T> {
            pub run: Fun2<Fun<X, Y>, S, T>,
        }

        impl<X, Y, S, T> Clone for $name<X, Y, S, T> {
            fn clone(&self) -> Self {
                $name { run: self.run.clone() }
            }
        }

        impl<X: Data, Y: Data> $name<X, Y, X, Y> {
            pub fn id() -> Self {
                $name {
                    run: Arc::new(|f: Fun<X, Y>, x| f(x)),
                }
            }
        }

        impl<X: Data, Y: Data, S: Data, T: Data> $name<X, Y, S, T> {
            pub fn dimap<S2: Data, T2: Data>(self, l: Fun<S2, S>, r: Fun<T, T2>) -> $name<X, Y, S2, T2> {
                let run = self.run;
                $name {
                    run: Arc::new(move |f, s| r(run(f, l(s)?)?)),
                }
            }

            /// `(w , f u x)`
            pub fn lift_product<M: Data>(self) -> $name<X, Y, (M, S), (M, T)> {
                let run = self.run;
                $name {
                    run: Arc::new(move |f, (m, s)| Ok((m, run(f, s)?))),
                }
            }

            /// `either Left (Right . f u)`
            pub fn lift_sum<M: Data>(self) -> $name<X, Y, Match<M, S>, Match<M, T>> {
                let run = self.run;
                $name {
                    run: Arc::new(move |f, m| match m {
                        Match::Miss(w) => Ok(Match::Miss(w)),
                        Match::Focus(s) => Ok(Match::Focus(run(f, s)?)),
                    }),
                }
            }

            pub fn lift_pointed<M: PointedAlgebra>(self) -> $name<X, Y, (M, S), (M, T)> {
                self.lift_product()
            }

            pub fn lift_list_algebra<M: ListAlgebra>(self) -> $name<X, Y, (M, S), (M, T)> {
                self.lift_product()
            }
        }
    };
}

mapping_carrier!(Setting, "Carrier of `set`.");
mapping_carrier!(Replacing, "Carrier of `over`; lifts through every action.");

impl<X: Data, Y: Data, S: Data, T: Data> Replacing<X, Y, S, T> {
    /// Maps over the sources of a `FunList` (the traversable action).
    pub fn lift_traversable<R1: Data, R2: Data>(self) -> Replacing<X, Y, FunList<S, R1, R2>, FunList<T, R1, R2>> {
        let run = self.run;
        Replacing {
            run: Arc::new(move |f, l: FunList<S, R1, R2>| {
                let step: Fun<S, T> = {
                    let run = run.clone();
                    Arc::new(move |s| run(f.clone(), s))
                };
                l.map_sources(&step)
            }),
        }
    }

    /// Maps over the payload of a `FunList` (the applicative action).
    pub fn lift_applicative<R0: Data, R1: Data>(self) -> Replacing<X, Y, FunList<R0, R1, S>, FunList<R0, R1, T>> {
        let run = self.run;
        Replacing {
            run: Arc::new(move |f, l: FunList<R0, R1, S>| {
                let run = run.clone();
                Ok(l.map(Arc::new(move |s| run(f.clone(), s))))
            }),
        }
    }

    /// Post-composition with an exponential.
    pub fn lift_closed<M: Data>(self) -> Replacing<X, Y, Fun<M, S>, Fun<M, T>> {
        let run = self.run;
        Replacing {
            run: Arc::new(move |f, g: Fun<M, S>| {
                let run = run.clone();
                let out: Fun<M, T> = Arc::new(move |m| run(f.clone(), g(m)?));
                Ok(out)
            }),
        }
    }

    /// Runs through an arbitrary `over` function; this is how setters,
    /// which only offer the action of evaluation, meet the module.
    pub fn through<S2: Data, T2: Data>(self, over: Fun2<Fun<S, T>, S2, T2>) -> Replacing<X, Y, S2, T2> {
        let run = self.run;
        Replacing {
            run: Arc::new(move |f, s2| {
                let run = run.clone();
                let inner: Fun<S, T> = Arc::new(move |s| run(f.clone(), s));
                over(inner, s2)
            }),
        }
    }
}

// Classifying

/// Carrier of `classify`: `[S] -> Y -> T`.
pub struct Classifying<Y, S, T> {
    pub run: Fun2<Vec<S>, Y, T>,
}

impl<Y, S, T> Clone for Classifying<Y, S, T> {
    fn clone(&self) -> Self {
        Classifying { run: self.run.clone() }
    }
}

impl<Y: Data, X: Data> Classifying<Y, X, Y> {
    /// `Classifying (\a b -> b)`
    pub fn id() -> Self {
        Classifying {
            run: Arc::new(|_, y| Ok(y)),
        }
    }
}

impl<Y: Data, S: Data, T: Data> Classifying<Y, S, T> {
    pub fn dimap<S2: Data, T2: Data>(self, l: Fun<S2, S>, r: Fun<T, T2>) -> Classifying<Y, S2, T2> {
        let run = self.run;
        Classifying {
            run: Arc::new(move |ss: Vec<S2>, y| {
                let ss = ss.into_iter().map(|s| l(s)).collect::<Result<Vec<_>>>()?;
                r(run(ss, y)?)
            }),
        }
    }

    /// `(algebra (fmap fst w) , f (fmap snd w) b)`
    pub fn lift_list_algebra<M: ListAlgebra>(self) -> Classifying<Y, (M, S), (M, T)> {
        let run = self.run;
        Classifying {
            run: Arc::new(move |ws: Vec<(M, S)>, y| {
                let (ms, ss) = fst_all(ws);
                Ok((M::algebra(ms), run(ss, y)?))
            }),
        }
    }
}

// Aggregating

/// Carrier of `aggregate`: `[S] -> ([X] -> Y) -> T`.
pub struct Aggregating<X, Y, S, T> {
    pub run: Fun2<Vec<S>, Fun<Vec<X>, Y>, T>,
}

impl<X, Y, S, T> Clone for Aggregating<X, Y, S, T> {
    fn clone(&self) -> Self {
        Aggregating { run: self.run.clone() }
    }
}

impl<X: Data, Y: Data> Aggregating<X, Y, X, Y> {
    /// `Aggregate (flip ($))`
    pub fn id() -> Self {
        Aggregating {
            run: Arc::new(|xs, f: Fun<Vec<X>, Y>| f(xs)),
        }
    }
}

impl<X: Data, Y: Data, S: Data, T: Data> Aggregating<X, Y, S, T> {
    pub fn dimap<S2: Data, T2: Data>(self, l: Fun<S2, S>, r: Fun<T, T2>) -> Aggregating<X, Y, S2, T2> {
        let run = self.run;
        Aggregating {
            run: Arc::new(move |ss: Vec<S2>, f| {
                let ss = ss.into_iter().map(|s| l(s)).collect::<Result<Vec<_>>>()?;
                r(run(ss, f)?)
            }),
        }
    }

    pub fn lift_list_algebra<M: ListAlgebra>(self) -> Aggregating<X, Y, (M, S), (M, T)> {
        let run = self.run;
        Aggregating {
            run: Arc::new(move |ws: Vec<(M, S)>, f| {
                let (ms, ss) = fst_all(ws);
                Ok((M::algebra(ms), run(ss, f)?))
            }),
        }
    }

    /// `pure (flip h f) <*> sequenceA u`, with `FunList` as the applicative.
    pub fn lift_applicative<R0: Data, R1: Data>(
        self,
    ) -> Aggregating<X, Y, FunList<R0, R1, S>, FunList<R0, R1, T>> {
        let run = self.run;
        Aggregating {
            run: Arc::new(move |u: Vec<FunList<R0, R1, S>>, f| {
                let run = run.clone();
                Ok(FunList::sequence(u).map(Arc::new(move |ss| run(ss, f.clone()))))
            }),
        }
    }
}

// Updating

/// Carrier of `mupdate`: `Y -> S -> Effect<T>`.
pub struct Updating<Y, S, T> {
    pub run: Fun2<Y, S, Effect<T>>,
}

impl<Y, S, T> Clone for Updating<Y, S, T> {
    fn clone(&self) -> Self {
        Updating { run: self.run.clone() }
    }
}

impl<Y: Data, X: Data> Updating<Y, X, Y> {
    /// `Update (\b a -> return b)`
    pub fn id(effect: EffectKind) -> Self {
        Updating {
            run: Arc::new(move |y, _| Ok(Effect::pure(effect, y))),
        }
    }
}

impl<Y: Data, S: Data, T: Data> Updating<Y, S, T> {
    pub fn dimap<S2: Data, T2: Data>(self, l: Fun<S2, S>, r: Fun<T, T2>) -> Updating<Y, S2, T2> {
        let run = self.run;
        Updating {
            run: Arc::new(move |y, s| run(y, l(s)?)?.try_map(|t| r(t))),
        }
    }

    /// `dimap` with a Kleisli arrow on the rebuild side.
    pub fn dimap_kleisli<S2: Data, T2: Data>(self, l: Fun<S2, S>, r: Fun<T, Effect<T2>>) -> Updating<Y, S2, T2> {
        let run = self.run;
        Updating {
            run: Arc::new(move |y, s| run(y, l(s)?)?.bind(|t| r(t))),
        }
    }

    /// `fmap ((,) w) $ u b x`
    pub fn lift_product<M: Data>(self) -> Updating<Y, (M, S), (M, T)> {
        let run = self.run;
        Updating {
            run: Arc::new(move |y, (m, s)| Ok(Effect::strength(m, run(y, s)?))),
        }
    }

    pub fn lift_pointed<M: PointedAlgebra>(self) -> Updating<Y, (M, S), (M, T)> {
        self.lift_product()
    }

    pub fn lift_list_algebra<M: ListAlgebra>(self) -> Updating<Y, (M, S), (M, T)> {
        self.lift_product()
    }
}

// Reviewing

/// Carrier of `review`: `Y -> T`.
pub struct Reviewing<Y, T> {
    pub run: Fun<Y, T>,
}

impl<Y, T> Clone for Reviewing<Y, T> {
    fn clone(&self) -> Self {
        Reviewing { run: self.run.clone() }
    }
}

impl<Y: Data> Reviewing<Y, Y> {
    pub fn id() -> Self {
        Reviewing { run: Arc::new(Ok) }
    }
}

impl<Y: Data, T: Data> Reviewing<Y, T> {
    pub fn postmap<T2: Data>(self, r: Fun<T, T2>) -> Reviewing<Y, T2> {
        let run = self.run;
        Reviewing {
            run: Arc::new(move |y| r(run(y)?)),
        }
    }

    pub fn lift_sum<M: Data>(self) -> Reviewing<Y, Match<M, T>> {
        let run = self.run;
        Reviewing {
            run: Arc::new(move |y| Ok(Match::Focus(run(y)?))),
        }
    }

    /// Pairs the result with the residual's point.
    pub fn lift_pointed<M: PointedAlgebra>(self) -> Reviewing<Y, (M, T)> {
        let run = self.run;
        Reviewing {
            run: Arc::new(move |y| Ok((M::point(), run(y)?))),
        }
    }
}

// Grating

/// Carrier of grate application: `((S -> X) -> Y) -> T`.
pub struct Grating<X, Y, S, T> {
    pub run: Fun<Fun<Fun<S, X>, Y>, T>,
}

impl<X, Y, S, T> Clone for Grating<X, Y, S, T> {
    fn clone(&self) -> Self {
        Grating { run: self.run.clone() }
    }
}

impl<X: Data, Y: Data> Grating<X, Y, X, Y> {
    pub fn id() -> Self {
        Grating {
            run: Arc::new(|f: Fun<Fun<X, X>, Y>| f(Arc::new(Ok))),
        }
    }
}

impl<X: Data, Y: Data, S: Data, T: Data> Grating<X, Y, S, T> {
    pub fn dimap<S2: Data, T2: Data>(self, l: Fun<S2, S>, r: Fun<T, T2>) -> Grating<X, Y, S2, T2> {
        let run = self.run;
        Grating {
            run: Arc::new(move |f: Fun<Fun<S2, X>, Y>| {
                let l = l.clone();
                let g: Fun<Fun<S, X>, Y> = Arc::new(move |k: Fun<S, X>| {
                    let l = l.clone();
                    f(Arc::new(move |s2| k(l(s2)?)))
                });
                r(run(g)?)
            }),
        }
    }

    pub fn lift_closed<M: Data>(self) -> Grating<X, Y, Fun<M, S>, Fun<M, T>> {
        let run = self.run;
        Grating {
            run: Arc::new(move |f: Fun<Fun<Fun<M, S>, X>, Y>| {
                let run = run.clone();
                let out: Fun<M, T> = Arc::new(move |m: M| {
                    let f = f.clone();
                    let g: Fun<Fun<S, X>, Y> = Arc::new(move |k: Fun<S, X>| {
                        let m = m.clone();
                        f(Arc::new(move |h: Fun<M, S>| k(h(m.clone())?)))
                    });
                    run(g)
                });
                Ok(out)
            }),
        }
    }
}

// Glassing

/// Carrier of glass application: `((S -> X) -> Y) -> S -> T`.
pub struct Glassing<X, Y, S, T> {
    pub run: Fun2<Fun<Fun<S, X>, Y>, S, T>,
}

impl<X, Y, S, T> Clone for Glassing<X, Y, S, T> {
    fn clone(&self) -> Self {
        Glassing { run: self.run.clone() }
    }
}

impl<X: Data, Y: Data> Glassing<X, Y, X, Y> {
    pub fn id() -> Self {
        Glassing {
            run: Arc::new(|f: Fun<Fun<X, X>, Y>, _| f(Arc::new(Ok))),
        }
    }
}

impl<X: Data, Y: Data, S: Data, T: Data> Glassing<X, Y, S, T> {
    pub fn dimap<S2: Data, T2: Data>(self, l: Fun<S2, S>, r: Fun<T, T2>) -> Glassing<X, Y, S2, T2> {
        let run = self.run;
        Glassing {
            run: Arc::new(move |f: Fun<Fun<S2, X>, Y>, s2| {
                let l2 = l.clone();
                let g: Fun<Fun<S, X>, Y> = Arc::new(move |k: Fun<S, X>| {
                    let l = l2.clone();
                    f(Arc::new(move |s2| k(l(s2)?)))
                });
                r(run(g, l(s2)?)?)
            }),
        }
    }

    pub fn lift_product<M: Data>(self) -> Glassing<X, Y, (M, S), (M, T)> {
        let run = self.run;
        Glassing {
            run: Arc::new(move |f: Fun<Fun<(M, S), X>, Y>, (m, s)| {
                let g: Fun<Fun<S, X>, Y> =
                    Arc::new(move |k: Fun<S, X>| f(Arc::new(move |(_, s2): (M, S)| k(s2))));
                Ok((m, run(g, s)?))
            }),
        }
    }

    pub fn lift_pointed<M: PointedAlgebra>(self) -> Glassing<X, Y, (M, S), (M, T)> {
        self.lift_product()
    }

    pub fn lift_list_algebra<M: ListAlgebra>(self) -> Glassing<X, Y, (M, S), (M, T)> {
        self.lift_product()
    }

    pub fn lift_closed<M: Data>(self) -> Glassing<X, Y, Fun<M, S>, Fun<M, T>> {
        let run = self.run;
        Glassing {
            run: Arc::new(move |f: Fun<Fun<Fun<M, S>, X>, Y>, h0: Fun<M, S>| {
                let run = run.clone();
                let out: Fun<M, T> = Arc::new(move |m: M| {
                    let f = f.clone();
                    let at = m.clone();
                    let g: Fun<Fun<S, X>, Y> = Arc::new(move |k: Fun<S, X>| {
                        let m = at.clone();
                        f(Arc::new(move |h: Fun<M, S>| k(h(m.clone())?)))
                    });
                    run(g, h0(m)?)
                });
                Ok(out)
            }),
        }
    }
}
