//! Concrete normal forms for every optic family.
//!
//! `Optic<S, T, A, B>` decomposes a whole `S` into a focus `A` and rebuilds
//! a `T` from a new focus `B`.

use std::sync::Arc;

use crate::capability::OpticKind;
use crate::effect::{Effect, EffectKind};
use crate::error::{OpticError, Result};
use crate::func::{Data, Fun, Fun2};

/// Outcome of matching: either the whole is rebuilt without a focus, or a
/// focus is found.
#[derive(Debug, Clone, PartialEq)]
pub enum Match<T, A> {
    Miss(T),
    Focus(A),
}

impl<T, A> Match<T, A> {
    pub fn focus(self) -> Option<A> {
        match self {
            Match::Focus(a) => Some(a),
            Match::Miss(_) => None,
        }
    }

    pub fn is_focus(&self) -> bool {
        matches!(self, Match::Focus(_))
    }
}

/// The foci of a traversal together with a rebuild function that only
/// accepts lists of the same length.
pub struct Extraction<A, B, T> {
    foci: Vec<A>,
    rebuild: Fun<Vec<B>, T>,
}

impl<A: Clone, B, T> Clone for Extraction<A, B, T> {
    fn clone(&self) -> Self {
        Extraction {
            foci: self.foci.clone(),
            rebuild: self.rebuild.clone(),
        }
    }
}

impl<A, B: 'static, T: 'static> Extraction<A, B, T> {
    pub fn new(foci: Vec<A>, rebuild: Fun<Vec<B>, T>) -> Self {
        Extraction { foci, rebuild }
    }

    pub fn foci(&self) -> &[A] {
        &self.foci
    }

    pub fn into_foci(self) -> Vec<A> {
        self.foci
    }

    pub fn len(&self) -> usize {
        self.foci.len()
    }

    pub fn is_empty(&self) -> bool {
        self.foci.is_empty()
    }

    pub fn rebuild(&self, values: Vec<B>) -> Result<T> {
        if values.len() != self.foci.len() {
            return Err(OpticError::Length {
                expected: self.foci.len(),
                found: values.len(),
            });
        }
        (self.rebuild)(values)
    }

    /// The rebuild function as a standalone value, still length-checked.
    pub fn rebuilder(&self) -> Fun<Vec<B>, T> {
        let expected = self.foci.len();
        let rebuild = self.rebuild.clone();
        Arc::new(move |values: Vec<B>| {
            if values.len() != expected {
                return Err(OpticError::Length {
                    expected,
                    found: values.len(),
                });
            }
            rebuild(values)
        })
    }
}

/// `([A] -> B) -> [S] -> T`
pub type Aggregator<S, T, A, B> = Fun2<Fun<Vec<A>, B>, Vec<S>, T>;

/// `((S -> A) -> B) -> T`
pub type GrateFn<S, T, A, B> = Fun<Fun<Fun<S, A>, B>, T>;

/// `((S -> A) -> B) -> S -> T`
pub type GlassFn<S, T, A, B> = Fun2<Fun<Fun<S, A>, B>, S, T>;

pub enum Optic<S, T, A, B> {
    Adapter {
        forward: Fun<S, A>,
        backward: Fun<B, T>,
    },
    Lens {
        view: Fun<S, A>,
        update: Fun2<S, B, T>,
    },
    AchromaticLens {
        view: Fun<S, A>,
        update: Fun2<S, B, T>,
        create: Fun<B, T>,
    },
    /// A lens whose update is trained on a list of examples.
    AlgebraicLens {
        view: Fun<S, A>,
        classify: Fun2<Vec<S>, B, T>,
    },
    MonadicLens {
        effect: EffectKind,
        view: Fun<S, A>,
        update: Fun2<S, B, Effect<T>>,
    },
    Prism {
        matcher: Fun<S, Match<T, A>>,
        build: Fun<B, T>,
    },
    AffineTraversal {
        access: Fun<S, Match<T, (A, Fun<B, T>)>>,
    },
    Traversal {
        extract: Fun<S, Extraction<A, B, T>>,
    },
    Kaleidoscope {
        aggregate: Aggregator<S, T, A, B>,
    },
    Grate {
        grate: GrateFn<S, T, A, B>,
    },
    Glass {
        glass: GlassFn<S, T, A, B>,
    },
    Setter {
        over: Fun2<Fun<A, B>, S, T>,
    },
    Getter {
        get: Fun<S, A>,
    },
    Review {
        review: Fun<B, T>,
    },
    Fold {
        to_list: Fun<S, Vec<A>>,
    },
}

impl<S, T, A, B> Clone for Optic<S, T, A, B> {
    fn clone(&self) -> Self {
        use Optic::*;
        match self {
            Adapter { forward, backward } => Adapter {
                forward: forward.clone(),
                backward: backward.clone(),
            },
            Lens { view, update } => Lens {
                view: view.clone(),
                update: update.clone(),
            },
            AchromaticLens {
                view,
                update,
                create,
            } => AchromaticLens {
                view: view.clone(),
                update: update.clone(),
                create: create.clone(),
            },
            AlgebraicLens { view, classify } => AlgebraicLens {
                view: view.clone(),
                classify: classify.clone(),
            },
            MonadicLens {
                effect,
                view,
                update,
            } => MonadicLens {
                effect: *effect,
                view: view.clone(),
                update: update.clone(),
            },
            Prism { matcher, build } => Prism {
                matcher: matcher.clone(),
                build: build.clone(),
            },
            AffineTraversal { access } => AffineTraversal {
                access: access.clone(),
            },
            Traversal { extract } => Traversal {
                extract: extract.clone(),
            },
            Kaleidoscope { aggregate } => Kaleidoscope {
                aggregate: aggregate.clone(),
            },
            Grate { grate } => Grate {
                grate: grate.clone(),
            },
            Glass { glass } => Glass {
                glass: glass.clone(),
            },
            Setter { over } => Setter { over: over.clone() },
            Getter { get } => Getter { get: get.clone() },
            Review { review } => Review {
                review: review.clone(),
            },
            Fold { to_list } => Fold {
                to_list: to_list.clone(),
            },
        }
    }
}

impl<S, T, A, B> std::fmt::Debug for Optic<S, T, A, B> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Optic::{:?}", self.kind())
    }
}

impl<S, T, A, B> Optic<S, T, A, B> {
    pub fn kind(&self) -> OpticKind {
        match self {
            Optic::Adapter { .. } => OpticKind::Adapter,
            Optic::Lens { .. } => OpticKind::Lens,
            Optic::AchromaticLens { .. } => OpticKind::AchromaticLens,
            Optic::AlgebraicLens { .. } => OpticKind::AlgebraicLens,
            Optic::MonadicLens { .. } => OpticKind::MonadicLens,
            Optic::Prism { .. } => OpticKind::Prism,
            Optic::AffineTraversal { .. } => OpticKind::AffineTraversal,
            Optic::Traversal { .. } => OpticKind::Traversal,
            Optic::Kaleidoscope { .. } => OpticKind::Kaleidoscope,
            Optic::Grate { .. } => OpticKind::Grate,
            Optic::Glass { .. } => OpticKind::Glass,
            Optic::Setter { .. } => OpticKind::Setter,
            Optic::Getter { .. } => OpticKind::Getter,
            Optic::Review { .. } => OpticKind::Review,
            Optic::Fold { .. } => OpticKind::Fold,
        }
    }
}

impl<S: Data, T: Data, A: Data, B: Data> Optic<S, T, A, B> {
    pub fn adapter(
        forward: impl Fn(S) -> Result<A> + Send + Sync + 'static,
        backward: impl Fn(B) -> Result<T> + Send + Sync + 'static,
    ) -> Self {
        Optic::Adapter {
            forward: Arc::new(forward),
            backward: Arc::new(backward),
        }
    }

    pub fn lens(
        view: impl Fn(S) -> Result<A> + Send + Sync + 'static,
        update: impl Fn(S, B) -> Result<T> + Send + Sync + 'static,
    ) -> Self {
        Optic::Lens {
            view: Arc::new(view),
            update: Arc::new(update),
        }
    }

    pub fn achromatic_lens(
        view: impl Fn(S) -> Result<A> + Send + Sync + 'static,
        update: impl Fn(S, B) -> Result<T> + Send + Sync + 'static,
        create: impl Fn(B) -> Result<T> + Send + Sync + 'static,
    ) -> Self {
        Optic::AchromaticLens {
            view: Arc::new(view),
            update: Arc::new(update),
            create: Arc::new(create),
        }
    }

    pub fn algebraic_lens(
        view: impl Fn(S) -> Result<A> + Send + Sync + 'static,
        classify: impl Fn(Vec<S>, B) -> Result<T> + Send + Sync + 'static,
    ) -> Self {
        Optic::AlgebraicLens {
            view: Arc::new(view),
            classify: Arc::new(classify),
        }
    }

    pub fn monadic_lens(
        effect: EffectKind,
        view: impl Fn(S) -> Result<A> + Send + Sync + 'static,
        update: impl Fn(S, B) -> Result<Effect<T>> + Send + Sync + 'static,
    ) -> Self {
        Optic::MonadicLens {
            effect,
            view: Arc::new(view),
            update: Arc::new(update),
        }
    }

    pub fn prism(
        matcher: impl Fn(S) -> Result<Match<T, A>> + Send + Sync + 'static,
        build: impl Fn(B) -> Result<T> + Send + Sync + 'static,
    ) -> Self {
        Optic::Prism {
            matcher: Arc::new(matcher),
            build: Arc::new(build),
        }
    }

    pub fn affine(access: impl Fn(S) -> Result<Match<T, (A, Fun<B, T>)>> + Send + Sync + 'static) -> Self {
        Optic::AffineTraversal {
            access: Arc::new(access),
        }
    }

    pub fn traversal(extract: impl Fn(S) -> Result<Extraction<A, B, T>> + Send + Sync + 'static) -> Self {
        Optic::Traversal {
            extract: Arc::new(extract),
        }
    }

    pub fn kaleidoscope(
        aggregate: impl Fn(Fun<Vec<A>, B>, Vec<S>) -> Result<T> + Send + Sync + 'static,
    ) -> Self {
        Optic::Kaleidoscope {
            aggregate: Arc::new(aggregate),
        }
    }

    pub fn grate(grate: impl Fn(Fun<Fun<S, A>, B>) -> Result<T> + Send + Sync + 'static) -> Self {
        Optic::Grate {
            grate: Arc::new(grate),
        }
    }

    pub fn glass(glass: impl Fn(Fun<Fun<S, A>, B>, S) -> Result<T> + Send + Sync + 'static) -> Self {
        Optic::Glass {
            glass: Arc::new(glass),
        }
    }

    pub fn setter(over: impl Fn(Fun<A, B>, S) -> Result<T> + Send + Sync + 'static) -> Self {
        Optic::Setter {
            over: Arc::new(over),
        }
    }

    pub fn getter(get: impl Fn(S) -> Result<A> + Send + Sync + 'static) -> Self {
        Optic::Getter { get: Arc::new(get) }
    }

    pub fn review_only(review: impl Fn(B) -> Result<T> + Send + Sync + 'static) -> Self {
        Optic::Review {
            review: Arc::new(review),
        }
    }

    pub fn fold(to_list: impl Fn(S) -> Result<Vec<A>> + Send + Sync + 'static) -> Self {
        Optic::Fold {
            to_list: Arc::new(to_list),
        }
    }

    /// Treats a lens (or adapter) as a monadic lens whose update is `pure`.
    pub fn lift_pure(self, effect: EffectKind) -> Result<Self> {
        match self {
            Optic::Lens { view, update } => Ok(Optic::MonadicLens {
                effect,
                view,
                update: Arc::new(move |s, b| Ok(Effect::pure(effect, update(s, b)?))),
            }),
            Optic::Adapter { forward, backward } => Ok(Optic::MonadicLens {
                effect,
                view: forward,
                update: Arc::new(move |_, b| Ok(Effect::pure(effect, backward(b)?))),
            }),
            other => Err(OpticError::Upcast {
                from: other.kind(),
                to: OpticKind::MonadicLens,
            }),
        }
    }
}

/// Identity optics.
impl<S: Data> Optic<S, S, S, S> {
    pub fn identity_adapter() -> Self {
        Optic::adapter(Ok, Ok)
    }

    pub fn identity_lens() -> Self {
        Optic::lens(Ok, |_, b| Ok(b))
    }

    pub fn identity_prism() -> Self {
        Optic::prism(|s| Ok(Match::Focus(s)), Ok)
    }

    pub fn identity_grate() -> Self {
        Optic::grate(|f: Fun<Fun<S, S>, S>| f(Arc::new(Ok) as Fun<S, S>))
    }
}

impl<A: Data, B: Data> Optic<Vec<A>, Vec<B>, A, B> {
    /// Traverses every element of a list, in order.
    pub fn each() -> Self {
        Optic::traversal(|xs: Vec<A>| Ok(Extraction::new(xs, Arc::new(Ok))))
    }
}

impl<A: Data, B: Data> Optic<(A, A), (B, B), A, B> {
    /// The grate distributing over both components of a pair.
    pub fn pair_grate() -> Self {
        Optic::grate(|f: Fun<Fun<(A, A), A>, B>| {
            let first: Fun<(A, A), A> = Arc::new(|p: (A, A)| Ok(p.0));
            let second: Fun<(A, A), A> = Arc::new(|p: (A, A)| Ok(p.1));
            Ok((f(first)?, f(second)?))
        })
    }
}
