//! Shared, thread-safe function values used throughout the optic encodings.
//!
//! Every function is fallible: optics over dynamically shaped documents can
//! fail to find their focus at application time.

use std::sync::Arc;

use crate::error::Result;

/// Bound shared by every type that flows through an optic.
pub trait Data: Clone + Send + Sync + 'static {}

impl<T: Clone + Send + Sync + 'static> Data for T {}

/// A shared unary function `X -> Y`.
pub type Fun<X, Y> = Arc<dyn Fn(X) -> Result<Y> + Send + Sync>;

/// A shared binary function `(X, Y) -> Z`.
pub type Fun2<X, Y, Z> = Arc<dyn Fn(X, Y) -> Result<Z> + Send + Sync>;

pub fn fun<X, Y>(f: impl Fn(X) -> Result<Y> + Send + Sync + 'static) -> Fun<X, Y> {
    Arc::new(f)
}

pub fn fun2<X, Y, Z>(f: impl Fn(X, Y) -> Result<Z> + Send + Sync + 'static) -> Fun2<X, Y, Z> {
    Arc::new(f)
}

/// Lifts an infallible function.
pub fn total<X, Y>(f: impl Fn(X) -> Y + Send + Sync + 'static) -> Fun<X, Y> {
    Arc::new(move |x| Ok(f(x)))
}

pub fn identity<X: Data>() -> Fun<X, X> {
    Arc::new(Ok)
}

pub fn constant<X, Y: Data>(y: Y) -> Fun<X, Y> {
    Arc::new(move |_| Ok(y.clone()))
}

/// `g . f`
pub fn then<X: Data, Y: Data, Z: Data>(f: Fun<X, Y>, g: Fun<Y, Z>) -> Fun<X, Z> {
    Arc::new(move |x| g(f(x)?))
}
