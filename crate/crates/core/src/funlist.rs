//! The free applicative over a store shape: `Done b | More s rest`.
//!
//! A `FunList` stores a sequence of sources and a rebuilding payload.
//! Payload types would have to grow by one argument at each `More` node,
//! which Rust cannot express without polymorphic recursion, so the payload
//! at `Done` consumes the foci gathered by every `More` above it as a
//! vector, in source order.

use std::sync::Arc;

use crate::error::{OpticError, Result};
use crate::func::{Data, Fun};

pub enum FunList<S, A, B> {
    Done(Fun<Vec<A>, B>),
    More(S, Box<FunList<S, A, B>>),
}

impl<S: Clone, A, B> Clone for FunList<S, A, B> {
    fn clone(&self) -> Self {
        match self {
            FunList::Done(p) => FunList::Done(p.clone()),
            FunList::More(s, rest) => FunList::More(s.clone(), rest.clone()),
        }
    }
}

impl<S: Data, A: Data, B: Data> FunList<S, A, B> {
    pub fn pure(b: B) -> Self {
        FunList::Done(Arc::new(move |_| Ok(b.clone())))
    }

    pub fn depth(&self) -> usize {
        let mut n = 0;
        let mut node = self;
        while let FunList::More(_, rest) = node {
            n += 1;
            node = rest;
        }
        n
    }

    pub fn sources(&self) -> Vec<S> {
        let mut out = Vec::new();
        let mut node = self;
        while let FunList::More(s, rest) = node {
            out.push(s.clone());
            node = rest;
        }
        out
    }

    pub fn map<C: Data>(self, f: Fun<B, C>) -> FunList<S, A, C> {
        match self {
            FunList::Done(p) => FunList::Done(Arc::new(move |v| f(p(v)?))),
            FunList::More(s, rest) => FunList::More(s, Box::new(rest.map(f))),
        }
    }

    /// Functor action on the sources.
    pub fn map_sources<S2: Data>(self, f: &Fun<S, S2>) -> Result<FunList<S2, A, B>> {
        Ok(match self {
            FunList::Done(p) => FunList::Done(p),
            FunList::More(s, rest) => FunList::More(f(s)?, Box::new(rest.map_sources(f)?)),
        })
    }

    /// Splits into the stored sources and the rebuilding function. The
    /// rebuilding function rejects inputs of the wrong length.
    pub fn no_fun(self) -> (Vec<S>, Fun<Vec<A>, B>) {
        let mut sources = Vec::new();
        let mut node = self;
        loop {
            match node {
                FunList::More(s, rest) => {
                    sources.push(s);
                    node = *rest;
                }
                FunList::Done(p) => {
                    let expected = sources.len();
                    let rebuild: Fun<Vec<A>, B> = Arc::new(move |v: Vec<A>| {
                        if v.len() != expected {
                            return Err(OpticError::Length {
                                expected,
                                found: v.len(),
                            });
                        }
                        p(v)
                    });
                    return (sources, rebuild);
                }
            }
        }
    }

    /// Rebuilds a `FunList` from its sources and payload.
    pub fn from_parts(sources: Vec<S>, payload: Fun<Vec<A>, B>) -> Self {
        sources
            .into_iter()
            .rev()
            .fold(FunList::Done(payload), |acc, s| FunList::More(s, Box::new(acc)))
    }

    /// Evaluates by feeding `foci` to the payload.
    pub fn run_with(self, foci: Vec<A>) -> Result<B> {
        let (_, rebuild) = self.no_fun();
        rebuild(foci)
    }

    /// Applicative sequencing of a list.
    pub fn sequence(items: Vec<FunList<S, A, B>>) -> FunList<S, A, Vec<B>> {
        items.into_iter().fold(FunList::pure(Vec::new()), |acc, item| {
            let push: Fun<Vec<B>, Fun<B, Vec<B>>> = Arc::new(|xs: Vec<B>| {
                let f: Fun<B, Vec<B>> = Arc::new(move |x| {
                    let mut ys = xs.clone();
                    ys.push(x);
                    Ok(ys)
                });
                Ok(f)
            });
            acc.map(push).ap(item)
        })
    }
}

impl<S: Data, A: Data> FunList<S, A, A> {
    /// `More s (Done id)`.
    pub fn singleton(s: S) -> Self {
        FunList::More(
            s,
            Box::new(FunList::Done(Arc::new(|mut v: Vec<A>| {
                v.pop()
                    .ok_or(OpticError::Length { expected: 1, found: 0 })
            }))),
        )
    }
}

impl<A: Data, B: Data> FunList<A, A, B> {
    /// Feeds the stored sources back into the payload.
    pub fn eval(self) -> Result<B> {
        let (sources, rebuild) = self.no_fun();
        rebuild(sources)
    }
}

impl<S: Data, A: Data, X: Data, Y: Data> FunList<S, A, Fun<X, Y>> {
    /// `(More x l) <*> l' = More x (l <*> l')`; at `Done`, the right-hand
    /// list is grafted underneath.
    pub fn ap(self, other: FunList<S, A, X>) -> FunList<S, A, Y> {
        self.ap_at(other, 0)
    }

    fn ap_at(self, other: FunList<S, A, X>, gathered: usize) -> FunList<S, A, Y> {
        match self {
            FunList::More(s, rest) => FunList::More(s, Box::new(rest.ap_at(other, gathered + 1))),
            FunList::Done(f) => graft(other, f, gathered),
        }
    }
}

fn graft<S: Data, A: Data, X: Data, Y: Data>(
    right: FunList<S, A, X>,
    f: Fun<Vec<A>, Fun<X, Y>>,
    split: usize,
) -> FunList<S, A, Y> {
    match right {
        FunList::More(s, rest) => FunList::More(s, Box::new(graft(*rest, f, split))),
        FunList::Done(p) => FunList::Done(Arc::new(move |mut v: Vec<A>| {
            if v.len() < split {
                return Err(OpticError::Length {
                    expected: split,
                    found: v.len(),
                });
            }
            let tail = v.split_off(split);
            let g = f(v)?;
            g(p(tail)?)
        })),
    }
}
