//! Capabilities (the monoidal actions an optic needs its combinator modules
//! to lift through) and the optic kinds they classify.
//!
//! Implication is read on the module side: `Product ⇒ ListAlgebra` means a
//! module that can lift through every product residual can also lift through
//! residuals that happen to carry a list algebra.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Capability {
    /// Cartesian product with an arbitrary residual.
    Product,
    /// Coproduct with an arbitrary residual.
    Sum,
    /// Product with a pointed residual (an algebra for the maybe monad).
    Pointed,
    /// Product with a residual carrying a list-monad algebra.
    ListAlgebra,
    /// Applicative functors, witnessed by the payload side of a `FunList`.
    FunListApplicative,
    /// Traversable functors, witnessed by the source side of a `FunList`.
    FunListTraversable,
    /// Exponentials (function spaces).
    Closed,
}

impl Capability {
    pub const ALL: [Capability; 7] = [
        Capability::Product,
        Capability::Sum,
        Capability::Pointed,
        Capability::ListAlgebra,
        Capability::FunListApplicative,
        Capability::FunListTraversable,
        Capability::Closed,
    ];

    fn bit(self) -> u8 {
        1 << (self as u8)
    }

    /// Capabilities directly implied by `self`.
    pub fn direct_implications(self) -> &'static [Capability] {
        match self {
            Capability::Product => &[Capability::Pointed, Capability::ListAlgebra],
            Capability::FunListTraversable => &[Capability::Product, Capability::Sum],
            Capability::FunListApplicative => &[Capability::ListAlgebra],
            _ => &[],
        }
    }

    /// Reflexive-transitive implication.
    pub fn implies(self, other: Capability) -> bool {
        CapabilitySet::single(self).closure().contains(other)
    }

    pub fn name(self) -> &'static str {
        match self {
            Capability::Product => "product",
            Capability::Sum => "sum",
            Capability::Pointed => "pointed",
            Capability::ListAlgebra => "list-algebra",
            Capability::FunListApplicative => "funlist-applicative",
            Capability::FunListTraversable => "funlist-traversable",
            Capability::Closed => "closed",
        }
    }
}

impl fmt::Display for Capability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CapabilitySet(u8);

impl CapabilitySet {
    pub const EMPTY: CapabilitySet = CapabilitySet(0);

    pub fn single(c: Capability) -> Self {
        CapabilitySet(c.bit())
    }

    pub fn of(caps: &[Capability]) -> Self {
        caps.iter().fold(Self::EMPTY, |acc, c| acc.with(*c))
    }

    pub fn all() -> Self {
        Self::of(&Capability::ALL)
    }

    pub fn with(self, c: Capability) -> Self {
        CapabilitySet(self.0 | c.bit())
    }

    pub fn contains(self, c: Capability) -> bool {
        self.0 & c.bit() != 0
    }

    pub fn union(self, other: Self) -> Self {
        CapabilitySet(self.0 | other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Capability> {
        Capability::ALL.into_iter().filter(move |c| self.contains(*c))
    }

    /// Smallest superset closed under implication.
    pub fn closure(self) -> Self {
        let mut current = self;
        loop {
            let next = current.iter().fold(current, |acc, c| {
                c.direct_implications().iter().fold(acc, |a, i| a.with(*i))
            });
            if next == current {
                return current;
            }
            current = next;
        }
    }
}

impl fmt::Display for CapabilitySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<_> = self.iter().map(Capability::name).collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

/// Which way data may flow through an optic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Decomposes and rebuilds.
    Both,
    /// Only decomposes (getters and folds).
    ReadOnly,
    /// Only rebuilds (reviews).
    BuildOnly,
}

impl Direction {
    /// The direction of a composite, if data can flow through it at all.
    pub fn meet(self, other: Direction) -> Option<Direction> {
        match (self, other) {
            (Direction::Both, d) | (d, Direction::Both) => Some(d),
            (a, b) if a == b => Some(a),
            _ => None,
        }
    }

    /// Whether an optic flowing this way can stand in for one flowing `target`.
    pub fn serves(self, target: Direction) -> bool {
        self == Direction::Both || self == target
    }
}

/// The tag of each concrete optic family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpticKind {
    Adapter,
    Lens,
    AchromaticLens,
    AlgebraicLens,
    MonadicLens,
    Prism,
    AffineTraversal,
    Traversal,
    Kaleidoscope,
    Grate,
    Glass,
    Setter,
    Getter,
    Review,
    Fold,
}

impl OpticKind {
    pub const ALL: [OpticKind; 15] = [
        OpticKind::Adapter,
        OpticKind::Lens,
        OpticKind::AchromaticLens,
        OpticKind::AlgebraicLens,
        OpticKind::MonadicLens,
        OpticKind::Prism,
        OpticKind::AffineTraversal,
        OpticKind::Traversal,
        OpticKind::Kaleidoscope,
        OpticKind::Grate,
        OpticKind::Glass,
        OpticKind::Setter,
        OpticKind::Getter,
        OpticKind::Review,
        OpticKind::Fold,
    ];

    /// The capabilities a module must lift through to run this optic.
    pub fn capabilities(self) -> CapabilitySet {
        use Capability::*;
        match self {
            OpticKind::Adapter | OpticKind::Getter | OpticKind::Review => CapabilitySet::EMPTY,
            OpticKind::Lens | OpticKind::MonadicLens => CapabilitySet::of(&[Product]),
            OpticKind::AchromaticLens => CapabilitySet::of(&[Pointed]),
            OpticKind::AlgebraicLens => CapabilitySet::of(&[ListAlgebra]),
            OpticKind::Prism => CapabilitySet::of(&[Sum]),
            OpticKind::AffineTraversal => CapabilitySet::of(&[Product, Sum]),
            OpticKind::Traversal | OpticKind::Fold => CapabilitySet::of(&[FunListTraversable]),
            OpticKind::Kaleidoscope => CapabilitySet::of(&[FunListApplicative]),
            OpticKind::Grate => CapabilitySet::of(&[Closed]),
            OpticKind::Glass => CapabilitySet::of(&[Product, Closed]),
            OpticKind::Setter => CapabilitySet::all(),
        }
    }

    /// Everything an optic may require and still be used as this kind:
    /// the closure of its capabilities, or for read-only and build-only
    /// kinds, what their modules can lift through.
    pub fn admits(self) -> CapabilitySet {
        use Capability::*;
        match self {
            OpticKind::Getter => CapabilitySet::of(&[Product, Pointed, ListAlgebra]),
            OpticKind::Fold => CapabilitySet::of(&[FunListTraversable]).closure(),
            OpticKind::Review => CapabilitySet::of(&[Sum, Pointed]),
            k => k.capabilities().closure(),
        }
    }

    pub fn direction(self) -> Direction {
        match self {
            OpticKind::Getter | OpticKind::Fold => Direction::ReadOnly,
            OpticKind::Review => Direction::BuildOnly,
            _ => Direction::Both,
        }
    }

    /// Monadic lenses rebuild in a Kleisli category and only meet modules
    /// that understand effects.
    pub fn is_effectful(self) -> bool {
        self == OpticKind::MonadicLens
    }

    pub fn name(self) -> &'static str {
        match self {
            OpticKind::Adapter => "adapter",
            OpticKind::Lens => "lens",
            OpticKind::AchromaticLens => "achromatic lens",
            OpticKind::AlgebraicLens => "algebraic lens",
            OpticKind::MonadicLens => "monadic lens",
            OpticKind::Prism => "prism",
            OpticKind::AffineTraversal => "affine traversal",
            OpticKind::Traversal => "traversal",
            OpticKind::Kaleidoscope => "kaleidoscope",
            OpticKind::Grate => "grate",
            OpticKind::Glass => "glass",
            OpticKind::Setter => "setter",
            OpticKind::Getter => "getter",
            OpticKind::Review => "review",
            OpticKind::Fold => "fold",
        }
    }
}

impl fmt::Display for OpticKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
