//! Mixed optics over runtime values.
//!
//! - [`optic`]: concrete normal forms for every optic family.
//! - [`combinators`]: `view`, `preview`, `set`, `over`, `to_list_of`,
//!   `classify`, `aggregate`, `mupdate`, `review` and `grate_apply`.
//! - [`modules`] and [`encoding`]: combinator modules with their Tambara
//!   lifts, and the translation between concrete optics and module
//!   transformers.
//! - [`composition`]: the kind lattice, composition and upcasts.
//! - [`value`] and [`fixtures`]: the JSON-like document universe and the
//!   worked examples (addresses, iris flowers, boxes, mail).

pub mod capability;
pub mod combinators;
pub mod composition;
pub mod effect;
pub mod encoding;
pub mod error;
pub mod fixtures;
pub mod func;
pub mod funlist;
pub mod modules;
pub mod optic;
pub mod value;

pub use capability::{Capability, CapabilitySet, Direction, OpticKind};
pub use effect::{Effect, EffectKind};
pub use error::{OpticError, Result};
pub use func::{Data, Fun, Fun2};
pub use funlist::FunList;
pub use optic::{Extraction, Match, Optic};
