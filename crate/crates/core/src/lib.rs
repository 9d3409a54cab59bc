//! Canonical cusp triangulations of 2-bridge link complements, their
//! combinatorial symmetries, and commensurability.

pub mod autgroup;
pub mod commens;
pub mod complex;
pub mod error;
pub mod flags;
pub mod render;
pub mod word;

pub use complex::{CuspComplex, EdgeClass, TriangleKind, ValenceTable};
pub use error::{Error, Result};
pub use word::{Fraction, Letter, TwoBridgeWord};
