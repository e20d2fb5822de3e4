//! Uniform families of finite sets indexed by countable ordinals, with exact
//! membership, canonical representations, Cantor-Bendixson ranks, and
//! windowed Ramsey searches that emit checkable certificates.

pub mod canonical;
pub mod certificate;
pub mod coloring;
pub mod cb_index;
pub mod error;
pub mod family_core;
pub mod oracle;
pub mod ordinal;
pub mod ramsey_engine;
pub mod suite;
pub mod uniform_system;

pub use error::{Error, Result};
pub use family_core::{Family, FiniteSet, Nat, Predicate, Window};
pub use ordinal::{Ordinal, Scheme};
pub use uniform_system::{FamilyKind, FamilySpec, Residual};
