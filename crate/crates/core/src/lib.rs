//! An exact, table-driven engine for finite monoidal categories with
//! dualizing objects (Grothendieck-Verdier / *-autonomous structure).
//!
//! Everything is finite and explicit: categories are composition tables,
//! functors are lookup tables, and every structural theorem — the monoidal
//! structure on the squared duality functor, rigidity criteria, pivotal and
//! ribbon structures, Hecke subcategories, and the universal extension of a
//! category with duality data to one whose unit is dualizing — is checked
//! exhaustively rather than assumed.

pub mod braided;
pub mod cat;
pub mod examples;
pub mod extension;
pub mod format;
pub mod gv;
pub mod hecke;
pub mod monoidal;
pub mod mutate;
pub mod pivotal;
pub mod report;
pub mod rigidity;

pub use report::{EngineError, Issue, Result, ValidationReport};
