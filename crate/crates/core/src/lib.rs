//! Finite-scale engine for axiomatic Galois theory.
//!
//! Everything here is explicit and exhaustively checkable: groups and
//! monoids are full composition tables, actions are full tables, and
//! finite concrete categories carry all their arrows. On top of that raw
//! material the crate verifies the axiom suites for categories with a
//! fiber functor, computes Galois objects and closures, assembles the
//! profinite inverse system of a cofinal Galois diagram, and realizes the
//! reconstruction theorems (recover a group from its category of actions;
//! classify graph coverings by permutation voltages) as executable
//! round-trips.

pub mod action;
pub mod algebra;
pub mod axioms;
pub mod axioms_g;
pub mod caps;
pub mod category;
pub mod diagram;
pub mod error;

pub use caps::Caps;
pub use error::{Error, Result};
