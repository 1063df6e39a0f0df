//! Finite-structure laboratory for Nakano mosaics.
//!
//! Bounded lattices are turned into multivalued operations (mosaics) and every
//! axiom relating the two worlds is checked by exhaustive search over the
//! finite carrier. Checks return [`AxiomReport`]s that carry a concrete
//! counterexample whenever an axiom fails.

pub mod catalog;
pub mod equivalence;
pub mod hyper;
pub mod io;
pub mod lattice;
pub mod nakano;
pub mod report;
pub mod set;

pub use hyper::{Mosaic, Multioperation};
pub use lattice::{FiniteBoundedLattice, Involution, LatticeError};
pub use report::{AxiomReport, Witness};
pub use set::ElemSet;
