//! Multivalued operations and the mosaic axiom stack.

mod lmosaic;
mod magma;
mod morphism;
mod mosaic;
mod multimap;

use thiserror::Error;

pub use lmosaic::{
    dual_table, dualize, dualize_with, induced_order, is_lmosaic, lms4_candidates, strong_closure,
    verify_lmosaic, DualForm,
};
pub use magma::{
    find_neutral, inverses, is_associative, is_commutative, is_reproductive, is_total, Multioperation,
};
pub use morphism::{check_magma_morphism, check_morphism, MorphismKind};
pub use mosaic::{
    is_strong_submosaic, is_submosaic, reversibility, submosaic, verify_mosaic, Mosaic,
    MosaicVerification,
};
pub use multimap::{compose_relations, Multimap};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HyperError {
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("element index {0} out of range")]
    InvalidElement(usize),
    #[error("not an L-mosaic: {0}")]
    NotAnLMosaic(String),
    #[error("not a submosaic: {0}")]
    NotASubmosaic(String),
}
