//! Exact arithmetic foundation for the whole workspace: sparse matrices over
//! the field with three elements, and finitely generated abelian 3-groups
//! together with homomorphisms, kernels and cokernels.
//!
//! Everything here has pure value semantics; all operations are deterministic
//! and safe to call from parallel workers.

mod f3;
mod group;
mod hom;
mod snf;

pub use f3::{homology_at, F3Matrix, Homology, RowReduced};
pub use group::FinAbelian3Group;
pub use hom::GroupHom;

/// Errors surfaced by the linear-algebra layer.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum Grp3Error {
    #[error("matrix index ({0}, {1}) out of bounds for {2}x{3} matrix")]
    IndexOutOfBounds(usize, usize, usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("composite of differentials is nonzero; not a chain complex")]
    NotAComplex,
    #[error("homomorphism does not respect generator orders (column {0})")]
    IllFormedHom(usize),
}
