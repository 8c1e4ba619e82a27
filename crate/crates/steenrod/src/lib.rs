//! The mod-3 dual Steenrod algebra, its reduced cobar complex, the Lambda
//! algebra, bigraded Ext of the sphere, chain-level Massey products, and the
//! Adams spectral sequence assembled from a bundled differential table.
//!
//! Two independent Ext engines live here on purpose: the cobar complex is the
//! definitional model (and the only place Massey representatives make sense),
//! while the Lambda algebra is the small production model. Their dimensions
//! are cross-checked in tests.

pub mod adams;
pub mod cobar;
pub mod lambda;
mod lin;
pub mod milnor;

pub use lin::Lin;

/// Errors surfaced by the Ext machinery.
#[derive(Debug, thiserror::Error)]
pub enum SteenrodError {
    #[error("bidegree (s={0}, t={1}) outside the configured range (s <= {2}, t <= {3})")]
    OutOfRange(u32, u32, u32, u32),
    #[error("massey product undefined: chain-level product {0} is not a boundary")]
    MasseyUndefined(&'static str),
    #[error("differential table inconsistency: {0}")]
    BadTable(String),
}
