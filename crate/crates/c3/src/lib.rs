//! Spoke-graded equivariant stable stems for the cyclic group of order 3,
//! in the window of weights -16..=16 and stems up to 25.
//!
//! The isotropy separation sequence splits every group in this window into a
//! Borel part — the homotopy of a stunted lens space that is unbounded
//! above, computed by the `ahss` crate — and a geometric fixed-point part,
//! which is a classical stable stem from the `stems` catalog. The two are
//! glued along a boundary map out of the classical stems; in the window its
//! value is completely determined (zero outside two explicit families), and
//! outside the window it is reported as unknown rather than silently zero.

mod column;
mod entry;
mod verify;

pub use column::WeightColumn;
pub use entry::{
    boundary_kind, c3_stem, integral_assembly, mahowald_boundary, Bidegree, BoundaryKind,
    IntegralStem, LensGenerator, PhiPart, SpokeEntry,
};
pub use verify::{bundled_table3, parse_cell, table3_mismatches, Mismatch, Table3Row};

/// Validated weight window.
pub const WEIGHT_MIN: i64 = -16;
pub const WEIGHT_MAX: i64 = 16;
/// Largest stem the engine reports.
pub const STEM_MAX: i64 = 25;

#[derive(Debug, thiserror::Error)]
pub enum C3Error {
    #[error("weight {0} outside the validated window -16..=16")]
    WeightOutOfRange(i64),
    #[error("stem {0} beyond the validated window (stems up to 25)")]
    StemOutOfRange(i64),
    #[error("boundary map into lens stem {stem} at weight {weight} is not determined")]
    BoundaryUnknown { stem: i64, weight: i64 },
    #[error("reference table: {0}")]
    BadTableCell(String),
    #[error("engine invariant violated: {0}")]
    Internal(String),
    #[error("spectral sequence: {0}")]
    Ahss(#[from] ahss::AhssError),
    #[error("catalog: {0}")]
    Catalog(#[from] stems::StemsError),
    #[error("group algebra: {0}")]
    Grp3(#[from] grp3::Grp3Error),
}
