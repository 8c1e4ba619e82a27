//! The cellular (Atiyah–Hirzebruch) spectral sequence of a stunted lens
//! space that is unbounded above, run with the proven differential rules and
//! hidden 3-extensions, down to the homotopy groups themselves.
//!
//! The pipeline is `build_e1` → `rule_differentials` → `run_pages` →
//! `assemble_homotopy` / `emit_chart`. Pages are kept per (cell, stem) as
//! lists of named cyclic summands; every differential is a record that must
//! apply exactly once, so a rule that tries to fire on a class that is
//! already dead is an engine error rather than a silent no-op.

mod assemble;
mod chart;
mod page;
mod rules;
mod run;

pub use assemble::{assemble_homotopy, AssembledStem, Generator, GeneratorOrder};
pub use chart::{emit_chart, Arrow, ArrowStyle, ChartKind, ChartModel, Node, NodeStyle};
pub use page::{build_e1, display_name, EPage, Order, Summand};
pub use rules::{rule_differentials, DifferentialRecord, Location, RuleStatus};
pub use run::{run_pages, PageState, RunOutcome, SeventeenPolicy};

use lens::StuntedLens;

#[derive(Debug, thiserror::Error)]
pub enum AhssError {
    #[error("complex must be unbounded above (top = +infinity)")]
    BoundedAbove,
    #[error("complex has no cells at or above its bottom")]
    Empty,
    #[error(
        "bottom {0} is below -16, outside the validated range of rule `{1}`"
    )]
    BottomOutOfRange(i64, &'static str),
    #[error(
        "stem window needs classical stem {0}, beyond the catalog range"
    )]
    StemOutOfCatalog(i64),
    #[error("catalog: {0}")]
    Catalog(#[from] stems::StemsError),
    #[error("lens descriptor: {0}")]
    Lens(#[from] lens::LensError),
    #[error(
        "record `{rule_id}` on page {page} has a dead {role}: {name}[{cell}] in stem {stem} ({note})"
    )]
    DeadClass {
        rule_id: String,
        page: u32,
        role: &'static str,
        name: String,
        cell: i64,
        stem: i64,
        note: String,
    },
    #[error("stem {stem} is ambiguous: {records:?} may or may not fire")]
    Ambiguous { stem: i64, records: Vec<String> },
}

/// The lowest cell the complex actually has (the bottom bound normalized to
/// the wedge summand's cell pattern).
pub fn lowest_cell(complex: &StuntedLens) -> Result<i64, AhssError> {
    let b = match complex.bottom {
        lens::Bound::Finite(b) => b,
        _ => return Err(AhssError::Empty),
    };
    complex
        .cells_in(b, b + 3)
        .first()
        .copied()
        .ok_or(AhssError::Empty)
}

/// One-call pipeline: homotopy groups of the complex in stems
/// `lowest cell ..= smax`, assembled with hidden extensions. Proven late
/// differentials are applied; potential ones raise an ambiguity error on the
/// stems they touch.
pub fn compute(
    complex: &StuntedLens,
    catalog: &stems::Catalog,
    smax: i64,
) -> Result<Vec<AssembledStem>, AhssError> {
    let smin = lowest_cell(complex)?;
    let e1 = build_e1(complex, catalog, smin, smax)?;
    let records = rule_differentials(complex, catalog, &e1)?;
    let outcome = run_pages(complex, catalog, &e1, &records, SeventeenPolicy::ApplyProven)?;
    (smin..=smax)
        .map(|s| assemble_homotopy(complex, catalog, &outcome, s))
        .collect()
}
