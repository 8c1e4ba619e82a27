//! The Borel-side input to one weight: the homotopy of the stunted lens
//! space with bottom cell `-j`, plus the spectral sequence of the complex
//! one cell deeper, whose differentials decide which classes restrict
//! nontrivially to the underlying sphere.

use std::collections::BTreeMap;

use ahss::{
    build_e1, display_name, lowest_cell, rule_differentials, run_pages, AssembledStem, Generator,
    Order, SeventeenPolicy, Summand,
};
use grp3::FinAbelian3Group;
use lens::{Flavor, StuntedLens};
use stems::Catalog;

use crate::{C3Error, STEM_MAX, WEIGHT_MAX, WEIGHT_MIN};

/// Differential data of the one-cell-deeper complex.
pub(crate) struct DeeperRun {
    /// `(page, source cell, source stem)` of every differential that fired.
    applied: Vec<(u32, i64, i64)>,
    /// First-page summands per `(cell, stem)`, to read off element orders.
    e1: BTreeMap<(i64, i64), Vec<Summand>>,
}

/// Homotopy of the stunted lens space with bottom cell `-j`, in stems
/// `-j ..= 25 - j`, with restriction data from the deeper complex.
pub struct WeightColumn {
    pub j: i64,
    pub smin: i64,
    pub smax: i64,
    stems: Vec<AssembledStem>,
    deeper: Option<DeeperRun>,
}

impl WeightColumn {
    pub fn compute(catalog: &Catalog, j: i64) -> Result<Self, C3Error> {
        if !(WEIGHT_MIN..=WEIGHT_MAX).contains(&j) {
            return Err(C3Error::WeightOutOfRange(j));
        }
        let smax = STEM_MAX - j;
        let complex = StuntedLens::infinite_above(-j, Flavor::Full);
        let stems = ahss::compute(&complex, catalog, smax)?;
        let smin = lowest_cell(&complex)?;

        // One cell deeper: a class on cell n restricts nontrivially exactly
        // when it supports a differential over the bottom cell -(j+1). The
        // deeper bottom leaves the validated range only at j = 16.
        let deeper = if -j - 1 >= -16 {
            let deep = StuntedLens::infinite_above(-j - 1, Flavor::Full);
            let dmin = lowest_cell(&deep)?;
            let e1 = build_e1(&deep, catalog, dmin, smax)?;
            let records = rule_differentials(&deep, catalog, &e1)?;
            let out = run_pages(&deep, catalog, &e1, &records, SeventeenPolicy::ApplyProven)?;
            let applied = out
                .applied
                .iter()
                .map(|&k| {
                    let r = &out.records[k];
                    (r.page, r.source.cell, r.source.stem)
                })
                .collect();
            Some(DeeperRun {
                applied,
                e1: out.state_at(1).clone(),
            })
        } else {
            None
        };

        Ok(WeightColumn {
            j,
            smin,
            smax,
            stems,
            deeper,
        })
    }

    pub fn stem(&self, s: i64) -> Option<&AssembledStem> {
        self.stems.iter().find(|a| a.stem == s)
    }

    /// The lens-side group in one stem; zero below the bottom cell.
    pub fn group(&self, s: i64) -> FinAbelian3Group {
        self.stem(s)
            .map(|a| a.group.clone())
            .unwrap_or_else(FinAbelian3Group::zero)
    }

    pub fn generators(&self, s: i64) -> Vec<Generator> {
        self.stem(s).map(|a| a.generators.clone()).unwrap_or_default()
    }

    /// Whether the class restricts nontrivially to the underlying stem:
    /// true exactly when it supports a differential in the one-cell-deeper
    /// complex. A first differential is multiplication by 3, so it counts
    /// only when the element's order on the deeper first page exceeds 3.
    /// `None` when the deeper complex is outside the validated range.
    pub(crate) fn res_nonzero(
        &self,
        catalog: &Catalog,
        generator: &Generator,
        stem: i64,
    ) -> Option<bool> {
        let deeper = self.deeper.as_ref()?;
        let key = (generator.cell, stem);
        for &(page, cell, s) in &deeper.applied {
            if (cell, s) != key {
                continue;
            }
            if page >= 2 {
                return Some(true);
            }
            for summand in deeper.e1.get(&key).map(Vec::as_slice).unwrap_or(&[]) {
                match summand.order {
                    Order::Tower => {
                        if display_name(catalog, &summand.class, summand.depth) == generator.name {
                            return Some(true);
                        }
                    }
                    Order::Finite(e) => {
                        for d in 0..e {
                            if display_name(catalog, &summand.class, summand.depth + d)
                                == generator.name
                            {
                                if e - d >= 2 {
                                    return Some(true);
                                }
                                break;
                            }
                        }
                    }
                }
            }
        }
        Some(false)
    }
}
