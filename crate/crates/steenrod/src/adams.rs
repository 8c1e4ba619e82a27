//! The 3-primary Adams spectral sequence of the sphere, run from the bundled
//! E₂ chart and differential table: page-wise cancellation followed by
//! assembly of each stem into a finite abelian 3-group, stacking classes
//! linked by multiplication with the filtration-raising class a₀ into single
//! cyclic summands.

use std::collections::{BTreeMap, BTreeSet};

use grp3::FinAbelian3Group;
use serde::Deserialize;

use crate::SteenrodError;

/// Highest stem the bundled chart covers completely.
pub const MAX_STEM: u32 = 35;

#[derive(Clone, Debug, Deserialize)]
pub struct TableClass {
    pub s: u32,
    pub stem: u32,
    pub name: String,
    #[serde(default)]
    pub pi: Option<String>,
    /// Name of the class representing a₀·(this class), when nonzero on E₂.
    #[serde(default)]
    pub a0: Option<String>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct TableDiff {
    pub page: u32,
    pub source: String,
    pub target: String,
}

/// The bundled E₂ chart with its differentials.
#[derive(Clone, Debug, Deserialize)]
pub struct AdamsTable {
    pub classes: Vec<TableClass>,
    pub differentials: Vec<TableDiff>,
}

/// Parse the chart shipped with the crate.
pub fn bundled_table() -> AdamsTable {
    serde_json::from_str(include_str!("../fixtures/adams_e2.json"))
        .expect("bundled chart must parse")
}

impl AdamsTable {
    fn class(&self, name: &str) -> Option<&TableClass> {
        self.classes.iter().find(|c| c.name == name)
    }

    /// Expected dim Ext^{s,t} per (s, stem) slot for stem ≤ `max_stem` and
    /// s ≤ `max_s`: the listed classes plus the unit's tower at stem 0.
    pub fn expected_ext_dims(&self, max_s: u32, max_stem: u32) -> BTreeMap<(u32, u32), usize> {
        let mut out = BTreeMap::new();
        for s in 0..=max_s {
            out.insert((s, 0), 1);
        }
        for c in &self.classes {
            if c.s <= max_s && c.stem <= max_stem {
                *out.entry((c.s, c.stem)).or_insert(0) += 1;
            }
        }
        out
    }

    /// Run the spectral sequence and read off π_n for 0 ≤ n ≤ [`MAX_STEM`].
    ///
    /// Each differential cancels its (still-alive) source and target; a dead
    /// endpoint means the table is inconsistent. Afterwards every maximal
    /// chain of surviving classes linked by the `a0` field contributes one
    /// Z/3^length summand; the unit's infinite tower contributes the free
    /// summand at stem 0.
    pub fn run(&self) -> Result<Vec<FinAbelian3Group>, SteenrodError> {
        let mut alive: BTreeSet<&str> = self.classes.iter().map(|c| c.name.as_str()).collect();
        if alive.len() != self.classes.len() {
            return Err(SteenrodError::BadTable("duplicate class name".into()));
        }
        let mut diffs = self.differentials.clone();
        diffs.sort_by_key(|d| d.page);
        for d in &diffs {
            let (src, tgt) = (
                self.class(&d.source)
                    .ok_or_else(|| SteenrodError::BadTable(format!("unknown source {}", d.source)))?,
                self.class(&d.target)
                    .ok_or_else(|| SteenrodError::BadTable(format!("unknown target {}", d.target)))?,
            );
            if tgt.s != src.s + d.page || tgt.stem + 1 != src.stem {
                return Err(SteenrodError::BadTable(format!(
                    "d{}({}) = {} has wrong bidegree",
                    d.page, d.source, d.target
                )));
            }
            if !alive.remove(d.source.as_str()) || !alive.remove(d.target.as_str()) {
                return Err(SteenrodError::BadTable(format!(
                    "d{}({}) = {} touches a class that is already dead",
                    d.page, d.source, d.target
                )));
            }
        }

        let mut pi: Vec<FinAbelian3Group> = Vec::new();
        for n in 0..=MAX_STEM {
            let mut g = if n == 0 {
                FinAbelian3Group::free(1)
            } else {
                FinAbelian3Group::zero()
            };
            // Chain heads: survivors in this stem that are not the a₀-multiple
            // of another survivor.
            let a0_images: BTreeSet<&str> = self
                .classes
                .iter()
                .filter(|c| alive.contains(c.name.as_str()))
                .filter_map(|c| c.a0.as_deref())
                .filter(|t| alive.contains(t))
                .collect();
            for head in self
                .classes
                .iter()
                .filter(|c| c.stem == n && alive.contains(c.name.as_str()))
                .filter(|c| !a0_images.contains(c.name.as_str()))
            {
                let mut len = 0u32;
                let mut cur = Some(head);
                while let Some(c) = cur {
                    len += 1;
                    cur = c
                        .a0
                        .as_deref()
                        .filter(|t| alive.contains(t))
                        .and_then(|t| self.class(t));
                }
                g = g.direct_sum(&FinAbelian3Group::cyclic(len));
            }
            pi.push(g);
        }
        Ok(pi)
    }
}

/// π^{cl}_n (3-complete) for 0 ≤ n ≤ [`MAX_STEM`], from the bundled chart.
pub fn run_adams_ss() -> Result<Vec<FinAbelian3Group>, SteenrodError> {
    bundled_table().run()
}
