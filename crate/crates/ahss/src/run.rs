//! Applying the differential records page by page. Every record must find
//! both of its classes alive when its page runs — a miss is an engine error,
//! not a no-op — so the rule table and the page model keep each other honest.

use std::collections::BTreeMap;

use lens::StuntedLens;
use stems::Catalog;

use crate::page::{d1_cokernel, d1_kernel, display_name, EPage, Order, Summand};
use crate::rules::{DifferentialRecord, RuleStatus};
use crate::AhssError;

/// How to treat the proven late d17-differentials: apply them (the truth,
/// used for assembled homotopy groups) or defer them alongside the undecided
/// ones (the convention of the reference limit charts, which keep both
/// classes visible with the arrow drawn).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeventeenPolicy {
    ApplyProven,
    DeferAll,
}

type Entries = BTreeMap<(i64, i64), Vec<Summand>>;

/// The page after all differentials of page `after` have been applied, i.e.
/// the E_{after+1}-page.
#[derive(Clone, Debug)]
pub struct PageState {
    pub label: u32,
    pub entries: Entries,
}

/// The full run: every intermediate page, which records actually fired,
/// which were deferred, and which stems are clouded by an undecided
/// differential.
#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub bottom: i64,
    pub smin: i64,
    pub smax: i64,
    pub policy: SeventeenPolicy,
    pub records: Vec<DifferentialRecord>,
    /// E_r-page snapshots, starting with E₁ and ending with the limit.
    pub pages: Vec<PageState>,
    /// Indices into `records` of differentials that fired.
    pub applied: Vec<usize>,
    /// Indices of proven records withheld by `DeferAll`.
    pub deferred: Vec<usize>,
    /// Stems whose limit depends on an undecided differential, with the
    /// indices of the records responsible.
    pub ambiguous: BTreeMap<i64, Vec<usize>>,
}

impl RunOutcome {
    /// The E_r-page: the last stored state with label at most `r`.
    pub fn state_at(&self, r: u32) -> &Entries {
        let mut best = &self.pages[0];
        for p in &self.pages {
            if p.label <= r {
                best = p;
            }
        }
        &best.entries
    }

    pub fn e_infinity(&self) -> &Entries {
        &self.pages.last().expect("at least the first page").entries
    }

    pub fn tracked(&self, stem: i64) -> bool {
        stem >= self.smin - 1 && stem <= self.smax + 1
    }
}

/// Find a summand by display name in a raw entries map.
pub(crate) fn find_summand(
    catalog: &Catalog,
    entries: &Entries,
    cell: i64,
    stem: i64,
    name: &str,
) -> Option<usize> {
    entries
        .get(&(cell, stem))
        .and_then(|list| {
            list.iter()
                .position(|s| display_name(catalog, &s.class, s.depth) == name)
        })
}

fn remove_summand(entries: &mut Entries, cell: i64, stem: i64, idx: usize) {
    let list = entries.get_mut(&(cell, stem)).expect("summand located");
    list.remove(idx);
    if list.is_empty() {
        entries.remove(&(cell, stem));
    }
}

fn dead(record: &DifferentialRecord, role: &'static str) -> AhssError {
    let loc = if role == "source" {
        &record.source
    } else {
        &record.target
    };
    AhssError::DeadClass {
        rule_id: record.rule_id.to_string(),
        page: record.page,
        role,
        name: loc.name.clone(),
        cell: loc.cell,
        stem: loc.stem,
        note: record.note.clone(),
    }
}

/// Run all record pages in order over the E₁-page. The catalog is consulted
/// only to resolve display names of deepened summands.
pub fn run_pages(
    _complex: &StuntedLens,
    catalog: &Catalog,
    e1: &EPage,
    records: &[DifferentialRecord],
    policy: SeventeenPolicy,
) -> Result<RunOutcome, AhssError> {
    let mut state = e1.entries.clone();
    let mut pages = vec![PageState {
        label: 1,
        entries: state.clone(),
    }];
    let mut applied = Vec::new();
    let mut deferred = Vec::new();
    let mut ambiguous: BTreeMap<i64, Vec<usize>> = BTreeMap::new();

    let mut page_numbers: Vec<u32> = records.iter().map(|r| r.page).collect();
    page_numbers.sort_unstable();
    page_numbers.dedup();

    for page in page_numbers {
        for (idx, record) in records.iter().enumerate() {
            if record.page != page {
                continue;
            }
            if page == 1 {
                if let Some(list) = state.get(&(record.source.cell, record.source.stem)) {
                    let kernel = d1_kernel(list);
                    if kernel.is_empty() {
                        state.remove(&(record.source.cell, record.source.stem));
                    } else {
                        state.insert((record.source.cell, record.source.stem), kernel);
                    }
                }
                if let Some(list) = state.get(&(record.target.cell, record.target.stem)) {
                    let coker = d1_cokernel(list);
                    state.insert((record.target.cell, record.target.stem), coker);
                }
                applied.push(idx);
                continue;
            }

            let src = find_summand(
                catalog,
                &state,
                record.source.cell,
                record.source.stem,
                &record.source.name,
            );
            let tgt = find_summand(
                catalog,
                &state,
                record.target.cell,
                record.target.stem,
                &record.target.name,
            );

            let withheld = record.status == RuleStatus::Potential
                || (page == 17 && policy == SeventeenPolicy::DeferAll);
            if withheld {
                if record.status == RuleStatus::Potential {
                    if src.is_some() && tgt.is_some() {
                        for stem in [record.source.stem, record.target.stem] {
                            ambiguous.entry(stem).or_default().push(idx);
                        }
                    }
                } else {
                    // A proven differential we are only withholding for the
                    // chart convention must still have both classes present.
                    if src.is_none() {
                        return Err(dead(record, "source"));
                    }
                    if tgt.is_none() {
                        return Err(dead(record, "target"));
                    }
                    deferred.push(idx);
                }
                continue;
            }

            let Some(si) = src else {
                return Err(dead(record, "source"));
            };
            let Some(ti) = tgt else {
                return Err(dead(record, "target"));
            };
            let src_order = state[&(record.source.cell, record.source.stem)][si].order;
            let tgt_order = state[&(record.target.cell, record.target.stem)][ti].order;
            debug_assert_eq!(src_order, Order::Finite(1), "late sources have order 3");
            debug_assert_eq!(tgt_order, Order::Finite(1), "late targets have order 3");
            remove_summand(&mut state, record.source.cell, record.source.stem, si);
            remove_summand(&mut state, record.target.cell, record.target.stem, ti);
            applied.push(idx);
        }
        pages.push(PageState {
            label: page + 1,
            entries: state.clone(),
        });
    }

    Ok(RunOutcome {
        bottom: e1.bottom,
        smin: e1.smin,
        smax: e1.smax,
        policy,
        records: records.to_vec(),
        pages,
        applied,
        deferred,
        ambiguous,
    })
}
