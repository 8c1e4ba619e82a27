//! Honesty about the two undecided late differentials: inside the
//! trustworthy window (stems up to 25 + weight) nothing is flagged, and
//! widening the window to 30 + weight produces flags exactly on the stems
//! fed by the two potential beta-family sources on cells 4 and 22.

use std::collections::BTreeSet;

use ahss::{build_e1, lowest_cell, rule_differentials, run_pages, RunOutcome, SeventeenPolicy};
use lens::{Flavor, StuntedLens};
use stems::Catalog;

fn run(bottom: i64, smax: i64) -> RunOutcome {
    let catalog = Catalog::bundled();
    let complex = StuntedLens::infinite_above(bottom, Flavor::Full);
    let smin = lowest_cell(&complex).unwrap();
    let e1 = build_e1(&complex, &catalog, smin, smax).unwrap();
    let records = rule_differentials(&complex, &catalog, &e1).unwrap();
    run_pages(&complex, &catalog, &e1, &records, SeventeenPolicy::ApplyProven).unwrap()
}

/// Flagged stems inside the reported window.
fn flags(out: &RunOutcome) -> BTreeSet<i64> {
    out.ambiguous
        .keys()
        .copied()
        .filter(|s| *s <= out.smax)
        .collect()
}

#[test]
fn no_stem_in_the_trusted_window_is_flagged() {
    for j in -16i64..=16 {
        let out = run(-j, 25 - j);
        assert!(
            out.ambiguous.is_empty(),
            "weight {j}: flags {:?} inside the trusted window",
            out.ambiguous.keys().collect::<Vec<_>>()
        );
    }
}

/// Widening each window by five stems makes the undecided differentials
/// reachable, and the flags land exactly on the stems of their sources and
/// targets: the cell-4 source feeds stems 13/14 of the deep complexes
/// (bottom at most -13) and the cell-22 source feeds stems 31/32 of the
/// shallow ones (bottom 1..=5, where its target cell 5 is still present).
#[test]
fn widening_the_window_flags_exactly_the_undecided_stems() {
    for j in -16i64..=16 {
        let out = run(-j, 30 - j);
        let expected: BTreeSet<i64> = if (13..=16).contains(&j) {
            // Source beta1[4] in stem 14, target beta2[-13] in stem 13.
            [13, 14].into_iter().collect()
        } else if (-5..=-1).contains(&j) {
            // Source beta1[22] in stem 32, target beta2[5] in stem 31.
            [31, 32]
                .into_iter()
                .filter(|s| *s <= out.smax)
                .collect()
        } else {
            BTreeSet::new()
        };
        assert_eq!(
            flags(&out),
            expected,
            "weight {j}: unexpected ambiguity flags"
        );
        // Nothing else is flagged even beyond the reported stems.
        for s in out.ambiguous.keys() {
            assert!(
                expected.contains(s) || *s == out.smax + 1,
                "weight {j}: stray flag at stem {s}"
            );
        }
    }
}
