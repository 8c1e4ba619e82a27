//! Structural invariants of the spectral-sequence run that hold for reasons
//! independent of any frozen table: wedge-summand additivity, James
//! periodicity, stability of the reported window under widening, order
//! conservation from the limit page into the assembled groups, and agreement
//! of the differential sources with the attaching patterns of the complex.

use std::collections::BTreeSet;

use ahss::{
    assemble_homotopy, build_e1, compute, lowest_cell, rule_differentials, run_pages,
    AssembledStem, GeneratorOrder, Order, SeventeenPolicy,
};
use grp3::FinAbelian3Group;
use lens::{attaching_patterns, AttachingClass, Flavor, PatternRole, StuntedLens};
use stems::Catalog;

fn stems_over(bottom: i64, flavor: Flavor, smax: i64) -> Vec<AssembledStem> {
    let catalog = Catalog::bundled();
    let complex = StuntedLens::infinite_above(bottom, flavor);
    compute(&complex, &catalog, smax).unwrap()
}

fn group_at(all: &[AssembledStem], stem: i64) -> FinAbelian3Group {
    all.iter()
        .find(|a| a.stem == stem)
        .map(|a| a.group.clone())
        .unwrap_or_else(FinAbelian3Group::zero)
}

/// The full complex is the wedge of its two summands, so its homotopy in
/// every stem must be the direct sum of theirs. Run over a spread of bottom
/// cells covering every residue behavior (including the joint-extension
/// bottoms ±6, ±12 and the split bottom 0).
#[test]
fn the_full_complex_is_the_sum_of_its_two_wedge_summands() {
    for bottom in [-16i64, -12, -9, -6, -2, 0, 3, 8, 12, 16] {
        let smax = bottom + 20;
        let full = stems_over(bottom, Flavor::Full, smax);
        let even = stems_over(bottom, Flavor::BSigma3, smax);
        let odd = stems_over(bottom, Flavor::X, smax);
        for stem in bottom..=smax {
            let sum = group_at(&even, stem).direct_sum(&group_at(&odd, stem));
            assert_eq!(
                group_at(&full, stem),
                sum,
                "bottom {bottom}, stem {stem}: full differs from the wedge sum"
            );
        }
    }
}

/// James periodicity: the computation engages cells up to 13 above the
/// bottom here (stems up to bottom+11, plus the tracked margin), and for a
/// span of that length the periodicity shift must be 2d with 27 | d — so a
/// 54-cell shift of the bottom must shift the homotopy groups by 54. (An
/// 18-shift is NOT enough: the deep level-3 attaching maps recur with
/// period 108, and 18 does not preserve their residues while 54 does.)
/// The joint-extension bottoms ±6, ±12 sit at absolute positions and are
/// excluded: their shifted partners are ordinary bottoms.
#[test]
fn a_fifty_four_cell_shift_of_the_bottom_shifts_the_groups() {
    for bottom in -16i64..=-2 {
        if bottom == -12 || bottom == -6 {
            continue;
        }
        // The cell-level model agrees that 54 is a period for this span.
        let span = StuntedLens::new(bottom, bottom + 12, Flavor::Full).unwrap();
        assert!(span.james_shift(54).is_ok());

        let low = stems_over(bottom, Flavor::Full, bottom + 11);
        let high = stems_over(bottom + 54, Flavor::Full, bottom + 65);
        for stem in bottom..=bottom + 11 {
            assert_eq!(
                group_at(&low, stem),
                group_at(&high, stem + 54),
                "bottom {bottom}, stem {stem}: 54-shift changed the group"
            );
        }
    }
}

/// Widening the stem window must not change the groups already reported:
/// differentials only ever point down in stem, so extra tracked stems above
/// can kill classes among themselves but never reach the old window.
#[test]
fn widening_the_stem_window_preserves_reported_stems() {
    for (bottom, narrow, wide) in [(-16i64, 9i64, 12i64), (-5, 14, 17)] {
        let a = stems_over(bottom, Flavor::Full, narrow);
        let b = stems_over(bottom, Flavor::Full, wide);
        for stem in bottom..=narrow {
            assert_eq!(
                group_at(&a, stem),
                group_at(&b, stem),
                "bottom {bottom}, stem {stem}: window widening changed the group"
            );
        }
    }
}

/// Hidden extensions regroup the limit page but never change total order:
/// per stem, the assembled free rank equals the number of surviving towers
/// and the assembled torsion length equals the summed exponents of the
/// surviving finite summands.
#[test]
fn assembly_conserves_the_order_of_the_limit_page() {
    let catalog = Catalog::bundled();
    for bottom in [-16i64, -11, 0, 7] {
        let smax = bottom + 20;
        let complex = StuntedLens::infinite_above(bottom, Flavor::Full);
        let smin = lowest_cell(&complex).unwrap();
        let e1 = build_e1(&complex, &catalog, smin, smax).unwrap();
        let records = rule_differentials(&complex, &catalog, &e1).unwrap();
        let out =
            run_pages(&complex, &catalog, &e1, &records, SeventeenPolicy::ApplyProven).unwrap();
        for stem in smin..=smax {
            let mut towers = 0usize;
            let mut torsion = 0u64;
            for ((_, s), list) in out.e_infinity() {
                if *s != stem {
                    continue;
                }
                for summand in list {
                    match summand.order {
                        Order::Tower => towers += 1,
                        Order::Finite(e) => torsion += u64::from(e),
                    }
                }
            }
            let assembled = assemble_homotopy(&complex, &catalog, &out, stem).unwrap();
            assert_eq!(
                assembled.group.free_rank, towers,
                "bottom {bottom}, stem {stem}: free rank changed in assembly"
            );
            assert_eq!(
                assembled.group.torsion_length(),
                torsion,
                "bottom {bottom}, stem {stem}: torsion order changed in assembly"
            );
            // The generators list is the same group again.
            let mut free = 0usize;
            let mut cyc = Vec::new();
            for g in &assembled.generators {
                match g.order {
                    GeneratorOrder::Tower => free += 1,
                    GeneratorOrder::Finite(e) => cyc.push(e),
                }
            }
            assert_eq!(FinAbelian3Group::new(free, cyc), assembled.group);
        }
    }
}

/// The page-1 and unit-class differential sources must coincide with the
/// cell-level attaching patterns of the same complex: a differential off the
/// unit class exists exactly where the corresponding attaching map does.
/// The finite model spans cells -16..=22 so the realized patterns line up
/// with a run tracking stems up to 21 over the unbounded complex.
#[test]
fn differential_sources_match_the_attaching_patterns() {
    let catalog = Catalog::bundled();
    let complex = StuntedLens::infinite_above(-16, Flavor::Full);
    let e1 = build_e1(&complex, &catalog, -16, 21).unwrap();
    let records = rule_differentials(&complex, &catalog, &e1).unwrap();
    let finite = StuntedLens::new(-16, 22, Flavor::Full).unwrap();
    let patterns = attaching_patterns(&finite).unwrap();

    let record_cells = |rule: &str| -> BTreeSet<i64> {
        records
            .iter()
            .filter(|r| r.rule_id == rule)
            .map(|r| r.source.cell)
            .collect()
    };
    let pattern_cells = |want: &dyn Fn(&lens::AttachingPattern) -> bool| -> BTreeSet<i64> {
        patterns
            .iter()
            .filter(|p| want(p))
            .map(|p| p.source_dim)
            .collect()
    };

    // d1 is multiplication by 3 off every even cell with a cell below it,
    // i.e. exactly the degree-3 attaching maps.
    assert_eq!(
        record_cells("d1-bockstein"),
        pattern_cells(&|p| p.class == AttachingClass::Three)
    );

    // d4 off the unit exists exactly where P1 acts on an odd cell 4 below.
    assert_eq!(
        record_cells("d4-unit"),
        pattern_cells(&|p| p.class == AttachingClass::Alpha1 && p.source_dim % 2 != 0)
    );

    // d8 off the unit into alpha2 exists exactly where the alpha2 span is
    // attached as a subcomplex.
    assert_eq!(
        record_cells("d8-alpha2"),
        pattern_cells(&|p| p.class == AttachingClass::Alpha2 && p.role == PatternRole::Subcomplex)
    );

    // Likewise d12 into the deep level-3 alpha class.
    assert_eq!(
        record_cells("d12-unit"),
        pattern_cells(
            &|p| p.class == AttachingClass::AlphaBar3 && p.role == PatternRole::Subcomplex
        )
    );
}
