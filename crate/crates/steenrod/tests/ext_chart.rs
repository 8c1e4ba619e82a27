//! Full-range checks of the Lambda-algebra Ext engine against the bundled
//! chart, plus the cobar cross-oracle in low degrees.

use steenrod::adams::bundled_table;
use steenrod::{cobar, lambda};

/// Every (filtration, stem) slot with stem ≤ 35 and s ≤ 14 has exactly the
/// dimension the chart lists (classes plus the unit's tower at stem 0).
#[test]
fn lambda_ext_reproduces_bundled_chart() {
    let expected = bundled_table().expected_ext_dims(14, 35);
    for t in 0..=49u32 {
        let min_s = t.saturating_sub(35);
        let max_s = 14.min(t);
        if min_s > max_s {
            continue;
        }
        let dims = lambda::ext_dims_window(t, min_s, max_s);
        for (off, &got) in dims.iter().enumerate() {
            let s = min_s + off as u32;
            let stem = t - s;
            let want = expected.get(&(s, stem)).copied().unwrap_or(0);
            assert_eq!(
                got, want,
                "Ext dimension mismatch at filtration {}, stem {}",
                s, stem
            );
        }
    }
}

/// The two Ext models agree: dim H^{s,t}(cobar) = dim H^{s,t}(Λ) for t ≤ 20.
#[test]
fn cobar_and_lambda_dimensions_agree() {
    for t in 0..=20u32 {
        for s in 0..=(t.max(1)) {
            assert_eq!(
                cobar::homology_dim(s, t),
                lambda::ext_dim(s, t),
                "model disagreement at (s, t) = ({}, {})",
                s,
                t
            );
        }
    }
}

/// d² = 0 for both differentials, exhaustively for t ≤ 30.
#[test]
fn differentials_square_to_zero() {
    use steenrod::Lin;
    for t in 1..=30u32 {
        for s in 1..=t.min(12) {
            for w in lambda::admissible_basis(s, t) {
                let d = lambda::differential(&Lin::single(w.clone(), 1));
                assert!(
                    lambda::differential(&d).is_zero(),
                    "lambda d^2 != 0 on {:?}",
                    w
                );
            }
        }
    }
    for t in 1..=14u32 {
        for s in 1..=4u32 {
            for w in cobar::cobar_basis(s, t) {
                let d = cobar::cobar_differential(&w);
                assert!(cobar::differential(&d).is_zero(), "cobar d^2 != 0 on {:?}", w);
            }
        }
    }
}
