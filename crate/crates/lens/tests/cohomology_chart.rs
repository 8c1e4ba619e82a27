//! The Steenrod action on the cohomology of the lens space in dimensions
//! 1–20, checked arc-by-arc against the reference A(1)-module chart
//! (Bocksteins between adjacent cells and the signed P¹ arcs).

use lens::{steenrod_action, SteenrodOp};

/// Every β-arc in dimensions 1..20: odd k maps to k+1 with coefficient +1.
#[test]
fn bockstein_arcs() {
    let arcs = [1, 3, 5, 7, 9, 11, 13, 15, 17, 19];
    for k in 1..=20i64 {
        let got = steenrod_action(k, SteenrodOp::Beta);
        if arcs.contains(&k) {
            assert_eq!(got, Some((1, k + 1)), "β on cell {}", k);
        } else {
            assert_eq!(got, None, "β on cell {}", k);
        }
    }
}

/// The signed P¹ arcs of the chart: (source, coefficient). Dashed arcs in
/// the chart carry −1. Cells without an arc must map to zero.
#[test]
fn p1_arcs_match_the_chart() {
    let arcs: &[(i64, i8)] = &[
        (2, 1),
        (3, 1),
        (4, -1),
        (5, -1),
        (8, 1),
        (9, 1),
        (10, -1),
        (11, -1),
        (14, 1),
        (15, 1),
        (16, -1),
    ];
    for k in 1..=16i64 {
        let expected = arcs
            .iter()
            .find(|(src, _)| *src == k)
            .map(|&(_, c)| (c, k + 4));
        assert_eq!(
            steenrod_action(k, SteenrodOp::P1),
            expected,
            "P¹ on cell {}",
            k
        );
    }
}

/// The action pattern is 18-periodic (ψ-periodicity of the Thom twist), so
/// the chart determines the action in all (including negative) dimensions.
#[test]
fn action_is_periodic() {
    for k in -100..=100i64 {
        assert_eq!(
            steenrod_action(k, SteenrodOp::Beta),
            steenrod_action(k + 6, SteenrodOp::Beta).map(|(c, t)| (c, t - 6))
        );
        assert_eq!(
            steenrod_action(k, SteenrodOp::P1),
            steenrod_action(k + 6, SteenrodOp::P1).map(|(c, t)| (c, t - 6))
        );
        assert_eq!(
            steenrod_action(k, SteenrodOp::P3),
            steenrod_action(k + 18, SteenrodOp::P3).map(|(c, t)| (c, t - 18))
        );
    }
}

/// Independent derivation of the congruence patterns: on the polynomial
/// generator, P^i(yˡ) = C(l, i)·yˡ⁺²ⁱ, so the P¹ coefficient must equal
/// C(l, 1) mod 3 and the P³ coefficient C(l, 3) mod 3.
#[test]
fn power_operations_agree_with_binomial_coefficients() {
    fn binom_mod3(n: i64, k: i64) -> i8 {
        // n choose k mod 3 by direct product arithmetic (n within range).
        let mut num: i128 = 1;
        let mut den: i128 = 1;
        for j in 0..k {
            num *= (n - j) as i128;
            den *= (j + 1) as i128;
        }
        ((num / den).rem_euclid(3)) as i8
    }
    for l in 3..=200i64 {
        for (op, i) in [(SteenrodOp::P1, 1), (SteenrodOp::P3, 3)] {
            let expected = match binom_mod3(l, i) {
                0 => None,
                1 => Some((1i8, 2 * l + 4 * i)),
                _ => Some((-1i8, 2 * l + 4 * i)),
            };
            assert_eq!(steenrod_action(2 * l, op), expected, "P^{} on y^{}", i, l);
        }
    }
}
