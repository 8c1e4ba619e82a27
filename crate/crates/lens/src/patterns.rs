//! The table of proven attaching patterns in stunted lens spaces: which
//! subquotients of the form C3, Cα₁, Cα₂, Cᾱ₃ or one of the three-to-four
//! cell complexes T₁, T₂, T₃, Q₀ occur, and at which dimensions.
//!
//! Each pattern is a congruence family in the cell dimension; this module
//! materializes the instances inside a finite complex.

use serde::Serialize;

use crate::{steenrod_action, Flavor, LensError, SteenrodOp, StuntedLens};

/// The attaching class or small complex realized by a pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AttachingClass {
    /// Degree-3 map between adjacent cells (odd target).
    Three,
    /// α₁ ∈ π₃, spanning 4 dimensions, wherever P¹ acts.
    Alpha1,
    /// α₂ ∈ π₇, spanning 8 dimensions.
    Alpha2,
    /// ᾱ₃ ∈ π₁₁ of order 9, spanning 12 dimensions.
    AlphaBar3,
    /// Cells {0, −4, −5}: 3 on the lower pair, α₁ from the top.
    T1,
    /// Cells {0, −1, −5}: 3 on the upper pair, α₁ to the bottom.
    T2,
    /// Cells {0, −1, −4, −5}: two 3-attachments and two α₁-attachments.
    T3,
    /// Cells {0, 1, 4}: C3 and Cα₁ glued along the bottom cell.
    Q0,
}

/// How the pattern sits inside the ambient complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PatternRole {
    Subcomplex,
    Quotient,
    WedgeSummand,
    Subquotient,
}

/// One realized pattern: the span [target_dim, source_dim] inside the
/// ambient complex, with a coefficient where the class carries a
/// well-defined sign (the P¹ coefficient for α₁ spans; +1 elsewhere, where
/// the absolute sign is a convention, not data).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AttachingPattern {
    pub source_dim: i64,
    pub target_dim: i64,
    pub class: AttachingClass,
    pub role: PatternRole,
    pub coeff: i8,
    pub note: String,
}

/// Which wedge summand the dimension-k cell family around `k (mod 4)` lies
/// in; the 5-span T-complexes sit entirely inside one summand.
fn family_of(dim: i64) -> Flavor {
    if Flavor::BSigma3.contains(dim) {
        Flavor::BSigma3
    } else {
        Flavor::X
    }
}

fn admits(flavor: Flavor, family: Flavor) -> bool {
    flavor == Flavor::Full || flavor == family
}

/// All proven attaching patterns whose span lies inside the (finite)
/// complex. Sorted by target dimension, then source dimension.
pub fn attaching_patterns(s: &StuntedLens) -> Result<Vec<AttachingPattern>, LensError> {
    let cells = s.cells()?;
    let (&n, &m) = match (cells.first(), cells.last()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Ok(Vec::new()),
    };
    let in_complex = |d: i64| d >= n && d <= m && s.flavor.contains(d);
    let mut out = Vec::new();

    for t in n..=m {
        // Degree-3 attachment: the two-cell complex on {t, t+1}, t odd, is
        // the mod-3 Moore spectrum (the Bockstein acts across the pair).
        if t % 2 != 0 && in_complex(t) && in_complex(t + 1) {
            out.push(AttachingPattern {
                source_dim: t + 1,
                target_dim: t,
                class: AttachingClass::Three,
                role: PatternRole::Subquotient,
                coeff: 1,
                note: format!(
                    "beta acts from the cell in dimension {} to dimension {}",
                    t,
                    t + 1
                ),
            });
        }
        // α₁ attachment wherever P¹ acts across a 4-span.
        if in_complex(t) && in_complex(t + 4) {
            if let Some((c, _)) = steenrod_action(t, SteenrodOp::P1) {
                out.push(AttachingPattern {
                    source_dim: t + 4,
                    target_dim: t,
                    class: AttachingClass::Alpha1,
                    role: PatternRole::Subquotient,
                    coeff: c,
                    note: format!(
                        "P1 acts with coefficient {} from dimension {} to {}",
                        c,
                        t,
                        t + 4
                    ),
                });
            }
        }
        // Q₀-shape: cells {t, t+1, t+4} with both a Bockstein and a P¹
        // emanating from the bottom cell.
        if t % 2 != 0
            && in_complex(t)
            && in_complex(t + 1)
            && in_complex(t + 4)
            && steenrod_action(t, SteenrodOp::P1).is_some()
        {
            out.push(AttachingPattern {
                source_dim: t + 4,
                target_dim: t,
                class: AttachingClass::Q0,
                role: PatternRole::Subquotient,
                coeff: 1,
                note: format!(
                    "cells {{{}, {}, {}}} carry both a 3- and an alpha1-attachment onto the bottom cell",
                    t,
                    t + 1,
                    t + 4
                ),
            });
        }
        // T-complexes occupy the 5-span [k−5, k]; classified by k mod 12.
        let k = t + 5;
        if k <= m && in_complex(t) && admits(s.flavor, family_of(k)) {
            let class = match k.rem_euclid(12) {
                0 | 6 => Some((AttachingClass::T1, PatternRole::Quotient)),
                4 | 10 => Some((AttachingClass::T2, PatternRole::Subcomplex)),
                8 | 2 => Some((AttachingClass::T3, PatternRole::WedgeSummand)),
                _ => None,
            };
            if let Some((class, role)) = class {
                out.push(AttachingPattern {
                    source_dim: k,
                    target_dim: t,
                    class,
                    role,
                    coeff: 1,
                    note: format!(
                        "top dimension {} is {} mod 12, placing a {:?} on the span [{}, {}]",
                        k,
                        k.rem_euclid(12),
                        class,
                        t,
                        k
                    ),
                });
            }
        }
        // α₂ spans (8 dimensions): quotient complexes at even bottoms
        // t ≡ 12, 24 (mod 36) in the BΣ₃ family, t ≡ 6, 30 in X;
        // subcomplexes at odd bottoms t ≡ 3, 15 (mod 36) in BΣ₃,
        // t ≡ 21, 33 in X.
        if in_complex(t) && in_complex(t + 8) {
            let role = match t.rem_euclid(36) {
                12 | 24 | 6 | 30 => Some(PatternRole::Quotient),
                3 | 15 | 21 | 33 => Some(PatternRole::Subcomplex),
                _ => None,
            };
            if let Some(role) = role {
                if admits(s.flavor, family_of(t)) {
                    out.push(AttachingPattern {
                        source_dim: t + 8,
                        target_dim: t,
                        class: AttachingClass::Alpha2,
                        role,
                        coeff: 1,
                        note: format!(
                            "bottom dimension {} is {} mod 36: an alpha2-attachment spans [{}, {}]",
                            t,
                            t.rem_euclid(36),
                            t,
                            t + 8
                        ),
                    });
                }
            }
        }
        // ᾱ₃ spans (12 dimensions): quotients at t ≡ 36, 72 (mod 108) in the
        // BΣ₃ family and t ≡ 18, 90 in X; subcomplexes at t ≡ 23, 59 in BΣ₃
        // and t ≡ 5, 77 in X.
        if in_complex(t) && in_complex(t + 12) {
            let role = match t.rem_euclid(108) {
                36 | 72 | 18 | 90 => Some(PatternRole::Quotient),
                23 | 59 | 5 | 77 => Some(PatternRole::Subcomplex),
                _ => None,
            };
            if let Some(role) = role {
                if admits(s.flavor, family_of(t)) {
                    out.push(AttachingPattern {
                        source_dim: t + 12,
                        target_dim: t,
                        class: AttachingClass::AlphaBar3,
                        role,
                        coeff: 1,
                        note: format!(
                            "bottom dimension {} is {} mod 108: an alphabar3-attachment spans [{}, {}]",
                            t,
                            t.rem_euclid(108),
                            t,
                            t + 12
                        ),
                    });
                }
            }
        }
    }
    out.sort_by_key(|p| (p.target_dim, p.source_dim));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn patterns(n: i64, m: i64, flavor: Flavor) -> Vec<AttachingPattern> {
        attaching_patterns(&StuntedLens::new(n, m, flavor).unwrap()).unwrap()
    }

    fn has(
        ps: &[AttachingPattern],
        target: i64,
        source: i64,
        class: AttachingClass,
    ) -> bool {
        ps.iter()
            .any(|p| p.target_dim == target && p.source_dim == source && p.class == class)
    }

    #[test]
    fn single_cell_has_no_patterns() {
        assert!(patterns(3, 3, Flavor::Full).is_empty());
    }

    #[test]
    fn five_span_t_complexes_by_residue() {
        assert!(has(&patterns(-5, 0, Flavor::Full), -5, 0, AttachingClass::T1));
        assert!(has(&patterns(-1, 4, Flavor::Full), -1, 4, AttachingClass::T2));
        assert!(has(&patterns(3, 8, Flavor::Full), 3, 8, AttachingClass::T3));
        // T₁ at top 0 lives in the BΣ₃ family, so X sees none.
        assert!(!has(&patterns(-5, 0, Flavor::X), -5, 0, AttachingClass::T1));
        assert!(has(
            &patterns(-5, 0, Flavor::BSigma3),
            -5,
            0,
            AttachingClass::T1
        ));
        // Top 6 swaps families.
        assert!(has(&patterns(1, 6, Flavor::X), 1, 6, AttachingClass::T1));
    }

    #[test]
    fn alpha2_congruences() {
        // Quotient at bottom 12 in the BΣ₃ family.
        assert!(has(
            &patterns(12, 20, Flavor::BSigma3),
            12,
            20,
            AttachingClass::Alpha2
        ));
        // Subcomplex at bottom 3 (= 12 − 9).
        assert!(has(
            &patterns(3, 11, Flavor::BSigma3),
            3,
            11,
            AttachingClass::Alpha2
        ));
        // X family at bottom 6.
        assert!(has(&patterns(6, 14, Flavor::X), 6, 14, AttachingClass::Alpha2));
        // Nothing at bottom 0 (the bottom cell splits there).
        assert!(!has(
            &patterns(0, 8, Flavor::BSigma3),
            0,
            8,
            AttachingClass::Alpha2
        ));
    }

    #[test]
    fn alphabar3_congruences() {
        assert!(has(
            &patterns(36, 48, Flavor::BSigma3),
            36,
            48,
            AttachingClass::AlphaBar3
        ));
        assert!(has(
            &patterns(23, 35, Flavor::BSigma3),
            23,
            35,
            AttachingClass::AlphaBar3
        ));
        assert!(has(
            &patterns(-90, -78, Flavor::X),
            -90,
            -78,
            AttachingClass::AlphaBar3
        ));
        assert!(!has(
            &patterns(0, 12, Flavor::BSigma3),
            0,
            12,
            AttachingClass::AlphaBar3
        ));
    }

    #[test]
    fn splitting_forbids_patterns_onto_the_bottom_cell() {
        // Whenever the bottom cell splits off, no pattern may use it as a
        // target (sweep over a window of bottoms and lengths).
        for n in -40..=40 {
            for len in 1..=13 {
                for flavor in [Flavor::Full, Flavor::BSigma3, Flavor::X] {
                    let s = StuntedLens::new(n, n + len, flavor).unwrap();
                    let cells = s.cells().unwrap();
                    if cells.len() < 2 || cells[0] != n {
                        continue;
                    }
                    if s.bottom_cell_splits().unwrap() {
                        let ps = attaching_patterns(&s).unwrap();
                        assert!(
                            ps.iter().all(|p| p.target_dim != n),
                            "split bottom {} of length {} ({:?}) is a pattern target",
                            n,
                            len,
                            flavor
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn patterns_repeat_under_james_periodicity() {
        // Congruences have period dividing 108 in the bottom dimension, and
        // 2·108 keeps the wedge families aligned.
        for n in -30..=30 {
            for len in 4..=13 {
                let a = patterns(n, n + len, Flavor::Full);
                let b = patterns(n + 216, n + len + 216, Flavor::Full);
                assert_eq!(a.len(), b.len(), "window [{}, {}]", n, n + len);
                for (p, q) in a.iter().zip(&b) {
                    assert_eq!(p.class, q.class);
                    assert_eq!(p.target_dim + 216, q.target_dim);
                    assert_eq!(p.coeff, q.coeff);
                }
            }
        }
    }
}
