//! The proven differentials of the cellular spectral sequence, generated as
//! explicit records. Each record names its source and target class, the page
//! it lives on, and a congruence note; the runner applies every record
//! exactly once.

use grp3::GroupHom;
use lens::{Bound, Flavor, StuntedLens};
use stems::Catalog;

use crate::page::EPage;
use crate::AhssError;

/// A class on the page: cell, total stem, display name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Location {
    pub cell: i64,
    pub stem: i64,
    pub name: String,
}

/// Whether the differential is a theorem or only a possibility (the two
/// undecided late differentials that bound the trustworthy range).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleStatus {
    Proven,
    Potential,
}

/// One differential of the spectral sequence, up to multiplication by a
/// unit. First-page records act by 3 on a whole cellwise stem; later pages
/// act between single order-3 summands.
#[derive(Clone, Debug)]
pub struct DifferentialRecord {
    pub page: u32,
    pub source: Location,
    pub target: Location,
    /// The map on summands, up to a unit.
    pub hom: GroupHom,
    pub status: RuleStatus,
    pub rule_id: &'static str,
    pub note: String,
}

/// The alpha-family member of a given level: level 0 is the unit, level n is
/// the generator of the (4n−1)-stem; levels divisible by 3 carry both the
/// deep (bar) generator and its order-3 multiple.
pub fn alpha_name(level: u32, bar: bool) -> String {
    if level == 0 {
        "1".to_string()
    } else if bar {
        format!("alphabar{}", level)
    } else {
        format!("alpha{}", level)
    }
}

/// The family level of a display name, if it belongs to the alpha family
/// (including the unit); products like the betas return `None`.
pub fn alpha_level(name: &str) -> Option<u32> {
    if name == "1" {
        return Some(0);
    }
    for prefix in ["alphabar", "alpha"] {
        if let Some(rest) = name.strip_prefix(prefix) {
            return rest.parse().ok();
        }
    }
    None
}

fn unit_hom() -> GroupHom {
    GroupHom::new(
        grp3::FinAbelian3Group::cyclic(1),
        grp3::FinAbelian3Group::cyclic(1),
        vec![vec![1]],
    )
    .expect("identity on Z/3")
}

struct Gen<'a> {
    complex: &'a StuntedLens,
    catalog: &'a Catalog,
    page: &'a EPage,
    bottom_param: i64,
    out: Vec<DifferentialRecord>,
}

impl Gen<'_> {
    fn in_complex(&self, cell: i64) -> bool {
        cell >= self.page.bottom && self.complex.flavor.contains(cell)
    }

    /// Source-stem window for rule differentials: the reported stems plus
    /// one above, so that kills landing in the top reported stem are seen.
    fn source_stem_ok(&self, stem: i64) -> bool {
        stem >= self.page.smin && stem <= self.page.smax + 1
    }

    /// The lowest cell of the wedge summand (cells 0, 3 mod 4 versus 1, 2
    /// mod 4) containing the given cell.
    fn summand_lowest(&self, cell: i64) -> i64 {
        let f = match self.complex.flavor {
            Flavor::Full => {
                if matches!(cell.rem_euclid(4), 0 | 3) {
                    Flavor::BSigma3
                } else {
                    Flavor::X
                }
            }
            f => f,
        };
        (self.bottom_param..self.bottom_param + 4)
            .find(|&c| f.contains(c))
            .expect("every summand has a cell within four dimensions")
    }

    /// The strict bound of the Leibniz differentials: the target must lie
    /// strictly above the bottom of some full complex whose wedge summand
    /// agrees with the target's. When the summand's lowest cell is odd, the
    /// full complex one cell deeper has the same summand, so a target on
    /// the bottom cell itself is still allowed; on an even bottom cell it
    /// is not.
    fn strict_ok(&self, target: i64) -> bool {
        let lo = self.summand_lowest(target);
        target > lo || (target == lo && lo.rem_euclid(2) == 1)
    }

    /// Cells of the complex carrying the given classical stem inside the
    /// source window.
    fn source_cells(&self, class_stem: u32) -> Vec<i64> {
        let c = i64::from(class_stem);
        let lo = (self.page.smin - c).max(self.page.bottom);
        let hi = self.page.smax + 1 - c;
        self.complex.cells_in(lo, hi)
    }

    fn push(
        &mut self,
        page: u32,
        (src_name, src_stem): (String, u32),
        cell: i64,
        (tgt_name, tgt_stem): (String, u32),
        status: RuleStatus,
        rule_id: &'static str,
        note: String,
    ) {
        let drop = i64::from(page);
        self.out.push(DifferentialRecord {
            page,
            source: Location {
                cell,
                stem: i64::from(src_stem) + cell,
                name: src_name,
            },
            target: Location {
                cell: cell - drop,
                stem: i64::from(tgt_stem) + cell - drop,
                name: tgt_name,
            },
            hom: unit_hom(),
            status,
            rule_id,
            note,
        });
    }

    /// First differential: multiplication by 3 from every even cell onto
    /// the odd cell below, one record per cellwise stem.
    fn d1(&mut self) {
        let mut keys: Vec<(i64, i64)> = Vec::new();
        for &(k, s) in self.page.entries.keys() {
            if k % 2 == 0 && self.in_complex(k - 1) {
                // Outgoing from a tracked even cell ...
                keys.push((k, s));
            }
            if k.rem_euclid(2) == 1 {
                // ... and incoming onto a tracked odd cell (whose source
                // stem may sit just above the tracked window).
                keys.push((k + 1, s + 1));
            }
        }
        keys.sort_unstable();
        keys.dedup();
        for (k, s) in keys {
            let c = s - k;
            if !(0..=i64::from(stems::MAX_STEM)).contains(&c) {
                continue;
            }
            let group = self.catalog.pi_cl(c as u32).expect("range checked");
            if group.is_zero() {
                continue;
            }
            self.out.push(DifferentialRecord {
                page: 1,
                source: Location {
                    cell: k,
                    stem: s,
                    name: format!("pi{}", c),
                },
                target: Location {
                    cell: k - 1,
                    stem: s - 1,
                    name: format!("pi{}", c),
                },
                hom: GroupHom::mult_by(group, 3),
                status: RuleStatus::Proven,
                rule_id: "d1-bockstein",
                note: format!(
                    "the two-cell complex on dimensions {} and {} is a mod-3 Moore spectrum, so the first differential multiplies the {}-stem by 3",
                    k - 1, k, c
                ),
            });
        }
    }

    /// d4 off the unit class, wherever a P¹ acts across the 4-span below.
    fn d4_unit(&mut self) {
        for k in self.source_cells(0) {
            if matches!(k.rem_euclid(12), 1 | 3 | 7 | 9) && self.in_complex(k - 4) {
                self.push(
                    4,
                    ("1".into(), 0),
                    k,
                    ("alpha1".into(), 3),
                    RuleStatus::Proven,
                    "d4-unit",
                    format!("cell {} is attached to cell {} by alpha1", k, k - 4),
                );
            }
        }
    }

    /// d4 on the beta-family classes along the same alpha1 attachments.
    fn d4_beta(&mut self) {
        let lines: [(&str, u32, &str, u32); 4] = [
            ("beta1", 10, "beta1alpha1", 13),
            ("beta1^2", 20, "beta1^2alpha1", 23),
            ("beta2", 26, "beta2alpha1", 29),
            ("x37", 37, "beta1^4", 40),
        ];
        for (src, cs, tgt, ct) in lines {
            for k in self.source_cells(cs) {
                if matches!(k.rem_euclid(12), 0 | 1 | 2 | 3 | 6 | 7 | 8 | 9)
                    && self.in_complex(k - 4)
                {
                    self.push(
                        4,
                        (src.into(), cs),
                        k,
                        (tgt.into(), ct),
                        RuleStatus::Proven,
                        "d4-beta",
                        format!(
                            "the alpha1 attachment under cell {} multiplies {} into {}",
                            k, src, tgt
                        ),
                    );
                }
            }
        }
    }

    /// d5 on the alpha family over the three-to-four cell 5-span complexes;
    /// the firing congruence depends on the level mod 3.
    fn d5_alpha(&mut self) {
        for n in 1u32..=9 {
            let (cong, bar): (&[i64], bool) = match n % 3 {
                1 => (&[0, 4, 6, 10], false),
                2 => (&[0, 2, 6, 8], true),
                _ => (&[2, 4, 8, 10], false),
            };
            let cs = 4 * n - 1;
            let ct = 4 * (n + 1) - 1;
            for k in self.source_cells(cs) {
                if k % 2 == 0 && cong.contains(&k.rem_euclid(12)) && self.in_complex(k - 5) {
                    self.push(
                        5,
                        (alpha_name(n, false), cs),
                        k,
                        (alpha_name(n + 1, bar), ct),
                        RuleStatus::Proven,
                        "d5-alpha",
                        format!(
                            "level-{} alpha class over the 5-span [{}, {}] (top dimension {} mod 12)",
                            n, k - 5, k, k.rem_euclid(12)
                        ),
                    );
                }
            }
        }
    }

    /// d8 off alpha1 onto beta1 (a triple-bracket differential).
    fn d8_unit(&mut self) {
        for k in self.source_cells(3) {
            if matches!(k.rem_euclid(12), 1 | 7) && self.in_complex(k - 8) {
                self.push(
                    8,
                    ("alpha1".into(), 3),
                    k,
                    ("beta1".into(), 10),
                    RuleStatus::Proven,
                    "d8-unit",
                    format!(
                        "the triple bracket of alpha1 with itself over the 8-span under cell {}",
                        k
                    ),
                );
            }
        }
    }

    /// d8 ladder on the beta-times-alpha1 classes.
    fn d8_ladder(&mut self) {
        let lines: [(&str, u32, &str, u32); 3] = [
            ("beta1alpha1", 13, "beta1^2", 20),
            ("beta1^2alpha1", 23, "beta1^3", 30),
            ("beta1^3", 30, "x37", 37),
        ];
        for (src, cs, tgt, ct) in lines {
            for k in self.source_cells(cs) {
                if matches!(k.rem_euclid(12), 0 | 1 | 6 | 7) && self.in_complex(k - 8) {
                    self.push(
                        8,
                        (src.into(), cs),
                        k,
                        (tgt.into(), ct),
                        RuleStatus::Proven,
                        "d8-ladder",
                        format!("bracket ladder step {} -> {} under cell {}", src, tgt, k),
                    );
                }
            }
        }
    }

    /// d8 off the unit onto alpha2, over the 8-span alpha2 attachments.
    fn d8_alpha2(&mut self) {
        for k in self.source_cells(0) {
            if matches!(k.rem_euclid(36), 5 | 11 | 23 | 29) && self.in_complex(k - 8) {
                self.push(
                    8,
                    ("1".into(), 0),
                    k,
                    ("alpha2".into(), 7),
                    RuleStatus::Proven,
                    "d8-alpha2",
                    format!(
                        "an alpha2 attachment spans [{}, {}] (cell {} is {} mod 36)",
                        k - 8, k, k, k.rem_euclid(36)
                    ),
                );
            }
        }
    }

    /// d9 by the Leibniz rule: the whole alpha ladder under a top cell that
    /// is 6, 12, 24 or 30 mod 36 fires two levels up, strictly above the
    /// declared bottom.
    fn d9_leibniz(&mut self) {
        for n in 1u32..=8 {
            let cs = 4 * n - 1;
            let ct = 4 * (n + 2) - 1;
            let bar = n % 3 == 1;
            for m in self.source_cells(cs) {
                let top = m + 4 * i64::from(n);
                if matches!(top.rem_euclid(36), 6 | 12 | 24 | 30)
                    && self.in_complex(m - 9)
                    && self.strict_ok(m - 9)
                {
                    self.push(
                        9,
                        (alpha_name(n, false), cs),
                        m,
                        (alpha_name(n + 2, bar), ct),
                        RuleStatus::Proven,
                        "d9-leibniz",
                        format!(
                            "Leibniz stretch of the ladder under top cell {} ({} mod 36)",
                            top, top.rem_euclid(36)
                        ),
                    );
                }
            }
        }
    }

    /// d12 off the unit onto the deep level-3 alpha class.
    fn d12_unit(&mut self) {
        for k in self.source_cells(0) {
            if matches!(k.rem_euclid(108), 17 | 35 | 71 | 89) && self.in_complex(k - 12) {
                self.push(
                    12,
                    ("1".into(), 0),
                    k,
                    ("alphabar3".into(), 11),
                    RuleStatus::Proven,
                    "d12-unit",
                    format!(
                        "a 12-span attachment by the order-9 level-3 alpha class under cell {}",
                        k
                    ),
                );
            }
        }
    }

    /// d13 by the Leibniz rule, proven for top cells 18 and 36 over bottoms
    /// down to −16.
    fn d13_leibniz(&mut self) {
        for top in [18i64, 36] {
            for n in 1u32..=7 {
                let m = top - 4 * i64::from(n);
                let cs = 4 * n - 1;
                let ct = 4 * (n + 3) - 1;
                let bar = n % 3 == 0;
                let src_stem = i64::from(cs) + m;
                if self.source_stem_ok(src_stem)
                    && self.in_complex(m)
                    && self.in_complex(m - 13)
                    && self.strict_ok(m - 13)
                {
                    self.push(
                        13,
                        (alpha_name(n, false), cs),
                        m,
                        (alpha_name(n + 3, bar), ct),
                        RuleStatus::Proven,
                        "d13-leibniz",
                        format!("Leibniz stretch of the ladder under top cell {}", top),
                    );
                }
            }
        }
    }

    /// The late d17-differentials from beta1 to beta2: four proven, two
    /// undecided (these two bound the trustworthy stem range).
    fn d17(&mut self) {
        let cases: [(i64, RuleStatus); 6] = [
            (16, RuleStatus::Proven),
            (28, RuleStatus::Proven),
            (34, RuleStatus::Proven),
            (10, RuleStatus::Proven),
            (4, RuleStatus::Potential),
            (22, RuleStatus::Potential),
        ];
        for (k, status) in cases {
            if self.source_stem_ok(10 + k) && self.in_complex(k) && self.in_complex(k - 17) {
                self.push(
                    17,
                    ("beta1".into(), 10),
                    k,
                    ("beta2".into(), 26),
                    status,
                    "d17-beta",
                    match status {
                        RuleStatus::Proven => format!(
                            "beta1 on cell {} hits beta2 seventeen cells below",
                            k
                        ),
                        RuleStatus::Potential => format!(
                            "beta1 on cell {} may or may not hit beta2; undecided",
                            k
                        ),
                    },
                );
            }
        }
    }

    /// The d24-differentials from alpha2 to the beta1 cube, via the 5-fold
    /// bracket of alternating alpha classes.
    fn d24(&mut self) {
        for k in [27i64, 9, 45] {
            if self.source_stem_ok(7 + k) && self.in_complex(k) && self.in_complex(k - 24) {
                self.push(
                    24,
                    ("alpha2".into(), 7),
                    k,
                    ("beta1^3".into(), 30),
                    RuleStatus::Proven,
                    "d24-alpha2",
                    format!(
                        "the 5-fold alternating bracket carries alpha2 on cell {} to the beta1 cube",
                        k
                    ),
                );
            }
        }
    }
}

/// All differential records of the complex for the page's stem window. The
/// specific-cell rules on pages 13, 17 and 24 are only proven for bottoms
/// down to −16; deeper complexes are refused.
pub fn rule_differentials(
    complex: &StuntedLens,
    catalog: &Catalog,
    page: &EPage,
) -> Result<Vec<DifferentialRecord>, AhssError> {
    let bottom_param = match complex.bottom {
        Bound::Finite(b) => b,
        _ => return Err(AhssError::Empty),
    };
    if bottom_param < -16 {
        return Err(AhssError::BottomOutOfRange(bottom_param, "d13-leibniz"));
    }
    let mut gen = Gen {
        complex,
        catalog,
        page,
        bottom_param,
        out: Vec::new(),
    };
    gen.d1();
    gen.d4_unit();
    gen.d4_beta();
    gen.d5_alpha();
    gen.d8_unit();
    gen.d8_ladder();
    gen.d8_alpha2();
    gen.d9_leibniz();
    gen.d12_unit();
    gen.d13_leibniz();
    gen.d17();
    gen.d24();
    let mut out = gen.out;
    out.sort_by(|a, b| {
        (a.page, a.source.stem, a.source.cell, a.rule_id)
            .cmp(&(b.page, b.source.stem, b.source.cell, b.rule_id))
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::page::build_e1;
    use lens::Flavor;

    fn records(bottom: i64, flavor: Flavor, smax: i64) -> Vec<DifferentialRecord> {
        let cat = Catalog::bundled();
        let s = StuntedLens::infinite_above(bottom, flavor);
        let page = build_e1(&s, &cat, crate::lowest_cell(&s).unwrap(), smax).unwrap();
        rule_differentials(&s, &cat, &page).unwrap()
    }

    fn cells_of(records: &[DifferentialRecord], rule: &str, name: &str) -> Vec<i64> {
        records
            .iter()
            .filter(|r| r.rule_id == rule && r.source.name == name)
            .map(|r| r.source.cell)
            .collect()
    }

    #[test]
    fn d4_unit_congruences_on_the_thom_summand() {
        let rs = records(-16, Flavor::BSigma3, 21);
        assert_eq!(
            cells_of(&rs, "d4-unit", "1"),
            vec![-9, -5, 3, 7, 15, 19]
        );
    }

    #[test]
    fn d9_sources_on_the_thom_summand() {
        let rs = records(-16, Flavor::BSigma3, 21);
        assert_eq!(cells_of(&rs, "d9-leibniz", "alpha1"), vec![8]);
        assert_eq!(cells_of(&rs, "d9-leibniz", "alpha2"), vec![4]);
        assert_eq!(cells_of(&rs, "d9-leibniz", "alpha3"), vec![0]);
        assert_eq!(cells_of(&rs, "d9-leibniz", "alpha4"), vec![-4]);
        assert_eq!(cells_of(&rs, "d9-leibniz", "alpha5"), Vec::<i64>::new());
    }

    #[test]
    fn d13_runs_down_to_the_strict_bound_on_x() {
        let rs = records(-16, Flavor::X, 21);
        let d13: Vec<(i64, String)> = rs
            .iter()
            .filter(|r| r.rule_id == "d13-leibniz")
            .map(|r| (r.source.cell, r.target.name.clone()))
            .collect();
        assert_eq!(
            d13,
            vec![
                (-2, "alpha8".to_string()),
                (2, "alpha7".to_string()),
                (6, "alphabar6".to_string()),
                (10, "alpha5".to_string()),
                (14, "alpha4".to_string()),
            ]
        );
    }

    #[test]
    fn deep_bottoms_are_refused() {
        let cat = Catalog::bundled();
        let s = StuntedLens::infinite_above(-17, Flavor::Full);
        let page = build_e1(&s, &cat, -17, 0).unwrap();
        assert!(matches!(
            rule_differentials(&s, &cat, &page),
            Err(AhssError::BottomOutOfRange(-17, "d13-leibniz"))
        ));
    }

    #[test]
    fn potential_seventeens_are_flagged_as_such() {
        // The undecided pair with source cell 4 needs the bottom at -16 ...
        let rs = records(-16, Flavor::Full, 24);
        let pot: Vec<i64> = rs
            .iter()
            .filter(|r| r.status == RuleStatus::Potential)
            .map(|r| r.source.cell)
            .collect();
        assert_eq!(pot, vec![4]);
        // ... while the one with source cell 22 lives over any bottom at or
        // below its target cell 5.
        let rs = records(0, Flavor::Full, 33);
        let pot: Vec<i64> = rs
            .iter()
            .filter(|r| r.status == RuleStatus::Potential)
            .map(|r| r.source.cell)
            .collect();
        assert_eq!(pot, vec![22]);
    }
}
