//! The E₁-page model: every cell of the complex carries the classical
//! 3-primary stable stems, stored summand by summand with their catalog
//! generator names.

use std::collections::BTreeMap;

use lens::{Bound, StuntedLens};
use serde::Serialize;
use stems::{Catalog, ProductValue};

use crate::{lowest_cell, AhssError};

/// Order of one summand: the 3-adic tower Z₃ (only in stem 0 of a cell) or a
/// finite cyclic group of order 3^e.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Order {
    Tower,
    Finite(u32),
}

/// One cyclic summand of a cell's contribution: the subgroup of the
/// classical stem generated by 3^depth times the named catalog class. On the
/// E₁-page every depth is 0; the first differential leaves depth-(e−1)
/// kernels of the order-3^e summands on even cells.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub class: String,
    pub depth: u32,
    pub order: Order,
}

impl Summand {
    pub fn order_exp(&self) -> Option<u32> {
        match self.order {
            Order::Tower => None,
            Order::Finite(e) => Some(e),
        }
    }
}

/// The canonical name of 3^depth times a catalog class, resolved through the
/// recorded multiplication-by-3 facts (e.g. three times the order-9 lift of
/// the first alpha on a triple is the plain alpha class).
pub fn display_name(catalog: &Catalog, class: &str, depth: u32) -> String {
    let mut name = class.to_string();
    for _ in 0..depth {
        match catalog.product("3", &name) {
            Ok(ProductValue::Class { name: next, .. }) => name = next,
            _ => return format!("3^{}{}", depth, class),
        }
    }
    name
}

/// A page of the spectral sequence: summand lists per (cell, stem). Stems
/// `smin-1 ..= smax+1` are tracked so that differentials leaving and
/// entering the reported window `smin ..= smax` stay visible.
#[derive(Clone, Debug)]
pub struct EPage {
    /// Lowest cell of the complex.
    pub bottom: i64,
    pub smin: i64,
    pub smax: i64,
    pub entries: BTreeMap<(i64, i64), Vec<Summand>>,
}

impl EPage {
    pub fn tracked(&self, stem: i64) -> bool {
        stem >= self.smin - 1 && stem <= self.smax + 1
    }

    pub fn summands(&self, cell: i64, stem: i64) -> &[Summand] {
        self.entries
            .get(&(cell, stem))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Find a live summand by its display name.
    pub fn find(
        &self,
        catalog: &Catalog,
        cell: i64,
        stem: i64,
        name: &str,
    ) -> Option<usize> {
        self.summands(cell, stem)
            .iter()
            .position(|s| display_name(catalog, &s.class, s.depth) == name)
    }

    /// log₃ of the torsion order plus the tower count of one stem's column —
    /// the conserved quantity differentials must respect pairwise.
    pub fn stem_size(&self, stem: i64) -> (usize, u64) {
        let mut towers = 0;
        let mut torsion = 0;
        for ((_, s), list) in &self.entries {
            if *s != stem {
                continue;
            }
            for sm in list {
                match sm.order {
                    Order::Tower => towers += 1,
                    Order::Finite(e) => torsion += u64::from(e),
                }
            }
        }
        (towers, torsion)
    }
}

/// Build the E₁-page of an unbounded-above complex for the reported stem
/// window `smin ..= smax`. The classical input is the stems catalog; a
/// window that would need a classical stem beyond it is refused.
pub fn build_e1(
    complex: &StuntedLens,
    catalog: &Catalog,
    smin: i64,
    smax: i64,
) -> Result<EPage, AhssError> {
    if complex.top != Bound::PosInf {
        return Err(AhssError::BoundedAbove);
    }
    let bottom = lowest_cell(complex)?;
    let deepest = (smax + 1) - bottom;
    if deepest > i64::from(stems::MAX_STEM) {
        return Err(AhssError::StemOutOfCatalog(deepest));
    }
    let mut entries = BTreeMap::new();
    for s in (smin - 1)..=(smax + 1) {
        for k in complex.cells_in(bottom, s) {
            let c = s - k;
            debug_assert!((0..=i64::from(stems::MAX_STEM)).contains(&c));
            let list = stem_summands(catalog, c as u32);
            if !list.is_empty() {
                entries.insert((k, s), list);
            }
        }
    }
    Ok(EPage {
        bottom,
        smin,
        smax,
        entries,
    })
}

/// The classical stem as a list of named summands: the 0-stem is the tower,
/// positive stems split along their catalog generators (whose orders are
/// validated to exhaust the group).
fn stem_summands(catalog: &Catalog, c: u32) -> Vec<Summand> {
    if c == 0 {
        return vec![Summand {
            class: "1".into(),
            depth: 0,
            order: Order::Tower,
        }];
    }
    let Some(entry) = catalog.stem_entry(c) else {
        return Vec::new();
    };
    entry
        .generators
        .iter()
        .map(|g| {
            let exp = catalog.class(g).expect("validated generator").order_exp;
            Summand {
                class: g.clone(),
                depth: 0,
                order: Order::Finite(exp),
            }
        })
        .collect()
}

/// Kernel of multiplication by 3 on a cell's summand list (the fate of an
/// even cell supporting the first differential): towers inject, so they
/// vanish; an order-3^e summand leaves its depth-(e−1) subgroup of order 3.
pub fn d1_kernel(list: &[Summand]) -> Vec<Summand> {
    list.iter()
        .filter_map(|s| match s.order {
            Order::Tower => None,
            Order::Finite(e) => Some(Summand {
                class: s.class.clone(),
                depth: s.depth + (e - 1),
                order: Order::Finite(1),
            }),
        })
        .collect()
}

/// Cokernel of multiplication by 3 (the fate of an odd cell receiving the
/// first differential): every summand, tower or finite, is reduced to the
/// order-3 quotient spanned by its generator.
pub fn d1_cokernel(list: &[Summand]) -> Vec<Summand> {
    list.iter()
        .map(|s| Summand {
            class: s.class.clone(),
            depth: s.depth,
            order: Order::Finite(1),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use lens::Flavor;

    #[test]
    fn e1_of_the_full_complex_over_minus_four() {
        let cat = Catalog::bundled();
        let s = StuntedLens::infinite_above(-4, Flavor::Full);
        let page = build_e1(&s, &cat, -4, 5).unwrap();
        // Stem 0: towers on cells -4 .. 0.
        assert_eq!(page.summands(0, 0)[0].order, Order::Tower);
        assert_eq!(page.summands(-4, -4)[0].order, Order::Tower);
        // Stem 3 on cell 0 is the first alpha.
        assert_eq!(page.summands(0, 3)[0].class, "alpha1");
        // Nothing below the bottom cell or above the stem line.
        assert!(page.summands(-5, -5).is_empty());
        assert!(page.summands(4, 3).is_empty());
    }

    #[test]
    fn window_too_deep_for_the_catalog_is_refused() {
        let cat = Catalog::bundled();
        let s = StuntedLens::infinite_above(-16, Flavor::Full);
        assert!(matches!(
            build_e1(&s, &cat, -16, 25),
            Err(AhssError::StemOutOfCatalog(42))
        ));
        assert!(build_e1(&s, &cat, -16, 24).is_ok());
    }

    #[test]
    fn d1_kernel_and_cokernel_shapes() {
        let cat = Catalog::bundled();
        let nine = stem_summands(&cat, 11);
        // Z/9 on an even cell leaves its order-3 subgroup, renamed.
        let ker = d1_kernel(&nine);
        assert_eq!(ker[0].depth, 1);
        assert_eq!(display_name(&cat, &ker[0].class, ker[0].depth), "alpha3");
        // On an odd cell the order-3 quotient keeps the generator's name.
        let coker = d1_cokernel(&nine);
        assert_eq!(coker[0].depth, 0);
        assert_eq!(coker[0].order, Order::Finite(1));
        // Towers die on even cells, abut to Z/3 on odd ones.
        let zero = stem_summands(&cat, 0);
        assert!(d1_kernel(&zero).is_empty());
        assert_eq!(d1_cokernel(&zero)[0].order, Order::Finite(1));
    }

    #[test]
    fn deep_rename_walks_the_multiplication_facts() {
        let cat = Catalog::bundled();
        assert_eq!(display_name(&cat, "alphabar9", 2), "alpha9");
        assert_eq!(display_name(&cat, "alphabar9", 1), "3alphabar9");
        assert_eq!(display_name(&cat, "alphabar6", 1), "alpha6");
        assert_eq!(display_name(&cat, "beta1", 0), "beta1");
    }
}
