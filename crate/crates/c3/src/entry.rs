//! One spoke-graded stem: the isotropy separation sequence glues a
//! classical stem (geometric fixed points) to the homotopy of a stunted
//! lens space (Borel part) along a boundary map. In the validated window
//! the sequence is split everywhere, so each group is the direct sum of a
//! cokernel on the lens side and a kernel on the fixed-point side.

use ahss::{Generator, GeneratorOrder};
use grp3::{FinAbelian3Group, GroupHom};
use stems::Catalog;

use crate::column::WeightColumn;
use crate::{C3Error, STEM_MAX};

/// Position `(i, j)`: stem `i`, weight `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bidegree {
    pub i: i64,
    pub j: i64,
}

/// The value of the boundary map out of the classical stems into lens
/// stem `i - j` at weight `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryKind {
    /// The boundary vanishes (zero source, norm-split range, or the
    /// determined window away from the two nonzero families).
    Zero,
    /// Weight >= 1, lens stem -1: the 3-adic unit tower surjects onto the
    /// multiplication-by-3 chain rooted on the (-1)-cell, sending 3^k to
    /// the k-th alpha attaching class.
    UnitChainProjection,
    /// Weight 8..=16, lens stem 2: the first alpha class maps
    /// isomorphically onto the first beta class on cell -8.
    AlphaOneToBetaOne,
    /// Outside the window where the boundary has been determined. Never
    /// silently zero.
    Unknown,
}

/// Classify the boundary map into lens stem `i - j` at weight `j`.
pub fn boundary_kind(i: i64, j: i64) -> BoundaryKind {
    let s = i - j;
    if s < -1 {
        // Source stem below zero: nothing to map.
        return BoundaryKind::Zero;
    }
    if s == -1 {
        if (1..=16).contains(&j) {
            return BoundaryKind::UnitChainProjection;
        }
        if j <= 0 {
            // The (-1)-cell is below the bottom: zero target.
            return BoundaryKind::Zero;
        }
        return BoundaryKind::Unknown;
    }
    if s == 2 && (8..=16).contains(&j) {
        return BoundaryKind::AlphaOneToBetaOne;
    }
    // Norm-split range: the sequence splits with zero boundary.
    if i < j - 1 || 2 * i > 3 * j {
        return BoundaryKind::Zero;
    }
    // Determined window: the boundary vanishes away from the two families.
    if (-1..=8).contains(&s) && (-16..=16).contains(&j) {
        return BoundaryKind::Zero;
    }
    BoundaryKind::Unknown
}

/// One generator of the Borel (lens) part of a spoke-graded stem.
#[derive(Clone, Debug)]
pub struct LensGenerator {
    pub name: String,
    /// Top cell of the class.
    pub cell: i64,
    pub order: GeneratorOrder,
    /// Smallest power of the spoke Euler class that kills the class:
    /// weight + cell + 1.
    pub a_spoke: u32,
    /// Whether restriction to the underlying classical stem is nonzero;
    /// `None` when the one-cell-deeper complex is out of range.
    pub res_nonzero: Option<bool>,
}

/// The geometric fixed-point contribution: a kernel inside the classical
/// stem `i - j`. It is free of the spoke Euler class and restricts to zero.
#[derive(Clone, Debug)]
pub struct PhiPart {
    pub stem: i64,
    pub group: FinAbelian3Group,
}

/// A spoke-graded equivariant stem, 3-complete, with its two summands.
#[derive(Clone, Debug)]
pub struct SpokeEntry {
    pub bidegree: Bidegree,
    /// The full 3-complete group: lens part plus fixed-point part.
    pub group3: FinAbelian3Group,
    pub lens_part: Vec<LensGenerator>,
    pub lens_group: FinAbelian3Group,
    pub phi_part: PhiPart,
    /// Symbolic classical-stem summands away from the prime 3: the
    /// (i-j)-stem always, and the i-stem as well for even weights.
    pub other_primes: Vec<String>,
}

fn pi3(catalog: &Catalog, s: i64) -> Result<FinAbelian3Group, C3Error> {
    if s < 0 {
        return Ok(FinAbelian3Group::zero());
    }
    let n = u32::try_from(s).expect("non-negative stem");
    Ok(catalog.pi_cl(n)?)
}

fn unit_chain_position(generators: &[Generator]) -> Option<usize> {
    generators
        .iter()
        .position(|g| g.chain.first().map(|(name, cell)| (name.as_str(), *cell)) == Some(("1", -1)))
}

fn beta_one_position(generators: &[Generator]) -> Option<usize> {
    generators
        .iter()
        .position(|g| g.name == "beta1" && g.cell == -8)
}

/// The spoke-graded stem `pi_{i,j}` over the column's weight.
pub fn c3_stem(catalog: &Catalog, column: &WeightColumn, i: i64) -> Result<SpokeEntry, C3Error> {
    let j = column.j;
    if i > STEM_MAX {
        return Err(C3Error::StemOutOfRange(i));
    }
    let s = i - j;

    // Cokernel of the boundary into lens stem s.
    let mut kept = column.generators(s);
    match boundary_kind(i, j) {
        BoundaryKind::Zero => {}
        BoundaryKind::UnitChainProjection => {
            let pos = unit_chain_position(&kept).ok_or_else(|| {
                C3Error::Internal(format!("no unit chain in lens stem -1 at weight {j}"))
            })?;
            kept.remove(pos);
        }
        BoundaryKind::AlphaOneToBetaOne => {
            let pos = beta_one_position(&kept).ok_or_else(|| {
                C3Error::Internal(format!("no beta1[-8] in lens stem 2 at weight {j}"))
            })?;
            kept.remove(pos);
        }
        BoundaryKind::Unknown => {
            return Err(C3Error::BoundaryUnknown { stem: s, weight: j });
        }
    }

    let mut free = 0usize;
    let mut cyclic = Vec::new();
    let mut lens_part = Vec::new();
    for g in &kept {
        match g.order {
            GeneratorOrder::Tower => free += 1,
            GeneratorOrder::Finite(e) => cyclic.push(e),
        }
        let a_spoke = u32::try_from(j + g.cell + 1).map_err(|_| {
            C3Error::Internal(format!("cell {} below the bottom at weight {j}", g.cell))
        })?;
        lens_part.push(LensGenerator {
            name: g.name.clone(),
            cell: g.cell,
            order: g.order,
            a_spoke,
            res_nonzero: column.res_nonzero(catalog, g, s),
        });
    }
    let lens_group = FinAbelian3Group::new(free, cyclic);

    // Kernel of the boundary out of the classical stem s (into lens
    // stem s - 1).
    let phi_group = match boundary_kind(i - 1, j) {
        BoundaryKind::Zero => pi3(catalog, s)?,
        // Kernel of the tower surjecting a finite cyclic group: a tower.
        BoundaryKind::UnitChainProjection => FinAbelian3Group::free(1),
        // The first alpha class maps injectively.
        BoundaryKind::AlphaOneToBetaOne => FinAbelian3Group::zero(),
        BoundaryKind::Unknown => {
            return Err(C3Error::BoundaryUnknown {
                stem: s - 1,
                weight: j,
            });
        }
    };

    let group3 = lens_group.direct_sum(&phi_group);
    let mut other_primes = Vec::new();
    if s >= 1 {
        other_primes.push(format!("pi_{s} away from 3"));
    }
    if j % 2 == 0 && i >= 1 {
        other_primes.push(format!("pi_{i} away from 3"));
    }

    Ok(SpokeEntry {
        bidegree: Bidegree { i, j },
        group3,
        lens_part,
        lens_group,
        phi_part: PhiPart {
            stem: s,
            group: phi_group,
        },
        other_primes,
    })
}

/// Row index of `generators[idx]` in the canonical presentation of the
/// assembled group (finite summands by descending exponent, then towers).
fn canonical_row(generators: &[Generator], idx: usize) -> usize {
    let mut order: Vec<usize> = (0..generators.len()).collect();
    order.sort_by_key(|&k| match generators[k].order {
        GeneratorOrder::Finite(e) => (0u8, u32::MAX - e),
        GeneratorOrder::Tower => (1, 0),
    });
    order
        .iter()
        .position(|&k| k == idx)
        .expect("index is in range")
}

/// The boundary map from the classical stem `i - j + 1` into lens stem
/// `i - j` at the column's weight, as an explicit homomorphism.
pub fn mahowald_boundary(
    catalog: &Catalog,
    column: &WeightColumn,
    i: i64,
) -> Result<GroupHom, C3Error> {
    let j = column.j;
    if i > STEM_MAX {
        return Err(C3Error::StemOutOfRange(i));
    }
    let s = i - j;
    let source = pi3(catalog, s + 1)?;
    let target = column.group(s);
    match boundary_kind(i, j) {
        BoundaryKind::Zero => Ok(GroupHom::zero(source, target)),
        BoundaryKind::UnitChainProjection => {
            let generators = column.generators(s);
            let idx = unit_chain_position(&generators).ok_or_else(|| {
                C3Error::Internal(format!("no unit chain in lens stem -1 at weight {j}"))
            })?;
            let row = canonical_row(&generators, idx);
            let cols = source.cyclic.len() + source.free_rank;
            let mut matrix = vec![vec![0; cols]; target.cyclic.len() + target.free_rank];
            matrix[row][0] = 1;
            Ok(GroupHom::new(source, target, matrix)?)
        }
        BoundaryKind::AlphaOneToBetaOne => {
            let generators = column.generators(s);
            let idx = beta_one_position(&generators).ok_or_else(|| {
                C3Error::Internal(format!("no beta1[-8] in lens stem 2 at weight {j}"))
            })?;
            let row = canonical_row(&generators, idx);
            let cols = source.cyclic.len() + source.free_rank;
            let mut matrix = vec![vec![0; cols]; target.cyclic.len() + target.free_rank];
            matrix[row][0] = 1;
            Ok(GroupHom::new(source, target, matrix)?)
        }
        BoundaryKind::Unknown => Err(C3Error::BoundaryUnknown { stem: s, weight: j }),
    }
}

/// The integral (non-completed) shape of a spoke-graded stem: the free
/// rank is determined by the bidegree alone, the 3-torsion is the computed
/// group, and the other primes stay symbolic.
#[derive(Clone, Debug)]
pub struct IntegralStem {
    pub free_rank: usize,
    pub torsion3: FinAbelian3Group,
    pub other_primes: Vec<String>,
}

pub fn integral_assembly(entry: &SpokeEntry) -> IntegralStem {
    let Bidegree { i, j } = entry.bidegree;
    let free_rank = if i == 0 && j == 0 {
        2
    } else if (i == 0 && j % 2 == 0) || (i == j) {
        1
    } else {
        0
    };
    assert_eq!(
        free_rank, entry.group3.free_rank,
        "free rank of pi_({i},{j}) disagrees with the torsion-free criterion"
    );
    IntegralStem {
        free_rank,
        torsion3: FinAbelian3Group::new(0, entry.group3.cyclic.clone()),
        other_primes: entry.other_primes.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_classification_covers_the_window() {
        // Unit-chain projection just below the diagonal, positive weights.
        assert_eq!(boundary_kind(5, 6), BoundaryKind::UnitChainProjection);
        assert_eq!(boundary_kind(-2, -1), BoundaryKind::Zero);
        // The alpha-to-beta family.
        assert_eq!(boundary_kind(10, 8), BoundaryKind::AlphaOneToBetaOne);
        assert_eq!(boundary_kind(9, 7), BoundaryKind::Zero);
        // Norm-split range.
        assert_eq!(boundary_kind(25, -16), BoundaryKind::Zero);
        assert_eq!(boundary_kind(20, 5), BoundaryKind::Zero);
        // Off the validated window the boundary is unknown, not zero.
        assert_eq!(boundary_kind(27, 18), BoundaryKind::Unknown);
    }

    #[test]
    fn every_grid_position_has_a_determined_boundary() {
        for j in -16i64..=16 {
            for i in -10i64..=25 {
                assert_ne!(
                    boundary_kind(i, j),
                    BoundaryKind::Unknown,
                    "boundary at ({i},{j}) should be determined"
                );
            }
        }
    }
}
