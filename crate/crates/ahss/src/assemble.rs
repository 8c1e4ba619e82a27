//! From the limit page to actual homotopy groups: the surviving summands of
//! a stem are linked by the hidden multiplication-by-3 extensions (the unit
//! tower feeds the first alpha three cells down, and each alpha feeds the
//! next level four cells down), and each linked chain contributes one cyclic
//! group whose order is the product of the orders along it.

use grp3::FinAbelian3Group;
use lens::StuntedLens;
use stems::Catalog;

use crate::page::{display_name, Order, Summand};
use crate::rules::alpha_level;
use crate::run::RunOutcome;
use crate::AhssError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorOrder {
    /// A full 3-adic tower (free rank 1).
    Tower,
    /// Cyclic of order 3^e.
    Finite(u32),
}

/// One cyclic generator of an assembled stem, with the chain of limit-page
/// classes it ties together (top cell first).
#[derive(Clone, Debug)]
pub struct Generator {
    pub name: String,
    pub cell: i64,
    pub order: GeneratorOrder,
    pub chain: Vec<(String, i64)>,
}

/// A homotopy group of the complex in one total stem.
#[derive(Clone, Debug)]
pub struct AssembledStem {
    pub stem: i64,
    pub group: FinAbelian3Group,
    pub generators: Vec<Generator>,
}

/// Bottom cells where the extension into the bottom class is joint: three
/// times the class one step above the bottom is the bottom generator's
/// triple plus an independent deep element, not the generator itself. Every
/// chain terminating on such a bottom cell then contributes
/// Z/3^{L-1} ⊕ Z/3 instead of Z/3^L (same total order, one extra summand).
const JOINT_BOTTOMS: [i64; 4] = [-12, -6, 6, 12];

pub(crate) struct Piece {
    pub cell: i64,
    pub name: String,
    pub level: Option<u32>,
    pub order: Order,
}

/// Surviving summands of one stem, highest cell first.
pub(crate) fn stem_pieces(
    catalog: &Catalog,
    entries: &std::collections::BTreeMap<(i64, i64), Vec<Summand>>,
    stem: i64,
) -> Vec<Piece> {
    let mut pieces: Vec<Piece> = entries
        .iter()
        .filter(|((_, s), _)| *s == stem)
        .flat_map(|((cell, _), list)| {
            list.iter().map(|sm| Piece {
                cell: *cell,
                name: display_name(catalog, &sm.class, sm.depth),
                level: summand_level(sm),
                order: sm.order,
            })
        })
        .collect();
    pieces.sort_by_key(|p| std::cmp::Reverse(p.cell));
    pieces
}

/// Hidden extension links among the pieces: `next[i]` is the piece three
/// times piece `i` lands on, one family level up and three (from the unit)
/// or four (between alphas) cells down. The split bottom cell of a complex
/// starting in dimension 0 receives none.
pub(crate) fn link_map(pieces: &[Piece], bottom: i64) -> Vec<Option<usize>> {
    let split_bottom = bottom == 0;
    let mut next: Vec<Option<usize>> = vec![None; pieces.len()];
    let mut incoming: Vec<bool> = vec![false; pieces.len()];
    for i in 0..pieces.len() {
        let Some(level) = pieces[i].level else { continue };
        if pieces[i].order == Order::Tower {
            continue;
        }
        let drop = if level == 0 { 3 } else { 4 };
        let target_cell = pieces[i].cell - drop;
        if split_bottom && target_cell == bottom {
            continue;
        }
        let hit = pieces
            .iter()
            .position(|p| p.cell == target_cell && p.level == Some(level + 1));
        if let Some(j) = hit {
            next[i] = Some(j);
            assert!(!incoming[j], "two extensions into one class");
            incoming[j] = true;
        }
    }
    next
}

/// The family level of a surviving summand, resolved through its base
/// catalog class so that deepened (renamed) alpha classes keep their level.
fn summand_level(s: &Summand) -> Option<u32> {
    alpha_level(&s.class)
}

/// Assemble one stem of the limit page into a homotopy group. Stems clouded
/// by an undecided differential are refused with the records responsible;
/// stems below the bottom cell are zero.
pub fn assemble_homotopy(
    complex: &StuntedLens,
    catalog: &Catalog,
    outcome: &RunOutcome,
    stem: i64,
) -> Result<AssembledStem, AhssError> {
    debug_assert_eq!(crate::lowest_cell(complex).ok(), Some(outcome.bottom));
    assert!(
        stem <= outcome.smax,
        "stem {} beyond the computed window {}",
        stem,
        outcome.smax
    );
    if let Some(indices) = outcome.ambiguous.get(&stem) {
        return Err(AhssError::Ambiguous {
            stem,
            records: indices
                .iter()
                .map(|&i| {
                    let r = &outcome.records[i];
                    format!(
                        "d{}: {}[{}] -> {}[{}]",
                        r.page, r.source.name, r.source.cell, r.target.name, r.target.cell
                    )
                })
                .collect(),
        });
    }
    if stem < outcome.smin {
        return Ok(AssembledStem {
            stem,
            group: FinAbelian3Group::zero(),
            generators: Vec::new(),
        });
    }

    let pieces = stem_pieces(catalog, outcome.e_infinity(), stem);
    let next = link_map(&pieces, outcome.bottom);
    let mut incoming = vec![false; pieces.len()];
    for n in next.iter().flatten() {
        incoming[*n] = true;
    }

    // Walk the chains from their tops.
    let mut generators: Vec<Generator> = Vec::new();
    let mut cyclic: Vec<u32> = Vec::new();
    let mut free_rank = 0usize;
    for top in 0..pieces.len() {
        if incoming[top] {
            continue;
        }
        if pieces[top].order == Order::Tower {
            free_rank += 1;
            generators.push(Generator {
                name: pieces[top].name.clone(),
                cell: pieces[top].cell,
                order: GeneratorOrder::Tower,
                chain: vec![(pieces[top].name.clone(), pieces[top].cell)],
            });
            continue;
        }
        let mut chain = Vec::new();
        let mut total = 0u32;
        let mut i = top;
        loop {
            chain.push((pieces[i].name.clone(), pieces[i].cell));
            total += match pieces[i].order {
                Order::Finite(e) => e,
                Order::Tower => unreachable!("towers never sit inside a chain"),
            };
            match next[i] {
                Some(j) => i = j,
                None => break,
            }
        }

        let joint = JOINT_BOTTOMS.contains(&outcome.bottom)
            && chain.last().map(|c| c.1) == Some(outcome.bottom)
            && total >= 2;
        if joint {
            // 3·top lands on 3·(bottom generator) plus an independent deep
            // element: the top then generates Z/3^{L-1} and the complement
            // survives as a separate Z/3 (same total order).
            cyclic.push(total - 1);
            generators.push(Generator {
                name: pieces[top].name.clone(),
                cell: pieces[top].cell,
                order: GeneratorOrder::Finite(total - 1),
                chain: chain.clone(),
            });
            cyclic.push(1);
            let last = chain.last().expect("nonempty chain");
            generators.push(Generator {
                name: format!("{}'", last.0),
                cell: last.1,
                order: GeneratorOrder::Finite(1),
                chain: vec![last.clone()],
            });
        } else {
            cyclic.push(total);
            generators.push(Generator {
                name: pieces[top].name.clone(),
                cell: pieces[top].cell,
                order: GeneratorOrder::Finite(total),
                chain,
            });
        }
    }

    cyclic.sort_unstable_by(|a, b| b.cmp(a));
    Ok(AssembledStem {
        stem,
        group: FinAbelian3Group::new(free_rank, cyclic),
        generators,
    })
}
