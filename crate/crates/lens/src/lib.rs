//! Structural model of stunted lens spaces (BC₃)ₙᵐ and their two wedge
//! summands: cell sets, the mod-3 Steenrod action on cohomology,
//! Spanier–Whitehead duality, James periodicity, cell-splitting predicates,
//! and the table of proven attaching patterns consumed by the spectral
//! sequence engine.
//!
//! Cells are indexed by their stable dimension. The full complex has one
//! cell in every dimension of its range; the wedge summand supported on
//! dimensions ≡ 0, 3 (mod 4) is a Thom spectrum over BΣ₃ and the complement
//! (dims ≡ 1, 2 mod 4) is the summand written X.

mod patterns;

pub use patterns::{attaching_patterns, AttachingClass, AttachingPattern, PatternRole};

use serde::Serialize;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LensError {
    #[error("empty cell range: bottom {0} above top {1}")]
    EmptyRange(i64, i64),
    #[error("operation needs a finite complex: {0}")]
    InfiniteRange(&'static str),
    #[error("not periodic: {0}")]
    NotPeriodic(String),
}

/// One end of a stunted complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Bound {
    NegInf,
    Finite(i64),
    PosInf,
}

impl Bound {
    pub fn finite(self) -> Option<i64> {
        match self {
            Bound::Finite(v) => Some(v),
            _ => None,
        }
    }
}

/// Which wedge summand of the full stunted lens space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Flavor {
    /// The whole complex: a cell in every dimension of the range.
    Full,
    /// The summand with cells in dimensions ≡ 0, 3 (mod 4).
    BSigma3,
    /// The complementary summand, cells in dimensions ≡ 1, 2 (mod 4).
    X,
}

impl Flavor {
    pub fn contains(self, dim: i64) -> bool {
        match self {
            Flavor::Full => true,
            Flavor::BSigma3 => matches!(dim.rem_euclid(4), 0 | 3),
            Flavor::X => matches!(dim.rem_euclid(4), 1 | 2),
        }
    }
}

/// Descriptor of a stunted lens space or one of its wedge summands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StuntedLens {
    pub bottom: Bound,
    pub top: Bound,
    pub flavor: Flavor,
}

/// A mod-3 Steenrod operation acting on the cohomology of the lens space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SteenrodOp {
    /// The Bockstein β (degree +1).
    Beta,
    /// P¹ (degree +4 on cell dimensions).
    P1,
    /// P³ (degree +12 on cell dimensions).
    P3,
}

/// 3^e as i64 (exponents stay small in this range).
fn pow3(e: u32) -> i64 {
    3i64.pow(e)
}

/// ψ(k) = ⌊k/4⌋, the exponent governing splittings and periodicity.
pub fn psi(k: i64) -> u32 {
    debug_assert!(k >= 0);
    (k / 4) as u32
}

/// Action of β, P¹ or P³ on the cohomology generator carried by the cell of
/// dimension `k`, as (coefficient, target dimension); `None` when it acts by
/// zero. Even cells 2l carry yˡ, odd cells 2l+1 carry xyˡ, and the formulas
///
///   β(xyˡ) = yˡ⁺¹,
///   P¹(yˡ) = ±yˡ⁺² (+ for l ≡ 1, − for l ≡ 2, 0 for l ≡ 0 mod 3),
///   P³(yˡ) = ±yˡ⁺⁶ (+ for l ≡ 3,4,5, − for l ≡ 6,7,8, 0 for l ≡ 0,1,2 mod 9)
///
/// (with xyˡ behaving like yˡ for the powers P¹ and P³) extend to all
/// integers l through the periodicity of the Thom twist.
pub fn steenrod_action(k: i64, op: SteenrodOp) -> Option<(i8, i64)> {
    let l = k.div_euclid(2);
    match op {
        SteenrodOp::Beta => (k.rem_euclid(2) == 1).then_some((1, k + 1)),
        SteenrodOp::P1 => match l.rem_euclid(3) {
            1 => Some((1, k + 4)),
            2 => Some((-1, k + 4)),
            _ => None,
        },
        SteenrodOp::P3 => match l.rem_euclid(9) {
            3 | 4 | 5 => Some((1, k + 12)),
            6 | 7 | 8 => Some((-1, k + 12)),
            _ => None,
        },
    }
}

impl StuntedLens {
    pub fn new(bottom: i64, top: i64, flavor: Flavor) -> Result<StuntedLens, LensError> {
        if bottom > top {
            return Err(LensError::EmptyRange(bottom, top));
        }
        Ok(StuntedLens {
            bottom: Bound::Finite(bottom),
            top: Bound::Finite(top),
            flavor,
        })
    }

    /// The complex (BC₃)ᵦ^∞ (or a summand of it).
    pub fn infinite_above(bottom: i64, flavor: Flavor) -> StuntedLens {
        StuntedLens {
            bottom: Bound::Finite(bottom),
            top: Bound::PosInf,
            flavor,
        }
    }

    /// Cell dimensions inside the window [lo, hi], sorted.
    pub fn cells_in(&self, lo: i64, hi: i64) -> Vec<i64> {
        let lo = match self.bottom {
            Bound::Finite(b) => lo.max(b),
            Bound::NegInf => lo,
            Bound::PosInf => return Vec::new(),
        };
        let hi = match self.top {
            Bound::Finite(t) => hi.min(t),
            Bound::PosInf => hi,
            Bound::NegInf => return Vec::new(),
        };
        (lo..=hi).filter(|&d| self.flavor.contains(d)).collect()
    }

    /// All cells of a finite complex.
    pub fn cells(&self) -> Result<Vec<i64>, LensError> {
        match (self.bottom, self.top) {
            (Bound::Finite(b), Bound::Finite(t)) => Ok(self.cells_in(b, t)),
            _ => Err(LensError::InfiniteRange("cells")),
        }
    }

    fn finite_span(&self) -> Result<(i64, i64), LensError> {
        match (self.bottom.finite(), self.top.finite()) {
            (Some(b), Some(t)) if b <= t => Ok((b, t)),
            (Some(b), Some(t)) => Err(LensError::EmptyRange(b, t)),
            _ => Err(LensError::InfiniteRange("splitting/periodicity predicate")),
        }
    }

    /// Bottom and top normalized to actual cells of the flavor.
    fn normalized(&self) -> Result<(i64, i64), LensError> {
        let (b, t) = self.finite_span()?;
        let cells = self.cells_in(b, t);
        match (cells.first(), cells.last()) {
            (Some(&n), Some(&m)) => Ok((n, m)),
            _ => Err(LensError::EmptyRange(b, t)),
        }
    }

    /// Whether the bottom cell splits off as a wedge summand.
    ///
    /// For the full complex with even bottom 2j and length k the bottom cell
    /// splits iff j ≡ 0 (mod 3^{ψ(k)}); an odd bottom cell always supports a
    /// Bockstein onto the next cell, so it never splits (unless it is the
    /// only cell). For the BΣ₃ summand with bottom 4j the criterion is again
    /// j ≡ 0 (mod 3^{ψ(k)}); for the X summand (even bottom ≡ 2 mod 4) the
    /// full-complex criterion applies, since the bottom cell lies in X and a
    /// retraction of one is a retraction of the other.
    pub fn bottom_cell_splits(&self) -> Result<bool, LensError> {
        let (n, m) = self.normalized()?;
        if n == m {
            return Ok(true);
        }
        let k = m - n;
        Ok(match self.flavor {
            Flavor::Full | Flavor::X => {
                n % 2 == 0 && (n / 2).rem_euclid(pow3(psi(k))) == 0
            }
            Flavor::BSigma3 => {
                n.rem_euclid(4) == 0 && (n / 4).rem_euclid(pow3(psi(k))) == 0
            }
        })
    }

    /// Whether the top cell splits off.
    ///
    /// Full complex (BC₃)_{2j+ε}^{2j+k}: the top cell splits iff k = ε or k
    /// is odd and 2j+k+1 ≡ 0 (mod 3^{ψ(k)}). BΣ₃ summand
    /// (BΣ₃)_{4j−ε}^{4j+k}: splits iff k = ε = 0 or k = 4i−1 and
    /// i+j ≡ 0 (mod 3^{i+ε−1}). The X summand follows the full-complex rule
    /// for the same reason as in `bottom_cell_splits`.
    pub fn top_cell_splits(&self) -> Result<bool, LensError> {
        let (n, m) = self.normalized()?;
        if n == m {
            return Ok(true);
        }
        Ok(match self.flavor {
            Flavor::Full | Flavor::X => {
                let eps = n.rem_euclid(2);
                let k = m - n + eps;
                k == eps || (k % 2 == 1 && (m + 1).rem_euclid(pow3(psi(k))) == 0)
            }
            Flavor::BSigma3 => {
                let eps = if n.rem_euclid(4) == 0 { 0 } else { 1 };
                let j = (n + eps) / 4;
                let k = m - 4 * j;
                if k < 0 || k.rem_euclid(4) != 3 {
                    false
                } else {
                    let i = (k + 1) / 4;
                    let exp = (i + eps - 1) as u32;
                    (i + j).rem_euclid(pow3(exp)) == 0
                }
            }
        })
    }

    /// Spanier–Whitehead duality D(BC₃)ₙᵐ ≃ Σ(BC₃)_{−m−1}^{−n−1}: returns
    /// the dual descriptor and the recorded suspension shift, so that
    /// D(self) ≃ Σ^{shift}(returned). Both wedge summands are carried to the
    /// summand of the same flavor.
    pub fn sw_dual(&self) -> (StuntedLens, i64) {
        let flip = |b: Bound| match b {
            Bound::Finite(v) => Bound::Finite(-v - 1),
            Bound::NegInf => Bound::PosInf,
            Bound::PosInf => Bound::NegInf,
        };
        (
            StuntedLens {
                bottom: flip(self.top),
                top: flip(self.bottom),
                flavor: self.flavor,
            },
            1,
        )
    }

    /// James periodicity: the suspension by `delta` of an equivalent complex,
    /// when the congruence permits.
    ///
    /// Full complex of length k: Σ^{2d} with d ≡ 0 (mod 3^{ψ(k)}). The X
    /// summand inherits the same rule from the full complex, with the caveat
    /// that an odd d swaps the two wedge summands — such shifts are refused
    /// here so the flavor stays meaningful. The BΣ₃ summand
    /// (BΣ₃)_{4j−ε}^{4j+k} additionally has its own period: Σ^{4d} with
    /// d ≡ 0 (mod 3^{ψ(k+2ε)}).
    pub fn james_shift(&self, delta: i64) -> Result<StuntedLens, LensError> {
        if delta == 0 {
            return Ok(*self);
        }
        let (n, m) = self.normalized()?;
        let shifted = StuntedLens {
            bottom: Bound::Finite(n + delta),
            top: Bound::Finite(m + delta),
            flavor: self.flavor,
        };
        let full_rule = |k: i64| -> bool {
            delta % 2 == 0 && (delta / 2).rem_euclid(pow3(psi(k))) == 0
        };
        let ok = match self.flavor {
            Flavor::Full => {
                let eps = n.rem_euclid(2);
                full_rule(m - n + eps)
            }
            Flavor::X => {
                let eps = n.rem_euclid(2);
                // Keep the summand identity: the half-shift must be even.
                full_rule(m - n + eps) && (delta / 2) % 2 == 0
            }
            Flavor::BSigma3 => {
                let eps = if n.rem_euclid(4) == 0 { 0 } else { 1 };
                let j = (n + eps) / 4;
                let k = m - 4 * j;
                let own = delta % 4 == 0
                    && (delta / 4).rem_euclid(pow3(psi(k + 2 * eps))) == 0;
                let eps2 = n.rem_euclid(2);
                own || (full_rule(m - n + eps2) && (delta / 2) % 2 == 0)
            }
        };
        if ok {
            Ok(shifted)
        } else {
            Err(LensError::NotPeriodic(format!(
                "shift {} of [{}, {}] ({:?})",
                delta, n, m, self.flavor
            )))
        }
    }
}
