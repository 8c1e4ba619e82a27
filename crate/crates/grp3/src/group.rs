//! Finitely generated abelian 3-groups in canonical form.

use serde::{Deserialize, Serialize};

/// A finite direct sum of cyclic 3-groups plus free 3-adic summands.
///
/// `cyclic` holds the exponents k of the Z/3^k summands, sorted descending;
/// `free_rank` counts the Z3 summands. Two values are equal iff the exponent
/// multisets and the ranks agree, so `==` is isomorphism.
///
/// JSON form: `{"free_rank": n, "cyclic": [k1, k2, ...]}` with exponents
/// descending, e.g. Z/3 + Z/81 is `{"free_rank":0,"cyclic":[4,1]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FinAbelian3Group {
    pub free_rank: usize,
    pub cyclic: Vec<u32>,
}

impl FinAbelian3Group {
    /// The zero group.
    pub fn zero() -> Self {
        FinAbelian3Group {
            free_rank: 0,
            cyclic: Vec::new(),
        }
    }

    /// Canonicalize a list of cyclic exponents (drops zeros, sorts descending).
    pub fn new(free_rank: usize, mut cyclic: Vec<u32>) -> Self {
        cyclic.retain(|&k| k > 0);
        cyclic.sort_unstable_by(|a, b| b.cmp(a));
        FinAbelian3Group { free_rank, cyclic }
    }

    /// A single cyclic summand Z/3^k (k = 0 gives the zero group).
    pub fn cyclic(k: u32) -> Self {
        Self::new(0, vec![k])
    }

    /// A free Z3-module of the given rank.
    pub fn free(rank: usize) -> Self {
        Self::new(rank, Vec::new())
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.cyclic.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// 3-adic valuation of the order of the finite part, i.e. log_3 |torsion|.
    pub fn torsion_length(&self) -> u64 {
        self.cyclic.iter().map(|&k| k as u64).sum()
    }

    /// Direct sum, renormalized.
    pub fn direct_sum(&self, other: &FinAbelian3Group) -> FinAbelian3Group {
        let mut cyclic = self.cyclic.clone();
        cyclic.extend_from_slice(&other.cyclic);
        FinAbelian3Group::new(self.free_rank + other.free_rank, cyclic)
    }

    /// Human-readable form: `Z3^r + Z/3 + Z/9 ...` (0 for the zero group).
    pub fn display(&self) -> String {
        let mut parts = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z3".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z3^{}", self.free_rank));
        }
        for &k in &self.cyclic {
            parts.push(format!("Z/{}", 3u64.pow(k)));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl FinAbelian3Group {
    /// Parse the compact table notation for 3-local groups: `0`, `Z3`,
    /// `3`, `27`, rank shorthands like `3^2` or `9^2`, and comma-separated
    /// direct sums such as `3,27` or `3^3,81`.
    pub fn from_notation(s: &str) -> Option<Self> {
        let s = s.trim();
        if s == "0" {
            return Some(Self::zero());
        }
        let mut free_rank = 0usize;
        let mut cyclic = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            if token == "Z3" {
                free_rank += 1;
                continue;
            }
            let (base, count) = match token.split_once('^') {
                Some((b, c)) => (b, c.parse::<usize>().ok()?),
                None => (token, 1),
            };
            let n: u64 = base.parse().ok()?;
            // The order must be a positive power of 3.
            let mut exp = 0u32;
            let mut m = n;
            while m > 1 && m % 3 == 0 {
                m /= 3;
                exp += 1;
            }
            if m != 1 || exp == 0 {
                return None;
            }
            cyclic.extend(std::iter::repeat(exp).take(count));
        }
        Some(Self::new(free_rank, cyclic))
    }
}

impl std::fmt::Display for FinAbelian3Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_sorts_descending_and_drops_zeros() {
        let g = FinAbelian3Group::new(0, vec![1, 4, 0, 2]);
        assert_eq!(g.cyclic, vec![4, 2, 1]);
    }

    #[test]
    fn equality_is_isomorphism() {
        let a = FinAbelian3Group::new(1, vec![2, 1]);
        let b = FinAbelian3Group::new(1, vec![1, 2]);
        assert_eq!(a, b);
    }

    #[test]
    fn json_roundtrip_matches_contract() {
        let g = FinAbelian3Group::new(0, vec![1, 4]);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"free_rank":0,"cyclic":[4,1]}"#);
        let back: FinAbelian3Group = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn table_notation_parses() {
        assert_eq!(
            FinAbelian3Group::from_notation("0"),
            Some(FinAbelian3Group::zero())
        );
        assert_eq!(
            FinAbelian3Group::from_notation("Z3"),
            Some(FinAbelian3Group::free(1))
        );
        assert_eq!(
            FinAbelian3Group::from_notation("3^3,81"),
            Some(FinAbelian3Group::new(0, vec![4, 1, 1, 1]))
        );
        assert_eq!(
            FinAbelian3Group::from_notation("3,9^2"),
            Some(FinAbelian3Group::new(0, vec![2, 2, 1]))
        );
        assert_eq!(FinAbelian3Group::from_notation("12"), None);
        assert_eq!(FinAbelian3Group::from_notation("1"), None);
    }

    #[test]
    fn display_forms() {
        assert_eq!(FinAbelian3Group::zero().display(), "0");
        assert_eq!(FinAbelian3Group::new(1, vec![2]).display(), "Z3 + Z/9");
    }
}
