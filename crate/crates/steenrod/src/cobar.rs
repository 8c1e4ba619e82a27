//! The reduced cobar complex of the dual Steenrod algebra: C^{s,t} has basis
//! the length-s words of non-unit monomials with internal degrees summing to
//! t. This is the definitional Ext model and the home of chain-level Massey
//! products; it is only run in low degrees.

use std::collections::BTreeMap;

use grp3::{homology_at, F3Matrix};

use crate::milnor::{monomials_of_degree, MilnorMonomial};
use crate::{Lin, SteenrodError};

/// A cobar word a₁|a₂|…|a_s.
pub type CobarWord = Vec<MilnorMonomial>;

/// Basis of C^{s,t} in canonical order.
pub fn cobar_basis(s: u32, t: u32) -> Vec<CobarWord> {
    fn rec(s: u32, t: u32, out: &mut Vec<CobarWord>, prefix: &mut CobarWord) {
        if s == 0 {
            if t == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        // Every remaining letter has degree >= 1.
        for d in 1..=(t.saturating_sub(s - 1)) {
            for m in monomials_of_degree(d) {
                prefix.push(m);
                rec(s - 1, t - d, out, prefix);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(s, t, &mut out, &mut Vec::new());
    out
}

/// Differential of a single word: alternating sum over letters of the reduced
/// coproduct, with sign (−1)^{ε}, ε = i + |a'| + |a₁| + … + |a_{i−1}| for the
/// splitting a_i ↦ a'|a'' at 1-based position i.
pub fn cobar_differential(word: &CobarWord) -> Lin<CobarWord> {
    let mut out = Lin::zero();
    let mut prefix_degree: u32 = 0;
    for (idx, letter) in word.iter().enumerate() {
        for ((a1, a2), c) in letter.reduced_coproduct().iter() {
            let eps = (idx as u32 + 1) + a1.degree() + prefix_degree;
            let sign = if eps % 2 == 0 { 1 } else { -1 };
            let mut w: CobarWord = word[..idx].to_vec();
            w.push(a1.clone());
            w.push(a2.clone());
            w.extend_from_slice(&word[idx + 1..]);
            out.add_term(w, i64::from(c) * sign);
        }
        prefix_degree += letter.degree();
    }
    out
}

/// Linear extension of the differential.
pub fn differential(x: &Lin<CobarWord>) -> Lin<CobarWord> {
    let mut out = Lin::zero();
    for (w, c) in x.iter() {
        out.add(&cobar_differential(w).scaled(i64::from(c)));
    }
    out
}

/// Concatenation product, extended bilinearly (no extra sign).
pub fn product(a: &Lin<CobarWord>, b: &Lin<CobarWord>) -> Lin<CobarWord> {
    let mut out = Lin::zero();
    for (wa, ca) in a.iter() {
        for (wb, cb) in b.iter() {
            let mut w = wa.clone();
            w.extend_from_slice(wb);
            out.add_term(w, i64::from(ca) * i64::from(cb));
        }
    }
    out
}

/// Bidegree (s, t) of a homogeneous element; `None` for 0 or inhomogeneous.
pub fn bidegree(x: &Lin<CobarWord>) -> Option<(u32, u32)> {
    let mut it = x.iter();
    let (first, _) = it.next()?;
    let s = first.len() as u32;
    let t: u32 = first.iter().map(|m| m.degree()).sum();
    for (w, _) in it {
        if w.len() as u32 != s || w.iter().map(|m| m.degree()).sum::<u32>() != t {
            return None;
        }
    }
    Some((s, t))
}

/// Matrix of d : C^{s,t} → C^{s+1,t} over the canonical bases.
pub fn differential_matrix(s: u32, t: u32) -> F3Matrix {
    let source = cobar_basis(s, t);
    let target = cobar_basis(s + 1, t);
    let index: BTreeMap<&CobarWord, usize> =
        target.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut m = F3Matrix::new(target.len(), source.len());
    for (col, w) in source.iter().enumerate() {
        for (img, c) in cobar_differential(w).iter() {
            let row = *index.get(img).expect("differential must preserve (s+1, t)");
            m.add_at(row, col, c).unwrap();
        }
    }
    m
}

/// dim H^{s,t} of the cobar complex (s ≥ 1; H^{0,0} is the ground field).
pub fn homology_dim(s: u32, t: u32) -> usize {
    let d_in = if s == 0 {
        F3Matrix::new(cobar_basis(0, t).len(), 0)
    } else {
        differential_matrix(s - 1, t)
    };
    let d_out = differential_matrix(s, t);
    homology_at(&d_in, &d_out)
        .expect("cobar differential squares to zero")
        .dim
}

fn to_vector(x: &Lin<CobarWord>, basis: &[CobarWord]) -> Vec<u8> {
    let index: BTreeMap<&CobarWord, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut v = vec![0u8; basis.len()];
    for (w, c) in x.iter() {
        v[*index.get(w).expect("element not in the expected bidegree")] = c;
    }
    v
}

fn from_vector(v: &[u8], basis: &[CobarWord]) -> Lin<CobarWord> {
    v.iter()
        .zip(basis)
        .filter(|(&c, _)| c != 0)
        .map(|(&c, w)| (w.clone(), i64::from(c)))
        .collect()
}

/// A chain bounding the homogeneous boundary `x`, via the deterministic
/// solver; `None` if `x` is not a boundary.
pub fn bounding_chain(x: &Lin<CobarWord>) -> Option<Lin<CobarWord>> {
    let (s, t) = bidegree(x)?;
    debug_assert!(s >= 1);
    let d = differential_matrix(s - 1, t);
    let target = to_vector(x, &cobar_basis(s, t));
    let u = d.solve_preimage(&target)?;
    Some(from_vector(&u, &cobar_basis(s - 1, t)))
}

/// Triple Massey product ⟨a, b, c⟩ = [ā·v + u·c] with d(u) = a·b,
/// d(v) = b·c and ā = (−1)^{1+deg a} a, matching the worked products of the
/// source computation (⟨h₀,h₀,a₀⟩ = −ξ₁|τ₁ + ξ₁²|τ₀ and companions).
pub fn massey_triple(
    a: &Lin<CobarWord>,
    b: &Lin<CobarWord>,
    c: &Lin<CobarWord>,
) -> Result<Lin<CobarWord>, SteenrodError> {
    let u = bounding_chain(&product(a, b))
        .ok_or(SteenrodError::MasseyUndefined("a*b"))?;
    let v = bounding_chain(&product(b, c))
        .ok_or(SteenrodError::MasseyUndefined("b*c"))?;
    let (s_a, t_a) = bidegree(a).expect("a must be homogeneous and nonzero");
    let sign = if (1 + s_a + t_a) % 2 == 0 { 1 } else { -1 };
    let mut out = product(a, &v).scaled(sign);
    out.add(&product(&u, c));
    Ok(out)
}

/// Whether two cocycles in the same bidegree are cohomologous.
pub fn cohomologous(x: &Lin<CobarWord>, y: &Lin<CobarWord>) -> bool {
    let mut diff = x.clone();
    diff.add(&y.scaled(-1));
    if diff.is_zero() {
        return true;
    }
    bounding_chain(&diff).is_some()
}
