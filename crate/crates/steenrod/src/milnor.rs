//! Monomials in the mod-3 dual Steenrod algebra P[ξ₁, ξ₂, …] ⊗ E(τ₀, τ₁, …)
//! with |ξᵢ| = 2(3ⁱ − 1) and |τⱼ| = 2·3ʲ − 1, together with the multiplicative
//! coproduct.

use crate::Lin;

/// A monomial ξ₁^{e₁}ξ₂^{e₂}⋯ · τ_{j₁}τ_{j₂}⋯ in the dual Steenrod algebra.
///
/// `xi[i]` is the exponent of ξ_{i+1} (no trailing zeros); `tau` lists the
/// exterior indices in strictly increasing order, so the stored form is the
/// canonical ordering and `Ord` gives a stable basis order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MilnorMonomial {
    xi: Vec<u32>,
    tau: Vec<u32>,
}

fn pow3(k: u32) -> u32 {
    3u32.pow(k)
}

impl MilnorMonomial {
    pub fn unit() -> Self {
        MilnorMonomial {
            xi: Vec::new(),
            tau: Vec::new(),
        }
    }

    /// ξᵢ^e (i ≥ 1).
    pub fn xi(i: u32, e: u32) -> Self {
        assert!(i >= 1, "xi index starts at 1");
        if e == 0 {
            return Self::unit();
        }
        let mut xi = vec![0; i as usize];
        xi[i as usize - 1] = e;
        MilnorMonomial {
            xi,
            tau: Vec::new(),
        }
    }

    /// τⱼ (j ≥ 0).
    pub fn tau(j: u32) -> Self {
        MilnorMonomial {
            xi: Vec::new(),
            tau: vec![j],
        }
    }

    pub fn is_unit(&self) -> bool {
        self.xi.is_empty() && self.tau.is_empty()
    }

    /// Internal (topological) degree.
    pub fn degree(&self) -> u32 {
        let mut d = 0;
        for (i, &e) in self.xi.iter().enumerate() {
            d += e * 2 * (pow3(i as u32 + 1) - 1);
        }
        for &j in &self.tau {
            d += 2 * pow3(j) - 1;
        }
        d
    }

    /// Parity of the degree (1 iff an odd number of τ-factors).
    pub fn parity(&self) -> u32 {
        (self.tau.len() % 2) as u32
    }

    /// Product with Koszul sign; `None` when a τ-factor repeats (τⱼ² = 0).
    /// The returned coefficient is the sign reduced mod 3 (1 or 2).
    pub fn mul(&self, other: &Self) -> Option<(u8, Self)> {
        let mut inversions = 0usize;
        for &a in &self.tau {
            for &b in &other.tau {
                if a == b {
                    return None;
                }
                if a > b {
                    inversions += 1;
                }
            }
        }
        let n = self.xi.len().max(other.xi.len());
        let mut xi = vec![0u32; n];
        for (i, &e) in self.xi.iter().enumerate() {
            xi[i] += e;
        }
        for (i, &e) in other.xi.iter().enumerate() {
            xi[i] += e;
        }
        while xi.last() == Some(&0) {
            xi.pop();
        }
        let mut tau: Vec<u32> = self.tau.iter().chain(&other.tau).copied().collect();
        tau.sort_unstable();
        let coeff = if inversions % 2 == 0 { 1 } else { 2 };
        Some((coeff, MilnorMonomial { xi, tau }))
    }

    /// Full coproduct ψ, extended multiplicatively over the generator
    /// factorization with the Koszul rule (x₁⊗y₁)(x₂⊗y₂) =
    /// (−1)^{|y₁||x₂|} x₁x₂ ⊗ y₁y₂.
    pub fn coproduct(&self) -> Lin<(MilnorMonomial, MilnorMonomial)> {
        let mut acc = Lin::single((Self::unit(), Self::unit()), 1);
        for (i0, &e) in self.xi.iter().enumerate() {
            let i = i0 as u32 + 1;
            for _ in 0..e {
                acc = tensor_mul(&acc, &psi_xi(i));
            }
        }
        for &j in &self.tau {
            acc = tensor_mul(&acc, &psi_tau(j));
        }
        acc
    }

    /// Reduced coproduct ψ̄(a) = ψ(a) − a⊗1 − 1⊗a.
    pub fn reduced_coproduct(&self) -> Lin<(MilnorMonomial, MilnorMonomial)> {
        self.coproduct()
            .iter()
            .filter(|((x, y), _)| !x.is_unit() && !y.is_unit())
            .map(|(t, c)| (t.clone(), i64::from(c)))
            .collect()
    }
}

/// ψ(ξₙ) = Σ_{i=0..n} ξ_{n−i}^{3ⁱ} ⊗ ξᵢ, with ξ₀ = 1.
fn psi_xi(n: u32) -> Lin<(MilnorMonomial, MilnorMonomial)> {
    let mut out = Lin::zero();
    for i in 0..=n {
        let left = if n == i {
            MilnorMonomial::unit()
        } else {
            MilnorMonomial::xi(n - i, pow3(i))
        };
        let right = if i == 0 {
            MilnorMonomial::unit()
        } else {
            MilnorMonomial::xi(i, 1)
        };
        out.add_term((left, right), 1);
    }
    out
}

/// ψ(τₙ) = τₙ⊗1 + Σ_{i=0..n} ξ_{n−i}^{3ⁱ} ⊗ τᵢ.
fn psi_tau(n: u32) -> Lin<(MilnorMonomial, MilnorMonomial)> {
    let mut out = Lin::single((MilnorMonomial::tau(n), MilnorMonomial::unit()), 1);
    for i in 0..=n {
        let left = if n == i {
            MilnorMonomial::unit()
        } else {
            MilnorMonomial::xi(n - i, pow3(i))
        };
        out.add_term((left, MilnorMonomial::tau(i)), 1);
    }
    out
}

fn tensor_mul(
    a: &Lin<(MilnorMonomial, MilnorMonomial)>,
    b: &Lin<(MilnorMonomial, MilnorMonomial)>,
) -> Lin<(MilnorMonomial, MilnorMonomial)> {
    let mut out = Lin::zero();
    for ((x1, y1), c1) in a.iter() {
        for ((x2, y2), c2) in b.iter() {
            let Some((cx, x)) = x1.mul(x2) else { continue };
            let Some((cy, y)) = y1.mul(y2) else { continue };
            let koszul = if y1.parity() * x2.parity() == 1 { 2 } else { 1 };
            out.add_term(
                (x, y),
                i64::from(c1) * i64::from(c2) * i64::from(cx) * i64::from(cy) * i64::from(koszul),
            );
        }
    }
    out
}

/// All monomials of exactly the given internal degree, in canonical order.
pub fn monomials_of_degree(d: u32) -> Vec<MilnorMonomial> {
    let mut gens: Vec<MilnorMonomial> = Vec::new();
    let mut i = 1;
    while 2 * (pow3(i) - 1) <= d {
        gens.push(MilnorMonomial::xi(i, 1));
        i += 1;
    }
    let mut j = 0;
    while 2 * pow3(j) - 1 <= d {
        gens.push(MilnorMonomial::tau(j));
        j += 1;
    }
    let mut out = Vec::new();
    let mut stack = vec![(MilnorMonomial::unit(), 0usize)];
    while let Some((m, k)) = stack.pop() {
        let deg = m.degree();
        if deg == d {
            out.push(m);
            continue;
        }
        if k >= gens.len() {
            continue;
        }
        // Either skip generator k, or include one copy and stay on k (for ξ,
        // to allow higher powers) / move past it (for τ).
        stack.push((m.clone(), k + 1));
        if let Some((c, prod)) = m.mul(&gens[k]) {
            debug_assert_eq!(c, 1);
            if prod.degree() <= d {
                let next = if gens[k].tau.is_empty() { k } else { k + 1 };
                stack.push((prod, next));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}
