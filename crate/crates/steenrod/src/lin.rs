//! F3-linear combinations with canonically ordered basis keys.

use std::collections::BTreeMap;

/// A finite F3-linear combination of basis elements of type `T`.
///
/// Coefficients are stored as 1 or 2; zero terms are dropped eagerly, so
/// `==` compares combinations exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lin<T: Ord + Clone> {
    terms: BTreeMap<T, u8>,
}

impl<T: Ord + Clone> Default for Lin<T> {
    fn default() -> Self {
        Lin {
            terms: BTreeMap::new(),
        }
    }
}

impl<T: Ord + Clone> Lin<T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(t: T, coeff: i64) -> Self {
        let mut l = Self::zero();
        l.add_term(t, coeff);
        l
    }

    /// Add `coeff` copies of `t` (any integer; reduced mod 3).
    pub fn add_term(&mut self, t: T, coeff: i64) {
        let c = coeff.rem_euclid(3) as u8;
        if c == 0 {
            return;
        }
        let next = (self.terms.get(&t).copied().unwrap_or(0) + c) % 3;
        if next == 0 {
            self.terms.remove(&t);
        } else {
            self.terms.insert(t, next);
        }
    }

    pub fn add(&mut self, other: &Lin<T>) {
        for (t, &c) in &other.terms {
            self.add_term(t.clone(), i64::from(c));
        }
    }

    pub fn scaled(&self, coeff: i64) -> Lin<T> {
        let mut out = Lin::zero();
        for (t, &c) in &self.terms {
            out.add_term(t.clone(), i64::from(c) * coeff);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&T, u8)> {
        self.terms.iter().map(|(t, &c)| (t, c))
    }

    pub fn coeff(&self, t: &T) -> u8 {
        *self.terms.get(t).unwrap_or(&0)
    }
}

impl<T: Ord + Clone> FromIterator<(T, i64)> for Lin<T> {
    fn from_iter<I: IntoIterator<Item = (T, i64)>>(iter: I) -> Self {
        let mut l = Lin::zero();
        for (t, c) in iter {
            l.add_term(t, c);
        }
        l
    }
}
