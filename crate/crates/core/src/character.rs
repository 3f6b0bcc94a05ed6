//! Virtual characters of the two-dimensional torus.

use std::collections::BTreeMap;

/// Formal ℤ-combination of weights `z₁ᵖz₂^q`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VirtualCharacter {
    terms: BTreeMap<(i32, i32), i64>,
}

impl VirtualCharacter {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(p: i32, q: i32, mult: i64) -> Self {
        let mut out = Self::zero();
        out.add_weight(p, q, mult);
        out
    }

    pub fn from_weights(weights: &[((i32, i32), i64)]) -> Self {
        let mut out = Self::zero();
        for &((p, q), m) in weights {
            out.add_weight(p, q, m);
        }
        out
    }

    pub fn add_weight(&mut self, p: i32, q: i32, mult: i64) {
        if mult == 0 {
            return;
        }
        let e = self.terms.entry((p, q)).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.terms.remove(&(p, q));
        }
    }

    pub fn multiplicity(&self, p: i32, q: i32) -> i64 {
        self.terms.get(&(p, q)).copied().unwrap_or(0)
    }

    pub fn weights(&self) -> impl Iterator<Item = (&(i32, i32), &i64)> {
        self.terms.iter()
    }

    /// Number of monomials counted with multiplicity (for honest characters).
    pub fn rank(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&(p, q), &m) in &rhs.terms {
            out.add_weight(p, q, m);
        }
        out
    }

    pub fn neg(&self) -> Self {
        VirtualCharacter { terms: self.terms.iter().map(|(&k, &m)| (k, -m)).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    /// Tensor product.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (&(p1, q1), &m1) in &self.terms {
            for (&(p2, q2), &m2) in &rhs.terms {
                out.add_weight(p1 + p2, q1 + q2, m1 * m2);
            }
        }
        out
    }

    /// Swaps the roles of `z₁` and `z₂`.
    pub fn swap_vars(&self) -> Self {
        VirtualCharacter { terms: self.terms.iter().map(|(&(p, q), &m)| ((q, p), m)).collect() }
    }

    /// `M = (1 - z₁)(1 - z₂)`.
    pub fn m_class() -> Self {
        Self::from_weights(&[((0, 0), 1), ((1, 0), -1), ((0, 1), -1), ((1, 1), 1)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn additive_group() {
        let a = VirtualCharacter::from_weights(&[((1, 0), 2), ((0, 1), -1)]);
        let b = VirtualCharacter::from_weights(&[((1, 0), -2), ((3, 3), 1)]);
        assert_eq!(a.add(&b).sub(&b), a);
        assert!(a.sub(&a).weights().next().is_none());
    }

    #[test]
    fn one_minus_m() {
        let one = VirtualCharacter::monomial(0, 0, 1);
        let c = one.sub(&VirtualCharacter::m_class());
        assert_eq!(c, VirtualCharacter::from_weights(&[((1, 0), 1), ((0, 1), 1), ((1, 1), -1)]));
    }
}
