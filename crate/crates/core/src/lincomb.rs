use std::collections::btree_map::{self, BTreeMap};
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use crate::scalar::Scalar;

/// Finite formal linear combination of basis keys.
///
/// Stored sparsely and canonically: keys are kept in their `Ord` order and
/// zero coefficients are never stored, so structural equality is equality of
/// elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord, S> {
    terms: BTreeMap<K, S>,
}

impl<K: Ord, S> Default for LinComb<K, S> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, S: Scalar> LinComb<K, S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, S::one())
    }

    pub fn term(key: K, coeff: S) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
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

    pub fn iter(&self) -> btree_map::Iter<'_, K, S> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, S> {
        self.terms.keys()
    }

    pub fn coeff(&self, key: &K) -> S {
        self.terms.get(key).cloned().unwrap_or_else(S::zero)
    }

    pub fn contains(&self, key: &K) -> bool {
        self.terms.contains_key(key)
    }

    pub fn add_term(&mut self, key: K, coeff: S) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// `self += factor * other`
    pub fn add_scaled(&mut self, other: &Self, factor: &S) {
        if factor.is_zero() {
            return;
        }
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c.clone() * factor.clone());
        }
    }

    pub fn scaled(&self, factor: &S) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, factor);
        out
    }

    /// Extends a map on basis keys linearly.
    pub fn map_linear<K2, F>(&self, mut f: F) -> LinComb<K2, S>
    where
        K2: Ord + Clone,
        F: FnMut(&K) -> LinComb<K2, S>,
    {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Fallible version of [`LinComb::map_linear`].
    pub fn try_map_linear<K2, E, F>(&self, mut f: F) -> Result<LinComb<K2, S>, E>
    where
        K2: Ord + Clone,
        F: FnMut(&K) -> Result<LinComb<K2, S>, E>,
    {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_scaled(&f(k)?, c);
        }
        Ok(out)
    }

    pub fn retain_keys<F: FnMut(&K) -> bool>(&self, mut keep: F) -> Self {
        self.iter()
            .filter(|(k, _)| keep(k))
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect()
    }
}

impl<K: Ord + Clone, S: Scalar> FromIterator<(K, S)> for LinComb<K, S> {
    fn from_iter<I: IntoIterator<Item = (K, S)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord, S> IntoIterator for LinComb<K, S> {
    type Item = (K, S);
    type IntoIter = btree_map::IntoIter<K, S>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord + Clone, S: Scalar> AddAssign<&'a LinComb<K, S>> for LinComb<K, S> {
    fn add_assign(&mut self, rhs: &'a LinComb<K, S>) {
        self.add_scaled(rhs, &S::one());
    }
}

impl<'a, K: Ord + Clone, S: Scalar> SubAssign<&'a LinComb<K, S>> for LinComb<K, S> {
    fn sub_assign(&mut self, rhs: &'a LinComb<K, S>) {
        self.add_scaled(rhs, &-S::one());
    }
}

impl<K: Ord + Clone, S: Scalar> Add for LinComb<K, S> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<'a, K: Ord + Clone, S: Scalar> Add<&'a LinComb<K, S>> for &'a LinComb<K, S> {
    type Output = LinComb<K, S>;
    fn add(self, rhs: Self) -> LinComb<K, S> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone, S: Scalar> Sub for LinComb<K, S> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<'a, K: Ord + Clone, S: Scalar> Sub<&'a LinComb<K, S>> for &'a LinComb<K, S> {
    type Output = LinComb<K, S>;
    fn sub(self, rhs: Self) -> LinComb<K, S> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone, S: Scalar> Neg for LinComb<K, S> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scaled(&-S::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    type L = LinComb<u32, Rational64>;

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut x = L::term(1, Rational64::from(2));
        x.add_term(1, Rational64::from(-2));
        assert!(x.is_zero());
        x.add_term(3, Rational64::from(0));
        assert!(x.is_zero());
    }

    #[test]
    fn canonical_equality() {
        let a: L = [(2, Rational64::from(1)), (1, Rational64::from(3))].into_iter().collect();
        let b: L = [(1, Rational64::from(3)), (2, Rational64::from(1))].into_iter().collect();
        assert_eq!(a, b);
        assert_eq!(a.keys().copied().collect::<Vec<_>>(), vec![1, 2]);
        assert!((&a - &b).is_zero());
    }

    #[test]
    fn linear_map() {
        let a: L = [(1, Rational64::from(2)), (2, Rational64::from(1))].into_iter().collect();
        let doubled = a.map_linear(|k| L::basis(k * 10));
        assert_eq!(doubled.coeff(&10), Rational64::from(2));
        assert_eq!(doubled.coeff(&20), Rational64::from(1));
    }
}
