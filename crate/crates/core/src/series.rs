//! Truncated power series and the exponential generating series of the
//! ordered-partition numbers.

use num_traits::One;

use crate::error::{Error, Result};
use crate::freectd::fubini;
use crate::scalar::Scalar;
use crate::Q;

/// `Σ_{n ≤ order} c_n x^n`, truncated at a fixed order.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> PowerSeries<S> {
    pub fn from_coeffs(mut coeffs: Vec<S>, order: usize) -> Self {
        coeffs.resize(order + 1, S::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::from_coeffs(vec![S::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &S {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// `e^x − 1`.
    pub fn exp_minus_one(order: usize) -> Self {
        let mut coeffs = vec![S::zero(); order + 1];
        let mut term = S::one();
        for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
            term = term / S::from_int(n as i64);
            *c = term.clone();
        }
        Self { coeffs }
    }

    /// `x / (1 − x)`.
    pub fn geometric(order: usize) -> Self {
        let mut coeffs = vec![S::one(); order + 1];
        coeffs[0] = S::zero();
        Self { coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect();
        Self { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() - b.clone()).collect();
        Self { coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut coeffs = vec![S::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                coeffs[i + j] = coeffs[i + j].clone() + self.coeffs[i].clone() * other.coeffs[j].clone();
            }
        }
        Self { coeffs }
    }

    /// `self / other`; needs an invertible constant term in `other`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let n = self.order().min(other.order());
        if other.coeffs[0].is_zero() {
            return Err(Error::InvalidArgument("series division by a series without constant term".into()));
        }
        let inv0 = S::one() / other.coeffs[0].clone();
        let mut q: Vec<S> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                acc = acc - other.coeffs[j].clone() * q[k - j].clone();
            }
            q.push(acc * inv0.clone());
        }
        Ok(Self { coeffs: q })
    }

    /// `self ∘ inner`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::InvalidArgument("inner series of a composition needs zero constant term".into()));
        }
        let n = self.order().min(inner.order());
        let mut out = Self::zero(n);
        let mut power = Self::one(n);
        for k in 0..=n {
            if k > 0 {
                power = power.mul(inner);
            }
            let term = Self { coeffs: power.coeffs.iter().map(|c| c.clone() * self.coeffs[k].clone()).collect() };
            out = out.add(&term);
        }
        Ok(out)
    }
}

pub const MAX_EGF_ORDER: usize = 12;

/// Coefficients of the generating series checked three ways.
#[derive(Clone, Debug, PartialEq)]
pub struct EgfReport {
    pub order: usize,
    /// `[x^n] (e^x − 1)/(2 − e^x)` for `n = 1..=order`.
    pub quotient: Vec<Q>,
    /// `[x^n] (x/(1−x)) ∘ (e^x − 1)`.
    pub composition: Vec<Q>,
    /// `d_n / n!` from the ordered-partition recurrence.
    pub expected: Vec<Q>,
}

impl EgfReport {
    pub fn quotient_matches(&self) -> bool {
        self.quotient == self.expected
    }

    pub fn composition_matches(&self) -> bool {
        self.composition == self.quotient
    }

    pub fn holds(&self) -> bool {
        self.quotient_matches() && self.composition_matches()
    }
}

pub fn egf_report(order: usize) -> Result<EgfReport> {
    if !(1..=MAX_EGF_ORDER).contains(&order) {
        return Err(Error::Size { n: order, min: 1, max: MAX_EGF_ORDER });
    }
    let e = PowerSeries::<Q>::exp_minus_one(order);
    let numerator = e.clone();
    // 2 − e^x = 1 − (e^x − 1)
    let denominator = PowerSeries::one(order).sub(&e);
    let quotient = numerator.div(&denominator)?;
    let composition = PowerSeries::geometric(order).compose(&e)?;
    let mut factorial = num_bigint::BigInt::one();
    let mut expected = Vec::with_capacity(order);
    for n in 1..=order {
        factorial *= n;
        expected.push(Q::new(fubini(n).into(), factorial.clone()));
    }
    Ok(EgfReport {
        order,
        quotient: quotient.coeffs()[1..].to_vec(),
        composition: composition.coeffs()[1..].to_vec(),
        expected,
    })
}

/// Whether the series identity and the composition identity both hold
/// through `order`.
pub fn egf_check(order: usize) -> Result<bool> {
    Ok(egf_report(order)?.holds())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    #[test]
    fn exp_coefficients() {
        let e = PowerSeries::<Q>::exp_minus_one(4);
        assert_eq!(e.coeffs(), &[q(0, 1), q(1, 1), q(1, 2), q(1, 6), q(1, 24)]);
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = PowerSeries::from_coeffs(vec![q(1, 1), q(2, 1), q(-1, 3)], 6);
        let b = PowerSeries::from_coeffs(vec![q(2, 1), q(0, 1), q(5, 1), q(1, 1)], 6);
        assert_eq!(a.mul(&b).div(&b).unwrap(), a);
        assert!(a.div(&PowerSeries::zero(6)).is_err());
    }

    #[test]
    fn composition_with_identity_series() {
        let x = PowerSeries::from_coeffs(vec![q(0, 1), q(1, 1)], 5);
        let e = PowerSeries::<Q>::exp_minus_one(5);
        assert_eq!(e.compose(&x).unwrap(), e);
        assert!(e.compose(&PowerSeries::one(5)).is_err());
    }

    #[test]
    fn first_six_coefficients() {
        let r = egf_report(6).unwrap();
        assert_eq!(r.quotient, vec![q(1, 1), q(3, 2), q(13, 6), q(75, 24), q(541, 120), q(4683, 720)]);
        assert!(r.holds());
    }

    #[test]
    fn order_one_and_bounds() {
        let r = egf_report(1).unwrap();
        assert_eq!(r.quotient, vec![q(1, 1)]);
        assert!(egf_check(10).unwrap());
        assert!(egf_check(12).unwrap());
        assert!(matches!(egf_check(13), Err(Error::Size { .. })));
        assert!(matches!(egf_check(0), Err(Error::Size { .. })));
    }

    #[test]
    fn works_over_fixed_width_rationals() {
        let e = PowerSeries::<num_rational::Rational64>::exp_minus_one(8);
        let d = PowerSeries::one(8).sub(&e);
        let f = e.div(&d).unwrap();
        assert_eq!(*f.coeff(3), num_rational::Rational64::new(13, 6));
    }
}
