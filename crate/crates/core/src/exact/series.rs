//! Truncated power series in `z` over a coefficient ring.
//!
//! A [`Series`] of order `N` stores the coefficients of `z^0 ..= z^N`. Every
//! binary operation truncates its result to the smaller operand order.

use std::fmt::Debug;

use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Coefficient rings a [`Series`] can carry.
pub trait Coefficient: Clone + Debug + PartialEq + Zero + One {
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
    fn from_rational(c: Rational) -> Self;
    /// Multiplicative inverse, when the element is a unit of the ring.
    fn try_inverse(&self) -> Option<Self>;
}

impl Coefficient for Rational {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
    fn from_rational(c: Rational) -> Self {
        c
    }
    fn try_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

impl Coefficient for Poly {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        Poly::scale(self, c)
    }
    fn from_rational(c: Rational) -> Self {
        Poly::constant(c)
    }
    fn try_inverse(&self) -> Option<Self> {
        // Units of Q[x] are the nonzero constants.
        match self.degree() {
            Some(0) => Some(Poly::constant(self.coeffs()[0].recip())),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Series<C> {
    order: usize,
    coeffs: Vec<C>,
}

impl<C: Coefficient> Series<C> {
    /// Builds a series of the given order, zero-padding or truncating `coeffs`.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        Series { order, coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        Series {
            order,
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![C::one()], order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `z^k`; panics past the truncation order.
    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "cannot raise the order of a series");
        Series {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        Self::from_fn(order, |k| self.coeffs[k].add_ref(&rhs.coeffs[k]))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        Self::from_fn(order, |k| self.coeffs[k].sub_ref(&rhs.coeffs[k]))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_fn(self.order, |k| self.coeffs[k].scale(c))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        Self::from_fn(order, |k| {
            (0..=k).fold(C::zero(), |acc, j| {
                let (a, b) = (&self.coeffs[j], &rhs.coeffs[k - j]);
                if a.is_zero() || b.is_zero() {
                    acc
                } else {
                    acc.add_ref(&a.mul_ref(b))
                }
            })
        })
    }

    /// `self^n` by repeated squaring; `self^0` is the unit series.
    pub fn pow(&self, mut n: u32) -> Self {
        let mut acc = Self::one(self.order);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// The series `t` with `self * t = 1 + O(z^{N+1})`.
    pub fn invert(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].try_inverse().ok_or(Error::NotInvertible)?;
        let mut out: Vec<C> = Vec::with_capacity(self.order + 1);
        out.push(inv0.clone());
        for k in 1..=self.order {
            let acc = (1..=k).fold(C::zero(), |acc, j| {
                let s = &self.coeffs[j];
                if s.is_zero() {
                    acc
                } else {
                    acc.add_ref(&s.mul_ref(&out[k - j]))
                }
            });
            out.push(acc.mul_ref(&inv0).neg_ref());
        }
        Ok(Series {
            order: self.order,
            coeffs: out,
        })
    }
}

impl Series<Rational> {
    /// `e^{cz}` truncated at order `N`.
    pub fn exp_scaled(c: &Rational, order: usize) -> Self {
        let mut out = Vec::with_capacity(order + 1);
        let mut term = Rational::one();
        out.push(term.clone());
        for k in 1..=order {
            term = term * c / Rational::from_integer(k.into());
            out.push(term.clone());
        }
        Series { order, coeffs: out }
    }

    /// `(e^{cz} - 1)/z = sum_j c^{j+1} z^j / (j+1)!`, the unit-constant form
    /// used to realise `z/(e^{cz} - 1)` by inversion.
    pub fn exp_minus_one_over_z(c: &Rational, order: usize) -> Self {
        let full = Self::exp_scaled(c, order + 1);
        Self::from_fn(order, |k| full.coeffs[k + 1].clone())
    }

    /// Embeds the series with constant polynomial coefficients.
    pub fn to_poly_series(&self) -> Series<Poly> {
        Series::from_fn(self.order, |k| Poly::constant(self.coeffs[k].clone()))
    }

    /// `k! * [z^k]`, the exponential-generating-function coefficient.
    pub fn egf_coeff(&self, k: usize) -> Rational {
        &self.coeffs[k] * super::comb::factorial_rational(k)
    }
}

impl Series<Poly> {
    /// `e^{xz}` with coefficients `x^k / k!`.
    pub fn exp_x(order: usize) -> Self {
        Series::from_fn(order, |k| {
            Poly::monomial(super::comb::factorial_rational(k).recip(), k)
        })
    }

    pub fn egf_coeff(&self, k: usize) -> Poly {
        self.coeffs[k].scale(&super::comb::factorial_rational(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn s(cs: &[(i64, i64)], order: usize) -> Series<Rational> {
        Series::new(cs.iter().map(|&(n, d)| rat(n, d)).collect(), order)
    }

    #[test]
    fn geometric_inverse() {
        let t = s(&[(1, 1), (1, 1)], 2).invert().unwrap();
        assert_eq!(t, s(&[(1, 1), (-1, 1), (1, 1)], 2));
    }

    #[test]
    fn constant_inverse() {
        assert_eq!(s(&[(2, 1)], 0).invert().unwrap(), s(&[(1, 2)], 0));
    }

    #[test]
    fn exp_like_inverse_multiplies_back() {
        let a = s(&[(1, 1), (1, 1), (1, 2)], 2);
        let t = a.invert().unwrap();
        assert_eq!(t, s(&[(1, 1), (-1, 1), (1, 2)], 2));
        assert_eq!(a.mul(&t), Series::one(2));
    }

    #[test]
    fn zero_constant_term_is_rejected() {
        let a = s(&[(0, 1), (1, 1)], 3);
        assert_eq!(a.invert(), Err(Error::NotInvertible));
        let p: Series<Poly> = Series::new(vec![Poly::x()], 1);
        assert_eq!(p.invert(), Err(Error::NotInvertible));
    }

    #[test]
    fn powers_and_order_rules() {
        let a = s(&[(1, 1), (1, 1)], 2);
        assert_eq!(a.pow(2), s(&[(1, 1), (2, 1), (1, 1)], 2));
        assert_eq!(a.pow(0), Series::one(2));
        let b = s(&[(1, 1), (3, 1), (5, 1)], 5);
        assert_eq!(a.mul(&b).order(), 2);
        assert_eq!(a.add(&b).order(), 2);
    }

    #[test]
    fn exponential_builders() {
        let e = Series::exp_scaled(&int(2), 3);
        assert_eq!(e, s(&[(1, 1), (2, 1), (2, 1), (4, 3)], 3));
        let q = Series::exp_minus_one_over_z(&int(1), 2);
        assert_eq!(q, s(&[(1, 1), (1, 2), (1, 6)], 2));
        let ex = Series::<Poly>::exp_x(2);
        assert_eq!(ex.egf_coeff(2), Poly::monomial(int(1), 2));
    }

    #[test]
    fn poly_series_inverse() {
        // (2 + x z) has a unit constant term in Q[x].
        let a: Series<Poly> = Series::new(vec![Poly::constant(int(2)), Poly::x()], 3);
        let t = a.invert().unwrap();
        assert_eq!(a.mul(&t), Series::one(3));
    }
}
