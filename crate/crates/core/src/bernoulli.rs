//! Bernoulli numbers and polynomials, and their order-`n` generalizations.
//!
//! All of them come out of the one generating series `z/(e^z - 1)`,
//! realised as the inverse of `(e^z - 1)/z` and memoized.

use std::sync::Mutex;

use num_traits::Zero;

use crate::exact::comb::binomial;
use crate::exact::{Poly, Rational, Series};

/// Memoized `B_0 ..= B_K`.
#[derive(Debug, Default)]
pub struct BernoulliTable {
    numbers: Vec<Rational>,
}

impl BernoulliTable {
    pub const fn new() -> Self {
        BernoulliTable {
            numbers: Vec::new(),
        }
    }

    fn ensure(&mut self, k: usize) {
        if self.numbers.len() > k {
            return;
        }
        let order = (2 * k).max(32);
        let series = bernoulli_series(order);
        self.numbers = (0..=order).map(|j| series.egf_coeff(j)).collect();
    }

    pub fn get(&mut self, k: usize) -> Rational {
        self.ensure(k);
        self.numbers[k].clone()
    }

    pub fn prefix(&mut self, max_k: usize) -> Vec<Rational> {
        self.ensure(max_k);
        self.numbers[..=max_k].to_vec()
    }
}

static TABLE: Mutex<BernoulliTable> = Mutex::new(BernoulliTable::new());

/// `z/(e^z - 1)` truncated at `order`.
pub fn bernoulli_series(order: usize) -> Series<Rational> {
    Series::exp_minus_one_over_z(&Rational::from_integer(1.into()), order)
        .invert()
        .expect("constant term of (e^z - 1)/z is 1")
}

/// `B_k`, with `B_1 = -1/2`.
pub fn bernoulli_number(k: usize) -> Rational {
    TABLE.lock().unwrap_or_else(|e| e.into_inner()).get(k)
}

pub fn bernoulli_numbers(max_k: usize) -> Vec<Rational> {
    TABLE
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .prefix(max_k)
}

/// `B_k(x) = sum_j C(k,j) B_j x^{k-j}`.
pub fn bernoulli_poly(k: usize) -> Poly {
    let numbers = bernoulli_numbers(k);
    let mut coeffs = vec![Rational::zero(); k + 1];
    for (j, b) in numbers.iter().enumerate() {
        coeffs[k - j] = binomial(k as i64, j as i64) * b;
    }
    Poly::from_coeffs(coeffs)
}

/// `B_k^{(n)} = k! [z^k] (z/(e^z - 1))^n`.
pub fn bernoulli_order(k: usize, n: u32) -> Rational {
    bernoulli_series(k).pow(n).egf_coeff(k)
}

/// All of `B_0^{(n)} ..= B_K^{(n)}` from one series power.
pub fn bernoulli_order_numbers(max_k: usize, n: u32) -> Vec<Rational> {
    let s = bernoulli_series(max_k).pow(n);
    (0..=max_k).map(|k| s.egf_coeff(k)).collect()
}

/// `B_k^{(n)}(x) = k! [z^k] e^{xz} (z/(e^z - 1))^n`.
pub fn bernoulli_order_poly(k: usize, n: u32) -> Poly {
    let base = bernoulli_series(k).pow(n).to_poly_series();
    Series::<Poly>::exp_x(k).mul(&base).egf_coeff(k)
}

/// Evaluates `B_k(x)` in floating point, for the zeta routines.
pub fn bernoulli_poly_f64(k: usize, x: f64) -> f64 {
    bernoulli_poly(k).eval_f64(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};
    use num_traits::One;

    #[test]
    fn first_numbers() {
        assert_eq!(bernoulli_number(0), int(1));
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(2), rat(1, 6));
        assert_eq!(bernoulli_number(4), rat(-1, 30));
        assert_eq!(bernoulli_number(7), int(0));
        assert_eq!(bernoulli_number(12), rat(-691, 2730));
    }

    #[test]
    fn table_grows_on_demand() {
        assert_eq!(bernoulli_number(60), {
            // B_60 numerator/denominator from the standard tables.
            let n: num_bigint::BigInt = "-1215233140483755572040304994079820246041491"
                .parse()
                .unwrap();
            Rational::new(n, 56786730.into())
        });
    }

    #[test]
    fn table_invariants() {
        let b = bernoulli_numbers(40);
        for k in (3..=40).step_by(2) {
            assert!(b[k].is_zero(), "B_{k}");
        }
        for k in 1..20 {
            let s1 = b[2 * k] > Rational::zero();
            let s2 = b[2 * k + 2] > Rational::zero();
            assert_ne!(s1, s2, "sign alternation at B_{}", 2 * k);
        }
    }

    #[test]
    fn low_polys() {
        assert_eq!(bernoulli_poly(0), Poly::one());
        assert_eq!(
            bernoulli_poly(1),
            Poly::from_coeffs(vec![rat(-1, 2), int(1)])
        );
        assert_eq!(
            bernoulli_poly(2),
            Poly::from_coeffs(vec![rat(1, 6), int(-1), int(1)])
        );
        for k in 0..15 {
            let p = bernoulli_poly(k);
            assert_eq!(p.degree(), Some(k));
            assert_eq!(p.leading(), Some(&int(1)));
        }
    }

    #[test]
    fn order_examples() {
        assert_eq!(bernoulli_order(2, 2), rat(5, 6));
        assert_eq!(bernoulli_order(0, 5), int(1));
        assert_eq!(bernoulli_order(3, 3), rat(-9, 4));
        for k in 0..12 {
            assert_eq!(bernoulli_order(k, 1), bernoulli_number(k));
        }
    }

    #[test]
    fn order_polys() {
        assert_eq!(bernoulli_order_poly(0, 4), Poly::one());
        assert_eq!(bernoulli_order_poly(1, 1), bernoulli_poly(1));
        for n in 1..5 {
            for k in 0..8 {
                let p = bernoulli_order_poly(k, n);
                assert_eq!(p.eval(&int(0)), bernoulli_order(k, n));
                assert_eq!(p.degree(), Some(k));
            }
        }
        // B_n^{(n+1)}(x) = (x-1)(x-2)...(x-n).
        for n in 0..6usize {
            let expected =
                (1..=n as i64).fold(Poly::one(), |acc, i| &acc * &Poly::linear(int(1), int(-i)));
            assert_eq!(bernoulli_order_poly(n, n as u32 + 1), expected);
        }
    }
}
