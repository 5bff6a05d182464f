//! Factorials, generalized binomial coefficients and signed Stirling
//! numbers of the first kind.
//!
//! Tables live in a process-wide [`CombCache`] behind a mutex; callers get
//! owned copies, so concurrent use only contends on the lock.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::Rational;

/// Memo tables for `n!` and the rows of `s(n, k)`.
#[derive(Debug, Default)]
pub struct CombCache {
    factorials: Vec<BigInt>,
    stirling_rows: Vec<Vec<BigInt>>,
}

impl CombCache {
    pub const fn new() -> Self {
        CombCache {
            factorials: Vec::new(),
            stirling_rows: Vec::new(),
        }
    }

    pub fn factorial(&mut self, n: usize) -> BigInt {
        if self.factorials.is_empty() {
            self.factorials.push(BigInt::one());
        }
        while self.factorials.len() <= n {
            let k = self.factorials.len();
            let next = &self.factorials[k - 1] * BigInt::from(k);
            self.factorials.push(next);
        }
        self.factorials[n].clone()
    }

    /// Signed Stirling number of the first kind via
    /// `s(n+1, k) = s(n, k-1) - n s(n, k)`.
    pub fn stirling_first(&mut self, n: usize, k: usize) -> BigInt {
        if self.stirling_rows.is_empty() {
            self.stirling_rows.push(vec![BigInt::one()]);
        }
        while self.stirling_rows.len() <= n {
            let m = self.stirling_rows.len() - 1;
            let prev = &self.stirling_rows[m];
            let mut row = vec![BigInt::zero(); m + 2];
            for (j, slot) in row.iter_mut().enumerate() {
                let left = if j >= 1 {
                    prev[j - 1].clone()
                } else {
                    BigInt::zero()
                };
                let here = prev.get(j).cloned().unwrap_or_default();
                *slot = left - BigInt::from(m) * here;
            }
            self.stirling_rows.push(row);
        }
        self.stirling_rows[n].get(k).cloned().unwrap_or_default()
    }
}

static CACHE: Mutex<CombCache> = Mutex::new(CombCache::new());

fn with_cache<T>(f: impl FnOnce(&mut CombCache) -> T) -> T {
    let mut guard = CACHE.lock().unwrap_or_else(|e| e.into_inner());
    f(&mut guard)
}

pub fn factorial(n: usize) -> BigInt {
    with_cache(|c| c.factorial(n))
}

pub fn factorial_rational(n: usize) -> Rational {
    Rational::from_integer(factorial(n))
}

/// `1/n!`, with the reciprocal-Gamma convention `1/n! = 0` for `n < 0`.
pub fn inv_factorial(n: i64) -> Rational {
    if n < 0 {
        Rational::zero()
    } else {
        factorial_rational(n as usize).recip()
    }
}

/// Generalized binomial coefficient: the falling-factorial quotient
/// `n(n-1)...(n-k+1)/k!` for `k >= 0` (any integer `n`), and `0` for `k < 0`.
pub fn binomial(n: i64, k: i64) -> Rational {
    Rational::from_integer(binomial_int(n, k))
}

pub fn binomial_int(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 && k > n {
        return BigInt::zero();
    }
    // Symmetry keeps the product short for nonnegative n.
    let k = if n >= 0 && k > n - k { n - k } else { k };
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

pub fn stirling_first(n: usize, k: usize) -> BigInt {
    with_cache(|c| c.stirling_first(n, k))
}

/// Multinomial coefficient `(sum parts)! / prod(parts!)`.
pub fn multinomial(parts: &[usize]) -> BigInt {
    let total: usize = parts.iter().sum();
    parts
        .iter()
        .fold(factorial(total), |acc, &p| acc / factorial(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::Poly;
    use crate::exact::rational::int;

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(3, -1), int(0));
        assert_eq!(binomial(-1, 0), int(1));
        assert_eq!(binomial(-1, 3), int(-1));
        assert_eq!(binomial(-3, 2), int(6));
        assert_eq!(binomial(2, 5), int(0));
        assert_eq!(binomial(0, 0), int(1));
    }

    #[test]
    fn pascal_rule_generalized() {
        for n in -8..=12 {
            for k in -2..=12 {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k - 1) + binomial(n - 1, k),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn stirling_examples() {
        assert_eq!(stirling_first(3, 2), BigInt::from(-3));
        assert_eq!(stirling_first(4, 1), BigInt::from(-6));
        assert_eq!(stirling_first(0, 0), BigInt::one());
        assert_eq!(stirling_first(5, 0), BigInt::zero());
        for n in 0..10 {
            assert_eq!(stirling_first(n, n), BigInt::one());
        }
    }

    #[test]
    fn stirling_rows_expand_falling_factorial() {
        for n in 0..=12usize {
            let falling = (0..n).fold(Poly::one(), |acc, i| {
                &acc * &Poly::linear(int(1), int(-(i as i64)))
            });
            let from_stirling = Poly::from_coeffs(
                (0..=n)
                    .map(|k| Rational::from_integer(stirling_first(n, k)))
                    .collect(),
            );
            assert_eq!(falling, from_stirling, "n={n}");
        }
    }

    #[test]
    fn factorials_and_multinomials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(10), BigInt::from(3_628_800));
        assert_eq!(multinomial(&[2, 1, 1]), BigInt::from(12));
        assert_eq!(inv_factorial(-1), int(0));
        assert_eq!(inv_factorial(3), crate::exact::rational::rat(1, 6));
    }
}
