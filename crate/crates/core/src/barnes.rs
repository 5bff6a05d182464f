//! Bernoulli–Barnes numbers `B_k(a)` and polynomials `B_k(x; a)`.
//!
//! `B_k(x; a)` is `k! [z^k]` of `z^n e^{xz} / prod_i (e^{a_i z} - 1)`. Each
//! factor `z/(e^{a_i z} - 1)` is the inverse of a series with constant term
//! `a_i`, so everything stays inside truncated-series arithmetic.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bernoulli::bernoulli_numbers;
use crate::error::{Error, Result};
use crate::exact::comb::{binomial, multinomial};
use crate::exact::rational::{format_rational, parse_rational_list, pow, sign_pow};
use crate::exact::{Poly, Rational, Series};

/// A non-empty vector of positive rational parameters `(a_1, ..., a_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AVec(Vec<Rational>);

impl AVec {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidParameter("parameter vector is empty".into()));
        }
        if let Some(bad) = entries.iter().find(|a| !a.is_positive()) {
            return Err(Error::InvalidParameter(format!(
                "parameter entries must be positive, got {}",
                format_rational(bad)
            )));
        }
        Ok(AVec(entries))
    }

    pub fn from_ints(entries: &[i64]) -> Result<Self> {
        Self::new(
            entries
                .iter()
                .map(|&a| Rational::from_integer(a.into()))
                .collect(),
        )
    }

    pub fn parse(list: &str) -> Result<Self> {
        Self::new(parse_rational_list(list)?)
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `A = a_1 + ... + a_n`.
    pub fn sum(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, a| acc + a)
    }

    pub fn product(&self) -> Rational {
        self.0.iter().fold(Rational::one(), |acc, a| acc * a)
    }

    /// `a_I` for an index subset; `None` when the subset is empty.
    pub fn subset(&self, indices: &[usize]) -> Option<AVec> {
        if indices.is_empty() {
            return None;
        }
        Some(AVec(indices.iter().map(|&i| self.0[i].clone()).collect()))
    }

    /// Entries as positive machine integers, if they all are.
    pub fn as_integers(&self) -> Option<Vec<u64>> {
        self.0
            .iter()
            .map(|a| {
                if a.is_integer() {
                    num_traits::ToPrimitive::to_u64(a.numer())
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }
}

impl fmt::Display for AVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(","))
    }
}

impl Serialize for AVec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for AVec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        AVec::parse(&v.join(",")).map_err(serde::de::Error::custom)
    }
}

/// `z^n / prod_i (e^{a_i z} - 1)` truncated at `order`.
pub fn barnes_series(a: &AVec, order: usize) -> Series<Rational> {
    a.entries()
        .iter()
        .map(|ai| {
            Series::exp_minus_one_over_z(ai, order)
                .invert()
                .expect("constant term a_i is positive")
        })
        .fold(Series::one(order), |acc, f| acc.mul(&f))
}

/// `B_0(a) ..= B_K(a)` from one series expansion.
pub fn barnes_numbers(max_k: usize, a: &AVec) -> Vec<Rational> {
    let s = barnes_series(a, max_k);
    (0..=max_k).map(|k| s.egf_coeff(k)).collect()
}

pub fn barnes_number(k: usize, a: &AVec) -> Rational {
    barnes_series(a, k).egf_coeff(k)
}

/// `B_k(a)` by the multinomial convolution
/// `sum_{m_1+...+m_n=k} (k; m) prod_i a_i^{m_i - 1} B_{m_i}`,
/// enumerating every composition of `k` explicitly.
pub fn barnes_number_convolution(k: usize, a: &AVec) -> Rational {
    let bern = bernoulli_numbers(k);
    let n = a.len();
    let mut total = Rational::zero();
    let mut parts = vec![0usize; n];
    compositions(k, n, &mut parts, 0, &mut |m| {
        let mut term = Rational::from_integer(multinomial(m));
        for (ai, &mi) in a.entries().iter().zip(m) {
            if bern[mi].is_zero() {
                return;
            }
            term *= pow(ai, mi as i64 - 1) * &bern[mi];
        }
        total += term;
    });
    total
}

fn compositions(
    remaining: usize,
    n: usize,
    parts: &mut [usize],
    at: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    if at + 1 == n {
        parts[at] = remaining;
        visit(parts);
        return;
    }
    for m in 0..=remaining {
        parts[at] = m;
        compositions(remaining - m, n, parts, at + 1, visit);
    }
}

/// A Bernoulli–Barnes polynomial together with its index and parameters.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BarnesPoly {
    pub k: usize,
    pub a: AVec,
    pub poly: Poly,
}

/// `B_k(x; a)` from the generating function with `e^{xz}` carried as a
/// series over `Q[x]`.
pub fn barnes_poly(k: usize, a: &AVec) -> BarnesPoly {
    let base = barnes_series(a, k).to_poly_series();
    let poly = Series::<Poly>::exp_x(k).mul(&base).egf_coeff(k);
    BarnesPoly {
        k,
        a: a.clone(),
        poly,
    }
}

/// `B_k(x; a) = sum_j C(k, j) B_j(a) x^{k-j}` for every `k <= max_k`.
pub fn barnes_polys(max_k: usize, a: &AVec) -> Vec<Poly> {
    let numbers = barnes_numbers(max_k, a);
    (0..=max_k)
        .map(|k| {
            let mut coeffs = vec![Rational::zero(); k + 1];
            for (j, b) in numbers.iter().take(k + 1).enumerate() {
                coeffs[k - j] = binomial(k as i64, j as i64) * b;
            }
            Poly::from_coeffs(coeffs)
        })
        .collect()
}

/// Cached `B_k(x; a)` for one parameter vector, grown on demand.
#[derive(Clone, Debug)]
pub struct BarnesTable {
    a: AVec,
    polys: Vec<Poly>,
}

impl BarnesTable {
    pub fn new(a: AVec) -> Self {
        BarnesTable {
            a,
            polys: Vec::new(),
        }
    }

    pub fn avec(&self) -> &AVec {
        &self.a
    }

    fn ensure(&mut self, k: usize) {
        if self.polys.len() <= k {
            self.polys = barnes_polys((2 * k).max(16), &self.a);
        }
    }

    pub fn poly(&mut self, k: usize) -> &Poly {
        self.ensure(k);
        &self.polys[k]
    }

    pub fn number(&mut self, k: usize) -> Rational {
        self.poly(k).coeff(0)
    }

    /// `B_k(x; a)` at a rational point.
    pub fn eval(&mut self, k: usize, x: &Rational) -> Rational {
        self.poly(k).eval(x)
    }
}

/// `B_k(a_I)`; for the empty subset this is the convention `x^k` at `x = 0`.
pub fn subset_barnes_number(k: usize, a: &AVec, subset: &[usize]) -> Rational {
    match a.subset(subset) {
        Some(sub) => barnes_number(k, &sub),
        None if k == 0 => Rational::one(),
        None => Rational::zero(),
    }
}

/// `B_k(x; a_I)` with `B_k(x; a_empty) = x^k`.
pub fn subset_barnes_poly(k: usize, a: &AVec, subset: &[usize]) -> Poly {
    match a.subset(subset) {
        Some(sub) => barnes_poly(k, &sub).poly,
        None => Poly::monomial(Rational::one(), k),
    }
}

/// `Q_k(x; a) = (-1)^k A^{-k} B_k(x; a)`.
pub fn q_sequence(k: usize, a: &AVec, x: &Rational) -> Rational {
    let big_a = a.sum();
    sign_pow(k as i64) * pow(&big_a, -(k as i64)) * barnes_poly(k, a).poly.eval(x)
}

/// The binomial dual `Q*_k = sum_{j<=k} C(k,j) (-1)^j Q_j`.
pub fn q_dual(k: usize, a: &AVec, x: &Rational) -> Rational {
    let big_a = a.sum();
    let polys = barnes_polys(k, a);
    (0..=k).fold(Rational::zero(), |acc, j| {
        let qj = sign_pow(j as i64) * pow(&big_a, -(j as i64)) * polys[j].eval(x);
        acc + binomial(k as i64, j as i64) * sign_pow(j as i64) * qj
    })
}

/// `P_m(x) = (m+1) A^{-m} (B_m(-x; a) + B_m(x; a))`.
pub fn p_poly(m: usize, a: &AVec) -> Poly {
    let b = barnes_poly(m, a).poly;
    let factor = Rational::from_integer((m + 1).into()) * pow(&a.sum(), -(m as i64));
    (&b.reflect() + &b).scale(&factor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernoulli::{bernoulli_number, bernoulli_order, bernoulli_order_poly};
    use crate::exact::rational::{int, rat};

    fn av(xs: &[(i64, i64)]) -> AVec {
        AVec::new(xs.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap()
    }

    #[test]
    fn avec_validation() {
        assert!(AVec::new(vec![]).is_err());
        assert!(AVec::new(vec![int(1), int(0)]).is_err());
        assert!(AVec::new(vec![int(-2)]).is_err());
        let a = AVec::parse("1,3/2,2").unwrap();
        assert_eq!(a.sum(), rat(9, 2));
        assert_eq!(a.product(), int(3));
        assert_eq!(a.as_integers(), None);
        assert_eq!(
            AVec::from_ints(&[3, 5]).unwrap().as_integers(),
            Some(vec![3, 5])
        );
    }

    #[test]
    fn number_examples() {
        assert_eq!(
            barnes_number(0, &AVec::from_ints(&[2, 3]).unwrap()),
            rat(1, 6)
        );
        assert_eq!(
            barnes_number(1, &AVec::from_ints(&[2, 1]).unwrap()),
            rat(-3, 4)
        );
        let one = AVec::from_ints(&[1]).unwrap();
        for k in 0..15 {
            assert_eq!(barnes_number(k, &one), bernoulli_number(k));
        }
    }

    #[test]
    fn convolution_matches_series() {
        let pool = [(1, 1), (1, 2), (2, 1), (3, 1)];
        for n in 1..=3 {
            let mut idx = vec![0usize; n];
            loop {
                let a = av(&idx.iter().map(|&i| pool[i]).collect::<Vec<_>>());
                let series = barnes_numbers(10, &a);
                for (k, b) in series.iter().enumerate() {
                    assert_eq!(&barnes_number_convolution(k, &a), b, "k={k} a={a}");
                }
                // odometer over pool^n
                let mut p = 0;
                while p < n && idx[p] == pool.len() - 1 {
                    idx[p] = 0;
                    p += 1;
                }
                if p == n {
                    break;
                }
                idx[p] += 1;
            }
        }
    }

    #[test]
    fn poly_examples() {
        let q = rat(3, 2);
        let a = AVec::new(vec![q.clone()]).unwrap();
        assert_eq!(
            barnes_poly(1, &a).poly,
            Poly::from_coeffs(vec![rat(-1, 2), q.recip()])
        );
        let b = barnes_poly(0, &AVec::from_ints(&[2, 3]).unwrap());
        assert_eq!(b.poly, Poly::constant(rat(1, 6)));
        let ones = AVec::from_ints(&[1, 1, 1]).unwrap();
        for k in 0..8 {
            assert_eq!(barnes_poly(k, &ones).poly, bernoulli_order_poly(k, 3));
        }
    }

    #[test]
    fn poly_routes_agree_and_leading_coefficient() {
        let a = av(&[(1, 1), (1, 2), (3, 1)]);
        let table = barnes_polys(9, &a);
        for (k, p) in table.iter().enumerate() {
            let direct = barnes_poly(k, &a);
            assert_eq!(&direct.poly, p);
            assert_eq!(direct.poly.eval(&int(0)), barnes_number(k, &a));
            assert_eq!(direct.poly.coeff(k), a.product().recip());
        }
    }

    #[test]
    fn subset_conventions() {
        let a = AVec::from_ints(&[1, 1, 1]).unwrap();
        assert_eq!(subset_barnes_number(2, &a, &[0, 1]), rat(5, 6));
        assert_eq!(subset_barnes_number(2, &a, &[0, 1]), bernoulli_order(2, 2));
        assert_eq!(subset_barnes_number(0, &a, &[]), int(1));
        assert_eq!(subset_barnes_number(3, &a, &[]), int(0));
        assert_eq!(subset_barnes_poly(3, &a, &[]), Poly::monomial(int(1), 3));
    }

    #[test]
    fn q_sequences() {
        let a = AVec::from_ints(&[2, 3]).unwrap();
        assert_eq!(q_sequence(0, &a, &rat(7, 3)), rat(1, 6));
        let one = AVec::from_ints(&[1]).unwrap();
        for k in 0..10 {
            assert_eq!(
                q_sequence(k, &one, &int(0)),
                sign_pow(k as i64) * bernoulli_number(k)
            );
        }
        let a12 = AVec::from_ints(&[1, 2]).unwrap();
        for m in 0..=20 {
            assert_eq!(
                q_dual(m, &a12, &int(0)),
                q_sequence(m, &a12, &int(0)),
                "m={m}"
            );
        }
    }

    #[test]
    fn p_poly_examples() {
        let one = AVec::from_ints(&[1]).unwrap();
        assert_eq!(p_poly(0, &one), Poly::constant(int(2)));
        // B_1(x; (q)) = x/q - 1/2, so P_1 = 2/q * (-1) = -2/q.
        let q = AVec::new(vec![rat(5, 3)]).unwrap();
        assert_eq!(p_poly(1, &q), Poly::constant(rat(-6, 5)));
        for m in 0..8usize {
            let b = crate::bernoulli::bernoulli_poly(m);
            let expected = (&b.reflect() + &b).scale(&int(m as i64 + 1));
            assert_eq!(p_poly(m, &one), expected);
        }
    }
}
