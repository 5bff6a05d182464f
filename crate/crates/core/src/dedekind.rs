//! Restricted partition functions and Fourier–Dedekind sums.
//!
//! The exact Fourier–Dedekind sum
//! `sigma_r(b_1..b_m; a) = (1/a) sum_{lambda^a = 1 != lambda} lambda^r / prod_k (1 - lambda^{b_k})`
//! is computed in the quotient ring `Q[x]/(1 + x + ... + x^{a-1})`: the
//! product of inverses of `1 - x^{b_k}` is found once by extended Euclid,
//! then each residue `r` is a cyclic rotation of that representative, and
//! the sum over the nontrivial roots of unity is read off its coefficients
//! using `sum_{lambda != 1} lambda^i = a [a | i] - 1`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::barnes::{AVec, BarnesTable};
use crate::error::{Error, Result};
use crate::exact::comb::factorial_rational;
use crate::exact::rational::{frac_part, int, is_integer, sign_pow};
use crate::exact::{Poly, Rational};

/// The part multiset `A = {a_1, ..., a_n}` of a restricted partition function.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionSpec {
    parts: Vec<u64>,
}

impl PartitionSpec {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidParameter(
                "partition spec has no parts".into(),
            ));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidParameter(
                "partition parts must be >= 1".into(),
            ));
        }
        Ok(PartitionSpec { parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_pairwise_coprime(&self) -> bool {
        pairwise_coprime(&self.parts)
    }

    pub fn require_pairwise_coprime(&self) -> Result<()> {
        if self.is_pairwise_coprime() {
            Ok(())
        } else {
            Err(Error::NotCoprime(format!(
                "parts {:?} are not pairwise coprime",
                self.parts
            )))
        }
    }

    pub fn to_avec(&self) -> AVec {
        AVec::new(self.parts.iter().map(|&a| int(a as i64)).collect()).expect("parts are positive")
    }
}

pub fn pairwise_coprime(parts: &[u64]) -> bool {
    parts
        .iter()
        .enumerate()
        .all(|(i, a)| parts[i + 1..].iter().all(|b| a.gcd(b) == 1))
}

/// Inverse of `a` modulo `m` in `[0, m)`; `None` unless `gcd(a, m) = 1`.
/// Modulo 1 everything is 0.
pub fn mod_inverse(a: i64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let m = m as i64;
    let g = a.rem_euclid(m).extended_gcd(&m);
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(m) as u64)
}

/// `p_A(t)` for every `t <= t_max`, by the coin-change recurrence over parts.
pub fn partition_counts_dp(spec: &PartitionSpec, t_max: usize) -> Vec<BigInt> {
    let mut counts = vec![BigInt::zero(); t_max + 1];
    counts[0] = BigInt::one();
    for &a in spec.parts() {
        let a = a as usize;
        for t in a..=t_max {
            let prev = counts[t - a].clone();
            counts[t] += prev;
        }
    }
    counts
}

pub fn partition_count_dp(spec: &PartitionSpec, t: usize) -> BigInt {
    partition_counts_dp(spec, t).pop().expect("non-empty table")
}

/// The two-part closed form
/// `p_{a,b}(t) = t/(ab) + 1 - {b^{-1} t / a} - {a^{-1} t / b}`.
pub fn popoviciu(a: u64, b: u64, t: u64) -> Result<BigInt> {
    let (a_inv, b_inv) = match (mod_inverse(a as i64, b), mod_inverse(b as i64, a)) {
        (Some(ai), Some(bi)) => (ai, bi),
        _ => return Err(Error::NotCoprime(format!("gcd({a}, {b}) != 1"))),
    };
    let t_r = int(t as i64);
    let value = &t_r / int((a * b) as i64) + Rational::one()
        - frac_part(&(int(b_inv as i64) * &t_r / int(a as i64)))
        - frac_part(&(int(a_inv as i64) * &t_r / int(b as i64)));
    if !is_integer(&value) || value.is_negative() {
        return Err(Error::Inconsistent(format!(
            "closed form for p_{{{a},{b}}}({t}) gave {value}"
        )));
    }
    Ok(value.to_integer())
}

/// Key of one Fourier–Dedekind sum `sigma_r(others; modulus)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FdsKey {
    pub r: i64,
    pub others: Vec<u64>,
    pub modulus: u64,
}

impl FdsKey {
    pub fn new(r: i64, others: Vec<u64>, modulus: u64) -> Result<Self> {
        if modulus == 0 || others.contains(&0) {
            return Err(Error::InvalidParameter(
                "Fourier-Dedekind arguments must be positive".into(),
            ));
        }
        if let Some(b) = others.iter().find(|b| b.gcd(&modulus) != 1) {
            return Err(Error::NotCoprime(format!(
                "gcd({b}, {modulus}) != 1: 1 - x^{b} is not invertible"
            )));
        }
        Ok(FdsKey { r, others, modulus })
    }
}

/// `sigma_r(others; modulus)` for all residues `r`, sharing one
/// quotient-ring inverse.
#[derive(Clone, Debug)]
pub struct FourierDedekind {
    modulus: u64,
    /// Representative of `prod_k (1 - x^{b_k})^{-1}` reduced below degree `a - 1`.
    base: Vec<Rational>,
}

impl FourierDedekind {
    pub fn new(others: &[u64], modulus: u64) -> Result<Self> {
        FdsKey::new(0, others.to_vec(), modulus)?;
        if modulus == 1 {
            return Ok(FourierDedekind {
                modulus,
                base: Vec::new(),
            });
        }
        let a = modulus as usize;
        let phi = Poly::from_coeffs(vec![Rational::one(); a]);
        let mut acc = Poly::one();
        for &b in others {
            let factor = &Poly::one() - &Poly::monomial(Rational::one(), b as usize);
            let inv = factor.inverse_mod(&phi).ok_or_else(|| {
                Error::NotCoprime(format!("1 - x^{b} is not a unit modulo Phi_{modulus}"))
            })?;
            acc = (&acc * &inv).rem(&phi);
        }
        let mut base = acc.into_coeffs();
        base.resize(a, Rational::zero());
        Ok(FourierDedekind { modulus, base })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn sigma(&self, r: i64) -> Rational {
        let a = self.modulus;
        if a == 1 {
            return Rational::zero();
        }
        let a_us = a as usize;
        let shift = r.rem_euclid(a as i64) as usize;
        // Coefficient of x^0 after multiplying by x^shift in Q[x]/(x^a - 1).
        let c0 = &self.base[(a_us - shift) % a_us];
        let total = self.base.iter().fold(Rational::zero(), |acc, c| acc + c);
        (c0 * int(a as i64) - total) / int(a as i64)
    }
}

pub fn fourier_dedekind_exact(key: &FdsKey) -> Result<Rational> {
    Ok(FourierDedekind::new(&key.others, key.modulus)?.sigma(key.r))
}

/// Direct complex summation over the nontrivial `a`-th roots of unity.
pub fn fourier_dedekind_float(key: &FdsKey) -> Result<f64> {
    FdsKey::new(key.r, key.others.clone(), key.modulus)?;
    let a = key.modulus;
    let r = key.r.rem_euclid(a as i64) as u64;
    let mut total = Complex64::new(0.0, 0.0);
    for j in 1..a {
        let root = |e: u64| {
            let angle = 2.0 * std::f64::consts::PI * ((j * e) % a) as f64 / a as f64;
            Complex64::from_polar(1.0, angle)
        };
        let denom = key.others.iter().fold(Complex64::new(1.0, 0.0), |acc, &b| {
            acc * (Complex64::new(1.0, 0.0) - root(b))
        });
        total += root(r) / denom;
    }
    Ok(total.re / a as f64)
}

/// Precomputed pieces of the closed form
/// `p_A(t) = (-1)^{n-1}/(n-1)! B_{n-1}(-t; a) + sum_j sigma_{-t}(a without a_j; a_j)`.
#[derive(Clone, Debug)]
pub struct PartitionClosedForm {
    polynomial_part: Poly,
    sums: Vec<FourierDedekind>,
}

impl PartitionClosedForm {
    pub fn new(spec: &PartitionSpec) -> Result<Self> {
        spec.require_pairwise_coprime()?;
        let n = spec.len();
        let mut table = BarnesTable::new(spec.to_avec());
        let weight = sign_pow(n as i64 - 1) / factorial_rational(n - 1);
        let polynomial_part = table.poly(n - 1).reflect().scale(&weight);
        let sums = (0..n)
            .map(|j| {
                let others: Vec<u64> = spec
                    .parts()
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != j)
                    .map(|(_, &p)| p)
                    .collect();
                FourierDedekind::new(&others, spec.parts()[j])
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PartitionClosedForm {
            polynomial_part,
            sums,
        })
    }

    /// The polynomial (in `t`) part of the closed form.
    pub fn polynomial_part(&self) -> &Poly {
        &self.polynomial_part
    }

    /// The periodic part `sum_j sigma_{-t}(...; a_j)`.
    pub fn periodic_part(&self, t: i64) -> Rational {
        self.sums
            .iter()
            .fold(Rational::zero(), |acc, s| acc + s.sigma(-t))
    }

    pub fn eval(&self, t: i64) -> Rational {
        self.polynomial_part.eval(&int(t)) + self.periodic_part(t)
    }
}

pub fn partition_count_closed(spec: &PartitionSpec, t: u64) -> Result<Rational> {
    Ok(PartitionClosedForm::new(spec)?.eval(t as i64))
}

/// `sigma_t(1, ..., 1; a)` with `n` ones, by the two-branch closed form in
/// terms of `B_n(.; (a, 1, ..., 1))`.
pub fn sigma_ones_closed(t: i64, n: usize, a: u64) -> Result<Rational> {
    if a == 0 || n == 0 {
        return Err(Error::InvalidParameter("need a >= 1 and n >= 1".into()));
    }
    let mut table = BarnesTable::new(ones_avec(a, n));
    let weight = sign_pow(n as i64 - 1) / factorial_rational(n);
    let residue = t.rem_euclid(a as i64);
    let at = if residue == 0 { a as i64 } else { residue };
    Ok(weight * table.eval(n, &int(at)))
}

/// `(a, 1, ..., 1)` with `n` ones.
pub fn ones_avec(a: u64, n: usize) -> AVec {
    let mut v = vec![int(a as i64)];
    v.extend(std::iter::repeat_n(int(1), n));
    AVec::new(v).expect("positive entries")
}

/// `p_{a,1,...,1}(t)` (`n` ones) from Bernoulli–Barnes polynomials alone:
/// `(-1)^n/n! (B_n(-t) - B_n((-t) mod a)) + [a | t]`.
pub fn special_partition_closed(a: u64, n: usize, t: i64) -> Result<Rational> {
    if a == 0 || n == 0 {
        return Err(Error::InvalidParameter("need a >= 1 and n >= 1".into()));
    }
    let mut table = BarnesTable::new(ones_avec(a, n));
    let weight = sign_pow(n as i64) / factorial_rational(n);
    let residue = (-t).rem_euclid(a as i64);
    let chi = if t.rem_euclid(a as i64) == 0 { 1 } else { 0 };
    Ok(weight * (table.eval(n, &int(-t)) - table.eval(n, &int(residue))) + int(chi))
}

/// `S_m(a, b) = sum_{r=0}^{a-1} {a^{-1} r / b} B_m(r / b)`, `a^{-1}` taken mod `b`.
pub fn apostol_sum(m: usize, a: u64, b: u64) -> Result<Rational> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter("need positive a and b".into()));
    }
    let a_inv =
        mod_inverse(a as i64, b).ok_or_else(|| Error::NotCoprime(format!("gcd({a}, {b}) != 1")))?;
    let bm = crate::bernoulli::bernoulli_poly(m);
    let b_r = int(b as i64);
    Ok((0..a).fold(Rational::zero(), |acc, r| {
        let weight = frac_part(&(int((a_inv * r) as i64) / &b_r));
        acc + weight * bm.eval(&(int(r as i64) / &b_r))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::comb::binomial;
    use crate::exact::rational::rat;
    use num_traits::ToPrimitive;

    fn spec(p: &[u64]) -> PartitionSpec {
        PartitionSpec::new(p.to_vec()).unwrap()
    }

    #[test]
    fn dp_examples() {
        for t in 0..30 {
            assert_eq!(partition_count_dp(&spec(&[1, 1]), t), BigInt::from(t + 1));
        }
        assert_eq!(partition_count_dp(&spec(&[3, 5]), 8), BigInt::one());
        assert_eq!(partition_count_dp(&spec(&[7, 4, 9]), 0), BigInt::one());
        // ones: C(n-1+t, n-1)
        for t in 0..20i64 {
            assert_eq!(
                int(partition_count_dp(&spec(&[1, 1, 1, 1]), t as usize)
                    .to_i64()
                    .unwrap()),
                binomial(3 + t, 3)
            );
        }
    }

    #[test]
    fn spec_validation() {
        assert!(PartitionSpec::new(vec![]).is_err());
        assert!(PartitionSpec::new(vec![2, 0]).is_err());
        assert!(spec(&[1, 1, 2]).is_pairwise_coprime());
        assert!(!spec(&[2, 4]).is_pairwise_coprime());
        assert!(partition_count_closed(&spec(&[6, 4]), 3).is_err());
    }

    #[test]
    fn popoviciu_examples() {
        assert_eq!(popoviciu(3, 5, 8).unwrap(), BigInt::one());
        assert_eq!(popoviciu(3, 5, 0).unwrap(), BigInt::one());
        assert_eq!(popoviciu(3, 5, 1).unwrap(), BigInt::zero());
        assert!(matches!(popoviciu(4, 6, 3), Err(Error::NotCoprime(_))));
    }

    #[test]
    fn modular_inverses() {
        assert_eq!(mod_inverse(3, 5), Some(2));
        assert_eq!(mod_inverse(-2, 5), Some(2));
        assert_eq!(mod_inverse(4, 6), None);
        assert_eq!(mod_inverse(7, 1), Some(0));
    }

    #[test]
    fn fds_examples() {
        let k = FdsKey::new(0, vec![1], 2).unwrap();
        assert_eq!(fourier_dedekind_exact(&k).unwrap(), rat(1, 4));
        assert!((fourier_dedekind_float(&k).unwrap() - 0.25).abs() < 1e-12);
        let k1 = FdsKey::new(1, vec![1], 2).unwrap();
        assert_eq!(fourier_dedekind_exact(&k1).unwrap(), rat(-1, 4));
        assert!((fourier_dedekind_float(&k1).unwrap() + 0.25).abs() < 1e-12);
        assert!(matches!(
            FdsKey::new(0, vec![2], 4),
            Err(Error::NotCoprime(_))
        ));
        // Modulus 1: the sum over nontrivial roots is empty.
        let k2 = FdsKey::new(3, vec![5, 7], 1).unwrap();
        assert_eq!(fourier_dedekind_exact(&k2).unwrap(), Rational::zero());
    }

    #[test]
    fn fds_is_periodic_and_matches_roots() {
        let fd = FourierDedekind::new(&[3, 4], 7).unwrap();
        for r in -10..10 {
            assert_eq!(fd.sigma(r), fd.sigma(r + 7));
            let key = FdsKey::new(r, vec![3, 4], 7).unwrap();
            let f = fourier_dedekind_float(&key).unwrap();
            assert!((crate::exact::rational::to_f64(&fd.sigma(r)) - f).abs() < 1e-12);
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(partition_count_closed(&spec(&[3, 5]), 8).unwrap(), int(1));
        let ones = spec(&[1, 1, 1]);
        for t in 0..25 {
            assert_eq!(
                partition_count_closed(&ones, t).unwrap(),
                binomial(2 + t as i64, 2)
            );
        }
    }

    #[test]
    fn sigma_ones_examples() {
        assert_eq!(sigma_ones_closed(0, 1, 2).unwrap(), rat(1, 4));
        for a in 1..=7u64 {
            for n in 1..=3usize {
                let fd = FourierDedekind::new(&vec![1; n], a).unwrap();
                for t in -(a as i64)..(2 * a as i64) {
                    assert_eq!(
                        sigma_ones_closed(t, n, a).unwrap(),
                        fd.sigma(t),
                        "a={a} n={n} t={t}"
                    );
                }
            }
        }
    }

    #[test]
    fn apostol_examples() {
        for b in 1..8 {
            assert_eq!(apostol_sum(3, 1, b).unwrap(), Rational::zero());
        }
        // Direct evaluation: a=3, b=5, m=1, a^{-1} = 2 (mod 5):
        // r=1: {2/5} B_1(1/5) = 2/5 * (-3/10) = -3/25; r=2: {4/5} B_1(2/5) = 4/5 * (-1/10).
        assert_eq!(apostol_sum(1, 3, 5).unwrap(), rat(-3, 25) + rat(-2, 25));
        assert!(apostol_sum(1, 4, 6).is_err());
    }
}
