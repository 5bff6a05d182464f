//! Hurwitz and Barnes zeta functions at real `s`.
//!
//! Hurwitz zeta uses Euler–Maclaurin summation with an adaptively chosen
//! shift. The direct Barnes zeta nests the same summation one coordinate at
//! a time: summing `f(m) = zeta_{n-1}(s, x + m a_n)` over `m`, the integral,
//! boundary and derivative terms are again lower-dimensional Barnes zetas,
//! because `d/dy zeta_{n-1}(s, y) = -s zeta_{n-1}(s + 1, y)` and
//! `int_y^oo zeta_{n-1}(s, u) du = zeta_{n-1}(s - 1, y)/(s - 1)`.
//! The base case is `zeta_1(s, y; (a)) = a^{-s} zeta(s, y/a)`.

use std::sync::OnceLock;

use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::barnes::{AVec, BarnesTable};
use crate::bernoulli::{bernoulli_number, bernoulli_order_poly};
use crate::dedekind::{partition_counts_dp, FourierDedekind, PartitionSpec};
use crate::error::{Error, Result};
use crate::exact::comb::{binomial, factorial_rational};
use crate::exact::rational::{int, sign_pow, to_f64};
use crate::exact::{Poly, Rational};

pub const DEFAULT_TOL: f64 = 1e-12;

/// Euler–Maclaurin correction terms available, `B_{2j}/(2j)!` for `j <= MAX_TERMS`.
const MAX_TERMS: usize = 60;

/// Largest shift tried before giving up.
const MAX_SHIFT: usize = 1 << 22;

fn em_coefficients() -> &'static [f64] {
    static COEFFS: OnceLock<Vec<f64>> = OnceLock::new();
    COEFFS.get_or_init(|| {
        (0..=MAX_TERMS)
            .map(|j| {
                if j == 0 {
                    0.0
                } else {
                    to_f64(&(bernoulli_number(2 * j) / factorial_rational(2 * j)))
                }
            })
            .collect()
    })
}

/// A Barnes zeta evaluation point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZetaQuery {
    pub s: f64,
    pub x: f64,
    pub a: AVec,
    pub target_abs_err: f64,
}

impl ZetaQuery {
    pub fn new(s: f64, x: f64, a: AVec, target_abs_err: f64) -> Result<Self> {
        if !s.is_finite() {
            return Err(Error::Domain(format!("s = {s} is not finite")));
        }
        check_x(x)?;
        if target_abs_err.is_nan() || target_abs_err <= 0.0 {
            return Err(Error::InvalidParameter(
                "target_abs_err must be positive".into(),
            ));
        }
        Ok(ZetaQuery {
            s,
            x,
            a,
            target_abs_err,
        })
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }
}

fn check_x(x: f64) -> Result<()> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("x = {x} must be a positive real")))
    }
}

fn nonpositive_integer(s: f64) -> Option<u64> {
    (s <= 0.0 && s.fract() == 0.0).then(|| (-s) as u64)
}

/// `zeta(s; x) = sum_{m >= 0} (x + m)^{-s}`, continued to all real `s != 1`.
pub fn hurwitz_zeta(s: f64, x: f64, target_abs_err: f64) -> Result<f64> {
    check_x(x)?;
    if s == 1.0 {
        return Err(Error::Pole(s));
    }
    if !s.is_finite() {
        return Err(Error::Domain(format!("s = {s} is not finite")));
    }
    let coeffs = em_coefficients();
    if let Some(k) = nonpositive_integer(s) {
        // With no shift the expansion terminates: (s)_{2j-1} vanishes once 2j-2 >= k.
        let mut total = x.powf(1.0 - s) / (s - 1.0) + x.powf(-s) / 2.0;
        let mut rising = s;
        let mut j = 1;
        while 2 * j - 2 < k as usize {
            total += coeffs[j] * rising * x.powi((k as i32) - 2 * j as i32 + 1);
            rising *= (s + (2 * j) as f64 - 1.0) * (s + (2 * j) as f64);
            j += 1;
        }
        return Ok(total);
    }
    let mut shift = 10 + s.abs().ceil() as usize;
    while shift <= MAX_SHIFT {
        if let Some(v) = hurwitz_at_shift(s, x, shift, target_abs_err, coeffs) {
            return Ok(v);
        }
        shift *= 2;
    }
    Err(Error::Convergence(format!(
        "Euler-Maclaurin did not converge for s = {s}, x = {x}"
    )))
}

fn hurwitz_at_shift(s: f64, x: f64, shift: usize, tol: f64, coeffs: &[f64]) -> Option<f64> {
    let head: f64 = (0..shift).rev().map(|m| (x + m as f64).powf(-s)).sum();
    let y = x + shift as f64;
    let mut total = head + y.powf(1.0 - s) / (s - 1.0) + y.powf(-s) / 2.0;
    let mut rising = s;
    let mut ypow = y.powf(-s - 1.0);
    let mut prev = f64::INFINITY;
    for (j, c) in coeffs.iter().enumerate().skip(1) {
        let term = c * rising * ypow;
        total += term;
        if term.abs() <= tol.max(4.0 * f64::EPSILON * total.abs()) {
            return Some(total);
        }
        if term.abs() > prev {
            return None;
        }
        prev = term.abs();
        rising *= (s + (2 * j) as f64 - 1.0) * (s + (2 * j) as f64);
        ypow /= y * y;
    }
    None
}

/// Lattice sum `sum_{m in Z_{>=0}^n} (x + m . a)^{-s}` for `s > n`, by
/// nested Euler–Maclaurin summation.
pub fn barnes_zeta_direct(q: &ZetaQuery) -> Result<f64> {
    let n = q.n();
    if q.s <= n as f64 {
        return Err(Error::Convergence(format!(
            "the lattice sum needs s > {n}, got s = {}",
            q.s
        )));
    }
    let a: Vec<f64> = q.a.entries().iter().map(to_f64).collect();
    nested_zeta(q.s, q.x, &a, q.target_abs_err)
}

fn nested_zeta(s: f64, x: f64, a: &[f64], tol: f64) -> Result<f64> {
    let (&last, rest) = a.split_last().expect("non-empty parameter vector");
    if rest.is_empty() {
        let scale = last.powf(-s);
        let inner_tol = if scale > 0.0 { tol / scale } else { tol };
        return Ok(scale * hurwitz_zeta(s, x / last, inner_tol)?);
    }
    let coeffs = em_coefficients();
    let mut shift = ((10.0 + s) - x / last).ceil().max(4.0) as usize;
    while shift <= MAX_SHIFT / 64 {
        let inner_tol = (tol / (4.0 * (shift + MAX_TERMS + 2) as f64)).max(f64::MIN_POSITIVE);
        let mut head = 0.0;
        for m in (0..shift).rev() {
            head += nested_zeta(s, x + m as f64 * last, rest, inner_tol)?;
        }
        let y = x + shift as f64 * last;
        let mut total = head
            + nested_zeta(s - 1.0, y, rest, inner_tol * last)? / (last * (s - 1.0))
            + nested_zeta(s, y, rest, inner_tol)? / 2.0;
        let mut rising = s;
        let mut a_pow = last;
        let mut prev = f64::INFINITY;
        let mut converged = false;
        for (j, c) in coeffs.iter().enumerate().skip(1) {
            let weight = c * rising * a_pow;
            let term = weight * nested_zeta(s + (2 * j) as f64 - 1.0, y, rest, inner_tol)?;
            total += term;
            if term.abs() <= tol.max(4.0 * f64::EPSILON * total.abs()) {
                converged = true;
                break;
            }
            if term.abs() > prev {
                break;
            }
            prev = term.abs();
            rising *= (s + (2 * j) as f64 - 1.0) * (s + (2 * j) as f64);
            a_pow *= last * last;
        }
        if converged {
            return Ok(total);
        }
        shift *= 2;
    }
    Err(Error::Convergence(format!(
        "nested Euler-Maclaurin did not converge for s = {s}, x = {x}"
    )))
}

/// Truncated partition-weighted sum `sum_{t <= t_max} p_A(t) (x + t)^{-s}`
/// for integer `a`, with a rigorous upper bound on the omitted tail from
/// `p_A(t) <= C(t + n - 1, n - 1)`. The true value lies in
/// `[partial, partial + tail_bound]` up to rounding.
pub fn barnes_zeta_partition_sum(q: &ZetaQuery, t_max: usize) -> Result<(f64, f64)> {
    let parts =
        q.a.as_integers()
            .ok_or_else(|| Error::InvalidParameter("partition sum needs integer a".into()))?;
    let n = parts.len();
    if q.s <= n as f64 {
        return Err(Error::Convergence(format!("needs s > {n}")));
    }
    let spec = PartitionSpec::new(parts)?;
    let counts = partition_counts_dp(&spec, t_max);
    let partial = counts
        .iter()
        .enumerate()
        .rev()
        .map(|(t, c)| c.to_f64().unwrap_or(f64::INFINITY) * (q.x + t as f64).powf(-q.s))
        .sum();
    let tail = binomial_tail(q.s, q.x, n, t_max + 1, q.target_abs_err)?;
    Ok((partial, tail))
}

/// `sum_{t >= start} C(n - 1 + t, n - 1) (x + t)^{-s}` for `s > n`, by writing
/// the binomial as a polynomial in `u = x + t` and summing each power with
/// Hurwitz zeta.
fn binomial_tail(s: f64, x: f64, n: usize, start: usize, tol: f64) -> Result<f64> {
    let x_exact = exact_real(x)?;
    let weights = binomial_in_shifted_powers(n, &x_exact);
    let y = x + start as f64;
    let mut total = 0.0;
    for (k, c) in weights.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        total += to_f64(c) * hurwitz_zeta(s - k as f64, y, tol / n as f64)?;
    }
    Ok(total)
}

/// `C(n - 1 + t, n - 1)` rewritten as a polynomial in `u = x + t`.
fn binomial_in_shifted_powers(n: usize, x: &Rational) -> Poly {
    let in_t = (1..n as i64)
        .fold(Poly::one(), |acc, i| &acc * &Poly::linear(int(1), int(i)))
        .scale(&factorial_rational(n - 1).recip());
    in_t.shift(&-x)
}

/// The binary value of a finite float as an exact rational.
pub fn exact_real(x: f64) -> Result<Rational> {
    Rational::from_float(x).ok_or_else(|| Error::Domain(format!("{x} is not finite")))
}

/// Exact weights of the Hurwitz terms in the decomposition of a Barnes zeta.
#[derive(Clone, Debug)]
pub struct Decomposition {
    /// `w_k` multiplying `zeta(s - k; x)`.
    pub polynomial_weights: Vec<Rational>,
    /// For each `a_j`: `(a_j, [sigma_{-r}(...; a_j) for r in 0..a_j])`.
    pub periodic_weights: Vec<(u64, Vec<Rational>)>,
}

impl Decomposition {
    pub fn new(x: &Rational, a: &AVec) -> Result<Self> {
        let parts = a.as_integers().ok_or_else(|| {
            Error::InvalidParameter(format!("decomposition needs integer entries, got {a}"))
        })?;
        let spec = PartitionSpec::new(parts.clone())?;
        spec.require_pairwise_coprime()?;
        let n = parts.len();
        let mut table = BarnesTable::new(a.clone());
        let lead = sign_pow(n as i64 - 1) / factorial_rational(n - 1);
        let polynomial_weights = (0..n)
            .map(|k| {
                &lead
                    * sign_pow(k as i64)
                    * binomial(n as i64 - 1, k as i64)
                    * table.eval(n - 1 - k, x)
            })
            .collect();
        let periodic_weights = (0..n)
            .map(|j| {
                let others: Vec<u64> = parts
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != j)
                    .map(|(_, &p)| p)
                    .collect();
                let fd = FourierDedekind::new(&others, parts[j])?;
                Ok((
                    parts[j],
                    (0..parts[j] as i64).map(|r| fd.sigma(-r)).collect(),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Decomposition {
            polynomial_weights,
            periodic_weights,
        })
    }
}

/// The Barnes zeta from its decomposition into Hurwitz zetas weighted by
/// Bernoulli–Barnes polynomials and Fourier–Dedekind sums. Needs pairwise
/// coprime integer `a`; valid for all real `s` outside the poles `1..=n`.
pub fn barnes_zeta_decomposed(q: &ZetaQuery) -> Result<f64> {
    let n = q.n();
    if q.s.fract() == 0.0 && q.s >= 1.0 && q.s <= n as f64 {
        return Err(Error::Pole(q.s));
    }
    let x_exact = exact_real(q.x)?;
    let d = Decomposition::new(&x_exact, &q.a)?;
    let count = n + d
        .periodic_weights
        .iter()
        .map(|(a, _)| *a as usize)
        .sum::<usize>();
    let tol = q.target_abs_err / (count as f64);
    let mut total = 0.0;
    for (k, w) in d.polynomial_weights.iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        let wf = to_f64(w);
        total += wf * hurwitz_zeta(q.s - k as f64, q.x, tol / wf.abs().max(1.0))?;
    }
    for (aj, sigmas) in &d.periodic_weights {
        let scale = (*aj as f64).powf(-q.s);
        for (r, sigma) in sigmas.iter().enumerate() {
            if sigma.is_zero() {
                continue;
            }
            let wf = scale * to_f64(sigma);
            let at = (q.x + r as f64) / *aj as f64;
            total += wf * hurwitz_zeta(q.s, at, tol / wf.abs().max(1.0))?;
        }
    }
    Ok(total)
}

/// Exact `zeta(-k; x, a) = (-1)^n k!/(k+n)! B_{k+n}(x; a)`.
pub fn barnes_zeta_special(k: usize, x: &Rational, a: &AVec) -> Rational {
    let n = a.len();
    let poly = crate::barnes::barnes_poly(k + n, a).poly;
    sign_pow(n as i64) * factorial_rational(k) / factorial_rational(k + n) * poly.eval(x)
}

/// Exact weights of `zeta(s - k; x)` in the order-`n` Hurwitz zeta.
pub fn order_n_weights(n: usize, x: &Rational) -> Vec<Rational> {
    let lead = sign_pow(n as i64 - 1) / factorial_rational(n - 1);
    (0..n)
        .map(|k| {
            &lead
                * sign_pow(k as i64)
                * binomial(n as i64 - 1, k as i64)
                * bernoulli_order_poly(n - 1 - k, n as u32).eval(x)
        })
        .collect()
}

/// `zeta_n(s; x) = sum_t C(n - 1 + t, n - 1) (x + t)^{-s}` by direct
/// summation of the first terms plus an exactly rewritten tail; `s > n`.
pub fn hurwitz_order_n_direct(s: f64, x: f64, n: usize, target_abs_err: f64) -> Result<f64> {
    check_order(n)?;
    check_x(x)?;
    if s <= n as f64 {
        return Err(Error::Convergence(format!("direct sum needs s > {n}")));
    }
    const HEAD: usize = 32;
    let head: f64 = (0..HEAD)
        .rev()
        .map(|t| to_f64(&binomial((n - 1 + t) as i64, n as i64 - 1)) * (x + t as f64).powf(-s))
        .sum();
    Ok(head + binomial_tail(s, x, n, HEAD, target_abs_err)?)
}

/// `zeta_n(s; x)` as a combination of `zeta(s - k; x)` with order-`n`
/// Bernoulli polynomial weights; `s` outside `1..=n`.
pub fn hurwitz_order_n_bernoulli(s: f64, x: f64, n: usize, target_abs_err: f64) -> Result<f64> {
    check_order(n)?;
    check_x(x)?;
    if s.fract() == 0.0 && s >= 1.0 && s <= n as f64 {
        return Err(Error::Pole(s));
    }
    let weights = order_n_weights(n, &exact_real(x)?);
    let mut total = 0.0;
    for (k, w) in weights.iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        let wf = to_f64(w);
        total += wf
            * hurwitz_zeta(
                s - k as f64,
                x,
                target_abs_err / (n as f64 * wf.abs().max(1.0)),
            )?;
    }
    Ok(total)
}

/// Direct summation when it converges, the Bernoulli route otherwise.
pub fn hurwitz_order_n(s: f64, x: f64, n: usize, target_abs_err: f64) -> Result<f64> {
    if s > n as f64 {
        hurwitz_order_n_direct(s, x, n, target_abs_err)
    } else {
        hurwitz_order_n_bernoulli(s, x, n, target_abs_err)
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameter("order n must be >= 1".into()))
    } else {
        Ok(())
    }
}

/// `(-1)^n m!/(m+n)! B^{(n)}_{m+n}(x)`, the order-`n` Hurwitz zeta at `s = -m`.
pub fn hurwitz_order_n_special(m: usize, x: &Rational, n: usize) -> Rational {
    sign_pow(n as i64) * factorial_rational(m) / factorial_rational(m + n)
        * bernoulli_order_poly(m + n, n as u32).eval(x)
}
