//! Polynomial identities in `x` for Bernoulli–Barnes and higher-order
//! Bernoulli polynomials.

use num_traits::Zero;

use super::sampling::subsets_of_size;
use super::{grid, key, with_draws, Identity, Kind, Mode, Outcome, Params};
use crate::barnes::{barnes_polys, AVec};
use crate::bernoulli::{bernoulli_order_poly, bernoulli_poly};
use crate::error::Result;
use crate::exact::comb::{binomial, factorial_rational, inv_factorial, stirling_first};
use crate::exact::rational::{int, pow, sign_pow};
use crate::exact::{Poly, Rational};

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity {
            id: "STIRLING",
            anchor: "Coefficients of higher-order Bernoulli polynomials via Stirling numbers",
            statement: "C(n-1, n-1-k) B_{n-1-k}^(n)(x) = sum_{m=0}^{n-1-k} C(m+k, m) s(n, m+k+1) x^m",
            mode: Mode::ExactPolynomial,
            kind: Kind::Asserted,
            sweep_keys: const { &[key("n", (1, 10), (1, 16)), key("k", (0, 9), (0, 15))] },
            cases: |r, _| grid(r, &["n", "k"]),
            evaluate: stirling,
        },
        Identity {
            id: "COR8",
            anchor: "Higher-order Bernoulli polynomial as a convolution with ordinary ones",
            statement: "B_{m+n}^(n)(x) = (m+n) C(m+n-1, n-1) sum_{k=0}^{n-1} (-1)^k C(n-1,k) B_{n-1-k}^(n)(x) B_{m+k+1}(x)/(m+k+1)",
            mode: Mode::ExactPolynomial,
            kind: Kind::Asserted,
            sweep_keys: const { &[key("n", (1, 4), (1, 6)), key("m", (1, 8), (0, 12))] },
            cases: |r, _| grid(r, &["n", "m"]),
            evaluate: order_convolution,
        },
        Identity {
            id: "DIFF",
            anchor: "Difference formula for Bernoulli-Barnes polynomials",
            statement: "(-1)^m B_m(-x;a) - B_m(x;a) = m! sum_{k=0}^{n-1} sum_{|I|=k} B_{m-n+k}(x;a_I)/(m-n+k)!, B_j(x;empty) = x^j, 1/(negative)! = 0",
            mode: Mode::ExactPolynomial,
            kind: Kind::Asserted,
            sweep_keys: const { &[
                key("n", (1, 4), (1, 5)),
                key("m", (0, 10), (0, 14)),
                key("draw", (1, 3), (0, 100)),
            ] },
            cases: |r, seed| with_draws(grid(r, &["n", "m", "draw"]), seed),
            evaluate: difference,
        },
        Identity {
            id: "SHIFT",
            anchor: "Reflection of Bernoulli-Barnes polynomials about A/2",
            statement: "B_m(x + A; a) = (-1)^m B_m(-x; a), A = sum a_i",
            mode: Mode::ExactPolynomial,
            kind: Kind::Asserted,
            sweep_keys: const { &[
                key("n", (1, 4), (1, 5)),
                key("m", (0, 10), (0, 14)),
                key("draw", (1, 3), (0, 100)),
            ] },
            cases: |r, seed| with_draws(grid(r, &["n", "m", "draw"]), seed),
            evaluate: shift,
        },
        Identity {
            id: "SYMM1",
            anchor: "Two-index symmetry of Bernoulli-Barnes polynomials",
            statement: "(-1)^m sum_{k=0}^m C(m,k) A^{m-k} B_{l+k}(x;a) = (-1)^l sum_{k=0}^l C(l,k) A^{l-k} B_{m+k}(-x;a)",
            mode: Mode::ExactPolynomial,
            kind: Kind::Asserted,
            sweep_keys: const { &[
                key("n", (1, 3), (1, 5)),
                key("l", (0, 8), (0, 12)),
                key("m", (0, 8), (0, 12)),
                key("draw", (1, 2), (0, 100)),
            ] },
            cases: |r, seed| with_draws(grid(r, &["n", "l", "m", "draw"]), seed),
            evaluate: symmetry,
        },
        Identity {
            id: "SYMM2",
            anchor: "Derivative form of the two-index symmetry",
            statement: "(-1)^m/(l+m+2) sum_{k=0}^m C(m+1,k)(l+k+1) A^{m+1-k} B_{l+k}(x;a) \
                        + (-1)^l/(l+m+2) sum_{k=0}^l C(l+1,k)(m+k+1) A^{l+1-k} B_{m+k}(-x;a) \
                        = (-1)^{m+1} B_{l+m+1}(x;a) + (-1)^{l+1} B_{l+m+1}(-x;a)",
            mode: Mode::ExactPolynomial,
            kind: Kind::Asserted,
            sweep_keys: SYMM_KEYS,
            cases: |r, seed| with_draws(grid(r, &["n", "l", "m", "draw"]), seed),
            evaluate: |p| derivative_symmetry(p, SymmetryForm::Corrected),
        },
        Identity {
            id: "SYMM2_LITERAL",
            anchor: "Derivative form of the symmetry: second sum to k=n with weight (l+k+1), B_{n+m+1}(-x;a) on the right",
            statement: "as SYMM2 but with sum_{k=0}^n C(l+1,k)(l+k+1) A^{l+1-k} B_{m+k}(-x;a) and (-1)^{l+1} B_{n+m+1}(-x;a)",
            mode: Mode::ExactPolynomial,
            kind: Kind::Reported,
            sweep_keys: SYMM_KEYS,
            cases: |r, seed| with_draws(grid(r, &["n", "l", "m", "draw"]), seed),
            evaluate: |p| derivative_symmetry(p, SymmetryForm::Literal),
        },
        Identity {
            id: "SYMM2_L_ONLY",
            anchor: "Derivative form of the symmetry with only the n -> l index repair",
            statement: "as SYMM2 but with weight (l+k+1) in the second sum",
            mode: Mode::ExactPolynomial,
            kind: Kind::Reported,
            sweep_keys: SYMM_KEYS,
            cases: |r, seed| with_draws(grid(r, &["n", "l", "m", "draw"]), seed),
            evaluate: |p| derivative_symmetry(p, SymmetryForm::IndexOnly),
        },
        Identity {
            id: "PREC",
            anchor: "Recurrence for P_m(x) = (m+1) A^{-m} (B_m(-x;a) + B_m(x;a))",
            statement: "P_{2m+1}(x) = -sum_{k=0}^m C(m+1,k) P_{m+k}(x), m >= 1",
            mode: Mode::ExactPolynomial,
            kind: Kind::Asserted,
            sweep_keys: PREC_KEYS,
            cases: |r, seed| with_draws(grid(r, &["n", "m", "draw"]), seed),
            evaluate: |p| p_recurrence(p, false),
        },
        Identity {
            id: "PREC_LITERAL",
            anchor: "Recurrence for P_m(x) with the factor (2m+1)/(2(m+1))",
            statement: "P_{2m+1}(x) = -(2m+1)/(2(m+1)) sum_{k=0}^m C(m+1,k) P_{m+k}(x)",
            mode: Mode::ExactPolynomial,
            kind: Kind::Reported,
            sweep_keys: PREC_KEYS,
            cases: |r, seed| with_draws(grid(r, &["n", "m", "draw"]), seed),
            evaluate: |p| p_recurrence(p, true),
        },
    ]
}

const SYMM_KEYS: &[super::SweepKey] = &[
    key("n", (1, 3), (1, 5)),
    key("l", (0, 8), (0, 12)),
    key("m", (0, 8), (0, 12)),
    key("draw", (1, 2), (0, 100)),
];

const PREC_KEYS: &[super::SweepKey] = &[
    key("n", (1, 3), (1, 5)),
    key("m", (1, 8), (1, 12)),
    key("draw", (1, 2), (0, 100)),
];

fn stirling(p: &Params) -> Result<Outcome> {
    let n = p.usize("n")?;
    let k = p.usize("k")?;
    if n == 0 || k >= n {
        return Ok(Outcome::skip("needs 0 <= k < n"));
    }
    let deg = n - 1 - k;
    let lhs = bernoulli_order_poly(deg, n as u32).scale(&binomial(n as i64 - 1, deg as i64));
    let rhs = Poly::from_coeffs(
        (0..=deg)
            .map(|m| {
                binomial((m + k) as i64, m as i64)
                    * Rational::from_integer(stirling_first(n, m + k + 1))
            })
            .collect(),
    );
    Ok(Outcome::poly(lhs, rhs))
}

fn order_convolution(p: &Params) -> Result<Outcome> {
    let n = p.usize("n")?;
    let m = p.usize("m")?;
    if n == 0 || m == 0 {
        return Ok(Outcome::skip("needs positive n and m"));
    }
    let lead = int((m + n) as i64) * binomial((m + n - 1) as i64, n as i64 - 1);
    let mut rhs = Poly::zero();
    for k in 0..n {
        let term = &bernoulli_order_poly(n - 1 - k, n as u32) * &bernoulli_poly(m + k + 1);
        let w =
            &lead * sign_pow(k as i64) * binomial(n as i64 - 1, k as i64) / int((m + k + 1) as i64);
        rhs += &term.scale(&w);
    }
    Ok(Outcome::poly(bernoulli_order_poly(m + n, n as u32), rhs))
}

/// `B_j(x; a_I)`, with `x^j` for the empty subset.
fn subset_poly(a: &AVec, subset: &[usize], j: usize) -> Poly {
    match a.subset(subset) {
        Some(sub) => barnes_polys(j, &sub).pop().expect("non-empty"),
        None => Poly::monomial(Rational::from_integer(1.into()), j),
    }
}

fn difference(p: &Params) -> Result<Outcome> {
    let a = p.avec("a")?;
    let n = a.len();
    let m = p.usize("m")?;
    let b = barnes_polys(m, a).pop().expect("non-empty");
    let lhs = &b.reflect().scale(&sign_pow(m as i64)) - &b;
    let mut rhs = Poly::zero();
    for size in 0..n {
        let idx = m as i64 - n as i64 + size as i64;
        if idx < 0 {
            continue;
        }
        let w = factorial_rational(m) * inv_factorial(idx);
        for subset in subsets_of_size(n, size) {
            rhs += &subset_poly(a, &subset, idx as usize).scale(&w);
        }
    }
    Ok(Outcome::poly(lhs, rhs))
}

fn shift(p: &Params) -> Result<Outcome> {
    let a = p.avec("a")?;
    let m = p.usize("m")?;
    let b = barnes_polys(m, a).pop().expect("non-empty");
    Ok(Outcome::poly(
        b.shift(&a.sum()),
        b.reflect().scale(&sign_pow(m as i64)),
    ))
}

fn symmetry(p: &Params) -> Result<Outcome> {
    let a = p.avec("a")?;
    let l = p.usize("l")?;
    let m = p.usize("m")?;
    let big_a = a.sum();
    let polys = barnes_polys(l + m, a);
    let side = |outer: usize, inner: usize, reflect: bool| {
        let mut acc = Poly::zero();
        for k in 0..=outer {
            let w = sign_pow(outer as i64)
                * binomial(outer as i64, k as i64)
                * pow(&big_a, (outer - k) as i64);
            let b = &polys[inner + k];
            let b = if reflect { b.reflect() } else { b.clone() };
            acc += &b.scale(&w);
        }
        acc
    };
    Ok(Outcome::poly(side(m, l, false), side(l, m, true)))
}

#[derive(Clone, Copy, PartialEq)]
enum SymmetryForm {
    Corrected,
    Literal,
    IndexOnly,
}

fn derivative_symmetry(p: &Params, form: SymmetryForm) -> Result<Outcome> {
    let a = p.avec("a")?;
    let n = a.len();
    let l = p.usize("l")?;
    let m = p.usize("m")?;
    let big_a = a.sum();
    let polys = barnes_polys(l + m + n + 1, a);
    let denom = int((l + m + 2) as i64);
    let mut lhs = Poly::zero();
    for k in 0..=m {
        let w = sign_pow(m as i64)
            * binomial(m as i64 + 1, k as i64)
            * int((l + k + 1) as i64)
            * pow(&big_a, (m + 1 - k) as i64)
            / &denom;
        lhs += &polys[l + k].scale(&w);
    }
    let second_top = if form == SymmetryForm::Literal { n } else { l };
    for k in 0..=second_top {
        let weight = if form == SymmetryForm::Corrected {
            m + k + 1
        } else {
            l + k + 1
        };
        let w = sign_pow(l as i64)
            * binomial(l as i64 + 1, k as i64)
            * int(weight as i64)
            * pow(&big_a, l as i64 + 1 - k as i64)
            / &denom;
        lhs += &polys[m + k].reflect().scale(&w);
    }
    let reflected_index = if form == SymmetryForm::Literal {
        n + m + 1
    } else {
        l + m + 1
    };
    let rhs = &polys[l + m + 1].scale(&sign_pow(m as i64 + 1))
        + &polys[reflected_index]
            .reflect()
            .scale(&sign_pow(l as i64 + 1));
    Ok(Outcome::poly(lhs, rhs))
}

fn p_recurrence(p: &Params, literal: bool) -> Result<Outcome> {
    let a = p.avec("a")?;
    let m = p.usize("m")?;
    if m == 0 {
        return Ok(Outcome::skip("needs m >= 1"));
    }
    let big_a = a.sum();
    let polys = barnes_polys(2 * m + 1, a);
    let p_poly = |j: usize| {
        let b = &polys[j];
        (&b.reflect() + b).scale(&(int(j as i64 + 1) * pow(&big_a, -(j as i64))))
    };
    let mut sum = Poly::zero();
    for k in 0..=m {
        sum += &p_poly(m + k).scale(&binomial(m as i64 + 1, k as i64));
    }
    let factor = if literal {
        -int(2 * m as i64 + 1) / int(2 * (m as i64 + 1))
    } else {
        int(-1)
    };
    Ok(Outcome::poly(p_poly(2 * m + 1), sum.scale(&factor)))
}
