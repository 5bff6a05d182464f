//! Identities among Bernoulli numbers, their higher-order versions and
//! Bernoulli–Barnes numbers.

use num_traits::Zero;

use super::sampling::subsets_of_size;
use super::{grid, key, with_draws, Identity, Kind, Mode, Outcome, Param, Params};
use crate::barnes::{barnes_number_convolution, barnes_numbers, AVec};
use crate::bernoulli::{bernoulli_number, bernoulli_numbers, bernoulli_order};
use crate::error::Result;
use crate::exact::comb::{binomial, factorial_rational, inv_factorial};
use crate::exact::rational::{int, pow, rat, sign_pow};
use crate::exact::Rational;

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity {
            id: "EULER",
            anchor: "Euler's quadratic relation for Bernoulli numbers",
            statement: "sum_{j=0}^n C(n,j) B_j B_{n-j} = -n B_{n-1} - (n-1) B_n, n >= 1",
            mode: Mode::ExactRational,
            kind: Kind::Asserted,
            sweep_keys: const { &[key("n", (1, 30), (0, 200))] },
            cases: |r, _| grid(r, &["n"]),
            evaluate: euler,
        },
        Identity {
            id: "DILCHER",
            anchor: "Order-2, 3 and 4 Bernoulli numbers in terms of ordinary ones",
            statement: "B_k^(2), B_k^(3), B_k^(4) as linear combinations of B_{k-3..k}; order 4: -k(k-1)(k-2)B_{k-3} - 11/6 k(k-1)(k-3)B_{k-2} - k(k-2)(k-3)B_{k-1} - 1/6 (k-1)(k-2)(k-3)B_k",
            mode: Mode::ExactRational,
            kind: Kind::Asserted,
            sweep_keys: const { &[key("order", (2, 4), (2, 4)), key("k", (0, 20), (0, 60))] },
            cases: |r, _| grid(r, &["order", "k"]),
            evaluate: |p| dilcher(p, false),
        },
        Identity {
            id: "DILCHER_LITERAL",
            anchor: "Order-4 Bernoulli numbers with +11/6 on the B_{k-2} term",
            statement: "B_k^(4) = -k(k-1)(k-2)B_{k-3} + 11/6 k(k-1)(k-3)B_{k-2} - k(k-2)(k-3)B_{k-1} - 1/6 (k-1)(k-2)(k-3)B_k",
            mode: Mode::ExactRational,
            kind: Kind::Reported,
            sweep_keys: const { &[key("order", (4, 4), (4, 4)), key("k", (3, 20), (0, 60))] },
            cases: |r, _| grid(r, &["order", "k"]),
            evaluate: |p| dilcher(p, true),
        },
        Identity {
            id: "THM1",
            anchor: "Subset sums of Bernoulli-Barnes numbers at odd m",
            statement: "sum_{j=n-m}^n C(n+j-4, j-2)/(m-n+j)! sum_{|I|=j} B_{m-n+j}(a_I) = 1/2 if n=m=3 else 0, n >= 3, odd m",
            mode: Mode::ExactRational,
            kind: Kind::Asserted,
            sweep_keys: const { &[
                key("n", (3, 6), (3, 8)),
                key("m", (1, 15), (0, 25)),
                key("draw", (1, 5), (0, 100)),
            ] },
            cases: |r, seed| with_draws(grid(r, &["n", "m", "draw"]), seed),
            evaluate: subset_sum_relation,
        },
        Identity {
            id: "COR2",
            anchor: "Subset-sum relation specialized to a = (1, ..., 1)",
            statement: "sum_{j=2}^n C(n+j-4, j-2) m!/(m-n+j)! C(n,j) B_{m-n+j}^(j) = 3 if n=m=3 else 0, n >= 3, odd m >= n-2",
            mode: Mode::ExactRational,
            kind: Kind::Asserted,
            sweep_keys: const { &[key("n", (3, 6), (3, 10)), key("m", (1, 15), (0, 25))] },
            cases: |r, _| grid(r, &["n", "m"]),
            evaluate: all_ones_relation,
        },
        Identity {
            id: "REC1",
            anchor: "Recurrence for higher-order Bernoulli numbers at odd m",
            statement: "C(2n-4, n-2) B_m^(n) = -sum_{j=2}^{n-1} C(n+j-4, j-2) m!/(m-n+j)! C(n,j) B_{m-n+j}^(j), n >= 4, odd m >= n-2",
            mode: Mode::ExactRational,
            kind: Kind::Asserted,
            sweep_keys: const { &[key("n", (4, 6), (4, 10)), key("m", (1, 15), (0, 25))] },
            cases: |r, _| grid(r, &["n", "m"]),
            evaluate: |p| order_recurrence(p, true),
        },
        Identity {
            id: "REC1_EVEN",
            anchor: "Even-m analogue of the higher-order recurrence (exploratory)",
            statement: "the odd-m recurrence evaluated at even m >= n-2; residuals reported, nothing asserted",
            mode: Mode::ExactRational,
            kind: Kind::Reported,
            sweep_keys: const { &[key("n", (4, 6), (4, 10)), key("m", (2, 14), (0, 25))] },
            cases: |r, _| grid(r, &["n", "m"]),
            evaluate: |p| order_recurrence(p, false),
        },
        Identity {
            id: "SELFDUAL",
            anchor: "Self-duality of (-1)^k A^{-k} B_k(a)",
            statement: "Q_k = sum_{j=0}^k C(k,j) (-1)^j Q_j with Q_k = (-1)^k A^{-k} B_k(a), A = sum a_i",
            mode: Mode::ExactRational,
            kind: Kind::Asserted,
            sweep_keys: const { &[key("set", (1, 3), (1, 3)), key("k", (0, 20), (0, 40))] },
            cases: |r, _| grid(r, &["set", "k"]),
            evaluate: self_dual,
        },
        Identity {
            id: "FINALREC",
            anchor: "Recurrences for B_{2m+1}(a) and B_{2m}(a)",
            statement: "parity=1: B_{2m+1}(a) = -1/(2(m+1)) sum_{k=0}^m C(m+1,k)(m+k+1) A^{m+1-k} B_{m+k}(a); \
                        parity=0: B_{2m}(a) = -1/((m+1)(2m+1)) sum_{k=0}^{m-1} C(m+1,k)(m+k+1) A^{m-k} B_{m+k}(a) \
                        + (2m)! A^{-1} sum_{k=0}^{n-1} sum_{|I|=k} B_{2m+1-n+k}(a_I)/(2m+1-n+k)!",
            mode: Mode::ExactRational,
            kind: Kind::Asserted,
            sweep_keys: const { &[
                key("n", (1, 4), (1, 6)),
                key("m", (1, 8), (1, 12)),
                key("draw", (1, 3), (0, 100)),
                key("parity", (0, 1), (0, 1)),
            ] },
            cases: |r, seed| with_draws(grid(r, &["n", "m", "draw", "parity"]), seed),
            evaluate: |p| final_recurrence(p, false),
        },
        Identity {
            id: "FINALREC_LITERAL",
            anchor: "Even-index recurrence for B_{2m}(a), sum to k=m and subtracted subset term",
            statement: "B_{2m}(a) = -1/((m+1)(2m+1)) sum_{k=0}^{m} C(m+1,k)(m+k+1) A^{m-k} B_{m+k}(a) \
                        - (2m)! A^{-1} sum_{k=0}^{n-1} sum_{|I|=k} B_{2m+1-n+k}(a_I)/(2m+1-n+k)!",
            mode: Mode::ExactRational,
            kind: Kind::Reported,
            sweep_keys: const { &[
                key("n", (1, 4), (1, 6)),
                key("m", (1, 8), (1, 12)),
                key("draw", (1, 3), (0, 100)),
            ] },
            cases: |r, seed| {
                let mut points = with_draws(grid(r, &["n", "m", "draw"]), seed);
                for p in &mut points {
                    p.set("parity", Param::Int(0));
                }
                points
            },
            evaluate: |p| final_recurrence(p, true),
        },
        Identity {
            id: "BARNES_DUAL",
            anchor: "Bernoulli-Barnes numbers as multinomial convolutions of Bernoulli numbers",
            statement: "B_k(a) = sum_{m_1+..+m_n=k} C(k; m_1..m_n) prod a_i^{m_i-1} B_{m_i}",
            mode: Mode::ExactRational,
            kind: Kind::Asserted,
            sweep_keys: const { &[
                key("n", (1, 4), (1, 5)),
                key("k", (0, 10), (0, 14)),
                key("draw", (1, 3), (0, 100)),
            ] },
            cases: |r, seed| with_draws(grid(r, &["n", "k", "draw"]), seed),
            evaluate: barnes_dual,
        },
    ]
}

fn euler(p: &Params) -> Result<Outcome> {
    let n = p.usize("n")?;
    if n == 0 {
        return Ok(Outcome::skip("needs n >= 1"));
    }
    let b = bernoulli_numbers(n);
    let lhs = (0..=n).fold(Rational::zero(), |acc, j| {
        acc + binomial(n as i64, j as i64) * &b[j] * &b[n - j]
    });
    let rhs = -int(n as i64) * &b[n - 1] - int(n as i64 - 1) * &b[n];
    Ok(Outcome::rational(lhs, rhs))
}

fn dilcher(p: &Params, literal: bool) -> Result<Outcome> {
    let order = p.usize("order")?;
    let k = p.usize("k")?;
    if k + 1 < order {
        return Ok(Outcome::skip(format!("needs k >= {}", order - 1)));
    }
    let b = |i: usize| bernoulli_number(i);
    let kk = int(k as i64);
    let c = |shift: i64| &kk - int(shift);
    let rhs = match order {
        2 => -&kk * b(k - 1) - c(1) * b(k),
        3 => {
            &kk * c(1) * b(k - 2)
                + rat(3, 2) * &kk * c(2) * b(k - 1)
                + rat(1, 2) * c(1) * c(2) * b(k)
        }
        4 => {
            let middle = if literal { rat(11, 6) } else { rat(-11, 6) };
            -&kk * c(1) * c(2) * b(k - 3) + middle * &kk * c(1) * c(3) * b(k - 2)
                - &kk * c(2) * c(3) * b(k - 1)
                - rat(1, 6) * c(1) * c(2) * c(3) * b(k)
        }
        _ => return Ok(Outcome::skip("order must be 2, 3 or 4")),
    };
    Ok(Outcome::rational(bernoulli_order(k, order as u32), rhs))
}

/// `sum_{|I| = size} B_k(a_I)` for every `k <= max_k`.
fn subset_number_sums(a: &AVec, size: usize, max_k: usize) -> Vec<Rational> {
    let mut sums = vec![Rational::zero(); max_k + 1];
    for subset in subsets_of_size(a.len(), size) {
        match a.subset(&subset) {
            Some(sub) => {
                for (s, b) in sums.iter_mut().zip(barnes_numbers(max_k, &sub)) {
                    *s += b;
                }
            }
            None => sums[0] += int(1),
        }
    }
    sums
}

fn subset_sum_relation(p: &Params) -> Result<Outcome> {
    let a = p.avec("a")?;
    let n = a.len();
    let m = p.usize("m")?;
    if n < 3 || m == 0 || m % 2 == 0 {
        return Ok(Outcome::skip("needs n >= 3 and odd m >= 1"));
    }
    let mut lhs = Rational::zero();
    for j in n.saturating_sub(m)..=n {
        let weight = binomial(n as i64 + j as i64 - 4, j as i64 - 2);
        if weight.is_zero() {
            continue;
        }
        let k = m + j - n;
        let sums = subset_number_sums(a, j, k);
        lhs += weight * inv_factorial(k as i64) * &sums[k];
    }
    let rhs = if n == 3 && m == 3 {
        rat(1, 2)
    } else {
        Rational::zero()
    };
    Ok(Outcome::rational(lhs, rhs))
}

/// `sum_{j=lo}^{hi} C(n+j-4, j-2) m!/(m-n+j)! C(n,j) B_{m-n+j}^(j)`.
fn order_sum(n: usize, m: usize, lo: usize, hi: usize) -> Rational {
    (lo..=hi).fold(Rational::zero(), |acc, j| {
        let k = m as i64 - n as i64 + j as i64;
        if k < 0 {
            return acc;
        }
        acc + binomial(n as i64 + j as i64 - 4, j as i64 - 2)
            * factorial_rational(m)
            * inv_factorial(k)
            * binomial(n as i64, j as i64)
            * bernoulli_order(k as usize, j as u32)
    })
}

fn all_ones_relation(p: &Params) -> Result<Outcome> {
    let n = p.usize("n")?;
    let m = p.usize("m")?;
    if n < 3 || m % 2 == 0 || m + 2 < n {
        return Ok(Outcome::skip("needs n >= 3 and odd m >= n-2"));
    }
    let rhs = if n == 3 && m == 3 {
        int(3)
    } else {
        Rational::zero()
    };
    Ok(Outcome::rational(order_sum(n, m, 2, n), rhs))
}

fn order_recurrence(p: &Params, odd: bool) -> Result<Outcome> {
    let n = p.usize("n")?;
    let m = p.usize("m")?;
    if n < 4 || m + 2 < n || (m % 2 == 1) != odd {
        return Ok(Outcome::skip(if odd {
            "needs n >= 4 and odd m >= n-2"
        } else {
            "needs n >= 4 and even m >= n-2"
        }));
    }
    let lhs = binomial(2 * n as i64 - 4, n as i64 - 2) * bernoulli_order(m, n as u32);
    let rhs = -order_sum(n, m, 2, n - 1);
    Ok(Outcome::rational(lhs, rhs))
}

fn fixed_set(index: i64) -> AVec {
    let entries: &[i64] = match index {
        1 => &[1, 2],
        2 => &[2, 3],
        _ => &[1, 1, 2],
    };
    AVec::from_ints(entries).expect("positive")
}

fn self_dual(p: &Params) -> Result<Outcome> {
    let a = fixed_set(p.int("set")?);
    let k = p.usize("k")?;
    let big_a = a.sum();
    let q: Vec<Rational> = barnes_numbers(k, &a)
        .into_iter()
        .enumerate()
        .map(|(j, b)| sign_pow(j as i64) * pow(&big_a, -(j as i64)) * b)
        .collect();
    let dual = (0..=k).fold(Rational::zero(), |acc, j| {
        acc + binomial(k as i64, j as i64) * sign_pow(j as i64) * &q[j]
    });
    Ok(Outcome::rational(q[k].clone(), dual))
}

fn final_recurrence(p: &Params, literal: bool) -> Result<Outcome> {
    let a = p.avec("a")?;
    let n = a.len();
    let m = p.usize("m")?;
    if m == 0 {
        return Ok(Outcome::skip("needs m >= 1"));
    }
    let big_a = a.sum();
    let b = barnes_numbers(2 * m + 1, a);
    let weight = |k: usize| binomial(m as i64 + 1, k as i64) * int((m + k + 1) as i64);
    if p.int("parity")? == 1 {
        let sum = (0..=m).fold(Rational::zero(), |acc, k| {
            acc + weight(k) * pow(&big_a, (m + 1 - k) as i64) * &b[m + k]
        });
        let rhs = -sum / int(2 * (m as i64 + 1));
        return Ok(Outcome::rational(b[2 * m + 1].clone(), rhs));
    }
    let top = if literal { m } else { m - 1 };
    let sum = (0..=top).fold(Rational::zero(), |acc, k| {
        acc + weight(k) * pow(&big_a, m as i64 - k as i64) * &b[m + k]
    });
    let first = -sum / int((m as i64 + 1) * (2 * m as i64 + 1));
    // sum over proper subsets of B_{2m+1-n+k}(a_I)/(2m+1-n+k)!
    let mut subsets = Rational::zero();
    for size in 0..n {
        let idx = 2 * m as i64 + 1 - n as i64 + size as i64;
        if idx < 0 {
            continue;
        }
        let sums = subset_number_sums(a, size, idx as usize);
        subsets += inv_factorial(idx) * &sums[idx as usize];
    }
    let second = factorial_rational(2 * m) / &big_a * subsets;
    let rhs = if literal {
        first - second
    } else {
        first + second
    };
    Ok(Outcome::rational(b[2 * m].clone(), rhs))
}

fn barnes_dual(p: &Params) -> Result<Outcome> {
    let a = p.avec("a")?;
    let k = p.usize("k")?;
    let series = barnes_numbers(k, a).pop().expect("non-empty");
    Ok(Outcome::rational(series, barnes_number_convolution(k, a)))
}
