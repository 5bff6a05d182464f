//! Restricted partitions, Fourier–Dedekind sums and the polynomial
//! reciprocity identities they satisfy.

use num_integer::Integer;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::sampling::coprime_multisets;
use super::{grid, key, Identity, Kind, Mode, Outcome, Param, Params, SweepRanges};
use crate::barnes::{barnes_polys, AVec, BarnesTable};
use crate::bernoulli::bernoulli_poly;
use crate::dedekind::{
    fourier_dedekind_float, mod_inverse, ones_avec, partition_counts_dp, popoviciu,
    sigma_ones_closed, special_partition_closed, FdsKey, FourierDedekind, PartitionClosedForm,
    PartitionSpec,
};
use crate::error::Result;
use crate::exact::comb::{binomial, factorial_rational};
use crate::exact::rational::{frac_part, int, pow, rat, sign_pow, to_f64};
use crate::exact::{Poly, Rational};

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity {
            id: "PART3",
            anchor: "Restricted partition function from Bernoulli-Barnes polynomials and Fourier-Dedekind sums",
            statement: "p_A(t) = (-1)^{n-1}/(n-1)! B_{n-1}(-t; a) + sum_{j=1}^n sigma_{-t}(a without a_j; a_j), pairwise coprime a",
            mode: Mode::ExactRational,
            kind: Kind::Asserted,
            sweep_keys: const { &[
                key("n", (1, 4), (1, 5)),
                key("maxpart", (11, 11), (1, 13)),
                key("tmax", (200, 200), (0, 2000)),
            ] },
            cases: |r, _| multiset_cases(r, "n"),
            evaluate: partition_closed_form,
        },
        Identity {
            id: "POPOVICIU",
            anchor: "Two-part partition count via fractional parts",
            statement: "p_{a,b}(t) = t/(ab) + 1 - {b^{-1} t/a} - {a^{-1} t/b}",
            mode: Mode::ExactRational,
            kind: Kind::Asserted,
            sweep_keys: const { &[key("pair", (1, 3), (1, 3)), key("tmax", (200, 200), (0, 5000))] },
            cases: |r, _| grid(r, &["pair", "tmax"]),
            evaluate: popoviciu_formula,
        },
        Identity {
            id: "SPECIAL_A",
            anchor: "Partitions with parts {a, 1, ..., 1}",
            statement: "p_{a,1^n}(t) = (-1)^n/n! (B_n(-t; (a,1^n)) - B_n((-t) mod a; (a,1^n))) + [a | t]",
            mode: Mode::ExactRational,
            kind: Kind::Asserted,
            sweep_keys: SPECIAL_KEYS,
            cases: |r, _| grid(r, &["a", "n", "tmax"]),
            evaluate: |p| special_partition(p, false),
        },
        Identity {
            id: "SPECIAL_A_LITERAL",
            anchor: "Partitions with parts {a, 1, ..., 1}, residue taken as t mod a",
            statement: "p_{a,1^n}(t) = (-1)^n/n! (B_n(-t; (a,1^n)) - B_n(t mod a; (a,1^n))) + [a | t]",
            mode: Mode::ExactRational,
            kind: Kind::Reported,
            sweep_keys: SPECIAL_KEYS,
            cases: |r, _| grid(r, &["a", "n", "tmax"]),
            evaluate: |p| special_partition(p, true),
        },
        Identity {
            id: "EXPLICIT_SIGMA",
            anchor: "Fourier-Dedekind sums with all-ones numerators",
            statement: "sigma_t(1^n; a) = (-1)^{n-1}/n! B_n(t mod a; (a,1^n)), or B_n(a; ...) when a | t; \
                        also sigma_0(1^n; a) = 1 - (-1)^n/n! B_n(0; (a,1^n))",
            mode: Mode::ExactRational,
            kind: Kind::Asserted,
            sweep_keys: const { &[key("a", (1, 7), (1, 12)), key("n", (1, 3), (1, 4))] },
            cases: |r, _| grid(r, &["a", "n"]),
            evaluate: explicit_sigma,
        },
        Identity {
            id: "FDS_DUAL",
            anchor: "Fourier-Dedekind sums: quotient-ring value against roots-of-unity summation",
            statement: "exact sigma_r(b; a) in Q[x]/(1+x+...+x^{a-1}) equals (1/a) sum_{lambda^a=1!=lambda} lambda^r / prod(1-lambda^{b_k})",
            mode: Mode::Numeric { tolerance: 1e-9 },
            kind: Kind::Asserted,
            sweep_keys: const { &[
                key("a", (1, 30), (1, 40)),
                key("count", (1, 3), (1, 4)),
                key("draw", (1, 3), (0, 50)),
            ] },
            cases: fds_cases,
            evaluate: fds_dual,
        },
        Identity {
            id: "COR_MT2",
            anchor: "Reciprocity for Fourier-Dedekind-weighted Bernoulli polynomials",
            statement: "sum_j a_j^m sum_{r<a_j} sigma_{-r}(a without a_j; a_j) B_{m+1}((x+r)/a_j) \
                        = (-1)^{n-1} (m+1)!/(m+n)! B_{m+n}(x;a) \
                        - (-1)^{n-1} (m+1)/(n-1)! sum_{k<n} (-1)^k C(n-1,k) B_{n-1-k}(x;a) B_{m+k+1}(x)/(m+k+1)",
            mode: Mode::ExactPolynomial,
            kind: Kind::Asserted,
            sweep_keys: MT2_KEYS,
            cases: |r, _| with_m(multiset_cases(r, "n"), r),
            evaluate: |p| reciprocity(p, false),
        },
        Identity {
            id: "COR_MT2_LITERAL",
            anchor: "Reciprocity for Fourier-Dedekind-weighted Bernoulli polynomials, second term added",
            statement: "as COR_MT2 with + in front of the (m+1)/(n-1)! sum",
            mode: Mode::ExactPolynomial,
            kind: Kind::Reported,
            sweep_keys: MT2_KEYS,
            cases: |r, _| with_m(multiset_cases(r, "n"), r),
            evaluate: |p| reciprocity(p, true),
        },
        Identity {
            id: "COR_N2",
            anchor: "Polynomial generalization of Apostol's reciprocity law",
            statement: "a^m sum_{r<a} {b^{-1} r/a} B_{m+1}((x+r)/a) + b^m sum_{r<b} {a^{-1} r/b} B_{m+1}((x+r)/b) \
                        = B_{m+2}(x;(a,b))/(m+2) + (m+1)/((m+2)ab) B_{m+2}(x) + (1 - x/(ab)) B_{m+1}(x)",
            mode: Mode::ExactPolynomial,
            kind: Kind::Asserted,
            sweep_keys: N2_KEYS,
            cases: |r, _| grid(r, &["pair", "m"]),
            evaluate: |p| two_part_reciprocity(p, false),
        },
        Identity {
            id: "COR_N2_LITERAL",
            anchor: "Polynomial Apostol reciprocity with second sum over r < a and (x/(ab) - 1)",
            statement: "as COR_N2 with the second sum over r < a and (x/(ab) - 1) B_{m+1}(x)",
            mode: Mode::ExactPolynomial,
            kind: Kind::Reported,
            sweep_keys: N2_KEYS,
            cases: |r, _| grid(r, &["pair", "m"]),
            evaluate: |p| two_part_reciprocity(p, true),
        },
        Identity {
            id: "PROP_MAIN",
            anchor: "Special values for a = (a, 1, ..., 1)",
            statement: "with v = (a, 1^n), N = n+1: m! N!/(m+N)! B_{m+N}(x;v) \
                        = sum_{k<N} (-1)^k (k+1) C(N,k+1) B_{N-1-k}(x;v) B_{m+k+1}(x)/(m+k+1) \
                        - N a^m sum_{r=1}^a B_n(r;v) B_{m+1}(1+(x-r)/a)/(m+1)",
            mode: Mode::ExactPolynomial,
            kind: Kind::Asserted,
            sweep_keys: PROP_KEYS,
            cases: |r, _| grid(r, &["a", "n", "m"]),
            evaluate: |p| ones_special_values(p, false),
        },
        Identity {
            id: "PROP_MAIN_LITERAL",
            anchor: "Special values for a = (a, 1, ..., 1) with n ones used as the dimension",
            statement: "m! n!/(m+n)! B_{m+n}(x;v) = sum_{k<n} (-1)^k (k+1) C(n,k+1) B_{n-1-k}(x;v) B_{m+k+1}(x)/(m+k+1) \
                        + a^m sum_{r=1}^a B_n(r;v) B_{m+1}(1+(x-r)/a)/(m+1)",
            mode: Mode::ExactPolynomial,
            kind: Kind::Reported,
            sweep_keys: PROP_KEYS,
            cases: |r, _| grid(r, &["a", "n", "m"]),
            evaluate: |p| ones_special_values(p, true),
        },
    ]
}

const SPECIAL_KEYS: &[super::SweepKey] = &[
    key("a", (1, 9), (1, 15)),
    key("n", (1, 3), (1, 4)),
    key("tmax", (100, 100), (0, 1000)),
];

const MT2_KEYS: &[super::SweepKey] = &[
    key("n", (2, 3), (1, 4)),
    key("m", (0, 8), (0, 12)),
    key("maxpart", (7, 7), (1, 9)),
];

const N2_KEYS: &[super::SweepKey] = &[key("pair", (1, 3), (1, 3)), key("m", (0, 8), (0, 12))];

const PROP_KEYS: &[super::SweepKey] = &[
    key("a", (1, 5), (1, 8)),
    key("n", (1, 3), (1, 4)),
    key("m", (0, 6), (0, 10)),
];

/// Every pairwise coprime multiset with `n` in range and parts up to `maxpart`.
fn multiset_cases(r: &SweepRanges, n_key: &str) -> Vec<Params> {
    let max_part = (*r.get("maxpart").end()).max(1) as u64;
    let tmax = r.get("tmax");
    let mut out = Vec::new();
    for n in r.get(n_key) {
        for parts in coprime_multisets(n as usize, max_part) {
            let mut p = Params::new()
                .with("n", Param::Int(n))
                .with("parts", Param::Parts(parts));
            if !tmax.is_empty() {
                p.set("tmax", Param::Int(*tmax.end()));
            }
            out.push(p);
        }
    }
    out
}

fn with_m(points: Vec<Params>, r: &SweepRanges) -> Vec<Params> {
    points
        .into_iter()
        .flat_map(|p| r.get("m").map(move |m| p.clone().with("m", Param::Int(m))))
        .collect()
}

fn counts(parts: Vec<u64>, tmax: usize) -> Result<Vec<Rational>> {
    let spec = PartitionSpec::new(parts)?;
    Ok(partition_counts_dp(&spec, tmax)
        .into_iter()
        .map(Rational::from_integer)
        .collect())
}

fn partition_closed_form(p: &Params) -> Result<Outcome> {
    let parts = p.parts("parts")?.to_vec();
    let tmax = p.usize("tmax")?;
    let spec = PartitionSpec::new(parts.clone())?;
    let closed = PartitionClosedForm::new(&spec)?;
    let lhs = (0..=tmax as i64).map(|t| closed.eval(t)).collect();
    Ok(Outcome::seq(lhs, counts(parts, tmax)?))
}

const POPOVICIU_PAIRS: [(u64, u64); 3] = [(3, 5), (4, 7), (9, 10)];
const RECIPROCITY_PAIRS: [(u64, u64); 3] = [(2, 3), (3, 5), (4, 7)];

fn pair(p: &Params, table: &[(u64, u64); 3]) -> Result<(u64, u64)> {
    let i = p.usize("pair")?;
    Ok(table[(i.clamp(1, 3)) - 1])
}

fn popoviciu_formula(p: &Params) -> Result<Outcome> {
    let (a, b) = pair(p, &POPOVICIU_PAIRS)?;
    let tmax = p.usize("tmax")?;
    let lhs = (0..=tmax as u64)
        .map(|t| popoviciu(a, b, t).map(Rational::from_integer))
        .collect::<Result<Vec<_>>>()?;
    Ok(Outcome::seq(lhs, counts(vec![a, b], tmax)?))
}

fn special_partition(p: &Params, literal: bool) -> Result<Outcome> {
    let a = p.int("a")? as u64;
    let n = p.usize("n")?;
    let tmax = p.usize("tmax")?;
    let mut parts = vec![a];
    parts.extend(std::iter::repeat_n(1, n));
    let rhs = counts(parts, tmax)?;
    let lhs = if literal {
        let mut table = BarnesTable::new(ones_avec(a, n));
        let weight = sign_pow(n as i64) / factorial_rational(n);
        (0..=tmax as i64)
            .map(|t| {
                let chi = if t % a as i64 == 0 { 1 } else { 0 };
                let residue = t.rem_euclid(a as i64);
                &weight * (table.eval(n, &int(-t)) - table.eval(n, &int(residue))) + int(chi)
            })
            .collect()
    } else {
        (0..=tmax as i64)
            .map(|t| special_partition_closed(a, n, t))
            .collect::<Result<Vec<_>>>()?
    };
    Ok(Outcome::seq(lhs, rhs))
}

fn explicit_sigma(p: &Params) -> Result<Outcome> {
    let a = p.int("a")? as u64;
    let n = p.usize("n")?;
    let ring = FourierDedekind::new(&vec![1; n], a)?;
    let span = -(a as i64)..=2 * a as i64;
    let mut lhs: Vec<Rational> = span.clone().map(|t| ring.sigma(t)).collect();
    let mut rhs = span
        .map(|t| sigma_ones_closed(t, n, a))
        .collect::<Result<Vec<_>>>()?;
    let mut table = BarnesTable::new(ones_avec(a, n));
    lhs.push(ring.sigma(0));
    rhs.push(
        int(1) - sign_pow(n as i64) / factorial_rational(n) * table.eval(n, &Rational::zero()),
    );
    Ok(Outcome::seq(lhs, rhs))
}

fn fds_cases(r: &SweepRanges, seed: u64) -> Vec<Params> {
    let mut out = Vec::new();
    for a in r.get("a") {
        for count in r.get("count") {
            for draw in r.get("draw") {
                let stream = seed ^ ((a as u64) << 32) ^ ((count as u64) << 16) ^ draw as u64;
                let mut rng = ChaCha8Rng::seed_from_u64(stream);
                let others: Vec<u64> = (0..count)
                    .map(|_| loop {
                        let b = rng.gen_range(1..=30u64);
                        if b.gcd(&(a as u64)) == 1 {
                            break b;
                        }
                    })
                    .collect();
                out.push(
                    Params::new()
                        .with("a", Param::Int(a))
                        .with("count", Param::Int(count))
                        .with("draw", Param::Int(draw))
                        .with("others", Param::Parts(others)),
                );
            }
        }
    }
    out
}

fn fds_dual(p: &Params) -> Result<Outcome> {
    let a = p.int("a")? as u64;
    let others = p.parts("others")?.to_vec();
    let ring = FourierDedekind::new(&others, a)?;
    let mut exact = Vec::new();
    let mut float = Vec::new();
    for r in 0..a as i64 {
        exact.push(to_f64(&ring.sigma(r)));
        float.push(fourier_dedekind_float(&FdsKey::new(r, others.clone(), a)?)?);
    }
    Ok(Outcome::float_seq(exact, float))
}

/// `B_{m+1}((x + r)/q)` as a polynomial in `x`.
fn scaled_bernoulli(m1: usize, r: &Rational, q: &Rational) -> Poly {
    bernoulli_poly(m1).compose_linear(&q.recip(), &(r / q))
}

fn reciprocity(p: &Params, literal: bool) -> Result<Outcome> {
    let parts = p.parts("parts")?.to_vec();
    let m = p.usize("m")?;
    let n = parts.len();
    let a = AVec::from_ints(&parts.iter().map(|&v| v as i64).collect::<Vec<_>>())?;
    let mut lhs = Poly::zero();
    for j in 0..n {
        let others: Vec<u64> = parts
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != j)
            .map(|(_, &v)| v)
            .collect();
        let aj = int(parts[j] as i64);
        let ring = FourierDedekind::new(&others, parts[j])?;
        let scale = pow(&aj, m as i64);
        for r in 0..parts[j] as i64 {
            let sigma = ring.sigma(-r);
            if sigma.is_zero() {
                continue;
            }
            lhs += &scaled_bernoulli(m + 1, &int(r), &aj).scale(&(&scale * sigma));
        }
    }
    let polys = barnes_polys(m + n, &a);
    let sign = sign_pow(n as i64 - 1);
    let first =
        polys[m + n].scale(&(&sign * factorial_rational(m + 1) / factorial_rational(m + n)));
    let mut sum = Poly::zero();
    for k in 0..n {
        let w = sign_pow(k as i64) * binomial(n as i64 - 1, k as i64) / int((m + k + 1) as i64);
        sum += &(&polys[n - 1 - k] * &bernoulli_poly(m + k + 1)).scale(&w);
    }
    let second = sum.scale(&(&sign * int(m as i64 + 1) / factorial_rational(n - 1)));
    let rhs = if literal {
        &first + &second
    } else {
        &first - &second
    };
    Ok(Outcome::poly(lhs, rhs))
}

fn two_part_reciprocity(p: &Params, literal: bool) -> Result<Outcome> {
    let (a, b) = pair(p, &RECIPROCITY_PAIRS)?;
    let m = p.usize("m")?;
    let (ar, br) = (int(a as i64), int(b as i64));
    let a_inv = mod_inverse(a as i64, b).expect("coprime pair");
    let b_inv = mod_inverse(b as i64, a).expect("coprime pair");
    let mut lhs = Poly::zero();
    for r in 0..a {
        let w = pow(&ar, m as i64) * frac_part(&(int((b_inv * r) as i64) / &ar));
        lhs += &scaled_bernoulli(m + 1, &int(r as i64), &ar).scale(&w);
    }
    let second_range = if literal { a } else { b };
    for r in 0..second_range {
        let w = pow(&br, m as i64) * frac_part(&(int((a_inv * r) as i64) / &br));
        lhs += &scaled_bernoulli(m + 1, &int(r as i64), &br).scale(&w);
    }
    let ab = &ar * &br;
    let big = barnes_polys(m + 2, &AVec::from_ints(&[a as i64, b as i64])?)
        .pop()
        .expect("non-empty");
    let linear = if literal {
        Poly::linear(ab.recip(), int(-1))
    } else {
        Poly::linear(-ab.recip(), int(1))
    };
    let rhs = &(&big.scale(&rat(1, m as i64 + 2))
        + &bernoulli_poly(m + 2).scale(&(int(m as i64 + 1) / (int(m as i64 + 2) * &ab))))
        + &(&linear * &bernoulli_poly(m + 1));
    Ok(Outcome::poly(lhs, rhs))
}

fn ones_special_values(p: &Params, literal: bool) -> Result<Outcome> {
    let a = p.int("a")? as u64;
    let n = p.usize("n")?;
    let m = p.usize("m")?;
    let v = ones_avec(a, n);
    // `dim` plays the role of the vector length in the first two terms.
    let dim = if literal { n } else { n + 1 };
    let polys = barnes_polys(m + dim.max(n), &v);
    let lhs = polys[m + dim]
        .scale(&(factorial_rational(m) * factorial_rational(dim) / factorial_rational(m + dim)));
    let mut rhs = Poly::zero();
    for k in 0..dim {
        let w = sign_pow(k as i64) * int(k as i64 + 1) * binomial(dim as i64, k as i64 + 1)
            / int((m + k + 1) as i64);
        rhs += &(&polys[dim - 1 - k] * &bernoulli_poly(m + k + 1)).scale(&w);
    }
    let ar = int(a as i64);
    let mut periodic = Poly::zero();
    for r in 1..=a as i64 {
        let weight = polys[n].eval(&int(r));
        let shifted = bernoulli_poly(m + 1).compose_linear(&ar.recip(), &(int(1) - int(r) / &ar));
        periodic += &shifted.scale(&weight);
    }
    let factor = pow(&ar, m as i64) / int(m as i64 + 1);
    let factor = if literal {
        factor
    } else {
        -factor * int(dim as i64)
    };
    rhs += &periodic.scale(&factor);
    Ok(Outcome::poly(lhs, rhs))
}
