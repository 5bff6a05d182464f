//! Floating-point checks of the zeta decompositions.

use super::{grid, key, Identity, Kind, Mode, Outcome, Params, SweepKey};
use crate::barnes::{AVec, BarnesTable};
use crate::dedekind::{ones_avec, sigma_ones_closed};
use crate::error::Result;
use crate::exact::comb::{binomial, factorial_rational};
use crate::exact::rational::{sign_pow, to_f64};
use crate::zeta::{
    barnes_zeta_decomposed, barnes_zeta_direct, barnes_zeta_special, exact_real,
    hurwitz_order_n_bernoulli, hurwitz_order_n_direct, hurwitz_zeta, ZetaQuery,
};

const TARGET: f64 = 1e-11;
const X_POINTS: [f64; 3] = [0.5, 1.0, 2.25];
const SETS: [&[i64]; 3] = [&[1, 2], &[2, 3], &[1, 2, 3]];

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity {
            id: "ZETA_DUAL",
            anchor: "Barnes zeta as Hurwitz zetas weighted by Bernoulli-Barnes polynomials and Fourier-Dedekind sums",
            statement: "zeta_n(s,x;a) = (-1)^{n-1}/(n-1)! sum_k (-1)^k C(n-1,k) B_{n-1-k}(x;a) zeta(s-k,x) \
                        + sum_j a_j^{-s} sum_{r<a_j} sigma_{-r}(a without a_j; a_j) zeta(s,(x+r)/a_j), against direct summation",
            mode: Mode::Numeric { tolerance: 1e-8 },
            kind: Kind::Asserted,
            sweep_keys: const { &[key("set", (1, 3), (1, 3)), key("si", (0, 1), (0, 4)), key("xi", (0, 2), (0, 2))] },
            cases: |r, _| grid(r, &["set", "si", "xi"]),
            evaluate: zeta_dual,
        },
        Identity {
            id: "ZETA_SPECIAL",
            anchor: "Barnes zeta at non-positive integers",
            statement: "decomposed zeta_n(-k,x;a) = (-1)^n k!/(k+n)! B_{k+n}(x;a)",
            mode: Mode::Numeric { tolerance: 1e-7 },
            kind: Kind::Asserted,
            sweep_keys: const { &[key("set", (1, 3), (1, 3)), key("k", (0, 5), (0, 8)), key("xi", (0, 2), (0, 2))] },
            cases: |r, _| grid(r, &["set", "k", "xi"]),
            evaluate: zeta_special,
        },
        Identity {
            id: "COR7",
            anchor: "Order-n Hurwitz zeta via Bernoulli polynomials of order n",
            statement: "sum_t C(n-1+t,n-1) (x+t)^{-s} = (-1)^{n-1}/(n-1)! sum_k (-1)^k C(n-1,k) B^{(n)}_{n-1-k}(x) zeta(s-k,x)",
            mode: Mode::Numeric { tolerance: 1e-8 },
            kind: Kind::Asserted,
            sweep_keys: const { &[key("n", (1, 4), (1, 6)), key("si", (0, 1), (0, 4)), key("xi", (0, 2), (0, 2))] },
            cases: |r, _| grid(r, &["n", "si", "xi"]),
            evaluate: order_n,
        },
        Identity {
            id: "PROP_MAIN_NUMERIC",
            anchor: "Barnes zeta for a = (a, 1, ..., 1) with closed-form Fourier-Dedekind weights",
            statement: "zeta(s,x;(a,1^n)) = (-1)^n/n! sum_{k<=n} (-1)^k C(n,k) B_{n-k}(x;v) zeta(s-k,x) \
                        + a^{-s} sum_{r<a} sigma_{-r}(1^n; a) zeta(s,(x+r)/a)",
            mode: Mode::Numeric { tolerance: 1e-8 },
            kind: Kind::Asserted,
            sweep_keys: PROP_KEYS,
            cases: |r, _| grid(r, &["a", "n", "xi"]),
            evaluate: ones_zeta,
        },
    ]
}

const PROP_KEYS: &[SweepKey] = &[
    key("a", (2, 3), (1, 6)),
    key("n", (1, 2), (1, 3)),
    key("xi", (0, 2), (0, 2)),
];

fn set(p: &Params) -> Result<AVec> {
    AVec::from_ints(SETS[p.usize("set")?.clamp(1, 3) - 1])
}

fn x_point(p: &Params) -> Result<f64> {
    Ok(X_POINTS[p.usize("xi")?.min(2)])
}

fn zeta_dual(p: &Params) -> Result<Outcome> {
    let a = set(p)?;
    let s = a.len() as f64 + 0.5 + p.int("si")? as f64;
    let q = ZetaQuery::new(s, x_point(p)?, a, TARGET)?;
    Ok(Outcome::float(
        barnes_zeta_decomposed(&q)?,
        barnes_zeta_direct(&q)?,
    ))
}

fn zeta_special(p: &Params) -> Result<Outcome> {
    let a = set(p)?;
    let k = p.usize("k")?;
    let x = x_point(p)?;
    let q = ZetaQuery::new(-(k as f64), x, a.clone(), TARGET)?;
    let exact = barnes_zeta_special(k, &exact_real(x)?, &a);
    Ok(Outcome::float(barnes_zeta_decomposed(&q)?, to_f64(&exact)))
}

fn order_n(p: &Params) -> Result<Outcome> {
    let n = p.usize("n")?;
    let s = n as f64 + 0.5 + p.int("si")? as f64;
    let x = x_point(p)?;
    Ok(Outcome::float(
        hurwitz_order_n_direct(s, x, n, TARGET)?,
        hurwitz_order_n_bernoulli(s, x, n, TARGET)?,
    ))
}

fn ones_zeta(p: &Params) -> Result<Outcome> {
    let a = p.int("a")? as u64;
    let n = p.usize("n")?;
    let x = x_point(p)?;
    let v = ones_avec(a, n);
    let s = (n + 1) as f64 + 0.5;
    let mut table = BarnesTable::new(v.clone());
    let xr = exact_real(x)?;
    let lead = sign_pow(n as i64) / factorial_rational(n);
    let mut total = 0.0;
    for k in 0..=n {
        let w = &lead * sign_pow(k as i64) * binomial(n as i64, k as i64) * table.eval(n - k, &xr);
        total += to_f64(&w) * hurwitz_zeta(s - k as f64, x, TARGET)?;
    }
    let scale = (a as f64).powf(-s);
    for r in 0..a as i64 {
        let sigma = to_f64(&sigma_ones_closed(-r, n, a)?);
        total += scale * sigma * hurwitz_zeta(s, (x + r as f64) / a as f64, TARGET)?;
    }
    let q = ZetaQuery::new(s, x, v, TARGET)?;
    Ok(Outcome::float(total, barnes_zeta_direct(&q)?))
}
