//! Registry of identities among Bernoulli, Bernoulli–Barnes, Fourier–Dedekind
//! and zeta values, each backed by an executable check over a parameter sweep.
//!
//! Identities of kind [`Kind::Asserted`] must hold on every sweep point.
//! [`Kind::Reported`] entries evaluate a statement whose truth is not assumed
//! (open questions, or a formula as originally printed next to its corrected
//! form); their residuals are reported but never count as failures.

mod numbers;
mod numeric;
mod partitions;
mod polynomials;
mod sampling;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::barnes::AVec;
use crate::error::{Error, Result};
use crate::exact::rational::format_rational;
use crate::exact::{Poly, Rational};

pub use sampling::{coprime_multisets, draw_avec, AVEC_POOL};

pub const DEFAULT_SEED: u64 = 20_130_906;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Mode {
    ExactPolynomial,
    ExactRational,
    Numeric { tolerance: f64 },
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::ExactPolynomial => write!(f, "exact-polynomial"),
            Mode::ExactRational => write!(f, "exact-rational"),
            Mode::Numeric { tolerance } => write!(f, "numeric({tolerance:e})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Asserted,
    Reported,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Fail,
    Pass,
    Report,
    Skip,
}

/// One named parameter of a sweep point.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Param {
    Int(i64),
    Real(f64),
    Vector(AVec),
    Parts(Vec<u64>),
}

impl Param {
    fn sort_key(&self) -> (u8, Vec<f64>) {
        match self {
            Param::Int(i) => (0, vec![*i as f64]),
            Param::Real(r) => (1, vec![*r]),
            Param::Vector(a) => (
                2,
                a.entries()
                    .iter()
                    .map(crate::exact::rational::to_f64)
                    .collect(),
            ),
            Param::Parts(p) => (3, p.iter().map(|&v| v as f64).collect()),
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Int(i) => write!(f, "{i}"),
            Param::Real(r) => write!(f, "{r}"),
            Param::Vector(a) => write!(f, "{a}"),
            Param::Parts(p) => {
                let s: Vec<String> = p.iter().map(u64::to_string).collect();
                write!(f, "{{{}}}", s.join(","))
            }
        }
    }
}

/// A parameter point, keyed by name.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Params(BTreeMap<String, Param>);

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    pub fn with(mut self, name: &str, value: Param) -> Self {
        self.0.insert(name.to_string(), value);
        self
    }

    pub fn set(&mut self, name: &str, value: Param) {
        self.0.insert(name.to_string(), value);
    }

    pub fn get(&self, name: &str) -> Option<&Param> {
        self.0.get(name)
    }

    fn missing(name: &str) -> Error {
        Error::InvalidParameter(format!("missing or mistyped parameter `{name}`"))
    }

    pub fn int(&self, name: &str) -> Result<i64> {
        match self.0.get(name) {
            Some(Param::Int(i)) => Ok(*i),
            _ => Err(Self::missing(name)),
        }
    }

    pub fn usize(&self, name: &str) -> Result<usize> {
        let v = self.int(name)?;
        usize::try_from(v)
            .map_err(|_| Error::InvalidParameter(format!("`{name}` = {v} must be >= 0")))
    }

    pub fn real(&self, name: &str) -> Result<f64> {
        match self.0.get(name) {
            Some(Param::Real(r)) => Ok(*r),
            Some(Param::Int(i)) => Ok(*i as f64),
            _ => Err(Self::missing(name)),
        }
    }

    pub fn avec(&self, name: &str) -> Result<&AVec> {
        match self.0.get(name) {
            Some(Param::Vector(a)) => Ok(a),
            _ => Err(Self::missing(name)),
        }
    }

    pub fn parts(&self, name: &str) -> Result<&[u64]> {
        match self.0.get(name) {
            Some(Param::Parts(p)) => Ok(p),
            _ => Err(Self::missing(name)),
        }
    }

    fn cmp_key(&self) -> Vec<(String, (u8, Vec<f64>))> {
        self.0
            .iter()
            .map(|(k, v)| (k.clone(), v.sort_key()))
            .collect()
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}", parts.join(", "))
    }
}

fn compare_params(a: &Params, b: &Params) -> std::cmp::Ordering {
    a.cmp_key()
        .partial_cmp(&b.cmp_key())
        .unwrap_or(std::cmp::Ordering::Equal)
}

/// A value produced by one side of an identity.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Rational(Rational),
    Poly(Poly),
    Float(f64),
    /// A sequence of exact values, e.g. a partition function over `t`.
    Seq(Vec<Rational>),
    FloatSeq(Vec<f64>),
}

/// Rounds to 15 significant digits.
pub fn round_sig(v: f64) -> f64 {
    if !v.is_finite() {
        return v;
    }
    format!("{v:.14e}").parse().unwrap_or(v)
}

impl Value {
    fn to_json(&self) -> serde_json::Value {
        match self {
            Value::Rational(q) => json!(format_rational(q)),
            Value::Poly(p) => json!(p.coeffs().iter().map(format_rational).collect::<Vec<_>>()),
            Value::Float(v) => json!(round_sig(*v)),
            Value::Seq(v) => json!(v.iter().map(format_rational).collect::<Vec<_>>()),
            Value::FloatSeq(v) => json!(v.iter().map(|x| round_sig(*x)).collect::<Vec<_>>()),
        }
    }
}

/// Result of evaluating both sides at a sweep point.
#[derive(Clone, Debug)]
pub enum Outcome {
    Compare { lhs: Value, rhs: Value },
    Skip(String),
}

impl Outcome {
    pub fn rational(lhs: Rational, rhs: Rational) -> Self {
        Outcome::Compare {
            lhs: Value::Rational(lhs),
            rhs: Value::Rational(rhs),
        }
    }

    pub fn poly(lhs: Poly, rhs: Poly) -> Self {
        Outcome::Compare {
            lhs: Value::Poly(lhs),
            rhs: Value::Poly(rhs),
        }
    }

    pub fn float(lhs: f64, rhs: f64) -> Self {
        Outcome::Compare {
            lhs: Value::Float(lhs),
            rhs: Value::Float(rhs),
        }
    }

    pub fn seq(lhs: Vec<Rational>, rhs: Vec<Rational>) -> Self {
        Outcome::Compare {
            lhs: Value::Seq(lhs),
            rhs: Value::Seq(rhs),
        }
    }

    pub fn float_seq(lhs: Vec<f64>, rhs: Vec<f64>) -> Self {
        Outcome::Compare {
            lhs: Value::FloatSeq(lhs),
            rhs: Value::FloatSeq(rhs),
        }
    }

    pub fn skip(reason: impl Into<String>) -> Self {
        Outcome::Skip(reason.into())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SweepKey {
    pub name: &'static str,
    pub default: (i64, i64),
    pub bounds: (i64, i64),
}

const fn key(name: &'static str, default: (i64, i64), bounds: (i64, i64)) -> SweepKey {
    SweepKey {
        name,
        default,
        bounds,
    }
}

/// Resolved integer ranges for one sweep.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SweepRanges(BTreeMap<String, RangeInclusive<i64>>);

impl SweepRanges {
    /// Parses `"n=3..6,m=1..15,k=4"`.
    pub fn parse(spec: &str) -> Result<Self> {
        let mut out = BTreeMap::new();
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, range) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected name=lo..hi, got `{item}`")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad integer `{s}` in `{item}`")))
            };
            let (lo, hi) = match range.split_once("..") {
                Some((lo, hi)) => {
                    let hi = hi.strip_prefix('=').unwrap_or(hi);
                    (parse(lo)?, parse(hi)?)
                }
                None => {
                    let v = parse(range)?;
                    (v, v)
                }
            };
            if lo > hi {
                return Err(Error::Parse(format!("empty range in `{item}`")));
            }
            out.insert(name.trim().to_string(), lo..=hi);
        }
        Ok(SweepRanges(out))
    }

    /// The range for `name`; empty when the key is absent.
    #[allow(clippy::reversed_empty_ranges)]
    pub fn get(&self, name: &str) -> RangeInclusive<i64> {
        self.0.get(name).cloned().unwrap_or(1..=0)
    }

    fn resolve(&self, keys: &[SweepKey], id: &str) -> Result<SweepRanges> {
        if let Some(unknown) = self
            .0
            .keys()
            .find(|k| !keys.iter().any(|key| key.name == *k))
        {
            let known: Vec<&str> = keys.iter().map(|k| k.name).collect();
            return Err(Error::InvalidParameter(format!(
                "{id} has no sweep parameter `{unknown}` (known: {})",
                if known.is_empty() {
                    "none".to_string()
                } else {
                    known.join(", ")
                }
            )));
        }
        let mut out = BTreeMap::new();
        for k in keys {
            let r = self
                .0
                .get(k.name)
                .cloned()
                .unwrap_or(k.default.0..=k.default.1);
            if *r.start() < k.bounds.0 || *r.end() > k.bounds.1 {
                return Err(Error::InvalidParameter(format!(
                    "{id}: `{}` must stay within {}..{}",
                    k.name, k.bounds.0, k.bounds.1
                )));
            }
            out.insert(k.name.to_string(), r);
        }
        Ok(SweepRanges(out))
    }
}

/// One registry entry.
pub struct Identity {
    pub id: &'static str,
    /// Short name of the statement, used as its trace anchor.
    pub anchor: &'static str,
    /// The statement in plain text.
    pub statement: &'static str,
    pub mode: Mode,
    pub kind: Kind,
    pub sweep_keys: &'static [SweepKey],
    cases: fn(&SweepRanges, u64) -> Vec<Params>,
    evaluate: fn(&Params) -> Result<Outcome>,
}

impl fmt::Debug for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Identity")
            .field("id", &self.id)
            .field("mode", &self.mode)
            .field("kind", &self.kind)
            .finish()
    }
}

impl Identity {
    pub fn default_sweep(&self) -> String {
        self.sweep_keys
            .iter()
            .map(|k| format!("{}={}..{}", k.name, k.default.0, k.default.1))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn cases(&self, ranges: &SweepRanges, seed: u64) -> Result<Vec<Params>> {
        let resolved = ranges.resolve(self.sweep_keys, self.id)?;
        Ok((self.cases)(&resolved, seed))
    }
}

pub fn registry() -> &'static [Identity] {
    static REGISTRY: std::sync::OnceLock<Vec<Identity>> = std::sync::OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut all = Vec::new();
        all.extend(numbers::identities());
        all.extend(polynomials::identities());
        all.extend(partitions::identities());
        all.extend(numeric::identities());
        all.sort_by_key(|i| i.id);
        all
    })
}

pub fn lookup(id: &str) -> Result<&'static Identity> {
    registry()
        .iter()
        .find(|i| i.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// A single identity evaluated at one parameter point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityCase {
    pub id: String,
    pub anchor: String,
    pub params: Params,
    pub mode: Mode,
}

impl IdentityCase {
    pub fn new(id: &str, params: Params) -> Result<Self> {
        let identity = lookup(id)?;
        Ok(IdentityCase {
            id: identity.id.to_string(),
            anchor: identity.anchor.to_string(),
            params,
            mode: identity.mode,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub case: IdentityCase,
    pub status: Status,
    pub passed: bool,
    pub lhs: serde_json::Value,
    pub rhs: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckReport {
    pub fn is_failure(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Compares two values in the given mode; `Err` carries the discrepancy.
fn compare(mode: Mode, lhs: &Value, rhs: &Value) -> std::result::Result<(), String> {
    match (lhs, rhs) {
        (Value::Rational(a), Value::Rational(b)) => {
            if a == b {
                Ok(())
            } else {
                Err(format!("difference {}", format_rational(&(a - b))))
            }
        }
        (Value::Poly(a), Value::Poly(b)) => {
            if a == b {
                Ok(())
            } else {
                Err(format!("difference {}", a - b))
            }
        }
        (Value::Seq(a), Value::Seq(b)) => {
            if a.len() != b.len() {
                return Err(format!("length {} vs {}", a.len(), b.len()));
            }
            match a.iter().zip(b).position(|(x, y)| x != y) {
                None => Ok(()),
                Some(i) => Err(format!(
                    "first mismatch at index {i}: {} vs {}",
                    format_rational(&a[i]),
                    format_rational(&b[i])
                )),
            }
        }
        (Value::Float(a), Value::Float(b)) => numeric_diff(mode, &[*a], &[*b]),
        (Value::FloatSeq(a), Value::FloatSeq(b)) => {
            if a.len() != b.len() {
                return Err(format!("length {} vs {}", a.len(), b.len()));
            }
            numeric_diff(mode, a, b)
        }
        _ => Err("sides have different value types".into()),
    }
}

fn numeric_diff(mode: Mode, a: &[f64], b: &[f64]) -> std::result::Result<(), String> {
    let tol = match mode {
        Mode::Numeric { tolerance } => tolerance,
        _ => 0.0,
    };
    let (idx, worst) = a
        .iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .enumerate()
        .fold((0, 0.0f64), |acc, (i, d)| {
            if d.is_nan() || d > acc.1 {
                (i, if d.is_nan() { f64::INFINITY } else { d })
            } else {
                acc
            }
        });
    if worst <= tol {
        Ok(())
    } else {
        Err(format!(
            "max |lhs - rhs| = {worst:e} at index {idx} exceeds {tol:e}"
        ))
    }
}

/// Sequences are summarized in reports unless they disagree.
fn report_value(v: &Value, equal: bool) -> serde_json::Value {
    match v {
        Value::Seq(s) if equal => json!(format!("{} values", s.len())),
        Value::FloatSeq(s) if equal && s.len() > 8 => json!(format!("{} values", s.len())),
        other => other.to_json(),
    }
}

fn check_with(identity: &Identity, case: IdentityCase) -> CheckReport {
    match (identity.evaluate)(&case.params) {
        Ok(Outcome::Skip(reason)) => CheckReport {
            case,
            status: Status::Skip,
            passed: false,
            lhs: serde_json::Value::Null,
            rhs: serde_json::Value::Null,
            detail: Some(reason),
        },
        Ok(Outcome::Compare { lhs, rhs }) => {
            let verdict = compare(identity.mode, &lhs, &rhs);
            let passed = verdict.is_ok();
            let status = match (identity.kind, passed) {
                (Kind::Reported, _) => Status::Report,
                (Kind::Asserted, true) => Status::Pass,
                (Kind::Asserted, false) => Status::Fail,
            };
            CheckReport {
                case,
                status,
                passed,
                lhs: report_value(&lhs, passed),
                rhs: report_value(&rhs, passed),
                detail: verdict.err(),
            }
        }
        Err(e) => CheckReport {
            case,
            status: match identity.kind {
                Kind::Asserted => Status::Fail,
                Kind::Reported => Status::Report,
            },
            passed: false,
            lhs: serde_json::Value::Null,
            rhs: serde_json::Value::Null,
            detail: Some(format!("evaluation error: {e}")),
        },
    }
}

/// Evaluates one case.
pub fn check(case: IdentityCase) -> Result<CheckReport> {
    let identity = lookup(&case.id)?;
    Ok(check_with(identity, case))
}

/// Runs an identity over a sweep; failures first, then in parameter order.
pub fn sweep(id: &str, ranges: &SweepRanges, seed: u64) -> Result<Vec<CheckReport>> {
    let identity = lookup(id)?;
    let cases = identity.cases(ranges, seed)?;
    let mut reports: Vec<CheckReport> = cases
        .into_par_iter()
        .map(|params| {
            let case = IdentityCase {
                id: identity.id.to_string(),
                anchor: identity.anchor.to_string(),
                params,
                mode: identity.mode,
            };
            check_with(identity, case)
        })
        .collect();
    reports.sort_by(|a, b| {
        (!a.is_failure())
            .cmp(&!b.is_failure())
            .then_with(|| compare_params(&a.case.params, &b.case.params))
    });
    Ok(reports)
}

/// Per-identity summary of a default sweep.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TraceEntry {
    pub id: String,
    pub anchor: String,
    pub statement: String,
    pub mode: Mode,
    pub kind: Kind,
    pub sweep: String,
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    /// Reported cases where both sides agree, out of `reported`.
    pub reported_agreeing: usize,
    pub reported: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<CheckReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TraceabilityReport {
    pub seed: u64,
    pub identities: Vec<TraceEntry>,
    pub total_cases: usize,
    pub total_failed: usize,
}

impl TraceabilityReport {
    pub fn all_passed(&self) -> bool {
        self.total_failed == 0
    }
}

/// Runs every registry entry on its default sweep.
pub fn verify_all(seed: u64) -> Result<TraceabilityReport> {
    let entries = registry()
        .par_iter()
        .map(|identity| {
            let reports = sweep(identity.id, &SweepRanges::default(), seed)?;
            let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
            Ok(TraceEntry {
                id: identity.id.to_string(),
                anchor: identity.anchor.to_string(),
                statement: identity.statement.to_string(),
                mode: identity.mode,
                kind: identity.kind,
                sweep: identity.default_sweep(),
                cases: reports.len(),
                passed: count(Status::Pass),
                failed: count(Status::Fail),
                skipped: count(Status::Skip),
                reported_agreeing: reports
                    .iter()
                    .filter(|r| r.status == Status::Report && r.passed)
                    .count(),
                reported: count(Status::Report),
                failures: reports
                    .into_iter()
                    .filter(CheckReport::is_failure)
                    .collect(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let total_cases = entries.iter().map(|e| e.cases).sum();
    let total_failed = entries.iter().map(|e| e.failed).sum();
    Ok(TraceabilityReport {
        seed,
        identities: entries,
        total_cases,
        total_failed,
    })
}

/// Cartesian product of the named integer ranges.
fn grid(ranges: &SweepRanges, names: &[&str]) -> Vec<Params> {
    names.iter().fold(vec![Params::new()], |acc, name| {
        acc.into_iter()
            .flat_map(|p| {
                ranges
                    .get(name)
                    .map(move |v| p.clone().with(name, Param::Int(v)))
            })
            .collect()
    })
}

/// Adds a seeded random `a` of length `n` to every point, keyed by `(n, draw)`.
fn with_draws(points: Vec<Params>, seed: u64) -> Vec<Params> {
    points
        .into_iter()
        .filter_map(|mut p| {
            let n = p.usize("n").ok()?;
            let draw = p.int("draw").ok()?;
            if n == 0 {
                return None;
            }
            p.set("a", Param::Vector(draw_avec(seed, n, draw as u64)));
            Some(p)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn ranges_parse() {
        let r = SweepRanges::parse("n=3..6, m=1..=15,k=4").unwrap();
        assert_eq!(r.get("n"), 3..=6);
        assert_eq!(r.get("m"), 1..=15);
        assert_eq!(r.get("k"), 4..=4);
        assert!(SweepRanges::parse("n=6..3").is_err());
        assert!(SweepRanges::parse("n").is_err());
        assert!(SweepRanges::parse("n=a..b").is_err());
    }

    #[test]
    fn registry_ids_unique_and_sorted() {
        let ids: Vec<&str> = registry().iter().map(|i| i.id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ids, sorted);
        for required in [
            "EULER",
            "DILCHER",
            "THM1",
            "COR2",
            "REC1",
            "COR_MT2",
            "COR_N2",
            "COR7",
            "COR8",
            "STIRLING",
            "PART3",
            "SPECIAL_A",
            "PROP_MAIN",
            "EXPLICIT_SIGMA",
            "DIFF",
            "SHIFT",
            "SYMM1",
            "SYMM2",
            "PREC",
            "SELFDUAL",
            "FINALREC",
            "ZETA_DUAL",
        ] {
            assert!(lookup(required).is_ok(), "{required}");
        }
        assert!(matches!(lookup("NOPE"), Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn unknown_sweep_key_rejected() {
        let r = SweepRanges::parse("q=1..2").unwrap();
        assert!(sweep("EULER", &r, 1).is_err());
        let r = SweepRanges::parse("n=1..100000").unwrap();
        assert!(sweep("EULER", &r, 1).is_err());
    }

    #[test]
    fn subset_sum_value_at_three_ones() {
        let a = AVec::from_ints(&[1, 1, 1]).unwrap();
        let params = Params::new()
            .with("n", Param::Int(3))
            .with("m", Param::Int(3))
            .with("a", Param::Vector(a));
        let report = check(IdentityCase::new("THM1", params).unwrap()).unwrap();
        assert_eq!(report.status, Status::Pass);
        assert_eq!(report.lhs, json!("1/2"));
        assert_eq!(report.rhs, json!("1/2"));
    }

    #[test]
    fn even_m_is_skipped() {
        let a = AVec::from_ints(&[1, 2, 3]).unwrap();
        let params = Params::new()
            .with("n", Param::Int(3))
            .with("m", Param::Int(4))
            .with("a", Param::Vector(a));
        let report = check(IdentityCase::new("THM1", params).unwrap()).unwrap();
        assert_eq!(report.status, Status::Skip);
    }

    #[test]
    fn euler_degenerate_case() {
        let params = Params::new().with("n", Param::Int(1));
        let report = check(IdentityCase::new("EULER", params).unwrap()).unwrap();
        assert_eq!(report.status, Status::Pass);
        assert_eq!(report.lhs, json!("-1"));
    }

    #[test]
    fn two_part_reciprocity_example() {
        let params = Params::new()
            .with("n", Param::Int(2))
            .with("m", Param::Int(2))
            .with("parts", Param::Parts(vec![3, 5]));
        let report = check(IdentityCase::new("COR_MT2", params).unwrap()).unwrap();
        assert_eq!(report.status, Status::Pass, "{report:?}");
        assert!(report.lhs.is_array());
    }

    #[test]
    fn sweeps_are_deterministic_and_fail_first() {
        let r = SweepRanges::parse("n=3..4,m=1..5,draw=1..2").unwrap();
        let a = sweep("THM1", &r, 7).unwrap();
        let b = sweep("THM1", &r, 7).unwrap();
        assert_eq!(a, b);
        let c = sweep("THM1", &r, 8).unwrap();
        assert_ne!(
            a.iter().map(|x| x.case.params.clone()).collect::<Vec<_>>(),
            c.iter().map(|x| x.case.params.clone()).collect::<Vec<_>>()
        );
        assert!(a.iter().all(|x| x.status != Status::Fail));
    }

    #[test]
    fn compare_modes() {
        let num = Mode::Numeric { tolerance: 1e-8 };
        assert!(compare(num, &Value::Float(1.0), &Value::Float(1.0 + 1e-9)).is_ok());
        assert!(compare(num, &Value::Float(1.0), &Value::Float(1.0 + 1e-7)).is_err());
        assert!(compare(num, &Value::Float(f64::NAN), &Value::Float(1.0)).is_err());
        let exact = Mode::ExactRational;
        assert!(compare(
            exact,
            &Value::Rational(rat(1, 2)),
            &Value::Rational(rat(2, 4))
        )
        .is_ok());
        assert!(compare(
            exact,
            &Value::Seq(vec![rat(1, 2)]),
            &Value::Seq(vec![rat(1, 3)])
        )
        .is_err());
    }

    #[test]
    fn sig_digits() {
        assert_eq!(round_sig(1.644_934_066_848_226_4), 1.64493406684823);
        assert_eq!(round_sig(0.0), 0.0);
    }
}
