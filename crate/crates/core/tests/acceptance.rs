//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line, written
//! straight to stdout so it shows up without `--nocapture`.

use std::io::Write;
use std::time::{Duration, Instant};

use barneskit::identities::{
    lookup, registry, sweep, verify_all, CheckReport, Kind, Status, SweepRanges, DEFAULT_SEED,
};
use barneskit::zeta::hurwitz_zeta;

/// Outcome of one identity over one sweep.
struct Tally {
    id: &'static str,
    cases: usize,
    passed: usize,
    failed: usize,
    skipped: usize,
    reports: Vec<CheckReport>,
}

impl Tally {
    fn ok(&self) -> bool {
        self.failed == 0 && self.passed > 0
    }

    fn summary(&self) -> String {
        format!(
            "{} {}/{} pass, {} skipped",
            self.id,
            self.passed,
            self.cases - self.skipped,
            self.skipped
        )
    }
}

fn run(id: &'static str, ranges: &str) -> Tally {
    let reports = sweep(id, &SweepRanges::parse(ranges).unwrap(), DEFAULT_SEED).unwrap();
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    Tally {
        id,
        cases: reports.len(),
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        skipped: count(Status::Skip),
        reports,
    }
}

/// Residual summary of a printed-form variant; informational only.
fn literal(id: &'static str, ranges: &str) -> String {
    let reports = sweep(id, &SweepRanges::parse(ranges).unwrap(), DEFAULT_SEED).unwrap();
    let evaluated: Vec<_> = reports
        .iter()
        .filter(|r| r.status == Status::Report)
        .collect();
    let agree = evaluated.iter().filter(|r| r.passed).count();
    format!("{id} agrees on {agree}/{}", evaluated.len())
}

fn line(criterion: u32, ok: bool, elapsed: Duration, limit: Option<Duration>, detail: &str) {
    let within = limit.is_none_or(|l| elapsed < l);
    let verdict = if ok && within { "PASS" } else { "FAIL" };
    let budget = limit.map_or(String::new(), |l| format!(" (limit {}s)", l.as_secs()));
    let text = format!(
        "acceptance {criterion:>2}: {verdict} [{:.2}s{budget}] {detail}\n",
        elapsed.as_secs_f64()
    );
    std::io::stdout().lock().write_all(text.as_bytes()).unwrap();
    assert!(ok, "criterion {criterion}: {detail}");
    assert!(
        within,
        "criterion {criterion} exceeded its time limit: {elapsed:?}"
    );
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

#[test]
fn criterion_01_euler_relation() {
    let start = Instant::now();
    let t = run("EULER", "n=1..30");
    line(
        1,
        t.ok() && t.passed == 30,
        start.elapsed(),
        secs(1),
        &t.summary(),
    );
}

#[test]
fn criterion_02_higher_order_bernoulli() {
    let start = Instant::now();
    let t = run("DILCHER", "order=2..4,k=0..20");
    let detail = format!(
        "{}; printed order-4 sign: {}",
        t.summary(),
        literal("DILCHER_LITERAL", "order=4,k=3..20")
    );
    line(2, t.ok(), start.elapsed(), None, &detail);
}

#[test]
fn criterion_03_subset_sums() {
    let start = Instant::now();
    let t = run("THM1", "n=3..6,m=1..15,draw=1..5");
    let odd_in_range = t
        .reports
        .iter()
        .filter(|r| r.status != Status::Skip)
        .all(|r| {
            let n = r.case.params.int("n").unwrap();
            let m = r.case.params.int("m").unwrap();
            let expect = if n == 3 && m == 3 { "1/2" } else { "0" };
            m % 2 == 1 && r.passed && r.lhs == expect && r.rhs == expect
        });
    let special = t
        .reports
        .iter()
        .filter(|r| r.case.params.int("n") == Ok(3) && r.case.params.int("m") == Ok(3))
        .count();
    line(
        3,
        t.ok() && odd_in_range && special == 5,
        start.elapsed(),
        secs(30),
        &format!("{}; (3,3) gives 1/2 on {special} vectors", t.summary()),
    );
}

#[test]
fn criterion_04_all_ones_and_recurrence() {
    let start = Instant::now();
    let cor = run("COR2", "n=3..6,m=1..15");
    let three = cor
        .reports
        .iter()
        .filter(|r| r.status == Status::Pass)
        .all(|r| {
            let at_33 = r.case.params.int("n") == Ok(3) && r.case.params.int("m") == Ok(3);
            r.lhs == if at_33 { "3" } else { "0" }
        });
    let rec = run("REC1", "n=4..6,m=1..15");
    line(
        4,
        cor.ok() && three && rec.ok(),
        start.elapsed(),
        None,
        &format!("{}; {}", cor.summary(), rec.summary()),
    );
}

#[test]
fn criterion_05_partitions() {
    let start = Instant::now();
    let part = run("PART3", "n=1..4,maxpart=11,tmax=200");
    let pop = run("POPOVICIU", "pair=1..3,tmax=200");
    line(
        5,
        part.ok() && pop.ok() && pop.passed == 3,
        start.elapsed(),
        secs(60),
        &format!("{} multisets; {}", part.summary(), pop.summary()),
    );
}

#[test]
fn criterion_06_fourier_dedekind() {
    let start = Instant::now();
    let dual = run("FDS_DUAL", "a=1..30,count=1..3,draw=1..3");
    let closed = run("EXPLICIT_SIGMA", "a=1..7,n=1..3");
    line(
        6,
        dual.ok() && closed.ok(),
        start.elapsed(),
        None,
        &format!("{} (tol 1e-9); {}", dual.summary(), closed.summary()),
    );
}

#[test]
fn criterion_07_reciprocity_polynomials() {
    let start = Instant::now();
    let mt2 = run("COR_MT2", "n=2..3,m=0..8,maxpart=7");
    let n2 = run("COR_N2", "pair=1..3,m=0..8");
    let detail = format!(
        "{}; {}; printed forms: {}, {}",
        mt2.summary(),
        n2.summary(),
        literal("COR_MT2_LITERAL", "n=2..3,m=0..8,maxpart=7"),
        literal("COR_N2_LITERAL", "pair=1..3,m=0..8"),
    );
    line(7, mt2.ok() && n2.ok(), start.elapsed(), None, &detail);
}

#[test]
fn criterion_08_order_n_and_stirling() {
    let start = Instant::now();
    let cor8 = run("COR8", "n=1..4,m=1..8");
    let stirling = run("STIRLING", "n=1..10,k=0..9");
    line(
        8,
        cor8.ok() && stirling.ok(),
        start.elapsed(),
        None,
        &format!("{}; {}", cor8.summary(), stirling.summary()),
    );
}

#[test]
fn criterion_09_zeta_dual_path() {
    let start = Instant::now();
    let dual = run("ZETA_DUAL", "set=1..3,si=0..1,xi=0..2");
    let basel = hurwitz_zeta(2.0, 1.0, 1e-14).unwrap();
    let basel_ok = (basel - 1.644_934_066_848_226_4).abs() < 1e-10;
    let worst = dual
        .reports
        .iter()
        .filter_map(|r| Some((r.lhs.as_f64()? - r.rhs.as_f64()?).abs()))
        .fold(0.0f64, f64::max);
    line(
        9,
        dual.ok() && dual.passed == 18 && basel_ok,
        start.elapsed(),
        secs(30),
        &format!(
            "{} (tol 1e-8, worst {worst:.1e}); hurwitz(2,1) = {basel}",
            dual.summary()
        ),
    );
}

#[test]
fn criterion_10_polynomial_suite() {
    let start = Instant::now();
    let tallies = [
        run("DIFF", "n=1..4,m=0..10,draw=1..3"),
        run("SHIFT", "n=1..4,m=0..10,draw=1..3"),
        run("SYMM1", "n=1..3,l=0..8,m=0..8,draw=1..2"),
        run("SYMM2", "n=1..3,l=0..8,m=0..8,draw=1..2"),
        run("PREC", "n=1..3,m=1..8,draw=1..2"),
        run("SELFDUAL", "set=1..3,k=0..20"),
        run("FINALREC", "n=1..4,m=1..8,draw=1..3,parity=0..1"),
    ];
    let ok = tallies.iter().all(Tally::ok);
    let mut detail: Vec<String> = tallies.iter().map(Tally::summary).collect();
    detail.push(format!(
        "printed forms: {}, {}, {}, {}",
        literal("SYMM2_LITERAL", "n=1..3,l=0..8,m=0..8,draw=1..2"),
        literal("SYMM2_L_ONLY", "n=1..3,l=0..8,m=0..8,draw=1..2"),
        literal("PREC_LITERAL", "n=1..3,m=1..8,draw=1..2"),
        literal("FINALREC_LITERAL", "n=1..4,m=1..8,draw=1..3"),
    ));
    line(10, ok, start.elapsed(), secs(60), &detail.join("; "));
}

#[test]
fn criterion_11_traceability() {
    let start = Instant::now();
    let report = verify_all(DEFAULT_SEED).unwrap();
    let listed = registry().iter().all(|i| {
        report.identities.iter().any(|e| {
            e.id == i.id && !e.anchor.is_empty() && e.anchor == lookup(i.id).unwrap().anchor
        })
    });
    let asserted = registry()
        .iter()
        .filter(|i| i.kind == Kind::Asserted)
        .count();
    line(
        11,
        report.all_passed() && listed && report.identities.len() == registry().len(),
        start.elapsed(),
        secs(300),
        &format!(
            "{} ids ({asserted} asserted), {} cases, {} failed",
            report.identities.len(),
            report.total_cases,
            report.total_failed
        ),
    );
}
