//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Runs without the libtest harness so the lines are
//! always printed.
//!
//! `ACCEPTANCE_SEED` overrides the default seed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use colorcar::euclid::{solve_colorful, verify_certificate};
use colorcar::io::{to_json, CertificateDocument};
use colorcar::linalg::{rat, ratio};
use colorcar::selfcheck::{suite, SuiteReport};
use colorcar::{Caps, PointConfig};

const DEFAULT_SEED: u64 = 20_240_601;

struct Gate {
    seed: u64,
    caps: Caps,
    results: Vec<bool>,
}

impl Gate {
    fn record(&mut self, id: usize, title: &str, ok: bool, detail: String, took: Duration) {
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!("criterion {id} [{verdict}] {title}: {detail} ({:.1}s)", took.as_secs_f64());
        self.results.push(ok);
    }

    fn suite(&self, name: &str, cases: usize) -> (SuiteReport, Duration) {
        let start = Instant::now();
        let s = suite(name).unwrap_or_else(|| panic!("unknown suite {name}"));
        (s.run(self.seed, cases, &self.caps), start.elapsed())
    }

    /// A criterion decided by one suite run with zero tolerated failures.
    fn exact(&mut self, id: usize, title: &str, name: &str, cases: usize) {
        let (r, took) = self.suite(name, cases);
        let ok = r.passed() && r.cases >= cases;
        self.record(id, title, ok, summary(&r), took);
    }
}

fn summary(r: &SuiteReport) -> String {
    let mut s = format!("{} cases, {} checks, {} failures", r.cases, r.checks, r.failures);
    for (k, v) in &r.stats {
        s.push_str(&format!(", {k}={v}"));
    }
    if let Some(f) = &r.first_failure {
        s.push_str(&format!("; first failure: {f}"));
    }
    s
}

fn point(xs: &[i64]) -> Vec<colorcar::Rational> {
    xs.iter().map(|&x| rat(x)).collect()
}

/// Boundary example: the target sits on the segment of two classes and the
/// third class gets coefficient zero.
fn boundary_example(caps: &Caps) -> Result<String, String> {
    let cfg = PointConfig::new(
        2,
        vec![vec![point(&[1, 0])], vec![point(&[-1, 0])], vec![point(&[0, 1]), point(&[0, -1])]],
        point(&[0, 0]),
        false,
    )
    .map_err(|e| e.to_string())?;
    let cert = solve_colorful(&cfg, caps).map_err(|e| e.to_string())?;
    let want = vec![ratio(1, 2), ratio(1, 2), rat(0)];
    if cert.coefficients == want && verify_certificate(&cfg, &cert) {
        Ok("lambda = (1/2, 1/2, 0)".into())
    } else {
        Err(format!("got {:?}", cert.coefficients))
    }
}

/// Equal-classes example: three copies of a triangle around the origin.
fn equal_classes_example(caps: &Caps) -> Result<String, String> {
    let tri = vec![point(&[1, 0]), point(&[-1, 1]), point(&[-1, -1])];
    let cfg = PointConfig::new(2, vec![tri.clone(), tri.clone(), tri], point(&[0, 0]), false)
        .map_err(|e| e.to_string())?;
    let cert = solve_colorful(&cfg, caps).map_err(|e| e.to_string())?;
    let support = cert.coefficients.iter().filter(|c| **c != rat(0)).count();
    if verify_certificate(&cfg, &cert) && support <= 3 {
        Ok(format!("support {support} <= d + 1"))
    } else {
        Err(format!("support {support}, coefficients {:?}", cert.coefficients))
    }
}

fn fixed_certificate(caps: &Caps) -> String {
    let cfg = PointConfig::new(
        2,
        vec![
            vec![point(&[2, 1]), point(&[-1, 3])],
            vec![point(&[-2, -1]), point(&[1, -3])],
            vec![point(&[0, 2]), point(&[3, -1]), point(&[-3, 0])],
        ],
        point(&[0, 0]),
        false,
    )
    .expect("valid configuration");
    match solve_colorful(&cfg, caps) {
        Ok(c) => to_json(&CertificateDocument::from_colorful(&c)),
        Err(e) => to_json(&CertificateDocument::from_error(&e, true)),
    }
}

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
        .install(f)
}

fn main() -> ExitCode {
    let seed = std::env::var("ACCEPTANCE_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED);
    println!("acceptance gate, seed {seed}");
    let mut gate = Gate {
        seed,
        caps: Caps::default(),
        results: Vec::new(),
    };

    let (r, took) = gate.suite("witness", 200);
    let budget = Duration::from_secs(120);
    let ok = r.passed() && r.cases >= 200 && r.stats.get("passing") >= Some(&200) && took < budget;
    gate.record(1, "independent positive circuit on passing random instances (< 120s)", ok, summary(&r), took);

    gate.exact(2, "facet scan equals all-subsets scan, |V| <= 10", "facet-scan", 100);
    gate.exact(3, "eta(X * Y) = eta(X) + eta(Y), <= 6 + 6 vertices", "kunneth", 100);
    gate.exact(4, "Alexander duality, global and link form, |V| <= 8", "alexander", 100);
    gate.exact(5, "eta(Y[S]) >= rank(S), |V| <= 8", "independence-eta", 50);
    gate.exact(6, "support complex and link homology vanish above the rank", "support-vanishing", 50);
    gate.exact(7, "Meshulam criterion, colorful simplex and T = V - S", "scaffold", 50);

    let start = Instant::now();
    let (r, _) = gate.suite("colorful", 200);
    let (eq, _) = gate.suite("equivariance", 50);
    let boundary = boundary_example(&gate.caps);
    let equal = equal_classes_example(&gate.caps);
    let ok = r.passed()
        && r.stats.get("boundary").is_some_and(|&n| n > 0)
        && r.stats.get("equal_classes").is_some_and(|&n| n > 0)
        && eq.passed()
        && boundary.is_ok()
        && equal.is_ok();
    let detail = format!(
        "{}; equivariance {} cases, {} failures; boundary example: {}; equal classes example: {}",
        summary(&r),
        eq.cases,
        eq.failures,
        boundary.unwrap_or_else(|e| format!("FAILED {e}")),
        equal.unwrap_or_else(|e| format!("FAILED {e}")),
    );
    gate.record(8, "colorful Caratheodory certificates verify exactly", ok, detail, start.elapsed());

    let start = Instant::now();
    let (det, _) = gate.suite("determinism", 20);
    let caps = gate.caps;
    let certs: Vec<String> = [1, 4, 1, 4]
        .into_iter()
        .map(|t| in_pool(t, || fixed_certificate(&caps)))
        .collect();
    let same_certs = certs.iter().all(|c| c == &certs[0]);
    let s = suite("witness").expect("suite");
    let one = in_pool(1, || s.run(seed, 30, &caps));
    let four = in_pool(4, || s.run(seed, 30, &caps));
    let ok = det.passed() && same_certs && one == four;
    let detail = format!(
        "{}; fixed certificate identical over 4 runs: {same_certs}; 30-case suite report identical at 1 and 4 threads: {}",
        summary(&det),
        one == four
    );
    gate.record(9, "byte-identical certificates across runs and thread counts", ok, detail, start.elapsed());

    let passed = gate.results.iter().filter(|&&b| b).count();
    println!("acceptance: {passed}/{} criteria passed", gate.results.len());
    if passed == gate.results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
