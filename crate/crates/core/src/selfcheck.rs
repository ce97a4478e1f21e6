//! Seeded property suites: every invariant of the engine, checked on random
//! instances against the oracles in [`crate::oracle`].
//!
//! Case `i` of suite `s` draws from its own RNG stream `s/i`, so results do
//! not depend on how cases are scheduled across threads, and a suite's
//! report is a function of `(seed, cases)` alone.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::caps::Caps;
use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::euclid::{solve_colorful, verify_certificate, Point, PointConfig};
use crate::gen::{self, GenRng};
use crate::homology::{eta, reduced_homology};
use crate::io::{
    parse, to_json, CertificateDocument, ComplexDocument, InstanceDocument, MatroidSpec, OrientedMatroidSpec,
    PointConfigDocument, Rat,
};
use crate::linalg::{column_rank, primitive_integer, rational_rank, Rational};
use crate::matroid::{Matroid, MatroidKind};
use crate::oracle;
use crate::oriented::{OrientedMatroid, SignedSet};
use crate::subset::Subset;
use crate::theorem::{build_z, check_instance, colorful_bruteforce, find_witness, meshulam_check, Instance};

/// Outcome of one suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub checks: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
    /// Suite-specific counters, such as generated-but-filtered instances.
    pub stats: BTreeMap<&'static str, usize>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Accumulates checks for one case.
#[derive(Default)]
pub struct Tally {
    checks: usize,
    failures: usize,
    first_failure: Option<String>,
    stats: BTreeMap<&'static str, usize>,
}

impl Tally {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(msg());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failures += 1;
        if self.first_failure.is_none() {
            self.first_failure = Some(msg);
        }
    }

    /// Unwraps `r`, recording an error as a failure.
    fn ok<T>(&mut self, r: Result<T>, what: &str) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checks += 1;
                self.fail(format!("{what}: {e}"));
                None
            }
        }
    }

    fn count(&mut self, key: &'static str, n: usize) {
        *self.stats.entry(key).or_default() += n;
    }
}

type CaseFn = fn(&mut GenRng, &Caps, &mut Tally);

pub struct Suite {
    pub name: &'static str,
    pub description: &'static str,
    pub default_cases: usize,
    case: CaseFn,
}

impl Suite {
    /// Runs cases `0..cases` in parallel and merges them in case order.
    pub fn run(&self, seed: u64, cases: usize, caps: &Caps) -> SuiteReport {
        let tallies: Vec<Tally> = (0..cases)
            .into_par_iter()
            .map(|i| {
                let mut rng = gen::rng(seed, &format!("{}/{i}", self.name));
                let mut t = Tally::default();
                (self.case)(&mut rng, caps, &mut t);
                if let Some(f) = &mut t.first_failure {
                    *f = format!("case {i}: {f}");
                }
                t
            })
            .collect();
        let mut report = SuiteReport {
            name: self.name,
            cases,
            checks: 0,
            failures: 0,
            first_failure: None,
            stats: BTreeMap::new(),
        };
        for t in tallies {
            report.checks += t.checks;
            report.failures += t.failures;
            if report.first_failure.is_none() {
                report.first_failure = t.first_failure;
            }
            for (k, v) in t.stats {
                *report.stats.entry(k).or_default() += v;
            }
        }
        report
    }
}

pub const SUITES: &[Suite] = &[
    Suite {
        name: "matroid-rank",
        description: "rank is monotone, increases by at most one per element, and is submodular",
        default_cases: 40,
        case: matroid_rank,
    },
    Suite {
        name: "matroid-circuits",
        description: "a set is independent iff it contains no enumerated circuit",
        default_cases: 40,
        case: matroid_circuits,
    },
    Suite {
        name: "transversal",
        description: "transversal rank equals a brute-force maximum matching",
        default_cases: 40,
        case: transversal,
    },
    Suite {
        name: "om-soundness",
        description: "positive-circuit containment agrees with exact linear programming",
        default_cases: 30,
        case: om_soundness,
    },
    Suite {
        name: "om-supports",
        description: "circuit supports equal the circuits of the linear matroid",
        default_cases: 40,
        case: om_supports,
    },
    Suite {
        name: "om-reorientation",
        description: "negating a column flips that element's sign in every circuit",
        default_cases: 40,
        case: om_reorientation,
    },
    Suite {
        name: "om-rank",
        description: "oriented matroid rank equals fraction-free matrix rank",
        default_cases: 40,
        case: om_rank,
    },
    Suite {
        name: "kunneth",
        description: "eta of a join is the sum of the etas",
        default_cases: 100,
        case: kunneth,
    },
    Suite {
        name: "alexander",
        description: "Alexander duality, globally and in link form",
        default_cases: 100,
        case: alexander,
    },
    Suite {
        name: "independence-eta",
        description: "eta(Y[S]) >= rank(S) for independence complexes",
        default_cases: 50,
        case: independence_eta,
    },
    Suite {
        name: "support-vanishing",
        description: "support complex homology vanishes from the rank up, links from rank - 1 up",
        default_cases: 50,
        case: support_vanishing,
    },
    Suite {
        name: "euler",
        description: "alternating face count matches alternating Betti sum",
        default_cases: 100,
        case: euler,
    },
    Suite {
        name: "witness",
        description: "instances passing the hypothesis check have an independent positive circuit",
        default_cases: 200,
        case: witness_suite,
    },
    Suite {
        name: "facet-scan",
        description: "facet-based hypothesis check equals the all-subsets scan",
        default_cases: 100,
        case: facet_scan,
    },
    Suite {
        name: "scaffold",
        description: "Meshulam criterion and colorful simplex on passing instances",
        default_cases: 30,
        case: scaffold,
    },
    Suite {
        name: "colorful",
        description: "colorful Caratheodory certificates under the pairwise condition",
        default_cases: 200,
        case: colorful_suite,
    },
    Suite {
        name: "equivariance",
        description: "certificates stay valid under invertible affine maps",
        default_cases: 50,
        case: equivariance,
    },
    Suite {
        name: "roundtrip",
        description: "every document type survives serialization unchanged",
        default_cases: 50,
        case: roundtrip,
    },
    Suite {
        name: "determinism",
        description: "certificates are byte-identical across runs and thread counts",
        default_cases: 20,
        case: determinism,
    },
];

pub fn suite(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

/// Runs the named suites (all if `names` is empty) concurrently; reports
/// come back in the order of [`SUITES`].
pub fn run(names: &[String], seed: u64, cases: Option<usize>, caps: &Caps) -> Vec<SuiteReport> {
    let chosen: Vec<&Suite> = SUITES
        .iter()
        .filter(|s| names.is_empty() || names.iter().any(|n| n == s.name))
        .collect();
    chosen
        .par_iter()
        .map(|s| s.run(seed, cases.unwrap_or(s.default_cases), caps))
        .collect()
}

fn column_slices(cols: &[Vec<Rational>], s: Subset) -> Vec<&[Rational]> {
    s.iter().map(|i| cols[i].as_slice()).collect()
}

fn matroid_rank(rng: &mut GenRng, caps: &Caps, t: &mut Tally) {
    let n = rng.gen_range(1..=8);
    let Some(m) = t.ok(gen::any_matroid(rng, n, caps), "generate matroid") else {
        return;
    };
    let all = Subset::full(n);
    let rank: Vec<usize> = (0..1u64 << n).map(|b| m.rank(Subset::from_bits(b))).collect();
    let r = |s: Subset| rank[s.bits() as usize];
    t.check(r(Subset::EMPTY) == 0, || format!("{:?}: rank of empty set", m.kind()));
    for big in all.subsets() {
        for small in big.subsets() {
            let (a, b) = (r(small), r(big));
            t.check(a <= b && b <= a + big.len() - small.len(), || {
                format!("{:?}: rank({small:?}) = {a}, rank({big:?}) = {b}", m.kind())
            });
        }
    }
    for s in all.subsets() {
        for u in all.subsets() {
            let lhs = r(s.union(u)) + r(s.intersection(u));
            t.check(lhs <= r(s) + r(u), || format!("{:?}: submodularity fails on {s:?}, {u:?}", m.kind()));
        }
    }
}

fn matroid_circuits(rng: &mut GenRng, caps: &Caps, t: &mut Tally) {
    let n = rng.gen_range(1..=10);
    let Some(m) = t.ok(gen::any_matroid(rng, n, caps), "generate matroid") else {
        return;
    };
    let Some(circuits) = t.ok(m.circuits(caps), "circuits") else {
        return;
    };
    for s in Subset::full(n).subsets() {
        let free = !circuits.iter().any(|c| c.is_subset_of(s));
        t.check(m.is_independent(s) == free, || {
            format!("{:?}: independence of {s:?} disagrees with circuits {circuits:?}", m.kind())
        });
    }
}

fn transversal(rng: &mut GenRng, _caps: &Caps, t: &mut Tally) {
    let n = rng.gen_range(1..=10);
    let members = rng.gen_range(1..=6);
    let Some(m) = t.ok(gen::transversal(rng, n, members), "generate transversal matroid") else {
        return;
    };
    let MatroidKind::Transversal { family } = m.kind() else {
        unreachable!()
    };
    for s in Subset::full(n).subsets() {
        let (a, b) = (m.rank(s), oracle::brute_force_matching(family, s));
        t.check(a == b, || format!("family {family:?}: rank({s:?}) = {a}, matching = {b}"));
    }
}

fn realizable(rng: &mut GenRng, caps: &Caps, t: &mut Tally, max_n: usize) -> Option<gen::Realized> {
    let d = rng.gen_range(1..=4);
    let n = rng.gen_range(1..=max_n);
    let real = if rng.gen_bool(0.5) {
        gen::realizable_blocks(rng, d, n, caps)
    } else {
        gen::realizable(rng, d, n, caps)
    };
    t.ok(real, "generate vector configuration")
}

fn om_soundness(rng: &mut GenRng, caps: &Caps, t: &mut Tally) {
    let Some(real) = realizable(rng, caps, t, 9) else {
        return;
    };
    for a in real.om.ground().full().subsets() {
        let engine = real.om.contains_positive_circuit(a);
        let lp = oracle::has_positive_dependency(&column_slices(&real.columns, a));
        t.check(engine.is_some() == lp, || {
            format!("columns {:?}: {a:?} engine {engine:?}, LP {lp}", real.columns)
        });
        if let Some(c) = engine {
            t.check(c.is_subset_of(a), || format!("reported circuit {c:?} not inside {a:?}"));
        }
    }
    for &c in real.om.positive_circuits() {
        t.check(oracle::is_positive_circuit(&real.columns, c), || {
            format!("columns {:?}: {c:?} is not a positive circuit by LP", real.columns)
        });
    }
}

fn om_supports(rng: &mut GenRng, caps: &Caps, t: &mut Tally) {
    let Some(real) = realizable(rng, caps, t, 9) else {
        return;
    };
    let Some(lin) = t.ok(Matroid::linear(real.om.ground().clone(), real.columns.clone()), "linear matroid") else {
        return;
    };
    let Some(mut expected) = t.ok(lin.circuits(caps), "linear circuits") else {
        return;
    };
    expected.sort();
    let mut supports: Vec<Subset> = real.om.circuits().iter().map(SignedSet::support).collect();
    supports.sort();
    t.check(supports == expected, || {
        format!("columns {:?}: supports {supports:?} vs {expected:?}", real.columns)
    });
}

fn flip(c: &SignedSet, e: usize) -> SignedSet {
    let (p, n) = (c.positive(), c.negative());
    let (p, n) = if p.contains(e) {
        (p.without(e), n.with(e))
    } else if n.contains(e) {
        (p.with(e), n.without(e))
    } else {
        (p, n)
    };
    SignedSet::new(p, n).expect("non-empty").canonical()
}

fn om_reorientation(rng: &mut GenRng, caps: &Caps, t: &mut Tally) {
    let Some(real) = realizable(rng, caps, t, 9) else {
        return;
    };
    let e = rng.gen_range(0..real.columns.len());
    let mut cols = real.columns.clone();
    cols[e] = cols[e].iter().map(|x| -x).collect();
    let Some(negated) = t.ok(
        OrientedMatroid::from_rational_vectors(real.om.ground().clone(), &cols, real.dim, caps),
        "negated configuration",
    ) else {
        return;
    };
    let expected: Vec<SignedSet> = real.om.circuits().iter().map(|c| flip(c, e)).collect();
    t.check(negated.circuits() == expected.as_slice(), || {
        format!("columns {:?}, e = {e}: negated circuits differ from flipped", real.columns)
    });
    t.check(real.om.reorient(e).circuits() == negated.circuits(), || {
        format!("columns {:?}, e = {e}: reorient differs from negated columns", real.columns)
    });
}

fn om_rank(rng: &mut GenRng, caps: &Caps, t: &mut Tally) {
    let Some(real) = realizable(rng, caps, t, 9) else {
        return;
    };
    let ints: Vec<_> = real.columns.iter().map(|c| primitive_integer(c)).collect();
    let refs: Vec<&[_]> = ints.iter().map(Vec::as_slice).collect();
    let rows: Vec<Vec<Rational>> = (0..real.dim)
        .map(|r| real.columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    let (a, b, c) = (real.om.rank(), column_rank(&refs), rational_rank(&rows));
    t.check(a == b && b == c, || format!("columns {:?}: ranks {a}, {b}, {c}", real.columns));
}

fn kunneth(rng: &mut GenRng, caps: &Caps, t: &mut Tally) {
    let Some(x) = t.ok(gen::complex(rng, 6), "generate X") else {
        return;
    };
    let Some(y) = t.ok(gen::complex(rng, 6).and_then(|y| y.relabel(|l| format!("{l}'"))), "generate Y") else {
        return;
    };
    let Some(j) = t.ok(x.join(&y), "join") else {
        return;
    };
    let etas = (eta(&x, caps), eta(&y, caps), eta(&j, caps));
    if let (Ok(ex), Ok(ey), Ok(ej)) = etas {
        t.check(ej == ex + ey, || {
            format!("X {:?}, Y {:?}: eta(X*Y) = {ej}, eta(X) = {ex}, eta(Y) = {ey}", x.facets(), y.facets())
        });
    } else {
        t.fail(format!("homology failed: {etas:?}"));
    }
}

/// `dim H̃_i(A) = dim H̃_{n-i-3}(B)` for `-1 <= i <= n - 2`.
fn dual_degrees(a: &SimplicialComplex, b: &SimplicialComplex, n: usize, caps: &Caps, t: &mut Tally, what: &str) {
    let (Some(ha), Some(hb)) = (t.ok(reduced_homology(a, caps), what), t.ok(reduced_homology(b, caps), what)) else {
        return;
    };
    let n = n as isize;
    for i in -1..=n - 2 {
        let (l, r) = (ha.get(i), hb.get(n - i - 3));
        t.check(l == r, || {
            format!("{what}: degree {i}: {l} vs {r}; A = {:?}, B = {:?}", a.facets(), b.facets())
        });
    }
}

fn alexander(rng: &mut GenRng, caps: &Caps, t: &mut Tally) {
    let n = rng.gen_range(1..=8);
    let Some(x) = t.ok(gen::proper_complex(rng, n), "generate X") else {
        return;
    };
    let Some(dual) = t.ok(x.alexander_dual(caps), "dual") else {
        return;
    };
    dual_degrees(&dual, &x, n, caps, t, "global duality");
    let Some(faces) = t.ok(x.faces_by_size(caps.faces), "faces") else {
        return;
    };
    for &f in faces.iter().skip(1).flatten() {
        let tface = Subset::from_bits(f);
        let s = x.vertices().full().difference(tface);
        t.check(!dual.contains(s), || format!("S = {s:?} lies in the dual"));
        let (Some(ds), Some(lk)) = (t.ok(dual.induced(s), "induced"), t.ok(x.link(tface), "link")) else {
            continue;
        };
        dual_degrees(&ds, &lk, s.len(), caps, t, "link duality");
        t.count("links", 1);
    }
}

fn independence_eta(rng: &mut GenRng, caps: &Caps, t: &mut Tally) {
    let n = rng.gen_range(1..=8);
    let Some(m) = t.ok(gen::any_matroid(rng, n, caps), "generate matroid") else {
        return;
    };
    let Some(y) = t.ok(SimplicialComplex::independence_complex(&m, caps), "independence complex") else {
        return;
    };
    for s in Subset::full(n).subsets().filter(|s| !s.is_empty()) {
        let Some(ys) = t.ok(y.induced(s), "induced") else {
            continue;
        };
        let Some(e) = t.ok(eta(&ys, caps), "eta") else {
            continue;
        };
        let r = m.rank(s);
        t.check(e.at_least(r), || format!("{:?}: eta(Y[{s:?}]) = {e} < rank {r}", m.kind()));
    }
}

fn support_vanishing(rng: &mut GenRng, caps: &Caps, t: &mut Tally) {
    let Some(real) = realizable(rng, caps, t, 8) else {
        return;
    };
    let r = real.om.rank() as isize;
    let x = SimplicialComplex::support_complex(&real.om);
    let Some(h) = t.ok(reduced_homology(&x, caps), "homology") else {
        return;
    };
    for (j, d) in h.degrees().filter(|&(j, _)| j >= r) {
        t.check(d == 0, || format!("columns {:?}: H_{j}(X) has dimension {d}", real.columns));
    }
    let Some(faces) = t.ok(x.faces_by_size(caps.faces), "faces") else {
        return;
    };
    for &f in faces.iter().skip(1).flatten() {
        let s = Subset::from_bits(f);
        let Some(hl) = t.ok(x.link(s).and_then(|l| reduced_homology(&l, caps)), "link homology") else {
            continue;
        };
        for (j, d) in hl.degrees().filter(|&(j, _)| j >= r - 1) {
            t.check(d == 0, || format!("columns {:?}: H_{j}(lk({s:?})) = {d}", real.columns));
        }
    }
}

fn euler(rng: &mut GenRng, caps: &Caps, t: &mut Tally) {
    let x = if rng.gen_bool(0.5) {
        t.ok(gen::complex(rng, 8), "generate complex")
    } else {
        realizable(rng, caps, t, 8).map(|r| SimplicialComplex::support_complex(&r.om))
    };
    let Some(x) = x else {
        return;
    };
    let (Some(f), Some(h)) = (t.ok(x.f_vector(caps.faces), "faces"), t.ok(reduced_homology(&x, caps), "homology"))
    else {
        return;
    };
    // f[k] counts faces of size k, i.e. dimension k - 1
    let chi: i64 = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| if k % 2 == 1 { c as i64 } else { -(c as i64) })
        .sum();
    t.check(chi == h.euler() + 1, || format!("{:?}: chi = {chi}, reduced Betti sum = {}", x.facets(), h.euler()));
}

/// Picks a dimension `d <= 4` uniformly, then draws instances in that
/// dimension until one passes the hypothesis check (at most `attempts`
/// tries), counting the draws.
fn passing_instance(
    rng: &mut GenRng,
    caps: &Caps,
    t: &mut Tally,
    max_n: usize,
    attempts: usize,
) -> Option<(gen::Realized, Instance)> {
    let d = rng.gen_range(1..=4);
    for _ in 0..attempts {
        let (real, inst) = t.ok(gen::instance_in(rng, d, max_n, caps), "generate instance")?;
        t.count("generated", 1);
        if check_instance(&inst).passed() {
            t.count("passing", 1);
            t.count(["d1", "d2", "d3", "d4"][real.dim - 1], 1);
            t.count(["n<=5", "n<=5", "n<=5", "n<=5", "n<=5", "n<=5", "n6-7", "n6-7", "n8+", "n8+", "n8+"][inst.ground().len()], 1);
            return Some((real, inst));
        }
    }
    t.fail(format!("no passing instance in {attempts} draws"));
    None
}

fn witness_suite(rng: &mut GenRng, caps: &Caps, t: &mut Tally) {
    let Some((real, inst)) = passing_instance(rng, caps, t, 9, 5000) else {
        return;
    };
    let Some(w) = t.ok(find_witness(&inst), "find_witness") else {
        return;
    };
    let g = inst.ground();
    if w.circuit.len() >= 3 {
        t.count("witness>=3", 1);
    }
    t.check(oracle::is_positive_circuit(&real.columns, w.circuit), || {
        format!("columns {:?}: witness {:?} is not a positive circuit", real.columns, g.labels_of(w.circuit))
    });
    t.check(oracle::independent(inst.matroid(), w.circuit), || {
        format!("{:?}: witness {:?} is dependent", inst.matroid().kind(), g.labels_of(w.circuit))
    });
    let brute = oracle::brute_force_witness(&real.columns, &inst);
    t.check(brute == Some(w.circuit), || {
        format!("columns {:?}: engine {:?}, brute force {brute:?}", real.columns, w.circuit)
    });
}

fn facet_scan(rng: &mut GenRng, caps: &Caps, t: &mut Tally) {
    let Some((real, inst)) = t.ok(gen::instance(rng, 4, 10, caps), "generate instance") else {
        return;
    };
    let report = check_instance(&inst);
    let naive = oracle::naive_hypothesis_lp(&real.columns, inst.matroid());
    t.count(if naive { "hypothesis_true" } else { "hypothesis_false" }, 1);
    t.check(report.hypothesis_ok == naive, || {
        format!("columns {:?}, {:?}: facet scan {}, naive {naive}", real.columns, inst.matroid().kind(), report.hypothesis_ok)
    });
    t.check(report.violating_set.is_some() != report.hypothesis_ok, || "violating set presence".into());
    if let Some(a) = report.violating_set {
        let full = inst.ground().full();
        t.check(!oracle::has_positive_dependency(&column_slices(&real.columns, a)), || {
            format!("violating set {a:?} contains a positive circuit")
        });
        t.check(inst.matroid().rank(full.difference(a)) < inst.oriented_matroid().rank(), || {
            format!("violating set {a:?} has a complement of full rank")
        });
    }
}

fn scaffold(rng: &mut GenRng, caps: &Caps, t: &mut Tally) {
    let Some((real, inst)) = passing_instance(rng, caps, t, 8, 5000) else {
        return;
    };
    let Some(z) = t.ok(build_z(&inst, caps), "build_z") else {
        return;
    };
    if let Some(report) = t.ok(meshulam_check(&z, caps), "meshulam_check") {
        let bad: Vec<_> = report.failures().collect();
        t.check(bad.is_empty(), || format!("columns {:?}: Meshulam failures {bad:?}", real.columns));
    }
    let Some(found) = t.ok(colorful_bruteforce(&z, caps), "colorful_bruteforce") else {
        return;
    };
    let Some(c) = found else {
        t.fail(format!("columns {:?}: no colorful simplex", real.columns));
        return;
    };
    let tset = c.complement;
    t.check(oracle::has_positive_dependency(&column_slices(&real.columns, tset)), || {
        format!("columns {:?}: T = {tset:?} has no positive circuit", real.columns)
    });
    t.check(oracle::independent(inst.matroid(), tset), || {
        format!("{:?}: T = {tset:?} is dependent", inst.matroid().kind())
    });
}

/// Independent re-check of a certificate by linear programming.
fn hull_recheck(cfg: &PointConfig, selection: &[usize]) -> bool {
    let pts: Vec<&[Rational]> = selection
        .iter()
        .enumerate()
        .map(|(i, &j)| cfg.classes()[i][j].as_slice())
        .collect();
    oracle::in_convex_hull(&pts, cfg.target())
}

fn colorful_suite(rng: &mut GenRng, caps: &Caps, t: &mut Tally) {
    let d = rng.gen_range(1..=3);
    let kind = rng.gen_range(0..10);
    let cfg = match kind {
        0 => gen::boundary_config(rng, d),
        1 => gen::equal_classes_config(rng, d),
        _ => gen::pairwise_config(rng, d),
    };
    let Some(cert) = t.ok(solve_colorful(&cfg, caps), "solve_colorful") else {
        return;
    };
    let doc = PointConfigDocument::from_config(&cfg);
    t.check(verify_certificate(&cfg, &cert), || format!("{doc:?}: certificate fails verification"));
    t.check(hull_recheck(&cfg, &cert.selection), || format!("{doc:?}: LP rejects the selection"));
    let support = cert.coefficients.iter().filter(|c| !c.is_zero()).count();
    match kind {
        0 => {
            t.count("boundary", 1);
            if d >= 2 {
                t.check(cert.coefficients.iter().any(Zero::is_zero), || {
                    format!("{doc:?}: boundary certificate has no zero coefficient")
                });
            }
        }
        1 => {
            t.count("equal_classes", 1);
            t.check(support <= d + 1, || format!("{doc:?}: support {support} exceeds d + 1"));
        }
        _ => t.count("pairwise", 1),
    }
}

fn invertible_map(rng: &mut GenRng, d: usize) -> Vec<Vec<Rational>> {
    loop {
        let a: Vec<Vec<Rational>> = (0..d).map(|_| (0..d).map(|_| gen::small_rational(rng, 3, 2)).collect()).collect();
        if rational_rank(&a) == d {
            return a;
        }
    }
}

fn equivariance(rng: &mut GenRng, caps: &Caps, t: &mut Tally) {
    let d = rng.gen_range(1..=3);
    let cfg = gen::pairwise_config(rng, d);
    let Some(cert) = t.ok(solve_colorful(&cfg, caps), "solve_colorful") else {
        return;
    };
    let a = invertible_map(rng, d);
    let b: Point = (0..d).map(|_| gen::small_rational(rng, 3, 2)).collect();
    let map = |p: &Point| -> Point {
        (0..d)
            .map(|r| a[r].iter().zip(p).map(|(x, y)| x * y).sum::<Rational>() + &b[r])
            .collect()
    };
    let Some(mapped) = t.ok(cfg.map_points(map), "map points") else {
        return;
    };
    t.check(verify_certificate(&mapped, &cert), || {
        format!("{:?}: certificate invalid after affine map", PointConfigDocument::from_config(&cfg))
    });
    if let Some(c2) = t.ok(solve_colorful(&mapped, caps), "solve mapped") {
        t.check(verify_certificate(&mapped, &c2), || "mapped certificate fails".into());
    }
}

fn roundtrip(rng: &mut GenRng, caps: &Caps, t: &mut Tally) {
    fn again<T: serde::Serialize + serde::de::DeserializeOwned + PartialEq + std::fmt::Debug>(
        doc: &T,
        t: &mut Tally,
    ) {
        let text = to_json(doc);
        match parse::<T>(&text) {
            Ok(back) => {
                t.check(&back == doc, || format!("round trip changed {doc:?}"));
                t.check(to_json(&back) == text, || "re-serialization differs".into());
            }
            Err(e) => t.fail(format!("{e} in {text}")),
        }
    }
    let Some((real, inst)) = t.ok(gen::instance(rng, 4, 9, caps), "generate instance") else {
        return;
    };
    let ground_set = inst.ground().labels().to_vec();
    let by_vectors = InstanceDocument {
        ground_set: ground_set.clone(),
        oriented_matroid: OrientedMatroidSpec::vectors(&real.columns),
        matroid: MatroidSpec::from_matroid(inst.matroid()),
    };
    again(&by_vectors, t);
    let by_circuits = InstanceDocument {
        ground_set,
        oriented_matroid: OrientedMatroidSpec::signed_circuits(inst.oriented_matroid()),
        matroid: MatroidSpec::from_matroid(inst.matroid()),
    };
    again(&by_circuits, t);
    for doc in [&by_vectors, &by_circuits] {
        if let Some(back) = t.ok(doc.build(caps), "rebuild instance") {
            t.check(back.oriented_matroid().circuits() == inst.oriented_matroid().circuits(), || {
                "rebuilt circuits differ".into()
            });
        }
    }
    let report = check_instance(&inst);
    let cert = match find_witness(&inst) {
        Ok(w) if report.passed() => CertificateDocument::from_witness(&inst, &report, &w),
        Ok(_) => CertificateDocument::from_report(&inst, &report),
        Err(e) => CertificateDocument::from_error(&e, inst.oriented_matroid().axioms_verified()),
    };
    again(&cert, t);

    let d = rng.gen_range(1..=3);
    let cfg = gen::pairwise_config(rng, d);
    let pdoc = PointConfigDocument::from_config(&cfg);
    again(&pdoc, t);
    if let Some(c) = t.ok(solve_colorful(&cfg, caps), "solve_colorful") {
        let cdoc = CertificateDocument::from_colorful(&c);
        again(&cdoc, t);
        let text = to_json(&cdoc);
        for r in cdoc.colorful.iter().flat_map(|p| &p.coefficients) {
            let shown = r.to_string();
            t.check(shown.parse::<Rat>().map(|x| x.to_string()) == Ok(shown.clone()), || {
                format!("{shown} is not canonical")
            });
            t.check(text.contains(&format!("\"{shown}\"")), || format!("{shown} missing from output"));
            t.check(!r.0.denom().is_negative(), || "negative denominator".into());
        }
    }
    if let Some(x) = t.ok(gen::complex(rng, 8), "generate complex") {
        let cx = ComplexDocument::from_complex(&x);
        again(&cx, t);
        if let Some(back) = t.ok(cx.build(), "rebuild complex") {
            t.check(back == x, || "complex changed".into());
        }
    }
}

/// Witness and colorful certificates for one random input, as JSON.
fn certificates(inst: &Instance, cfg: &PointConfig, caps: &Caps) -> (String, String) {
    let report = check_instance(inst);
    let w = if report.passed() {
        match find_witness(inst) {
            Ok(w) => CertificateDocument::from_witness(inst, &report, &w),
            Err(e) => CertificateDocument::from_error(&e, true),
        }
    } else {
        CertificateDocument::from_report(inst, &report)
    };
    let c = match solve_colorful(cfg, caps) {
        Ok(c) => CertificateDocument::from_colorful(&c),
        Err(e) => CertificateDocument::from_error(&e, true),
    };
    (to_json(&w), to_json(&c))
}

fn determinism(rng: &mut GenRng, caps: &Caps, t: &mut Tally) {
    let Some((_, inst)) = t.ok(gen::instance(rng, 4, 9, caps), "generate instance") else {
        return;
    };
    let d = rng.gen_range(1..=3);
    let cfg = gen::pairwise_config(rng, d);
    let mut outputs = Vec::new();
    for threads in [1, 4, 1, 4] {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build();
        let Some(pool) = t.ok(pool.map_err(|e| crate::Error::Invalid(e.to_string())), "thread pool") else {
            return;
        };
        outputs.push(pool.install(|| certificates(&inst, &cfg, caps)));
    }
    for o in &outputs[1..] {
        t.check(o == &outputs[0], || format!("certificates differ: {:?} vs {o:?}", outputs[0]));
    }
}
