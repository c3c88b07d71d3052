//! The full verification run behind `kmroot verify-paper`.
//!
//! Every check takes the catalog it compares against, so a deliberately
//! corrupted catalog can be passed in to watch the run fail.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use kmroot_core::catalog::{AFFINE, AUXILIARY, FINITE, HYPERBOLIC};
use kmroot_core::embed::rank2_embedding;
use kmroot_core::{
    classify, enumerate_hyperbolic_simply_laced, extend_direct_sum, get, prove_main, Catalog, DiagramType, RootVector,
    WeightVector,
};

use crate::report::{Check, Report};

pub const ENUMERATION_COUNTS: [usize; 8] = [5, 3, 2, 3, 2, 3, 3, 2];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub threads: usize,
    pub timings: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { threads: threads_from_env(), timings: false }
    }
}

/// `KMROOT_THREADS` if set to a positive integer, else the available
/// parallelism.
pub fn threads_from_env() -> usize {
    std::env::var("KMROOT_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Details on success, failures (with details) otherwise.
type Outcome = Result<Vec<String>, Vec<String>>;

struct Failures(Vec<String>);

impl Failures {
    fn new() -> Self {
        Failures(Vec::new())
    }

    fn push(&mut self, msg: String) {
        self.0.push(msg);
    }

    fn finish(self, ok: Vec<String>) -> Outcome {
        if self.0.is_empty() {
            Ok(ok)
        } else {
            Err(self.0)
        }
    }
}

fn expect_type(catalog: &Catalog, name: &str, want: DiagramType, fails: &mut Failures) {
    match catalog.get(name).and_then(|e| classify(&e.gcm)) {
        Ok(t) if t == want => {}
        Ok(t) => fails.push(format!("{name}: expected {want}, got {t}")),
        Err(e) => fails.push(format!("{name}: {e}")),
    }
}

fn check_classification(catalog: &Catalog) -> Outcome {
    let mut fails = Failures::new();
    let hyperbolic = DiagramType::Indefinite { hyperbolic: true };
    for name in HYPERBOLIC {
        expect_type(catalog, name, hyperbolic, &mut fails);
    }
    for name in AUXILIARY {
        expect_type(catalog, name, DiagramType::Indefinite { hyperbolic: false }, &mut fails);
    }
    for name in AFFINE {
        expect_type(catalog, name, DiagramType::Affine, &mut fails);
    }
    for name in FINITE {
        expect_type(catalog, name, DiagramType::Finite, &mut fails);
    }
    fails.finish(vec![format!(
        "{} hyperbolic, {} indefinite non-hyperbolic, {} affine, {} finite",
        HYPERBOLIC.len(),
        AUXILIARY.len(),
        AFFINE.len(),
        FINITE.len()
    )])
}

fn check_enumeration(catalog: &Catalog) -> Outcome {
    let mut fails = Failures::new();
    let mut counts = Vec::new();
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    for rank in 3..=10 {
        match enumerate_hyperbolic_simply_laced(rank) {
            Ok(found) => {
                counts.push(found.len());
                for d in &found {
                    match catalog.identify(d) {
                        Some(name) => *seen.entry(name).or_default() += 1,
                        None => fails.push(format!("rank {rank}: no catalog entry for edges {:?}", d.edges())),
                    }
                }
            }
            Err(e) => fails.push(format!("rank {rank}: {e}")),
        }
    }
    if counts != ENUMERATION_COUNTS {
        fails.push(format!("per-rank counts {counts:?}, expected {ENUMERATION_COUNTS:?}"));
    }
    for name in HYPERBOLIC {
        let hits = catalog.get(name).map(|e| seen.get(&e.name).copied().unwrap_or(0)).unwrap_or(0);
        if hits != 1 {
            fails.push(format!("{name}: matched by {hits} enumerated diagrams"));
        }
    }
    let total: usize = counts.iter().sum();
    fails.finish(vec![format!("ranks 3..10: {counts:?}, total {total}")])
}

fn check_embeddings(catalog: &Catalog) -> Outcome {
    let mut fails = Failures::new();
    let mut words = Vec::new();
    for name in HYPERBOLIC {
        match prove_main(name) {
            Ok(e) => match catalog.matches(name, &e.diagram()) {
                Ok(Some(_)) => words.push(format!("{name}: {} roots in E10", e.len())),
                Ok(None) => fails.push(format!("{name}: realized diagram is not isomorphic to the catalog entry")),
                Err(err) => fails.push(format!("{name}: {err}")),
            },
            Err(err) => fails.push(format!("{name}: {err}")),
        }
    }
    fails.finish(words)
}

fn check_rank2(_: &Catalog) -> Outcome {
    let mut fails = Failures::new();
    for a in 3..=6u32 {
        let ok = rank2_embedding(a).map(|e| e.gram().entry(0, 1) == -i64::from(a)).unwrap_or(false)
            && prove_main(&format!("H2({a})")).map(|e| e.gram().entry(0, 1) == -i64::from(a)).unwrap_or(false);
        if !ok {
            fails.push(format!("H2({a}): Gram off-diagonal is not -{a}"));
        }
    }
    fails.finish(vec!["H2(a) realized in E10 for a = 3..6".into()])
}

fn weight(terms: &[(i64, &str)]) -> Option<RootVector> {
    let l = get("E10").ok()?.lattice();
    let w = l.fundamental_weights().ok()?;
    let t: Vec<(i64, &WeightVector)> =
        terms.iter().map(|&(c, lab)| Some((c, &w[l.index_of(lab)?]))).collect::<Option<_>>()?;
    WeightVector::combination(&t).ok()?.to_root_vector()
}

fn check_direct_sums(_: &Catalog) -> Outcome {
    let mut fails = Failures::new();
    let mut ok = Vec::new();
    let cases = [
        ("HE_7(1)", "A1", vec![weight(&[(1, "7"), (-3, "0")])]),
        ("HE_6(1)", "A2", vec![weight(&[(1, "8"), (-2, "1")]), weight(&[(1, "1"), (-2, "0")])]),
    ];
    for (target, extra, gammas) in cases {
        let result = prove_main(target).and_then(|e| extend_direct_sum(&e, extra).map(|x| (e.len(), x)));
        match result {
            Ok((k, x)) => {
                if x.len() != 10 {
                    fails.push(format!("{target} + {extra}: rank {}", x.len()));
                }
                let added: Vec<&RootVector> = x.roots()[k..].iter().collect();
                for g in &gammas {
                    match g {
                        Some(g) if added.contains(&g) => {}
                        _ => fails.push(format!("{target} + {extra}: expected weight combination not used")),
                    }
                }
                ok.push(format!("{target} + {extra}: rank {}, added {}", x.len(), fmt_roots(&added)));
            }
            Err(e) => fails.push(format!("{target} + {extra}: {e}")),
        }
    }
    fails.finish(ok)
}

fn fmt_roots(roots: &[&RootVector]) -> String {
    roots.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", ")
}

fn check_oracles(_: &Catalog) -> Outcome {
    let mut fails = Failures::new();
    let mut ok = Vec::new();
    for name in ["E10", "HA_1(1)"] {
        let l = match get(name) {
            Ok(e) => e.lattice(),
            Err(e) => {
                fails.push(format!("{name}: {e}"));
                continue;
            }
        };
        let mut buf = vec![0i64; l.rank()];
        let mut count = 0usize;
        let mut first_mismatch = None;
        let run = l.for_each_box_vector(&mut buf, 0, 8, &mut |v| {
            let x = RootVector::new(v.to_vec());
            let (a, b) = (l.is_positive_real_root_norm(&x)?, l.is_positive_real_root_descent(&x)?);
            if a != b && first_mismatch.is_none() {
                first_mismatch = Some(format!("{name}: {x} norm test {a}, descent {b}"));
            }
            count += 1;
            Ok(())
        });
        if let Err(e) = run {
            fails.push(format!("{name}: {e}"));
        }
        match first_mismatch {
            Some(m) => fails.push(m),
            None => ok.push(format!("{name}: {count} vectors of height <= 8 agree")),
        }
    }
    fails.finish(ok)
}

type CheckFn = fn(&Catalog) -> Outcome;

const CHECKS: [(&str, CheckFn); 6] = [
    ("1 classification", check_classification),
    ("2 enumeration", check_enumeration),
    ("3 embeddings in E10", check_embeddings),
    ("4 rank-2 embeddings", check_rank2),
    ("5 direct sums", check_direct_sums),
    ("6 oracle cross-checks", check_oracles),
];

/// Runs all checks on up to `opts.threads` worker threads.
pub fn verify_paper(catalog: &Catalog, opts: &Options) -> Report {
    let next = AtomicUsize::new(0);
    let results = Mutex::new(Vec::with_capacity(CHECKS.len()));
    let workers = opts.threads.clamp(1, CHECKS.len());
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(name, run)) = CHECKS.get(i) else { break };
                let start = Instant::now();
                let outcome = run(catalog);
                let wall_ms = opts.timings.then(|| start.elapsed().as_millis());
                let (passed, details) = match outcome {
                    Ok(d) => (true, d),
                    Err(d) => (false, d),
                };
                results.lock().unwrap().push(Check { name: name.to_string(), passed, details, wall_ms });
            });
        }
    });
    Report::new(results.into_inner().unwrap())
}
