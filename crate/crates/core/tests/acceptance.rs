//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Reference values are recomputed here from raw matrices rather
//! than through the library's own helpers wherever that is cheap.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use kmroot_core::catalog::{self, AFFINE, AUXILIARY, HYPERBOLIC};
use kmroot_core::embed::{hyperbolic_extension, principle_a, principle_b};
use kmroot_core::{
    are_isomorphic, classify, enumerate_hyperbolic_simply_laced, extend_direct_sum, find_orthogonal_real_roots,
    get, orthogonal_sublattice, prove_main, DiagramType, DynkinDiagram, Gcm, RootLattice, RootVector, WeightVector,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `x^T A y` straight from the matrix.
fn form(g: &Gcm, x: &[i64], y: &[i64]) -> i64 {
    let n = g.rank();
    let mut s = 0;
    for i in 0..n {
        for j in 0..n {
            s += x[i] * g.entry(i, j) * y[j];
        }
    }
    s
}

fn criterion_1() -> Outcome {
    for name in HYPERBOLIC {
        let t = classify(&get(name).map_err(|e| e.to_string())?.gcm).map_err(|e| e.to_string())?;
        ensure(t == DiagramType::Indefinite { hyperbolic: true }, || format!("{name} classified {t}"))?;
    }
    for name in AUXILIARY {
        let t = classify(&get(name).map_err(|e| e.to_string())?.gcm).map_err(|e| e.to_string())?;
        ensure(t == DiagramType::Indefinite { hyperbolic: false }, || format!("{name} classified {t}"))?;
    }
    Ok("23 hyperbolic, HA_8(1) and P10 indefinite non-hyperbolic".into())
}

fn criterion_2() -> Outcome {
    let expected = [5usize, 3, 2, 3, 2, 3, 3, 2];
    let mut counts = Vec::new();
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    for rank in 3..=10 {
        let found = enumerate_hyperbolic_simply_laced(rank).map_err(|e| e.to_string())?;
        counts.push(found.len());
        for d in &found {
            let name = catalog::identify(d).ok_or_else(|| format!("rank {rank}: uncatalogued {:?}", d.edges()))?;
            *seen.entry(name).or_default() += 1;
        }
    }
    ensure(counts == expected, || format!("counts {counts:?}"))?;
    ensure(counts.iter().sum::<usize>() == 23, || "total".into())?;
    for name in HYPERBOLIC {
        let canonical = get(name).unwrap().name;
        ensure(seen.get(&canonical) == Some(&1), || format!("{name} matched {:?} times", seen.get(&canonical)))?;
    }
    Ok(format!("counts {counts:?}, total 23, bijective with the catalog"))
}

fn criterion_3() -> Outcome {
    let e10 = get("E10").unwrap().gcm;
    for name in HYPERBOLIC {
        let e = prove_main(name).map_err(|err| format!("{name}: {err}"))?;
        ensure(e.host().gcm() == &e10, || format!("{name}: host is not E10"))?;
        let roots = e.roots();
        for (i, x) in roots.iter().enumerate() {
            ensure(x.coords().iter().all(|&c| c >= 0), || format!("{name}: root {i} = {x} not nonnegative"))?;
            ensure(form(&e10, x.coords(), x.coords()) == 2, || format!("{name}: root {i} = {x} norm != 2"))?;
            for (j, y) in roots.iter().enumerate().skip(i + 1) {
                let p = form(&e10, x.coords(), y.coords());
                ensure(p <= 0, || format!("{name}: ({i},{j}) pair to {p}"))?;
                ensure(p == e.gram().entry(i, j), || format!("{name}: Gram ({i},{j}) mismatch"))?;
            }
        }
        let target = get(name).unwrap().diagram();
        let got = DynkinDiagram::from_gcm(e.gram()).map_err(|err| err.to_string())?;
        ensure(are_isomorphic(&target, &got).is_some(), || format!("{name}: diagram not isomorphic"))?;
    }
    Ok("all 23 realized in E10 and isomorphic to their targets".into())
}

fn criterion_4() -> Outcome {
    let hx = hyperbolic_extension(&get("E_8(1)").unwrap()).map_err(|e| e.to_string())?;
    let iso = |g: &Gcm, name: &str| {
        are_isomorphic(&get(name).unwrap().diagram(), &DynkinDiagram::from_gcm(g).unwrap()).is_some()
    };
    let a = principle_a(&hx).map_err(|e| e.to_string())?;
    ensure(iso(a.gram(), "HD_8(1)"), || "A on E10 is not HD_8(1)".into())?;
    let b7 = principle_b(&hx, 7).map_err(|e| e.to_string())?;
    ensure(iso(b7.gram(), "HA_8(1)"), || "B(7) is not HA_8(1)".into())?;
    let b8 = principle_b(&hx, 8).map_err(|e| e.to_string())?;
    ensure(iso(b8.gram(), "P10"), || "B(8) is not P10".into())?;

    // labels -1, 0, ..., 8 sit at indices 0..=9; the E_8(1) null root in
    // labels 0..8 is (1, 2, 3, 4, 5, 6, 4, 2, 3)
    let g = hx.lattice().gcm();
    let delta = [0, 1, 2, 3, 4, 5, 6, 4, 2, 3];
    ensure(hx.null_root().coords() == delta, || format!("null root {}", hx.null_root()))?;
    let alpha_m1 = [1, 0, 0, 0, 0, 0, 0, 0, 0, 0];
    ensure(form(g, &delta, &alpha_m1) == -1, || "(delta, alpha_-1) != -1".into())?;
    let beta: Vec<i64> = delta.iter().zip([2, 1, 0, 0, 0, 0, 0, 0, 0, 0]).map(|(d, s)| d + s).collect();
    ensure(form(g, &beta, &beta) == 2, || "beta_-1 norm != 2".into())?;
    ensure(a.roots()[hx.extension_index()].coords() == beta.as_slice(), || "beta_-1 root differs".into())?;
    Ok("A ~ HD_8(1), B(7) ~ HA_8(1), B(8) ~ P10, (delta, alpha_-1) = -1, |beta_-1|^2 = 2".into())
}

fn weight(l: &RootLattice, terms: &[(i64, &str)]) -> RootVector {
    let w = l.fundamental_weights().unwrap();
    let t: Vec<(i64, &WeightVector)> = terms.iter().map(|&(c, lab)| (c, &w[l.index_of(lab).unwrap()])).collect();
    WeightVector::combination(&t).unwrap().to_root_vector().unwrap()
}

fn criterion_5() -> Outcome {
    let l = get("E10").unwrap().lattice();
    let g = l.gcm().clone();
    let err = |e: kmroot_core::Error| e.to_string();

    let he7 = prove_main("HE_7(1)").map_err(err)?;
    let sub = orthogonal_sublattice(&he7).map_err(err)?;
    ensure(sub.rank() == 1, || format!("HE_7(1) complement rank {}", sub.rank()))?;
    let gamma = weight(&l, &[(1, "7"), (-3, "0")]);
    // (gamma, alpha_j) must be 1 at label 7, -3 at label 0, else 0
    for j in 0..10 {
        let mut unit = [0i64; 10];
        unit[j] = 1;
        let want = match l.labels()[j].as_str() {
            "7" => 1,
            "0" => -3,
            _ => 0,
        };
        ensure(form(&g, gamma.coords(), &unit) == want, || "Lambda_7 - 3 Lambda_0 is wrong".into())?;
    }
    let gen = &sub.basis()[0];
    ensure(*gen == gamma || gen.neg() == gamma, || format!("generator {gen}"))?;
    ensure(gamma.is_nonnegative() && form(&g, gamma.coords(), gamma.coords()) == 2, || "gamma".into())?;
    let found = find_orthogonal_real_roots(&he7, 10).map_err(err)?;
    ensure(found == vec![gamma.clone()], || format!("HE_7(1) orthogonal roots {found:?}"))?;

    let he6 = prove_main("HE_6(1)").map_err(err)?;
    let sub = orthogonal_sublattice(&he6).map_err(err)?;
    ensure(sub.rank() == 2, || format!("HE_6(1) complement rank {}", sub.rank()))?;
    let g1 = weight(&l, &[(1, "8"), (-2, "1")]);
    let g2 = weight(&l, &[(1, "1"), (-2, "0")]);
    let found = find_orthogonal_real_roots(&he6, 10).map_err(err)?;
    ensure(found.contains(&g1) && found.contains(&g2), || "gamma_1, gamma_2 missing".into())?;
    let pair = [form(&g, g1.coords(), g1.coords()), form(&g, g2.coords(), g2.coords()), form(&g, g1.coords(), g2.coords())];
    ensure(pair == [2, 2, -1], || format!("gamma pairings {pair:?}"))?;

    for (e, extra) in [(&he7, "A1"), (&he6, "A2")] {
        let ext = extend_direct_sum(e, extra).map_err(err)?;
        ensure(ext.len() == 10, || format!("{extra}: rank {}", ext.len()))?;
        let k = e.len();
        let x = get(extra).unwrap().gcm;
        for i in 0..10 {
            for j in 0..10 {
                let want = match (i < k, j < k) {
                    (true, true) => e.gram().entry(i, j),
                    (false, false) => x.entry(i - k, j - k),
                    _ => 0,
                };
                let got = form(&g, ext.roots()[i].coords(), ext.roots()[j].coords());
                ensure(got == want, || format!("{extra}: Gram ({i},{j}) = {got}, want {want}"))?;
            }
        }
    }
    Ok("HE_7(1) complement <Lambda_7 - 3 Lambda_0>, HE_6(1) complement rank 2 with A2, both direct sums rank 10".into())
}

/// Positive real roots of height at most `h`, grown upward from the simple
/// roots by simple reflections.
fn reflection_closure(g: &Gcm, h: i64) -> BTreeSet<Vec<i64>> {
    let n = g.rank();
    let mut seen = BTreeSet::new();
    let mut queue: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    while let Some(x) = queue.pop() {
        if !seen.insert(x.clone()) {
            continue;
        }
        for i in 0..n {
            let c: i64 = (0..n).map(|j| g.entry(i, j) * x[j]).sum();
            let mut y = x.clone();
            y[i] -= c;
            if y.iter().all(|&v| v >= 0) && y.iter().sum::<i64>() <= h && !seen.contains(&y) {
                queue.push(y);
            }
        }
    }
    seen
}

fn criterion_6() -> Outcome {
    let mut checked = 0usize;
    for name in ["E10", "HA_1(1)"] {
        let l = get(name).unwrap().lattice();
        let n = l.rank();
        let mut buf = vec![0i64; n];
        let mut norm_roots = BTreeSet::new();
        let mut mismatch = None;
        l.for_each_box_vector(&mut buf, 0, 8, &mut |v| {
            let x = RootVector::new(v.to_vec());
            let a = l.is_positive_real_root_norm(&x)?;
            let b = l.is_positive_real_root_descent(&x)?;
            if a != b && mismatch.is_none() {
                mismatch = Some(format!("{name}: {x} norm={a} descent={b}"));
            }
            if a {
                norm_roots.insert(v.to_vec());
            }
            checked += 1;
            Ok(())
        })
        .map_err(|e| e.to_string())?;
        if let Some(m) = mismatch {
            return Err(m);
        }
        let closure = reflection_closure(l.gcm(), 8);
        ensure(closure == norm_roots, || format!("{name}: reflection closure differs from the norm test"))?;
    }

    let lattices: Vec<RootLattice> = HYPERBOLIC.iter().map(|n| get(n).unwrap().lattice()).collect();
    let mut runner = TestRunner::new_with_rng(
        Config { cases: 10_000, failure_persistence: None, ..Config::default() },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    );
    let strategy = (0..lattices.len(), 0usize..10, prop::collection::vec(-6i64..=6, 10), prop::collection::vec(-6i64..=6, 10));
    runner
        .run(&strategy, |(k, i, x, y)| {
            let l = &lattices[k];
            let n = l.rank();
            let (x, y) = (RootVector::new(x[..n].to_vec()), RootVector::new(y[..n].to_vec()));
            let i = i % n;
            let sx = l.simple_reflection(i, &x).unwrap();
            let sy = l.simple_reflection(i, &y).unwrap();
            prop_assert_eq!(form(l.gcm(), sx.coords(), sy.coords()), form(l.gcm(), x.coords(), y.coords()));
            Ok(())
        })
        .map_err(|e| format!("reflection invariance: {e}"))?;

    for name in AFFINE {
        let entry = get(name).unwrap();
        let d = entry.lattice().null_root().map_err(|e| format!("{name}: {e}"))?;
        let n = entry.rank();
        for i in 0..n {
            let row: i64 = (0..n).map(|j| entry.gcm.entry(i, j) * d.coords()[j]).sum();
            ensure(row == 0, || format!("{name}: A delta != 0"))?;
        }
        ensure(d.coords().iter().all(|&c| c > 0), || format!("{name}: delta not positive"))?;
        ensure(d.coords()[entry.index_of("0").unwrap()] == 1, || format!("{name}: delta_0 != 1"))?;
    }
    Ok(format!("{checked} vectors agree, 10000 reflection triples, {} null roots", AFFINE.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 6] = [
        ("1 classification", criterion_1, Duration::from_secs(1)),
        ("2 enumeration", criterion_2, Duration::from_secs(60)),
        ("3 embeddings in E10", criterion_3, Duration::from_secs(10)),
        ("4 named identities", criterion_4, Duration::from_secs(60)),
        ("5 orthogonal extensions", criterion_5, Duration::from_secs(5)),
        ("6 oracle equivalence", criterion_6, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > budget => Err(format!("{msg}; took {took:.2?}, budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("PASS criterion {name}: {msg} ({took:.2?})"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg} ({took:.2?})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
