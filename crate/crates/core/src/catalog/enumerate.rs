//! Independent enumeration of connected simply laced hyperbolic diagrams.
//!
//! Every connected diagram has a vertex whose removal keeps it connected,
//! and every proper connected subdiagram of a hyperbolic diagram is finite
//! or affine. So each hyperbolic diagram of rank `r` arises by attaching one
//! vertex to a connected finite-or-affine diagram of rank `r - 1`, which in
//! turn arises the same way from a connected finite diagram, and so on down
//! to a single vertex. The search grows those states one vertex at a time
//! and deduplicates every level by canonical form.
//!
//! Multiplicities stay in `{0, 1, 2}`: a pair of vertices joined by `a >= 3`
//! edges is already indefinite, so it cannot sit inside a rank >= 3
//! hyperbolic diagram.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::cartan::{
    canonical_form, classify_connected_fast, components_by, is_hyperbolic, CanonicalForm, DiagramType,
    DynkinDiagram,
};
use crate::error::{Error, Result};

const MAX_MULT: u32 = 2;

/// Adds vertex `k` joined to vertex `i` by `ext[i]` edges.
fn attach(d: &DynkinDiagram, ext: &[u32]) -> DynkinDiagram {
    let k = d.vertex_count();
    let mut e = DynkinDiagram::empty(k + 1);
    for (i, j, m) in d.edges() {
        e.set_mult(i, j, m);
    }
    for (i, &m) in ext.iter().enumerate() {
        e.set_mult(i, k, m);
    }
    e
}

fn matrix(d: &DynkinDiagram) -> Vec<i64> {
    let n = d.vertex_count();
    (0..n * n)
        .map(|k| if k / n == k % n { 2 } else { -(d.mult(k / n, k % n) as i64) })
        .collect()
}

/// Visits every nonzero vector in `{0..=MAX_MULT}^len`.
fn for_each_attachment(len: usize, mut f: impl FnMut(&[u32]) -> Result<()>) -> Result<()> {
    let mut ext = vec![0u32; len];
    loop {
        let mut i = 0;
        while i < len && ext[i] == MAX_MULT {
            ext[i] = 0;
            i += 1;
        }
        if i == len {
            return Ok(());
        }
        ext[i] += 1;
        f(&ext)?;
    }
}

fn connected_type(d: &DynkinDiagram) -> Result<DiagramType> {
    classify_connected_fast(d.vertex_count(), &matrix(d))
}

/// Hyperbolicity of a connected diagram whose last vertex was just attached
/// to a finite-or-affine diagram (so deleting that vertex is known good).
fn hyperbolic_after_attach(d: &DynkinDiagram) -> Result<bool> {
    let n = d.vertex_count();
    let m = matrix(d);
    for u in 0..n - 1 {
        let rest: Vec<usize> = (0..n).filter(|&i| i != u).collect();
        for comp in components_by(n, &rest, |i, j| d.mult(i, j) > 0) {
            let sub = crate::linalg::principal_submatrix(n, &m, &comp);
            if !classify_connected_fast(comp.len(), &sub)?.is_finite_or_affine() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All connected simply laced hyperbolic diagrams of the given rank, up to
/// isomorphism, sorted by canonical form.
pub fn enumerate_hyperbolic_simply_laced(rank: usize) -> Result<Vec<DynkinDiagram>> {
    if !(3..=10).contains(&rank) {
        return Err(Error::RankOutOfRange(rank));
    }
    let mut states: BTreeMap<CanonicalForm, (DynkinDiagram, DiagramType)> = BTreeMap::new();
    let single = DynkinDiagram::empty(1);
    states.insert(canonical_form(&single)?, (single, DiagramType::Finite));

    for size in 1..rank - 1 {
        let mut next = BTreeMap::new();
        for (d, _) in states.values().filter(|(_, t)| *t == DiagramType::Finite) {
            for_each_attachment(size, |ext| {
                let e = attach(d, ext);
                let t = connected_type(&e)?;
                if t.is_finite_or_affine() {
                    next.entry(canonical_form(&e)?).or_insert((e, t));
                }
                Ok(())
            })?;
        }
        states = next;
    }

    let mut found: BTreeMap<CanonicalForm, DynkinDiagram> = BTreeMap::new();
    for (d, t) in states.values() {
        for_each_attachment(rank - 1, |ext| {
            let e = attach(d, ext);
            // over a finite base the new diagram is finite, affine, or
            // indefinite according to the sign of its determinant; over an
            // affine base it is always indefinite
            if *t == DiagramType::Finite && connected_type(&e)?.is_finite_or_affine() {
                return Ok(());
            }
            if hyperbolic_after_attach(&e)? {
                found.entry(canonical_form(&e)?).or_insert(e);
            }
            Ok(())
        })?;
    }

    let out: Vec<DynkinDiagram> = found.into_values().collect();
    for d in &out {
        assert!(is_hyperbolic(&d.to_gcm())?, "enumerated diagram failed the exhaustive check");
    }
    Ok(out)
}
