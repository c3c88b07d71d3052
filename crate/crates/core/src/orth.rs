//! Orthogonal complements of embeddings and the real roots inside them.
//!
//! A root `x` orthogonal to every root of an embedding can be appended to
//! it without creating edges, so the complement is where disconnected root
//! subdiagrams such as `HE_7(1) + A1` come from. In a root lattice with a
//! nondegenerate form, `x = sum_j (x, alpha_j) Lambda_j`, so the pairings of
//! a vector with the simple roots are its coordinates in the fundamental
//! weights.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::catalog::{self, Family};
use crate::embed::{check_root_subdiagram, Embedding};
use crate::error::{Error, Result};
use crate::lattice::{RootLattice, RootVector};
use crate::linalg::{self, isqrt_ratio};

/// Coefficient box used when the complement is not positive definite.
pub const DEFAULT_BOUND: u32 = 10;

/// A lattice basis of `{x in Q : (x, b_i) = 0 for all i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SublatticeBasis {
    host: RootLattice,
    basis: Vec<RootVector>,
    gram: Vec<Vec<i64>>,
}

impl SublatticeBasis {
    pub fn host(&self) -> &RootLattice {
        &self.host
    }

    pub fn basis(&self) -> &[RootVector] {
        &self.basis
    }

    /// The form restricted to the basis.
    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// True when every leading minor of the Gram matrix is positive.
    pub fn is_positive_definite(&self) -> Result<bool> {
        let r = self.rank();
        if r == 0 {
            return Ok(true);
        }
        let flat: Vec<i64> = self.gram.iter().flatten().copied().collect();
        let minors = linalg::leading_minors(r, &flat)?;
        Ok(minors.len() == r && minors.iter().all(|&d| d > 0))
    }

    /// `sum_k coeffs[k] * basis[k]`.
    pub fn combine(&self, coeffs: &[i64]) -> Result<RootVector> {
        let vs: Vec<Vec<i64>> = self.basis.iter().map(|b| b.coords().to_vec()).collect();
        linalg::combine(coeffs, &vs, self.host.rank()).map(RootVector::new)
    }
}

/// Primitive integer basis of the vectors orthogonal to every root of `e`,
/// in Hermite normal form.
pub fn orthogonal_sublattice(e: &Embedding) -> Result<SublatticeBasis> {
    let host = e.host().clone();
    let n = host.rank();
    let mut rows = Vec::with_capacity(e.len() * n);
    for b in e.roots() {
        rows.extend(host.pairings_with_simple(b)?);
    }
    let basis: Vec<RootVector> =
        linalg::integer_kernel(e.len(), n, &rows)?.into_iter().map(RootVector::new).collect();
    let mut gram = Vec::with_capacity(basis.len());
    for u in &basis {
        let row = basis.iter().map(|v| host.pairing(u, v)).collect::<Result<Vec<_>>>()?;
        gram.push(row);
    }
    Ok(SublatticeBasis { host, basis, gram })
}

/// Per-coordinate bounds on norm-2 vectors of a positive definite lattice:
/// `c_k^2 <= 2 (G^-1)_kk`.
fn definite_bounds(sub: &SublatticeBasis) -> Result<Vec<i64>> {
    let r = sub.rank();
    let flat: Vec<i64> = sub.gram.iter().flatten().copied().collect();
    (0..r)
        .map(|k| {
            let mut unit = vec![0; r];
            unit[k] = 1;
            let col = linalg::solve_rational(r, &flat, &unit)?;
            let q = col[k];
            Ok(isqrt_ratio(2 * i128::from(*q.numer()), i128::from(*q.denom())))
        })
        .collect()
}

/// Positive real roots orthogonal to every root of `e`, sorted.
///
/// When the complement is positive definite the search is exhaustive and
/// `bound` is ignored; otherwise coefficients range over `[-bound, bound]`.
pub fn find_orthogonal_real_roots(e: &Embedding, bound: u32) -> Result<Vec<RootVector>> {
    let sub = orthogonal_sublattice(e)?;
    let r = sub.rank();
    if r == 0 {
        return Ok(Vec::new());
    }
    let limits = if sub.is_positive_definite()? { definite_bounds(&sub)? } else { vec![i64::from(bound); r] };
    let host = &sub.host;
    let mut found = BTreeSet::new();
    let mut c: Vec<i64> = limits.iter().map(|&l| -l).collect();
    loop {
        if c.iter().any(|&x| x != 0) {
            let x = sub.combine(&c)?;
            if x.is_nonnegative() && host.norm(&x)? == 2 && host.is_positive_real_root(&x)? {
                found.insert(x);
            }
        }
        let mut k = 0;
        while k < r && c[k] == limits[k] {
            c[k] = -limits[k];
            k += 1;
        }
        if k == r {
            break;
        }
        c[k] += 1;
    }
    for x in &found {
        for b in e.roots() {
            assert_eq!(host.pairing(x, b)?, 0, "complement vector pairs with a constraint root");
        }
        assert_eq!(host.norm(x)?, 2);
    }
    Ok(found.into_iter().collect())
}

/// Appends roots orthogonal to `e` that form the finite diagram `extra`
/// (`A1` or `A2`), searching with [`DEFAULT_BOUND`].
pub fn extend_direct_sum(e: &Embedding, extra: &str) -> Result<Embedding> {
    extend_direct_sum_with_bound(e, extra, DEFAULT_BOUND)
}

pub fn extend_direct_sum_with_bound(e: &Embedding, extra: &str, bound: u32) -> Result<Embedding> {
    let x = catalog::get(extra)?;
    if x.family != Family::Finite {
        return Err(Error::UnknownTarget(extra.to_string()));
    }
    let candidates = find_orthogonal_real_roots(e, bound)?;
    let host = e.host();
    let k = x.rank();
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    if !pick(host, &candidates, &x.gcm, &mut chosen)? {
        return Err(Error::NoExtension(x.name.clone()));
    }

    let mut roots = e.roots().to_vec();
    roots.extend(chosen.iter().map(|&i| candidates[i].clone()));
    let mut labels = e.labels().to_vec();
    labels.extend(x.labels.iter().map(|l| format!("{}.{l}", x.name)));
    let out = check_root_subdiagram(host, roots)?.with_labels(labels)?;
    let m = e.len();
    for i in 0..m + k {
        for j in 0..m + k {
            let expected = match (i < m, j < m) {
                (true, true) => e.gram().entry(i, j),
                (false, false) => x.gcm.entry(i - m, j - m),
                _ => 0,
            };
            assert_eq!(out.gram().entry(i, j), expected, "direct sum Gram is block diagonal");
        }
    }
    let name: String = match e.target() {
        Some(t) => format!("{t} + {}", x.name),
        None => format!("+ {}", x.name),
    };
    Ok(out.with_target(&name))
}

/// Backtracking search for candidates whose pairings match `cartan`.
fn pick(host: &RootLattice, cand: &[RootVector], cartan: &crate::cartan::Gcm, chosen: &mut Vec<usize>) -> Result<bool> {
    let depth = chosen.len();
    if depth == cartan.rank() {
        return Ok(true);
    }
    for i in 0..cand.len() {
        if chosen.contains(&i) {
            continue;
        }
        let mut ok = true;
        for (slot, &j) in chosen.iter().enumerate() {
            if host.pairing(&cand[i], &cand[j])? != cartan.entry(depth, slot) {
                ok = false;
                break;
            }
        }
        if ok {
            chosen.push(i);
            if pick(host, cand, cartan, chosen)? {
                return Ok(true);
            }
            chosen.pop();
        }
    }
    Ok(false)
}
