//! Root subdiagrams: ordered lists of positive real roots with pairwise
//! nonpositive pairings, together with the constructions that produce them.
//!
//! If `b_1, ..., b_k` are positive real roots and `(b_i, b_j) <= 0` for
//! `i != j`, then `b_i - b_j` has norm at least 4 and is therefore not a
//! root, so the roots generate a Kac-Moody subalgebra whose GCM is the Gram
//! matrix `[(b_i, b_j)]`. [`check_root_subdiagram`] certifies exactly these
//! two conditions; every [`Embedding`] value has passed it.

mod recipes;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::cartan::{are_isomorphic, classify, DiagramType, DynkinDiagram, Gcm};
use crate::catalog::CatalogEntry;
use crate::error::{Error, Result};
use crate::lattice::{RootLattice, RootVector};

pub use recipes::{prove_main, rank2_embedding, recipe, t_family, trace, Recipe, Step};

/// A validated root subdiagram of `host`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    host: RootLattice,
    roots: Vec<RootVector>,
    gram: Gcm,
    labels: Vec<String>,
    target: Option<String>,
}

impl Embedding {
    pub fn host(&self) -> &RootLattice {
        &self.host
    }

    pub fn roots(&self) -> &[RootVector] {
        &self.roots
    }

    /// Number of roots.
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// `[(b_i, b_j)]`, a symmetric GCM by construction.
    pub fn gram(&self) -> &Gcm {
        &self.gram
    }

    /// Display labels of the roots (one per root).
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn target(&self) -> Option<&str> {
        self.target.as_deref()
    }

    pub fn diagram(&self) -> DynkinDiagram {
        DynkinDiagram::from_gcm(&self.gram)
            .expect("gram matrices are symmetric")
            .with_labels(self.labels.clone())
            .expect("embedding labels are distinct")
    }

    pub fn with_target(mut self, name: &str) -> Self {
        self.target = Some(name.to_string());
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.roots.len() {
            return Err(Error::BadLabels);
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::BadLabels);
            }
        }
        self.labels = labels;
        Ok(self)
    }

    /// The identity embedding of a lattice into itself.
    pub fn identity(host: &RootLattice) -> Result<Self> {
        let roots = (0..host.rank()).map(|i| host.simple_root(i)).collect();
        let e = check_root_subdiagram(host, roots)?;
        e.with_labels(host.labels().to_vec())
    }

    /// Reorders the roots: new root `i` is old root `order[i]`.
    pub fn reordered(&self, order: &[usize]) -> Result<Self> {
        let roots = order.iter().map(|&i| self.roots[i].clone()).collect();
        let labels = order.iter().map(|&i| self.labels[i].clone()).collect();
        let e = check_root_subdiagram(&self.host, roots)?;
        Ok(Embedding { labels, target: self.target.clone(), ..e })
    }

    /// Reorders the roots so that the Gram matrix equals `entry`'s GCM,
    /// and adopts its labels and name.
    pub fn aligned_to(&self, entry: &CatalogEntry) -> Result<Self> {
        let perm = are_isomorphic(&entry.diagram(), &self.diagram())
            .ok_or_else(|| Error::RecipeMismatch(entry.name.clone()))?;
        let e = self.reordered(&perm)?;
        assert_eq!(e.gram, entry.gcm, "isomorphism witness must align the Gram matrix");
        Ok(Embedding { labels: entry.labels.clone(), target: Some(entry.name.clone()), ..e })
    }
}

/// Certifies that `roots` form a root subdiagram of `host`.
///
/// Each root must be a positive real root (norm test on finite, affine, and
/// hyperbolic hosts; reflection descent elsewhere) and every pair must pair
/// nonpositively.
pub fn check_root_subdiagram(host: &RootLattice, roots: Vec<RootVector>) -> Result<Embedding> {
    if roots.is_empty() {
        return Err(Error::EmptyRoots);
    }
    if roots.len() > host.rank() {
        return Err(Error::TooManyRoots { k: roots.len(), rank: host.rank() });
    }
    for (i, r) in roots.iter().enumerate() {
        if r.len() != host.rank() {
            return Err(Error::HostMismatch);
        }
        if !r.is_nonnegative() {
            return Err(Error::NotPositive(i));
        }
        if !host.is_positive_real_root(r)? {
            return Err(Error::NotRealRoot(i));
        }
    }
    let k = roots.len();
    let mut entries = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            let p = host.pairing(&roots[i], &roots[j])?;
            if i != j && p > 0 {
                return Err(Error::PositivePairing(i.min(j), i.max(j)));
            }
            entries.push(p);
        }
    }
    let gram = Gcm::from_flat(k, entries).expect("norm-2 roots with nonpositive pairings give a GCM");
    let labels = (0..k).map(|i| i.to_string()).collect();
    Ok(Embedding { host: host.clone(), roots, gram, labels, target: None })
}

/// A lattice `HX`: an affine diagram `X` with a pendant vertex `-1` joined
/// to its node `0`, together with the null root of `X`.
///
/// Vertex labels are integers; principles take labels, not indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperbolicExtension {
    lattice: RootLattice,
    name: String,
    ext: usize,
    zero: usize,
    null_root: RootVector,
}

/// Builds `HX` from an affine catalog entry `X`. The new vertex `-1` comes
/// first; `X`'s vertices follow in their original order.
pub fn hyperbolic_extension(x: &CatalogEntry) -> Result<HyperbolicExtension> {
    if classify(&x.gcm)? != DiagramType::Affine || !x.gcm.is_connected() {
        return Err(Error::NotAffine);
    }
    let zero = x.index_of("0").ok_or(Error::NoDesignatedZero)?;
    let n = x.rank() + 1;
    let mut entries = alloc::vec![0i64; n * n];
    entries[0] = 2;
    for i in 0..x.rank() {
        for j in 0..x.rank() {
            entries[(i + 1) * n + j + 1] = x.gcm.entry(i, j);
        }
    }
    entries[zero + 1] = -1;
    entries[(zero + 1) * n] = -1;
    let mut labels = alloc::vec![String::from("-1")];
    labels.extend(x.labels.iter().cloned());
    let lattice = RootLattice::new(Gcm::from_flat(n, entries)?)?.with_labels(labels)?;
    let mut hx = HyperbolicExtension::from_lattice(lattice)?;
    hx.name = format!("H{}", x.name);
    Ok(hx)
}

impl HyperbolicExtension {
    /// Recognizes an existing lattice as `HX`: vertex `-1` must be a pendant
    /// joined once to vertex `0`, and the rest must be connected affine.
    pub fn from_lattice(lattice: RootLattice) -> Result<Self> {
        let ext = lattice.index_of("-1").ok_or(Error::NotHyperbolicExtension)?;
        let zero = lattice.index_of("0").ok_or(Error::NoDesignatedZero)?;
        if lattice.labels().iter().any(|l| l.parse::<i64>().is_err()) {
            return Err(Error::BadLabels);
        }
        let g = lattice.gcm();
        let n = g.rank();
        if g.entry(ext, zero) != -1 || (0..n).any(|j| j != ext && j != zero && g.entry(ext, j) != 0) {
            return Err(Error::NotHyperbolicExtension);
        }
        let affine: Vec<usize> = (0..n).filter(|&i| i != ext).collect();
        let x = RootLattice::new(g.principal(&affine))?
            .with_labels(affine.iter().map(|&i| lattice.labels()[i].clone()).collect())?;
        let delta_x = x.null_root()?;
        let mut delta = alloc::vec![0i64; n];
        for (k, &i) in affine.iter().enumerate() {
            delta[i] = delta_x.coords()[k];
        }
        Ok(HyperbolicExtension {
            lattice,
            name: String::from("HX"),
            ext,
            zero,
            null_root: RootVector::new(delta),
        })
    }

    pub fn lattice(&self) -> &RootLattice {
        &self.lattice
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Null root of the affine part, in `HX` coordinates.
    pub fn null_root(&self) -> &RootVector {
        &self.null_root
    }

    pub fn extension_index(&self) -> usize {
        self.ext
    }

    pub fn zero_index(&self) -> usize {
        self.zero
    }

    pub fn index_of(&self, label: i64) -> Option<usize> {
        self.lattice.index_of(&label.to_string())
    }

    /// Index of a vertex of the finite diagram underlying `X` (any vertex
    /// but `-1` and `0`).
    fn finite_vertex(&self, label: i64) -> Result<usize> {
        match self.index_of(label) {
            Some(i) if i != self.ext && i != self.zero => Ok(i),
            _ => Err(Error::BadVertex(label)),
        }
    }

    fn simple_roots(&self) -> Vec<RootVector> {
        (0..self.lattice.rank()).map(|i| self.lattice.simple_root(i)).collect()
    }

    fn embedding(&self, roots: Vec<RootVector>) -> Result<Embedding> {
        check_root_subdiagram(&self.lattice, roots)?.with_labels(self.lattice.labels().to_vec())
    }
}

/// Replaces `alpha_{-1}` by `r_{-1}(delta + alpha_0) = delta + alpha_0 + 2 alpha_{-1}`.
///
/// The new vertex is joined to the neighbors of `0` in `X` and no longer to
/// `0` itself.
pub fn principle_a(hx: &HyperbolicExtension) -> Result<Embedding> {
    let l = &hx.lattice;
    let shifted = hx.null_root.add(&l.simple_root(hx.zero))?;
    let beta = l.simple_reflection(hx.ext, &shifted)?;
    assert_eq!(beta, shifted.add_scaled(2, &l.simple_root(hx.ext))?);
    let mut roots = hx.simple_roots();
    roots[hx.ext] = beta;
    hx.embedding(roots)
}

/// Replaces `alpha_p` by `alpha_p + delta`, adding one edge between `-1`
/// and `p`.
pub fn principle_b(hx: &HyperbolicExtension, p: i64) -> Result<Embedding> {
    principle_b_prime(hx, &[p])
}

/// Replaces `alpha_i` by `alpha_i + delta` for every `i` in `shifted`,
/// joining `-1` to each of them.
pub fn principle_b_prime(hx: &HyperbolicExtension, shifted: &[i64]) -> Result<Embedding> {
    let mut roots = hx.simple_roots();
    for &p in shifted {
        let i = hx.finite_vertex(p)?;
        if roots[i] != hx.lattice.simple_root(i) {
            return Err(Error::BadVertex(p));
        }
        roots[i] = roots[i].add(&hx.null_root)?;
    }
    hx.embedding(roots)
}

/// Shrinks an induced `A_p` chain (single edges, no chords) to the sum of
/// its roots. The sum takes the position of the chain's first member in the
/// root list; the other chain members are dropped.
pub fn principle_c(e: &Embedding, chain: &[usize]) -> Result<Embedding> {
    let k = e.len();
    if chain.is_empty() {
        return Err(Error::NotAChain);
    }
    for (i, &c) in chain.iter().enumerate() {
        if c >= k {
            return Err(Error::IndexOutOfRange(c));
        }
        if chain[..i].contains(&c) {
            return Err(Error::NotAChain);
        }
    }
    let d = e.diagram();
    let mut edges = 0usize;
    for (i, &a) in chain.iter().enumerate() {
        let mut degree = 0;
        for &b in &chain[i + 1..] {
            match d.mult(a, b) {
                0 => {}
                1 => edges += 1,
                _ => return Err(Error::NotAChain),
            }
        }
        for &b in chain {
            degree += usize::from(d.mult(a, b) > 0);
        }
        if degree > 2 {
            return Err(Error::NotAChain);
        }
    }
    let all: Vec<usize> = chain.to_vec();
    let connected = crate::cartan::connected_components(&d, &all).len() == 1;
    if !connected || edges != chain.len() - 1 {
        return Err(Error::NotAChain);
    }

    let first = *chain.iter().min().expect("nonempty chain");
    let mut sum = RootVector::zero(e.host.rank());
    for &c in chain {
        sum = sum.add(&e.roots[c])?;
    }
    assert_eq!(e.host.norm(&sum)?, 2, "an A_p chain of norm-2 roots sums to norm 2");
    let mut roots = Vec::with_capacity(k + 1 - chain.len());
    let mut labels = Vec::with_capacity(roots.capacity());
    for i in 0..k {
        if i == first {
            roots.push(sum.clone());
            let mut sorted = chain.to_vec();
            sorted.sort_unstable();
            let parts: Vec<&str> = sorted.iter().map(|&c| e.labels[c].as_str()).collect();
            labels.push(parts.join("+"));
        } else if !chain.contains(&i) {
            roots.push(e.roots[i].clone());
            labels.push(e.labels[i].clone());
        }
    }
    check_root_subdiagram(&e.host, roots)?.with_labels(labels)
}

/// Drops the roots at the given positions.
pub fn principle_d(e: &Embedding, delete: &[usize]) -> Result<Embedding> {
    if let Some(&bad) = delete.iter().find(|&&i| i >= e.len()) {
        return Err(Error::BadVertex(bad as i64));
    }
    let keep: Vec<usize> = (0..e.len()).filter(|i| !delete.contains(i)).collect();
    let roots = keep.iter().map(|&i| e.roots[i].clone()).collect();
    let labels = keep.iter().map(|&i| e.labels[i].clone()).collect();
    let out = check_root_subdiagram(&e.host, roots)?.with_labels(labels)?;
    debug_assert_eq!(out.gram, e.gram.principal(&keep));
    Ok(out)
}

/// `inner` lives in the lattice of `outer`'s diagram; rewrites it in
/// `outer`'s host coordinates.
pub fn compose(outer: &Embedding, inner: &Embedding) -> Result<Embedding> {
    if inner.host.gcm() != &outer.gram {
        return Err(Error::HostMismatch);
    }
    let n = outer.host.rank();
    let mut roots = Vec::with_capacity(inner.len());
    for gamma in &inner.roots {
        let mut r = RootVector::zero(n);
        for (&m, beta) in gamma.coords().iter().zip(&outer.roots) {
            if m != 0 {
                r = r.add_scaled(m, beta)?;
            }
        }
        roots.push(r);
    }
    let out = check_root_subdiagram(&outer.host, roots)?;
    assert_eq!(out.gram, inner.gram, "composition preserves the Gram matrix");
    Ok(Embedding { labels: inner.labels.clone(), target: inner.target.clone(), ..out })
}
