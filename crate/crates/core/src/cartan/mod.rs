//! Generalized Cartan matrices, their type classification, and the
//! multigraph (Dynkin diagram) view of symmetric ones.

mod canon;

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::linalg;

pub use canon::{are_isomorphic, canonical_form, canonical_labeling, CanonicalForm};

/// Largest rank accepted by the exhaustive principal-minor classifier and by
/// the canonical-form search.
pub const MAX_RANK: usize = 12;

/// A validated generalized Cartan matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gcm {
    n: usize,
    entries: Vec<i64>,
    symmetric: bool,
}

impl Gcm {
    /// Validates the three generalized-Cartan axioms.
    pub fn new(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(n * n);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::NotSquare { row, len: r.len(), expected: n });
            }
            entries.extend_from_slice(r);
        }
        Self::from_flat(n, entries)
    }

    /// Same as [`Gcm::new`] but from a row-major buffer of length `n * n`.
    pub fn from_flat(n: usize, entries: Vec<i64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if entries.len() != n * n {
            return Err(Error::NotSquare { row: entries.len() / n, len: entries.len() % n, expected: n });
        }
        for i in 0..n {
            if entries[i * n + i] != 2 {
                return Err(Error::BadDiagonal(i));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                if entries[i * n + j] > 0 {
                    return Err(Error::PositiveOffDiagonal(i, j));
                }
                if entries[i * n + j] == 0 && entries[j * n + i] != 0 {
                    return Err(Error::AsymmetricZero(i, j));
                }
            }
        }
        let symmetric = (0..n).all(|i| (0..i).all(|j| entries[i * n + j] == entries[j * n + i]));
        Ok(Gcm { n, entries, symmetric })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn as_flat(&self) -> &[i64] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn det(&self) -> Result<i64> {
        linalg::det(self.n, &self.entries)
    }

    /// Principal submatrix on `idx` (order preserved). Still a GCM.
    pub fn principal(&self, idx: &[usize]) -> Gcm {
        let entries = linalg::principal_submatrix(self.n, &self.entries, idx);
        let symmetric = self.symmetric;
        Gcm { n: idx.len(), entries, symmetric }
    }

    /// Vertices `i != j` with `a_ij != 0` are adjacent.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.entry(i, j) != 0
    }

    pub fn is_connected(&self) -> bool {
        let all: Vec<usize> = (0..self.n).collect();
        components_by(self.n, &all, |i, j| self.adjacent(i, j)).len() == 1
    }
}

impl fmt::Debug for Gcm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.entries.chunks(self.n)).finish()
    }
}

/// Validates `matrix` as a generalized Cartan matrix.
pub fn validate_gcm(matrix: &[Vec<i64>]) -> Result<Gcm> {
    Gcm::new(matrix)
}

/// Type of a generalized Cartan matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiagramType {
    Finite,
    Affine,
    /// `hyperbolic` is only ever true for connected diagrams.
    Indefinite { hyperbolic: bool },
}

impl DiagramType {
    pub fn is_finite_or_affine(self) -> bool {
        matches!(self, DiagramType::Finite | DiagramType::Affine)
    }

    pub fn is_hyperbolic(self) -> bool {
        matches!(self, DiagramType::Indefinite { hyperbolic: true })
    }
}

impl fmt::Display for DiagramType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramType::Finite => f.write_str("finite"),
            DiagramType::Affine => f.write_str("affine"),
            DiagramType::Indefinite { hyperbolic: true } => f.write_str("indefinite, hyperbolic"),
            DiagramType::Indefinite { hyperbolic: false } => f.write_str("indefinite"),
        }
    }
}

/// Finite / affine / indefinite by exhaustive principal minors, without the
/// hyperbolic refinement.
fn classify_by_minors(g: &Gcm) -> Result<DiagramType> {
    let n = g.n;
    if n > MAX_RANK {
        return Err(Error::RankTooLarge { rank: n, max: MAX_RANK });
    }
    let full = (1u32 << n) - 1;
    let mut idx = Vec::with_capacity(n);
    let mut proper_positive = true;
    for mask in 1..full {
        idx.clear();
        idx.extend((0..n).filter(|&i| mask & (1 << i) != 0));
        let sub = linalg::principal_submatrix(n, &g.entries, &idx);
        if linalg::det(idx.len(), &sub)? <= 0 {
            proper_positive = false;
            break;
        }
    }
    if !proper_positive {
        return Ok(DiagramType::Indefinite { hyperbolic: false });
    }
    let d = g.det()?;
    Ok(match d {
        d if d > 0 => DiagramType::Finite,
        0 => DiagramType::Affine,
        _ => DiagramType::Indefinite { hyperbolic: false },
    })
}

/// Classifies `g` as finite, affine, or indefinite from its principal
/// minors, and flags connected indefinite matrices that are hyperbolic.
pub fn classify(g: &Gcm) -> Result<DiagramType> {
    let base = classify_by_minors(g)?;
    if base == (DiagramType::Indefinite { hyperbolic: false }) && g.is_connected() {
        return Ok(DiagramType::Indefinite { hyperbolic: is_hyperbolic(g)? });
    }
    Ok(base)
}

/// True iff deleting any one vertex leaves only finite or affine components.
pub fn is_hyperbolic(g: &Gcm) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if classify_by_minors(g)? != (DiagramType::Indefinite { hyperbolic: false }) {
        return Err(Error::NotIndefinite);
    }
    for v in 0..g.n {
        let rest: Vec<usize> = (0..g.n).filter(|&i| i != v).collect();
        for comp in components_by(g.n, &rest, |i, j| g.adjacent(i, j)) {
            if !classify_by_minors(&g.principal(&comp))?.is_finite_or_affine() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Type of a *connected* symmetric matrix from one pass of leading minors.
///
/// An indecomposable symmetric GCM is finite iff positive definite, and
/// affine iff every proper principal minor is positive and the determinant
/// vanishes; for an affine matrix every leading minor below the top one is
/// positive in any vertex order, so the natural order suffices.
pub(crate) fn classify_connected_fast(n: usize, m: &[i64]) -> Result<DiagramType> {
    let minors = linalg::leading_minors(n, m)?;
    if minors.len() < n || minors[..n - 1].iter().any(|&d| d <= 0) {
        return Ok(DiagramType::Indefinite { hyperbolic: false });
    }
    Ok(match minors[n - 1] {
        d if d > 0 => DiagramType::Finite,
        0 => DiagramType::Affine,
        _ => DiagramType::Indefinite { hyperbolic: false },
    })
}

/// Partition of `subset` into connected pieces under `adj`; each piece is
/// sorted and pieces are ordered by their smallest vertex.
pub(crate) fn components_by(n: usize, subset: &[usize], adj: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut in_subset = vec![false; n];
    for &v in subset {
        in_subset[v] = true;
    }
    let mut seen = vec![false; n];
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    for &start in &sorted {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in 0..n {
                if in_subset[w] && !seen[w] && adj(v, w) {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Multigraph view of a symmetric GCM: vertices `0..n`, `mult(i, j) = |a_ij|`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DynkinDiagram {
    n: usize,
    mult: Vec<u32>,
    labels: Option<Vec<String>>,
}

impl DynkinDiagram {
    pub fn empty(n: usize) -> Self {
        DynkinDiagram { n, mult: vec![0; n * n], labels: None }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize, u32)]) -> Result<Self> {
        let mut d = Self::empty(n);
        for &(i, j, m) in edges {
            if i >= n {
                return Err(Error::IndexOutOfRange(i));
            }
            if j >= n {
                return Err(Error::IndexOutOfRange(j));
            }
            if i == j {
                return Err(Error::BadDiagonal(i));
            }
            d.set_mult(i, j, m);
        }
        Ok(d)
    }

    pub fn from_gcm(g: &Gcm) -> Result<Self> {
        if !g.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let n = g.rank();
        let mut d = Self::empty(n);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    d.mult[i * n + j] = u32::try_from(-g.entry(i, j)).map_err(|_| Error::Overflow)?;
                }
            }
        }
        Ok(d)
    }

    pub fn to_gcm(&self) -> Gcm {
        let n = self.n;
        let entries = (0..n * n)
            .map(|k| if k / n == k % n { 2 } else { -(self.mult[k] as i64) })
            .collect();
        Gcm::from_flat(n, entries).expect("diagram matrices satisfy the GCM axioms")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::BadLabels);
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::BadLabels);
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn mult(&self, i: usize, j: usize) -> u32 {
        self.mult[i * self.n + j]
    }

    pub fn set_mult(&mut self, i: usize, j: usize, m: u32) {
        self.mult[i * self.n + j] = m;
        self.mult[j * self.n + i] = m;
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of vertex `i`, falling back to its index.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&w| self.mult(v, w) > 0).count()
    }

    /// Undirected edges `(i, j, mult)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let m = self.mult(i, j);
                if m > 0 {
                    out.push((i, j, m));
                }
            }
        }
        out
    }

    /// Relabels vertices: vertex `i` of `self` becomes vertex `perm[i]`.
    /// Labels travel with their vertices.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let n = self.n;
        let mut d = Self::empty(n);
        for i in 0..n {
            for j in 0..n {
                d.mult[perm[i] * n + perm[j]] = self.mult[i * n + j];
            }
        }
        if let Some(labels) = &self.labels {
            let mut l = vec![String::new(); n];
            for i in 0..n {
                l[perm[i]] = labels[i].clone();
            }
            d.labels = Some(l);
        }
        d
    }

    /// Same multigraph, ignoring labels.
    pub fn same_graph(&self, other: &Self) -> bool {
        self.n == other.n && self.mult == other.mult
    }

    pub fn is_connected(&self) -> bool {
        let all: Vec<usize> = (0..self.n).collect();
        self.n > 0 && connected_components(self, &all).len() == 1
    }
}

impl fmt::Debug for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DynkinDiagram(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Maximal connected pieces of `subset` under nonzero multiplicity.
pub fn connected_components(d: &DynkinDiagram, subset: &[usize]) -> Vec<Vec<usize>> {
    components_by(d.n, subset, |i, j| d.mult(i, j) > 0)
}
