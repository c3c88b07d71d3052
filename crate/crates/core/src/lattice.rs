//! Root-lattice arithmetic over the simple-root basis of a symmetric GCM.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::cartan::{classify, DiagramType, Gcm, MAX_RANK};
use crate::error::{Error, Result};
use crate::linalg::{self, Rational};

/// Integer coordinates over the simple roots of some lattice.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector(Vec<i64>);

impl RootVector {
    pub fn new(coords: Vec<i64>) -> Self {
        RootVector(coords)
    }

    pub fn zero(n: usize) -> Self {
        RootVector(vec![0; n])
    }

    /// The simple root `alpha_i` of a rank-`n` lattice.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        RootVector(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Coordinate sum.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// `self + k * other`, checked.
    pub fn add_scaled(&self, k: i64, other: &RootVector) -> Result<RootVector> {
        if self.len() != other.len() {
            return Err(Error::HostMismatch);
        }
        let coords = self
            .0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| linalg::add(a, linalg::mul(k, b)?))
            .collect::<Result<_>>()?;
        Ok(RootVector(coords))
    }

    pub fn add(&self, other: &RootVector) -> Result<RootVector> {
        self.add_scaled(1, other)
    }

    pub fn sub(&self, other: &RootVector) -> Result<RootVector> {
        self.add_scaled(-1, other)
    }

    pub fn neg(&self) -> RootVector {
        RootVector(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Rational coordinates over the simple roots.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    /// Integer combination `sum c_i * w_i` of weights.
    pub fn combination(terms: &[(i64, &WeightVector)]) -> Result<WeightVector> {
        let n = terms.first().map(|(_, w)| w.0.len()).ok_or(Error::HostMismatch)?;
        let mut out = vec![Rational::zero(); n];
        for (c, w) in terms {
            if w.0.len() != n {
                return Err(Error::HostMismatch);
            }
            for (o, x) in out.iter_mut().zip(&w.0) {
                *o = linalg::rational_add(*o, linalg::rational_mul(Rational::from_integer(*c), *x)?)?;
            }
        }
        Ok(WeightVector(out))
    }

    /// The same vector in the root lattice, if every coordinate is integral.
    pub fn to_root_vector(&self) -> Option<RootVector> {
        self.0
            .iter()
            .map(|q| q.is_integer().then(|| q.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(RootVector)
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter().map(|q| (*q.numer(), *q.denom()))).finish()
    }
}

/// Outcome of reflection descent: the simple reflections applied, and the
/// simple root reached (if any).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Descent {
    pub steps: Vec<usize>,
    pub reached: Option<usize>,
}

/// A symmetric GCM viewed as the Gram matrix of its simple roots.
#[derive(Clone, PartialEq, Eq)]
pub struct RootLattice {
    gcm: Gcm,
    labels: Vec<String>,
    kind: Option<DiagramType>,
}

impl fmt::Debug for RootLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootLattice").field("labels", &self.labels).field("gcm", &self.gcm).finish()
    }
}

impl RootLattice {
    /// Vertices are labeled `0..n` unless relabeled with [`Self::with_labels`].
    pub fn new(gcm: Gcm) -> Result<Self> {
        if !gcm.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let n = gcm.rank();
        let kind = if n <= MAX_RANK { Some(classify(&gcm)?) } else { None };
        let labels = (0..n).map(|i| i.to_string()).collect();
        Ok(RootLattice { gcm, labels, kind })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.rank() {
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

    pub fn rank(&self) -> usize {
        self.gcm.rank()
    }

    pub fn gcm(&self) -> &Gcm {
        &self.gcm
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `None` above [`MAX_RANK`].
    pub fn kind(&self) -> Option<DiagramType> {
        self.kind
    }

    pub fn simple_root(&self, i: usize) -> RootVector {
        RootVector::simple(self.rank(), i)
    }

    /// Simple root with the given label.
    pub fn alpha(&self, label: &str) -> Result<RootVector> {
        let i = self.index_of(label).ok_or_else(|| Error::UnknownName(label.into()))?;
        Ok(self.simple_root(i))
    }

    fn check(&self, x: &RootVector) -> Result<()> {
        if x.len() != self.rank() {
            return Err(Error::HostMismatch);
        }
        Ok(())
    }

    /// `(x, alpha_i)` for every `i`.
    pub fn pairings_with_simple(&self, x: &RootVector) -> Result<Vec<i64>> {
        self.check(x)?;
        let n = self.rank();
        (0..n)
            .map(|i| {
                x.0.iter()
                    .enumerate()
                    .try_fold(0i64, |acc, (k, &c)| linalg::add(acc, linalg::mul(c, self.gcm.entry(k, i))?))
            })
            .collect()
    }

    /// `sum_ij x_i a_ij y_j`.
    pub fn pairing(&self, x: &RootVector, y: &RootVector) -> Result<i64> {
        self.check(y)?;
        let ax = self.pairings_with_simple(x)?;
        ax.iter().zip(&y.0).try_fold(0i64, |acc, (&a, &b)| linalg::add(acc, linalg::mul(a, b)?))
    }

    pub fn norm(&self, x: &RootVector) -> Result<i64> {
        self.pairing(x, x)
    }

    /// `r_i(x) = x - (x, alpha_i) alpha_i`.
    pub fn simple_reflection(&self, i: usize, x: &RootVector) -> Result<RootVector> {
        self.check(x)?;
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange(i));
        }
        let p = self.pairing(x, &self.simple_root(i))?;
        let mut out = x.clone();
        out.0[i] = out.0[i].checked_sub(p).ok_or(Error::Overflow)?;
        Ok(out)
    }

    /// `x - (x, beta) beta` for a norm-2 vector `beta`.
    pub fn reflect_by(&self, beta: &RootVector, x: &RootVector) -> Result<RootVector> {
        if self.norm(beta)? != 2 {
            return Err(Error::NotNormTwo);
        }
        let p = self.pairing(x, beta)?;
        x.add_scaled(-p, beta)
    }

    /// Primitive positive kernel vector of a connected affine form.
    ///
    /// When a vertex is labeled `0` its coefficient must be 1.
    pub fn null_root(&self) -> Result<RootVector> {
        if self.kind != Some(DiagramType::Affine) || !self.gcm.is_connected() {
            return Err(Error::NotAffine);
        }
        let n = self.rank();
        let kernel = linalg::integer_kernel(n, n, self.gcm.as_flat())?;
        let [v] = kernel.as_slice() else {
            return Err(Error::NotAffine);
        };
        let mut v = v.clone();
        let g = linalg::gcd_all(&v);
        for c in v.iter_mut() {
            *c /= g;
        }
        if v.iter().any(|&c| c < 0) {
            for c in v.iter_mut() {
                *c = -*c;
            }
        }
        if v.iter().any(|&c| c <= 0) {
            return Err(Error::NotAffine);
        }
        if let Some(z) = self.index_of("0") {
            if v[z] != 1 {
                return Err(Error::NormalizationFailed(v[z]));
            }
        }
        Ok(RootVector(v))
    }

    /// Dual basis `Lambda_i` with `(Lambda_i, alpha_j) = [i == j]`.
    pub fn fundamental_weights(&self) -> Result<Vec<WeightVector>> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                linalg::solve_rational(n, self.gcm.as_flat(), &e).map(WeightVector)
            })
            .collect()
    }

    /// `(w, alpha_j)` for every `j`, exactly.
    pub fn weight_pairings(&self, w: &WeightVector) -> Result<Vec<Rational>> {
        if w.0.len() != self.rank() {
            return Err(Error::HostMismatch);
        }
        let n = self.rank();
        (0..n)
            .map(|j| {
                (0..n).try_fold(Rational::zero(), |acc, k| {
                    linalg::rational_add(acc, linalg::rational_mul(w.0[k], Rational::from_integer(self.gcm.entry(k, j)))?)
                })
            })
            .collect()
    }

    /// Whether norm-2 lattice vectors are exactly the real roots here:
    /// simply laced finite, affine, or hyperbolic type.
    pub fn norm_test_applies(&self) -> bool {
        matches!(
            self.kind,
            Some(DiagramType::Finite | DiagramType::Affine | DiagramType::Indefinite { hyperbolic: true })
        )
    }

    /// Positive real root test by the norm characterization.
    pub fn is_positive_real_root_norm(&self, x: &RootVector) -> Result<bool> {
        if !self.norm_test_applies() {
            return Err(Error::TheoremHypothesisViolated);
        }
        Ok(self.norm(x)? == 2 && x.is_nonnegative())
    }

    /// Reflection descent from a nonnegative vector, always reflecting in the
    /// lowest `i` with `(x, alpha_i) > 0`. Stops at a simple root, at a vector
    /// with no positive pairing, or when a coordinate turns negative.
    pub fn descend(&self, x: &RootVector) -> Result<Descent> {
        self.check(x)?;
        if !x.is_nonnegative() {
            return Err(Error::NegativeCoordinates);
        }
        let mut x = x.clone();
        let mut steps = Vec::new();
        loop {
            if x.height() == 1 {
                let i = x.0.iter().position(|&c| c == 1).expect("height-1 nonnegative vector");
                return Ok(Descent { steps, reached: Some(i) });
            }
            let pairs = self.pairings_with_simple(&x)?;
            let Some(i) = pairs.iter().position(|&p| p > 0) else {
                return Ok(Descent { steps, reached: None });
            };
            let before = x.height();
            x.0[i] -= pairs[i];
            assert!(x.height() < before, "descent must lower the height");
            steps.push(i);
            if !x.is_nonnegative() {
                return Ok(Descent { steps, reached: None });
            }
        }
    }

    /// Positive real root test by reflection descent; valid for any
    /// symmetric host.
    pub fn is_positive_real_root_descent(&self, x: &RootVector) -> Result<bool> {
        Ok(self.descend(x)?.reached.is_some())
    }

    /// Norm test where it applies, descent otherwise. Negative vectors are
    /// simply not positive roots.
    pub fn is_positive_real_root(&self, x: &RootVector) -> Result<bool> {
        if !x.is_nonnegative() {
            self.check(x)?;
            return Ok(false);
        }
        if self.norm_test_applies() {
            self.is_positive_real_root_norm(x)
        } else {
            self.is_positive_real_root_descent(x)
        }
    }

    /// All nonnegative norm-2 vectors of height at most `max_height`.
    pub fn real_roots_up_to_height(&self, max_height: u32) -> Result<BTreeSet<RootVector>> {
        if !self.norm_test_applies() {
            return Err(Error::TheoremHypothesisViolated);
        }
        let mut out = BTreeSet::new();
        let mut buf = vec![0i64; self.rank()];
        self.for_each_box_vector(&mut buf, 0, max_height as i64, &mut |v| {
            let v = RootVector(v.to_vec());
            if self.norm(&v)? == 2 {
                out.insert(v);
            }
            Ok(())
        })?;
        Ok(out)
    }

    /// Visits every nonzero nonnegative vector with coordinate sum at most
    /// `budget`.
    pub fn for_each_box_vector(
        &self,
        buf: &mut [i64],
        pos: usize,
        budget: i64,
        f: &mut dyn FnMut(&[i64]) -> Result<()>,
    ) -> Result<()> {
        if pos == buf.len() {
            if buf.iter().any(|&c| c != 0) {
                f(buf)?;
            }
            return Ok(());
        }
        for c in 0..=budget {
            buf[pos] = c;
            self.for_each_box_vector(buf, pos + 1, budget - c, f)?;
        }
        buf[pos] = 0;
        Ok(())
    }
}

impl WeightVector {
    /// `true` if `(self, alpha_j) = [i == j]` in `host`.
    pub fn is_dual_to(&self, host: &RootLattice, i: usize) -> Result<bool> {
        let p = host.weight_pairings(self)?;
        Ok(p.iter().enumerate().all(|(j, q)| if i == j { q.is_one() } else { q.is_zero() }))
    }
}
