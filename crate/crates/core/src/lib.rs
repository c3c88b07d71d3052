//! Exact root-lattice machinery for simply laced Kac-Moody algebras.
//!
//! The crate classifies generalized Cartan matrices, decides Dynkin diagram
//! isomorphism, computes in root lattices (reflections, null roots,
//! fundamental weights, real-root tests), and builds root subdiagram
//! embeddings: sets of positive real roots whose pairwise pairings are
//! nonpositive, so that their Gram matrix is again a generalized Cartan
//! matrix. [`embed::prove_main`] realizes every simply laced hyperbolic
//! diagram inside `E10` this way, and [`orth`] extends two of them by
//! orthogonal roots.
//!
//! Everything is exact integer or rational arithmetic, checked for
//! overflow. The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cartan;
pub mod catalog;
pub mod embed;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod orth;

pub use cartan::{
    are_isomorphic, canonical_form, classify, connected_components, is_hyperbolic, validate_gcm, CanonicalForm,
    DiagramType, DynkinDiagram, Gcm,
};
pub use catalog::{enumerate_hyperbolic_simply_laced, get, identify, Catalog, CatalogEntry, Family};
pub use embed::{check_root_subdiagram, prove_main, Embedding, HyperbolicExtension};
pub use error::{Error, Result};
pub use lattice::{RootLattice, RootVector, WeightVector};
pub use orth::{extend_direct_sum, find_orthogonal_real_roots, orthogonal_sublattice, SublatticeBasis};
