//! Canonical forms for small multigraphs by individualization-refinement.
//!
//! The search refines an ordered vertex partition to an equitable one,
//! branches on the vertices of the first non-singleton cell, and keeps the
//! lexicographically smallest adjacency encoding over all discrete leaves.
//! Cell order is derived only from multiplicity counts, so the leaf set is
//! permutation-invariant. Two vertices with identical rows ("twins") are
//! swapped by an automorphism fixing everything else; only one of them is
//! branched on.

use alloc::vec;
use alloc::vec::Vec;

use super::{DynkinDiagram, MAX_RANK};
use crate::error::{Error, Result};

/// Permutation-invariant byte encoding of a diagram.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

type Partition = Vec<Vec<usize>>;

fn signature(d: &DynkinDiagram, v: usize, cells: &Partition) -> Vec<Vec<u32>> {
    cells
        .iter()
        .map(|cell| {
            let mut s: Vec<u32> = cell.iter().map(|&w| d.mult(v, w)).filter(|&m| m > 0).collect();
            s.sort_unstable();
            s
        })
        .collect()
}

fn refine(d: &DynkinDiagram, mut cells: Partition) -> Partition {
    loop {
        let mut next: Partition = Vec::with_capacity(cells.len());
        let mut split = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut tagged: Vec<(Vec<Vec<u32>>, usize)> =
                cell.iter().map(|&v| (signature(d, v, &cells), v)).collect();
            tagged.sort();
            let mut start = 0;
            for k in 1..=tagged.len() {
                if k == tagged.len() || tagged[k].0 != tagged[start].0 {
                    split |= k - start < cell.len();
                    next.push(tagged[start..k].iter().map(|t| t.1).collect());
                    start = k;
                }
            }
        }
        cells = next;
        if !split {
            return cells;
        }
    }
}

fn encode(d: &DynkinDiagram, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut out = Vec::with_capacity(4 + 2 * n * n);
    out.extend_from_slice(&(n as u32).to_be_bytes());
    for j in 0..n {
        for i in 0..j {
            out.extend_from_slice(&d.mult(order[i], order[j]).to_be_bytes());
        }
    }
    out
}

fn twins(d: &DynkinDiagram, u: usize, v: usize) -> bool {
    (0..d.vertex_count()).all(|w| w == u || w == v || d.mult(u, w) == d.mult(v, w))
}

fn search(d: &DynkinDiagram, cells: Partition, best: &mut Option<(Vec<u8>, Vec<usize>)>) {
    let cells = refine(d, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.into_iter().flatten().collect();
        let enc = encode(d, &order);
        if best.as_ref().is_none_or(|(b, _)| enc < *b) {
            *best = Some((enc, order));
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cells[target] {
        if tried.iter().any(|&u| twins(d, u, v)) {
            continue;
        }
        tried.push(v);
        let mut child = Vec::with_capacity(cells.len() + 1);
        child.extend_from_slice(&cells[..target]);
        child.push(vec![v]);
        child.push(cells[target].iter().copied().filter(|&w| w != v).collect());
        child.extend_from_slice(&cells[target + 1..]);
        search(d, child, best);
    }
}

/// Canonical form together with the vertex order realizing it
/// (`order[position] = vertex`).
pub fn canonical_labeling(d: &DynkinDiagram) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = d.vertex_count();
    if n > MAX_RANK {
        return Err(Error::RankTooLarge { rank: n, max: MAX_RANK });
    }
    if n == 0 {
        return Ok((CanonicalForm(encode(d, &[])), Vec::new()));
    }
    let mut best = None;
    search(d, vec![(0..n).collect()], &mut best);
    let (enc, order) = best.expect("a nonempty diagram has at least one leaf");
    Ok((CanonicalForm(enc), order))
}

pub fn canonical_form(d: &DynkinDiagram) -> Result<CanonicalForm> {
    canonical_labeling(d).map(|(f, _)| f)
}

/// A permutation `p` with `d1.mult(i, j) == d2.mult(p[i], p[j])` for all
/// `i, j`, or `None` when the diagrams are not isomorphic. Identical
/// diagrams get the identity.
pub fn are_isomorphic(d1: &DynkinDiagram, d2: &DynkinDiagram) -> Option<Vec<usize>> {
    let n = d1.vertex_count();
    if n != d2.vertex_count() {
        return None;
    }
    if d1.same_graph(d2) {
        return Some((0..n).collect());
    }
    let (f1, o1) = canonical_labeling(d1).ok()?;
    let (f2, o2) = canonical_labeling(d2).ok()?;
    if f1 != f2 {
        return None;
    }
    let mut perm = vec![0; n];
    for (&a, &b) in o1.iter().zip(&o2) {
        perm[a] = b;
    }
    Some(perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> DynkinDiagram {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, 1)).collect();
        DynkinDiagram::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> DynkinDiagram {
        let mut d = DynkinDiagram::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                d.set_mult(i, j, 1);
            }
        }
        d
    }

    fn check_iso(a: &DynkinDiagram, b: &DynkinDiagram, p: &[usize]) -> bool {
        let n = a.vertex_count();
        (0..n).all(|i| (0..n).all(|j| a.mult(i, j) == b.mult(p[i], p[j])))
    }

    #[test]
    fn identity_for_equal_diagrams() {
        let d = cycle(5);
        assert_eq!(are_isomorphic(&d, &d), Some(vec![0, 1, 2, 3, 4]));
    }

    #[test]
    fn different_sizes_are_not_isomorphic() {
        assert_eq!(are_isomorphic(&DynkinDiagram::empty(1), &cycle(3)), None);
    }

    #[test]
    fn cycle_versus_path() {
        let path = DynkinDiagram::from_edges(5, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1)]).unwrap();
        assert_ne!(canonical_form(&path).unwrap(), canonical_form(&cycle(5)).unwrap());
    }

    #[test]
    fn vertex_transitive_graphs_are_fast() {
        // 12! orderings without twin pruning
        let k = complete(12);
        let p = k.permute(&[11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0]);
        assert_eq!(canonical_form(&k).unwrap(), canonical_form(&p).unwrap());
        let c = cycle(12);
        let shifted = c.permute(&[3, 4, 5, 6, 7, 8, 9, 10, 11, 0, 1, 2]);
        let perm = are_isomorphic(&c, &shifted.permute(&[1, 0, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11])).unwrap();
        assert!(check_iso(&c, &shifted.permute(&[1, 0, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]), &perm));
    }

    #[test]
    fn rejects_rank_thirteen() {
        assert!(matches!(canonical_form(&cycle(13)), Err(Error::RankTooLarge { .. })));
    }

    fn diagram_from_bits(n: usize, bits: &[u8]) -> DynkinDiagram {
        let mut d = DynkinDiagram::empty(n);
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                d.set_mult(i, j, (bits[k] % 3) as u32);
                k += 1;
            }
        }
        d
    }

    proptest::proptest! {
        #[test]
        fn canonical_form_is_permutation_invariant(
            n in 1usize..=7,
            bits in proptest::collection::vec(0u8..=255, 21),
            perm in Just((0usize..7).collect::<Vec<_>>()).prop_shuffle(),
        ) {
            let d = diagram_from_bits(n, &bits);
            let p: Vec<usize> = perm.into_iter().filter(|&x| x < n).collect();
            let q = d.permute(&p);
            proptest::prop_assert_eq!(canonical_form(&d).unwrap(), canonical_form(&q).unwrap());
            let sigma = are_isomorphic(&d, &q).unwrap();
            proptest::prop_assert!(check_iso(&d, &q, &sigma));
        }

        #[test]
        fn equal_forms_imply_witness(
            n in 1usize..=5,
            a in proptest::collection::vec(0u8..=255, 10),
            b in proptest::collection::vec(0u8..=255, 10),
        ) {
            let d1 = diagram_from_bits(n, &a);
            let d2 = diagram_from_bits(n, &b);
            let same = canonical_form(&d1).unwrap() == canonical_form(&d2).unwrap();
            match are_isomorphic(&d1, &d2) {
                Some(p) => {
                    proptest::prop_assert!(same);
                    proptest::prop_assert!(check_iso(&d1, &d2, &p));
                }
                None => proptest::prop_assert!(!same),
            }
        }
    }

    use proptest::prelude::{Just, Strategy};
}
