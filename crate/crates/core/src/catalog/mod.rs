//! Named diagrams: the simply laced hyperbolic diagrams of ranks 3 to 10,
//! the two non-hyperbolic rank-10 diagrams `HA_8(1)` and `P10`, the rank-2
//! family `H2(a)`, and the affine and finite diagrams the constructions
//! start from. Vertex labels follow the conventional numbering (`-1` is the
//! extending vertex of a hyperbolic extension, `0` the affine node).

mod enumerate;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::cartan::{are_isomorphic, canonical_form, DynkinDiagram, Gcm};
use crate::error::{Error, Result};
use crate::lattice::RootLattice;

pub use enumerate::enumerate_hyperbolic_simply_laced;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    HA,
    HD,
    HE,
    Irregular,
    Rank2,
    /// Indefinite but not hyperbolic (`HA_8(1)`, `P10`).
    Auxiliary,
    Affine,
    Finite,
}

impl Family {
    pub fn is_hyperbolic(self) -> bool {
        matches!(self, Family::HA | Family::HD | Family::HE | Family::Irregular | Family::Rank2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub family: Family,
    pub gcm: Gcm,
    pub labels: Vec<String>,
}

impl CatalogEntry {
    pub fn rank(&self) -> usize {
        self.gcm.rank()
    }

    pub fn diagram(&self) -> DynkinDiagram {
        DynkinDiagram::from_gcm(&self.gcm)
            .expect("catalog matrices are symmetric")
            .with_labels(self.labels.clone())
            .expect("catalog labels are distinct")
    }

    pub fn lattice(&self) -> RootLattice {
        RootLattice::new(self.gcm.clone())
            .and_then(|l| l.with_labels(self.labels.clone()))
            .expect("catalog matrices are symmetric")
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// The 23 simply laced hyperbolic diagrams of ranks 3..10, regular families
/// first, then the irregular ones.
pub const HYPERBOLIC: [&str; 23] = [
    "HA_1(1)", "HA_2(1)", "HA_3(1)", "HA_4(1)", "HA_5(1)", "HA_6(1)", "HA_7(1)", "HD_4(1)", "HD_5(1)",
    "HD_6(1)", "HD_7(1)", "HD_8(1)", "HE_6(1)", "HE_7(1)", "E10", "X6", "Y5", "Y4", "Z4", "Y3", "T2", "T1",
    "T0",
];

pub const AUXILIARY: [&str; 2] = ["HA_8(1)", "P10"];

pub const AFFINE: [&str; 16] = [
    "A_1(1)", "A_2(1)", "A_3(1)", "A_4(1)", "A_5(1)", "A_6(1)", "A_7(1)", "A_8(1)", "D_4(1)", "D_5(1)",
    "D_6(1)", "D_7(1)", "D_8(1)", "E_6(1)", "E_7(1)", "E_8(1)",
];

pub const FINITE: [&str; 2] = ["A1", "A2"];

/// Fixed lookup order used by [`identify`].
pub fn index() -> impl Iterator<Item = &'static str> {
    HYPERBOLIC.into_iter().chain(AUXILIARY).chain(AFFINE).chain(FINITE)
}

fn normalize(name: &str) -> String {
    name.chars().filter(|c| *c != '_' && !c.is_whitespace()).flat_map(char::to_uppercase).collect()
}

type Edge = (i32, i32, u32);

fn labeled(name: &str, family: Family, labels: &[i32], edges: &[Edge]) -> CatalogEntry {
    let pos = |l: i32| labels.iter().position(|&x| x == l).expect("edge endpoint is a label");
    let idx: Vec<(usize, usize, u32)> = edges.iter().map(|&(a, b, m)| (pos(a), pos(b), m)).collect();
    let d = DynkinDiagram::from_edges(labels.len(), &idx).expect("catalog edges are in range");
    CatalogEntry {
        name: name.to_string(),
        family,
        gcm: d.to_gcm(),
        labels: labels.iter().map(|l| l.to_string()).collect(),
    }
}

fn range(lo: i32, hi: i32) -> Vec<i32> {
    (lo..=hi).collect()
}

/// Cycle `0-1-...-k-0` (a double edge for `k = 1`).
fn affine_a_edges(k: i32) -> Vec<Edge> {
    if k == 1 {
        return alloc::vec![(0, 1, 2)];
    }
    let mut e: Vec<Edge> = (0..k).map(|i| (i, i + 1, 1)).collect();
    e.push((k, 0, 1));
    e
}

/// `0` and `1` on `2`, chain `2..k-2`, `k-1` and `k` on `k-2`.
fn affine_d_edges(k: i32) -> Vec<Edge> {
    let mut e: Vec<Edge> = alloc::vec![(0, 2, 1), (1, 2, 1)];
    e.extend((2..k - 2).map(|i| (i, i + 1, 1)));
    e.push((k - 2, k - 1, 1));
    e.push((k - 2, k, 1));
    e
}

fn affine_e_edges(k: i32) -> Vec<Edge> {
    match k {
        // center 2 with arms 1-0, 3-4, 5-6
        6 => alloc::vec![(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (2, 5, 1), (5, 6, 1)],
        // line 0..6 with 7 on 3
        7 => {
            let mut e: Vec<Edge> = (0..6).map(|i| (i, i + 1, 1)).collect();
            e.push((3, 7, 1));
            e
        }
        // line 0..7 with 8 on 5
        _ => {
            let mut e: Vec<Edge> = (0..7).map(|i| (i, i + 1, 1)).collect();
            e.push((5, 8, 1));
            e
        }
    }
}

fn with_extension(mut edges: Vec<Edge>) -> Vec<Edge> {
    edges.push((-1, 0, 1));
    edges
}

fn parse_index(s: &str, prefix: &str, suffix: &str) -> Option<i32> {
    s.strip_prefix(prefix)?.strip_suffix(suffix)?.parse().ok()
}

/// Builds the entry for `name`. Underscores, whitespace and case are
/// ignored, so `T_2`, `t2` and `T2` agree.
pub fn get(name: &str) -> Result<CatalogEntry> {
    let key = normalize(name);
    let unknown = || Error::UnknownName(name.to_string());
    if let Some(a) = parse_index(&key, "H2(", ")") {
        if a < 3 {
            return Err(unknown());
        }
        return Ok(labeled(&format!("H2({a})"), Family::Rank2, &[0, 1], &[(0, 1, a as u32)]));
    }
    if key == "E10" || key == "HE8(1)" {
        return Ok(labeled("E10", Family::HE, &range(-1, 8), &with_extension(affine_e_edges(8))));
    }
    if key == "P10" {
        let mut e = with_extension(affine_e_edges(8));
        e.push((-1, 8, 1));
        return Ok(labeled("P10", Family::Auxiliary, &range(-1, 8), &e));
    }
    if let Some(k) = parse_index(&key, "HA", "(1)").filter(|k| (1..=8).contains(k)) {
        let family = if k == 8 { Family::Auxiliary } else { Family::HA };
        return Ok(labeled(&format!("HA_{k}(1)"), family, &range(-1, k), &with_extension(affine_a_edges(k))));
    }
    if let Some(k) = parse_index(&key, "HD", "(1)").filter(|k| (4..=8).contains(k)) {
        return Ok(labeled(&format!("HD_{k}(1)"), Family::HD, &range(-1, k), &with_extension(affine_d_edges(k))));
    }
    if let Some(k) = parse_index(&key, "HE", "(1)").filter(|k| (6..=7).contains(k)) {
        return Ok(labeled(&format!("HE_{k}(1)"), Family::HE, &range(-1, k), &with_extension(affine_e_edges(k))));
    }
    if let Some(k) = parse_index(&key, "A", "(1)").filter(|k| (1..=8).contains(k)) {
        return Ok(labeled(&format!("A_{k}(1)"), Family::Affine, &range(0, k), &affine_a_edges(k)));
    }
    if let Some(k) = parse_index(&key, "D", "(1)").filter(|k| (4..=8).contains(k)) {
        return Ok(labeled(&format!("D_{k}(1)"), Family::Affine, &range(0, k), &affine_d_edges(k)));
    }
    if let Some(k) = parse_index(&key, "E", "(1)").filter(|k| (6..=8).contains(k)) {
        return Ok(labeled(&format!("E_{k}(1)"), Family::Affine, &range(0, k), &affine_e_edges(k)));
    }
    let irregular = |edges: &[Edge], labels: &[i32]| labeled(&key, Family::Irregular, labels, edges);
    Ok(match key.as_str() {
        // star: 2 joined to -1, 0, 1, 3, 4
        "X6" => irregular(&[(2, -1, 1), (2, 0, 1), (2, 1, 1), (2, 3, 1), (2, 4, 1)], &range(-1, 4)),
        // square 0-1-2-3-0, -1 on 0 and 2
        "Y5" => irregular(&[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1), (-1, 0, 1), (-1, 2, 1)], &range(-1, 3)),
        // triangle 0-1-2, -1 on 0 and 2
        "Y4" => irregular(&[(0, 1, 1), (1, 2, 1), (2, 0, 1), (-1, 0, 1), (-1, 2, 1)], &range(-1, 2)),
        // complete graph on four vertices
        "Z4" => irregular(&[(0, 1, 1), (1, 2, 1), (2, 0, 1), (-1, 0, 1), (-1, 1, 1), (-1, 2, 1)], &range(-1, 2)),
        "Y3" => irregular(&[(0, 1, 2), (-1, 0, 1), (-1, 1, 1)], &range(-1, 1)),
        "T2" => irregular(&[(0, 1, 2), (-1, 0, 2), (-1, 1, 2)], &range(-1, 1)),
        "T1" => irregular(&[(0, 1, 2), (-1, 0, 2), (-1, 1, 1)], &range(-1, 1)),
        "T0" => irregular(&[(0, 1, 2), (-1, 0, 2)], &range(-1, 1)),
        "A1" => labeled("A1", Family::Finite, &[1], &[]),
        "A2" => labeled("A2", Family::Finite, &[1, 2], &[(1, 2, 1)]),
        _ => return Err(unknown()),
    })
}

/// Name of the first catalog entry (in [`index`] order) isomorphic to `d`;
/// rank-2 diagrams with a single edge of multiplicity `a >= 3` map to
/// `H2(a)`.
pub fn identify(d: &DynkinDiagram) -> Option<String> {
    Catalog::standard().identify(d)
}

/// An explicit set of entries. [`Catalog::standard`] is the built-in table;
/// other instances serve fault-injection and comparison runs.
#[derive(Debug, Clone)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn standard() -> Self {
        Catalog { entries: index().map(|n| get(n).expect("index names resolve")).collect() }
    }

    pub fn from_entries(entries: Vec<CatalogEntry>) -> Self {
        Catalog { entries }
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn entries_mut(&mut self) -> &mut [CatalogEntry] {
        &mut self.entries
    }

    pub fn get(&self, name: &str) -> Result<&CatalogEntry> {
        let key = normalize(name);
        let key = if key == "HE8(1)" { String::from("E10") } else { key };
        self.entries
            .iter()
            .find(|e| normalize(&e.name) == key)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn identify(&self, d: &DynkinDiagram) -> Option<String> {
        let n = d.vertex_count();
        let form = canonical_form(d).ok()?;
        for e in self.entries.iter().filter(|e| e.rank() == n) {
            if canonical_form(&e.diagram()).ok()? == form {
                return Some(e.name.clone());
            }
        }
        if n == 2 && d.mult(0, 1) >= 3 {
            return Some(format!("H2({})", d.mult(0, 1)));
        }
        None
    }

    /// Isomorphism witness from the named entry onto `d`.
    pub fn matches(&self, name: &str, d: &DynkinDiagram) -> Result<Option<Vec<usize>>> {
        Ok(are_isomorphic(&self.get(name)?.diagram(), d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{classify, connected_components, DiagramType};
    use alloc::vec;

    #[test]
    fn index_resolves_and_names_round_trip() {
        for name in index() {
            assert_eq!(get(name).unwrap().name, name, "{name}");
        }
    }

    #[test]
    fn e10_layout() {
        let e = get("E10").unwrap();
        assert_eq!(e.rank(), 10);
        let d = e.diagram();
        let (v8, v5) = (e.index_of("8").unwrap(), e.index_of("5").unwrap());
        assert_eq!(d.mult(v8, v5), 1);
        assert_eq!(d.degree(v8), 1);
        assert_eq!(get("HE_8(1)").unwrap(), e);
        assert_eq!(e.labels, (-1..=8).map(|i| i.to_string()).collect::<Vec<_>>());
    }

    #[test]
    fn ha1_layout() {
        let e = get("HA_1(1)").unwrap();
        let d = e.diagram();
        let (m1, z, one) = (e.index_of("-1").unwrap(), e.index_of("0").unwrap(), e.index_of("1").unwrap());
        assert_eq!(d.mult(z, one), 2);
        assert_eq!(d.mult(m1, z), 1);
        assert_eq!(d.mult(m1, one), 0);
    }

    #[test]
    fn rank_two_family() {
        let e = get("H2(5)").unwrap();
        assert_eq!(e.gcm.rows(), vec![vec![2, -5], vec![-5, 2]]);
        assert_eq!(classify(&e.gcm).unwrap(), DiagramType::Indefinite { hyperbolic: true });
        assert!(get("H2(2)").is_err());
    }

    #[test]
    fn unknown_name() {
        assert_eq!(get("HQ_3(1)"), Err(Error::UnknownName("HQ_3(1)".into())));
        assert!(get("HA_9(1)").is_err());
    }

    #[test]
    fn aliases_and_spelling() {
        assert_eq!(get("T_2").unwrap().name, "T2");
        assert_eq!(get("ha_3(1)").unwrap().name, "HA_3(1)");
    }

    #[test]
    fn hyperbolic_entries_classify() {
        for name in HYPERBOLIC {
            let e = get(name).unwrap();
            assert_eq!(classify(&e.gcm).unwrap(), DiagramType::Indefinite { hyperbolic: true }, "{name}");
        }
        for name in AUXILIARY {
            let e = get(name).unwrap();
            assert_eq!(classify(&e.gcm).unwrap(), DiagramType::Indefinite { hyperbolic: false }, "{name}");
        }
        for name in AFFINE {
            assert_eq!(classify(&get(name).unwrap().gcm).unwrap(), DiagramType::Affine, "{name}");
        }
    }

    #[test]
    fn extension_vertex_deletion_gives_the_affine_diagram() {
        let pairs = [
            ("HA_1(1)", "A_1(1)"),
            ("HA_4(1)", "A_4(1)"),
            ("HA_8(1)", "A_8(1)"),
            ("HD_4(1)", "D_4(1)"),
            ("HD_8(1)", "D_8(1)"),
            ("HE_6(1)", "E_6(1)"),
            ("HE_7(1)", "E_7(1)"),
            ("E10", "E_8(1)"),
        ];
        for (hx, x) in pairs {
            let h = get(hx).unwrap();
            let ext = h.index_of("-1").unwrap();
            let z = h.index_of("0").unwrap();
            let d = h.diagram();
            // -1 is a pendant on 0
            assert_eq!(d.degree(ext), 1);
            assert_eq!(d.mult(ext, z), 1);
            let rest: Vec<usize> = (0..h.rank()).filter(|&i| i != ext).collect();
            let sub = DynkinDiagram::from_gcm(&h.gcm.principal(&rest)).unwrap();
            assert!(are_isomorphic(&sub, &get(x).unwrap().diagram()).is_some(), "{hx}");
        }
    }

    #[test]
    fn irregular_shapes() {
        let x6 = get("X6").unwrap().diagram();
        assert_eq!(x6.degree(get("X6").unwrap().index_of("2").unwrap()), 5);
        let z4 = get("Z4").unwrap().diagram();
        assert!((0..4).all(|v| z4.degree(v) == 3));
        // T1 and T2 differ in their multiset of multiplicities
        assert_ne!(
            canonical_form(&get("T1").unwrap().diagram()).unwrap(),
            canonical_form(&get("T2").unwrap().diagram()).unwrap()
        );
    }

    #[test]
    fn e10_minus_zero_splits() {
        let e = get("E10").unwrap();
        let z = e.index_of("0").unwrap();
        let rest: Vec<usize> = (0..10).filter(|&i| i != z).collect();
        let mut sizes: Vec<usize> = connected_components(&e.diagram(), &rest).iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 8]);
    }

    #[test]
    fn identify_is_first_match() {
        for name in HYPERBOLIC.iter().chain(&AUXILIARY) {
            let d = get(name).unwrap().diagram();
            let n = d.vertex_count();
            let rev: Vec<usize> = (0..n).rev().collect();
            assert_eq!(identify(&d.permute(&rev)).as_deref(), Some(*name));
        }
        assert_eq!(identify(&get("H2(7)").unwrap().diagram()).as_deref(), Some("H2(7)"));
        // a path on five vertices with a long tail is no catalog entry
        let tree = DynkinDiagram::from_edges(7, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1), (1, 6, 1)])
            .unwrap();
        assert_eq!(identify(&tree), None);
    }

    #[test]
    fn catalog_lookup_and_matches() {
        let c = Catalog::standard();
        assert_eq!(c.get("he_8(1)").unwrap().name, "E10");
        let d = get("Y4").unwrap().diagram();
        assert!(c.matches("Y4", &d).unwrap().is_some());
        assert!(c.matches("Z4", &d).unwrap().is_none());
    }
}
