//! Explicit constructions placing each simply laced hyperbolic diagram
//! inside `E10`.
//!
//! A recipe names a host catalog lattice and a word of construction steps
//! applied on it. Hosts other than `E10` are themselves recipe targets, so
//! the result is composed with the host's own embedding. Every intermediate
//! and final result passes [`check_root_subdiagram`], and the final Gram
//! matrix must be isomorphic to the target's.
//!
//! Shrinking positions are explicit: which chain gets shrunk matters (in
//! `HD_8(1)` shrinking the two spine vertices next to the far fork gives
//! `D_8(1)`, not `HD_7(1)`).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{
    check_root_subdiagram, compose, principle_a, principle_b, principle_b_prime,
    principle_c, principle_d, Embedding, HyperbolicExtension,
};
use crate::catalog::{self, CatalogEntry};
use crate::error::{Error, Result};

/// One construction step. Positions refer to the current root list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    Identity,
    A,
    B(i64),
    BPrime(Vec<i64>),
    C(Vec<usize>),
    D(Vec<usize>),
    /// `m delta + alpha_1, delta + alpha_0, alpha_{-1}` in `HA_1(1)`.
    T(u32),
    /// `alpha_{-1}, (a - 1) delta + alpha_0` in `HA_1(1)`.
    Rank2(u32),
}

impl core::fmt::Display for Step {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        fn list<T: core::fmt::Display>(f: &mut core::fmt::Formatter<'_>, xs: &[T]) -> core::fmt::Result {
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            Ok(())
        }
        match self {
            Step::Identity => f.write_str("id"),
            Step::A => f.write_str("A"),
            Step::B(p) => write!(f, "B({p})"),
            Step::BPrime(ps) => {
                f.write_str("B'{")?;
                list(f, ps)?;
                f.write_str("}")
            }
            Step::C(c) => {
                f.write_str("C[")?;
                list(f, c)?;
                f.write_str("]")
            }
            Step::D(d) => {
                f.write_str("D[")?;
                list(f, d)?;
                f.write_str("]")
            }
            Step::T(m) => write!(f, "T({m})"),
            Step::Rank2(a) => write!(f, "H2({a})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recipe {
    pub target: String,
    pub host: &'static str,
    pub steps: Vec<Step>,
}

impl core::fmt::Display for Recipe {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{} in {}:", self.target, self.host)?;
        for s in &self.steps {
            write!(f, " {s}")?;
        }
        Ok(())
    }
}

fn c34(times: usize) -> impl Iterator<Item = Step> {
    core::iter::repeat_n(Step::C(vec![3, 4]), times)
}

fn c12(times: usize) -> impl Iterator<Item = Step> {
    core::iter::repeat_n(Step::C(vec![1, 2]), times)
}

/// The construction word for `target`, if one is known.
///
/// Accepts the hyperbolic catalog names, the auxiliary lattices `HA_8(1)`
/// and `P10`, and `H2(a)` for `a >= 3`.
pub fn recipe(target: &str) -> Option<Recipe> {
    let canonical = catalog::get(target).ok()?.name;
    let (host, steps): (&'static str, Vec<Step>) = match canonical.as_str() {
        "E10" => ("E10", vec![Step::Identity]),
        "HD_8(1)" => ("E10", vec![Step::A]),
        "HD_7(1)" => ("E10", [Step::A].into_iter().chain(c34(1)).collect()),
        "HD_6(1)" => ("E10", [Step::A].into_iter().chain(c34(2)).collect()),
        "HD_5(1)" => ("E10", [Step::A].into_iter().chain(c34(3)).collect()),
        "HD_4(1)" => ("E10", [Step::A].into_iter().chain(c34(3)).chain([Step::C(vec![2, 3])]).collect()),
        "HA_8(1)" => ("E10", vec![Step::B(7)]),
        "P10" => ("E10", vec![Step::B(8)]),
        "HA_7(1)" => ("E10", [Step::B(7)].into_iter().chain(c12(1)).collect()),
        "HA_6(1)" => ("E10", [Step::B(7)].into_iter().chain(c12(2)).collect()),
        "HA_5(1)" => ("E10", [Step::B(7)].into_iter().chain(c12(3)).collect()),
        "HA_4(1)" => ("E10", [Step::B(7)].into_iter().chain(c12(4)).collect()),
        "HA_3(1)" => ("E10", [Step::B(7)].into_iter().chain(c12(4)).chain(c34(1)).collect()),
        "HA_2(1)" => (
            "E10",
            [Step::B(7)].into_iter().chain(c12(4)).chain(c34(1)).chain([Step::C(vec![0, 1])]).collect(),
        ),
        "HA_1(1)" => (
            "E10",
            [Step::B(7)]
                .into_iter()
                .chain(c12(4))
                .chain(c34(1))
                .chain([Step::C(vec![0, 1]), Step::C(vec![0, 2])])
                .collect(),
        ),
        "HE_7(1)" => ("E10", vec![Step::B(7), Step::D(vec![1])]),
        "HE_6(1)" => ("E10", vec![Step::B(8), Step::D(vec![1, 2])]),
        "X6" => ("HD_4(1)", vec![Step::A]),
        "Y5" => ("HA_3(1)", vec![Step::B(2)]),
        "Y4" => ("HA_2(1)", vec![Step::B(2)]),
        "Y3" => ("HA_1(1)", vec![Step::B(1)]),
        "Z4" => ("HA_2(1)", vec![Step::BPrime(vec![1, 2])]),
        "T2" => ("HA_1(1)", vec![Step::T(2)]),
        "T1" => ("HA_1(1)", vec![Step::T(1)]),
        "T0" => ("HA_1(1)", vec![Step::T(0)]),
        name => {
            let a = name.strip_prefix("H2(")?.strip_suffix(')')?.parse().ok()?;
            ("HA_1(1)", vec![Step::Rank2(a)])
        }
    };
    Some(Recipe { target: canonical, host, steps })
}

fn extension_of(host: &CatalogEntry) -> Result<HyperbolicExtension> {
    HyperbolicExtension::from_lattice(host.lattice())
}

fn ha1() -> Result<HyperbolicExtension> {
    extension_of(&catalog::get("HA_1(1)")?)
}

/// `m delta + alpha_1, delta + alpha_0, alpha_{-1}` in `HA_1(1)`. The
/// outer pair pairs to `-m`; the other pairs give double edges.
pub fn t_family(m: u32) -> Result<Embedding> {
    t_in(&ha1()?, m)
}

fn t_in(hx: &HyperbolicExtension, m: u32) -> Result<Embedding> {
    let l = hx.lattice();
    let delta = hx.null_root();
    let one = hx.index_of(1).ok_or(Error::BadVertex(1))?;
    let b1 = l.simple_root(one).add_scaled(i64::from(m), delta)?;
    let b0 = l.alpha("0")?.add(delta)?;
    let bm = l.alpha("-1")?;
    let e = check_root_subdiagram(l, vec![b1, b0, bm])?
        .with_labels(vec!["1".to_string(), "0".to_string(), "-1".to_string()])?;
    Ok(if m <= 2 { e.with_target(&format!("T{m}")) } else { e })
}

/// `alpha_{-1}, (a - 1) delta + alpha_0` in `HA_1(1)`, pairing to `-a`.
pub fn rank2_embedding(a: u32) -> Result<Embedding> {
    if a < 3 {
        return Err(Error::BadParameter(i64::from(a)));
    }
    rank2_in(&ha1()?, a)
}

fn rank2_in(hx: &HyperbolicExtension, a: u32) -> Result<Embedding> {
    let l = hx.lattice();
    let b1 = l.alpha("-1")?;
    let b2 = l.alpha("0")?.add_scaled(i64::from(a) - 1, hx.null_root())?;
    let e = check_root_subdiagram(l, vec![b1, b2])?;
    Ok(e.with_target(&format!("H2({a})")))
}

fn run(host: &CatalogEntry, steps: &[Step]) -> Result<Embedding> {
    let mut cur: Option<Embedding> = None;
    for step in steps {
        cur = Some(match (step, cur) {
            (Step::Identity, None) => Embedding::identity(&host.lattice())?,
            (Step::A, None) => principle_a(&extension_of(host)?)?,
            (Step::B(p), None) => principle_b(&extension_of(host)?, *p)?,
            (Step::BPrime(ps), None) => principle_b_prime(&extension_of(host)?, ps)?,
            (Step::T(m), None) => t_in(&extension_of(host)?, *m)?,
            (Step::Rank2(a), None) => {
                if *a < 3 {
                    return Err(Error::BadParameter(i64::from(*a)));
                }
                rank2_in(&extension_of(host)?, *a)?
            }
            (Step::C(chain), Some(e)) => principle_c(&e, chain)?,
            (Step::D(del), Some(e)) => principle_d(&e, del)?,
            (s, _) => return Err(Error::RecipeMismatch(format!("misplaced step {s}"))),
        });
    }
    cur.ok_or_else(|| Error::RecipeMismatch(String::from("empty recipe")))
}

/// Realizes `target` inside `E10` and aligns the roots with the target's
/// catalog GCM, so `gram()` equals that GCM entry for entry.
pub fn prove_main(target: &str) -> Result<Embedding> {
    let r = recipe(target).ok_or_else(|| Error::UnknownTarget(target.to_string()))?;
    let entry = catalog::get(&r.target)?;
    let host = catalog::get(r.host)?;
    let local = run(&host, &r.steps)?;
    let in_e10 = if r.host == "E10" {
        local
    } else {
        // `outer` is aligned to the host's catalog GCM, which is exactly
        // the lattice `local` lives in
        compose(&prove_main(r.host)?, &local)?
    };
    in_e10.aligned_to(&entry)
}

/// The chain of recipes used by [`prove_main`], outermost host last.
pub fn trace(target: &str) -> Result<Vec<Recipe>> {
    let mut out = Vec::new();
    let mut name = String::from(target);
    loop {
        let r = recipe(&name).ok_or_else(|| Error::UnknownTarget(name.clone()))?;
        let host = r.host;
        out.push(r);
        if host == "E10" {
            return Ok(out);
        }
        name = host.to_string();
    }
}
