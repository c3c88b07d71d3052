//! Subcommand bodies. Each returns its stdout text and an exit status so
//! the binary stays a thin shell around them.

use std::fmt::Write;
use std::path::Path;

use kmroot_core::embed::trace;
use kmroot_core::orth::{extend_direct_sum_with_bound, find_orthogonal_real_roots, orthogonal_sublattice};
use kmroot_core::{
    classify, enumerate_hyperbolic_simply_laced, get, identify, prove_main, DynkinDiagram, Gcm, RootLattice,
    RootVector,
};
use thiserror::Error;

use crate::format::{parse_gcm, FormatError, GcmFile};
use crate::render;
use crate::verify::{verify_paper, Options};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("`{0}` is neither a catalog name nor a readable GCM file")]
    UnknownName(String),
    #[error(transparent)]
    Core(#[from] kmroot_core::Error),
}

/// 0 on success, 1 when a check or search comes back negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Emit {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum RenderFormat {
    Dot,
    Ascii,
}

/// A diagram from a GCM file or a catalog name.
pub struct Loaded {
    pub name: String,
    pub gcm: Gcm,
    pub labels: Option<Vec<String>>,
}

impl Loaded {
    pub fn diagram(&self) -> Result<DynkinDiagram, CliError> {
        let d = DynkinDiagram::from_gcm(&self.gcm)?;
        Ok(match &self.labels {
            Some(l) => d.with_labels(l.clone())?,
            None => d,
        })
    }
}

pub fn load_file(path: &Path) -> Result<Loaded, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: shown.clone(), source })?;
    let parsed = parse_gcm(&text).map_err(|source| CliError::Format { path: shown.clone(), source })?;
    Ok(Loaded { name: shown, gcm: parsed.gcm, labels: parsed.labels })
}

/// Catalog names win over paths.
pub fn load(arg: &str) -> Result<Loaded, CliError> {
    if let Ok(e) = get(arg) {
        return Ok(Loaded { name: e.name, gcm: e.gcm, labels: Some(e.labels) });
    }
    let path = Path::new(arg);
    if path.exists() {
        return load_file(path);
    }
    Err(CliError::UnknownName(arg.to_string()))
}

fn fmt_matrix(rows: &[Vec<i64>]) -> String {
    let width = rows.iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1);
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        writeln!(out, "  [{}]", cells.join(" ")).unwrap();
    }
    out
}

pub fn cmd_classify(path: &Path) -> Result<Output, CliError> {
    let l = load_file(path)?;
    let t = classify(&l.gcm)?;
    let mut out = String::new();
    writeln!(out, "rank: {}", l.gcm.rank()).unwrap();
    writeln!(out, "type: {t}").unwrap();
    writeln!(out, "det: {}", l.gcm.det()?).unwrap();
    writeln!(out, "connected: {}", if l.gcm.is_connected() { "yes" } else { "no" }).unwrap();
    Ok(Output::ok(out))
}

pub fn cmd_identify(arg: &str) -> Result<Output, CliError> {
    let l = load(arg)?;
    Ok(match identify(&l.diagram()?) {
        Some(name) => Output::ok(format!("{name}\n")),
        None => Output { text: "no catalog match\n".into(), code: 1 },
    })
}

pub fn cmd_enumerate(rank: usize, emit: Emit) -> Result<Output, CliError> {
    let found = enumerate_hyperbolic_simply_laced(rank)?;
    let named: Vec<(String, DynkinDiagram)> = found
        .into_iter()
        .enumerate()
        .map(|(i, d)| (identify(&d).unwrap_or_else(|| format!("rank{rank}_{i}")), d))
        .collect();
    let text = match emit {
        Emit::Text => {
            let mut out = String::new();
            for (name, d) in &named {
                let edges: Vec<String> = d.edges().iter().map(|(i, j, m)| format!("{i}-{j}x{m}")).collect();
                writeln!(out, "{name}: {}", edges.join(" ")).unwrap();
            }
            writeln!(out, "{} diagrams of rank {rank}", named.len()).unwrap();
            out
        }
        Emit::Json => {
            let files: Vec<GcmFile> = named.iter().map(|(_, d)| GcmFile::from_gcm(&d.to_gcm(), None)).collect();
            let mut s = serde_json::to_string_pretty(&files).expect("GCM files serialize");
            s.push('\n');
            s
        }
        Emit::Dot => named.iter().map(|(name, d)| render::dot(name, d)).collect(),
    };
    Ok(Output::ok(text))
}

pub fn cmd_roots(host: &str, height: u32) -> Result<Output, CliError> {
    let l = load(host)?;
    let mut lattice = RootLattice::new(l.gcm)?;
    if let Some(labels) = l.labels {
        lattice = lattice.with_labels(labels)?;
    }
    let mut roots = Vec::new();
    if lattice.norm_test_applies() {
        roots.extend(lattice.real_roots_up_to_height(height)?);
    } else {
        let mut buf = vec![0i64; lattice.rank()];
        lattice.for_each_box_vector(&mut buf, 0, i64::from(height), &mut |v| {
            let x = RootVector::new(v.to_vec());
            if lattice.is_positive_real_root_descent(&x)? {
                roots.push(x);
            }
            Ok(())
        })?;
        roots.sort();
    }
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.cmp(a)));
    let mut out = String::new();
    for r in &roots {
        writeln!(out, "{r}").unwrap();
    }
    Ok(Output::ok(out))
}

pub fn cmd_embed(target: &str, show_trace: bool, emit: Emit) -> Result<Output, CliError> {
    let e = prove_main(target)?;
    let name = e.target().unwrap_or(target).to_string();
    if emit == Emit::Dot {
        return Ok(Output::ok(render::dot(&name, &e.diagram())));
    }
    let recipes = trace(target)?;
    let mut out = String::new();
    writeln!(out, "target: {name}").unwrap();
    let word: Vec<String> = recipes.iter().rev().map(|r| r.to_string()).collect();
    writeln!(out, "word: {}", word.join("; ")).unwrap();
    if show_trace {
        for r in recipes.iter().rev() {
            let step = prove_main(&r.target)?;
            writeln!(out, "  {r}").unwrap();
            for (label, root) in step.labels().iter().zip(step.roots()) {
                writeln!(out, "      {label}: {root}").unwrap();
            }
        }
    }
    let host_labels = e.host().labels().join(", ");
    writeln!(out, "roots in E10 (coordinates on alpha_{{{host_labels}}}):").unwrap();
    for (label, root) in e.labels().iter().zip(e.roots()) {
        writeln!(out, "  {label}: {root}").unwrap();
    }
    writeln!(out, "gram:").unwrap();
    out.push_str(&fmt_matrix(&e.gram().rows()));
    let verdict = match get(&name) {
        Ok(entry) => kmroot_core::are_isomorphic(&entry.diagram(), &e.diagram()).is_some(),
        Err(_) => false,
    };
    writeln!(out, "isomorphic to {name}: {}", if verdict { "yes" } else { "no" }).unwrap();
    Ok(Output { text: out, code: if verdict { 0 } else { 1 } })
}

/// `sum_j c_j Lambda_j` with the largest label first.
fn weight_combination(l: &RootLattice, x: &RootVector) -> Result<String, CliError> {
    let c = l.pairings_with_simple(x)?;
    let mut terms = Vec::new();
    for j in (0..c.len()).rev() {
        let (k, label) = (c[j], &l.labels()[j]);
        if k == 0 {
            continue;
        }
        let sign = if k < 0 { "-" } else { "+" };
        let mag = if k.abs() == 1 { String::new() } else { format!("{} ", k.abs()) };
        terms.push((sign, format!("{mag}Lambda_{label}")));
    }
    if terms.is_empty() {
        return Ok("0".into());
    }
    let mut s = String::new();
    for (i, (sign, t)) in terms.iter().enumerate() {
        match (i, *sign) {
            (0, "-") => write!(s, "-{t}").unwrap(),
            (0, _) => s.push_str(t),
            _ => write!(s, " {sign} {t}").unwrap(),
        }
    }
    Ok(s)
}

pub fn cmd_orthogonal(target: &str, bound: u32) -> Result<Output, CliError> {
    let e = prove_main(target)?;
    let l = e.host().clone();
    let sub = orthogonal_sublattice(&e)?;
    let mut out = String::new();
    writeln!(out, "target: {}", e.target().unwrap_or(target)).unwrap();
    writeln!(out, "complement rank: {}", sub.rank()).unwrap();
    writeln!(out, "basis:").unwrap();
    for b in sub.basis() {
        writeln!(out, "  {b} = {}", weight_combination(&l, b)?).unwrap();
    }
    if sub.rank() > 0 {
        writeln!(out, "complement gram:").unwrap();
        out.push_str(&fmt_matrix(sub.gram()));
    }
    let found = find_orthogonal_real_roots(&e, bound)?;
    writeln!(out, "orthogonal positive real roots: {}", found.len()).unwrap();
    for r in &found {
        writeln!(out, "  {} = {r}", weight_combination(&l, r)?).unwrap();
    }
    for extra in ["A2", "A1"] {
        match extend_direct_sum_with_bound(&e, extra, bound) {
            Ok(x) => {
                writeln!(out, "extension: {}", x.target().unwrap_or(extra)).unwrap();
                writeln!(out, "block gram:").unwrap();
                out.push_str(&fmt_matrix(&x.gram().rows()));
                return Ok(Output::ok(out));
            }
            Err(kmroot_core::Error::NoExtension(_)) => continue,
            Err(err) => return Err(err.into()),
        }
    }
    writeln!(out, "extension: none").unwrap();
    Ok(Output { text: out, code: 1 })
}

pub fn cmd_verify_paper(json: bool, opts: &Options) -> Output {
    let report = verify_paper(&kmroot_core::Catalog::standard(), opts);
    let text = if json { report.to_json() } else { report.to_text() };
    Output { text, code: if report.passed { 0 } else { 1 } }
}

pub fn cmd_render(arg: &str, format: RenderFormat) -> Result<Output, CliError> {
    let l = load(arg)?;
    let d = l.diagram()?;
    Ok(Output::ok(match format {
        RenderFormat::Dot => render::dot(&l.name, &d),
        RenderFormat::Ascii => render::ascii(&l.name, &d),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_combinations_read_naturally() {
        let l = get("E10").unwrap().lattice();
        let w = l.fundamental_weights().unwrap();
        let gamma = kmroot_core::WeightVector::combination(&[(1, &w[8]), (-3, &w[1])]).unwrap().to_root_vector().unwrap();
        assert_eq!(weight_combination(&l, &gamma).unwrap(), "Lambda_7 - 3 Lambda_0");
        let neg = gamma.neg();
        assert_eq!(weight_combination(&l, &neg).unwrap(), "-Lambda_7 + 3 Lambda_0");
        assert_eq!(weight_combination(&l, &RootVector::zero(10)).unwrap(), "0");
    }

    #[test]
    fn roots_outside_the_norm_test_scope_use_descent() {
        // HA_8(1) is indefinite but not hyperbolic
        let out = cmd_roots("HA_8(1)", 2).unwrap();
        let lines: Vec<&str> = out.text.lines().collect();
        assert_eq!(lines.len(), 10 + 10);
        assert!(lines[0].starts_with('(') && lines[0].contains('1'));
    }

    #[test]
    fn load_prefers_catalog_names() {
        assert_eq!(load("e10").unwrap().name, "E10");
        assert!(matches!(load("no/such/file"), Err(CliError::UnknownName(_))));
    }
}
