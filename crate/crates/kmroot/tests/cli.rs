use std::io::Write;
use std::process::{Command, Output};

use kmroot::format::{parse_gcm, GcmFile};
use kmroot::verify::{verify_paper, Options};
use kmroot_core::{classify, get, is_hyperbolic, Catalog, DiagramType, Gcm};

fn kmroot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kmroot")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gcm_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn classify_e10_from_json() {
    let e = get("E10").unwrap();
    let f = gcm_file(&serde_json::to_string(&GcmFile::from_gcm(&e.gcm, Some(&e.labels))).unwrap());
    let o = kmroot(&["classify", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("type: indefinite, hyperbolic"), "{text}");
    assert!(text.contains("det: -1"), "{text}");
    assert!(text.contains("connected: yes"));
}

#[test]
fn classify_affine_a1_from_plain_text() {
    let f = gcm_file("2\n 2 -2\n-2  2\n");
    let o = kmroot(&["classify", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("type: affine"));
}

#[test]
fn malformed_matrix_is_a_usage_error() {
    let f = gcm_file("3\n2 -1 0\n-1 2 -1\n0 -1\n");
    let o = kmroot(&["classify", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 4, column 5"), "{err}");
}

#[test]
fn unknown_names_exit_2() {
    assert_eq!(kmroot(&["render", "Q17"]).status.code(), Some(2));
    assert_eq!(kmroot(&["embed", "--target", "Q17"]).status.code(), Some(2));
    assert_eq!(kmroot(&["enumerate", "--rank", "11"]).status.code(), Some(2));
    assert_eq!(kmroot(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn identify_from_file_and_name() {
    let f = gcm_file("3\n2 -2 -2\n-2 2 -2\n-2 -2 2\n");
    let o = kmroot(&["identify", f.path().to_str().unwrap()]);
    assert_eq!(stdout(&o), "T2\n");
    let unmatched = gcm_file("3\n2 -1 0\n-1 2 -1\n0 -1 2\n");
    assert_eq!(kmroot(&["identify", unmatched.path().to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn enumerate_json_round_trips() {
    let o = kmroot(&["enumerate", "--rank", "3", "--emit", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let files: Vec<GcmFile> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(files.len(), 5);
    for f in files {
        let g = parse_gcm(&serde_json::to_string(&f).unwrap()).unwrap().gcm;
        assert!(is_hyperbolic(&g).unwrap());
    }
}

#[test]
fn enumerate_text_names_catalog_entries() {
    let text = stdout(&kmroot(&["enumerate", "--rank", "10"]));
    assert!(text.contains("E10: ") && text.contains("HD_8(1): "), "{text}");
    assert!(text.ends_with("2 diagrams of rank 10\n"));
}

#[test]
fn roots_print_one_vector_per_line() {
    let text = stdout(&kmroot(&["roots", "--host", "E10", "--height", "2"]));
    // ten simple roots and one per edge
    assert_eq!(text.lines().count(), 19);
    assert!(text.lines().all(|l| l.starts_with('(') && l.matches(',').count() == 9));
}

#[test]
fn embed_reports_word_roots_and_verdict() {
    let o = kmroot(&["embed", "--target", "HE_7(1)"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("word: HE_7(1) in E10: B(7) D[1]"), "{text}");
    assert!(text.contains("isomorphic to HE_7(1): yes"));
    let dot = stdout(&kmroot(&["embed", "--target", "T2", "--emit", "dot"]));
    assert!(dot.starts_with("graph \"T2\""));
    assert_eq!(dot.matches("dir=both").count(), 3);
}

#[test]
fn orthogonal_he7_finds_the_weight_root() {
    let o = kmroot(&["orthogonal", "--target", "HE_7(1)"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("complement rank: 1"));
    assert!(text.contains("orthogonal positive real roots: 1\n  Lambda_7 - 3 Lambda_0 = "), "{text}");
    assert!(text.contains("extension: HE_7(1) + A1"));
}

#[test]
fn render_formats() {
    let ascii = stdout(&kmroot(&["render", "HA_1(1)"]));
    assert_eq!(ascii, "HA_1(1) (3 vertices)\n  -1 --- 0 <=> 1\n");
    let dot = stdout(&kmroot(&["render", "E10", "--format", "dot"]));
    assert_eq!(dot.matches(" -- ").count(), 9);
}

#[test]
fn verify_paper_passes_and_is_deterministic() {
    let a = kmroot(&["verify-paper"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert!(stdout(&a).ends_with("6/6 checks passed\n"));
    let b = Command::new(env!("CARGO_BIN_EXE_kmroot")).arg("verify-paper").env("KMROOT_THREADS", "1").output().unwrap();
    assert_eq!(a.stdout, b.stdout);
    let j1 = kmroot(&["verify-paper", "--json"]);
    let j2 = kmroot(&["verify-paper", "--json"]);
    assert_eq!(j1.stdout, j2.stdout);
    let v: serde_json::Value = serde_json::from_slice(&j1.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 6);
}

#[test]
fn corrupted_catalog_fails_with_the_named_target() {
    let mut catalog = Catalog::standard();
    let x6 = catalog.entries_mut().iter_mut().find(|e| e.name == "X6").unwrap();
    // X6 is a star; cut one spoke
    let mut rows = x6.gcm.rows();
    let (hub, leaf) = (0..6).flat_map(|i| (0..6).map(move |j| (i, j))).find(|&(i, j)| rows[i][j] == -1).unwrap();
    rows[hub][leaf] = 0;
    rows[leaf][hub] = 0;
    x6.gcm = Gcm::new(&rows).unwrap();
    assert_ne!(classify(&x6.gcm).unwrap(), DiagramType::Indefinite { hyperbolic: true });

    let report = verify_paper(&catalog, &Options { threads: 2, timings: false });
    assert!(!report.passed);
    let embed = report.checks.iter().find(|c| c.name.starts_with("3 ")).unwrap();
    assert!(!embed.passed);
    assert!(embed.details.iter().any(|d| d.starts_with("X6:")), "{:?}", embed.details);
    let classification = report.checks.iter().find(|c| c.name.starts_with("1 ")).unwrap();
    assert!(classification.details.iter().any(|d| d.starts_with("X6:")));
}
