//! DOT and ASCII drawings of Dynkin diagrams.
//!
//! A pair joined by `m >= 2` edges is drawn as `m` parallel lines with
//! arrowheads pointing at both ends.

use std::fmt::Write;

use kmroot_core::DynkinDiagram;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn dot(name: &str, d: &DynkinDiagram) -> String {
    let mut out = String::new();
    writeln!(out, "graph {} {{", quote(name)).unwrap();
    writeln!(out, "  node [shape=circle, fontsize=10];").unwrap();
    for v in 0..d.vertex_count() {
        writeln!(out, "  v{v} [label={}];", quote(&d.label(v))).unwrap();
    }
    for (i, j, m) in d.edges() {
        match m {
            1 => writeln!(out, "  v{i} -- v{j};").unwrap(),
            _ => {
                let color = vec!["black"; m.min(4) as usize].join(":");
                let label = if m > 2 { format!(", label=\"{m}\"") } else { String::new() };
                writeln!(out, "  v{i} -- v{j} [color=\"{color}\", dir=both{label}];").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

fn glyph(m: u32) -> String {
    match m {
        1 => "---".into(),
        2 => "<=>".into(),
        _ => format!("<{m}>"),
    }
}

/// Longest simple path, ties broken by the smallest vertex sequence.
fn longest_path(d: &DynkinDiagram) -> Vec<usize> {
    fn grow(d: &DynkinDiagram, path: &mut Vec<usize>, best: &mut Vec<usize>) {
        if path.len() > best.len() {
            *best = path.clone();
        }
        let last = *path.last().unwrap();
        for next in 0..d.vertex_count() {
            if d.mult(last, next) > 0 && !path.contains(&next) {
                path.push(next);
                grow(d, path, best);
                path.pop();
            }
        }
    }
    let mut best = Vec::new();
    // exhaustive path search is only sensible for small diagrams
    if d.vertex_count() <= 16 {
        for start in 0..d.vertex_count() {
            grow(d, &mut vec![start], &mut best);
        }
    } else if d.vertex_count() > 0 {
        best.push(0);
    }
    best
}

/// The longest path on one line, then every other edge and any isolated
/// vertex on lines of their own.
pub fn ascii(name: &str, d: &DynkinDiagram) -> String {
    let mut out = String::new();
    let n = d.vertex_count();
    writeln!(out, "{name} ({n} vertices)").unwrap();
    let path = longest_path(d);
    let mut line = String::new();
    for (k, &v) in path.iter().enumerate() {
        if k > 0 {
            write!(line, " {} ", glyph(d.mult(path[k - 1], v))).unwrap();
        }
        line.push_str(&d.label(v));
    }
    writeln!(out, "  {line}").unwrap();
    let on_path = |i: usize, j: usize| path.windows(2).any(|w| (w[0], w[1]) == (i, j) || (w[0], w[1]) == (j, i));
    for (i, j, m) in d.edges() {
        if !on_path(i, j) {
            writeln!(out, "  {} {} {}", d.label(i), glyph(m), d.label(j)).unwrap();
        }
    }
    for v in 0..n {
        if !path.contains(&v) && d.degree(v) == 0 {
            writeln!(out, "  {}", d.label(v)).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use kmroot_core::get;

    #[test]
    fn e10_is_a_line_with_one_branch() {
        let e = get("E10").unwrap();
        let text = ascii("E10", &e.diagram());
        assert_eq!(
            text,
            "E10 (10 vertices)\n  -1 --- 0 --- 1 --- 2 --- 3 --- 4 --- 5 --- 6 --- 7\n  5 --- 8\n"
        );
    }

    #[test]
    fn t2_is_a_triangle_of_double_edges() {
        let d = get("T2").unwrap().diagram();
        let text = dot("T2", &d);
        assert_eq!(text.matches("color=\"black:black\", dir=both").count(), 3);
        let a = ascii("T2", &d);
        assert_eq!(a.matches("<=>").count(), 3);
    }

    #[test]
    fn ha1_has_a_pendant_and_a_double_edge() {
        let d = get("HA_1(1)").unwrap().diagram();
        let text = dot("HA_1(1)", &d);
        assert_eq!(text.matches(" -- ").count(), 2);
        assert_eq!(text.matches("dir=both").count(), 1);
        assert_eq!(ascii("HA_1(1)", &d), "HA_1(1) (3 vertices)\n  -1 --- 0 <=> 1\n");
    }

    #[test]
    fn labels_are_quoted() {
        let d = get("A1").unwrap().diagram();
        assert!(dot("odd \"name\"", &d).starts_with("graph \"odd \\\"name\\\"\" {"));
    }

    #[test]
    fn higher_multiplicity_is_labelled() {
        let d = get("H2(5)").unwrap().diagram();
        assert!(dot("H2(5)", &d).contains("label=\"5\""));
        assert!(ascii("H2(5)", &d).contains("<5>"));
    }
}
