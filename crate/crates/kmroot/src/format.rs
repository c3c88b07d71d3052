//! GCM files: a JSON object `{"n", "entries", "labels"?}` or a plain-text
//! matrix whose first line is `n`, followed by `n` rows of `n` integers.
//! Blank lines and `#` comments are ignored in the plain-text form.

use kmroot_core::{validate_gcm, Gcm};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("declared n = {declared} but found {rows} rows")]
    RowCount { declared: usize, rows: usize },
    #[error("labels: expected {expected} distinct labels")]
    Labels { expected: usize },
    #[error("invalid matrix: {0}")]
    Invalid(#[from] kmroot_core::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GcmFile {
    pub n: usize,
    pub entries: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GcmFile {
    pub fn from_gcm(g: &Gcm, labels: Option<&[String]>) -> Self {
        GcmFile { n: g.rank(), entries: g.rows(), labels: labels.map(<[String]>::to_vec) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGcm {
    pub gcm: Gcm,
    pub labels: Option<Vec<String>>,
}

pub fn parse_gcm(text: &str) -> Result<ParsedGcm, FormatError> {
    let file = if text.trim_start().starts_with('{') { parse_json(text)? } else { parse_plain(text)? };
    if file.entries.len() != file.n {
        return Err(FormatError::RowCount { declared: file.n, rows: file.entries.len() });
    }
    let gcm = validate_gcm(&file.entries)?;
    if let Some(labels) = &file.labels {
        let distinct = labels.iter().enumerate().all(|(i, l)| !labels[..i].contains(l));
        if labels.len() != file.n || !distinct {
            return Err(FormatError::Labels { expected: file.n });
        }
    }
    Ok(ParsedGcm { gcm, labels: file.labels })
}

fn parse_json(text: &str) -> Result<GcmFile, FormatError> {
    serde_json::from_str(text).map_err(|e| FormatError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string().split(" at line").next().unwrap_or_default().to_string(),
    })
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter().map(|(s, t)| (line[..s].chars().count() + 1, t)).collect()
}

fn parse_plain(text: &str) -> Result<GcmFile, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or_default()))
        .filter(|(_, l)| !l.trim().is_empty());
    let syntax = |line, column, message: String| FormatError::Syntax { line, column, message };

    let (line_no, header) = lines.next().ok_or_else(|| syntax(1, 1, "empty input".into()))?;
    let head = tokens(header);
    let (col, tok) = head[0];
    let n: usize = tok.parse().map_err(|_| syntax(line_no, col, format!("expected the size n, found `{tok}`")))?;
    if let Some(&(col, _)) = head.get(1) {
        return Err(syntax(line_no, col, "the first line must hold only n".into()));
    }

    let mut entries = Vec::with_capacity(n);
    let mut last_line = line_no;
    for (line_no, line) in lines {
        last_line = line_no;
        if entries.len() == n {
            return Err(syntax(line_no, 1, format!("more than {n} rows")));
        }
        let toks = tokens(line);
        if toks.len() != n {
            let col = toks.get(n).map_or(line.chars().count() + 1, |t| t.0);
            return Err(syntax(line_no, col, format!("expected {n} entries, found {}", toks.len())));
        }
        let row = toks
            .iter()
            .map(|&(col, t)| t.parse::<i64>().map_err(|_| syntax(line_no, col, format!("expected an integer, found `{t}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        entries.push(row);
    }
    if entries.len() < n {
        return Err(syntax(last_line + 1, 1, format!("expected {n} rows, found {}", entries.len())));
    }
    Ok(GcmFile { n, entries, labels: None })
}
