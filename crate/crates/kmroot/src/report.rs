use std::fmt::Write;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub details: Vec<String>,
    /// Only filled in on request, so that default reports are reproducible
    /// byte for byte.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u128>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl Report {
    /// Sorts checks by name so output order never depends on scheduling.
    pub fn new(mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let passed = checks.iter().all(|c| c.passed);
        Report { passed, checks }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            match c.wall_ms {
                Some(ms) => writeln!(out, "[{status}] {} ({ms} ms)", c.name).unwrap(),
                None => writeln!(out, "[{status}] {}", c.name).unwrap(),
            }
            for d in &c.details {
                writeln!(out, "    {d}").unwrap();
            }
        }
        let ok = self.checks.iter().filter(|c| c.passed).count();
        writeln!(out, "{ok}/{} checks passed", self.checks.len()).unwrap();
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(name: &str, passed: bool) -> Check {
        Check { name: name.into(), passed, details: vec!["detail".into()], wall_ms: None }
    }

    #[test]
    fn ordering_and_status() {
        let r = Report::new(vec![check("2 b", true), check("1 a", false)]);
        assert!(!r.passed);
        assert_eq!(r.checks[0].name, "1 a");
        assert_eq!(r.to_text(), "[FAIL] 1 a\n    detail\n[PASS] 2 b\n    detail\n1/2 checks passed\n");
    }

    #[test]
    fn json_omits_missing_timings() {
        let r = Report::new(vec![check("1 a", true)]);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["passed"], true);
        assert!(v["checks"][0].get("wall_ms").is_none());
    }
}
