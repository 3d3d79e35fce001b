//! The report emitted by every task, in byte-deterministic text and JSON
//! renderings.
//!
//! JSON shape:
//!
//! ```json
//! {
//!   "version": "0.1.0",
//!   "task": "hopf-axioms",
//!   "input_digest": "sha256:...",
//!   "checks": [{ "name": "...", "status": "pass", "witness": "..." }],
//!   "tables": [{ "name": "...", "rows": [["..."]] }],
//!   "warnings": ["..."]
//! }
//! ```
//!
//! The first row of every table is its header. Identical inputs produce
//! byte-identical reports: all collections are emitted in a fixed order and
//! nothing depends on time, paths, or thread scheduling.

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Table {
    pub name: String,
    /// Header row first.
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: String,
    pub task: String,
    pub input_digest: String,
    pub checks: Vec<Check>,
    pub tables: Vec<Table>,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn new(task: &str, input_digest: String) -> Self {
        Report {
            version: env!("CARGO_PKG_VERSION").to_string(),
            task: task.to_string(),
            input_digest,
            checks: Vec::new(),
            tables: Vec::new(),
            warnings: Vec::new(),
        }
    }

    pub fn check(&mut self, name: &str, pass: bool, witness: Option<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            status: if pass { Status::Pass } else { Status::Fail },
            // A witness only explains failures; successful checks stay terse.
            witness: if pass { None } else { witness },
        });
    }

    pub fn table(&mut self, name: &str, header: &[&str], rows: Vec<Vec<String>>) {
        let mut all = Vec::with_capacity(rows.len() + 1);
        all.push(header.iter().map(|h| h.to_string()).collect());
        all.extend(rows);
        self.tables.push(Table {
            name: name.to_string(),
            rows: all,
        });
    }

    pub fn warn(&mut self, message: impl Into<String>) {
        self.warnings.push(message.into());
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn render_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn render_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        writeln!(out, "anyonic {} — {}", self.version, self.task).unwrap();
        writeln!(out, "input: {}", self.input_digest).unwrap();
        writeln!(out, "checks:").unwrap();
        if self.checks.is_empty() {
            writeln!(out, "  (none)").unwrap();
        }
        for check in &self.checks {
            let status = match check.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
            };
            match &check.witness {
                Some(witness) => {
                    writeln!(out, "  {status}  {}  [witness: {witness}]", check.name).unwrap()
                }
                None => writeln!(out, "  {status}  {}", check.name).unwrap(),
            }
        }
        for table in &self.tables {
            writeln!(out, "{}:", table.name).unwrap();
            let widths = column_widths(&table.rows);
            for row in &table.rows {
                let mut line = String::from(" ");
                for (idx, cell) in row.iter().enumerate() {
                    line.push(' ');
                    line.push_str(cell);
                    if idx + 1 < row.len() {
                        for _ in cell.len()..widths[idx] + 2 {
                            line.push(' ');
                        }
                    }
                }
                writeln!(out, "{}", line.trim_end()).unwrap();
            }
        }
        if !self.warnings.is_empty() {
            writeln!(out, "warnings:").unwrap();
            for warning in &self.warnings {
                writeln!(out, "  - {warning}").unwrap();
            }
        }
        let passed = self
            .checks
            .iter()
            .filter(|c| c.status == Status::Pass)
            .count();
        writeln!(
            out,
            "result: {} ({passed}/{} checks)",
            if self.all_pass() { "pass" } else { "FAIL" },
            self.checks.len()
        )
        .unwrap();
        out
    }
}

fn column_widths(rows: &[Vec<String>]) -> Vec<usize> {
    let columns = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut widths = vec![0; columns];
    for row in rows {
        for (idx, cell) in row.iter().enumerate() {
            widths[idx] = widths[idx].max(cell.len());
        }
    }
    widths
}

/// `sha256:<hex>` over length-prefixed parts, so distinct part lists cannot
/// collide by concatenation.
pub fn digest_input(parts: &[&str]) -> String {
    let mut hasher = Sha256::new();
    for part in parts {
        hasher.update((part.len() as u64).to_be_bytes());
        hasher.update(part.as_bytes());
    }
    let digest = hasher.finalize();
    let mut out = String::with_capacity(7 + 64);
    out.push_str("sha256:");
    for byte in digest {
        use std::fmt::Write;
        write!(out, "{byte:02x}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut report = Report::new("demo", digest_input(&["a", "b"]));
        report.check("first", true, None);
        report.check("second", false, Some("(x, y)".into()));
        report.table(
            "dims",
            &["i", "dim"],
            vec![vec!["0".into(), "1".into()], vec!["10".into(), "21".into()]],
        );
        report.warn("a warning");
        report
    }

    #[test]
    fn digest_is_stable_and_injective_on_parts() {
        assert_eq!(digest_input(&["a", "b"]), digest_input(&["a", "b"]));
        assert_ne!(digest_input(&["a", "b"]), digest_input(&["ab"]));
        assert_ne!(digest_input(&["a", "b"]), digest_input(&["a", "c"]));
        assert!(digest_input(&[]).starts_with("sha256:"));
        assert_eq!(digest_input(&[]).len(), 7 + 64);
    }

    #[test]
    fn renderings_are_deterministic() {
        assert_eq!(sample().render_json(), sample().render_json());
        assert_eq!(sample().render_text(), sample().render_text());
    }

    #[test]
    fn json_has_the_documented_keys() {
        let value: serde_json::Value = serde_json::from_str(&sample().render_json()).unwrap();
        for key in ["version", "task", "input_digest", "checks", "tables", "warnings"] {
            assert!(value.get(key).is_some(), "missing {key}");
        }
        assert_eq!(value["checks"][0]["status"], "pass");
        assert!(value["checks"][0].get("witness").is_none());
        assert_eq!(value["checks"][1]["witness"], "(x, y)");
        assert_eq!(value["tables"][0]["rows"][0][0], "i");
    }

    #[test]
    fn text_marks_failures_and_counts() {
        let text = sample().render_text();
        assert!(text.contains("FAIL  second  [witness: (x, y)]"), "{text}");
        assert!(text.contains("result: FAIL (1/2 checks)"), "{text}");
        let all_pass = {
            let mut r = Report::new("demo", digest_input(&[]));
            r.check("only", true, None);
            r
        };
        assert!(all_pass.render_text().contains("result: pass (1/1 checks)"));
    }
}
