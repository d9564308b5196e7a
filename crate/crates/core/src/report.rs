//! Pass/fail reports shared by the verification routines.

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(n: Option<usize>) -> Self {
        Report { n, checks: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), pass, detail: detail.into() });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        if let Some(n) = self.n {
            out.push_str(&format!("n = {n}\n"));
        }
        for c in &self.checks {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                out.push_str(&format!("[{mark}] {}\n", c.name));
            } else {
                out.push_str(&format!("[{mark}] {}: {}\n", c.name, c.detail));
            }
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        out.push_str(&format!("{passed}/{} checks passed\n", self.checks.len()));
        out
    }
}
