//! Run reports: deterministic check-by-check output in plain text or JSON.
//! The body never contains timing; wall-clock goes to stderr so identical
//! inputs produce byte-identical reports.

use serde::Serialize;
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub checks: Vec<CheckLine>,
    pub pass: bool,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport { command: command.into(), checks: Vec::new(), pass: true }
    }

    pub fn push(&mut self, name: impl Into<String>, pass: bool, detail: Option<String>) {
        self.pass &= pass;
        self.checks.push(CheckLine { name: name.into(), pass, detail });
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Structured => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut out = String::new();
                writeln!(out, "# {}", self.command).unwrap();
                for c in &self.checks {
                    let mark = if c.pass { "PASS" } else { "FAIL" };
                    match &c.detail {
                        Some(d) => writeln!(out, "{mark} {}: {d}", c.name).unwrap(),
                        None => writeln!(out, "{mark} {}", c.name).unwrap(),
                    }
                }
                writeln!(out, "RESULT {}", if self.pass { "PASS" } else { "FAIL" }).unwrap();
                out
            }
        }
    }

    /// Exit code: 0 for pass, 1 for a failed mathematical check.
    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            1
        }
    }
}
