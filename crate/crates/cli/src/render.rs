//! Shared CSV / Markdown / JSON rendering for record-shaped output.

use serde::Serialize;

use crate::args::Format;

pub struct Records {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Records {
    pub fn new(headers: &[&'static str]) -> Self {
        Records { headers: headers.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn csv(&self) -> String {
        let mut out = self.headers.join(",");
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.join(","));
            out.push('\n');
        }
        out
    }

    pub fn markdown(&self) -> String {
        let mut out = format!("| {} |\n|", self.headers.join(" | "));
        out.push_str(&"---|".repeat(self.headers.len()));
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!("| {} |\n", r.join(" | ")));
        }
        out
    }
}

pub fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("output types serialize");
    s.push('\n');
    s
}

/// Renders `value` in the requested format; `text` is the human-readable
/// fallback.
pub fn emit<T: Serialize>(format: Format, value: &T, records: impl FnOnce() -> Records, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => json(value),
        Format::Csv => records().csv(),
        Format::Md => records().markdown(),
        Format::Text => text(),
    }
}

pub fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}
