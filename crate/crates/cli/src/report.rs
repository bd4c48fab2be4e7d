//! Command reports, rendered either as `key: value` text or as JSON.
//!
//! JSON output carries no timings, so identical inputs and seed give
//! byte-identical reports. Keys are sorted.

use std::fmt::Write as _;
use std::time::Duration;

use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    #[value(alias = "structured")]
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: &'static str,
    /// Headline lines, e.g. `htps=120 dim=61`.
    pub summary: Vec<String>,
    pub fields: Vec<(&'static str, Value)>,
    pub elapsed: Option<Duration>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report { command, summary: Vec::new(), fields: Vec::new(), elapsed: None }
    }

    pub fn line(&mut self, line: impl Into<String>) -> &mut Self {
        self.summary.push(line.into());
        self
    }

    pub fn field(&mut self, key: &'static str, value: impl Into<Value>) -> &mut Self {
        self.fields.push((key, value.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Json => self.render_json(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        for line in &self.summary {
            let _ = writeln!(out, "{line}");
        }
        let _ = writeln!(out, "command: {}", self.command);
        for (k, v) in &self.fields {
            match v {
                Value::String(s) => writeln!(out, "{k}: {s}"),
                other => writeln!(out, "{k}: {other}"),
            }
            .expect("writing to a String");
        }
        if let Some(t) = self.elapsed {
            let _ = writeln!(out, "elapsed_ms: {}", t.as_millis());
        }
        out
    }

    fn render_json(&self) -> String {
        let mut map = Map::new();
        map.insert("command".into(), self.command.into());
        map.insert("summary".into(), self.summary.clone().into());
        for (k, v) in &self.fields {
            map.insert((*k).into(), v.clone());
        }
        let mut out = serde_json::to_string_pretty(&Value::Object(map)).expect("serialisable");
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json() {
        let mut r = Report::new("oracle");
        r.line("htps=120 dim=61").field("n", 5).field("method", "full-enumeration");
        r.elapsed = Some(Duration::from_millis(12));
        let text = r.render(Format::Text);
        assert_eq!(text, "htps=120 dim=61\ncommand: oracle\nn: 5\nmethod: full-enumeration\nelapsed_ms: 12\n");
        let json: Value = serde_json::from_str(&r.render(Format::Json)).unwrap();
        assert_eq!(json["n"], 5);
        assert_eq!(json["summary"][0], "htps=120 dim=61");
        assert!(json.get("elapsed_ms").is_none());
    }
}
