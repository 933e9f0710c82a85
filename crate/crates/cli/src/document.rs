//! The report document produced by every command and its renderings.

use std::fmt::Write as _;

use clap::ValueEnum;
use rcp::rcp::IdentityReport;
use rcp::Cubic;
use serde::Serialize;
use serde_json::{json, Value};

use crate::latex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

pub fn cubic_json(c: &Cubic) -> Value {
    json!({
        "p": c.p().to_exact_string(),
        "q": c.q().to_exact_string(),
        "r": c.r().to_exact_string(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Document {
    pub command: String,
    pub args: Vec<String>,
    pub cubic: Option<Value>,
    #[serde(skip)]
    cubic_text: Option<String>,
    pub precision_bits: usize,
    pub reports: Vec<IdentityReport>,
    pub details: Value,
    pub error: Option<String>,
    #[serde(skip)]
    verdict: bool,
    pub exit: i32,
}

impl Document {
    pub fn new(command: &str, args: &[String], prec: usize) -> Self {
        Document {
            command: command.to_string(),
            args: args.to_vec(),
            cubic: None,
            cubic_text: None,
            precision_bits: prec,
            reports: Vec::new(),
            details: Value::Null,
            error: None,
            verdict: true,
            exit: 0,
        }
        .settle()
    }

    fn settle(mut self) -> Self {
        let ok = self.verdict && self.error.is_none() && self.reports.iter().all(|r| r.pass);
        self.exit = if ok { 0 } else { 1 };
        self
    }

    pub fn with_cubic(mut self, c: &Cubic) -> Self {
        self.cubic = Some(cubic_json(c));
        self.cubic_text = Some(c.to_string());
        self
    }

    pub fn reports(mut self, reports: Vec<IdentityReport>) -> Self {
        self.reports = reports;
        self.settle()
    }

    pub fn detail(mut self, details: Value) -> Self {
        self.details = details;
        self
    }

    /// Records the outcome of a check that is not an identity report.
    pub fn verdict(mut self, ok: bool) -> Self {
        self.verdict = ok;
        self.settle()
    }

    pub fn failed(mut self, msg: String) -> Self {
        self.error = Some(msg);
        self.settle()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("serializable");
                s.push('\n');
                s
            }
            Format::Text => self.render_text(),
            Format::Latex => latex::render(self),
        }
    }

    pub fn cubic_text(&self) -> Option<&str> {
        self.cubic_text.as_deref()
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        if let Some(c) = &self.cubic_text {
            let _ = writeln!(out, "cubic: {c}");
        }
        let _ = writeln!(out, "precision: {} bits", self.precision_bits);
        if !self.details.is_null() {
            write_value(&mut out, &self.details, 0);
        }
        for r in &self.reports {
            let _ = writeln!(
                out,
                "[{}] {}\n  lhs       = {}\n  rhs       = {}\n  residual  = {}\n  tolerance = {}",
                if r.pass { "PASS" } else { "FAIL" },
                r.identity_id,
                r.lhs,
                r.rhs,
                r.residual,
                r.tolerance,
            );
        }
        if let Some(e) = &self.error {
            let _ = writeln!(out, "failed: {e}");
        }
        let _ = writeln!(out, "exit: {}", self.exit);
        out
    }
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                if is_scalar(v) {
                    let _ = writeln!(out, "{pad}{k}: {}", scalar_text(v));
                } else {
                    let _ = writeln!(out, "{pad}{k}:");
                    write_value(out, v, indent + 1);
                }
            }
        }
        Value::Array(items) if items.iter().all(is_scalar) => {
            let joined: Vec<String> = items.iter().map(scalar_text).collect();
            let _ = writeln!(out, "{pad}[{}]", joined.join(", "));
        }
        Value::Array(items) => {
            for item in items {
                let _ = writeln!(out, "{pad}-");
                write_value(out, item, indent + 1);
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar_text(other));
        }
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Object(_))
        && !matches!(v, Value::Array(a) if !a.iter().all(|x| !x.is_object() && !x.is_array()))
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar_text).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}
