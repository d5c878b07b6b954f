//! Plain-text reports: a header echoing every knob, then body lines.

use std::fmt::Display;

use zdlab_core::{Verdict, VerdictStatus};

pub const FORMAT_VERSION: &str = "zdlab-report/1";
pub const CSV_VERSION: &str = "zdlab-zeroset-csv/1";

pub struct Report {
    header: Vec<(String, String)>,
    body: Vec<String>,
    negative: bool,
    failed: bool,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            header: vec![("format".into(), FORMAT_VERSION.into()), ("command".into(), command.into())],
            body: Vec::new(),
            negative: false,
            failed: false,
        }
    }

    pub fn knob(&mut self, name: &str, value: impl Display) -> &mut Self {
        self.header.push((name.into(), value.to_string()));
        self
    }

    pub fn line(&mut self, text: impl Into<String>) -> &mut Self {
        self.body.push(text.into());
        self
    }

    pub fn field(&mut self, name: &str, value: impl Display) -> &mut Self {
        self.body.push(format!("{name}: {value}"));
        self
    }

    /// Records a verdict; a zero-divisor verdict makes the run negative.
    pub fn verdict(&mut self, name: &str, v: &Verdict, note: &str) -> &mut Self {
        if v.status == VerdictStatus::ZeroDivisor {
            self.negative = true;
        }
        let mut text = format!("{name}: {v}");
        if !note.is_empty() {
            text.push_str(" -- ");
            text.push_str(note);
        }
        self.body.push(text);
        self
    }

    pub fn mark_negative(&mut self) -> &mut Self {
        self.negative = true;
        self
    }

    /// An invariant did not hold; the report is still printed.
    pub fn mark_failed(&mut self) -> &mut Self {
        self.failed = true;
        self
    }

    /// 3 for a failed invariant, 1 for a negative answer, else 0.
    pub fn exit_code(&self) -> u8 {
        if self.failed {
            3
        } else if self.negative {
            1
        } else {
            0
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.header {
            out.push_str(&format!("# {k}: {v}\n"));
        }
        for l in &self.body {
            out.push_str(l);
            out.push('\n');
        }
        out
    }
}

/// Fixed-width scientific notation, stable across platforms.
pub fn num(x: f64) -> String {
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x.is_nan() {
        return "nan".into();
    }
    format!("{x:.12e}")
}
