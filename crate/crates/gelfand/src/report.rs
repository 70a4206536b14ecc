//! Structured run reports.
//!
//! A report records the tool version, a SHA-256 digest of every input
//! file, the command that ran, a command-specific payload, the
//! justification strings produced along the way, and a timing block.
//! Keys serialize alphabetically (`serde_json`'s default map is ordered),
//! so re-running a command on identical inputs yields a byte-identical
//! document once the `timings` block is removed. [`Report::deterministic_json`]
//! returns exactly that comparable form.

use std::path::Path;
use std::time::Instant;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// Hex SHA-256 of a byte string.
pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

pub struct Report {
    command: String,
    inputs: Vec<(String, String)>,
    justifications: Vec<String>,
    payload: Value,
    started: Instant,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            inputs: Vec::new(),
            justifications: Vec::new(),
            payload: Value::Null,
            started: Instant::now(),
        }
    }

    /// Records an input file by path and content digest.
    pub fn add_input(&mut self, path: &Path, contents: &str) {
        self.inputs.push((path.display().to_string(), sha256_hex(contents.as_bytes())));
    }

    pub fn add_justification(&mut self, text: impl Into<String>) {
        self.justifications.push(text.into());
    }

    pub fn set_payload(&mut self, payload: Value) {
        self.payload = payload;
    }

    /// Records a failure as the payload so scripted callers see the same
    /// machine-readable reason that the exit code encodes.
    pub fn set_error(&mut self, err: &Error) {
        self.payload = json!({
            "error": {"kind": err.kind(), "reason": err.to_string()},
        });
    }

    fn body(&self) -> Value {
        let inputs: Vec<Value> = self
            .inputs
            .iter()
            .map(|(path, digest)| json!({"path": path, "sha256": digest}))
            .collect();
        json!({
            "command": self.command,
            "inputs": inputs,
            "justifications": self.justifications,
            "payload": self.payload,
            "version": env!("CARGO_PKG_VERSION"),
        })
    }

    /// The full document, including timings.
    pub fn to_json(&self) -> Value {
        let mut doc = self.body();
        doc.as_object_mut().expect("report body is an object").insert(
            "timings".into(),
            json!({"total_ms": self.started.elapsed().as_millis() as u64}),
        );
        doc
    }

    /// The timing-free document used for byte-identity comparisons.
    pub fn deterministic_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(&self.body()).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let mut text =
            serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
        text.push('\n');
        std::fs::write(path, text).map_err(|e| Error::IoError {
            path: path.display().to_string(),
            message: e.to_string(),
        })
    }
}

/// Strips the `timings` block from a serialized report, returning the
/// canonical comparable form (what [`Report::deterministic_json`] yields).
pub fn strip_timings(report_text: &str) -> Result<String> {
    let mut doc: Value = serde_json::from_str(report_text).map_err(|e| Error::SchemaError {
        location: "report".into(),
        message: format!("invalid JSON: {e}"),
    })?;
    if let Some(obj) = doc.as_object_mut() {
        obj.remove("timings");
    }
    let mut out = serde_json::to_string_pretty(&doc).expect("report serializes");
    out.push('\n');
    Ok(out)
}
