use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use projbound::Citation;

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CitationRef {
    pub label: String,
    pub statement: String,
}

impl From<Citation> for CitationRef {
    fn from(c: Citation) -> Self {
        CitationRef { label: c.label().to_string(), statement: c.statement().to_string() }
    }
}

/// Result of one command. Fields are declared in sorted order and `values`
/// is a sorted map, so the JSON form is deterministic. Big integers and
/// rationals are decimal strings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultEnvelope {
    pub citations: Vec<CitationRef>,
    pub command: String,
    /// False when a verification ran and something failed.
    pub ok: bool,
    pub values: BTreeMap<String, Value>,
    pub warnings: Vec<String>,
}

impl ResultEnvelope {
    pub fn new(command: &str) -> Self {
        ResultEnvelope {
            citations: Vec::new(),
            command: command.to_string(),
            ok: true,
            values: BTreeMap::new(),
            warnings: Vec::new(),
        }
    }

    pub fn value(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.values.insert(key.to_string(), v.into());
        self
    }

    pub fn cite(&mut self, c: Citation) -> &mut Self {
        let c = CitationRef::from(c);
        if let Err(at) = self.citations.binary_search(&c) {
            self.citations.insert(at, c);
        }
        self
    }

    pub fn warn(&mut self, w: &str) -> &mut Self {
        if !self.warnings.iter().any(|x| x == w) {
            self.warnings.push(w.to_string());
        }
        self
    }

    pub fn exit_code(&self) -> i32 {
        if self.ok {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("envelope serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        if !self.ok {
            out.push_str("status: FAILED\n");
        }
        for (k, v) in &self.values {
            // per-check detail of a verification is only in the JSON form
            if self.command == "verify" && matches!(k.as_str(), "fixtures" | "suites") {
                continue;
            }
            match v {
                Value::String(s) => out.push_str(&format!("{k}: {s}\n")),
                Value::Array(items) if items.iter().all(Value::is_string) => {
                    out.push_str(&format!("{k}:\n"));
                    for item in items {
                        out.push_str(&format!("  {}\n", item.as_str().unwrap_or_default()));
                    }
                }
                other => out.push_str(&format!("{k}: {other}\n")),
            }
        }
        if !self.citations.is_empty() {
            out.push_str("citations:\n");
            for c in &self.citations {
                out.push_str(&format!("  {}: {}\n", c.label, c.statement));
            }
        }
        if !self.warnings.is_empty() {
            out.push_str("warnings:\n");
            for w in &self.warnings {
                out.push_str(&format!("  {w}\n"));
            }
        }
        out
    }
}

/// Machine-readable form of a failed command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorEnvelope {
    pub command: String,
    pub error: ErrorBody,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}

impl ErrorEnvelope {
    pub fn new(command: &str, err: &CliError) -> Self {
        ErrorEnvelope {
            command: command.to_string(),
            error: ErrorBody { kind: err.kind().to_string(), message: err.to_string() },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("envelope serializes")
    }
}
