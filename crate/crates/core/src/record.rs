//! Machine-readable run records: one JSON line per solver/benchmark run,
//! round-tripping losslessly.

use crate::Result;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub command: String,
    #[serde(default)]
    pub parameters: BTreeMap<String, String>,
    pub answer: String,
    #[serde(default)]
    pub witness: Option<Vec<usize>>,
    pub wall_time_ms: u64,
    #[serde(default)]
    pub instance: BTreeMap<String, String>,
}

impl RunRecord {
    pub fn new(command: impl Into<String>, answer: impl Into<String>) -> Self {
        RunRecord {
            command: command.into(),
            parameters: BTreeMap::new(),
            answer: answer.into(),
            witness: None,
            wall_time_ms: 0,
            instance: BTreeMap::new(),
        }
    }

    pub fn with_param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.into(), value.to_string());
        self
    }

    pub fn with_instance(mut self, key: &str, value: impl ToString) -> Self {
        self.instance.insert(key.into(), value.to_string());
        self
    }

    /// One line, no interior newlines.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub fn from_json_line(line: &str) -> Result<Self> {
        serde_json::from_str(line)
            .map_err(|e| crate::Error::Parse(format!("bad run record: {e}")))
    }
}
