//! The JSON system file.

use serde::{Deserialize, Serialize};
use symreal_core::algebra::{poly_parse, MultiPoly, Vars};

use crate::CliError;

/// `{"vars": [...], "polys": [...], "name": ..., "expected_empty": ...}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDocument {
    pub vars: Vec<String>,
    pub polys: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// Known answer, for test corpora.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_empty: Option<bool>,
}

impl InputDocument {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed input document: {}", e)))
    }

    /// Parses every polynomial over `vars`.
    pub fn system(&self) -> Result<Vec<MultiPoly>, CliError> {
        if self.vars.is_empty() {
            return Err(CliError::Input("`vars` is empty".into()));
        }
        if self.polys.is_empty() {
            return Err(CliError::Input("`polys` is empty".into()));
        }
        let vars = Vars::new(&self.vars);
        self.polys
            .iter()
            .enumerate()
            .map(|(i, p)| poly_parse(p, &vars).map_err(|e| CliError::Input(format!("polynomial #{} `{}`: {}", i, p, e))))
            .collect()
    }
}
