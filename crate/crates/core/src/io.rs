//! JSON file formats shared by the CLI and the C interface.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quotient::{FiniteGroup, GroupElement};

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)?;
    parse_json(&text)
}

pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    Ok(serde_json::from_str(text)?)
}

/// `{"degree": d, "generators": [{"perm": [...], "phases": ["a/b", ...]}]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<GroupElement>,
}

impl GroupFile {
    pub fn generate(&self, cap: usize) -> Result<FiniteGroup> {
        if let Some(g) = self.generators.iter().find(|g| g.degree() != self.degree) {
            return Err(Error::DegreeMismatch(g.degree(), self.degree));
        }
        FiniteGroup::generate(self.degree, &self.generators, cap)
    }
}

impl From<&FiniteGroup> for GroupFile {
    fn from(g: &FiniteGroup) -> Self {
        GroupFile { degree: g.degree(), generators: g.generators().to_vec() }
    }
}
