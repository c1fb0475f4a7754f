//! The replayable JSON form of a built array.

use std::collections::BTreeMap;

use costas_core::{build, field_of_size, ConstructionSpec, CostasCandidate, Method};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const FORMAT: u32 = 1;
pub const EXTERNAL: &str = "external";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrayDocument {
    pub format: u32,
    pub n: usize,
    pub perm: Vec<u32>,
    pub method: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, u64>,
}

impl ArrayDocument {
    pub fn from_build(spec: &ConstructionSpec, array: &CostasCandidate) -> Self {
        let mut params = BTreeMap::new();
        params.insert("alpha".to_string(), spec.alpha.rep());
        if let Some(beta) = &spec.beta {
            params.insert("beta".to_string(), beta.rep());
        }
        ArrayDocument {
            format: FORMAT,
            n: array.n(),
            perm: array.perm().to_vec(),
            method: spec.method.tag().to_string(),
            q: Some(spec.field().size()),
            params,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    /// Parses a document and checks its shape. For constructed arrays the
    /// construction is replayed and must reproduce `perm`.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc: ArrayDocument = serde_json::from_str(text)
            .map_err(|e| CliError::Usage(format!("bad array document: {e}")))?;
        if doc.format != FORMAT {
            return Err(CliError::Usage(format!(
                "unsupported format {}",
                doc.format
            )));
        }
        if doc.n != doc.perm.len() {
            return Err(CliError::Usage(format!(
                "n = {} but perm has {} entries",
                doc.n,
                doc.perm.len()
            )));
        }
        if doc.method != EXTERNAL {
            doc.replay()?;
        }
        Ok(doc)
    }

    fn replay(&self) -> Result<(), CliError> {
        let method: Method = self.method.parse().map_err(CliError::Usage)?;
        let q = self
            .q
            .ok_or_else(|| CliError::Usage(format!("{method} document without q")))?;
        let field = field_of_size(q).map_err(|e| CliError::Usage(e.to_string()))?;
        let element = |name: &str| -> Result<Option<_>, CliError> {
            self.params
                .get(name)
                .map(|&rep| {
                    field
                        .element(rep)
                        .map_err(|e| CliError::Usage(e.to_string()))
                })
                .transpose()
        };
        let alpha = element("alpha")?
            .ok_or_else(|| CliError::Usage("document without params.alpha".to_string()))?;
        let spec = ConstructionSpec {
            method,
            alpha,
            beta: element("beta")?,
        };
        let rebuilt = build(&spec).map_err(|e| CliError::Usage(format!("replay failed: {e}")))?;
        if rebuilt.perm() != self.perm.as_slice() {
            return Err(CliError::Usage(format!(
                "perm does not match {method} over GF({q}) with the given params"
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use costas_core::find_spec;

    #[test]
    fn round_trip() {
        let field = field_of_size(11).unwrap();
        let spec = find_spec(Method::T4, &field).unwrap();
        let doc = ArrayDocument::from_build(&spec, &build(&spec).unwrap());
        let json = doc.to_json();
        assert_eq!(
            json,
            r#"{"format":1,"n":7,"perm":[3,6,1,7,5,2,4],"method":"t4","q":11,"params":{"alpha":7}}"#
        );
        assert_eq!(ArrayDocument::parse(&json).unwrap(), doc);
    }

    #[test]
    fn tampered_perm_rejected() {
        let json =
            r#"{"format":1,"n":4,"perm":[2,4,1,3],"method":"w1","q":5,"params":{"alpha":2}}"#;
        assert!(ArrayDocument::parse(json).is_err());
        let external = r#"{"format":1,"n":4,"perm":[2,4,1,3],"method":"external"}"#;
        assert!(ArrayDocument::parse(external).is_ok());
    }
}
