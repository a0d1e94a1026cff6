//! JSON form of a rational tree character: a complete value table on all
//! decorated trees up to an edge bound.
//!
//! Schema: `{"d": 2, "max_edges": 3, "values": {"<tree>": "<rational>"}}`,
//! the empty tree omitted (its value is always one).

use std::collections::{BTreeMap, HashMap};
use std::str::FromStr;

use hopfwick::{trees_up_to, DecTree, Rat, TreeCharacter};
use serde_json::Value;

use crate::error::{CliError, CliResult};

pub struct TreeCharSpec {
    pub d: u32,
    pub max_edges: u32,
    pub values: BTreeMap<DecTree, Rat>,
}

impl TreeCharSpec {
    pub fn from_json(text: &str) -> CliResult<Self> {
        let root: Value = serde_json::from_str(text)
            .map_err(|e| CliError::Validation(format!("bad JSON: {e}")))?;
        let d = field_u32(&root, "d")?;
        let max_edges = field_u32(&root, "max_edges")?;
        if d == 0 {
            return Err(CliError::Validation("`d` must be positive".into()));
        }
        let raw_values = root
            .get("values")
            .and_then(Value::as_object)
            .ok_or_else(|| CliError::Validation("missing object field `values`".into()))?;
        let mut values = BTreeMap::new();
        for (key, value) in raw_values {
            let tree = DecTree::from_str(key).map_err(CliError::from)?;
            if tree.max_decoration() > d {
                return Err(CliError::Validation(format!(
                    "tree `{key}` uses a decoration above d = {d}"
                )));
            }
            if tree.edge_count() == 0 || tree.edge_count() > max_edges {
                return Err(CliError::Validation(format!(
                    "tree `{key}` is outside 1..={max_edges} edges"
                )));
            }
            let rational = value.as_str().ok_or_else(|| {
                CliError::Validation(format!("value for `{key}` must be a string"))
            })?;
            values.insert(tree, Rat::from_str(rational).map_err(CliError::from)?);
        }
        // completeness: every decorated tree in range must be present
        for t in trees_up_to(max_edges, d) {
            if t.edge_count() > 0 && !values.contains_key(&t) {
                return Err(CliError::Validation(format!(
                    "missing value for tree `{t}` below {max_edges} edges"
                )));
            }
        }
        Ok(TreeCharSpec {
            d,
            max_edges,
            values,
        })
    }

    pub fn character(&self) -> TreeCharacter {
        let table: HashMap<DecTree, Rat> = self
            .values
            .iter()
            .map(|(t, v)| (t.clone(), v.clone()))
            .collect();
        TreeCharacter::from_table(table, self.max_edges)
    }

    pub fn to_json(&self) -> String {
        let values: BTreeMap<String, String> = self
            .values
            .iter()
            .map(|(t, v)| (t.to_string(), v.to_string()))
            .collect();
        serde_json::to_string_pretty(&serde_json::json!({
            "d": self.d,
            "max_edges": self.max_edges,
            "values": values,
        }))
        .expect("character spec serializes")
    }

    /// The same spec with every tree sent through `f`.
    pub fn map_values(&self, mut f: impl FnMut(&DecTree) -> CliResult<Rat>) -> CliResult<Self> {
        let mut values = BTreeMap::new();
        for t in self.values.keys() {
            values.insert(t.clone(), f(t)?);
        }
        Ok(TreeCharSpec {
            d: self.d,
            max_edges: self.max_edges,
            values,
        })
    }
}

fn field_u32(root: &Value, name: &str) -> CliResult<u32> {
    root.get(name)
        .and_then(Value::as_u64)
        .and_then(|v| u32::try_from(v).ok())
        .ok_or_else(|| CliError::Validation(format!("missing integer field `{name}`")))
}
