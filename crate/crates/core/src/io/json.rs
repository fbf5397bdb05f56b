//! The JSON graph document: an object keyed by stringified node id, each
//! entry holding `targets` and, once layered, a `neighborhood` label.
//!
//! ```text
//! {"0":{"targets":[1],"neighborhood":"R_0"},"1":{"targets":[2],"neighborhood":"R_1"}}
//! ```
//!
//! Keys are emitted in numeric order and every node gets a key, so emitting
//! a parsed canonical document reproduces it byte for byte.

use std::collections::BTreeMap;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::digraph::{NodeId, OrientedGraph};
use crate::error::GraphError;
use crate::generate::Fixture;
use crate::layering::RootedLayering;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JsonError {
    #[error("malformed document: {0}")]
    Parse(String),
    #[error("node key `{0}` is not a non-negative 32-bit integer")]
    BadKey(String),
    #[error("node id {0} appears under two keys")]
    DuplicateKey(u32),
    #[error("node {node} targets {target}, which has no entry and lies past the last key")]
    DanglingTarget { node: u32, target: u64 },
    #[error("invalid graph: {0}")]
    Validation(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: OrientedGraph,
    /// `neighborhood` values found in the document. Advisory only.
    pub declared_labels: BTreeMap<NodeId, String>,
}

#[derive(Deserialize)]
struct EntryIn {
    targets: Vec<u64>,
    #[serde(default)]
    neighborhood: Option<String>,
}

struct EntryOut<'a> {
    targets: &'a [NodeId],
    neighborhood: Option<String>,
}

impl Serialize for EntryOut<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let fields = if self.neighborhood.is_some() { 2 } else { 1 };
        let mut st = s.serialize_struct("Entry", fields)?;
        st.serialize_field("targets", self.targets)?;
        if let Some(label) = &self.neighborhood {
            st.serialize_field("neighborhood", label)?;
        }
        st.end()
    }
}

/// A graph, optionally with its layering, ready to serialize.
pub struct GraphDocument<'a> {
    graph: &'a OrientedGraph,
    layering: Option<&'a RootedLayering<'a>>,
}

impl<'a> GraphDocument<'a> {
    pub fn new(graph: &'a OrientedGraph, layering: Option<&'a RootedLayering<'a>>) -> Self {
        GraphDocument { graph, layering }
    }
}

impl Serialize for GraphDocument<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.graph.node_count()))?;
        for v in self.graph.nodes() {
            let entry = EntryOut { targets: self.graph.out_slice(v), neighborhood: self.layering.map(|l| l.label(v)) };
            map.serialize_entry(&v.0.to_string(), &entry)?;
        }
        map.end()
    }
}

/// Compact canonical document; labels are included when a layering is given.
pub fn to_json(g: &OrientedGraph, l: Option<&RootedLayering<'_>>) -> String {
    serde_json::to_string(&GraphDocument::new(g, l)).expect("documents serialize infallibly")
}

pub fn from_json(text: &str) -> Result<ParsedGraph, JsonError> {
    let raw: BTreeMap<String, EntryIn> = serde_json::from_str(text).map_err(|e| JsonError::Parse(e.to_string()))?;
    let mut entries: BTreeMap<u32, EntryIn> = BTreeMap::new();
    for (key, entry) in raw {
        let id: u32 = key.parse().map_err(|_| JsonError::BadKey(key.clone()))?;
        if entries.insert(id, entry).is_some() {
            return Err(JsonError::DuplicateKey(id));
        }
    }
    let node_count = entries.keys().next_back().map_or(0, |&m| m as usize + 1);
    let mut arcs = Vec::new();
    let mut declared_labels = BTreeMap::new();
    for (&id, entry) in &entries {
        for &t in &entry.targets {
            if t >= node_count as u64 {
                return Err(JsonError::DanglingTarget { node: id, target: t });
            }
            arcs.push((id, t as u32));
        }
        if let Some(label) = &entry.neighborhood {
            declared_labels.insert(NodeId(id), label.clone());
        }
    }
    let graph = OrientedGraph::from_arcs(node_count, &arcs)?;
    Ok(ParsedGraph { graph, declared_labels })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelMismatch {
    pub node: NodeId,
    pub declared: String,
    pub computed: String,
}

/// Declared labels that disagree with the recomputed layering.
pub fn audit_labels(declared: &BTreeMap<NodeId, String>, l: &RootedLayering<'_>) -> Vec<LabelMismatch> {
    declared
        .iter()
        .filter(|(v, _)| v.index() < l.graph().node_count())
        .filter_map(|(&node, declared)| {
            let computed = l.label(node);
            (declared != &computed).then(|| LabelMismatch { node, declared: declared.clone(), computed })
        })
        .collect()
}

/// The fixture as its source table lists it: only the listed rows appear
/// as keys, with their printed layer labels.
pub fn fixture_document(f: Fixture) -> String {
    let labels: BTreeMap<u32, &str> = f.declared_labels().iter().copied().collect();
    let rows: BTreeMap<u32, &[u32]> = f.rows().iter().copied().collect();
    let mut keys: Vec<u32> = (0..f.node_count() as u32).collect();
    if f == Fixture::Irrint {
        // The table never lists node 12.
        keys.retain(|&k| k != 12);
    }
    let mut doc = serde_json::Map::new();
    for k in keys {
        let mut entry = serde_json::Map::new();
        entry.insert("targets".into(), serde_json::json!(rows.get(&k).copied().unwrap_or(&[])));
        if let Some(label) = labels.get(&k) {
            entry.insert("neighborhood".into(), serde_json::json!(label));
        }
        doc.insert(k.to_string(), serde_json::Value::Object(entry));
    }
    serde_json::to_string(&doc).expect("documents serialize infallibly")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layering::build_layering;

    #[test]
    fn cycle_with_layers() {
        let g = Fixture::Cycle5.graph();
        let l = build_layering(&g, NodeId(0)).unwrap();
        let text = to_json(&g, Some(&l));
        assert!(text.starts_with(r#"{"0":{"targets":[1],"neighborhood":"R_0"},"1":{"targets":[2],"neighborhood":"R_1"},"#));
        let parsed = from_json(&text).unwrap();
        assert_eq!(parsed.graph, g);
        assert_eq!(parsed.declared_labels.len(), 5);
    }

    #[test]
    fn empty_and_unlayered() {
        assert_eq!(to_json(&OrientedGraph::empty(0), None), "{}");
        assert_eq!(from_json("{}").unwrap().graph.node_count(), 0);
        let g = Fixture::Furtherex.graph();
        let text = to_json(&g, None);
        assert!(!text.contains("neighborhood"));
        assert!(text.contains(r#""6":{"targets":[]}"#));
    }

    #[test]
    fn keys_are_numeric_order() {
        let g = crate::build_graph(12, &[(10, 2), (2, 11)]).unwrap();
        let text = to_json(&g, None);
        let pos = |k: &str| text.find(&format!("\"{k}\":")).unwrap();
        assert!(pos("2") < pos("10") && pos("10") < pos("11"));
    }

    #[test]
    fn rejections() {
        assert_eq!(from_json(r#"{"0":{"targets":[0]}}"#), Err(JsonError::Validation(GraphError::SelfLoop(NodeId(0)))));
        assert_eq!(from_json(r#"{"0":{"targets":[5]}}"#), Err(JsonError::DanglingTarget { node: 0, target: 5 }));
        assert_eq!(from_json(r#"{"a":{"targets":[]}}"#), Err(JsonError::BadKey("a".into())));
        assert_eq!(from_json(r#"{"1":{"targets":[]},"01":{"targets":[]}}"#), Err(JsonError::DuplicateKey(1)));
        assert!(matches!(from_json("[1, 2]"), Err(JsonError::Parse(_))));
        assert!(matches!(from_json(r#"{"0":{"targets":[-1]}}"#), Err(JsonError::Parse(_))));
        assert!(matches!(
            from_json(r#"{"0":{"targets":[1]},"1":{"targets":[0]}}"#),
            Err(JsonError::Validation(GraphError::SymmetricPair(NodeId(0), NodeId(1))))
        ));
    }

    #[test]
    fn irrint_table_audit() {
        let parsed = from_json(&fixture_document(Fixture::Irrint)).unwrap();
        assert_eq!(parsed.graph, Fixture::Irrint.graph());
        let l = build_layering(&parsed.graph, NodeId(0)).unwrap();
        let diff = audit_labels(&parsed.declared_labels, &l);
        let nodes: Vec<u32> = diff.iter().map(|m| m.node.0).collect();
        assert_eq!(nodes, vec![4, 5, 6, 7, 8, 9, 10, 11]);
        assert_eq!(diff[0].declared, "R_2");
        assert_eq!(diff[0].computed, "R_1");
        assert_eq!(diff[3].computed, "R_2");
    }
}
