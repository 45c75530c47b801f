//! JSON graph descriptions.
//!
//! ```json
//! {"vertices": ["0", "1"],
//!  "edges": [{"tail": "0", "head": "1", "label": "1"}],
//!  "relation": {"mode": "linear", "order": ["1"]}}
//! ```
//!
//! `pairs` mode lists related label pairs instead:
//! `{"mode": "pairs", "pairs": [["1", "2"]]}`.

use serde::{Deserialize, Serialize};

use super::graph::{GraphError, LabeledDigraph, RelationMode};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeRecord>,
    pub relation: RelationRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub tail: String,
    pub head: String,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum RelationRecord {
    Linear { order: Vec<String> },
    Pairs { pairs: Vec<(String, String)> },
}

impl GraphFile {
    pub fn from_graph(g: &LabeledDigraph) -> Self {
        let g = g.prune_labels();
        let edges = g
            .edges()
            .iter()
            .map(|e| EdgeRecord {
                tail: g.vertex_name(e.tail).to_string(),
                head: g.vertex_name(e.head).to_string(),
                label: g.label_name(e.label).to_string(),
            })
            .collect();
        let name = |l: usize| g.label_name(l).to_string();
        let relation = match g.relation().mode() {
            RelationMode::Linear(order) => RelationRecord::Linear {
                order: order.iter().map(|&l| name(l)).collect(),
            },
            RelationMode::Pairs(pairs) => RelationRecord::Pairs {
                pairs: pairs.iter().map(|&(l, m)| (name(l), name(m))).collect(),
            },
        };
        GraphFile {
            vertices: g.vertices().to_vec(),
            edges,
            relation,
        }
    }

    pub fn to_graph(&self) -> Result<LabeledDigraph, GraphError> {
        let edges: Vec<(&str, &str, &str)> = self
            .edges
            .iter()
            .map(|e| (e.tail.as_str(), e.head.as_str(), e.label.as_str()))
            .collect();
        let vertices: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        match &self.relation {
            RelationRecord::Linear { order } => {
                let order: Vec<&str> = order.iter().map(String::as_str).collect();
                LabeledDigraph::from_linear(&vertices, &edges, &order)
            }
            RelationRecord::Pairs { pairs } => {
                let pairs: Vec<(&str, &str)> = pairs
                    .iter()
                    .map(|(l, m)| (l.as_str(), m.as_str()))
                    .collect();
                LabeledDigraph::from_pairs(&vertices, &edges, &pairs)
            }
        }
    }
}

impl LabeledDigraph {
    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let file: GraphFile =
            serde_json::from_str(text).map_err(|e| GraphError::Format(e.to_string()))?;
        file.to_graph()
    }

    /// Pretty-printed JSON with a trailing newline. Labels that no edge
    /// uses are dropped.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&GraphFile::from_graph(self))
            .expect("graph files always serialize");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_linear() {
        let text = r#"{"vertices": ["0", "1"],
            "edges": [{"tail": "0", "head": "1", "label": "1"},
                      {"tail": "0", "head": "1", "label": "1"}],
            "relation": {"mode": "linear", "order": ["1"]}}"#;
        let g = LabeledDigraph::from_json(text).unwrap();
        assert_eq!(g.edge_count(), 2);
        let again = LabeledDigraph::from_json(&g.to_json()).unwrap();
        assert_eq!(again, g);
    }

    #[test]
    fn roundtrip_pairs() {
        let text = r#"{"vertices": ["0", "x", "1"],
            "edges": [{"tail": "0", "head": "x", "label": "p"},
                      {"tail": "x", "head": "1", "label": "q"}],
            "relation": {"mode": "pairs", "pairs": [["p", "q"], ["q", "q"]]}}"#;
        let g = LabeledDigraph::from_json(text).unwrap();
        assert_eq!(g.ab_index(0, 2).unwrap().to_string(), "a");
        assert_eq!(LabeledDigraph::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            LabeledDigraph::from_json("{}"),
            Err(GraphError::Format(_))
        ));
        let text = r#"{"vertices": ["0"], "edges": [],
            "relation": {"mode": "cyclic", "order": []}}"#;
        assert!(matches!(
            LabeledDigraph::from_json(text),
            Err(GraphError::Format(_))
        ));
    }

    #[test]
    fn unused_labels_are_pruned_on_output() {
        let g =
            LabeledDigraph::from_linear(&["0", "1"], &[("0", "1", "b")], &["a", "b", "c"]).unwrap();
        let f = GraphFile::from_graph(&g);
        assert_eq!(
            f.relation,
            RelationRecord::Linear {
                order: vec!["b".into()]
            }
        );
    }
}
