use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::ParseError;

/// Wire form of the JSON edge list: `{"n": 4, "edges": [[0,1],[1,2]], "labels": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeListJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

pub fn parse_edge_list_json(text: &str) -> Result<Graph, ParseError> {
    let wire: EdgeListJson = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    let g = Graph::new(wire.n, wire.edges.iter().map(|&[a, b]| (a, b)))?;
    match wire.labels {
        Some(labels) => g.with_labels(labels),
        None => Ok(g),
    }
}

pub fn to_edge_list_json(g: &Graph) -> EdgeListJson {
    EdgeListJson {
        n: g.n(),
        edges: g.edges().map(|(a, b)| [a, b]).collect(),
        labels: g.labels().map(<[String]>::to_vec),
    }
}
