//! JSON form of a plumbing graph.
//!
//! ```json
//! {
//!   "vertices": [{"euler": -3}, {"euler": -2}, {"euler": -1}],
//!   "edges": [[0, 2], [1, 2]],
//!   "distinguished": 2,
//!   "arrow": 2
//! }
//! ```
//!
//! Vertices are numbered by their position in `vertices`. `distinguished`
//! and `arrow` are optional and may be `null`.

use hfroots_core::plumbing::PlumbingGraph;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexJson {
    pub euler: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<[usize; 2]>,
    #[serde(default)]
    pub distinguished: Option<usize>,
    #[serde(default)]
    pub arrow: Option<usize>,
}

impl From<&PlumbingGraph> for GraphJson {
    fn from(g: &PlumbingGraph) -> Self {
        GraphJson {
            vertices: g
                .eulers()
                .iter()
                .map(|&euler| VertexJson { euler })
                .collect(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            distinguished: g.distinguished(),
            arrow: g.arrow(),
        }
    }
}

impl TryFrom<&GraphJson> for PlumbingGraph {
    type Error = hfroots_core::Error;

    fn try_from(g: &GraphJson) -> Result<Self, Self::Error> {
        PlumbingGraph::new(
            g.vertices.iter().map(|v| v.euler).collect(),
            g.edges.iter().map(|&[u, v]| (u, v)).collect(),
            g.distinguished,
            g.arrow,
        )
    }
}

pub fn from_str(s: &str) -> Result<PlumbingGraph, String> {
    let json: GraphJson = serde_json::from_str(s).map_err(|e| e.to_string())?;
    PlumbingGraph::try_from(&json).map_err(|e| e.to_string())
}

pub fn to_string(g: &PlumbingGraph) -> String {
    serde_json::to_string_pretty(&GraphJson::from(g)).expect("graph serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g =
            PlumbingGraph::new(vec![-3, -2, -1], vec![(0, 2), (1, 2)], Some(2), Some(2)).unwrap();
        assert_eq!(from_str(&to_string(&g)).unwrap(), g);
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(from_str(r#"{"vertices": [{"euler": -2}], "edges": [], "colour": 1}"#).is_err());
        assert!(from_str(r#"{"vertices": [{"euler": -2}, {"euler": -2}], "edges": []}"#).is_err());
        let g = from_str(r#"{"vertices": [{"euler": -2}], "edges": []}"#).unwrap();
        assert_eq!(g.distinguished(), None);
    }
}
