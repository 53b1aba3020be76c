//! The JSON graph document: `{"vertices":3,"edges":[[0,1],[0,2],[1,2]]}`.
//!
//! Edge `k` of the ordered graph is the `k`-th pair of the list, directed
//! from its first vertex to its second. That direction is the reference
//! orientation.

use std::io::Read;
use std::path::Path;

use active_bijection::{Digraph, Limits, OrderedGraph};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphDocument {
    pub fn from_graph(g: &OrderedGraph) -> GraphDocument {
        GraphDocument {
            vertices: g.ambient_vertex_count(),
            edges: g.edges().iter().map(|e| g.ambient_endpoints(e)).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    /// Validates the document and builds the graph and its reference
    /// orientation.
    pub fn build(&self, limits: Limits) -> Result<(OrderedGraph, Digraph), CliError> {
        if self.edges.is_empty() {
            return Err(CliError::Input("the edge list is empty".into()));
        }
        for (k, &(u, v)) in self.edges.iter().enumerate() {
            if u >= self.vertices || v >= self.vertices {
                return Err(CliError::Input(format!(
                    "edge {} = [{u},{v}] uses a vertex outside 0..{}",
                    k + 1,
                    self.vertices
                )));
            }
        }
        let mut touched = vec![false; self.vertices];
        for &(u, v) in &self.edges {
            touched[u] = true;
            touched[v] = true;
        }
        if let Some(v) = touched.iter().position(|t| !t) {
            return Err(CliError::Input(format!(
                "the graph is disconnected: vertex {v} has no edge"
            )));
        }
        let g = OrderedGraph::with_limits(self.vertices, &self.edges, limits)
            .map_err(|e| CliError::Input(e.to_string()))?;
        let d = Digraph::new(g.clone());
        Ok((g, d))
    }
}

/// Parses a document, reporting the line and column of syntax errors.
pub fn parse_document(text: &str) -> Result<GraphDocument, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        message: {
            let full = e.to_string();
            full.split(" at line ").next().unwrap_or_default().to_string()
        },
    })
}

pub fn parse_graph(text: &str, limits: Limits) -> Result<(OrderedGraph, Digraph), CliError> {
    parse_document(text)?.build(limits)
}

/// Reads a document from `path`, or from standard input when `path` is `-`.
pub fn read_graph(path: &Path, limits: Limits) -> Result<(OrderedGraph, Digraph), CliError> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?
    };
    parse_graph(&text, limits)
}
