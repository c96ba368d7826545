//! DOT and JSON serialization of graphs.

use super::Graph;
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
struct GraphJson {
    v: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    edges: Vec<(usize, usize)>,
}

/// JSON object `{v, labels?, edges}` with edges `[i, j]`, `i < j`, sorted
/// lexicographically.
pub fn to_json(g: &Graph) -> String {
    let doc = GraphJson {
        v: g.v(),
        labels: g.labels().map(|ls| ls.to_vec()),
        edges: g.edges(),
    };
    serde_json::to_string_pretty(&doc).expect("graph serialization cannot fail")
}

pub fn graph_from_json(text: &str) -> serde_json::Result<Graph> {
    let doc: GraphJson = serde_json::from_str(text)?;
    let mut g = Graph::from_edges(doc.v, &doc.edges);
    if let Some(labels) = doc.labels {
        g = g.with_labels(labels);
    }
    Ok(g)
}

/// Undirected DOT output; vertex labels are preserved as node identifiers.
pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for x in 0..g.v() {
        out.push_str(&format!("  \"{}\";\n", g.label_of(x)));
    }
    for (a, b) in g.edges() {
        out.push_str(&format!("  \"{}\" -- \"{}\";\n", g.label_of(a), g.label_of(b)));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip_preserves_graph() {
        let g = Graph::petersen().with_labels((0..10).map(|i| format!("p{i}")).collect());
        let back = graph_from_json(&to_json(&g)).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn dot_lists_every_edge_once() {
        let g = Graph::complete(3);
        let dot = to_dot(&g, "k3");
        assert_eq!(dot.matches(" -- ").count(), 3);
    }
}
