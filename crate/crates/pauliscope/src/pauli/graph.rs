//! Commutation graph of the non-identity phase-free operators.

use super::{LabelScheme, QuditOperator};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default refusal threshold for graph construction.
pub const DEFAULT_VERTEX_CAP: usize = 1024;

/// A Pauli commutation graph together with its label scheme.
#[derive(Clone)]
pub struct PauliGraph {
    pub scheme: LabelScheme,
    pub graph: Graph,
}

impl PauliGraph {
    pub fn operator(&self, index: usize) -> &QuditOperator {
        self.scheme.operator(index)
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.scheme.index_of_label(label)
    }

    /// Vertex indices for a list of labels; panics on unknown labels, which
    /// only occur for typos in fixed test data.
    pub fn indices_of_labels(&self, labels: &[&str]) -> Vec<usize> {
        labels
            .iter()
            .map(|l| {
                self.scheme
                    .index_of_label(l)
                    .unwrap_or_else(|| panic!("unknown label {l:?}"))
            })
            .collect()
    }

    pub fn labels_of_indices(&self, indices: &[usize]) -> Vec<String> {
        indices
            .iter()
            .map(|&i| self.scheme.label(i).to_string())
            .collect()
    }
}

/// Builds the commutation graph on the `d^{2n} − 1` non-identity classes in
/// canonical label order; edges join distinct commuting operators, no loops.
pub fn build_pauli_graph(d: u8, n: usize, cap: Option<usize>) -> Result<PauliGraph> {
    let cap = cap.unwrap_or(DEFAULT_VERTEX_CAP);
    if d != 2 && d != 3 {
        return Err(Error::UnsupportedDimension(d));
    }
    let v = (d as usize).pow(2 * n as u32) - 1;
    if v > cap {
        return Err(Error::VertexCapExceeded { v, cap });
    }
    let scheme = LabelScheme::new(d, n)?;
    let mut graph = Graph::new(v);
    for i in 0..v {
        for j in (i + 1)..v {
            if scheme.operator(i).commutes_with(scheme.operator(j))? {
                graph.add_edge(i, j);
            }
        }
    }
    let graph = graph.with_labels(scheme.labels().to_vec());
    Ok(PauliGraph { scheme, graph })
}
