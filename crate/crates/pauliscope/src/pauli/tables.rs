//! Product and commutation table renderers (UTF-8 CSV) and the adjacency
//! JSON format.

use super::{LabelScheme, PauliGraph, QuditOperator};
use crate::error::Result;
use serde_json::json;

/// Renders a product as a phase-tagged label: `"i3"`, `"-12"`, `"-i11"` for
/// qubits; `"w*41"`, `"w2*41"` for qutrits. Identity-class products render
/// as `"0"`. The phase tag is relative to the labeled operator, which may
/// itself carry a phase.
pub fn render_product(scheme: &LabelScheme, product: &QuditOperator) -> String {
    let (relative, base) = if product.is_identity_class() {
        (product.phase(), "0".to_string())
    } else {
        let (rel, idx) = scheme
            .decompose(product)
            .expect("product of scheme operators stays in the scheme");
        (rel, scheme.label(idx).to_string())
    };
    let prefix = match (product.d(), relative) {
        (_, 0) => "",
        (2, 1) => "i",
        (2, 2) => "-",
        (2, 3) => "-i",
        (3, 1) => "w*",
        (3, 2) => "w2*",
        _ => unreachable!("phase exponents are reduced"),
    };
    format!("{prefix}{base}")
}

/// Full product table as CSV in canonical label order.
pub fn product_table_csv(pg: &PauliGraph) -> Result<String> {
    let s = &pg.scheme;
    let mut out = String::new();
    out.push_str(&header(s));
    for i in 0..s.len() {
        let mut row = vec![s.label(i).to_string()];
        for j in 0..s.len() {
            let product = s.operator(i).multiply(s.operator(j))?;
            row.push(render_product(s, &product));
        }
        out.push_str(&row.join(","));
        out.push('\n');
    }
    Ok(out)
}

/// 0/1 commutation matrix as CSV; the diagonal is written as 0 so the table
/// doubles as the adjacency matrix of the commutation graph.
pub fn commutation_table_csv(pg: &PauliGraph) -> String {
    let s = &pg.scheme;
    let mut out = String::new();
    out.push_str(&header(s));
    for i in 0..s.len() {
        let mut row = vec![s.label(i).to_string()];
        for j in 0..s.len() {
            row.push(if pg.graph.has_edge(i, j) { "1" } else { "0" }.to_string());
        }
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn header(s: &LabelScheme) -> String {
    let mut cells = vec![String::new()];
    cells.extend(s.labels().iter().cloned());
    format!("{}\n", cells.join(","))
}

/// Adjacency JSON `{d, n, labels, edges}` with edges `[i, j]`, `i < j`,
/// sorted lexicographically.
pub fn pauli_graph_json(pg: &PauliGraph) -> String {
    let doc = json!({
        "d": pg.scheme.d(),
        "n": pg.scheme.n(),
        "labels": pg.scheme.labels(),
        "edges": pg.graph.edges(),
    });
    serde_json::to_string_pretty(&doc).expect("serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::build_pauli_graph;

    fn cell(csv: &str, row_label: &str, col_label: &str) -> String {
        let mut lines = csv.lines();
        let header: Vec<&str> = lines.next().unwrap().split(',').collect();
        let col = header.iter().position(|&c| c == col_label).unwrap();
        for line in lines {
            let cells: Vec<&str> = line.split(',').collect();
            if cells[0] == row_label {
                return cells[col].to_string();
            }
        }
        panic!("row {row_label} not found");
    }

    #[test]
    fn product_table_fixtures() {
        let pg = build_pauli_graph(2, 2, None).unwrap();
        let table = product_table_csv(&pg).unwrap();
        assert_eq!(cell(&table, "1", "2"), "i3");
        assert_eq!(cell(&table, "4", "8"), "-12");
        assert_eq!(cell(&table, "8", "10"), "6");
        assert_eq!(cell(&table, "8", "12"), "-4");
        assert_eq!(cell(&table, "a", "b"), "ic");
        // Phase-carrying targets: the tag is relative to the labeled
        // operator, not to the bare X/Z word.
        assert_eq!(cell(&table, "1", "3"), "-i2");
        assert_eq!(cell(&table, "2", "7"), "-i9");
        assert_eq!(cell(&table, "7", "a"), "-i10");
        // Every diagonal entry is the identity.
        for l in pg.scheme.labels() {
            assert_eq!(cell(&table, l, l), "0");
        }
    }

    #[test]
    fn commutation_table_fixtures() {
        let pg = build_pauli_graph(2, 2, None).unwrap();
        let table = commutation_table_csv(&pg);
        assert_eq!(cell(&table, "1", "a"), "1");
        assert_eq!(cell(&table, "1", "2"), "0");
        for l in pg.scheme.labels() {
            assert_eq!(cell(&table, l, l), "0");
        }
    }

    #[test]
    fn phase_closure_over_all_products() {
        for (d, n) in [(2u8, 2usize), (3, 2)] {
            let pg = build_pauli_graph(d, n, None).unwrap();
            let s = &pg.scheme;
            let max_phase = QuditOperator::phase_order(d);
            for i in 0..s.len() {
                for j in 0..s.len() {
                    let p = s.operator(i).multiply(s.operator(j)).unwrap();
                    assert!(p.phase() < max_phase);
                }
            }
        }
    }

    #[test]
    fn json_export_shape() {
        let pg = build_pauli_graph(2, 2, None).unwrap();
        let doc: serde_json::Value = serde_json::from_str(&pauli_graph_json(&pg)).unwrap();
        assert_eq!(doc["d"], 2);
        assert_eq!(doc["n"], 2);
        assert_eq!(doc["labels"].as_array().unwrap().len(), 15);
        assert_eq!(doc["edges"].as_array().unwrap().len(), 45);
    }
}
