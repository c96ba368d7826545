//! Mermin-grid certificates: exact line products over a 3x3 grid of
//! operators and the parity obstruction they certify.

use crate::error::{Error, Result};
use crate::pauli::PauliGraph;

#[derive(Clone, Debug)]
pub struct MerminCertificate {
    /// The nine grid points, sorted.
    pub points: Vec<usize>,
    /// The six grid lines with the sign of their operator product
    /// (+1 for +identity, −1 for −identity).
    pub lines: Vec<(Vec<usize>, i8)>,
    pub plus_lines: usize,
    pub minus_lines: usize,
    /// True when the product of all six line signs is −1, which is the
    /// parity obstruction: operator products force −identity overall while
    /// any fixed ±1 value assignment multiplies to +1.
    pub contradiction: bool,
}

/// Computes the certificate for nine operators forming a grid. The grid
/// condition — six product-closed commuting triples, each point on exactly
/// two, splitting into two parallel classes — is verified before any signs
/// are reported; rows and columns are not distinguished, only the sign
/// split is.
pub fn mermin_certificate(pg: &PauliGraph, points: &[usize]) -> Result<MerminCertificate> {
    if points.len() != 9 {
        return Err(Error::NotAGrid);
    }
    let mut sorted = points.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != 9 || sorted.iter().any(|&p| p >= pg.graph.v()) {
        return Err(Error::NotAGrid);
    }

    // Lines: commuting triples inside the nine that close under products.
    let mut lines: Vec<Vec<usize>> = Vec::new();
    for (i, &a) in sorted.iter().enumerate() {
        for (j, &b) in sorted.iter().enumerate().skip(i + 1) {
            for &c in &sorted[j + 1..] {
                let commuting = pg.graph.has_edge(a, b)
                    && pg.graph.has_edge(a, c)
                    && pg.graph.has_edge(b, c);
                if !commuting {
                    continue;
                }
                let prod = pg.operator(a).multiply(pg.operator(b))?;
                if pg.scheme.class_index(&prod) == Some(c) {
                    lines.push(vec![a, b, c]);
                }
            }
        }
    }
    if lines.len() != 6 {
        return Err(Error::NotAGrid);
    }
    for &p in &sorted {
        if lines.iter().filter(|l| l.contains(&p)).count() != 2 {
            return Err(Error::NotAGrid);
        }
    }
    // Two parallel classes: the two ways of partitioning the nine points
    // into three pairwise disjoint lines.
    let mut partitions = 0;
    for (i, a) in lines.iter().enumerate() {
        for (j, b) in lines.iter().enumerate().skip(i + 1) {
            if a.iter().any(|p| b.contains(p)) {
                continue;
            }
            for c in &lines[j + 1..] {
                let disjoint =
                    !a.iter().chain(b).any(|p| c.contains(p));
                if disjoint {
                    partitions += 1;
                }
            }
        }
    }
    if partitions != 2 {
        return Err(Error::NotAGrid);
    }

    let mut signed = Vec::with_capacity(6);
    let (mut plus, mut minus) = (0, 0);
    for line in lines {
        let product = pg
            .operator(line[0])
            .multiply(pg.operator(line[1]))?
            .multiply(pg.operator(line[2]))?;
        if !product.is_identity_class() {
            return Err(Error::NotAGrid);
        }
        let sign: i8 = match product.phase() {
            0 => 1,
            2 => -1,
            _ => return Err(Error::NotAGrid),
        };
        if sign > 0 {
            plus += 1;
        } else {
            minus += 1;
        }
        signed.push((line, sign));
    }
    let total: i8 = signed.iter().map(|&(_, s)| s).product();
    Ok(MerminCertificate {
        points: sorted,
        lines: signed,
        plus_lines: plus,
        minus_lines: minus,
        contradiction: total == -1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::build_pauli_graph;

    #[test]
    fn canonical_grid_certificate() {
        let pg = build_pauli_graph(2, 2, None).unwrap();
        let grid = pg.indices_of_labels(&["4", "5", "6", "7", "8", "9", "10", "11", "12"]);
        let cert = mermin_certificate(&pg, &grid).unwrap();
        assert_eq!(cert.plus_lines, 3);
        assert_eq!(cert.minus_lines, 3);
        assert!(cert.contradiction);

        // 4·8·12 = −identity, 4·9·11 = +identity.
        let find_sign = |labels: &[&str]| {
            let mut idx = pg.indices_of_labels(labels);
            idx.sort_unstable();
            cert.lines
                .iter()
                .find(|(l, _)| {
                    let mut ll = l.clone();
                    ll.sort_unstable();
                    ll == idx
                })
                .map(|&(_, s)| s)
                .expect("line present")
        };
        assert_eq!(find_sign(&["4", "8", "12"]), -1);
        assert_eq!(find_sign(&["4", "9", "11"]), 1);
    }

    #[test]
    fn non_grids_are_rejected() {
        let pg = build_pauli_graph(2, 2, None).unwrap();
        // The bipartite part is not a grid.
        let not_grid: Vec<usize> = (0..9).collect();
        assert!(matches!(
            mermin_certificate(&pg, &not_grid),
            Err(Error::NotAGrid)
        ));
        // Wrong cardinality.
        assert!(matches!(
            mermin_certificate(&pg, &[0, 1, 2]),
            Err(Error::NotAGrid)
        ));
    }

    #[test]
    fn every_grid_hyperplane_certifies_the_obstruction() {
        // The sign split varies from grid to grid, but the number of
        // −identity lines is always odd, so the parity obstruction holds
        // for each of the ten grids.
        use crate::quadrangle::{classify_hyperplanes, w2_from_graph, HyperplaneKind};
        let pg = build_pauli_graph(2, 2, None).unwrap();
        let geom = w2_from_graph(&pg).unwrap();
        for h in classify_hyperplanes(&geom) {
            if h.kind == HyperplaneKind::Grid {
                let cert = mermin_certificate(&pg, &h.points).unwrap();
                assert_eq!(cert.plus_lines + cert.minus_lines, 6);
                assert_eq!(cert.minus_lines % 2, 1);
                assert!(cert.contradiction);
            }
        }
    }
}
