//! The generalized-quadrangle layer over the two-qubit commutation graph:
//! lines, geometric hyperplanes, spreads, triads, the three classical
//! factorizations, Mermin-grid certificates and entanglement of line bases.

mod configs;
mod entangle;
mod factorize;
mod hyperplanes;
mod mermin;
mod triads;

pub use configs::{desargues_lines, fano_plane, verify_configuration};
pub use entangle::{line_basis_entanglement, operator_matrix, Entanglement, Gauss};
pub use factorize::{factorize, FactorMode, Factorization};
pub use hyperplanes::{classify_hyperplanes, spreads, HyperplaneClass, HyperplaneKind};
pub use mermin::{mermin_certificate, MerminCertificate};
pub use triads::{classify_triads, Triad, TriadClassification};

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graph::{maximal_cliques, Graph};
use crate::pauli::PauliGraph;
use serde_json::json;

/// A finite point-line incidence structure. Lines are stored as sorted
/// point-index lists, the line list itself sorted lexicographically.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointLineGeometry {
    point_labels: Vec<String>,
    lines: Vec<Vec<usize>>,
}

impl PointLineGeometry {
    pub fn new(point_labels: Vec<String>, mut lines: Vec<Vec<usize>>) -> Self {
        for line in &mut lines {
            line.sort_unstable();
        }
        lines.sort();
        PointLineGeometry {
            point_labels,
            lines,
        }
    }

    pub fn point_count(&self) -> usize {
        self.point_labels.len()
    }

    pub fn point_labels(&self) -> &[String] {
        &self.point_labels
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    pub fn lines_through(&self, p: usize) -> Vec<usize> {
        (0..self.lines.len())
            .filter(|&i| self.lines[i].contains(&p))
            .collect()
    }

    /// Two distinct points are collinear when some line carries both.
    pub fn collinear(&self, p: usize, q: usize) -> bool {
        p != q && self.lines.iter().any(|l| l.contains(&p) && l.contains(&q))
    }

    /// Perp-set of `p`: every point collinear with `p`, plus `p` itself.
    pub fn perp(&self, p: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.point_count())
            .filter(|&q| q == p || self.collinear(p, q))
            .collect();
        out.sort_unstable();
        out
    }

    /// Near-linearity: two points lie on at most one common line.
    pub fn is_near_linear(&self) -> bool {
        let n = self.point_count();
        let mut seen = vec![false; n * n];
        for line in &self.lines {
            for (i, &p) in line.iter().enumerate() {
                for &q in &line[i + 1..] {
                    if seen[p * n + q] {
                        return false;
                    }
                    seen[p * n + q] = true;
                }
            }
        }
        true
    }

    /// Geometric hyperplane test: every line meets the set in exactly one
    /// point or lies fully inside it.
    pub fn is_hyperplane(&self, points: &BitSet) -> bool {
        self.lines.iter().all(|line| {
            let inside = line.iter().filter(|&&p| points.contains(p)).count();
            inside == 1 || inside == line.len()
        })
    }

    /// Checks the generalized-quadrangle axioms and returns the order
    /// `(s, t)`: lines of s+1 points, points on t+1 lines, and for every
    /// non-incident point-line pair exactly one point of the line collinear
    /// with the point.
    pub fn quadrangle_order(&self) -> Result<(usize, usize)> {
        if !self.is_near_linear() {
            return Err(Error::NotAQuadrangle("not near-linear".to_string()));
        }
        let line_size = self.lines.first().map_or(0, |l| l.len());
        if line_size < 2 || self.lines.iter().any(|l| l.len() != line_size) {
            return Err(Error::NotAQuadrangle("line sizes differ".to_string()));
        }
        let per_point = self.lines_through(0).len();
        if (0..self.point_count()).any(|p| self.lines_through(p).len() != per_point) {
            return Err(Error::NotAQuadrangle("point degrees differ".to_string()));
        }
        for p in 0..self.point_count() {
            for line in &self.lines {
                if line.contains(&p) {
                    continue;
                }
                let joined = line.iter().filter(|&&q| self.collinear(p, q)).count();
                if joined != 1 {
                    return Err(Error::NotAQuadrangle(format!(
                        "point {p} sees {joined} points of a disjoint line"
                    )));
                }
            }
        }
        Ok((line_size - 1, per_point - 1))
    }

    /// Graph on the points with edges between collinear pairs.
    pub fn collinearity_graph(&self) -> Graph {
        let mut g = Graph::new(self.point_count());
        for line in &self.lines {
            for (i, &p) in line.iter().enumerate() {
                for &q in &line[i + 1..] {
                    if !g.has_edge(p, q) {
                        g.add_edge(p, q);
                    }
                }
            }
        }
        g.with_labels(self.point_labels.clone())
    }

    /// Geometry JSON including classified hyperplanes and spreads.
    pub fn to_json(&self) -> serde_json::Value {
        let hyperplanes = classify_hyperplanes(self);
        let spreads = spreads(self);
        json!({
            "points": self.point_labels,
            "lines": self.lines,
            "hyperplanes": hyperplanes.iter().map(|h| json!({
                "kind": h.kind.name(),
                "points": h.points,
                "reference": h.reference,
            })).collect::<Vec<_>>(),
            "spreads": spreads,
        })
    }
}

/// Reads the quadrangle structure off the two-qubit commutation graph:
/// lines are the maximal sets of mutually commuting operators. The
/// quadrangle axioms and product-closure of every line are verified.
pub fn w2_from_graph(pg: &PauliGraph) -> Result<PointLineGeometry> {
    if pg.scheme.d() != 2 || pg.scheme.n() != 2 {
        return Err(Error::NotAQuadrangle(
            "expected the two-qubit commutation graph".to_string(),
        ));
    }
    let lines = maximal_cliques(&pg.graph);
    let geom = PointLineGeometry::new(pg.scheme.labels().to_vec(), lines);
    let (s, t) = geom.quadrangle_order()?;
    if (s, t) != (2, 2) || geom.point_count() != 15 || geom.line_count() != 15 {
        return Err(Error::NotAQuadrangle(format!(
            "order ({s},{t}) with {} lines",
            geom.line_count()
        )));
    }
    // Each line is closed under multiplication up to phase.
    for line in geom.lines() {
        let (a, b, c) = (line[0], line[1], line[2]);
        let prod = pg.operator(a).multiply(pg.operator(b))?;
        if pg.scheme.class_index(&prod) != Some(c) {
            return Err(Error::NotAQuadrangle(format!(
                "line {line:?} is not closed under products"
            )));
        }
    }
    Ok(geom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::build_pauli_graph;

    fn w2() -> (PauliGraph, PointLineGeometry) {
        let pg = build_pauli_graph(2, 2, None).unwrap();
        let geom = w2_from_graph(&pg).unwrap();
        (pg, geom)
    }

    #[test]
    fn w2_has_fifteen_lines_of_three() {
        let (_, geom) = w2();
        assert_eq!(geom.line_count(), 15);
        assert!(geom.lines().iter().all(|l| l.len() == 3));
        assert_eq!(geom.quadrangle_order().unwrap(), (2, 2));
    }

    #[test]
    fn one_a_four_is_a_line() {
        let (pg, geom) = w2();
        let mut line = pg.indices_of_labels(&["1", "a", "4"]);
        line.sort_unstable();
        assert!(geom.lines().contains(&line));
    }

    #[test]
    fn every_point_on_three_lines_and_six_collinear() {
        let (_, geom) = w2();
        for p in 0..15 {
            assert_eq!(geom.lines_through(p).len(), 3);
            assert_eq!(geom.perp(p).len(), 7);
        }
    }

    #[test]
    fn collinearity_graph_matches_commutation() {
        let (pg, geom) = w2();
        assert_eq!(geom.collinearity_graph(), pg.graph);
    }

    #[test]
    fn rejects_wrong_input() {
        let pg = build_pauli_graph(3, 2, None).unwrap();
        assert!(w2_from_graph(&pg).is_err());
    }
}
