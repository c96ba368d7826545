//! Projective configurations: (v_a, e_b) verification and the small named
//! instances used as cross-checks.

use super::PointLineGeometry;
use crate::pauli::PauliGraph;
use crate::Result;

/// Checks a (v_a, e_b) configuration: `point_count` points each on
/// `lines_per_point` lines, every line carrying `points_per_line` points,
/// and near-linearity (two points share at most one line).
pub fn verify_configuration(
    point_count: usize,
    lines: &[Vec<usize>],
    lines_per_point: usize,
    points_per_line: usize,
) -> bool {
    if lines
        .iter()
        .any(|l| l.len() != points_per_line || l.iter().any(|&p| p >= point_count))
    {
        return false;
    }
    for p in 0..point_count {
        if lines.iter().filter(|l| l.contains(&p)).count() != lines_per_point {
            return false;
        }
    }
    let geom = PointLineGeometry::new(
        (0..point_count).map(|p| p.to_string()).collect(),
        lines.to_vec(),
    );
    geom.is_near_linear()
}

/// The smallest projective plane: seven points (nonzero binary triples)
/// and the seven triples summing to zero.
pub fn fano_plane() -> PointLineGeometry {
    let labels = (1..=7u8).map(|p| p.to_string()).collect();
    let mut lines = Vec::new();
    for x in 1..8usize {
        for y in (x + 1)..8 {
            let z = x ^ y;
            if z > y {
                lines.push(vec![x - 1, y - 1, z - 1]);
            }
        }
    }
    PointLineGeometry::new(labels, lines)
}

/// Lines of the ten-point configuration on a vertex subset: triples of
/// pairwise non-commuting operators closed under multiplication up to a
/// phase. Returned as positions within `vertices`.
pub fn desargues_lines(pg: &PauliGraph, vertices: &[usize]) -> Result<Vec<Vec<usize>>> {
    let mut lines = Vec::new();
    for (i, &a) in vertices.iter().enumerate() {
        for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
            for (k, &c) in vertices.iter().enumerate().skip(j + 1) {
                let anti = !pg.graph.has_edge(a, b)
                    && !pg.graph.has_edge(a, c)
                    && !pg.graph.has_edge(b, c);
                if !anti {
                    continue;
                }
                let prod = pg.operator(a).multiply(pg.operator(b))?;
                if pg.scheme.class_index(&prod) == Some(c) {
                    lines.push(vec![i, j, k]);
                }
            }
        }
    }
    Ok(lines)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::build_pauli_graph;

    #[test]
    fn fano_is_a_7_3_configuration() {
        let fano = fano_plane();
        assert_eq!(fano.point_count(), 7);
        assert_eq!(fano.line_count(), 7);
        assert!(verify_configuration(7, fano.lines(), 3, 3));
    }

    #[test]
    fn petersen_cover_complement_is_10_3() {
        let pg = build_pauli_graph(2, 2, None).unwrap();
        let cover = pg.indices_of_labels(&["3", "a", "4", "5", "b", "7", "8", "c", "10", "11"]);
        let lines = desargues_lines(&pg, &cover).unwrap();
        assert_eq!(lines.len(), 10);
        assert!(verify_configuration(10, &lines, 3, 3));
    }

    #[test]
    fn degenerate_configurations_fail() {
        // A repeated pair of points across two lines breaks near-linearity.
        let lines = vec![vec![0, 1, 2], vec![0, 1, 3]];
        assert!(!verify_configuration(4, &lines, 1, 3));
        // Wrong line size.
        assert!(!verify_configuration(3, &[vec![0, 1]], 1, 3));
    }
}
