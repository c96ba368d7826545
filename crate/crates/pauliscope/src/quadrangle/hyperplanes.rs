//! Geometric hyperplanes of the quadrangle, enumerated exhaustively, and
//! spreads (line sets partitioning the points).

use super::PointLineGeometry;
use crate::bits::BitSet;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HyperplaneKind {
    /// All points collinear with a reference point, the point included.
    PerpSet,
    /// Nine points on six lines (a 3x3 grid).
    Grid,
    /// Meets every line in exactly one point.
    Ovoid,
}

impl HyperplaneKind {
    pub fn name(&self) -> &'static str {
        match self {
            HyperplaneKind::PerpSet => "perp-set",
            HyperplaneKind::Grid => "grid",
            HyperplaneKind::Ovoid => "ovoid",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HyperplaneClass {
    pub kind: HyperplaneKind,
    /// Sorted point indices.
    pub points: Vec<usize>,
    /// Reference point, for perp-sets only.
    pub reference: Option<usize>,
}

/// Enumerates every geometric hyperplane by brute force over all proper
/// point subsets (instant at this size, and guarantees completeness), then
/// classifies by the number of lines fully contained: 0 lines = ovoid,
/// concurrent triple = perp-set, 6 lines = grid.
pub fn classify_hyperplanes(geom: &PointLineGeometry) -> Vec<HyperplaneClass> {
    let n = geom.point_count();
    assert!(n <= 20, "exhaustive hyperplane search is sized for W(2)");
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) - 1 {
        let points = BitSet::from_indices(n, &mask_indices(mask));
        if !geom.is_hyperplane(&points) {
            continue;
        }
        let inside: Vec<usize> = points.to_vec();
        let full_lines = geom
            .lines()
            .iter()
            .filter(|l| l.iter().all(|&p| points.contains(p)))
            .count();
        let kind = match full_lines {
            0 => HyperplaneKind::Ovoid,
            3 => HyperplaneKind::PerpSet,
            6 => HyperplaneKind::Grid,
            k => panic!("unexpected hyperplane with {k} full lines"),
        };
        let reference = match kind {
            HyperplaneKind::PerpSet => inside
                .iter()
                .copied()
                .find(|&r| inside.iter().all(|&q| q == r || geom.collinear(r, q))),
            _ => None,
        };
        out.push(HyperplaneClass {
            kind,
            points: inside,
            reference,
        });
    }
    out.sort_by_key(|h| (h.kind.name(), h.points.clone()));
    out
}

fn mask_indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

/// All spreads: partitions of the point set into pairwise disjoint lines,
/// found by exact-cover backtracking on the lowest uncovered point.
pub fn spreads(geom: &PointLineGeometry) -> Vec<Vec<usize>> {
    let n = geom.point_count();
    let line_sets: Vec<BitSet> = geom
        .lines()
        .iter()
        .map(|l| BitSet::from_indices(n, l))
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    cover(
        geom,
        &line_sets,
        &BitSet::new(n),
        &mut chosen,
        &mut out,
    );
    out.sort();
    out
}

fn cover(
    geom: &PointLineGeometry,
    line_sets: &[BitSet],
    covered: &BitSet,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let n = geom.point_count();
    let next = (0..n).find(|&p| !covered.contains(p));
    let next = match next {
        Some(p) => p,
        None => {
            let mut solution = chosen.clone();
            solution.sort_unstable();
            out.push(solution);
            return;
        }
    };
    for (i, line) in line_sets.iter().enumerate() {
        if line.contains(next) && line.is_disjoint(covered) {
            chosen.push(i);
            cover(geom, line_sets, &covered.union(line), chosen, out);
            chosen.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::build_pauli_graph;
    use crate::quadrangle::w2_from_graph;

    #[test]
    fn census_is_15_10_6() {
        let pg = build_pauli_graph(2, 2, None).unwrap();
        let geom = w2_from_graph(&pg).unwrap();
        let hs = classify_hyperplanes(&geom);
        let count = |k: HyperplaneKind| hs.iter().filter(|h| h.kind == k).count();
        assert_eq!(count(HyperplaneKind::PerpSet), 15);
        assert_eq!(count(HyperplaneKind::Grid), 10);
        assert_eq!(count(HyperplaneKind::Ovoid), 6);
        assert_eq!(hs.len(), 31);
        // Sizes follow the kinds.
        for h in &hs {
            let expected = match h.kind {
                HyperplaneKind::Ovoid => 5,
                HyperplaneKind::PerpSet => 7,
                HyperplaneKind::Grid => 9,
            };
            assert_eq!(h.points.len(), expected);
        }
    }

    #[test]
    fn named_instances_classify_correctly() {
        let pg = build_pauli_graph(2, 2, None).unwrap();
        let geom = w2_from_graph(&pg).unwrap();
        let hs = classify_hyperplanes(&geom);

        let find = |labels: &[&str]| {
            let mut idx = pg.indices_of_labels(labels);
            idx.sort_unstable();
            hs.iter().find(|h| h.points == idx).cloned()
        };
        let ovoid = find(&["1", "2", "6", "9", "12"]).expect("ovoid present");
        assert_eq!(ovoid.kind, HyperplaneKind::Ovoid);

        let perp = find(&["1", "2", "3", "a", "4", "5", "6"]).expect("perp-set present");
        assert_eq!(perp.kind, HyperplaneKind::PerpSet);
        assert_eq!(perp.reference, pg.index_of_label("a"));

        let grid = find(&["4", "5", "6", "7", "8", "9", "10", "11", "12"]).expect("grid");
        assert_eq!(grid.kind, HyperplaneKind::Grid);
    }

    #[test]
    fn six_spreads_each_partitioning() {
        let pg = build_pauli_graph(2, 2, None).unwrap();
        let geom = w2_from_graph(&pg).unwrap();
        let all = spreads(&geom);
        assert_eq!(all.len(), 6);
        for spread in &all {
            assert_eq!(spread.len(), 5);
            let mut seen = std::collections::HashSet::new();
            for &li in spread {
                for &p in &geom.lines()[li] {
                    assert!(seen.insert(p), "point covered twice");
                }
            }
            assert_eq!(seen.len(), 15);
        }
    }
}
