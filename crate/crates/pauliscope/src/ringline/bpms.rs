//! The ring-geometric derivation of the bipartite + grid factorization:
//! points simultaneously distant to a reference pair have unit coordinates
//! and induce the bipartite part; simultaneous neighbors have zero-divisor
//! coordinates and induce the grid.

use super::line::{distant, ProjectiveLine};
use crate::graph::Graph;

/// A choice of orbit representatives for the nine common neighbors that
/// exhibits the grid polarization: three first-coordinate values and three
/// second-coordinate values with one point per cell, columns and rows
/// being the six neighbor-triples.
#[derive(Clone, Debug)]
pub struct PolarizedGrid {
    pub firsts: [u8; 3],
    pub seconds: [u8; 3],
    /// Cell representatives, row-major over (firsts × seconds).
    pub cells: Vec<(u8, u8)>,
}

#[derive(Clone, Debug)]
pub struct BpMsSplit {
    /// Canonical representatives of the points distant to both reference
    /// points.
    pub distant_to_both: Vec<(u8, u8)>,
    /// Canonical representatives of the common neighbors.
    pub neighbor_to_both: Vec<(u8, u8)>,
    /// Induced neighbor graph on the distant-to-both six.
    pub bp_graph: Graph,
    /// Induced neighbor graph on the neighbor-to-both nine.
    pub ms_graph: Graph,
    /// Both coordinates of every distant-to-both point are units.
    pub distant_have_unit_coordinates: bool,
    /// Both coordinates of every common neighbor are zero divisors.
    pub neighbors_have_zero_divisor_coordinates: bool,
    /// Representative choice realizing the column/row polarization, when
    /// one exists.
    pub polarized: Option<PolarizedGrid>,
}

/// Splits the matrix-ring line by the reference pair U₀ = (1,0),
/// V₀ = (0,1).
pub fn bp_ms_from_reference_pair(line: &ProjectiveLine) -> BpMsSplit {
    let ring = &line.ring;
    let u0 = (ring.one, 0u8);
    let v0 = (0u8, ring.one);

    let mut distant_both = Vec::new();
    let mut neighbor_both = Vec::new();
    for p in &line.points {
        if p.rep == u0 || p.rep == v0 {
            continue;
        }
        let (du, dv) = (distant(ring, p.rep, u0), distant(ring, p.rep, v0));
        if du && dv {
            distant_both.push(p.rep);
        } else if !du && !dv {
            neighbor_both.push(p.rep);
        }
    }
    distant_both.sort_unstable();
    neighbor_both.sort_unstable();

    let induced = |set: &[(u8, u8)]| -> Graph {
        let mut g = Graph::new(set.len());
        for i in 0..set.len() {
            for j in (i + 1)..set.len() {
                if !distant(ring, set[i], set[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    };
    let bp_graph = induced(&distant_both);
    let ms_graph = induced(&neighbor_both);

    let units_ok = distant_both
        .iter()
        .all(|&(a, b)| ring.is_unit(a) && ring.is_unit(b));
    let zd_ok = neighbor_both
        .iter()
        .all(|&(a, b)| !ring.is_unit(a) && !ring.is_unit(b));

    let polarized = find_polarized_grid(line, &neighbor_both);

    BpMsSplit {
        distant_to_both: distant_both,
        neighbor_to_both: neighbor_both,
        bp_graph,
        ms_graph,
        distant_have_unit_coordinates: units_ok,
        neighbors_have_zero_divisor_coordinates: zd_ok,
        polarized,
    }
}

/// Looks for orbit representatives of the nine classes forming an exact
/// 3×3 coordinate product, with same-first and same-second triples mutually
/// neighbor (the six grid lines).
fn find_polarized_grid(line: &ProjectiveLine, classes: &[(u8, u8)]) -> Option<PolarizedGrid> {
    if classes.len() != 9 {
        return None;
    }
    let ring = &line.ring;
    let orbits: Vec<Vec<(u8, u8)>> = classes
        .iter()
        .map(|&(a, b)| {
            let mut o: Vec<(u8, u8)> = ring
                .units
                .iter()
                .map(|&u| (ring.mul(u, a), ring.mul(u, b)))
                .collect();
            o.sort_unstable();
            o.dedup();
            o
        })
        .collect();
    let mut first_values: Vec<u8> = orbits.iter().flatten().map(|&(a, _)| a).collect();
    first_values.sort_unstable();
    first_values.dedup();

    for (i, &f0) in first_values.iter().enumerate() {
        for (j, &f1) in first_values.iter().enumerate().skip(i + 1) {
            for &f2 in &first_values[j + 1..] {
                let firsts = [f0, f1, f2];
                // One representative per class with first coordinate in the
                // triple; several orbit members may qualify, so pick a
                // combination whose cells tile 3×3.
                let candidates: Vec<Vec<(u8, u8)>> = orbits
                    .iter()
                    .map(|o| {
                        o.iter()
                            .copied()
                            .filter(|&(a, _)| firsts.contains(&a))
                            .collect()
                    })
                    .collect();
                if candidates.iter().any(|c: &Vec<(u8, u8)>| c.is_empty()) {
                    continue;
                }
                let mut cells = Vec::with_capacity(9);
                if let Some(grid) =
                    choose_cells(ring, &candidates, firsts, 0, &mut cells)
                {
                    return Some(grid);
                }
            }
        }
    }
    None
}

/// Picks one candidate per class so that the cells tile an exact 3×3
/// coordinate product whose columns and rows are neighbor triples;
/// enumerates assignments with pruning and validates fully at the leaves.
fn choose_cells(
    ring: &super::FiniteRing,
    candidates: &[Vec<(u8, u8)>],
    firsts: [u8; 3],
    depth: usize,
    cells: &mut Vec<(u8, u8)>,
) -> Option<PolarizedGrid> {
    if depth == candidates.len() {
        let mut seconds: Vec<u8> = cells.iter().map(|&(_, b)| b).collect();
        seconds.sort_unstable();
        seconds.dedup();
        if seconds.len() != 3 {
            return None;
        }
        let neighbor = |p: (u8, u8), q: (u8, u8)| !distant(ring, p, q);
        let triple_ok = |set: Vec<(u8, u8)>| {
            set.len() == 3
                && neighbor(set[0], set[1])
                && neighbor(set[0], set[2])
                && neighbor(set[1], set[2])
        };
        let lines_ok = firsts
            .iter()
            .all(|&f| triple_ok(cells.iter().copied().filter(|&(a, _)| a == f).collect()))
            && seconds
                .iter()
                .all(|&s| triple_ok(cells.iter().copied().filter(|&(_, b)| b == s).collect()));
        if !lines_ok {
            return None;
        }
        let mut sorted = cells.clone();
        sorted.sort_unstable();
        return Some(PolarizedGrid {
            firsts,
            seconds: [seconds[0], seconds[1], seconds[2]],
            cells: sorted,
        });
    }
    for &cand in &candidates[depth] {
        if cells.contains(&cand) {
            continue;
        }
        if cells.iter().filter(|&&(a, _)| a == cand.0).count() >= 3 {
            continue;
        }
        let mut seconds: Vec<u8> = cells.iter().map(|&(_, b)| b).collect();
        seconds.push(cand.1);
        seconds.sort_unstable();
        seconds.dedup();
        if seconds.len() > 3 {
            continue;
        }
        cells.push(cand);
        if let Some(grid) = choose_cells(ring, candidates, firsts, depth + 1, cells) {
            return Some(grid);
        }
        cells.pop();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;
    use crate::ringline::line::canonicalize;
    use crate::ringline::{build_ring, projective_line, RingKind};

    fn split() -> BpMsSplit {
        let line = projective_line(&build_ring(RingKind::M2Z2));
        bp_ms_from_reference_pair(&line)
    }

    #[test]
    fn the_six_unit_unit_points() {
        let s = split();
        assert_eq!(
            s.distant_to_both,
            vec![(1, 1), (1, 2), (1, 9), (1, 11), (1, 12), (1, 13)]
        );
        assert!(s.distant_have_unit_coordinates);
    }

    #[test]
    fn the_nine_zero_divisor_points() {
        let ring = build_ring(RingKind::M2Z2);
        let s = split();
        let mut expected: Vec<(u8, u8)> = Vec::new();
        for a in [3u8, 5, 6] {
            for b in [4u8, 10, 14] {
                expected.push(canonicalize(&ring, (a, b)));
            }
        }
        expected.sort_unstable();
        assert_eq!(s.neighbor_to_both, expected);
        assert!(s.neighbors_have_zero_divisor_coordinates);
    }

    #[test]
    fn polarization_is_found() {
        let s = split();
        let grid = s.polarized.expect("grid polarization exists");
        // The published form uses firsts {3,5,6} and seconds {4,10,14}.
        assert_eq!(grid.firsts, [3, 5, 6]);
        assert_eq!(grid.seconds, [4, 10, 14]);
        assert_eq!(grid.cells.len(), 9);
    }

    #[test]
    fn induced_neighbor_graphs_have_the_right_shape() {
        let s = split();
        assert!(is_isomorphic(&s.bp_graph, &Graph::complete_bipartite(3, 3)).unwrap());
        // The nine-point part is 4-regular and self-complementary.
        assert!((0..9).all(|x| s.ms_graph.degree(x) == 4));
        assert!(is_isomorphic(&s.ms_graph, &s.ms_graph.complement()).unwrap());
    }
}
