//! Self-similar block structure of the N-qubit commutation matrix: after
//! removing the three reference operators, the matrix splits into 4×4
//! blocks O / A / Â where O is the (N−1)-qubit matrix, A = O + identity,
//! and Â is the complement of A.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pauli::{build_pauli_graph, PauliGraph};
use crate::spectral::{spectrum, Spectrum};

#[derive(Clone, Debug)]
pub struct BlockReport {
    pub n: usize,
    /// Vertex indices of the four groups (first factor I, X, Y, Z), each in
    /// canonical order with references removed.
    pub groups: [Vec<usize>; 4],
    /// Diagonal blocks equal the full (N−1)-qubit commutation matrix.
    pub diagonal_matches_smaller: bool,
    /// First-row/column off-diagonal blocks equal O + identity.
    pub first_row_is_o_plus_identity: bool,
    /// Remaining off-diagonal blocks are the complement of A.
    pub other_blocks_are_complement: bool,
    /// 4×4 grid of block names.
    pub grid: [[&'static str; 4]; 4],
}

impl BlockReport {
    pub fn all_pass(&self) -> bool {
        self.diagonal_matches_smaller
            && self.first_row_is_o_plus_identity
            && self.other_blocks_are_complement
    }
}

/// Removes the reference triple, orders the remaining vertices into four
/// groups by first tensor factor, and verifies the O / A / Â block law
/// against the (N−1)-qubit graph.
pub fn block_structure(n: usize) -> Result<BlockReport> {
    if !(2..=4).contains(&n) {
        return Err(Error::UnsupportedArity { n });
    }
    let pg = build_pauli_graph(2, n, None)?;
    let child = build_pauli_graph(2, n - 1, None)?;
    let report = block_report_for(&pg, &child.graph, n);
    Ok(report)
}

fn block_report_for(pg: &PauliGraph, child: &Graph, n: usize) -> BlockReport {
    let refs = pg.scheme.reference_indices().to_vec();
    let mut groups: [Vec<usize>; 4] = Default::default();
    for v in 0..pg.graph.v() {
        if refs.contains(&v) {
            continue;
        }
        groups[pg.scheme.first_factor_symbol(v)].push(v);
    }
    let m = child.v();
    debug_assert!(groups.iter().all(|g| g.len() == m));

    // Block between groups g and h as a closure over child indices.
    let block = |g: usize, h: usize, i: usize, j: usize| -> bool {
        pg.graph.has_edge(groups[g][i], groups[h][j])
    };
    let mut diagonal_ok = true;
    let mut first_row_ok = true;
    let mut complement_ok = true;
    for g in 0..4 {
        for h in 0..4 {
            for i in 0..m {
                for j in 0..m {
                    let actual = if g == h {
                        if i == j {
                            continue; // no loops on the diagonal blocks
                        }
                        block(g, h, i, j)
                    } else {
                        block(g, h, i, j)
                    };
                    let o = child.has_edge_or_false(i, j);
                    let a = o || i == j;
                    match (g, h) {
                        (x, y) if x == y => diagonal_ok &= actual == o,
                        (0, _) | (_, 0) => first_row_ok &= actual == a,
                        _ => complement_ok &= actual == !a,
                    }
                }
            }
        }
    }
    let grid = [
        ["O", "A", "A", "A"],
        ["A", "O", "Â", "Â"],
        ["A", "Â", "O", "Â"],
        ["A", "Â", "Â", "O"],
    ];
    BlockReport {
        n,
        groups,
        diagonal_matches_smaller: diagonal_ok,
        first_row_is_o_plus_identity: first_row_ok,
        other_blocks_are_complement: complement_ok,
        grid,
    }
}

trait EdgeOrFalse {
    fn has_edge_or_false(&self, i: usize, j: usize) -> bool;
}

impl EdgeOrFalse for Graph {
    fn has_edge_or_false(&self, i: usize, j: usize) -> bool {
        i != j && self.has_edge(i, j)
    }
}

/// The distinguished three-qubit sub-blocks: the 45-vertex block spanned by
/// the non-first groups, the grid copies inside each group, their unions,
/// and the unions with the grid positions of the first block.
#[derive(Clone, Debug)]
pub struct M3Report {
    /// The 45 vertices outside the first group.
    pub m3_vertices: Vec<usize>,
    /// Common degree of the 45-vertex block, if regular.
    pub m3_degree: Option<usize>,
    pub m3_spectrum: Spectrum,
    /// Two grid copies from distinct groups (18 vertices).
    pub double_spectrum: Spectrum,
    /// All three grid copies (27 vertices).
    pub triple_spectrum: Spectrum,
    /// Grid positions of the first block joined with 1, 2, 3 grid copies.
    pub e_union_spectra: [Spectrum; 3],
}

/// Positions of the nine grid operators within the two-qubit canonical
/// order (the complement of the six-point bipartite part).
pub fn child_grid_positions(child: &PauliGraph) -> Vec<usize> {
    ["4", "5", "6", "7", "8", "9", "10", "11", "12"]
        .iter()
        .map(|l| child.index_of_label(l).expect("two-qubit labels"))
        .collect()
}

pub fn m3_blocks() -> Result<M3Report> {
    let pg = build_pauli_graph(2, 3, None)?;
    let child = build_pauli_graph(2, 2, None)?;
    let report = block_report_for(&pg, &child.graph, 3);
    let ms_child = child_grid_positions(&child);

    let m3_vertices: Vec<usize> = report.groups[1]
        .iter()
        .chain(&report.groups[2])
        .chain(&report.groups[3])
        .copied()
        .collect();
    let m3 = pg.graph.induced(&m3_vertices)?;
    let degrees: Vec<usize> = (0..m3.v()).map(|x| m3.degree(x)).collect();
    let m3_degree = degrees
        .first()
        .filter(|&&d| degrees.iter().all(|&x| x == d))
        .copied();

    let copy = |group: usize| -> Vec<usize> {
        ms_child.iter().map(|&i| report.groups[group][i]).collect()
    };
    let e: Vec<usize> = copy(0);
    let doubles: Vec<usize> = [copy(1), copy(2)].concat();
    let triples: Vec<usize> = [copy(1), copy(2), copy(3)].concat();
    let e_union = |m: usize| -> Vec<usize> {
        let mut set = e.clone();
        for g in 1..=m {
            set.extend(copy(g));
        }
        set
    };

    Ok(M3Report {
        m3_degree,
        m3_spectrum: spectrum(&m3)?,
        double_spectrum: spectrum(&pg.graph.induced(&doubles)?)?,
        triple_spectrum: spectrum(&pg.graph.induced(&triples)?)?,
        e_union_spectra: [
            spectrum(&pg.graph.induced(&e_union(1))?)?,
            spectrum(&pg.graph.induced(&e_union(2))?)?,
            spectrum(&pg.graph.induced(&e_union(3))?)?,
        ],
        m3_vertices,
    })
}

/// Spectra of the unions "nine grid positions of the first block ∪ m grid
/// copies", with the first-block grid ranging over all ten grids of the
/// two-qubit quadrangle. Used to probe which grid choice realizes a target
/// spectrum when the canonical one does not.
pub fn e_union_search(m: usize, target: &Spectrum) -> Result<Option<Vec<usize>>> {
    let pg = build_pauli_graph(2, 3, None)?;
    let child = build_pauli_graph(2, 2, None)?;
    let report = block_report_for(&pg, &child.graph, 3);
    let geom = crate::quadrangle::w2_from_graph(&child)?;
    let grids: Vec<Vec<usize>> = crate::quadrangle::classify_hyperplanes(&geom)
        .into_iter()
        .filter(|h| h.kind == crate::quadrangle::HyperplaneKind::Grid)
        .map(|h| h.points)
        .collect();
    let ms_child = child_grid_positions(&child);
    for grid in &grids {
        let mut set: Vec<usize> = grid.iter().map(|&i| report.groups[0][i]).collect();
        for g in 1..=m {
            set.extend(ms_child.iter().map(|&i| report.groups[g][i]));
        }
        let spec = spectrum(&pg.graph.induced(&set)?)?;
        if spec == *target {
            return Ok(Some(set));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_qubit_blocks_follow_the_law() {
        let report = block_structure(2).unwrap();
        assert!(report.all_pass());
        // Diagonal blocks are 3×3 zero matrices: the single-qubit graph has
        // three pairwise non-commuting operators.
        let child = build_pauli_graph(2, 1, None).unwrap();
        assert_eq!(child.graph.e(), 0);
        assert_eq!(report.groups.iter().map(|g| g.len()).sum::<usize>(), 12);
    }

    #[test]
    fn three_qubit_blocks_follow_the_law() {
        let report = block_structure(3).unwrap();
        assert!(report.all_pass());
        assert!(report.groups.iter().all(|g| g.len() == 15));
    }

    #[test]
    fn arity_bounds() {
        assert!(block_structure(1).is_err());
        assert!(block_structure(5).is_err());
    }
}
