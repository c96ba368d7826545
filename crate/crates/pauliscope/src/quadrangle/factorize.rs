//! The three classical factorizations of the two-qubit commutation graph,
//! each induced by a kind of geometric hyperplane: a line pencil plus a
//! cube, a bipartite part plus a Mermin grid, and an ovoid plus the
//! Petersen graph.

use super::{classify_hyperplanes, HyperplaneKind, PointLineGeometry};
use crate::error::{Error, Result};
use crate::graph::{is_isomorphic, Graph};
use crate::pauli::PauliGraph;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FactorMode {
    /// Perp-set of a reference point (7 points) plus an 8-vertex cube.
    FanoCube,
    /// Six-point bipartite part plus a nine-point Mermin grid.
    MerminBipartite,
    /// Five-point ovoid plus a ten-vertex Petersen cover.
    OvoidPetersen,
}

#[derive(Clone, Debug)]
pub struct Factorization {
    pub mode: FactorMode,
    /// The hyperplane side of the partition (perp-set / grid / ovoid),
    /// except that for `MerminBipartite` this is the six-point part to
    /// match the usual reading of the split.
    pub small: Vec<usize>,
    pub large: Vec<usize>,
    /// Named structural verifications with outcomes.
    pub checks: Vec<(String, bool)>,
}

impl Factorization {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|&(_, ok)| ok)
    }
}

/// Splits the graph according to `mode`. The seed selects the reference:
/// a vertex for `FanoCube`, an index into the sorted grid list for
/// `MerminBipartite`, an index into the sorted ovoid list for
/// `OvoidPetersen`.
pub fn factorize(
    pg: &PauliGraph,
    geom: &PointLineGeometry,
    mode: FactorMode,
    seed: usize,
) -> Result<Factorization> {
    let v = pg.graph.v();
    let hyperplanes = classify_hyperplanes(geom);
    let of_kind = |k: HyperplaneKind| -> Vec<Vec<usize>> {
        hyperplanes
            .iter()
            .filter(|h| h.kind == k)
            .map(|h| h.points.clone())
            .collect()
    };
    let pick = |list: Vec<Vec<usize>>, what: &str| -> Result<Vec<usize>> {
        list.get(seed).cloned().ok_or_else(|| Error::InvalidSeed {
            seed,
            reason: format!("only {} {what} available", list.len()),
        })
    };

    let (small, large) = match mode {
        FactorMode::FanoCube => {
            if seed >= v {
                return Err(Error::InvalidSeed {
                    seed,
                    reason: format!("reference vertex must be below {v}"),
                });
            }
            let pencil = geom.perp(seed);
            let rest = complement_of(&pencil, v);
            (pencil, rest)
        }
        FactorMode::MerminBipartite => {
            let grid = pick(of_kind(HyperplaneKind::Grid), "grids")?;
            let rest = complement_of(&grid, v);
            (rest, grid)
        }
        FactorMode::OvoidPetersen => {
            let ovoid = pick(of_kind(HyperplaneKind::Ovoid), "ovoids")?;
            let rest = complement_of(&ovoid, v);
            (ovoid, rest)
        }
    };

    let small_graph = pg.graph.induced(&small)?;
    let large_graph = pg.graph.induced(&large)?;
    let mut checks = Vec::new();
    match mode {
        FactorMode::FanoCube => {
            checks.push((
                "pencil part is the friendship graph on 7 vertices".into(),
                is_isomorphic(&small_graph, &Graph::friendship(3))?,
            ));
            checks.push((
                "cube part is the 3-dimensional hypercube".into(),
                is_isomorphic(&large_graph, &Graph::hypercube(3))?,
            ));
            checks.push((
                "pencil lines close under products".into(),
                lines_close_under_products(pg, geom, &small)?,
            ));
            checks.push((
                "cube edges multiply into the pencil".into(),
                edges_multiply_into(pg, &large, &small)?,
            ));
        }
        FactorMode::MerminBipartite => {
            checks.push((
                "bipartite part is K[3,3]".into(),
                is_isomorphic(&small_graph, &Graph::complete_bipartite(3, 3))?,
            ));
            checks.push((
                "grid part is 4-regular".into(),
                (0..large_graph.v()).all(|x| large_graph.degree(x) == 4),
            ));
            checks.push((
                "grid part equals its own complement".into(),
                is_isomorphic(&large_graph, &large_graph.complement())?,
            ));
            checks.push((
                "grid lines close under products".into(),
                lines_close_under_products(pg, geom, &large)?,
            ));
            checks.push((
                "bipartite edges multiply into the grid".into(),
                edges_multiply_into(pg, &small, &large)?,
            ));
        }
        FactorMode::OvoidPetersen => {
            checks.push((
                "independent part meets every line exactly once".into(),
                geom.lines()
                    .iter()
                    .all(|l| l.iter().filter(|p| small.contains(p)).count() == 1),
            ));
            checks.push(("independent part has no edges".into(), small_graph.e() == 0));
            checks.push((
                "cover part is the Petersen graph".into(),
                is_isomorphic(&large_graph, &Graph::petersen())?,
            ));
            checks.push((
                "cover edges multiply into the independent part".into(),
                edges_multiply_into(pg, &large, &small)?,
            ));
        }
    }
    Ok(Factorization {
        mode,
        small,
        large,
        checks,
    })
}

fn complement_of(part: &[usize], v: usize) -> Vec<usize> {
    (0..v).filter(|x| !part.contains(x)).collect()
}

/// Two points of any line inside `part` multiply to the third point of the
/// same line (up to phase).
fn lines_close_under_products(
    pg: &PauliGraph,
    geom: &PointLineGeometry,
    part: &[usize],
) -> Result<bool> {
    for line in geom.lines() {
        if !line.iter().all(|p| part.contains(p)) {
            continue;
        }
        for (i, &a) in line.iter().enumerate() {
            for &b in &line[i + 1..] {
                let third = *line.iter().find(|&&x| x != a && x != b).unwrap();
                let prod = pg.operator(a).multiply(pg.operator(b))?;
                if pg.scheme.class_index(&prod) != Some(third) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Every edge of the induced subgraph on `from` multiplies to an operator
/// whose class lies in `into`.
fn edges_multiply_into(pg: &PauliGraph, from: &[usize], into: &[usize]) -> Result<bool> {
    for (i, &a) in from.iter().enumerate() {
        for &b in &from[i + 1..] {
            if !pg.graph.has_edge(a, b) {
                continue;
            }
            let prod = pg.operator(a).multiply(pg.operator(b))?;
            match pg.scheme.class_index(&prod) {
                Some(c) if into.contains(&c) => {}
                _ => return Ok(false),
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::build_pauli_graph;
    use crate::quadrangle::w2_from_graph;

    fn setup() -> (PauliGraph, PointLineGeometry) {
        let pg = build_pauli_graph(2, 2, None).unwrap();
        let geom = w2_from_graph(&pg).unwrap();
        (pg, geom)
    }

    #[test]
    fn fano_cube_with_reference_a() {
        let (pg, geom) = setup();
        let seed = pg.index_of_label("a").unwrap();
        let f = factorize(&pg, &geom, FactorMode::FanoCube, seed).unwrap();
        assert_eq!(
            f.small,
            {
                let mut v = pg.indices_of_labels(&["1", "2", "3", "a", "4", "5", "6"]);
                v.sort_unstable();
                v
            }
        );
        assert!(f.all_pass(), "checks: {:?}", f.checks);
    }

    #[test]
    fn mermin_bipartite_split() {
        let (pg, geom) = setup();
        let expected_grid = {
            let mut v =
                pg.indices_of_labels(&["4", "5", "6", "7", "8", "9", "10", "11", "12"]);
            v.sort_unstable();
            v
        };
        // Locate the grid equal to the canonical nine and use its index.
        let grids: Vec<Vec<usize>> = classify_hyperplanes(&geom)
            .into_iter()
            .filter(|h| h.kind == HyperplaneKind::Grid)
            .map(|h| h.points)
            .collect();
        let seed = grids.iter().position(|g| *g == expected_grid).unwrap();
        let f = factorize(&pg, &geom, FactorMode::MerminBipartite, seed).unwrap();
        assert_eq!(f.large, expected_grid);
        assert_eq!(
            f.small,
            {
                let mut v = pg.indices_of_labels(&["1", "2", "3", "a", "b", "c"]);
                v.sort_unstable();
                v
            }
        );
        assert!(f.all_pass(), "checks: {:?}", f.checks);
    }

    #[test]
    fn ovoid_petersen_split() {
        let (pg, geom) = setup();
        let expected_ovoid = {
            let mut v = pg.indices_of_labels(&["1", "2", "6", "9", "12"]);
            v.sort_unstable();
            v
        };
        let ovoids: Vec<Vec<usize>> = classify_hyperplanes(&geom)
            .into_iter()
            .filter(|h| h.kind == HyperplaneKind::Ovoid)
            .map(|h| h.points)
            .collect();
        let seed = ovoids.iter().position(|o| *o == expected_ovoid).unwrap();
        let f = factorize(&pg, &geom, FactorMode::OvoidPetersen, seed).unwrap();
        assert_eq!(f.small, expected_ovoid);
        assert!(f.all_pass(), "checks: {:?}", f.checks);
    }

    #[test]
    fn every_seed_produces_a_valid_factorization() {
        let (pg, geom) = setup();
        for seed in 0..15 {
            assert!(factorize(&pg, &geom, FactorMode::FanoCube, seed)
                .unwrap()
                .all_pass());
        }
        for seed in 0..10 {
            assert!(factorize(&pg, &geom, FactorMode::MerminBipartite, seed)
                .unwrap()
                .all_pass());
        }
        for seed in 0..6 {
            assert!(factorize(&pg, &geom, FactorMode::OvoidPetersen, seed)
                .unwrap()
                .all_pass());
        }
    }

    #[test]
    fn bad_seed_is_rejected() {
        let (pg, geom) = setup();
        assert!(matches!(
            factorize(&pg, &geom, FactorMode::OvoidPetersen, 6),
            Err(Error::InvalidSeed { seed: 6, .. })
        ));
        assert!(matches!(
            factorize(&pg, &geom, FactorMode::FanoCube, 15),
            Err(Error::InvalidSeed { seed: 15, .. })
        ));
    }
}
