//! Maximum independent sets and minimum vertex covers, exact.

use super::{maximal_cliques, Graph, VertexSet};
use crate::error::{Error, Result};

/// Exact-search cap for independence computations.
pub const INDEPENDENCE_VERTEX_CAP: usize = 128;

#[derive(Clone, Debug)]
pub struct IndependenceReport {
    /// Independence number.
    pub size: usize,
    /// Maximum independent sets as sorted vertex lists; a single
    /// lexicographically-least witness unless `enumerate_all` was set.
    pub witnesses: Vec<Vec<usize>>,
}

/// Computes the independence number together with witnesses.
///
/// With `enumerate_all` set, every maximum independent set is returned in
/// lexicographic order; otherwise only the lexicographically least one.
pub fn max_independent_sets(g: &Graph, enumerate_all: bool) -> Result<IndependenceReport> {
    if g.v() > INDEPENDENCE_VERTEX_CAP {
        return Err(Error::VertexCapExceeded {
            v: g.v(),
            cap: INDEPENDENCE_VERTEX_CAP,
        });
    }
    if g.v() == 0 {
        return Ok(IndependenceReport {
            size: 0,
            witnesses: vec![vec![]],
        });
    }
    // Independent sets are cliques of the complement; maximal cliques come
    // out sorted, so the first witness of maximum size is the lex-least one.
    let cliques = maximal_cliques(&g.complement());
    let size = cliques.iter().map(|c| c.len()).max().unwrap_or(0);
    let mut witnesses: Vec<Vec<usize>> = cliques.into_iter().filter(|c| c.len() == size).collect();
    if !enumerate_all {
        witnesses.truncate(1);
    }
    Ok(IndependenceReport { size, witnesses })
}

/// Minimum vertex cover (complement of the canonical maximum independent
/// set) together with the subgraph it induces.
pub fn min_vertex_cover(g: &Graph) -> Result<(VertexSet, Graph)> {
    let report = max_independent_sets(g, false)?;
    let independent = &report.witnesses[0];
    let cover: Vec<usize> = (0..g.v()).filter(|x| !independent.contains(x)).collect();
    let set = VertexSet::from_indices(g.v(), &cover);
    let induced = g.induced_subgraph(&set)?;
    Ok((set, induced))
}
