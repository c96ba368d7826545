//! Exact spectra of adjacency matrices and strongly-regular /
//! partial-geometry parameter verification.
//!
//! Spectra are obtained from the exact characteristic polynomial (rational
//! Hessenberg reduction), integer roots by divisibility, quadratic surds by
//! integer quadratic factors; no floating point anywhere.

mod charpoly;
mod spectrum;
mod srg;

pub use charpoly::{
    char_poly, char_poly_int, eigenvalue_multiplicity_by_rank, eval_at, root_bound,
    CHARPOLY_VERTEX_CAP,
};
pub use spectrum::{extract_roots, QuadraticPair, Spectrum};
pub use srg::{
    is_pseudo_geometric, pg_params_for_qudits, srg_multiplicities, verify_srg, PgParams, SrgEigen,
    SrgParams,
};

use crate::error::Result;
use crate::graph::Graph;

/// Exact spectrum of a graph: characteristic polynomial first, then root
/// extraction bounded by the maximum degree.
pub fn spectrum(g: &Graph) -> Result<Spectrum> {
    let poly = char_poly(g)?;
    let degree_bound = (0..g.v()).map(|x| g.degree(x)).max().unwrap_or(0) as i64;
    Ok(extract_roots(&poly, degree_bound))
}
