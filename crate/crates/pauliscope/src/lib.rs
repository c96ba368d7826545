//! Exact-arithmetic engine for the commutation structure of generalized
//! Pauli operators.
//!
//! The crate builds the operator algebra of N qudits (dimension 2 or 3)
//! symbolically, turns commutation into graphs, and certifies the
//! finite-geometric structures living on those graphs: exact spectra,
//! strong regularity, generalized-quadrangle hyperplanes, spreads,
//! Mermin-square contradictions, projective ring lines, symplectic polar
//! spaces and the two-qutrit dual geometry. Everything is computed over
//! exact integers or rationals; nothing is approximated.
//!
//! Start with [`pauli::build_pauli_graph`] and the [`graph`] toolkit, or
//! run the `pauliscope` command-line front end.

pub mod bits;
mod error;
pub mod graph;
pub mod pauli;
pub mod polar;
pub mod quadrangle;
pub mod ringline;
pub mod spectral;

pub use error::{Error, Result};
