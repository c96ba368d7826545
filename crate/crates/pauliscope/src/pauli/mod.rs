//! Generalized Pauli operators of N qudits (prime dimension 2 or 3) with
//! exact symbolic phases, and their commutation graph.
//!
//! An operator is stored as a phase exponent together with per-factor
//! exponent pairs `(a, b)` meaning the factor `X^a Z^b`. The phase unit is
//! `i` for qubits and `ω = exp(2iπ/3)` for qutrits, so every product of
//! operators is again representable exactly.

mod graph;
mod label;
mod tables;

pub use graph::{build_pauli_graph, PauliGraph, DEFAULT_VERTEX_CAP};
pub use label::LabelScheme;
pub use tables::{commutation_table_csv, pauli_graph_json, product_table_csv, render_product};

use crate::error::{Error, Result};

/// A generalized Pauli operator: `τ^phase · ⊗_j X^{a_j} Z^{b_j}` where
/// `τ = i` for `d = 2` and `τ = ω` for `d = 3`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuditOperator {
    d: u8,
    phase: u8,
    exps: Vec<(u8, u8)>,
}

impl QuditOperator {
    /// Order of the phase unit: 4 for qubits (powers of i), 3 for qutrits
    /// (powers of ω).
    pub fn phase_order(d: u8) -> u8 {
        if d == 2 {
            4
        } else {
            3
        }
    }

    pub fn identity(d: u8, n: usize) -> Result<Self> {
        check_dimension(d)?;
        Ok(QuditOperator {
            d,
            phase: 0,
            exps: vec![(0, 0); n],
        })
    }

    pub fn from_exps(d: u8, exps: Vec<(u8, u8)>, phase: u8) -> Result<Self> {
        check_dimension(d)?;
        let exps = exps
            .into_iter()
            .map(|(a, b)| (a % d, b % d))
            .collect();
        Ok(QuditOperator {
            d,
            phase: phase % Self::phase_order(d),
            exps,
        })
    }

    pub fn d(&self) -> u8 {
        self.d
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    /// Exponent of the phase unit.
    pub fn phase(&self) -> u8 {
        self.phase
    }

    pub fn exps(&self) -> &[(u8, u8)] {
        &self.exps
    }

    /// True when the operator is a scalar multiple of the identity.
    pub fn is_identity_class(&self) -> bool {
        self.exps.iter().all(|&(a, b)| a == 0 && b == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.phase == 0 && self.is_identity_class()
    }

    /// The projective (phase-free) representative of this operator.
    pub fn phase_free(&self) -> Self {
        QuditOperator {
            d: self.d,
            phase: 0,
            exps: self.exps.clone(),
        }
    }

    fn check_compatible(&self, rhs: &Self) -> Result<()> {
        if self.d != rhs.d || self.n() != rhs.n() {
            return Err(Error::OperatorMismatch {
                d_left: self.d,
                n_left: self.n(),
                d_right: rhs.d,
                n_right: rhs.n(),
            });
        }
        Ok(())
    }

    /// Exact product. Moving each right-hand `X` block past the left-hand
    /// `Z` block contributes `ω^{b·a'}` per factor, which is `i^{2ba'}` in
    /// qubit phase units.
    pub fn multiply(&self, rhs: &Self) -> Result<Self> {
        self.check_compatible(rhs)?;
        let order = Self::phase_order(self.d);
        let omega_unit = if self.d == 2 { 2 } else { 1 };
        let mut phase = (self.phase + rhs.phase) % order;
        let mut exps = Vec::with_capacity(self.n());
        for (&(a, b), &(a2, b2)) in self.exps.iter().zip(&rhs.exps) {
            phase = (phase + omega_unit * ((b * a2) % order)) % order;
            exps.push(((a + a2) % self.d, (b + b2) % self.d));
        }
        Ok(QuditOperator {
            d: self.d,
            phase,
            exps,
        })
    }

    /// The operator `r` with `self · r = identity` (phase exponent zero).
    pub fn inverse(&self) -> Self {
        let d = self.d;
        let bare = QuditOperator {
            d,
            phase: 0,
            exps: self
                .exps
                .iter()
                .map(|&(a, b)| ((d - a) % d, (d - b) % d))
                .collect(),
        };
        let residue = self.multiply(&bare).expect("same shape").phase;
        let order = Self::phase_order(d);
        QuditOperator {
            phase: (order - residue) % order,
            ..bare
        }
    }

    /// Symplectic evaluation: zero iff the operators commute. The form is
    /// `Σ_j (a_j b'_j − a'_j b_j) mod d`.
    pub fn symplectic_form(&self, rhs: &Self) -> Result<u8> {
        self.check_compatible(rhs)?;
        let d = self.d as i32;
        let mut acc = 0i32;
        for (&(a, b), &(a2, b2)) in self.exps.iter().zip(&rhs.exps) {
            acc += a as i32 * b2 as i32 - a2 as i32 * b as i32;
        }
        Ok(acc.rem_euclid(d) as u8)
    }

    pub fn commutes_with(&self, rhs: &Self) -> Result<bool> {
        Ok(self.symplectic_form(rhs)? == 0)
    }

    /// Concatenated exponent vector `(a_1, b_1, …, a_n, b_n)` over `Z_d`.
    pub fn symplectic_vector(&self) -> Vec<u8> {
        self.exps.iter().flat_map(|&(a, b)| [a, b]).collect()
    }
}

impl std::fmt::Debug for QuditOperator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "τ^{}·", self.phase)?;
        for (i, (a, b)) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, "⊗")?;
            }
            write!(f, "X{a}Z{b}")?;
        }
        Ok(())
    }
}

fn check_dimension(d: u8) -> Result<()> {
    if d == 2 || d == 3 {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension(d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op2(exps: Vec<(u8, u8)>, phase: u8) -> QuditOperator {
        QuditOperator::from_exps(2, exps, phase).unwrap()
    }

    #[test]
    fn squares_of_qubit_operators_are_identity() {
        // σ_y = i·XZ squares to +identity once the phase bookkeeping is right.
        let y = op2(vec![(1, 1)], 1);
        let sq = y.multiply(&y).unwrap();
        assert!(sq.is_identity());
    }

    #[test]
    fn inverse_cancels_phase() {
        let p = op2(vec![(1, 1), (0, 1)], 3);
        let prod = p.multiply(&p.inverse()).unwrap();
        assert!(prod.is_identity());

        let q = QuditOperator::from_exps(3, vec![(1, 2), (2, 1)], 2).unwrap();
        assert!(q.multiply(&q.inverse()).unwrap().is_identity());
    }

    #[test]
    fn qutrit_cube_is_identity() {
        // (XZ)^3 = ω^3 X^3 Z^3 = identity.
        let y = QuditOperator::from_exps(3, vec![(1, 1)], 0).unwrap();
        let cube = y.multiply(&y).unwrap().multiply(&y).unwrap();
        assert!(cube.is_identity());
    }

    #[test]
    fn commutation_matches_product_order() {
        let p = op2(vec![(1, 0), (1, 1)], 0);
        let q = op2(vec![(0, 1), (1, 0)], 0);
        let pq = p.multiply(&q).unwrap();
        let qp = q.multiply(&p).unwrap();
        assert_eq!(p.commutes_with(&q).unwrap(), pq == qp);
    }

    #[test]
    fn mismatched_operators_error() {
        let p = op2(vec![(1, 0)], 0);
        let q = QuditOperator::from_exps(3, vec![(1, 0)], 0).unwrap();
        assert!(matches!(
            p.multiply(&q),
            Err(Error::OperatorMismatch { .. })
        ));
    }

    #[test]
    fn dimension_five_is_rejected() {
        assert!(matches!(
            QuditOperator::identity(5, 1),
            Err(Error::UnsupportedDimension(5))
        ));
    }
}
