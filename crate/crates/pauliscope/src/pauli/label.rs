//! Canonical labeling of the non-identity phase-free operators.
//!
//! Vertices are ordered lexicographically over per-factor symbol tuples,
//! first factor slowest. For qubits the factor symbols are (I, X, Y, Z);
//! for qutrits (I, Z, X, Y, V, Z², X², Y², V²) with Y = XZ and V = XZ².
//! Reference operators — a single non-identity symbol in the first factor —
//! carry letter labels; everything else is numbered consecutively.

use super::QuditOperator;
use crate::error::{Error, Result};
use std::collections::HashMap;

/// Single-factor symbol table: exponent pair and phase exponent of each
/// symbol in canonical order (index 0 is the identity).
fn factor_symbols(d: u8) -> Vec<((u8, u8), u8)> {
    match d {
        2 => vec![((0, 0), 0), ((1, 0), 0), ((1, 1), 1), ((0, 1), 0)],
        3 => vec![
            ((0, 0), 0),
            ((0, 1), 0), // Z
            ((1, 0), 0), // X
            ((1, 1), 0), // Y = XZ
            ((1, 2), 0), // V = XZ²
            ((0, 2), 0), // Z²
            ((2, 0), 0), // X²
            ((2, 2), 1), // Y² = ω X²Z²
            ((2, 1), 2), // V² = ω² X²Z
        ],
        _ => unreachable!("dimension checked on construction"),
    }
}

/// Bijection between canonical labels and the non-identity phase-free
/// operators of an N-qudit system.
#[derive(Clone)]
pub struct LabelScheme {
    d: u8,
    n: usize,
    labels: Vec<String>,
    ops: Vec<QuditOperator>,
    by_class: HashMap<Vec<(u8, u8)>, usize>,
    by_label: HashMap<String, usize>,
    references: Vec<usize>,
}

impl LabelScheme {
    pub fn new(d: u8, n: usize) -> Result<Self> {
        if d != 2 && d != 3 {
            return Err(Error::UnsupportedDimension(d));
        }
        if n == 0 {
            return Err(Error::UnsupportedArity { n });
        }
        let symbols = factor_symbols(d);
        let base = symbols.len();
        let count = base.pow(n as u32) - 1;

        let mut labels = Vec::with_capacity(count);
        let mut ops = Vec::with_capacity(count);
        let mut references = Vec::new();
        let mut numeric = 0usize;
        for code in 1..=count {
            // Decode `code` into a symbol tuple, first factor most significant.
            let mut tuple = vec![0usize; n];
            let mut rest = code;
            for j in (0..n).rev() {
                tuple[j] = rest % base;
                rest /= base;
            }
            let mut exps = Vec::with_capacity(n);
            let mut phase = 0u8;
            for &t in &tuple {
                let ((a, b), ph) = symbols[t];
                exps.push((a, b));
                phase = (phase + ph) % QuditOperator::phase_order(d);
            }
            let op = QuditOperator::from_exps(d, exps, phase)?;

            let is_reference = n >= 2 && tuple[0] != 0 && tuple[1..].iter().all(|&t| t == 0);
            let label = if is_reference && (d == 2 || n == 2) {
                references.push(ops.len());
                let letter = (b'a' + (tuple[0] - 1) as u8) as char;
                if d == 2 && n >= 3 {
                    format!("{letter}{n}")
                } else {
                    letter.to_string()
                }
            } else {
                numeric += 1;
                numeric.to_string()
            };
            labels.push(label);
            ops.push(op);
        }

        let by_class = ops
            .iter()
            .enumerate()
            .map(|(i, op)| (op.exps().to_vec(), i))
            .collect();
        let by_label = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        Ok(LabelScheme {
            d,
            n,
            labels,
            ops,
            by_class,
            by_label,
            references,
        })
    }

    pub fn d(&self) -> u8 {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn operator(&self, index: usize) -> &QuditOperator {
        &self.ops[index]
    }

    pub fn operators(&self) -> &[QuditOperator] {
        &self.ops
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.by_label.get(label).copied()
    }

    /// Index of the phase-free class of `op`, if it is a non-identity
    /// operator of this scheme.
    pub fn class_index(&self, op: &QuditOperator) -> Option<usize> {
        self.by_class.get(op.exps()).copied()
    }

    /// Splits `op` as `τ^relative · (labeled operator)`: the class index
    /// together with the phase exponent relative to the labeled
    /// representative (which may itself carry a phase, e.g. the symbols
    /// built from Y factors).
    pub fn decompose(&self, op: &QuditOperator) -> Option<(u8, usize)> {
        let idx = self.class_index(op)?;
        let order = QuditOperator::phase_order(self.d);
        let relative = (op.phase() + order - self.ops[idx].phase()) % order;
        Some((relative, idx))
    }

    /// Indices of the reference operators (single non-identity symbol in
    /// the first factor).
    pub fn reference_indices(&self) -> &[usize] {
        &self.references
    }

    /// Index of the first factor symbol of vertex `index` (0 = identity).
    pub fn first_factor_symbol(&self, index: usize) -> usize {
        let symbols = factor_symbols(self.d);
        let (a, b) = self.ops[index].exps()[0];
        symbols
            .iter()
            .position(|&((sa, sb), _)| (sa, sb) == (a, b))
            .expect("every factor pair is a symbol")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_qubit_labels_match_the_canonical_order() {
        let s = LabelScheme::new(2, 2).unwrap();
        let expected = [
            "1", "2", "3", "a", "4", "5", "6", "b", "7", "8", "9", "c", "10", "11", "12",
        ];
        assert_eq!(s.labels(), &expected.map(String::from));
        // 1 = I⊗X, a = X⊗I, 4 = X⊗X.
        assert_eq!(s.operator(s.index_of_label("1").unwrap()).exps(), &[(0, 0), (1, 0)]);
        assert_eq!(s.operator(s.index_of_label("a").unwrap()).exps(), &[(1, 0), (0, 0)]);
        assert_eq!(s.operator(s.index_of_label("4").unwrap()).exps(), &[(1, 0), (1, 0)]);
    }

    #[test]
    fn label_roundtrip_is_identity() {
        for (d, n) in [(2, 2), (2, 3), (3, 2)] {
            let s = LabelScheme::new(d, n).unwrap();
            for i in 0..s.len() {
                assert_eq!(s.index_of_label(s.label(i)), Some(i));
                assert_eq!(s.class_index(s.operator(i)), Some(i));
            }
        }
    }

    #[test]
    fn two_qutrit_scheme_follows_the_letter_numbering() {
        let s = LabelScheme::new(3, 2).unwrap();
        assert_eq!(s.len(), 80);
        // k = I⊗σ_k for k = 1..8, letters = σ_j⊗I, 8(j−1)+k+8 = σ_j⊗σ_k.
        assert_eq!(s.operator(s.index_of_label("1").unwrap()).exps(), &[(0, 0), (0, 1)]);
        assert_eq!(s.operator(s.index_of_label("a").unwrap()).exps(), &[(0, 1), (0, 0)]);
        assert_eq!(s.operator(s.index_of_label("9").unwrap()).exps(), &[(0, 1), (0, 1)]);
        assert_eq!(s.operator(s.index_of_label("h").unwrap()).exps(), &[(2, 1), (0, 0)]);
        assert_eq!(s.operator(s.index_of_label("72").unwrap()).exps(), &[(2, 1), (2, 1)]);
        // 22 = σ_2⊗σ_6 = X⊗X².
        assert_eq!(s.operator(s.index_of_label("22").unwrap()).exps(), &[(1, 0), (2, 0)]);
    }

    #[test]
    fn three_qubit_references_are_suffixed() {
        let s = LabelScheme::new(2, 3).unwrap();
        assert_eq!(s.len(), 63);
        let refs: Vec<&str> = s.reference_indices().iter().map(|&i| s.label(i)).collect();
        assert_eq!(refs, ["a3", "b3", "c3"]);
        // Non-reference labels run 1..60.
        assert_eq!(s.index_of_label("60").map(|i| s.label(i)), Some("60"));
        assert!(s.index_of_label("61").is_none());
    }

    #[test]
    fn every_scheme_is_a_bijection_on_classes() {
        let s = LabelScheme::new(3, 2).unwrap();
        let mut classes: Vec<_> = s.operators().iter().map(|o| o.exps().to_vec()).collect();
        classes.sort();
        classes.dedup();
        assert_eq!(classes.len(), 80);
    }
}
