//! Finite rings of order 16 and 4 (characteristic two) and their
//! projective lines: the full 2×2 matrix ring over Z₂ with its primed
//! element labels, the three rings of order four, the neighbor/distant
//! relation, and the line classification of the binary projective space.

mod bpms;
mod line;
mod pg32;

pub use bpms::{bp_ms_from_reference_pair, BpMsSplit};
pub use line::{projective_line, ProjectiveLine, RingLinePoint};
pub use pg32::{pg32_line_phases, LineClass, Pg32Lines};

use serde_json::json;

/// Which ring to build.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RingKind {
    /// Full 2×2 matrices over Z₂ (16 elements).
    M2Z2,
    /// The field of four elements.
    F4,
    /// The local ring Z₂[x]/⟨x²⟩.
    Z2DualNumbers,
    /// The product ring Z₂ × Z₂.
    Z2xZ2,
}

/// A finite ring given by full operation tables. Element 0 is the additive
/// identity; `one` indexes the multiplicative identity.
#[derive(Clone, Debug)]
pub struct FiniteRing {
    pub kind: RingKind,
    pub labels: Vec<String>,
    pub add: Vec<Vec<u8>>,
    pub mul: Vec<Vec<u8>>,
    pub one: u8,
    pub units: Vec<u8>,
}

impl FiniteRing {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn is_unit(&self, e: u8) -> bool {
        self.units.contains(&e)
    }

    /// Zero divisors in the loose sense used for line geometry: all
    /// non-invertible elements, zero included.
    pub fn zero_divisors(&self) -> Vec<u8> {
        (0..self.size() as u8).filter(|&e| !self.is_unit(e)).collect()
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize][b as usize]
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize][b as usize]
    }

    /// JSON dump of tables, units and zero divisors.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "kind": format!("{:?}", self.kind),
            "labels": self.labels,
            "add": self.add,
            "mul": self.mul,
            "units": self.units.iter().map(|&u| self.labels[u as usize].clone()).collect::<Vec<_>>(),
            "zero_divisors": self.zero_divisors().iter().map(|&z| self.labels[z as usize].clone()).collect::<Vec<_>>(),
        })
    }
}

/// The sixteen 2×2 matrices over Z₂ in their primed-label order; entry
/// arrays are row-major `[m00, m01, m10, m11]`.
pub const M2Z2_MATRICES: [[u8; 4]; 16] = [
    [0, 0, 0, 0], // 0'
    [1, 0, 0, 1], // 1'
    [0, 1, 1, 0], // 2'
    [1, 1, 1, 1], // 3'
    [0, 0, 1, 1], // 4'
    [1, 0, 1, 0], // 5'
    [0, 1, 0, 1], // 6'
    [1, 1, 0, 0], // 7'
    [0, 1, 0, 0], // 8'
    [1, 1, 0, 1], // 9'
    [0, 0, 1, 0], // 10'
    [1, 0, 1, 1], // 11'
    [0, 1, 1, 1], // 12'
    [1, 1, 1, 0], // 13'
    [0, 0, 0, 1], // 14'
    [1, 0, 0, 0], // 15'
];

pub fn build_ring(kind: RingKind) -> FiniteRing {
    match kind {
        RingKind::M2Z2 => build_m2z2(),
        RingKind::F4 => build_order4(kind, |a, b| {
            // Polynomials over Z₂ modulo x² + x + 1.
            let (a0, a1, b0, b1) = (a & 1, a >> 1, b & 1, b >> 1);
            let c0 = a0 & b0;
            let c1 = (a0 & b1) ^ (a1 & b0);
            let c2 = a1 & b1; // x² = x + 1
            ((c0 ^ c2) | ((c1 ^ c2) << 1)) as u8
        }),
        RingKind::Z2DualNumbers => build_order4(kind, |a, b| {
            // Polynomials over Z₂ modulo x².
            let (a0, a1, b0, b1) = (a & 1, a >> 1, b & 1, b >> 1);
            ((a0 & b0) | (((a0 & b1) ^ (a1 & b0)) << 1)) as u8
        }),
        RingKind::Z2xZ2 => build_order4(kind, |a, b| {
            // Polynomials over Z₂ modulo x² + x, isomorphic to the product
            // ring via x ↦ (0,1); index 1 is the identity (1,1).
            let (a0, a1, b0, b1) = (a & 1, a >> 1, b & 1, b >> 1);
            ((a0 & b0) | (((a0 & b1) ^ (a1 & b0) ^ (a1 & b1)) << 1)) as u8
        }),
    }
}

fn build_m2z2() -> FiniteRing {
    let index_of = |m: [u8; 4]| -> u8 {
        M2Z2_MATRICES
            .iter()
            .position(|&x| x == m)
            .expect("all binary 2x2 matrices are labeled") as u8
    };
    let size = 16;
    let mut add = vec![vec![0u8; size]; size];
    let mut mul = vec![vec![0u8; size]; size];
    for i in 0..size {
        for j in 0..size {
            let (a, b) = (M2Z2_MATRICES[i], M2Z2_MATRICES[j]);
            add[i][j] = index_of([a[0] ^ b[0], a[1] ^ b[1], a[2] ^ b[2], a[3] ^ b[3]]);
            mul[i][j] = index_of([
                (a[0] & b[0]) ^ (a[1] & b[2]),
                (a[0] & b[1]) ^ (a[1] & b[3]),
                (a[2] & b[0]) ^ (a[3] & b[2]),
                (a[2] & b[1]) ^ (a[3] & b[3]),
            ]);
        }
    }
    let units: Vec<u8> = (0..size as u8)
        .filter(|&e| {
            let m = M2Z2_MATRICES[e as usize];
            (m[0] & m[3]) ^ (m[1] & m[2]) == 1
        })
        .collect();
    FiniteRing {
        kind: RingKind::M2Z2,
        labels: (0..16).map(|i| format!("{i}'")).collect(),
        add,
        mul,
        one: 1,
        units,
    }
}

fn build_order4(kind: RingKind, mul_fn: impl Fn(usize, usize) -> u8) -> FiniteRing {
    let labels: Vec<String> = match kind {
        RingKind::F4 => ["0", "1", "w", "w+1"],
        RingKind::Z2DualNumbers => ["0", "1", "x", "x+1"],
        RingKind::Z2xZ2 => ["(0,0)", "(1,1)", "(0,1)", "(1,0)"],
        RingKind::M2Z2 => unreachable!(),
    }
    .map(String::from)
    .to_vec();
    let mut add = vec![vec![0u8; 4]; 4];
    let mut mul = vec![vec![0u8; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            add[i][j] = (i ^ j) as u8;
            mul[i][j] = mul_fn(i, j);
        }
    }
    let units: Vec<u8> = (0..4u8)
        .filter(|&e| (0..4u8).any(|f| mul[e as usize][f as usize] == 1))
        .collect();
    FiniteRing {
        kind,
        labels,
        add,
        mul,
        one: 1,
        units,
    }
}
