//! Exact entanglement classification of the common eigenbasis carried by a
//! line of commuting two-qubit operators. All arithmetic is over Gaussian
//! integers; eigenvectors come from exact rank-one projector columns.

use crate::error::{Error, Result};
use crate::pauli::{PauliGraph, QuditOperator};

/// Gaussian integer `re + im·i`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Gauss {
    pub re: i64,
    pub im: i64,
}

impl Gauss {
    pub const ZERO: Gauss = Gauss { re: 0, im: 0 };
    pub const ONE: Gauss = Gauss { re: 1, im: 0 };
    pub const I: Gauss = Gauss { re: 0, im: 1 };

    pub fn new(re: i64, im: i64) -> Self {
        Gauss { re, im }
    }

    pub fn is_zero(&self) -> bool {
        self.re == 0 && self.im == 0
    }

    fn add(self, other: Gauss) -> Gauss {
        Gauss::new(self.re + other.re, self.im + other.im)
    }

    fn sub(self, other: Gauss) -> Gauss {
        Gauss::new(self.re - other.re, self.im - other.im)
    }

    fn mul(self, other: Gauss) -> Gauss {
        Gauss::new(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )
    }
}

type Matrix = Vec<Vec<Gauss>>;

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![Gauss::ZERO; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] = out[i][j].add(a[i][k].mul(b[k][j]));
            }
        }
    }
    out
}

fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Gauss::ONE } else { Gauss::ZERO })
                .collect()
        })
        .collect()
}

fn kronecker(a: &Matrix, b: &Matrix) -> Matrix {
    let (na, nb) = (a.len(), b.len());
    let n = na * nb;
    let mut out = vec![vec![Gauss::ZERO; n]; n];
    for i in 0..n {
        for j in 0..n {
            out[i][j] = a[i / nb][j / nb].mul(b[i % nb][j % nb]);
        }
    }
    out
}

/// Dense matrix of a qubit operator (2^n × 2^n over Gaussian integers),
/// built from per-factor `X^a Z^b` blocks and the exact phase.
pub fn operator_matrix(op: &QuditOperator) -> Result<Matrix> {
    if op.d() != 2 {
        return Err(Error::UnsupportedDimension(op.d()));
    }
    let x: Matrix = vec![
        vec![Gauss::ZERO, Gauss::ONE],
        vec![Gauss::ONE, Gauss::ZERO],
    ];
    let z: Matrix = vec![
        vec![Gauss::ONE, Gauss::ZERO],
        vec![Gauss::ZERO, Gauss::new(-1, 0)],
    ];
    let mut m = identity(1);
    for &(a, b) in op.exps() {
        let mut factor = identity(2);
        if a == 1 {
            factor = mat_mul(&factor, &x);
        }
        if b == 1 {
            factor = mat_mul(&factor, &z);
        }
        m = kronecker(&m, &factor);
    }
    let phase = match op.phase() {
        0 => Gauss::ONE,
        1 => Gauss::I,
        2 => Gauss::new(-1, 0),
        _ => Gauss::new(0, -1),
    };
    for row in &mut m {
        for e in row {
            *e = e.mul(phase);
        }
    }
    Ok(m)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Entanglement {
    Entangled,
    Unentangled,
}

/// Classifies the common eigenbasis of a line of three mutually commuting
/// two-qubit operators: the four joint eigenvectors are extracted as
/// columns of the exact rank-one projectors `(1 + s·A)(1 + t·B)`, and a
/// vector is a product state iff its 2x2 reshape has zero determinant.
pub fn line_basis_entanglement(pg: &PauliGraph, line: &[usize]) -> Result<Entanglement> {
    if line.len() != 3 {
        return Err(Error::NotCommuting);
    }
    for (i, &a) in line.iter().enumerate() {
        for &b in &line[i + 1..] {
            if !pg.operator(a).commutes_with(pg.operator(b))? {
                return Err(Error::NotCommuting);
            }
        }
    }
    let a = operator_matrix(pg.operator(line[0]))?;
    let b = operator_matrix(pg.operator(line[1]))?;
    let id = identity(4);

    let mut entangled = false;
    for s in [1i64, -1] {
        for t in [1i64, -1] {
            let pa = add_scaled(&id, &a, s);
            let pb = add_scaled(&id, &b, t);
            let proj = mat_mul(&pa, &pb);
            let col = (0..4)
                .find(|&j| (0..4).any(|i| !proj[i][j].is_zero()))
                .expect("joint projector of independent involutions is nonzero");
            let v: Vec<Gauss> = (0..4).map(|i| proj[i][col]).collect();
            // Schmidt rank over the 2x2 reshape: rank one means product state.
            let det = v[0].mul(v[3]).sub(v[1].mul(v[2]));
            if !det.is_zero() {
                entangled = true;
            }
        }
    }
    Ok(if entangled {
        Entanglement::Entangled
    } else {
        Entanglement::Unentangled
    })
}

fn add_scaled(id: &Matrix, m: &Matrix, sign: i64) -> Matrix {
    let n = id.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| id[i][j].add(m[i][j].mul(Gauss::new(sign, 0))))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::build_pauli_graph;

    #[test]
    fn named_lines_classify() {
        let pg = build_pauli_graph(2, 2, None).unwrap();
        let unent = pg.indices_of_labels(&["1", "a", "4"]);
        assert_eq!(
            line_basis_entanglement(&pg, &unent).unwrap(),
            Entanglement::Unentangled
        );
        let ent = pg.indices_of_labels(&["4", "8", "12"]);
        assert_eq!(
            line_basis_entanglement(&pg, &ent).unwrap(),
            Entanglement::Entangled
        );
    }

    #[test]
    fn non_commuting_input_is_rejected() {
        let pg = build_pauli_graph(2, 2, None).unwrap();
        let bad = pg.indices_of_labels(&["1", "2", "3"]);
        assert!(matches!(
            line_basis_entanglement(&pg, &bad),
            Err(Error::NotCommuting)
        ));
    }

    #[test]
    fn matrices_respect_products() {
        // The dense-matrix route agrees with the symbolic product on a
        // phase-carrying example.
        let pg = build_pauli_graph(2, 2, None).unwrap();
        let i1 = pg.index_of_label("1").unwrap();
        let i2 = pg.index_of_label("2").unwrap();
        let product = pg.operator(i1).multiply(pg.operator(i2)).unwrap();
        let lhs = mat_mul(
            &operator_matrix(pg.operator(i1)).unwrap(),
            &operator_matrix(pg.operator(i2)).unwrap(),
        );
        assert_eq!(lhs, operator_matrix(&product).unwrap());
    }

    #[test]
    fn squares_are_the_identity_matrix() {
        let pg = build_pauli_graph(2, 2, None).unwrap();
        for i in 0..15 {
            let m = operator_matrix(pg.operator(i)).unwrap();
            assert_eq!(mat_mul(&m, &m), identity(4));
        }
    }
}
