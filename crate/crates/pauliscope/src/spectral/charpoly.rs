//! Exact characteristic polynomials of integer matrices via Hessenberg
//! reduction over arbitrary-precision rationals.

use crate::error::{Error, Result};
use crate::graph::Graph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub const CHARPOLY_VERTEX_CAP: usize = 300;

/// Monic characteristic polynomial of the adjacency matrix, coefficients in
/// ascending degree order (`coeffs[k]` multiplies `x^k`).
pub fn char_poly(g: &Graph) -> Result<Vec<BigInt>> {
    if g.v() > CHARPOLY_VERTEX_CAP {
        return Err(Error::VertexCapExceeded {
            v: g.v(),
            cap: CHARPOLY_VERTEX_CAP,
        });
    }
    Ok(char_poly_int(&g.adjacency_matrix()))
}

/// Characteristic polynomial of an arbitrary square integer matrix.
pub fn char_poly_int(matrix: &[Vec<i64>]) -> Vec<BigInt> {
    let n = matrix.len();
    let mut h: Vec<Vec<BigRational>> = matrix
        .iter()
        .map(|row| {
            row.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    reduce_to_hessenberg(&mut h, n);
    let poly = hessenberg_char_poly(&h, n);
    poly.into_iter()
        .map(|c| {
            debug_assert!(c.denom().is_one(), "integer matrix has integer char poly");
            c.numer().clone()
        })
        .collect()
}

/// Similarity reduction to upper Hessenberg form with exact rational
/// elimination. Row operation and matching inverse column operation keep
/// the characteristic polynomial unchanged.
fn reduce_to_hessenberg(h: &mut [Vec<BigRational>], n: usize) {
    for c in 0..n.saturating_sub(2) {
        let pivot_row = match (c + 1..n).find(|&r| !h[r][c].is_zero()) {
            Some(r) => r,
            None => continue,
        };
        if pivot_row != c + 1 {
            h.swap(pivot_row, c + 1);
            for row in h.iter_mut() {
                row.swap(pivot_row, c + 1);
            }
        }
        for r in c + 2..n {
            if h[r][c].is_zero() {
                continue;
            }
            let f = &h[r][c] / &h[c + 1][c];
            for j in 0..n {
                let delta = &f * &h[c + 1][j];
                h[r][j] -= delta;
            }
            for row in h.iter_mut().take(n) {
                let delta = &f * &row[r];
                row[c + 1] += delta;
            }
        }
    }
}

/// Leading-principal-minor recurrence for the characteristic polynomial of
/// an upper Hessenberg matrix.
fn hessenberg_char_poly(h: &[Vec<BigRational>], n: usize) -> Vec<BigRational> {
    // p[k] = char poly of the leading k x k block, ascending coefficients.
    let mut p: Vec<Vec<BigRational>> = vec![vec![BigRational::one()]];
    for k in 1..=n {
        let mut next = shift_times_x_minus(&p[k - 1], &h[k - 1][k - 1]);
        let mut beta = BigRational::one();
        for m in 1..k {
            beta *= &h[k - m][k - m - 1];
            if beta.is_zero() {
                break;
            }
            let scale = &h[k - 1 - m][k - 1] * &beta;
            if scale.is_zero() {
                continue;
            }
            for (i, c) in p[k - 1 - m].iter().enumerate() {
                let delta = &scale * c;
                let slot = &mut next[i];
                *slot -= delta;
            }
        }
        p.push(next);
    }
    p.pop().unwrap()
}

/// Multiplies an ascending-coefficient polynomial by `(x − a)`.
fn shift_times_x_minus(poly: &[BigRational], a: &BigRational) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); poly.len() + 1];
    for (i, c) in poly.iter().enumerate() {
        out[i + 1] += c;
        let delta = a * c;
        out[i] -= delta;
    }
    out
}

/// Evaluates an ascending-coefficient integer polynomial at an integer.
pub fn eval_at(poly: &[BigInt], x: i64) -> BigInt {
    let mut acc = BigInt::zero();
    for c in poly.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Exact multiplicity of eigenvalue `lambda`: the dimension of the kernel
/// of `A − λI` computed by rational Gaussian elimination. Serves as an
/// independent cross-check on root extraction.
pub fn eigenvalue_multiplicity_by_rank(matrix: &[Vec<i64>], lambda: i64) -> usize {
    let n = matrix.len();
    let mut m: Vec<Vec<BigRational>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, &x)| {
                    let e = if i == j { x - lambda } else { x };
                    BigRational::from_integer(BigInt::from(e))
                })
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let pivot = match (rank..n).find(|&r| !m[r][col].is_zero()) {
            Some(r) => r,
            None => continue,
        };
        m.swap(rank, pivot);
        for r in 0..n {
            if r != rank && !m[r][col].is_zero() {
                let f = &m[r][col] / &m[rank][col];
                for j in col..n {
                    let delta = &f * &m[rank][j];
                    m[r][j] -= delta;
                }
            }
        }
        rank += 1;
        if rank == n {
            break;
        }
    }
    n - rank
}

/// Largest absolute value of any real root (Cauchy bound), rounded up.
pub fn root_bound(poly: &[BigInt]) -> i64 {
    let lead = poly.last().expect("non-empty polynomial");
    assert!(lead.is_one(), "polynomial must be monic");
    let max_abs = poly[..poly.len() - 1]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    let bound = max_abs + 1;
    i64::try_from(&bound).unwrap_or(i64::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn int_poly(coeffs: &[i64]) -> Vec<BigInt> {
        coeffs.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn triangle_char_poly() {
        // K3: x^3 − 3x − 2.
        let p = char_poly(&Graph::complete(3)).unwrap();
        assert_eq!(p, int_poly(&[-2, -3, 0, 1]));
    }

    #[test]
    fn empty_two_vertex_graph() {
        let p = char_poly(&Graph::new(2)).unwrap();
        assert_eq!(p, int_poly(&[0, 0, 1]));
    }

    #[test]
    fn petersen_char_poly_factors() {
        // (x−3)(x−1)^5(x+2)^4 expanded.
        let p = char_poly(&Graph::petersen()).unwrap();
        let mut expected = int_poly(&[1]);
        for root in [3i64, 1, 1, 1, 1, 1, -2, -2, -2, -2] {
            let mut next = vec![BigInt::zero(); expected.len() + 1];
            for (i, c) in expected.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * root;
            }
            expected = next;
        }
        assert_eq!(p, expected);
    }

    #[test]
    fn general_matrix_with_row_swaps() {
        // Needs pivoting: zero in the subdiagonal position.
        let m = vec![
            vec![0, 0, 1],
            vec![0, 2, 0],
            vec![1, 0, 0],
        ];
        let p = char_poly_int(&m);
        // Eigenvalues 2, 1, −1: (x−2)(x−1)(x+1) = x^3 −2x^2 −x + 2.
        assert_eq!(p, int_poly(&[2, -1, -2, 1]));
    }

    #[test]
    fn rank_multiplicity_oracle() {
        let g = Graph::petersen();
        let a = g.adjacency_matrix();
        assert_eq!(eigenvalue_multiplicity_by_rank(&a, 3), 1);
        assert_eq!(eigenvalue_multiplicity_by_rank(&a, 1), 5);
        assert_eq!(eigenvalue_multiplicity_by_rank(&a, -2), 4);
        assert_eq!(eigenvalue_multiplicity_by_rank(&a, 0), 0);
    }

    #[test]
    fn eval_and_bound() {
        let p = int_poly(&[-2, -3, 0, 1]);
        assert_eq!(eval_at(&p, 2).to_i64(), Some(0));
        assert!(root_bound(&p) >= 2);
    }
}
