//! Strong regularity and partial-geometry parameter laws, verified by
//! exact integer matrix identities rather than eigensolvers.

use crate::error::{Error, Result};
use crate::graph::Graph;
use rayon::prelude::*;

/// Parameters of a strongly regular graph srg(v, D, λ, μ).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SrgParams {
    pub v: usize,
    pub degree: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    /// Standard feasibility identity D(D−λ−1) = (v−D−1)μ.
    pub fn feasibility_identity(&self) -> bool {
        let (v, d, l, m) = (
            self.v as i64,
            self.degree as i64,
            self.lambda as i64,
            self.mu as i64,
        );
        d * (d - l - 1) == (v - d - 1) * m
    }

    pub fn display(&self) -> String {
        format!(
            "srg({}, {}, {}, {})",
            self.v, self.degree, self.lambda, self.mu
        )
    }
}

/// Eigenvalue data of a strongly regular graph: the two restricted
/// eigenvalues `r > 0 > l` and their multiplicities `f` and `g`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SrgEigen {
    pub r: i64,
    pub l: i64,
    pub f: usize,
    pub g: usize,
}

/// Decides strong regularity by checking, entrywise in exact integers,
/// that common-neighbor counts are constant on edges (λ) and on non-edges
/// (μ); this is the all-pairs form of the matrix identity
/// `A² + (μ−λ)A + (μ−D)I = μJ`.
///
/// Errors on non-regular input; returns `Ok(None)` for regular graphs that
/// are not strongly regular.
pub fn verify_srg(g: &Graph) -> Result<Option<SrgParams>> {
    let v = g.v();
    if v == 0 {
        return Ok(None);
    }
    let degrees: Vec<usize> = (0..v).map(|x| g.degree(x)).collect();
    let (dmin, dmax) = (
        *degrees.iter().min().unwrap(),
        *degrees.iter().max().unwrap(),
    );
    if dmin != dmax {
        return Err(Error::NotRegular {
            min: dmin,
            max: dmax,
        });
    }
    let degree = dmin;
    if degree == 0 || degree == v - 1 {
        // Complete and edgeless graphs are conventionally excluded.
        return Ok(None);
    }

    // Probe λ from the first edge and μ from the first non-edge.
    let mut lambda = None;
    let mut mu = None;
    'probe: for a in 0..v {
        for b in (a + 1)..v {
            let common = g.neighbors(a).intersect_count(g.neighbors(b));
            if g.has_edge(a, b) {
                lambda.get_or_insert(common);
            } else {
                mu.get_or_insert(common);
            }
            if lambda.is_some() && mu.is_some() {
                break 'probe;
            }
        }
    }
    let (lambda, mu) = (lambda.unwrap(), mu.unwrap());

    let uniform = (0..v).into_par_iter().all(|a| {
        (a + 1..v).all(|b| {
            let common = g.neighbors(a).intersect_count(g.neighbors(b));
            common == if g.has_edge(a, b) { lambda } else { mu }
        })
    });
    Ok(uniform.then_some(SrgParams {
        v,
        degree,
        lambda,
        mu,
    }))
}

/// Restricted eigenvalues and multiplicities of a feasible parameter set:
/// `r + l = λ − μ`, `rl = μ − D`, multiplicities from the closed forms
/// `f = −D(l+1)(D−l)/((D+rl)(r−l))` and `g = D(r+1)(D−r)/((D+rl)(r−l))`.
/// Non-integral solutions (conference-graph parameters) are reported as an
/// error rather than rounded.
pub fn srg_multiplicities(p: &SrgParams) -> Result<SrgEigen> {
    let (v, d, lambda, mu) = (
        p.v as i128,
        p.degree as i128,
        p.lambda as i128,
        p.mu as i128,
    );
    let disc = (lambda - mu) * (lambda - mu) + 4 * (d - mu);
    let s = integer_sqrt(disc).ok_or(Error::NonIntegralMultiplicities)?;
    if (lambda - mu + s).rem_euclid(2) != 0 {
        return Err(Error::NonIntegralMultiplicities);
    }
    let r = (lambda - mu + s) / 2;
    let l = (lambda - mu - s) / 2;
    let denom = (d + r * l) * (r - l);
    if denom == 0 {
        return Err(Error::NonIntegralMultiplicities);
    }
    let f_num = -d * (l + 1) * (d - l);
    let g_num = d * (r + 1) * (d - r);
    if f_num % denom != 0 || g_num % denom != 0 {
        return Err(Error::NonIntegralMultiplicities);
    }
    let f = f_num / denom;
    let g = g_num / denom;
    debug_assert_eq!(f + g, v - 1);
    debug_assert_eq!(d + f * r + g * l, 0);
    Ok(SrgEigen {
        r: r as i64,
        l: l as i64,
        f: f as usize,
        g: g as usize,
    })
}

fn integer_sqrt(x: i128) -> Option<i128> {
    if x < 0 {
        return None;
    }
    let mut s = (x as f64).sqrt() as i128;
    while s * s > x {
        s -= 1;
    }
    while (s + 1) * (s + 1) <= x {
        s += 1;
    }
    (s * s == x).then_some(s)
}

/// Parameters of a partial geometry pg(s, t, α).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PgParams {
    pub s: usize,
    pub t: usize,
    pub alpha: usize,
}

impl PgParams {
    pub fn point_count(&self) -> usize {
        (self.s + 1) * (self.s * self.t + self.alpha) / self.alpha
    }

    pub fn line_count(&self) -> usize {
        (self.t + 1) * (self.s * self.t + self.alpha) / self.alpha
    }

    /// Strongly regular parameters of the point graph of the geometry.
    pub fn srg(&self) -> SrgParams {
        SrgParams {
            v: self.point_count(),
            degree: self.s * (self.t + 1),
            lambda: self.s - 1 + self.t * (self.alpha - 1),
            mu: self.alpha * (self.t + 1),
        }
    }

    pub fn display(&self) -> String {
        format!("pg({}, {}, {})", self.s, self.t, self.alpha)
    }
}

/// Partial-geometry parameters attached to the commutation graph of N
/// qudits over a prime power q:
/// s = q(q^{N−1}−1)/(q−1), t = q^{N−1}, α = (q^{N−1}−1)/(q−1).
pub fn pg_params_for_qudits(q: usize, n: u32) -> PgParams {
    assert!(n >= 2, "partial geometry parameters need N ≥ 2");
    let qn1 = q.pow(n - 1);
    PgParams {
        s: q * (qn1 - 1) / (q - 1),
        t: qn1,
        alpha: (qn1 - 1) / (q - 1),
    }
}

/// True when the graph is strongly regular with exactly the parameters of
/// the partial geometry (the spectral definition of pseudo-geometric).
pub fn is_pseudo_geometric(g: &Graph, p: &PgParams) -> Result<bool> {
    match verify_srg(g) {
        Ok(found) => Ok(found == Some(p.srg())),
        Err(Error::NotRegular { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_is_srg_10_3_0_1() {
        let params = verify_srg(&Graph::petersen()).unwrap().unwrap();
        assert_eq!(
            params,
            SrgParams {
                v: 10,
                degree: 3,
                lambda: 0,
                mu: 1
            }
        );
        assert!(params.feasibility_identity());
        let eig = srg_multiplicities(&params).unwrap();
        assert_eq!((eig.r, eig.l, eig.f, eig.g), (1, -2, 5, 4));
    }

    #[test]
    fn non_regular_input_is_flagged() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert!(matches!(
            verify_srg(&path),
            Err(Error::NotRegular { min: 1, max: 2 })
        ));
    }

    #[test]
    fn cycle_c6_is_regular_but_not_srg() {
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        assert_eq!(verify_srg(&c6).unwrap(), None);
    }

    #[test]
    fn conference_parameters_are_reported() {
        // C5 = srg(5,2,0,1) has irrational restricted eigenvalues.
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let params = verify_srg(&c5).unwrap().unwrap();
        assert!(matches!(
            srg_multiplicities(&params),
            Err(Error::NonIntegralMultiplicities)
        ));
    }

    #[test]
    fn qudit_pg_parameters() {
        assert_eq!(
            pg_params_for_qudits(2, 2),
            PgParams {
                s: 2,
                t: 2,
                alpha: 1
            }
        );
        let pg3 = pg_params_for_qudits(2, 3);
        assert_eq!(
            pg3,
            PgParams {
                s: 6,
                t: 4,
                alpha: 3
            }
        );
        assert_eq!(pg3.point_count(), 63);
        assert_eq!(pg3.line_count(), 45);
        let pg4 = pg_params_for_qudits(2, 4);
        assert_eq!((pg4.s, pg4.t, pg4.alpha), (14, 8, 7));
        assert_eq!(pg4.point_count(), 255);
        assert_eq!(pg4.line_count(), 153);
    }

    #[test]
    fn rook_graph_is_pseudo_geometric_for_grid_parameters() {
        // 4×4 rook graph = srg(16, 6, 2, 2) = point graph of pg(3, 1, 1).
        let p = PgParams {
            s: 3,
            t: 1,
            alpha: 1,
        };
        assert!(is_pseudo_geometric(&Graph::rook(4), &p).unwrap());
        assert!(!is_pseudo_geometric(&Graph::hypercube(4), &p).unwrap());
    }
}
