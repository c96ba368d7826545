//! Exact spectra: integer eigenvalues plus quadratic-surd pairs extracted
//! from the characteristic polynomial, never floating point.

use super::charpoly::eval_at;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::json;

/// A conjugate pair of eigenvalues `(p ± √q)/r` in lowest terms, each
/// occurring with multiplicity `mult`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct QuadraticPair {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub mult: usize,
}

impl QuadraticPair {
    /// Normalizes so that no integer `g > 1` divides `p` and `r` with `g²`
    /// dividing `q`.
    fn reduced(p: i64, q: i64, r: i64, mult: usize) -> Self {
        let mut g = 1;
        for cand in 2..=r.min(p.abs().max(1)) {
            if p % cand == 0 && r % cand == 0 && q % (cand * cand) == 0 {
                g = cand;
            }
        }
        QuadraticPair {
            p: p / g,
            q: q / (g * g),
            r: r / g,
            mult,
        }
    }

    /// Renders with the square part of the radicand pulled out, e.g.
    /// `6±3√6` rather than `6±√54`.
    pub fn display(&self) -> String {
        let mut s = 1i64;
        let mut q0 = self.q;
        let mut k = 2;
        while k * k <= q0 {
            while q0 % (k * k) == 0 {
                q0 /= k * k;
                s *= k;
            }
            k += 1;
        }
        let surd = if s == 1 {
            format!("√{q0}")
        } else {
            format!("{s}√{q0}")
        };
        if self.r == 1 {
            format!("{}±{surd}", self.p)
        } else {
            format!("({}±{surd})/{}", self.p, self.r)
        }
    }
}

/// Exact multiset of eigenvalues.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct Spectrum {
    /// Integer eigenvalues with multiplicities, ascending.
    pub integer: Vec<(i64, usize)>,
    /// Quadratic-surd conjugate pairs.
    pub quadratic: Vec<QuadraticPair>,
    /// Unfactored exact remainder of the characteristic polynomial, if any
    /// (ascending coefficients, monic).
    pub residual: Option<Vec<BigInt>>,
}

impl Spectrum {
    pub fn from_ints(entries: &[(i64, usize)]) -> Self {
        let mut integer = entries.to_vec();
        integer.sort_unstable();
        Spectrum {
            integer,
            quadratic: Vec::new(),
            residual: None,
        }
    }

    /// Number of eigenvalues counted with multiplicity.
    pub fn total_multiplicity(&self) -> usize {
        let from_int: usize = self.integer.iter().map(|&(_, m)| m).sum();
        let from_quad: usize = self.quadratic.iter().map(|p| 2 * p.mult).sum();
        let from_residual = self.residual.as_ref().map_or(0, |r| r.len() - 1);
        from_int + from_quad + from_residual
    }

    /// Exact power sums `(Σ λ, Σ λ²)` over all eigenvalues, residual
    /// included (via its coefficients).
    pub fn moments(&self) -> (BigRational, BigRational) {
        let mut m1 = BigRational::zero();
        let mut m2 = BigRational::zero();
        for &(v, mult) in &self.integer {
            let val = BigRational::from_integer(BigInt::from(v));
            m1 += &val * BigInt::from(mult);
            m2 += &val * &val * BigInt::from(mult);
        }
        for pair in &self.quadratic {
            // (p+√q)/r + (p−√q)/r = 2p/r ; squares sum to 2(p²+q)/r².
            let p = BigRational::from_integer(BigInt::from(pair.p));
            let q = BigRational::from_integer(BigInt::from(pair.q));
            let r = BigRational::from_integer(BigInt::from(pair.r));
            let mult = BigInt::from(pair.mult);
            m1 += (&p + &p) / &r * &mult;
            m2 += (&p * &p + q) * BigInt::from(2) / (&r * &r) * &mult;
        }
        if let Some(res) = &self.residual {
            // Monic x^m + a x^{m-1} + b x^{m-2} + …: Σλ = −a, Σλ² = a² − 2b.
            let m = res.len() - 1;
            let a = BigRational::from_integer(-res[m - 1].clone());
            let b = if m >= 2 {
                BigRational::from_integer(res[m - 2].clone())
            } else {
                BigRational::zero()
            };
            m1 += &a;
            m2 += &a * &a - (&b + &b);
        }
        (m1, m2)
    }

    /// Certifies that `d` is an eigenvalue and that every other eigenvalue
    /// is at most `d`. Surd comparisons are done by exact integer
    /// arithmetic; an unfactored residual refuses certification.
    pub fn max_is(&self, d: i64) -> bool {
        if self.residual.is_some() || self.multiplicity_of(d) == 0 {
            return false;
        }
        let ints_ok = self.integer.iter().all(|&(v, _)| v <= d);
        let quads_ok = self.quadratic.iter().all(|pair| {
            // (p + √q)/r ≤ d  ⟺  rd − p ≥ 0 and q ≤ (rd − p)².
            let gap = pair.r * d - pair.p;
            gap >= 0 && pair.q <= gap * gap
        });
        ints_ok && quads_ok
    }

    /// Multiplicity of an integer eigenvalue.
    pub fn multiplicity_of(&self, value: i64) -> usize {
        self.integer
            .iter()
            .find(|&&(v, _)| v == value)
            .map_or(0, |&(_, m)| m)
    }

    /// Compact rendering such as `{-3^5, 1^9, 6}`.
    pub fn display(&self) -> String {
        let mut parts: Vec<String> = self
            .integer
            .iter()
            .map(|&(v, m)| {
                if m == 1 {
                    format!("{v}")
                } else {
                    format!("{v}^{m}")
                }
            })
            .collect();
        for pair in &self.quadratic {
            if pair.mult == 1 {
                parts.push(pair.display());
            } else {
                parts.push(format!("({})^{}", pair.display(), pair.mult));
            }
        }
        if self.residual.is_some() {
            parts.push("…residual…".to_string());
        }
        format!("{{{}}}", parts.join(", "))
    }

    /// JSON form `{"integer":[{"value","mult"}…],"quadratic":[{"p","q","r","mult"}…]}`
    /// with the convention eigenvalue = (p ± √q)/r.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "integer": self.integer.iter()
                .map(|&(v, m)| json!({"value": v, "mult": m}))
                .collect::<Vec<_>>(),
            "quadratic": self.quadratic.iter()
                .map(|p| json!({"p": p.p, "q": p.q, "r": p.r, "mult": p.mult}))
                .collect::<Vec<_>>(),
            "residual": self.residual.as_ref()
                .map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>()),
        })
    }
}

/// Extracts the spectrum from a monic integer characteristic polynomial.
///
/// Integer roots are found by synthetic division over candidates bounded by
/// `bound` (for adjacency matrices the maximum degree works); what remains
/// is split into integer quadratics when possible, and anything left is
/// kept as an exact residual factor.
pub fn extract_roots(poly: &[BigInt], bound: i64) -> Spectrum {
    let mut rest: Vec<BigInt> = poly.to_vec();
    let mut integer: Vec<(i64, usize)> = Vec::new();

    for cand in -bound..=bound {
        let mut mult = 0;
        while rest.len() > 1 && eval_at(&rest, cand).is_zero() {
            rest = divide_by_linear(&rest, cand);
            mult += 1;
        }
        if mult > 0 {
            integer.push((cand, mult));
        }
    }

    let mut quadratic: Vec<QuadraticPair> = Vec::new();
    if rest.len() > 1 {
        quadratic = extract_quadratics(&mut rest, bound);
    }
    integer.sort_unstable();
    quadratic.sort_by_key(|p| (p.r, p.p, p.q));
    Spectrum {
        integer,
        quadratic,
        residual: (rest.len() > 1).then_some(rest),
    }
}

/// Divides by `(x − root)` assuming zero remainder.
fn divide_by_linear(poly: &[BigInt], root: i64) -> Vec<BigInt> {
    let n = poly.len() - 1;
    let mut out = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    for k in (0..n).rev() {
        carry = &poly[k + 1] + carry * root;
        out[k] = carry.clone();
    }
    debug_assert!((&poly[0] + &carry * root).is_zero() || n == 0);
    out
}

/// Greedily removes monic integer quadratic factors `x² + Bx + C`. The
/// constant term of each factor divides the running constant term, which
/// keeps the candidate set small.
fn extract_quadratics(rest: &mut Vec<BigInt>, bound: i64) -> Vec<QuadraticPair> {
    let mut found: Vec<(i64, i64, usize)> = Vec::new();
    'outer: while rest.len() > 2 {
        let constant = match i64::try_from(&rest[0]) {
            Ok(c) if c != 0 => c,
            _ => break,
        };
        for c in divisors_up_to(constant, bound * bound) {
            for b in -2 * bound..=2 * bound {
                // Real irrational pair needs positive non-square discriminant.
                let disc = b * b - 4 * c;
                if disc <= 0 {
                    continue;
                }
                if let Some(q) = try_divide_quadratic(rest, b, c) {
                    let mut mult = 1;
                    let mut current = q;
                    while let Some(qq) = try_divide_quadratic(&current, b, c) {
                        current = qq;
                        mult += 1;
                    }
                    *rest = current;
                    match found.iter_mut().find(|(fb, fc, _)| *fb == b && *fc == c) {
                        Some(slot) => slot.2 += mult,
                        None => found.push((b, c, mult)),
                    }
                    continue 'outer;
                }
            }
        }
        break;
    }
    found
        .into_iter()
        .map(|(b, c, mult)| QuadraticPair::reduced(-b, b * b - 4 * c, 2, mult))
        .collect()
}

/// Divisors of `|constant|` up to `limit`, both signs.
fn divisors_up_to(constant: i64, limit: i64) -> Vec<i64> {
    let abs = constant.abs();
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= abs {
        if abs % d == 0 {
            for cand in [d, abs / d] {
                if cand <= limit {
                    out.push(cand);
                    out.push(-cand);
                }
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Divides by `x² + bx + c` if the remainder vanishes.
fn try_divide_quadratic(poly: &[BigInt], b: i64, c: i64) -> Option<Vec<BigInt>> {
    let n = poly.len() - 1;
    if n < 2 {
        return None;
    }
    let mut quotient = vec![BigInt::zero(); n - 1];
    let mut work = poly.to_vec();
    for k in (0..=n - 2).rev() {
        let coeff = work[k + 2].clone();
        quotient[k] = coeff.clone();
        work[k + 1] -= &coeff * b;
        work[k] -= &coeff * c;
    }
    (work[0].is_zero() && work[1].is_zero()).then_some(quotient)
}
