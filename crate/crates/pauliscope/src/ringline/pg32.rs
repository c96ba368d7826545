//! Classification of the 35 lines of the binary projective 3-space by the
//! phase of the operator products they carry: totally isotropic lines give
//! ±1, the remaining twenty give ±i.

use crate::error::Result;
use crate::pauli::PauliGraph;
use crate::polar::SymplecticSpace;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LineClass {
    /// All pairs commute; products give μ = ±1 (sign recorded).
    Isotropic(i8),
    /// All pairs anticommute; products give μ = ±i.
    NonIsotropic,
}

#[derive(Clone, Debug)]
pub struct Pg32Lines {
    /// Vertex triples (sorted) with their class.
    pub lines: Vec<([usize; 3], LineClass)>,
    pub isotropic_count: usize,
    pub non_isotropic_count: usize,
}

impl Pg32Lines {
    pub fn class_of(&self, triple: &[usize; 3]) -> Option<LineClass> {
        let mut key = *triple;
        key.sort_unstable();
        self.lines
            .iter()
            .find(|(l, _)| *l == key)
            .map(|&(_, c)| c)
    }
}

/// Computes all lines {x, y, x+y} of the projective space on the two-qubit
/// operator classes and classifies each by the phases of its products.
/// Every product is checked: isotropic lines carry a well-defined sign
/// (the same ±identity for any commuting product order), non-isotropic
/// lines yield ±i in every order.
pub fn pg32_line_phases(pg: &PauliGraph) -> Result<Pg32Lines> {
    assert_eq!(pg.scheme.d(), 2);
    assert_eq!(pg.scheme.n(), 2);
    let space = SymplecticSpace::new(2);
    let mut lines = Vec::new();
    let (mut iso, mut non) = (0usize, 0usize);
    for x in space.points() {
        for y in (x + 1)..=(space.point_count() as u32) {
            let z = x ^ y;
            if z <= y {
                continue;
            }
            let idx = |v: u32| -> usize {
                pg.scheme
                    .class_index(&space.operator_of(v))
                    .expect("nonzero vectors are vertices")
            };
            let triple_vec = [x, y, z];
            let mut triple = [idx(x), idx(y), idx(z)];
            triple.sort_unstable();

            let isotropic = space.form(x, y) == 0;
            debug_assert_eq!(space.form(x, z) == 0, isotropic);
            debug_assert_eq!(space.form(y, z) == 0, isotropic);

            let class = if isotropic {
                // The full product of the three operators is a well-defined
                // ±identity; each pairwise product hits the third labeled
                // operator with phase ±1.
                let [a, b, c] = triple_vec.map(|v| idx(v));
                let product = pg
                    .operator(a)
                    .multiply(pg.operator(b))?
                    .multiply(pg.operator(c))?;
                assert!(product.is_identity_class());
                let sign = match product.phase() {
                    0 => 1,
                    2 => -1,
                    p => panic!("commuting line with odd phase {p}"),
                };
                for (u, v) in [(a, b), (b, c), (a, c)] {
                    let p = pg.operator(u).multiply(pg.operator(v))?;
                    let (rel, _) = pg.scheme.decompose(&p).expect("closed line");
                    assert_eq!(rel % 2, 0);
                }
                iso += 1;
                LineClass::Isotropic(sign)
            } else {
                // Every ordered product hits the third labeled operator
                // with phase ±i.
                let [a, b, c] = triple_vec.map(|v| idx(v));
                for (u, v) in [(a, b), (b, a), (b, c), (c, b), (a, c), (c, a)] {
                    let p = pg.operator(u).multiply(pg.operator(v))?;
                    let (rel, third) = pg.scheme.decompose(&p).expect("closed line");
                    assert_eq!(rel % 2, 1);
                    assert!(third != u && third != v);
                }
                non += 1;
                LineClass::NonIsotropic
            };
            lines.push((triple, class));
        }
    }
    lines.sort_by_key(|&(l, _)| l);
    Ok(Pg32Lines {
        lines,
        isotropic_count: iso,
        non_isotropic_count: non,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::maximal_cliques;
    use crate::pauli::build_pauli_graph;

    #[test]
    fn fifteen_isotropic_twenty_not() {
        let pg = build_pauli_graph(2, 2, None).unwrap();
        let report = pg32_line_phases(&pg).unwrap();
        assert_eq!(report.lines.len(), 35);
        assert_eq!(report.isotropic_count, 15);
        assert_eq!(report.non_isotropic_count, 20);
    }

    #[test]
    fn isotropic_lines_are_the_quadrangle_lines() {
        let pg = build_pauli_graph(2, 2, None).unwrap();
        let report = pg32_line_phases(&pg).unwrap();
        let mut iso: Vec<Vec<usize>> = report
            .lines
            .iter()
            .filter(|(_, c)| matches!(c, LineClass::Isotropic(_)))
            .map(|&(l, _)| l.to_vec())
            .collect();
        iso.sort();
        assert_eq!(iso, maximal_cliques(&pg.graph));
    }

    #[test]
    fn named_lines() {
        let pg = build_pauli_graph(2, 2, None).unwrap();
        let report = pg32_line_phases(&pg).unwrap();
        let key = |labels: &[&str; 3]| {
            let mut t = [0usize; 3];
            for (slot, l) in t.iter_mut().zip(labels) {
                *slot = pg.index_of_label(l).unwrap();
            }
            t
        };
        assert_eq!(
            report.class_of(&key(&["1", "a", "4"])),
            Some(LineClass::Isotropic(1))
        );
        // The triple containing 1 and 2 closes at 3 and anticommutes.
        assert_eq!(
            report.class_of(&key(&["1", "2", "3"])),
            Some(LineClass::NonIsotropic)
        );
        // The grid row with a negative product.
        assert_eq!(
            report.class_of(&key(&["4", "8", "12"])),
            Some(LineClass::Isotropic(-1))
        );
    }
}
