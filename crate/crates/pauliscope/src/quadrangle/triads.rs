//! Triads: triples of pairwise non-collinear points and their centers.

use super::PointLineGeometry;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Triad {
    pub points: [usize; 3],
    /// Points collinear with all three triad points.
    pub centers: Vec<usize>,
}

#[derive(Clone, Debug, Default)]
pub struct TriadClassification {
    pub unicentric: Vec<Triad>,
    pub tricentric: Vec<Triad>,
}

/// Exhaustively enumerates all triads and splits them by center count.
/// In a quadrangle of order two every triad has one or three centers.
pub fn classify_triads(geom: &PointLineGeometry) -> TriadClassification {
    let n = geom.point_count();
    let mut out = TriadClassification::default();
    for a in 0..n {
        for b in (a + 1)..n {
            if geom.collinear(a, b) {
                continue;
            }
            for c in (b + 1)..n {
                if geom.collinear(a, c) || geom.collinear(b, c) {
                    continue;
                }
                let centers: Vec<usize> = (0..n)
                    .filter(|&x| {
                        geom.collinear(x, a) && geom.collinear(x, b) && geom.collinear(x, c)
                    })
                    .collect();
                let triad = Triad {
                    points: [a, b, c],
                    centers,
                };
                match triad.centers.len() {
                    1 => out.unicentric.push(triad),
                    3 => out.tricentric.push(triad),
                    k => panic!("triad with {k} centers in a quadrangle of order two"),
                }
            }
        }
    }
    out
}
