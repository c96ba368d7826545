//! Maximal clique enumeration (Bron–Kerbosch with pivoting on bit rows).

use super::Graph;
use crate::bits::BitSet;

/// Enumerates all maximal cliques, returned as sorted vertex lists in
/// lexicographic order.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut r = Vec::new();
    let p = BitSet::full(g.v());
    let x = BitSet::new(g.v());
    expand(g, &mut r, p, x, &mut out);
    out.sort();
    out
}

fn expand(g: &Graph, r: &mut Vec<usize>, p: BitSet, x: BitSet, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() && x.is_empty() {
        let mut clique = r.clone();
        clique.sort_unstable();
        out.push(clique);
        return;
    }
    if p.is_empty() {
        return;
    }
    // Pivot: vertex of P ∪ X with the most neighbors inside P.
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| g.neighbors(u).intersect_count(&p))
        .unwrap();
    let candidates = p.difference(g.neighbors(pivot));

    let mut p = p;
    let mut x = x;
    for v in candidates.iter() {
        let nv = g.neighbors(v);
        r.push(v);
        expand(g, r, p.intersection(nv), x.intersection(nv), out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_one_clique() {
        let g = Graph::complete(3);
        assert_eq!(maximal_cliques(&g), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn path_has_edge_cliques() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(maximal_cliques(&g), vec![vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn isolated_vertices_are_maximal() {
        let g = Graph::new(2);
        assert_eq!(maximal_cliques(&g), vec![vec![0], vec![1]]);
    }

    #[test]
    fn petersen_maximal_cliques_are_its_edges() {
        // Triangle-free, so maximal cliques = edges.
        let g = Graph::petersen();
        let cliques = maximal_cliques(&g);
        assert_eq!(cliques.len(), 15);
        assert!(cliques.iter().all(|c| c.len() == 2));
    }
}
