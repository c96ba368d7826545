//! Exact graph invariants: degrees, girth, diameter, connectivity.

use super::Graph;
use crate::bits::BitSet;

/// Girth of a graph; forests get the distinguished `None` value rather
/// than zero.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Girth {
    Finite(usize),
    None,
}

impl std::fmt::Display for Girth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::None => write!(f, "none"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphInvariants {
    pub v: usize,
    pub e: usize,
    pub degree_sequence: Vec<usize>,
    /// Common degree when the graph is regular.
    pub regular: Option<usize>,
    pub girth: Girth,
    /// Longest geodesic; `None` when the graph is disconnected or empty.
    pub diameter: Option<usize>,
    pub connected: bool,
}

pub fn invariants(g: &Graph) -> GraphInvariants {
    let v = g.v();
    let mut degree_sequence: Vec<usize> = (0..v).map(|x| g.degree(x)).collect();
    let regular = degree_sequence
        .first()
        .filter(|&&d| degree_sequence.iter().all(|&x| x == d))
        .copied();
    degree_sequence.sort_unstable();

    let (connected, diameter) = diameter_and_connectivity(g);
    GraphInvariants {
        v,
        e: g.e(),
        degree_sequence,
        regular,
        girth: girth(g),
        diameter,
        connected,
    }
}

/// BFS distances from `src`; `usize::MAX` marks unreachable vertices.
pub fn bfs_distances(g: &Graph, src: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.v()];
    dist[src] = 0;
    let mut frontier = vec![src];
    let mut d = 0;
    while !frontier.is_empty() {
        d += 1;
        let mut next = Vec::new();
        for &u in &frontier {
            for w in g.neighbors(u).iter() {
                if dist[w] == usize::MAX {
                    dist[w] = d;
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    dist
}

fn diameter_and_connectivity(g: &Graph) -> (bool, Option<usize>) {
    if g.v() == 0 {
        return (true, None);
    }
    let mut diameter = 0;
    for src in 0..g.v() {
        let dist = bfs_distances(g, src);
        if dist.iter().any(|&d| d == usize::MAX) {
            return (false, None);
        }
        diameter = diameter.max(*dist.iter().max().unwrap());
    }
    (true, Some(diameter))
}

/// Length of a shortest cycle, by BFS from every vertex.
pub fn girth(g: &Graph) -> Girth {
    let v = g.v();
    let mut best = usize::MAX;
    for src in 0..v {
        // BFS recording distance and parent; a non-tree edge closes a cycle
        // of length dist(a) + dist(b) + 1.
        let mut dist = vec![usize::MAX; v];
        let mut parent = vec![usize::MAX; v];
        dist[src] = 0;
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] >= best {
                break;
            }
            for w in g.neighbors(u).iter() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::None
    } else {
        Girth::Finite(best)
    }
}

/// Number of closed triangles, used by the trace(A^3) cross-check.
pub fn triangle_count(g: &Graph) -> usize {
    let mut t = 0;
    for a in 0..g.v() {
        for b in g.neighbors(a).iter() {
            if b <= a {
                continue;
            }
            t += g
                .neighbors(a)
                .intersection(g.neighbors(b))
                .iter()
                .filter(|&c| c > b)
                .count();
        }
    }
    t
}

/// Connected components as sorted vertex lists, sorted by first vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = BitSet::new(g.v());
    let mut comps = Vec::new();
    for s in 0..g.v() {
        if seen.contains(s) {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![s];
        seen.insert(s);
        while let Some(u) = stack.pop() {
            comp.push(u);
            for w in g.neighbors(u).iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_invariants() {
        let inv = invariants(&Graph::petersen());
        assert_eq!(inv.v, 10);
        assert_eq!(inv.e, 15);
        assert_eq!(inv.regular, Some(3));
        assert_eq!(inv.girth, Girth::Finite(5));
        assert_eq!(inv.diameter, Some(2));
        assert!(inv.connected);
    }

    #[test]
    fn k33_has_girth_4() {
        assert_eq!(girth(&Graph::complete_bipartite(3, 3)), Girth::Finite(4));
    }

    #[test]
    fn forest_girth_is_none() {
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(girth(&path), Girth::None);
        assert_eq!(invariants(&path).diameter, Some(3));
    }

    #[test]
    fn disconnected_graph_reports_no_diameter() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        let inv = invariants(&g);
        assert!(!inv.connected);
        assert_eq!(inv.diameter, None);
        assert_eq!(connected_components(&g), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn triangle_count_matches_girth_three() {
        let g = Graph::complete(4);
        assert_eq!(triangle_count(&g), 4);
        assert_eq!(girth(&g), Girth::Finite(3));
    }
}
