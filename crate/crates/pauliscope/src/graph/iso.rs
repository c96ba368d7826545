//! Graph isomorphism by backtracking over refinement-compatible vertex
//! classes. Exact, with a witness mapping on success.

use super::Graph;
use crate::error::{Error, Result};
use std::collections::HashMap;

pub const ISO_VERTEX_CAP: usize = 300;

/// Tests isomorphism; see [`isomorphism`] for the witness variant.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(isomorphism(g, h)?.is_some())
}

/// Finds a vertex bijection `m` with `g.has_edge(a,b) == h.has_edge(m[a],m[b])`
/// for all pairs, or `None` when the graphs are not isomorphic.
pub fn isomorphism(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    for side in [g, h] {
        if side.v() > ISO_VERTEX_CAP {
            return Err(Error::VertexCapExceeded {
                v: side.v(),
                cap: ISO_VERTEX_CAP,
            });
        }
    }
    if g.v() != h.v() || g.e() != h.e() {
        return Ok(None);
    }
    let gc = refine_colors(g);
    let hc = refine_colors(h);
    if color_histogram(&gc) != color_histogram(&hc) {
        return Ok(None);
    }

    // Match vertices in a fixed order, rarest refinement class first.
    let hist = color_histogram(&gc);
    let mut order: Vec<usize> = (0..g.v()).collect();
    order.sort_by_key(|&x| (hist[&gc[x]], gc[x], x));

    let mut mapping = vec![usize::MAX; g.v()];
    let mut used = vec![false; h.v()];
    let found = extend(g, h, &gc, &hc, &order, 0, &mut mapping, &mut used);
    Ok(found.then_some(mapping))
}

fn extend(
    g: &Graph,
    h: &Graph,
    gc: &[u64],
    hc: &[u64],
    order: &[usize],
    depth: usize,
    mapping: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let a = order[depth];
    for b in 0..h.v() {
        if used[b] || gc[a] != hc[b] {
            continue;
        }
        // Adjacency to every already-mapped vertex must agree.
        let consistent = order[..depth]
            .iter()
            .all(|&p| g.has_edge(a, p) == h.has_edge(b, mapping[p]));
        if !consistent {
            continue;
        }
        mapping[a] = b;
        used[b] = true;
        if extend(g, h, gc, hc, order, depth + 1, mapping, used) {
            return true;
        }
        mapping[a] = usize::MAX;
        used[b] = false;
    }
    false
}

/// Iterated neighbor-color refinement (1-dimensional Weisfeiler–Leman).
/// Color values are canonical across graphs because classes are rebuilt
/// from sorted signatures each round.
fn refine_colors(g: &Graph) -> Vec<u64> {
    let mut colors: Vec<u64> = (0..g.v()).map(|x| g.degree(x) as u64).collect();
    for _ in 0..g.v() {
        let mut signatures: Vec<(u64, Vec<u64>)> = (0..g.v())
            .map(|x| {
                let mut ns: Vec<u64> = g.neighbors(x).iter().map(|w| colors[w]).collect();
                ns.sort_unstable();
                (colors[x], ns)
            })
            .collect();
        let mut sorted = signatures.clone();
        sorted.sort();
        sorted.dedup();
        let index: HashMap<&(u64, Vec<u64>), u64> = sorted
            .iter()
            .enumerate()
            .map(|(i, s)| (s, i as u64))
            .collect();
        let next: Vec<u64> = signatures.drain(..).map(|s| index[&s]).collect();
        if next == colors {
            break;
        }
        colors = next;
    }
    colors
}

fn color_histogram(colors: &[u64]) -> HashMap<u64, usize> {
    let mut h = HashMap::new();
    for &c in colors {
        *h.entry(c).or_insert(0) += 1;
    }
    h
}
