//! Exact chromatic number via branch and bound seeded by DSATUR.

use super::Graph;
use crate::error::{Error, Result};

pub const CHROMATIC_VERTEX_CAP: usize = 64;

/// Exact chromatic number. Refuses graphs above the cap instead of
/// approximating.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    if g.v() > CHROMATIC_VERTEX_CAP {
        return Err(Error::VertexCapExceeded {
            v: g.v(),
            cap: CHROMATIC_VERTEX_CAP,
        });
    }
    if g.v() == 0 {
        return Ok(0);
    }
    if g.e() == 0 {
        return Ok(1);
    }
    let lower = greedy_clique(g).len();
    let upper = dsatur_upper_bound(g);
    for k in lower..upper {
        if colorable(g, k) {
            return Ok(k);
        }
    }
    Ok(upper)
}

/// Greedy maximal clique used as a lower bound.
fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.v()).collect();
    order.sort_by_key(|&x| std::cmp::Reverse(g.degree(x)));
    let mut clique: Vec<usize> = Vec::new();
    for v in order {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    clique
}

/// Colors greedily by saturation degree; the color count is an upper bound.
fn dsatur_upper_bound(g: &Graph) -> usize {
    let v = g.v();
    let mut color = vec![usize::MAX; v];
    let mut used_colors = 0;
    for _ in 0..v {
        // Highest saturation first, ties by degree.
        let next = (0..v)
            .filter(|&x| color[x] == usize::MAX)
            .max_by_key(|&x| (saturation(g, &color, x), g.degree(x)))
            .unwrap();
        let c = smallest_free_color(g, &color, next);
        color[next] = c;
        used_colors = used_colors.max(c + 1);
    }
    used_colors
}

fn saturation(g: &Graph, color: &[usize], x: usize) -> usize {
    let mut seen: u64 = 0;
    for w in g.neighbors(x).iter() {
        if color[w] != usize::MAX {
            seen |= 1 << color[w];
        }
    }
    seen.count_ones() as usize
}

fn smallest_free_color(g: &Graph, color: &[usize], x: usize) -> usize {
    let mut seen: u64 = 0;
    for w in g.neighbors(x).iter() {
        if color[w] != usize::MAX {
            seen |= 1 << color[w];
        }
    }
    (0..).find(|&c| seen >> c & 1 == 0).unwrap()
}

/// Backtracking k-colorability on saturation-ordered vertices.
fn colorable(g: &Graph, k: usize) -> bool {
    let mut color = vec![usize::MAX; g.v()];
    try_color(g, &mut color, k, 0)
}

fn try_color(g: &Graph, color: &mut [usize], k: usize, colored: usize) -> bool {
    if colored == color.len() {
        return true;
    }
    let next = (0..color.len())
        .filter(|&x| color[x] == usize::MAX)
        .max_by_key(|&x| (saturation(g, color, x), g.degree(x)))
        .unwrap();
    let mut forbidden: u64 = 0;
    for w in g.neighbors(next).iter() {
        if color[w] != usize::MAX {
            forbidden |= 1 << color[w];
        }
    }
    // Only one previously-unused color needs to be tried, which prunes
    // color-permutation symmetry.
    let max_used = color.iter().filter(|&&c| c != usize::MAX).max();
    let fresh_limit = max_used.map_or(0, |&m| m + 1).min(k - 1);
    for c in 0..=fresh_limit {
        if forbidden >> c & 1 == 0 {
            color[next] = c;
            if try_color(g, color, k, colored + 1) {
                return true;
            }
            color[next] = usize::MAX;
        }
    }
    false
}
