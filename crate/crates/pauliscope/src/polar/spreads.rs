//! Spreads: partitions of the point set into pairwise disjoint generators,
//! by exact-cover search with deterministic minimum-branching column choice.

use super::{Generator, SymplecticSpace};
use crate::bits::BitSet;
use crate::error::{Error, Result};

/// One spread of the rank-N space (N ≤ 3), as indices into the sorted
/// generator list together with the generators themselves.
pub fn find_spread(n: usize) -> Result<Vec<Generator>> {
    if n > 3 {
        return Err(Error::UnsupportedArity { n });
    }
    let space = SymplecticSpace::new(n);
    let gens = space.generators();
    find_spread_in(&space, &gens)
        .map(|idx| idx.into_iter().map(|i| gens[i].clone()).collect())
        .ok_or_else(|| Error::SearchFailed("no spread found".to_string()))
}

/// All spreads of the rank-N space (N ≤ 2), canonically ordered.
pub fn enumerate_spreads(n: usize) -> Result<Vec<Vec<Generator>>> {
    if n > 2 {
        return Err(Error::UnsupportedArity { n });
    }
    let space = SymplecticSpace::new(n);
    let gens = space.generators();
    let mut out = Vec::new();
    search(&space, &gens, &BitSet::new(space.point_count() + 1), &mut Vec::new(), &mut out, None);
    out.sort();
    Ok(out
        .into_iter()
        .map(|idx| idx.into_iter().map(|i| gens[i].clone()).collect())
        .collect())
}

/// First spread in deterministic search order, as generator indices.
pub(super) fn find_spread_in(space: &SymplecticSpace, gens: &[Generator]) -> Option<Vec<usize>> {
    let mut found = Vec::new();
    search(
        space,
        gens,
        &BitSet::new(space.point_count() + 1),
        &mut Vec::new(),
        &mut found,
        Some(1),
    );
    found.into_iter().next()
}

/// Exact-cover backtracking. The branching point is the uncovered point
/// lying on the fewest still-available generators, ties by index, which
/// makes results reproducible.
fn search(
    space: &SymplecticSpace,
    gens: &[Generator],
    covered: &BitSet,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    limit: Option<usize>,
) {
    if let Some(l) = limit {
        if out.len() >= l {
            return;
        }
    }
    let total = space.point_count();
    if covered.count() == total {
        let mut solution = chosen.clone();
        solution.sort_unstable();
        out.push(solution);
        return;
    }
    // Available generator = disjoint from the covered set.
    let available: Vec<usize> = (0..gens.len())
        .filter(|&i| {
            gens[i]
                .points
                .iter()
                .all(|&p| !covered.contains(p as usize))
        })
        .collect();
    let branch_point = (1..=total as u32)
        .filter(|&p| !covered.contains(p as usize))
        .min_by_key(|&p| {
            available
                .iter()
                .filter(|&&i| gens[i].points.contains(&p))
                .count()
        });
    let branch_point = match branch_point {
        Some(p) => p,
        None => return,
    };
    for &i in &available {
        if !gens[i].points.contains(&branch_point) {
            continue;
        }
        let mut next = covered.clone();
        for &p in &gens[i].points {
            next.insert(p as usize);
        }
        chosen.push(i);
        search(space, gens, &next, chosen, out, limit);
        chosen.pop();
        if let Some(l) = limit {
            if out.len() >= l {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_two_has_six_spreads() {
        let all = enumerate_spreads(2).unwrap();
        assert_eq!(all.len(), 6);
        for spread in &all {
            assert_eq!(spread.len(), 5);
            let mut seen = std::collections::HashSet::new();
            for gen in spread {
                for &p in &gen.points {
                    assert!(seen.insert(p));
                }
            }
            assert_eq!(seen.len(), 15);
        }
    }

    #[test]
    fn rank_three_spread_partitions_63_points() {
        let spread = find_spread(3).unwrap();
        assert_eq!(spread.len(), 9);
        let mut seen = std::collections::HashSet::new();
        for gen in &spread {
            assert_eq!(gen.points.len(), 7);
            for &p in &gen.points {
                assert!(seen.insert(p), "generators overlap");
            }
        }
        assert_eq!(seen.len(), 63);
    }

    #[test]
    fn enumeration_caps_at_rank_two() {
        assert!(matches!(
            enumerate_spreads(3),
            Err(Error::UnsupportedArity { n: 3 })
        ));
    }

    #[test]
    fn search_is_deterministic() {
        let a = find_spread(3).unwrap();
        let b = find_spread(3).unwrap();
        assert_eq!(a, b);
    }
}
