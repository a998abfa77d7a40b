use num_bigint::BigUint;

use super::dp::count_maximum_stable_sets;
use crate::error::{Error, Result};
use crate::graph::{Tree, VertexSet, NO_PARENT};

/// Largest order accepted by the bitmask-based enumerations.
pub const MASK_CEILING: usize = 64;

/// All maximum stable sets, sorted lexicographically by member list.
///
/// Fails with `LimitExceeded` (reporting the exact count) when more than
/// `limit` exist.
pub fn enumerate_maximum_stable_sets(tree: &Tree, limit: usize) -> Result<Vec<VertexSet>> {
    let count = count_maximum_stable_sets(tree);
    if count > BigUint::from(limit) {
        return Err(Error::LimitExceeded { count: count.to_string(), limit });
    }

    let n = tree.n();
    let rooting = tree.rooted(0);
    let (mut inc, mut exc) = (vec![1usize; n], vec![0usize; n]);
    for &v in rooting.order.iter().rev() {
        let p = rooting.parent[v];
        if p != NO_PARENT {
            inc[p] += exc[v];
            exc[p] += inc[v].max(exc[v]);
        }
    }
    // Walk vertices in breadth-first order. A vertex whose parent is taken
    // must be left out; otherwise it may go either way that keeps its
    // subtree optimal.
    let order = &rooting.order;
    let mut taken = vec![false; n];
    let mut result = Vec::new();
    let mut frames: Vec<(usize, u8)> = vec![(0, 0)];
    while let Some(&mut (depth, ref mut tried)) = frames.last_mut() {
        if depth == n {
            result.push(VertexSet::from_members(n, (0..n).filter(|&v| taken[v])));
            frames.pop();
            continue;
        }
        let v = order[depth];
        let p = rooting.parent[v];
        let forced_out = p != NO_PARENT && taken[p];
        let best = inc[v].max(exc[v]);
        let choice = *tried;
        *tried += 1;
        let allowed = match choice {
            0 => !forced_out && inc[v] == best,
            1 => forced_out || exc[v] == best,
            _ => {
                frames.pop();
                continue;
            }
        };
        if allowed {
            taken[v] = choice == 0;
            frames.push((depth + 1, 0));
        }
    }
    result.sort();
    Ok(result)
}

/// All inclusion-maximal stable sets, sorted lexicographically.
///
/// Bron–Kerbosch with pivoting, run on the complement adjacency. Intended
/// for small trees; the count is still reported when `limit` is exceeded.
pub fn enumerate_maximal_stable_sets(tree: &Tree, limit: usize) -> Result<Vec<VertexSet>> {
    let n = tree.n();
    let mut found = Vec::new();
    let mut count = 0u64;
    for_each_maximal_stable_set(tree, |r| {
        count += 1;
        if found.len() < limit {
            found.push(r);
        }
    })?;
    if count > limit as u64 {
        return Err(Error::LimitExceeded { count: count.to_string(), limit });
    }
    let mut sets: Vec<_> = found.into_iter().map(|m| VertexSet::from_mask(n, m)).collect();
    sets.sort();
    Ok(sets)
}

/// Streams every inclusion-maximal stable set as a bitmask.
pub fn for_each_maximal_stable_set(tree: &Tree, mut visit: impl FnMut(u64)) -> Result<()> {
    let n = tree.n();
    if n > MASK_CEILING {
        return Err(Error::TooLarge { n, ceiling: MASK_CEILING });
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let non_adjacent: Vec<u64> = (0..n)
        .map(|v| {
            let adj = tree.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w);
            all & !adj & !(1 << v)
        })
        .collect();
    bron_kerbosch(&non_adjacent, 0, all, 0, &mut visit);
    Ok(())
}

fn bron_kerbosch(compatible: &[u64], r: u64, mut p: u64, mut x: u64, emit: &mut impl FnMut(u64)) {
    if p == 0 {
        if x == 0 {
            emit(r);
        }
        return;
    }
    let pivot = ones(p | x)
        .max_by_key(|&u| (p & compatible[u]).count_ones())
        .expect("p is non-empty");
    for v in ones(p & !compatible[pivot]) {
        bron_kerbosch(compatible, r | 1 << v, p & compatible[v], x & compatible[v], emit);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

fn ones(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Calls `visit` with every stable set of the tree (as a bitmask), the empty
/// set included. Backtracks over vertices in label order.
pub fn for_each_stable_set(tree: &Tree, mut visit: impl FnMut(u64)) -> Result<()> {
    let n = tree.n();
    if n > MASK_CEILING {
        return Err(Error::TooLarge { n, ceiling: MASK_CEILING });
    }
    let earlier: Vec<u64> = (0..n)
        .map(|v| tree.neighbors(v).iter().filter(|&&w| w < v).fold(0u64, |m, &w| m | 1 << w))
        .collect();
    fn go(v: usize, n: usize, mask: u64, earlier: &[u64], visit: &mut impl FnMut(u64)) {
        if v == n {
            visit(mask);
            return;
        }
        go(v + 1, n, mask, earlier, visit);
        if earlier[v] & mask == 0 {
            go(v + 1, n, mask | 1 << v, earlier, visit);
        }
    }
    go(0, n, 0, &earlier, &mut visit);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn members(sets: &[VertexSet]) -> Vec<Vec<usize>> {
        sets.iter().map(VertexSet::to_vec).collect()
    }

    #[test]
    fn maximum_sets_of_paths() {
        let p5 = Tree::path(5).unwrap();
        assert_eq!(members(&enumerate_maximum_stable_sets(&p5, 10).unwrap()), vec![vec![0, 2, 4]]);
        let p4 = Tree::path(4).unwrap();
        assert_eq!(
            members(&enumerate_maximum_stable_sets(&p4, 10).unwrap()),
            vec![vec![0, 2], vec![0, 3], vec![1, 3]]
        );
        let p2 = Tree::path(2).unwrap();
        assert_eq!(members(&enumerate_maximum_stable_sets(&p2, 10).unwrap()), vec![vec![0], vec![1]]);
    }

    #[test]
    fn maximum_limit_reports_count() {
        let p4 = Tree::path(4).unwrap();
        assert_eq!(
            enumerate_maximum_stable_sets(&p4, 2),
            Err(Error::LimitExceeded { count: "3".into(), limit: 2 })
        );
    }

    #[test]
    fn maximal_sets_of_paths() {
        let p2 = Tree::path(2).unwrap();
        assert_eq!(members(&enumerate_maximal_stable_sets(&p2, 10).unwrap()), vec![vec![0], vec![1]]);
        let p3 = Tree::path(3).unwrap();
        assert_eq!(members(&enumerate_maximal_stable_sets(&p3, 10).unwrap()), vec![vec![0, 2], vec![1]]);
        let p4 = Tree::path(4).unwrap();
        assert_eq!(
            members(&enumerate_maximal_stable_sets(&p4, 10).unwrap()),
            vec![vec![0, 2], vec![0, 3], vec![1, 3]]
        );
        assert!(matches!(
            enumerate_maximal_stable_sets(&p4, 2),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn stable_set_scan_counts() {
        // stable sets of P_n number Fibonacci(n + 2)
        let mut count = 0;
        for_each_stable_set(&Tree::path(10).unwrap(), |_| count += 1).unwrap();
        assert_eq!(count, 144);
        let mut count = 0;
        for_each_stable_set(&Tree::star(5).unwrap(), |_| count += 1).unwrap();
        assert_eq!(count, 33);
    }
}
