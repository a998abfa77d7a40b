//! Linear-time dynamic programs over a breadth-first rooting at vertex 0.
//!
//! For every vertex `v` the downward pass stores the best stable set inside
//! the subtree of `v` that contains `v` (`inc`) or avoids it (`exc`).

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::graph::{Rooting, Tree, VertexSet, NO_PARENT};

const NEG: i64 = i64::MIN / 4;

struct Downward {
    rooting: Rooting,
    inc: Vec<i64>,
    exc: Vec<i64>,
}

impl Downward {
    fn best(&self, v: usize) -> i64 {
        self.inc[v].max(self.exc[v])
    }
}

fn downward(tree: &Tree, forbidden: Option<&VertexSet>) -> Downward {
    let n = tree.n();
    let rooting = tree.rooted(0);
    let mut inc = vec![1i64; n];
    let mut exc = vec![0i64; n];
    if let Some(f) = forbidden {
        for v in f {
            inc[v] = NEG;
        }
    }
    for &v in rooting.order.iter().rev() {
        let p = rooting.parent[v];
        if p != NO_PARENT {
            inc[p] += exc[v];
            exc[p] += inc[v].max(exc[v]);
        }
    }
    Downward { rooting, inc, exc }
}

/// Stability number: size of a maximum stable set.
pub fn alpha(tree: &Tree) -> usize {
    downward(tree, None).best(0) as usize
}

/// Largest stable set avoiding `forbidden`, with one such set.
pub fn max_stable_set_avoiding(tree: &Tree, forbidden: &VertexSet) -> (usize, VertexSet) {
    let dp = downward(tree, Some(forbidden));
    let set = trace_back(tree, &dp);
    (dp.best(0) as usize, set)
}

/// One maximum stable set.
pub fn maximum_stable_set(tree: &Tree) -> VertexSet {
    trace_back(tree, &downward(tree, None))
}

fn trace_back(tree: &Tree, dp: &Downward) -> VertexSet {
    let mut taken = VertexSet::new(tree.n());
    for &v in &dp.rooting.order {
        let p = dp.rooting.parent[v];
        let parent_taken = p != NO_PARENT && taken.contains(p);
        if !parent_taken && dp.inc[v] >= dp.exc[v] {
            taken.insert(v);
        }
    }
    taken
}

/// `alpha(T - v)` for every vertex `v`, in one rerooting sweep.
///
/// The upward pass computes, for each non-root `v` with parent `p`, the
/// include/exclude optima of `p` inside the component of `T - v` holding `p`.
/// Removing `v` leaves its child subtrees plus that component.
pub fn deletion_alphas(tree: &Tree) -> Vec<usize> {
    let n = tree.n();
    let dp = downward(tree, None);
    let parent = &dp.rooting.parent;
    let mut up_inc = vec![0i64; n];
    let mut up_exc = vec![0i64; n];
    let mut sum_exc = vec![0i64; n];
    let mut sum_best = vec![0i64; n];
    for &v in &dp.rooting.order[1..] {
        sum_exc[parent[v]] += dp.exc[v];
        sum_best[parent[v]] += dp.best(v);
    }
    let mut result = vec![0usize; n];
    for &u in &dp.rooting.order {
        let has_parent = parent[u] != NO_PARENT;
        let (above_if_in, above_if_out) = if has_parent {
            (up_exc[u], up_inc[u].max(up_exc[u]))
        } else {
            (0, 0)
        };
        result[u] = (sum_best[u] + above_if_out) as usize;
        for &c in tree.neighbors(u) {
            if c == parent[u] {
                continue;
            }
            up_inc[c] = 1 + sum_exc[u] - dp.exc[c] + above_if_in;
            up_exc[c] = sum_best[u] - dp.best(c) + above_if_out;
        }
    }
    result
}

/// Vertices in every maximum stable set: exactly those whose deletion
/// lowers the stability number. Linear time.
pub fn core(tree: &Tree) -> VertexSet {
    let a = alpha(tree);
    let without = deletion_alphas(tree);
    VertexSet::from_members(tree.n(), (0..tree.n()).filter(|&v| without[v] + 1 == a))
}

/// Sum of stability numbers over the components of `T - removed`;
/// isolated vertices count one each. Linear time.
pub fn forest_alpha(tree: &Tree, removed: &VertexSet) -> usize {
    let n = tree.n();
    let mut visited = removed.clone();
    let mut inc = vec![1usize; n];
    let mut exc = vec![0usize; n];
    let mut parent = vec![NO_PARENT; n];
    let mut order = Vec::with_capacity(n);
    let mut total = 0;
    for start in 0..n {
        if visited.contains(start) {
            continue;
        }
        order.clear();
        visited.insert(start);
        order.push(start);
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in tree.neighbors(u) {
                if !visited.contains(w) {
                    visited.insert(w);
                    parent[w] = u;
                    order.push(w);
                }
            }
        }
        for &v in order.iter().rev() {
            if v != start {
                let p = parent[v];
                inc[p] += exc[v];
                exc[p] += inc[v].max(exc[v]);
            }
        }
        total += inc[start].max(exc[start]);
    }
    total
}

/// Quadratic reference for [`core`]: one independent deletion per vertex.
pub fn core_naive(tree: &Tree) -> VertexSet {
    let n = tree.n();
    let a = alpha(tree);
    let mut core = VertexSet::new(n);
    let mut removed = VertexSet::new(n);
    for v in 0..n {
        removed.insert(v);
        if forest_alpha(tree, &removed) + 1 == a {
            core.insert(v);
        }
        removed.remove(v);
    }
    core
}

/// Number of maximum stable sets, exact.
pub fn count_maximum_stable_sets(tree: &Tree) -> BigUint {
    let n = tree.n();
    let rooting = tree.rooted(0);
    let mut inc = vec![1usize; n];
    let mut exc = vec![0usize; n];
    let mut inc_ways = vec![BigUint::one(); n];
    let mut exc_ways = vec![BigUint::one(); n];
    for &v in rooting.order.iter().rev() {
        let p = rooting.parent[v];
        if p == NO_PARENT {
            continue;
        }
        let best = inc[v].max(exc[v]);
        let mut ways = BigUint::zero();
        if inc[v] == best {
            ways += &inc_ways[v];
        }
        if exc[v] == best {
            ways += &exc_ways[v];
        }
        inc[p] += exc[v];
        let child_exc_ways = std::mem::take(&mut exc_ways[v]);
        inc_ways[p] *= child_exc_ways;
        exc[p] += best;
        exc_ways[p] *= ways;
    }
    let best = inc[0].max(exc[0]);
    let mut total = BigUint::zero();
    if inc[0] == best {
        total += &inc_ways[0];
    }
    if exc[0] == best {
        total += &exc_ways[0];
    }
    total
}

/// Matching number by greedy leaf matching: each vertex, taken deepest
/// first, is matched to its parent when both are still free.
pub fn mu(tree: &Tree) -> usize {
    let rooting = tree.rooted(0);
    let mut matched = vec![false; tree.n()];
    let mut size = 0;
    for &v in rooting.order.iter().rev() {
        let p = rooting.parent[v];
        if p != NO_PARENT && !matched[v] && !matched[p] {
            matched[v] = true;
            matched[p] = true;
            size += 1;
        }
    }
    size
}

pub fn has_perfect_matching(tree: &Tree) -> bool {
    2 * mu(tree) == tree.n()
}
