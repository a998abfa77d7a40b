use num_bigint::BigUint;

use super::dp::{count_maximum_stable_sets, maximum_stable_set};
use crate::error::{Error, Result};
use crate::graph::{Tree, VertexSet};

/// Grows a stable set of pendant vertices into a maximum stable set.
///
/// Starts from some maximum stable set `S`. While a requested pendant `u`
/// is missing from `S`, its only neighbor is in `S` (otherwise `S + u` would
/// be larger), so trading that neighbor for `u` keeps `S` maximum and gains
/// one requested vertex.
pub fn extend_pendant_set(tree: &Tree, pendants: &VertexSet) -> Result<VertexSet> {
    if let Some((u, v)) = tree.find_adjacent_pair(pendants) {
        return Err(Error::NotStable(u, v));
    }
    if let Some(v) = pendants.iter().find(|&v| tree.degree(v) != 1) {
        return Err(Error::NotPendant(v));
    }
    let mut set = maximum_stable_set(tree);
    for u in pendants {
        if set.contains(u) {
            continue;
        }
        let w = tree.neighbors(u)[0];
        assert!(set.contains(w), "a missing pendant's neighbor is always in a maximum stable set");
        set.remove(w);
        set.insert(u);
    }
    Ok(set)
}

/// Strong unique independence via pendant parity: every pendant vertex lies
/// on the same side of the bipartition.
pub fn is_strong_unique_independent(tree: &Tree) -> bool {
    let pendants = tree.pendant_vertices();
    let sides = tree.bipartition();
    pendants.is_subset(&sides.a) || pendants.is_subset(&sides.b)
}

/// The defining test: exactly one maximum stable set, and its complement is
/// stable too.
pub fn is_strong_unique_by_definition(tree: &Tree) -> bool {
    if count_maximum_stable_sets(tree) != BigUint::from(1u32) {
        return false;
    }
    tree.is_stable(&maximum_stable_set(tree).complement())
}
