//! Vertex bonding `T1 * v * T2`: glue two trees by identifying one vertex of
//! each. Also the inverse split at a vertex, and the spider family.

use crate::error::{Error, Result};
use crate::graph::{Tree, VertexId, VertexSet};
use crate::independence;

/// Result of bonding. `T1` keeps labels `0..n1`; `T2`'s other vertices follow
/// in increasing order; the bond vertex is the image of `v1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BondResult {
    pub tree: Tree,
    pub bond_vertex: VertexId,
    pub left_map: Vec<VertexId>,
    pub right_map: Vec<VertexId>,
}

impl BondResult {
    /// Image of a set of `T1` vertices.
    pub fn map_left(&self, set: &VertexSet) -> VertexSet {
        map_set(set, &self.left_map, self.tree.n())
    }

    /// Image of a set of `T2` vertices.
    pub fn map_right(&self, set: &VertexSet) -> VertexSet {
        map_set(set, &self.right_map, self.tree.n())
    }
}

fn map_set(set: &VertexSet, map: &[VertexId], universe: usize) -> VertexSet {
    VertexSet::from_members(universe, set.iter().map(|v| map[v]))
}

pub fn vertex_bond(t1: &Tree, v1: VertexId, t2: &Tree, v2: VertexId) -> Result<BondResult> {
    let (n1, n2) = (t1.n(), t2.n());
    if v1 >= n1 {
        return Err(Error::OutOfRange { vertex: v1, n: n1 });
    }
    if v2 >= n2 {
        return Err(Error::OutOfRange { vertex: v2, n: n2 });
    }
    let left_map: Vec<_> = (0..n1).collect();
    let right_map: Vec<_> = (0..n2)
        .map(|w| match w.cmp(&v2) {
            std::cmp::Ordering::Less => n1 + w,
            std::cmp::Ordering::Equal => v1,
            std::cmp::Ordering::Greater => n1 + w - 1,
        })
        .collect();
    let mut edges = t1.edges().to_vec();
    edges.extend(t2.edges().iter().map(|&(a, b)| (right_map[a], right_map[b])));
    let tree = Tree::from_edges(n1 + n2 - 1, &edges)?;
    Ok(BondResult { tree, bond_vertex: v1, left_map, right_map })
}

/// Which bonding law a bond breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BondLaw {
    /// With the bond vertex in the core, `alpha(T) = alpha(T1) + alpha(T2) - 1`.
    AlphaSum,
    /// The bond vertex is in `core(T)` iff it is in the core of both factors.
    CoreMembership,
    /// With the bond vertex in the core, `core(T)` is the union of the
    /// factor cores.
    CoreUnion,
}

/// Checks the three bonding laws for `T1 * v * T2`; `None` when all hold.
pub fn bond_law_violation(t1: &Tree, v1: VertexId, t2: &Tree, v2: VertexId) -> Result<Option<BondLaw>> {
    let bond = vertex_bond(t1, v1, t2, v2)?;
    let (core1, core2) = (independence::core(t1), independence::core(t2));
    let core = independence::core(&bond.tree);
    let in_core = core.contains(bond.bond_vertex);
    if in_core != (core1.contains(v1) && core2.contains(v2)) {
        return Ok(Some(BondLaw::CoreMembership));
    }
    if in_core {
        if independence::alpha(&bond.tree) + 1 != independence::alpha(t1) + independence::alpha(t2) {
            return Ok(Some(BondLaw::AlphaSum));
        }
        if core != bond.map_left(&core1).union(&bond.map_right(&core2)) {
            return Ok(Some(BondLaw::CoreUnion));
        }
    }
    Ok(None)
}

/// A tree cut at a vertex into two bonded factors.
#[derive(Debug, Clone)]
pub struct Split {
    pub left: Tree,
    /// Left-factor label to original label.
    pub left_labels: Vec<VertexId>,
    pub left_vertex: VertexId,
    pub right: Tree,
    pub right_labels: Vec<VertexId>,
    pub right_vertex: VertexId,
}

/// Writes `tree = left * v * right`, where `left` holds `v` together with the
/// branches at the neighbors in `side`, and `right` holds `v` with the rest.
/// `side` must be a non-empty proper subset of `N(v)`.
pub fn split_at(tree: &Tree, v: VertexId, side: &VertexSet) -> Result<Split> {
    let n = tree.n();
    if v >= n {
        return Err(Error::OutOfRange { vertex: v, n });
    }
    let neighbors = VertexSet::from_members(n, tree.neighbors(v).iter().copied());
    if side.is_empty() || !side.is_subset(&neighbors) || side.len() == neighbors.len() {
        return Err(Error::NotATree(format!(
            "split side must be a non-empty proper subset of the neighbors of {v}"
        )));
    }
    let forest = tree.delete_vertices(&VertexSet::from_members(n, [v]))?;
    let mut left_part = VertexSet::from_members(n, [v]);
    let mut right_part = left_part.clone();
    for component in &forest.components {
        if component.vertices.is_disjoint(side) {
            right_part = right_part.union(&component.vertices);
        } else {
            left_part = left_part.union(&component.vertices);
        }
    }
    let (left, left_labels) = tree.induced_subtree(&left_part)?;
    let (right, right_labels) = tree.induced_subtree(&right_part)?;
    let left_vertex = left_labels.iter().position(|&x| x == v).expect("v kept");
    let right_vertex = right_labels.iter().position(|&x| x == v).expect("v kept");
    Ok(Split { left, left_labels, left_vertex, right, right_labels, right_vertex })
}

/// Hub `0` joined to `x_1..x_k`, and each `x_i` to the leaf `x_{i+k}`;
/// `x_i` has label `i`.
pub fn spider(k: usize) -> Result<Tree> {
    if k == 0 {
        return Err(Error::TooSmall(1));
    }
    let mut edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    edges.extend((1..=k).map(|i| (i, i + k)));
    Tree::from_edges(2 * k + 1, &edges)
}
