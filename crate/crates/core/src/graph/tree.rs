use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use super::VertexSet;
use crate::error::{Error, Result};

/// Vertices are 0-based contiguous indices into the owning tree.
pub type VertexId = usize;

/// A validated tree on vertices `0..n` with `n >= 2`.
///
/// Adjacency is stored in compressed rows with every neighbor list sorted;
/// the edge list holds each edge once as `(u, v)` with `u < v`, sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    offsets: Vec<usize>,
    neighbors: Vec<VertexId>,
    edges: Vec<(VertexId, VertexId)>,
}

/// The two color classes of a tree. `a` always holds vertex 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl Bipartition {
    pub fn smaller_side_len(&self) -> usize {
        self.a.len().min(self.b.len())
    }

    pub fn same_side(&self, u: VertexId, v: VertexId) -> bool {
        self.a.contains(u) == self.a.contains(v)
    }
}

/// Breadth-first rooting of a tree: visit order plus parent pointers.
#[derive(Debug, Clone)]
pub struct Rooting {
    pub root: VertexId,
    pub order: Vec<VertexId>,
    /// `parent[root] == usize::MAX`.
    pub parent: Vec<VertexId>,
}

pub const NO_PARENT: usize = usize::MAX;

impl Tree {
    /// Validates an edge list and builds a tree.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooSmall(n));
        }
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::OutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::NotATree(format!("self-loop at {u}")));
            }
        }
        if edges.len() != n - 1 {
            return Err(Error::NotATree(format!(
                "{} edges given, a tree on {n} vertices has {}",
                edges.len(),
                n - 1
            )));
        }
        let mut normalized: Vec<(usize, usize)> =
            edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::NotATree(format!("duplicate edge {} {}", w[0].0, w[0].1)));
        }
        let tree = Self::assemble(n, normalized);
        let reached = tree.rooted(0).order.len();
        if reached != n {
            return Err(Error::NotATree(format!(
                "disconnected: only {reached} of {n} vertices reachable from 0"
            )));
        }
        Ok(tree)
    }

    /// Builds the compressed adjacency from a normalized, sorted edge list.
    fn assemble(n: usize, edges: Vec<(VertexId, VertexId)>) -> Self {
        let mut degree = vec![0usize; n];
        for &(u, v) in &edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut neighbors = vec![0; 2 * edges.len()];
        for &(u, v) in &edges {
            neighbors[fill[u]] = v;
            fill[u] += 1;
            neighbors[fill[v]] = u;
            fill[v] += 1;
        }
        for v in 0..n {
            neighbors[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Self { offsets, neighbors, edges }
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges)
    }

    /// Star with `leaves` leaves centered at vertex 0.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Self::from_edges(leaves + 1, &edges)
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::OutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Vertices of degree exactly one.
    pub fn pendant_vertices(&self) -> VertexSet {
        VertexSet::from_members(self.n(), (0..self.n()).filter(|&v| self.degree(v) == 1))
    }

    /// Breadth-first order and parents from `root`.
    pub fn rooted(&self, root: VertexId) -> Rooting {
        let n = self.n();
        let mut parent = vec![NO_PARENT; n];
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        seen[root] = true;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in self.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    order.push(w);
                }
            }
        }
        Rooting { root, order, parent }
    }

    /// Two-coloring by breadth-first search from vertex 0.
    pub fn bipartition(&self) -> Bipartition {
        let n = self.n();
        let depth = self.distances_from_unchecked(0);
        Bipartition {
            a: VertexSet::from_members(n, (0..n).filter(|&v| depth[v] % 2 == 0)),
            b: VertexSet::from_members(n, (0..n).filter(|&v| depth[v] % 2 == 1)),
        }
    }

    /// Edge-count distance between `u` and `v`.
    pub fn distance(&self, u: VertexId, v: VertexId) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Ok(0);
        }
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::from([u]);
        dist[u] = 0;
        while let Some(x) = queue.pop_front() {
            for &y in self.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    if y == v {
                        return Ok(dist[y]);
                    }
                    queue.push_back(y);
                }
            }
        }
        unreachable!("trees are connected")
    }

    /// Distances from `source` to every vertex.
    pub fn distances_from(&self, source: VertexId) -> Result<Vec<usize>> {
        self.check_vertex(source)?;
        Ok(self.distances_from_unchecked(source))
    }

    fn distances_from_unchecked(&self, source: VertexId) -> Vec<usize> {
        let rooting = self.rooted(source);
        let mut dist = vec![0; self.n()];
        for &v in &rooting.order[1..] {
            dist[v] = dist[rooting.parent[v]] + 1;
        }
        dist
    }

    /// `true` when no two members of `set` are adjacent.
    pub fn is_stable(&self, set: &VertexSet) -> bool {
        self.find_adjacent_pair(set).is_none()
    }

    pub fn find_adjacent_pair(&self, set: &VertexSet) -> Option<(VertexId, VertexId)> {
        self.edges
            .iter()
            .copied()
            .find(|&(u, v)| set.contains(u) && set.contains(v))
    }

    /// Applies a relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[VertexId]) -> Result<Self> {
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Self::from_edges(self.n(), &edges)
    }

    /// The subgraph induced by `keep`, relabeled to `0..k` in increasing
    /// original order. Returns the induced tree and the local-to-original map.
    /// Fails with `NotATree` if the induced subgraph is disconnected or has
    /// fewer than two vertices.
    pub fn induced_subtree(&self, keep: &VertexSet) -> Result<(Self, Vec<VertexId>)> {
        let labels = keep.to_vec();
        let mut local = vec![NO_PARENT; self.n()];
        for (i, &v) in labels.iter().enumerate() {
            local[v] = i;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| keep.contains(u) && keep.contains(v))
            .map(|&(u, v)| (local[u], local[v]))
            .collect();
        Ok((Self::from_edges(labels.len(), &edges)?, labels))
    }

    /// Components of `T - removed`, labels preserved.
    pub fn delete_vertices(&self, removed: &VertexSet) -> Result<Forest> {
        let n = self.n();
        if removed.len() >= n {
            return Err(Error::EmptyResult);
        }
        let mut component = vec![NO_PARENT; n];
        let mut components = Vec::new();
        for start in 0..n {
            if removed.contains(start) || component[start] != NO_PARENT {
                continue;
            }
            let id = components.len();
            let mut members = VertexSet::new(n);
            let mut stack = vec![start];
            component[start] = id;
            while let Some(u) = stack.pop() {
                members.insert(u);
                for &w in self.neighbors(u) {
                    if !removed.contains(w) && component[w] == NO_PARENT {
                        component[w] = id;
                        stack.push(w);
                    }
                }
            }
            components.push(members);
        }
        let components = components
            .into_iter()
            .map(|vertices| {
                if vertices.len() == 1 {
                    Ok(Component { vertices, tree: None })
                } else {
                    let (tree, labels) = self.induced_subtree(&vertices)?;
                    Ok(Component { vertices, tree: Some((tree, labels)) })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Forest { universe: n, components })
    }

    /// Edge-list text: the order on the first line, then one sorted edge per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree(n={}, edges={:?})", self.n(), self.edges)
    }
}

/// One connected piece of a forest. Singletons carry no tree.
#[derive(Debug, Clone)]
pub struct Component {
    /// Members in the labels of the graph the forest was cut from.
    pub vertices: VertexSet,
    /// The component as a standalone tree plus its local-to-original map.
    pub tree: Option<(Tree, Vec<VertexId>)>,
}

impl Component {
    pub fn is_singleton(&self) -> bool {
        self.tree.is_none()
    }
}

/// Disjoint union of trees and isolated vertices.
#[derive(Debug, Clone)]
pub struct Forest {
    pub universe: usize,
    pub components: Vec<Component>,
}

impl Forest {
    pub fn surviving(&self) -> VertexSet {
        self.components
            .iter()
            .fold(VertexSet::new(self.universe), |acc, c| acc.union(&c.vertices))
    }
}
