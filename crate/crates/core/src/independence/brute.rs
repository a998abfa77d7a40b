//! Exhaustive subset scan on small arbitrary graphs. This is the reference
//! every tree routine is checked against, so it shares no code with them.

use crate::error::{Error, Result};
use crate::graph::{Tree, VertexSet};

pub const BRUTE_FORCE_CEILING: usize = 30;

/// Simple undirected graph on at most 30 vertices with bitmask adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallGraph {
    n: usize,
    adjacency: Vec<u32>,
}

impl SmallGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > BRUTE_FORCE_CEILING {
            return Err(Error::TooLarge { n, ceiling: BRUTE_FORCE_CEILING });
        }
        let mut adjacency = vec![0u32; n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::OutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::NotStable(u, v));
            }
            adjacency[u] |= 1 << v;
            adjacency[v] |= 1 << u;
        }
        Ok(Self { n, adjacency })
    }

    pub fn from_tree(tree: &Tree) -> Result<Self> {
        Self::new(tree.n(), tree.edges())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones() as usize
    }

    pub fn neighbors_mask(&self, v: usize) -> u32 {
        self.adjacency[v]
    }

    pub fn pendant_vertices(&self) -> VertexSet {
        VertexSet::from_members(self.n, (0..self.n).filter(|&v| self.degree(v) == 1))
    }

    pub fn is_stable_mask(&self, mask: u32) -> bool {
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.adjacency[v] & mask != 0 {
                return false;
            }
        }
        true
    }

    /// Every maximum stable set as a bitmask, ascending.
    pub fn maximum_stable_masks(&self) -> Vec<u32> {
        let mut best = 0;
        let mut found = Vec::new();
        for mask in 0..self.subset_count() {
            let mask = mask as u32;
            let size = mask.count_ones();
            if size < best || !self.is_stable_mask(mask) {
                continue;
            }
            if size > best {
                best = size;
                found.clear();
            }
            found.push(mask);
        }
        found
    }

    fn subset_count(&self) -> u64 {
        1u64 << self.n
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForceStability {
    pub alpha: usize,
    pub count: u64,
    pub core: VertexSet,
    /// The maximum stable set with the smallest bitmask.
    pub witness: VertexSet,
}

/// Scans all `2^n` subsets.
pub fn brute_force_stability(graph: &SmallGraph) -> Result<BruteForceStability> {
    if graph.n > BRUTE_FORCE_CEILING {
        return Err(Error::TooLarge { n: graph.n, ceiling: BRUTE_FORCE_CEILING });
    }
    let mut alpha = 0u32;
    let mut count = 0u64;
    let mut core = u32::MAX;
    let mut witness = 0u32;
    for mask in 0..graph.subset_count() {
        let mask = mask as u32;
        let size = mask.count_ones();
        if size < alpha || !graph.is_stable_mask(mask) {
            continue;
        }
        if size > alpha {
            alpha = size;
            count = 0;
            core = u32::MAX;
            witness = mask;
        }
        count += 1;
        core &= mask;
    }
    Ok(BruteForceStability {
        alpha: alpha as usize,
        count,
        core: VertexSet::from_mask(graph.n, core as u64),
        witness: VertexSet::from_mask(graph.n, witness as u64),
    })
}
