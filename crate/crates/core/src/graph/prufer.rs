//! Prüfer codes: the bijection between labeled trees on `n` vertices and
//! sequences of length `n - 2` over `0..n`, plus the enumeration and seeded
//! sampling built on it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Tree, VertexId};
use crate::error::{Error, Result};

/// Largest order `enumerate_labeled_trees` accepts unless told otherwise.
pub const DEFAULT_ENUMERATION_CEILING: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PruferCode(pub Vec<VertexId>);

impl PruferCode {
    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Decodes a code of length `n - 2` into its labeled tree in linear time.
pub fn prufer_decode(code: &PruferCode, n: usize) -> Result<Tree> {
    if n < 2 {
        return Err(Error::TooSmall(n));
    }
    if code.len() != n - 2 {
        return Err(Error::NotATree(format!(
            "code of length {} cannot describe a tree on {n} vertices",
            code.len()
        )));
    }
    if let Some(&bad) = code.0.iter().find(|&&v| v >= n) {
        return Err(Error::OutOfRange { vertex: bad, n });
    }
    let mut degree = vec![1usize; n];
    for &v in &code.0 {
        degree[v] += 1;
    }
    let mut ptr = degree.iter().position(|&d| d == 1).expect("some label is absent");
    let mut leaf = ptr;
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &code.0 {
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Tree::from_edges(n, &edges)
}

/// Encodes a labeled tree as its Prüfer code.
pub fn prufer_encode(tree: &Tree) -> PruferCode {
    let n = tree.n();
    let parent = tree.rooted(n - 1).parent;
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut ptr = degree.iter().position(|&d| d == 1).expect("trees have leaves");
    let mut leaf = ptr;
    let mut code = Vec::with_capacity(n.saturating_sub(2));
    for _ in 0..n.saturating_sub(2) {
        let next = parent[leaf];
        code.push(next);
        degree[next] -= 1;
        if degree[next] == 1 && next < ptr {
            leaf = next;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    PruferCode(code)
}

/// Uniform random labeled tree: a uniform Prüfer code drawn from a ChaCha8
/// stream seeded with `seed`, then decoded.
pub fn random_tree(n: usize, seed: u64) -> Result<Tree> {
    if n < 2 {
        return Err(Error::TooSmall(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    prufer_decode(&random_code(n, &mut rng), n)
}

pub fn random_code<R: Rng>(n: usize, rng: &mut R) -> PruferCode {
    PruferCode((0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect())
}

/// The code with the given rank among the `n^(n-2)` codes ordered
/// lexicographically.
pub fn code_at(n: usize, mut rank: u64) -> PruferCode {
    let len = n.saturating_sub(2);
    let mut code = vec![0; len];
    for slot in code.iter_mut().rev() {
        *slot = (rank % n as u64) as usize;
        rank /= n as u64;
    }
    PruferCode(code)
}

/// `n^(n-2)`, the number of labeled trees on `n` vertices.
pub fn cayley_count(n: usize) -> u64 {
    (n as u64).pow(n.saturating_sub(2) as u32)
}

/// Every labeled tree on `n` vertices, in lexicographic order of Prüfer codes.
pub fn enumerate_labeled_trees(n: usize) -> Result<LabeledTrees> {
    enumerate_labeled_trees_with_ceiling(n, DEFAULT_ENUMERATION_CEILING)
}

pub fn enumerate_labeled_trees_with_ceiling(n: usize, ceiling: usize) -> Result<LabeledTrees> {
    if n < 2 {
        return Err(Error::TooSmall(n));
    }
    if n > ceiling {
        return Err(Error::TooLarge { n, ceiling });
    }
    Ok(LabeledTrees::range(n, 0, cayley_count(n)))
}

/// A contiguous range of code ranks, decoded lazily. Disjoint ranges can be
/// consumed independently.
#[derive(Debug, Clone)]
pub struct LabeledTrees {
    n: usize,
    next: u64,
    end: u64,
}

impl LabeledTrees {
    pub fn range(n: usize, start: u64, end: u64) -> Self {
        Self { n, next: start, end: end.min(cayley_count(n)) }
    }
}

impl Iterator for LabeledTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if self.next >= self.end {
            return None;
        }
        let code = code_at(self.n, self.next);
        self.next += 1;
        Some(prufer_decode(&code, self.n).expect("every code decodes"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledTrees {}
