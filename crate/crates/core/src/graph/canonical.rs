use serde::Serialize;

use super::{Tree, VertexId, NO_PARENT};

/// AHU parenthesis encoding of a free tree, rooted at its center.
///
/// Bicentral trees take the lexicographically smaller of the two rooted
/// encodings. Two trees share an encoding iff they are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalForm(pub String);

pub fn canonical_form(tree: &Tree) -> CanonicalForm {
    let encoding = centers(tree)
        .into_iter()
        .map(|c| rooted_encoding(tree, c))
        .min()
        .expect("a tree has one or two centers");
    CanonicalForm(encoding)
}

/// One or two centers, found by peeling leaves layer by layer.
pub fn centers(tree: &Tree) -> Vec<VertexId> {
    let n = tree.n();
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut layer: Vec<VertexId> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in tree.neighbors(leaf) {
                if degree[w] > 1 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
            degree[leaf] = 0;
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// AHU encoding of `tree` rooted at `root`: each vertex is `(` followed by
/// its children's encodings in sorted order, then `)`.
pub fn rooted_encoding(tree: &Tree, root: VertexId) -> String {
    let rooting = tree.rooted(root);
    let mut codes: Vec<Option<String>> = vec![None; tree.n()];
    for &v in rooting.order.iter().rev() {
        let mut children: Vec<String> = tree
            .neighbors(v)
            .iter()
            .filter(|&&w| rooting.parent[w] == v)
            .map(|&w| codes[w].take().expect("children are finished first"))
            .collect();
        children.sort_unstable();
        let mut code = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
        code.push('(');
        for c in children {
            code.push_str(&c);
        }
        code.push(')');
        codes[v] = Some(code);
    }
    debug_assert_eq!(rooting.parent[root], NO_PARENT);
    codes[root].take().unwrap()
}
