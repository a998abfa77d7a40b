//! Trees, vertex sets, generation, enumeration and canonical forms.

mod canonical;
mod edge_list;
mod prufer;
mod tree;
mod vertex_set;

pub use canonical::{canonical_form, centers, rooted_encoding, CanonicalForm};
pub use edge_list::{parse_edge_list, read_edge_list};
pub use prufer::{
    cayley_count, code_at, enumerate_labeled_trees, enumerate_labeled_trees_with_ceiling,
    prufer_decode, prufer_encode, random_code, random_tree, LabeledTrees, PruferCode,
    DEFAULT_ENUMERATION_CEILING,
};
pub use tree::{Bipartition, Component, Forest, Rooting, Tree, VertexId, NO_PARENT};
pub use vertex_set::VertexSet;
