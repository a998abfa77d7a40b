//! Claim registry, corpora and the parallel verification runner.

mod claims;
mod corpus;
mod runner;
mod survey;

pub use claims::{
    check_tree, check_tree_with, ClaimId, ClaimResult, ClaimStatus, TreeFacts, Witness,
    DEFAULT_SCAN_CEILING,
};
pub use corpus::{Corpus, CorpusMode, CorpusSpec, Entry};
pub use runner::{run_claim, run_suite, survey_open_problem, RunOptions, Verdict, DEFAULT_WITNESS_LIMIT};
pub use survey::{measure_open_problem, OpenProblemRecord, SizeMeasurement, SizeRule};

/// Reference graphs with hand-checked properties.
pub mod fixtures {
    use crate::graph::Tree;
    use crate::independence::SmallGraph;

    /// Seven vertices, not a tree: α = 3, only vertex 4 is pendant, and
    /// `{1, 3, 6}` is a maximum stable set.
    pub fn fig1() -> SmallGraph {
        SmallGraph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (1, 5), (2, 6), (5, 6)])
            .expect("fixture is valid")
    }

    /// Nine vertices: α = 5, core ∩ pend = {0, 3} at distance 6.
    pub fn fig5() -> Tree {
        Tree::from_edges(9, &[(0, 1), (1, 2), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 6)])
            .expect("fixture is a tree")
    }
}
