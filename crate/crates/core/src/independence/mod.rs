//! Stability computations on trees, and the brute-force oracle for small
//! arbitrary graphs.

mod brute;
mod dp;
mod enumerate;
mod pendant;
mod report;

pub use brute::{brute_force_stability, BruteForceStability, SmallGraph, BRUTE_FORCE_CEILING};
pub use dp::{
    alpha, core, core_naive, count_maximum_stable_sets, deletion_alphas, forest_alpha,
    has_perfect_matching, max_stable_set_avoiding, maximum_stable_set, mu,
};
pub use enumerate::{
    enumerate_maximal_stable_sets, enumerate_maximum_stable_sets, for_each_maximal_stable_set,
    for_each_stable_set, MASK_CEILING,
};
pub use pendant::{extend_pendant_set, is_strong_unique_by_definition, is_strong_unique_independent};
pub use report::{analyze, AnalysisReport};
