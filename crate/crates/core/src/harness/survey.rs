//! E1: for a tree without a perfect matching, how many pendant vertices lie
//! in every maximal stable set of size `k`, for `k = n/2` (when `n` is even)
//! and `k = min(|A|, |B|)`?

use serde::Serialize;

use super::claims::ClaimStatus;
use crate::error::Result;
use crate::graph::{Tree, VertexSet};
use crate::independence::for_each_maximal_stable_set;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SizeRule {
    HalfOrder,
    SmallerSide,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeMeasurement {
    pub rule: SizeRule,
    pub k: usize,
    /// Number of maximal stable sets of size `k`.
    pub maximal_sets: u64,
    /// Their intersection; absent when there are none.
    pub intersection: Option<VertexSet>,
    pub pendants_in_intersection: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OpenProblemRecord {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub perfect_matching: bool,
    /// Trees with a perfect matching fall outside the question and are
    /// recorded only for contrast.
    pub beyond_question: bool,
    pub measurements: Vec<SizeMeasurement>,
}

impl OpenProblemRecord {
    /// `Refuted` when some measured intersection holds fewer than two
    /// pendants, `Holds` when every one holds at least two, and
    /// `NotApplicable` for trees outside the question.
    pub fn status(&self) -> ClaimStatus {
        if self.beyond_question {
            return ClaimStatus::NotApplicable;
        }
        let counts: Vec<usize> =
            self.measurements.iter().filter_map(|m| m.pendants_in_intersection).collect();
        if counts.is_empty() {
            ClaimStatus::NotApplicable
        } else if counts.iter().all(|&c| c >= 2) {
            ClaimStatus::Holds
        } else {
            ClaimStatus::Refuted
        }
    }
}

pub fn measure_open_problem(tree: &Tree) -> Result<OpenProblemRecord> {
    let n = tree.n();
    let sides = tree.bipartition();
    let pendants = tree.pendant_vertices();
    let mut rules = Vec::new();
    if n % 2 == 0 {
        rules.push((SizeRule::HalfOrder, n / 2));
    }
    rules.push((SizeRule::SmallerSide, sides.smaller_side_len()));

    let mut tallies: Vec<(u64, u64)> = vec![(0, u64::MAX); rules.len()];
    for_each_maximal_stable_set(tree, |mask| {
        let size = mask.count_ones() as usize;
        for (slot, &(_, k)) in tallies.iter_mut().zip(&rules) {
            if size == k {
                slot.0 += 1;
                slot.1 &= mask;
            }
        }
    })?;

    let measurements = rules
        .iter()
        .zip(tallies)
        .map(|(&(rule, k), (count, meet))| {
            let intersection = (count > 0).then(|| VertexSet::from_mask(n, meet));
            let pendants_in_intersection =
                intersection.as_ref().map(|s| s.intersection(&pendants).len());
            SizeMeasurement { rule, k, maximal_sets: count, intersection, pendants_in_intersection }
        })
        .collect();
    let perfect_matching = 2 * crate::independence::mu(tree) == n;
    Ok(OpenProblemRecord {
        n,
        edges: tree.edges().to_vec(),
        perfect_matching,
        beyond_question: perfect_matching,
        measurements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p3() {
        // maximal stable sets {0,2} and {1}; smaller side {1}
        let r = measure_open_problem(&Tree::path(3).unwrap()).unwrap();
        assert!(!r.perfect_matching);
        assert_eq!(r.measurements.len(), 1);
        let m = &r.measurements[0];
        assert_eq!((m.rule, m.k, m.maximal_sets), (SizeRule::SmallerSide, 1, 1));
        assert_eq!(m.intersection.as_ref().unwrap().to_vec(), vec![1]);
        assert_eq!(m.pendants_in_intersection, Some(0));
        assert_eq!(r.status(), ClaimStatus::Refuted);
    }

    #[test]
    fn p4_is_beyond_the_question() {
        let r = measure_open_problem(&Tree::path(4).unwrap()).unwrap();
        assert!(r.beyond_question);
        assert_eq!(r.status(), ClaimStatus::NotApplicable);
        // half order and smaller side are both 2 here
        assert_eq!(r.measurements.len(), 2);
        assert_eq!(r.measurements[0].maximal_sets, 3);
        assert_eq!(r.measurements[0].intersection.as_ref().unwrap().len(), 0);
    }
}
