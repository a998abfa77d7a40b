use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use super::dp::{alpha, core, count_maximum_stable_sets, mu};
use super::pendant::is_strong_unique_independent;
use crate::graph::{Bipartition, Tree, VertexSet};

/// Stability structure of one tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub alpha: usize,
    pub mu: usize,
    pub xi: usize,
    pub core: VertexSet,
    pub pendants: VertexSet,
    pub bipartition: Bipartition,
    #[serde(rename = "perfect_matching")]
    pub has_perfect_matching: bool,
    pub strong_unique: bool,
    /// Written as a JSON number when it fits in 64 bits, else as a decimal string.
    #[serde(serialize_with = "serialize_count")]
    pub num_maximum_stable_sets: BigUint,
}

impl AnalysisReport {
    pub fn core_pendants(&self) -> VertexSet {
        self.core.intersection(&self.pendants)
    }
}

pub fn analyze(tree: &Tree) -> AnalysisReport {
    let alpha = alpha(tree);
    let mu = mu(tree);
    let core = core(tree);
    AnalysisReport {
        n: tree.n(),
        alpha,
        mu,
        xi: core.len(),
        core,
        pendants: tree.pendant_vertices(),
        bipartition: tree.bipartition(),
        has_perfect_matching: 2 * mu == tree.n(),
        strong_unique: is_strong_unique_independent(tree),
        num_maximum_stable_sets: count_maximum_stable_sets(tree),
    }
}

pub(crate) fn serialize_count<S: Serializer>(count: &BigUint, serializer: S) -> Result<S::Ok, S::Error> {
    match u64::try_from(count) {
        Ok(small) => serializer.serialize_u64(small),
        Err(_) => serializer.serialize_str(&count.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p4_report() {
        let r = analyze(&Tree::path(4).unwrap());
        assert_eq!((r.alpha, r.mu, r.xi), (2, 2, 0));
        assert!(r.has_perfect_matching);
        assert!(!r.strong_unique);
        assert_eq!(r.num_maximum_stable_sets, BigUint::from(3u32));
    }

    #[test]
    fn p5_report() {
        let r = analyze(&Tree::path(5).unwrap());
        assert_eq!((r.alpha, r.mu, r.xi), (3, 2, 3));
        assert_eq!(r.core.to_vec(), vec![0, 2, 4]);
        assert!(r.strong_unique);
        assert_eq!(r.core_pendants().to_vec(), vec![0, 4]);
    }

    #[test]
    fn json_shape() {
        let r = analyze(&Tree::path(3).unwrap());
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"n":3,"alpha":2,"mu":1,"xi":2,"core":[0,2],"pendants":[0,2],"bipartition":{"a":[0,2],"b":[1]},"perfect_matching":false,"strong_unique":true,"num_maximum_stable_sets":1}"#
        );
    }
}
