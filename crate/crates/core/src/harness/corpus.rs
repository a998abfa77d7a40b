use std::collections::HashSet;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    canonical_form, cayley_count, code_at, prufer_decode, random_tree, Tree,
    DEFAULT_ENUMERATION_CEILING,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CorpusMode {
    Exhaustive,
    Random,
}

/// A reproducible population of trees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusSpec {
    pub mode: CorpusMode,
    pub n_min: usize,
    pub n_max: usize,
    /// Trees drawn per order in random mode.
    pub sample_size: usize,
    pub seed: u64,
    pub dedup_isomorphism: bool,
}

impl CorpusSpec {
    pub fn exhaustive(n_min: usize, n_max: usize) -> Self {
        Self {
            mode: CorpusMode::Exhaustive,
            n_min,
            n_max,
            sample_size: 0,
            seed: 0,
            dedup_isomorphism: false,
        }
    }

    pub fn random(n_min: usize, n_max: usize, sample_size: usize, seed: u64) -> Self {
        Self {
            mode: CorpusMode::Random,
            n_min,
            n_max,
            sample_size,
            seed,
            dedup_isomorphism: false,
        }
    }

    pub fn with_dedup(mut self, dedup: bool) -> Self {
        self.dedup_isomorphism = dedup;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_min < 2 {
            return Err(Error::InvalidCorpus(format!("n_min = {} is below 2", self.n_min)));
        }
        if self.n_min > self.n_max {
            return Err(Error::InvalidCorpus(format!(
                "n_min = {} exceeds n_max = {}",
                self.n_min, self.n_max
            )));
        }
        if self.mode == CorpusMode::Exhaustive && self.n_max > DEFAULT_ENUMERATION_CEILING {
            return Err(Error::InvalidCorpus(format!(
                "exhaustive enumeration stops at n = {DEFAULT_ENUMERATION_CEILING}, got n_max = {}",
                self.n_max
            )));
        }
        Ok(())
    }

    /// Lists the corpus members in a fixed order without building the trees.
    pub fn materialize(&self) -> Result<Corpus> {
        self.validate()?;
        let mut entries = Vec::new();
        match self.mode {
            CorpusMode::Exhaustive => {
                for n in self.n_min..=self.n_max {
                    entries.extend((0..cayley_count(n)).map(|rank| Entry { n, source: Source::Rank(rank) }));
                }
            }
            CorpusMode::Random => {
                // one master stream hands each tree its own seed
                let mut master = ChaCha8Rng::seed_from_u64(self.seed);
                for n in self.n_min..=self.n_max {
                    for _ in 0..self.sample_size {
                        entries.push(Entry { n, source: Source::Seed(master.next_u64()) });
                    }
                }
            }
        }
        if self.dedup_isomorphism {
            let mut seen = HashSet::new();
            entries.retain(|e| seen.insert((e.n, canonical_form(&e.build()))));
        }
        Ok(Corpus { entries })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Source {
    Rank(u64),
    Seed(u64),
}

/// One corpus member: enough to rebuild the tree on demand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Entry {
    pub n: usize,
    source: Source,
}

impl Entry {
    pub fn build(&self) -> Tree {
        match self.source {
            Source::Rank(rank) => prufer_decode(&code_at(self.n, rank), self.n),
            Source::Seed(seed) => random_tree(self.n, seed),
        }
        .expect("corpus entries always describe valid trees")
    }
}

#[derive(Debug, Clone)]
pub struct Corpus {
    pub entries: Vec<Entry>,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn trees(&self) -> impl Iterator<Item = Tree> + '_ {
        self.entries.iter().map(Entry::build)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_sizes() {
        let corpus = CorpusSpec::exhaustive(2, 6).materialize().unwrap();
        assert_eq!(corpus.len(), 1 + 3 + 16 + 125 + 1296);
        let deduped = CorpusSpec::exhaustive(2, 8).with_dedup(true).materialize().unwrap();
        assert_eq!(deduped.len(), 1 + 1 + 2 + 3 + 6 + 11 + 23);
    }

    #[test]
    fn random_corpus_is_reproducible() {
        let spec = CorpusSpec::random(5, 7, 10, 42);
        let a: Vec<_> = spec.materialize().unwrap().trees().collect();
        let b: Vec<_> = spec.materialize().unwrap().trees().collect();
        assert_eq!(a.len(), 30);
        assert_eq!(a, b);
        assert!(a[..10].iter().all(|t| t.n() == 5));
    }

    #[test]
    fn validation() {
        assert!(CorpusSpec::exhaustive(1, 4).validate().is_err());
        assert!(CorpusSpec::exhaustive(5, 4).validate().is_err());
        assert!(CorpusSpec::exhaustive(2, 20).validate().is_err());
        assert!(CorpusSpec::random(2, 20, 5, 0).validate().is_ok());
    }
}
