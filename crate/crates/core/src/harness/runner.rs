use rayon::prelude::*;
use serde::Serialize;

use super::claims::{check_tree_with, ClaimId, ClaimResult, ClaimStatus, TreeFacts, DEFAULT_SCAN_CEILING};
use super::corpus::CorpusSpec;
use super::survey::{measure_open_problem, OpenProblemRecord};
use crate::error::{Error, Result};

pub const DEFAULT_WITNESS_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    /// Worker threads; `0` lets the pool decide. Never affects results.
    pub jobs: usize,
    pub witness_limit: usize,
    pub scan_ceiling: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self { jobs: 0, witness_limit: DEFAULT_WITNESS_LIMIT, scan_ceiling: DEFAULT_SCAN_CEILING }
    }
}

/// Aggregated outcome of one claim over one corpus.
///
/// `skipped` counts trees where the claim's hypothesis fails as well as
/// trees beyond the stable-set scan ceiling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub claim: ClaimId,
    pub corpus: CorpusSpec,
    pub checked: u64,
    pub held: u64,
    pub refuted: u64,
    pub skipped: u64,
    /// Earliest refutations ordered by `(n, edge list)`.
    pub witnesses: Vec<ClaimResult>,
}

pub fn run_claim(claim: ClaimId, corpus: &CorpusSpec, options: RunOptions) -> Result<Verdict> {
    Ok(run_suite(&[claim], corpus, options)?.remove(0))
}

/// Runs several claims over one materialization of the corpus. Output is
/// identical for every worker count.
pub fn run_suite(claims: &[ClaimId], corpus: &CorpusSpec, options: RunOptions) -> Result<Vec<Verdict>> {
    corpus.validate()?;
    if claims.is_empty() {
        return Ok(Vec::new());
    }
    let members = corpus.materialize()?;
    let tally = with_pool(options.jobs, || {
        members
            .entries
            .par_iter()
            .fold(
                || Tally::new(claims.len()),
                |mut tally, entry| {
                    let tree = entry.build();
                    let facts = TreeFacts::new(&tree);
                    for (slot, &claim) in tally.slots.iter_mut().zip(claims) {
                        match check_tree_with(claim, &facts, options.scan_ceiling) {
                            Ok(result) => slot.record(result, options.witness_limit),
                            Err(Error::ScaleExceeded { .. }) => slot.skipped += 1,
                            Err(e) => {
                                tally.error.get_or_insert(e);
                                break;
                            }
                        }
                    }
                    tally
                },
            )
            .reduce(|| Tally::new(claims.len()), |a, b| a.merge(b, options.witness_limit))
    })?;
    if let Some(e) = tally.error {
        return Err(e);
    }
    Ok(claims
        .iter()
        .zip(tally.slots)
        .map(|(&claim, slot)| slot.into_verdict(claim, corpus.clone(), options.witness_limit))
        .collect())
}

/// E1 measurements for every corpus tree without a perfect matching (and,
/// if asked, for the others too), in corpus order.
pub fn survey_open_problem(
    corpus: &CorpusSpec,
    include_perfect_matchings: bool,
    options: RunOptions,
) -> Result<Vec<OpenProblemRecord>> {
    let members = corpus.materialize()?;
    let records: Vec<Option<OpenProblemRecord>> = with_pool(options.jobs, || {
        members
            .entries
            .par_iter()
            .map(|entry| {
                let record = measure_open_problem(&entry.build())?;
                Ok((include_perfect_matchings || !record.perfect_matching).then_some(record))
            })
            .collect::<Result<_>>()
    })??;
    Ok(records.into_iter().flatten().collect())
}

fn with_pool<T: Send>(jobs: usize, work: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidCorpus(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(work))
}

type Keyed = ((usize, String, String), ClaimResult);

#[derive(Default)]
struct Slot {
    held: u64,
    refuted: u64,
    skipped: u64,
    witnesses: Vec<Keyed>,
}

impl Slot {
    fn record(&mut self, result: ClaimResult, limit: usize) {
        match result.status {
            ClaimStatus::Holds => self.held += 1,
            ClaimStatus::NotApplicable => self.skipped += 1,
            ClaimStatus::Refuted => {
                self.refuted += 1;
                let n = result.tree.lines().next().and_then(|l| l.parse().ok()).unwrap_or(0);
                let witness = serde_json::to_string(&result.witness).expect("witnesses serialize");
                self.witnesses.push(((n, result.tree.clone(), witness), result));
                if self.witnesses.len() > limit.max(1).saturating_mul(2) {
                    self.trim(limit);
                }
            }
        }
    }

    fn trim(&mut self, limit: usize) {
        self.witnesses.sort_by(|a, b| a.0.cmp(&b.0));
        self.witnesses.dedup_by(|a, b| a.0 == b.0);
        self.witnesses.truncate(limit);
    }

    fn merge(mut self, other: Slot, limit: usize) -> Slot {
        self.held += other.held;
        self.refuted += other.refuted;
        self.skipped += other.skipped;
        self.witnesses.extend(other.witnesses);
        self.trim(limit);
        self
    }

    fn into_verdict(mut self, claim: ClaimId, corpus: CorpusSpec, limit: usize) -> Verdict {
        self.trim(limit);
        Verdict {
            claim,
            corpus,
            checked: self.held + self.refuted + self.skipped,
            held: self.held,
            refuted: self.refuted,
            skipped: self.skipped,
            witnesses: self.witnesses.into_iter().map(|(_, r)| r).collect(),
        }
    }
}

struct Tally {
    slots: Vec<Slot>,
    error: Option<Error>,
}

impl Tally {
    fn new(claims: usize) -> Self {
        Self { slots: (0..claims).map(|_| Slot::default()).collect(), error: None }
    }

    fn merge(self, other: Tally, limit: usize) -> Tally {
        Tally {
            slots: self.slots.into_iter().zip(other.slots).map(|(a, b)| a.merge(b, limit)).collect(),
            error: self.error.or(other.error),
        }
    }
}
