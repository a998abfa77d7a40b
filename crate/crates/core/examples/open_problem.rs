// For trees without a perfect matching: how many pendant vertices lie in
// every maximal stable set of size min(|A|, |B|)?

use std::collections::BTreeMap;

use stablecore::harness::{survey_open_problem, CorpusSpec, RunOptions, SizeRule};

fn main() {
    let corpus = CorpusSpec::exhaustive(2, 8).with_dedup(true);
    let records = survey_open_problem(&corpus, false, RunOptions::default()).unwrap();

    // pendants in the intersection -> number of trees
    let mut histogram: BTreeMap<Option<usize>, usize> = BTreeMap::new();
    for r in &records {
        let m = r.measurements.iter().find(|m| m.rule == SizeRule::SmallerSide).unwrap();
        *histogram.entry(m.pendants_in_intersection).or_default() += 1;
    }
    println!("{} non-isomorphic trees without a perfect matching, n ≤ 8", records.len());
    for (pendants, trees) in histogram {
        match pendants {
            Some(p) => println!("  intersection holds {p} pendant(s): {trees} trees"),
            None => println!("  no maximal stable set of that size: {trees} trees"),
        }
    }
    if let Some(r) = records.iter().find(|r| r.n == 7) {
        println!("{}", serde_json::to_string(r).unwrap());
    }
}
