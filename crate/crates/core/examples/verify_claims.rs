// Run the whole claim registry over every labeled tree with at most seven
// vertices and print one verdict line per claim.

use stablecore::harness::{run_suite, ClaimId, CorpusSpec, RunOptions};

fn main() {
    let corpus = CorpusSpec::exhaustive(2, 7);
    let verdicts = run_suite(&ClaimId::ALL, &corpus, RunOptions::default()).unwrap();
    for v in &verdicts {
        let kind = if v.claim.is_asserted() { "" } else { "  (report only)" };
        println!(
            "{:<5} checked {:>6}  held {:>6}  refuted {:>5}  skipped {:>6}{kind}",
            v.claim.as_str(),
            v.checked,
            v.held,
            v.refuted,
            v.skipped
        );
    }
    let c12b = verdicts.iter().find(|v| v.claim == ClaimId::C12b).unwrap();
    if let Some(first) = c12b.witnesses.first() {
        println!("\nfirst C12b witness:\n{}{}", first.tree, serde_json::to_string(&first.witness).unwrap());
    }
}
