// The path on five vertices has exactly two core pendants, and they are at
// distance four. Confirmed by the DP and by brute force over all subsets.

use stablecore::graph::Tree;
use stablecore::harness::{check_tree, ClaimId};
use stablecore::independence::{analyze, brute_force_stability, SmallGraph};

fn main() {
    let p5 = Tree::path(5).unwrap();
    let report = analyze(&p5);
    let oracle = brute_force_stability(&SmallGraph::from_tree(&p5).unwrap()).unwrap();
    println!("DP:     alpha {} core {}", report.alpha, report.core);
    println!("oracle: alpha {} core {} |Ω| = {}", oracle.alpha, oracle.core, oracle.count);
    println!("core ∩ pend = {}, distance {}", report.core_pendants(), p5.distance(0, 4).unwrap());

    for claim in [ClaimId::C10, ClaimId::C12a, ClaimId::C12b] {
        let r = check_tree(claim, &p5).unwrap();
        println!("{claim}: {}", serde_json::to_string(&r).unwrap());
    }
}
