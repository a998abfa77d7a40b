// Analyze a tree read from an edge-list file, or the path on five vertices.
//
//     cargo run --example analyze_tree -- tree.txt

use stablecore::graph::parse_edge_list;
use stablecore::independence::{analyze, enumerate_maximum_stable_sets};

const P5: &str = "# path on five vertices\n5\n0 1\n1 2\n2 3\n3 4\n";

fn main() {
    let text = match std::env::args().nth(1).filter(|p| std::path::Path::new(p).is_file()) {
        Some(path) => std::fs::read_to_string(&path).expect("readable file"),
        None => P5.to_string(),
    };
    let tree = parse_edge_list(&text).expect("valid edge list");
    let report = analyze(&tree);

    println!("n = {}, alpha = {}, mu = {}, xi = {}", report.n, report.alpha, report.mu, report.xi);
    println!("core      {}", report.core);
    println!("pendants  {}", report.pendants);
    println!("core ∩ pend  {}", report.core_pendants());
    println!("sides     {} | {}", report.bipartition.a, report.bipartition.b);
    println!("|Ω| = {}", report.num_maximum_stable_sets);
    if let Ok(sets) = enumerate_maximum_stable_sets(&tree, 8) {
        for s in sets {
            println!("  {s}");
        }
    }
    println!("{}", serde_json::to_string(&report).unwrap());
}
