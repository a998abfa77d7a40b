// DOT rendering of a tree: core vertices filled, pendants double-circled.
//
//     cargo run --example export_dot | dot -Tsvg > fig5.svg

use stablecore::cli::export_dot;
use stablecore::harness::fixtures;
use stablecore::independence::analyze;

fn main() {
    let tree = fixtures::fig5();
    let report = analyze(&tree);
    print!("{}", export_dot(&tree, &report));
}
