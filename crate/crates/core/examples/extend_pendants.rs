// Every stable set of pendant vertices sits inside some maximum stable set.

use stablecore::graph::{random_tree, VertexSet};
use stablecore::independence::{alpha, extend_pendant_set, maximum_stable_set};

fn main() {
    let tree = random_tree(15, 3).unwrap();
    let pendants = tree.pendant_vertices();
    print!("{}", tree.to_edge_list());
    println!("pendants {pendants}, alpha {}", alpha(&tree));

    // a maximum stable set that happens to skip some pendants
    let start = maximum_stable_set(&tree);
    println!("DP choice      {start}");
    let extended = extend_pendant_set(&tree, &pendants).unwrap();
    assert!(pendants.is_subset(&extended) && extended.len() == alpha(&tree));
    println!("with pendants  {extended}");

    let one = VertexSet::from_members(tree.n(), pendants.iter().take(1));
    println!("from {one}: {}", extend_pendant_set(&tree, &one).unwrap());
}
