// Vertex bonding: glue two trees at one vertex each and watch the core.

use stablecore::bonding::{bond_law_violation, spider, split_at, vertex_bond};
use stablecore::graph::{Tree, VertexSet};
use stablecore::independence::{alpha, core};

fn main() {
    let p3 = Tree::path(3).unwrap();
    let p5 = Tree::path(5).unwrap();

    // P5 * P5 at their middle vertices: both in the core
    let b = vertex_bond(&p5, 2, &p5, 2).unwrap();
    println!("P5 * 2 * P5: n = {}, bond vertex {}", b.tree.n(), b.bond_vertex);
    println!("  alpha {} = {} + {} - 1", alpha(&b.tree), alpha(&p5), alpha(&p5));
    println!("  core  {}", core(&b.tree));
    println!("  laws broken: {:?}", bond_law_violation(&p5, 2, &p5, 2).unwrap());

    // the middle of P3 is not in its core, so the bond vertex drops out
    let b = vertex_bond(&p3, 1, &p5, 0).unwrap();
    println!("P3 * 1 * P5: core {}, bond vertex {}", core(&b.tree), b.bond_vertex);

    for k in 1..=4 {
        let s = spider(k).unwrap();
        println!("spider({k}): n = {}, alpha = {}, hub degree {}, core {}", s.n(), alpha(&s), s.degree(0), core(&s));
    }

    // cutting a spider at its hub and gluing it back
    let s = spider(3).unwrap();
    let side = VertexSet::from_members(s.n(), [1]);
    let split = split_at(&s, 0, &side).unwrap();
    let again = vertex_bond(&split.left, split.left_vertex, &split.right, split.right_vertex).unwrap();
    println!("split at hub: {} + {} vertices, rebonded alpha {}", split.left.n(), split.right.n(), alpha(&again.tree));
}
