// Random and exhaustive tree corpora, with and without isomorphism dedup.

use stablecore::graph::{canonical_form, prufer_encode, random_tree};
use stablecore::harness::CorpusSpec;

fn main() {
    for n in 2..=8 {
        let labeled = CorpusSpec::exhaustive(n, n).materialize().unwrap().len();
        let free = CorpusSpec::exhaustive(n, n).with_dedup(true).materialize().unwrap().len();
        println!("n = {n}: {labeled:>6} labeled trees, {free:>2} up to isomorphism");
    }

    // same seed, same tree
    let t = random_tree(12, 7).unwrap();
    assert_eq!(t, random_tree(12, 7).unwrap());
    println!("\nrandom tree (n = 12, seed 7), Prüfer code {:?}", prufer_encode(&t).0);
    print!("{}", t.to_edge_list());
    println!("canonical form {}", canonical_form(&t).0);

    let sample = CorpusSpec::random(30, 30, 5, 1).materialize().unwrap();
    for tree in sample.trees() {
        println!("n = {}, leaves = {}", tree.n(), tree.pendant_vertices().len());
    }
}
