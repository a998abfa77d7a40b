use proptest::prelude::*;
use stablecore::graph::{
    canonical_form, parse_edge_list, prufer_decode, prufer_encode, random_tree, Tree, VertexSet,
};
use stablecore::independence::{
    alpha, core, core_naive, count_maximum_stable_sets, enumerate_maximum_stable_sets,
    extend_pendant_set, maximum_stable_set, mu,
};

fn tree(max_n: usize) -> impl Strategy<Value = Tree> {
    (2..=max_n, any::<u64>()).prop_map(|(n, seed)| random_tree(n, seed).unwrap())
}

fn relabeled(max_n: usize) -> impl Strategy<Value = (Tree, Tree)> {
    tree(max_n).prop_flat_map(|t| {
        let perm: Vec<usize> = (0..t.n()).collect();
        (Just(t), Just(perm).prop_shuffle())
            .prop_map(|(t, perm)| {
                let other = t.relabel(&perm).unwrap();
                (t, other)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_ignores_labels((t, u) in relabeled(40)) {
        prop_assert_eq!(canonical_form(&t), canonical_form(&u));
        prop_assert_eq!(alpha(&t), alpha(&u));
        prop_assert_eq!(core(&t).len(), core(&u).len());
    }

    #[test]
    fn distance_parity_matches_sides(t in tree(50), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let (u, v) = (a.index(t.n()), b.index(t.n()));
        let sides = t.bipartition();
        prop_assert_eq!(t.distance(u, v).unwrap() % 2 == 0, sides.same_side(u, v));
    }

    #[test]
    fn pendant_extension(t in tree(60), bits in any::<u64>()) {
        let pendants = t.pendant_vertices();
        let chosen = VertexSet::from_members(
            t.n(),
            pendants.iter().enumerate().filter(|(i, _)| bits >> (i % 64) & 1 == 1).map(|(_, v)| v),
        );
        match extend_pendant_set(&t, &chosen) {
            Ok(s) => {
                prop_assert!(chosen.is_subset(&s));
                prop_assert!(t.is_stable(&s));
                prop_assert_eq!(s.len(), alpha(&t));
            }
            // only P2 has adjacent pendants
            Err(_) => prop_assert_eq!(t.n(), 2),
        }
    }

    #[test]
    fn dp_invariants(t in tree(120)) {
        let a = alpha(&t);
        prop_assert_eq!(a + mu(&t), t.n());
        let s = maximum_stable_set(&t);
        prop_assert!(t.is_stable(&s));
        prop_assert_eq!(s.len(), a);
        prop_assert!(core(&t).is_subset(&s));
        prop_assert_eq!(core(&t), core_naive(&t));
        prop_assert!(2 * a >= t.n());
    }

    #[test]
    fn enumeration_matches_count(t in tree(16)) {
        let sets = enumerate_maximum_stable_sets(&t, 1 << 16).unwrap();
        prop_assert_eq!(count_maximum_stable_sets(&t), sets.len().into());
        prop_assert!(sets.windows(2).all(|w| w[0] < w[1]));
        let meet = sets.iter().skip(1).fold(sets[0].clone(), |m, s| m.intersection(s));
        prop_assert_eq!(meet, core(&t));
    }

    #[test]
    fn serialization_round_trips(t in tree(80)) {
        prop_assert_eq!(&parse_edge_list(&t.to_edge_list()).unwrap(), &t);
        prop_assert_eq!(&prufer_decode(&prufer_encode(&t), t.n()).unwrap(), &t);
    }
}
