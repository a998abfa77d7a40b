// Runs every example so they keep compiling and working.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                main();
            }
        }
    };
}

example!(analyze_tree);
example!(bond_trees);
example!(export_dot);
example!(extend_pendants);
example!(generate_corpus);
example!(open_problem);
example!(p5_discrepancy);
example!(verify_claims);
