// Every example must run to completion.

macro_rules! run_example {
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

run_example!(permutations);
run_example!(named_groups);
run_example!(subgroup_lattice);
run_example!(chain_lengths);
run_example!(group_structure);
run_example!(minimal_chain_theorems);
run_example!(spec_language);
run_example!(lattice_cache);
