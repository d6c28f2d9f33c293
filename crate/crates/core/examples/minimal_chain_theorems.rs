// When all minimal subgroups are graded, a non-supersolvable group splits
// as its Fitting subgroup extended by a maximal complement.
//
//     cargo run --release --example minimal_chain_theorems

use std::sync::Arc;

use maxchain::group::DEFAULT_CAP;
use maxchain::lattice::Lattice;
use maxchain::speclang::build_str;
use maxchain::structure::verify_minimal_chain_theorems;

fn main() {
    for spec in ["A(4)", "@order75", "S(4)", "SL2(3)", "A(5)", "SL2(5)"] {
        let l = Lattice::enumerate(Arc::new(build_str(spec, DEFAULT_CAP).unwrap())).unwrap();
        let v = verify_minimal_chain_theorems(&l);
        println!(
            "{spec:<9} atoms of order 2,3 graded {:<5} all atoms graded {:<5} solvable {:<5} supersolvable {:<5} |F| {:>2} complement {:?}",
            v.hypothesis_23,
            v.hypothesis_all,
            v.solvable,
            v.supersolvable,
            v.fitting.order,
            v.complement.map(|m| m.order)
        );
        for c in &v.clauses {
            println!("    {:<50} {}", c.name, c.holds);
        }
        assert!(v.consistent());
    }
}
