// Lengths of maximal chains to the whole group, and the count of subgroups
// whose chains disagree.
//
//     cargo run --release --example chain_lengths

use std::sync::Arc;

use maxchain::chains::{chain_length_set, delta, enumerate_chains, DEFAULT_CHAIN_CAP};
use maxchain::constructors::{named_group, NamedKind};
use maxchain::group::DEFAULT_CAP;
use maxchain::lattice::Lattice;

fn main() {
    let a4 = Lattice::enumerate(Arc::new(named_group(NamedKind::Alternating, 4, DEFAULT_CAP).unwrap())).unwrap();
    let r = chain_length_set(&a4, a4.trivial()).unwrap();
    let orders = |c: &[usize]| c.iter().map(|&x| a4.order(x).to_string()).collect::<Vec<_>>().join(" < ");
    println!("A4, trivial subgroup: lengths {:?}", r.lengths);
    println!("  shortest {}", orders(&r.witness_short));
    println!("  longest  {}", orders(&r.witness_long));
    for chain in enumerate_chains(&a4, a4.trivial(), DEFAULT_CHAIN_CAP).unwrap() {
        println!("  chain {}", orders(&chain));
    }

    for (kind, n) in [
        (NamedKind::Alternating, 4),
        (NamedKind::Symmetric, 4),
        (NamedKind::Alternating, 5),
        (NamedKind::Symmetric, 5),
        (NamedKind::Dihedral, 6),
    ] {
        let l = Lattice::enumerate(Arc::new(named_group(kind, n, DEFAULT_CAP).unwrap())).unwrap();
        let d = delta(&l);
        println!("delta({}) = {:>3}  by order {:?}", l.group().label(), d.value, d.by_order(&l));
    }
}
