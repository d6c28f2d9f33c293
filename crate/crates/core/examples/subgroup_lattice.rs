// Enumerate the subgroup lattice of A4 and walk its Hasse diagram.
//
//     cargo run --example subgroup_lattice [-- --dot]

use std::sync::Arc;

use maxchain::constructors::{named_group, NamedKind};
use maxchain::group::DEFAULT_CAP;
use maxchain::lattice::Lattice;

fn main() {
    let g = Arc::new(named_group(NamedKind::Alternating, 4, DEFAULT_CAP).unwrap());
    let l = Lattice::enumerate(g.clone()).unwrap();

    if std::env::args().any(|a| a == "--dot") {
        print!("{}", l.to_dot());
        return;
    }

    println!("{}: {} subgroups, {} Hasse edges", g.label(), l.len(), l.edge_count());
    for x in 0..l.len() {
        let covers: Vec<_> = l.covers(x).iter().map(|&y| format!("{y}:|{}|", l.order(y))).collect();
        let info = l.subgroup_query(x);
        println!(
            "  {x:>2} order {:>2} normal {:<5} conjugates {} covered by {}",
            l.order(x),
            info.is_normal,
            info.orbit.len(),
            covers.join(" ")
        );
    }
    let classes = l.conjugacy_classes();
    println!("{} conjugacy classes of subgroups", classes.len());
    let (a, b) = (l.nodes_of_order(3)[0], l.nodes_of_order(2)[0]);
    println!("join of node {a} and node {b} has order {}", l.order(l.join(a, b)));
}
