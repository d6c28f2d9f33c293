// Predicates and distinguished subgroups of a few groups.
//
//     cargo run --release --example group_structure

use std::sync::Arc;

use maxchain::group::DEFAULT_CAP;
use maxchain::lattice::Lattice;
use maxchain::speclang::build_str;
use maxchain::structure::{fingerprint, structure_report, supersolvable_oracle};

fn main() {
    for spec in ["@Q8", "S(4)", "SL2(3)", "GL2(3)", "@order75", "A(5)"] {
        let g = Arc::new(build_str(spec, DEFAULT_CAP).unwrap());
        let l = Lattice::enumerate(g).unwrap();
        let r = structure_report(&l);
        let p = r.predicates;
        println!(
            "{spec:<9} |G| {:>3}  Z {:>2}  G' {:>3}  Phi {:>2}  F {:>2}  abelian {:<5} nilpotent {:<5} supersolvable {:<5} solvable {}",
            r.order, r.center.order, r.derived.order, r.frattini.order, r.fitting.order,
            p.abelian, p.nilpotent, p.supersolvable, p.solvable
        );
        let sylow: Vec<String> = r.sylow.iter().map(|(p, n)| format!("{p}:{}", n.order)).collect();
        println!("          Sylow {}  oracle {:?}", sylow.join(" "), supersolvable_oracle(&l));
    }

    let l = Lattice::enumerate(Arc::new(build_str("GL2(3)", DEFAULT_CAP).unwrap())).unwrap();
    let mut types = std::collections::BTreeMap::new();
    for x in 0..l.len() {
        *types.entry(fingerprint(&l, x)).or_insert(0) += 1;
    }
    println!("GL2(3) has {} subgroup fingerprints:", types.len());
    for (f, count) in types {
        println!("  order {:>2} x{count:<2} element orders {:?}", f.order, f.order_histogram);
    }
}
