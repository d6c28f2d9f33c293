// The built-in group families, products, a semidirect product and a quotient.
//
//     cargo run --example named_groups

use maxchain::constructors::{
    direct_product, linear_group, named_group, order75_group, quotient_group, semidirect_product,
    ActionSpec, LinearKind, NamedKind,
};
use maxchain::group::DEFAULT_CAP;

fn main() {
    let cap = DEFAULT_CAP;
    for (kind, n) in [
        (NamedKind::Symmetric, 4),
        (NamedKind::Alternating, 5),
        (NamedKind::Cyclic, 12),
        (NamedKind::Dihedral, 6),
        (NamedKind::KleinFour, 4),
    ] {
        let g = named_group(kind, n, cap).unwrap();
        println!("{:<8} order {:>4} on {} points", g.label(), g.order(), g.degree());
    }
    for (kind, p) in [(LinearKind::GL2, 3), (LinearKind::SL2, 5), (LinearKind::PSL2, 7)] {
        let g = linear_group(kind, p, cap).unwrap();
        println!("{:<8} order {:>4} on {} points", g.label(), g.order(), g.degree());
    }

    let a5 = named_group(NamedKind::Alternating, 5, cap).unwrap();
    let z2 = named_group(NamedKind::Cyclic, 2, cap).unwrap();
    let p = direct_product(&a5, &z2, cap).unwrap();
    println!("{} has order {}", p.label(), p.order());

    // S3 acting on K4 through its action on the three involutions
    let k4 = named_group(NamedKind::KleinFour, 4, cap).unwrap();
    let s3 = named_group(NamedKind::Symmetric, 3, cap).unwrap();
    let action = ActionSpec::parse("(1 2)(3 4), (1 4)(2 3) | (1 4)(2 3), (1 2)(3 4)", 4).unwrap();
    let sdp = semidirect_product(&k4, &s3, &action, cap).unwrap();
    println!("K4 x| S3 has order {}", sdp.order());

    let g75 = order75_group(cap).unwrap();
    println!("{} has order {}", g75.label(), g75.order());

    let s4 = named_group(NamedKind::Symmetric, 4, cap).unwrap();
    let v = s4.subgroup_of(k4.generators()).unwrap();
    let q = quotient_group(&s4, &v).unwrap();
    println!("S4 / K4 has order {}", q.order());
}
