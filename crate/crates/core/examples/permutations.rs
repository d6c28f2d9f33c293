// Cycle notation in and out, composition, inverses and element orders.
//
//     cargo run --example permutations

use maxchain::perm::Permutation;

fn main() {
    let a = Permutation::parse("(1 2)", 3).unwrap();
    let b = Permutation::parse("(2,3)", 3).unwrap();

    // products read left to right: apply a, then b
    let ab = a.compose(&b).unwrap();
    let ba = b.compose(&a).unwrap();
    println!("(1 2)(2 3) = {ab}");
    println!("(2 3)(1 2) = {ba}");
    assert_eq!(ab.to_string(), "(1 3 2)");

    let c = Permutation::parse("(1 2)(3 4 5)", 5).unwrap();
    println!("{c} has order {} and inverse {}", c.order(), c.inverse());
    println!("images of {c}: {:?}", c.images());
    assert!(c.pow(c.order()).is_identity());

    match Permutation::parse("(1 2)(2 3)", 3) {
        Ok(p) => println!("unexpected {p}"),
        Err(e) => println!("rejected: {e}"),
    }
}
