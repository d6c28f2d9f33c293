// Parse group specs, print them back, and report errors with positions.
//
//     cargo run --example spec_language -- "quot(S(4); fitting)"

use maxchain::group::DEFAULT_CAP;
use maxchain::speclang::{build, parse_spec};

fn main() {
    let mut specs: Vec<String> = std::env::args().skip(1).collect();
    if specs.is_empty() {
        specs = [
            "prod(A(5), C(2))",
            "gens[4: (1,2,3), (1 2)(3 4)]",
            "sdp(prod(C(3),C(3)), C(2); (1 3 2), (4 6 5))",
            "quot(SL2(5); center)",
            "@SD16",
            "prod(A(5),\n     X(2))",
            "PSL2(15)",
        ]
        .map(String::from)
        .to_vec();
    }
    for text in specs {
        match parse_spec(&text) {
            Ok(spec) => match build(&spec, DEFAULT_CAP) {
                Ok(g) => println!("{spec}  ->  order {}, degree {}", g.order(), g.degree()),
                Err(e) => println!("{spec}  ->  {e}"),
            },
            Err(e) => println!("{text:?}: {e}"),
        }
    }
}
