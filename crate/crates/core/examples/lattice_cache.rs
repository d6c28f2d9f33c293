// Store a lattice on disk and load it back.
//
//     cargo run --release --example lattice_cache

use std::sync::Arc;
use std::time::Instant;

use maxchain::cache;
use maxchain::group::DEFAULT_CAP;
use maxchain::lattice::LatticeOptions;
use maxchain::speclang::build_str;

fn main() {
    let dir = std::env::temp_dir().join(format!("maxchain-example-{}", std::process::id()));
    let g = Arc::new(build_str("PSL2(7)", DEFAULT_CAP).unwrap());

    let t = Instant::now();
    let built = cache::cached_lattice(&dir, g.clone(), &LatticeOptions::default()).unwrap();
    println!("built {} subgroups in {:.2?}", built.len(), t.elapsed());

    let t = Instant::now();
    let loaded = cache::load(&dir, g.clone()).unwrap().expect("just stored");
    println!("loaded {} subgroups in {:.2?}", loaded.len(), t.elapsed());
    assert_eq!(built.hasse_edges(), loaded.hasse_edges());
    println!("cache file {}", cache::cache_path(&dir, &g).display());

    std::fs::remove_dir_all(&dir).unwrap();
}
