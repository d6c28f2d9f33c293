// Brute-force cross-checks that use permutation arithmetic only, never the
// Cayley table or the lattice code under test.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::Arc;

use maxchain::constructors::{named_group, quaternion8, quotient_group, NamedKind};
use maxchain::group::{PermGroup, DEFAULT_CAP};
use maxchain::lattice::Lattice;
use maxchain::perm::Permutation;
use maxchain::structure::group_fingerprint;

fn named(kind: NamedKind, n: usize) -> PermGroup {
    named_group(kind, n, DEFAULT_CAP).unwrap()
}

fn closed(elements: &[Permutation], members: &[usize]) -> bool {
    let set: HashSet<&Permutation> = members.iter().map(|&i| &elements[i]).collect();
    members
        .iter()
        .all(|&a| members.iter().all(|&b| set.contains(&elements[a].then(&elements[b]))))
}

fn generated(elements: &[Permutation], gens: &[&Permutation]) -> BTreeSet<usize> {
    let degree = elements[0].degree();
    let mut seen: HashSet<Permutation> = HashSet::from([Permutation::identity(degree)]);
    let mut frontier = vec![Permutation::identity(degree)];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen.iter()
        .map(|p| elements.iter().position(|e| e == p).unwrap())
        .collect()
}

fn lattice_sets(l: &Lattice) -> BTreeSet<BTreeSet<usize>> {
    l.nodes().iter().map(|s| s.bits().iter().collect()).collect()
}

#[test]
fn a4_subgroups_match_all_closed_subsets() {
    let g = Arc::new(named(NamedKind::Alternating, 4));
    let elements = g.elements().to_vec();
    let identity = elements.iter().position(Permutation::is_identity).unwrap();
    let mut found = BTreeSet::new();
    for mask in 0u32..1 << 12 {
        if mask >> identity & 1 == 0 {
            continue;
        }
        let members: Vec<usize> = (0..12).filter(|i| mask >> i & 1 == 1).collect();
        if closed(&elements, &members) {
            found.insert(members.into_iter().collect::<BTreeSet<_>>());
        }
    }
    assert_eq!(found.len(), 10);
    let l = Lattice::enumerate(g).unwrap();
    assert_eq!(lattice_sets(&l), found);
}

#[test]
fn a5_subgroups_match_two_generated_closures() {
    // every subgroup of A5 is generated by at most two elements
    let g = Arc::new(named(NamedKind::Alternating, 5));
    let elements = g.elements().to_vec();
    let mut found = BTreeSet::new();
    for a in &elements {
        for b in &elements {
            found.insert(generated(&elements, &[a, b]));
        }
    }
    assert_eq!(found.len(), 59);
    let l = Lattice::enumerate(g).unwrap();
    assert_eq!(lattice_sets(&l), found);
}

#[test]
fn covers_match_brute_force_maximality() {
    let l = Lattice::enumerate(Arc::new(named(NamedKind::Symmetric, 4))).unwrap();
    let sets: Vec<BTreeSet<usize>> = l.nodes().iter().map(|s| s.bits().iter().collect()).collect();
    for (x, sx) in sets.iter().enumerate() {
        let mut covers: Vec<usize> = (0..sets.len())
            .filter(|&y| {
                sx.is_subset(&sets[y])
                    && sx != &sets[y]
                    && !sets.iter().any(|z| sx.is_subset(z) && z.is_subset(&sets[y]) && z != sx && z != &sets[y])
            })
            .collect();
        covers.sort_unstable();
        let mut got = l.covers(x).to_vec();
        got.sort_unstable();
        assert_eq!(got, covers, "node {x}");
    }
}

fn order_histogram(g: &PermGroup) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for e in g.elements() {
        *h.entry(e.order() as usize).or_insert(0) += 1;
    }
    h
}

#[test]
fn q8_and_d8_are_told_apart_by_element_orders() {
    let q8 = quaternion8();
    let d8 = named(NamedKind::Dihedral, 4);
    assert_eq!(order_histogram(&q8), BTreeMap::from([(1, 1), (2, 1), (4, 6)]));
    assert_eq!(order_histogram(&d8), BTreeMap::from([(1, 1), (2, 5), (4, 2)]));
    assert_eq!(group_fingerprint(&q8).order_histogram, order_histogram(&q8));
    assert_eq!(group_fingerprint(&d8).order_histogram, order_histogram(&d8));
    assert_ne!(group_fingerprint(&q8), group_fingerprint(&d8));
}

#[test]
fn s4_mod_k4_matches_coset_arithmetic() {
    let s4 = named(NamedKind::Symmetric, 4);
    let k4: Vec<Permutation> = ["()", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"]
        .iter()
        .map(|t| Permutation::parse(t, 4).unwrap())
        .collect();
    let coset = |g: &Permutation| -> BTreeSet<Permutation> { k4.iter().map(|k| k.then(g)).collect() };
    let cosets: BTreeSet<BTreeSet<Permutation>> = s4.elements().iter().map(coset).collect();
    assert_eq!(cosets.len(), 6);
    // products of representatives land in a well-defined coset
    for a in &cosets {
        for b in &cosets {
            let products: BTreeSet<BTreeSet<Permutation>> = a
                .iter()
                .flat_map(|x| b.iter().map(move |y| coset(&x.then(y))))
                .collect();
            assert_eq!(products.len(), 1);
        }
    }
    let bits = s4.subgroup_of(&k4).unwrap();
    let q = quotient_group(&s4, &bits).unwrap();
    assert_eq!(q.order(), 6);
    assert_eq!(order_histogram(&q), BTreeMap::from([(1, 1), (2, 3), (3, 2)]));
}
