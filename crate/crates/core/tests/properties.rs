use std::sync::Arc;

use proptest::prelude::*;

use maxchain::cache::{self, CacheEntry};
use maxchain::chains::{interval_length_sets, is_graded_interval, length_sets};
use maxchain::constructors::{LinearKind, NamedKind};
use maxchain::corpus::builtin_manifest;
use maxchain::error::Error;
use maxchain::group::{PermGroup, DEFAULT_CAP};
use maxchain::lattice::Lattice;
use maxchain::perm::Permutation;
use maxchain::speclang::{build_str, parse_spec, GroupSpec, Selector};
use maxchain::structure::{self, fitting, fitting_from_p_cores, predicate_suite};

fn perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

proptest! {
    #[test]
    fn composition_is_associative_with_inverses(
        (a, b, c) in (1usize..9).prop_flat_map(|n| (perm(n), perm(n), perm(n)))
    ) {
        let id = Permutation::identity(a.degree());
        prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
        prop_assert_eq!(a.then(&a.inverse()), id.clone());
        prop_assert_eq!(a.inverse().then(&a), id);
        prop_assert_eq!(a.then(&b).inverse(), b.inverse().then(&a.inverse()));
        prop_assert!(a.pow(a.order()).is_identity());
    }

    #[test]
    fn cycle_text_round_trips(p in (1usize..12).prop_flat_map(perm)) {
        let text = p.to_cycle_string();
        prop_assert_eq!(Permutation::parse(&text, p.degree()).unwrap(), p);
    }
}

fn selector() -> impl Strategy<Value = Selector> {
    prop_oneof![
        Just(Selector::Trivial),
        Just(Selector::Center),
        Just(Selector::Fitting),
        (1usize..50, 0usize..5).prop_map(|(order, index)| Selector::Order { order, index }),
        Just(Selector::Gens(vec!["(1 2)".into(), "(1 2 3)".into()])),
    ]
}

fn spec() -> impl Strategy<Value = GroupSpec> {
    let leaf = prop_oneof![
        (prop_oneof![
            Just(NamedKind::Symmetric),
            Just(NamedKind::Alternating),
            Just(NamedKind::Cyclic),
            Just(NamedKind::Dihedral)
        ], 1usize..20)
            .prop_map(|(k, n)| GroupSpec::Named(k, n)),
        Just(GroupSpec::Named(NamedKind::KleinFour, 4)),
        (prop_oneof![Just(LinearKind::GL2), Just(LinearKind::SL2), Just(LinearKind::PSL2)],
         prop_oneof![Just(2u64), Just(3), Just(5), Just(7), Just(17)])
            .prop_map(|(k, p)| GroupSpec::Linear(k, p)),
        (1usize..7).prop_flat_map(|d| prop::collection::vec(perm(d), 0..3)
            .prop_map(move |g| GroupSpec::Gens(d, g))),
        prop_oneof![Just("order75"), Just("Q8"), Just("SD16")]
            .prop_map(|n| GroupSpec::CorpusRef(n.to_string())),
    ];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| GroupSpec::Prod(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| {
                GroupSpec::Sdp(Box::new(a), Box::new(b), "(1 2), (2 3) | (1 3)".to_string())
            }),
            (inner, selector()).prop_map(|(g, s)| GroupSpec::Quot(Box::new(g), s)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]
    #[test]
    fn grammar_round_trips(s in spec()) {
        let text = s.to_string();
        prop_assert_eq!(parse_spec(&text).unwrap(), s);
    }
}

fn corpus_lattices(max_order: usize) -> Vec<Lattice> {
    builtin_manifest()
        .into_iter()
        .filter(|e| !e.slow && e.expect.order.is_some_and(|o| o <= max_order))
        .map(|e| Lattice::enumerate(Arc::new(build_str(&e.spec, DEFAULT_CAP).unwrap())).unwrap())
        .collect()
}

#[test]
fn graded_intervals_restrict_and_extend() {
    for l in corpus_lattices(120) {
        let sets = length_sets(&l);
        for k in 0..l.len() {
            let interval = interval_length_sets(&l, k);
            for h in (0..k).filter(|&h| l.is_below(h, k) && sets[h].len() == 1) {
                assert_eq!(interval[h].len(), 1, "{}: [{h}, {k}]", l.group().label());
                assert_eq!(sets[k].len(), 1, "{}: {k} above graded {h}", l.group().label());
            }
        }
    }
}

#[test]
fn graded_above_does_not_mean_graded_below() {
    let l = Lattice::enumerate(Arc::new(build_str("A(4)", DEFAULT_CAP).unwrap())).unwrap();
    let three = l.nodes_of_order(3)[0];
    assert!(is_graded_interval(&l, three, l.top()));
    assert!(!is_graded_interval(&l, l.trivial(), l.top()));
}

#[test]
fn frattini_graded_iff_supersolvable() {
    for l in corpus_lattices(500) {
        let phi = structure::frattini(&l);
        let graded = length_sets(&l)[phi].len() == 1;
        assert_eq!(graded, predicate_suite(&l).supersolvable, "{}", l.group().label());
    }
}

#[test]
fn fitting_matches_product_of_p_cores() {
    for l in corpus_lattices(200) {
        assert_eq!(fitting(&l), fitting_from_p_cores(&l), "{}", l.group().label());
    }
}

#[test]
fn structure_invariants() {
    for l in corpus_lattices(200) {
        let t = l.table();
        let r = structure::structure_report(&l);
        let p = r.predicates;
        assert!(!p.abelian || p.nilpotent);
        assert!(!p.nilpotent || p.supersolvable);
        assert!(!p.supersolvable || p.solvable);
        assert!(l.is_below(r.center.node, r.fitting.node));
        assert!(l.is_normal(r.derived.node));
        let g: &PermGroup = l.group();
        let q = maxchain::constructors::quotient_group(g, l.node(r.derived.node).bits()).unwrap();
        assert!(predicate_suite(&Lattice::enumerate(Arc::new(q)).unwrap()).abelian);
        for (&prime, s) in &r.sylow {
            assert_eq!(s.order, structure::p_part(g.order(), prime));
        }
        assert!(t.is_subgroup(l.node(r.frattini.node).bits()));
    }
}

#[test]
fn fitting_is_sylow_in_derived_when_the_theorem_applies() {
    for l in corpus_lattices(200) {
        let v = structure::verify_minimal_chain_theorems(&l);
        if v.decomposition_tested {
            let (p, _) = v.fitting_prime_power.unwrap();
            let derived = structure::derived_subgroup(&l);
            assert_eq!(v.fitting.order, structure::p_part(l.order(derived), p));
        }
    }
}

#[test]
fn cache_is_deterministic() {
    let a = Lattice::enumerate(Arc::new(build_str("S(4)", DEFAULT_CAP).unwrap())).unwrap();
    let b = Lattice::enumerate(Arc::new(build_str("S(4)", DEFAULT_CAP).unwrap())).unwrap();
    let mut ea = CacheEntry::from_lattice(&a, Default::default());
    let mut eb = CacheEntry::from_lattice(&b, Default::default());
    ea.build_millis = 0;
    eb.build_millis = 0;
    assert_eq!(serde_json::to_string(&ea).unwrap(), serde_json::to_string(&eb).unwrap());
}

#[test]
fn cache_round_trip_and_damage() {
    let dir = tempfile::tempdir().unwrap();
    let g = Arc::new(build_str("A(5)", DEFAULT_CAP).unwrap());
    let built = Lattice::enumerate(g.clone()).unwrap();
    let entry = CacheEntry::from_lattice(&built, Default::default());
    cache::store(dir.path(), &entry).unwrap();
    let loaded = cache::load(dir.path(), g.clone()).unwrap().unwrap();
    assert_eq!(loaded.len(), 59);
    for x in 0..built.len() {
        assert_eq!(loaded.node(x).bits(), built.node(x).bits());
        assert_eq!(loaded.covers(x), built.covers(x));
    }

    // flip one bit of one node: the closure check turns it into corruption
    let mut damaged = entry.clone();
    let mut bytes = hex::decode(&damaged.nodes[5]).unwrap();
    bytes[0] ^= 0b100;
    damaged.nodes[5] = hex::encode(bytes);
    assert!(matches!(damaged.to_lattice(g.clone()), Err(Error::CacheCorrupt(_))));

    let mut old = entry;
    old.version += 1;
    assert!(matches!(old.to_lattice(g), Err(Error::CacheVersion { .. })));
}

#[test]
fn sl2_5_odd_atoms_graded_and_the_involution_is_not() {
    let l = Lattice::enumerate(Arc::new(build_str("SL2(5)", DEFAULT_CAP).unwrap())).unwrap();
    let sets = length_sets(&l);
    let atoms = l.atoms();
    assert!(atoms.iter().filter(|&&a| l.order(a) % 2 == 1).all(|&a| sets[a].len() == 1));
    let involutions: Vec<_> = atoms.iter().filter(|&&a| l.order(a) == 2).collect();
    assert_eq!(involutions.len(), 1);
    assert!(sets[*involutions[0]].len() > 1);
}

#[test]
fn a5_ungraded_subgroups_are_the_trivial_one_and_involutions() {
    let l = Lattice::enumerate(Arc::new(build_str("A(5)", DEFAULT_CAP).unwrap())).unwrap();
    let sets = length_sets(&l);
    for x in 1..l.len() {
        assert_eq!(sets[x].len() == 1, l.order(x) != 2, "node {x} of order {}", l.order(x));
    }
    // graded order-4 subgroups do not make A5 solvable
    assert!(!predicate_suite(&l).solvable);
}

#[test]
fn delta_never_counts_the_whole_group() {
    for l in corpus_lattices(700) {
        let d = maxchain::chains::delta(&l);
        assert!(!d.offenders.contains(&l.top()));
        if predicate_suite(&l).supersolvable {
            assert_eq!(d.value, 0, "{}", l.group().label());
        }
    }
}
