// One line per acceptance criterion. Set MAXCHAIN_SLOW=1 to include the
// PSL2(17) stretch criterion.
//
// Criteria listed in KNOWN_RED are expected to fail: they are reported as
// FAIL and do not fail the run, but an unexpected pass does, so the list
// cannot go stale.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;
use std::time::{Duration, Instant};

use maxchain::chains::{delta, enumerated_lengths, interval_length_sets, length_sets, DEFAULT_CHAIN_CAP};
use maxchain::corpus::{builtin_manifest, gl2_3_catalog};
use maxchain::group::DEFAULT_CAP;
use maxchain::lattice::{Lattice, NodeId};
use maxchain::speclang::{build_str, Selector};
use maxchain::structure::{
    fingerprint, predicate_suite, supersolvable_oracle, verify_minimal_chain_theorems,
};

/// GL2(3) has subgroups isomorphic to Z3, S3, Z6 and D12, which the
/// ten-type catalog omits, and six Klein four-subgroups that are maximal in
/// a D12 and have chains of lengths 2 and 3.
const KNOWN_RED: &[u8] = &[9];

type Outcome = (bool, String);
type Criterion = (u8, &'static str, Option<fn() -> Outcome>);

fn lattice(spec: &str) -> (Lattice, Duration) {
    let started = Instant::now();
    let l = Lattice::enumerate(Arc::new(build_str(spec, DEFAULT_CAP).unwrap())).unwrap();
    (l, started.elapsed())
}

fn corpus_specs(slow: bool) -> Vec<String> {
    builtin_manifest()
        .into_iter()
        .filter(|e| slow || !e.slow)
        .map(|e| e.spec)
        .collect()
}

fn lengths(l: &Lattice, selector: &str) -> Vec<usize> {
    let node = Selector::parse(selector).unwrap().resolve(l).unwrap();
    length_sets(l)[node].to_vec()
}

fn ungraded_second_maximal(l: &Lattice) -> Vec<NodeId> {
    let sets = length_sets(l);
    l.second_maximal().into_iter().filter(|&x| sets[x].len() > 1).collect()
}

fn c1() -> Outcome {
    let started = Instant::now();
    let (l, _) = lattice("A(5)");
    let d = delta(&l);
    let by_order = d.by_order(&l);
    let took = started.elapsed();
    (
        d.value == 16 && by_order == BTreeMap::from([(1, 1), (2, 15)]) && took < Duration::from_secs(5),
        format!("delta {} offenders {by_order:?} in {took:.2?} (limit 5s)", d.value),
    )
}

fn c2() -> Outcome {
    let started = Instant::now();
    let specs = corpus_specs(false);
    let mut bad = Vec::new();
    let mut orders = Vec::new();
    for spec in &specs {
        let (l, _) = lattice(spec);
        let recursive = predicate_suite(&l).supersolvable;
        let (graded, prime_index) = supersolvable_oracle(&l);
        if graded != recursive || prime_index != recursive {
            bad.push(spec.clone());
        }
        orders.push(l.group().order());
    }
    let took = started.elapsed();
    let span = (orders.iter().min().copied(), orders.iter().max().copied());
    (
        bad.is_empty() && specs.len() >= 25 && took < Duration::from_secs(120),
        format!("{} groups, orders {span:?}, disagreements {bad:?}, {took:.2?} (limit 120s)", specs.len()),
    )
}

fn c3() -> Outcome {
    let (a4, _) = lattice("A(4)");
    let (s4, _) = lattice("S(4)");
    let (sl25, _) = lattice("SL2(5)");
    let (a5, _) = lattice("A(5)");
    let got = [
        lengths(&a4, "trivial"),
        lengths(&s4, "gens: (1 2)"),
        lengths(&sl25, "center"),
        lengths(&a4, "gens: (1 2 3)"),
    ];
    let want = [vec![2, 3], vec![2, 3], vec![3, 4], vec![1]];
    let sets = length_sets(&a5);
    let fours = a5.nodes_of_order(4);
    let fours_graded = fours.len() == 5 && fours.iter().all(|&x| sets[x].len() == 1);
    (
        got == want && fours_graded,
        format!("A4/1 {:?}, S4/<(1 2)> {:?}, SL2(5)/Z {:?}, A4/<(1 2 3)> {:?}, A5 order-4 graded {fours_graded}", got[0], got[1], got[2], got[3]),
    )
}

fn c4() -> Outcome {
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for spec in corpus_specs(false) {
        let (l, _) = lattice(&spec);
        if l.group().order() > 200 && spec != "S(5)" && spec != "A(5)" {
            continue;
        }
        let sets = length_sets(&l);
        for x in 0..l.len() {
            match enumerated_lengths(&l, x, DEFAULT_CHAIN_CAP) {
                Ok(seen) if seen == sets[x] => {}
                other => mismatches.push(format!("{spec} node {x}: {other:?}")),
            }
        }
        checked += 1;
    }
    (mismatches.is_empty(), format!("{checked} groups, mismatches {mismatches:?}"))
}

fn c5() -> Outcome {
    let mut counterexamples = Vec::new();
    for spec in corpus_specs(false) {
        let (l, _) = lattice(&spec);
        let v = verify_minimal_chain_theorems(&l);
        if v.hypothesis_23 && !v.solvable {
            counterexamples.push(spec);
        }
    }
    let a5 = verify_minimal_chain_theorems(&lattice("A(5)").0);
    let sl25 = verify_minimal_chain_theorems(&lattice("SL2(5)").0);
    let exercised = !a5.hypothesis_23 && !sl25.hypothesis_23 && !a5.solvable;
    (
        counterexamples.is_empty() && exercised,
        format!("counterexamples {counterexamples:?}; A5 and SL2(5) outside the hypothesis {exercised}"),
    )
}

fn c6() -> Outcome {
    let check = |spec: &str, fitting: usize, pn: (usize, u32)| {
        let v = verify_minimal_chain_theorems(&lattice(spec).0);
        v.hypothesis_all
            && !v.supersolvable
            && v.decomposition_tested
            && v.clauses.len() == 9
            && v.clauses.iter().all(|c| c.holds)
            && v.fitting.order == fitting
            && v.fitting_prime_power == Some(pn)
            && v.complement.map(|m| m.order) == Some(3)
    };
    let a4 = check("A(4)", 4, (2, 2));
    let g75 = check("@order75", 25, (5, 2));
    let s4 = verify_minimal_chain_theorems(&lattice("S(4)").0);
    let s4_ok = !s4.hypothesis_all
        && !s4.decomposition_tested
        && s4.clauses.is_empty()
        && s4.consistent()
        && s4.fitting.order == 4
        && s4.complement.map(|m| m.order) == Some(6);
    (a4 && g75 && s4_ok, format!("A4 {a4}, order 75 {g75}, S4 vacuous with K4:S3 {s4_ok}"))
}

fn c7() -> Outcome {
    let started = Instant::now();
    let frozen = [
        ("S(5)", 56),
        ("prod(A(5), C(2))", 47),
        ("prod(A(5), C(3))", 32),
        ("prod(A(5), C(5))", 32),
        ("prod(A(5), C(7))", 32),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (spec, want) in frozen {
        let d = delta(&lattice(spec).0).value;
        ok &= d > 16 && d == want;
        parts.push(format!("{spec} {d}"));
    }
    let took = started.elapsed();
    (ok && took < Duration::from_secs(120), format!("{} in {took:.2?} (limit 120s)", parts.join(", ")))
}

fn c8() -> Outcome {
    let started = Instant::now();
    let (l, _) = lattice("PSL2(7)");
    let involutions = l.nodes_of_order(2);
    let info = l.subgroup_query(involutions[0]);
    let index = l.group().order() / l.order(info.normalizer);
    let d = delta(&l).value;
    let took = started.elapsed();
    (
        involutions.len() == 21 && info.orbit.len() == 21 && index == 21 && d >= 21 && took < Duration::from_secs(60),
        format!("{} involution subgroups, orbit {}, |G:N| {index}, delta {d}, {took:.2?}", involutions.len(), info.orbit.len()),
    )
}

fn c9() -> Outcome {
    let (l, _) = lattice("GL2(3)");
    let catalog: BTreeSet<_> = gl2_3_catalog(DEFAULT_CAP).unwrap().into_iter().map(|(_, f)| f).collect();
    let found: BTreeSet<_> = (0..l.len()).map(|x| fingerprint(&l, x)).collect();
    let extra: Vec<_> = found.difference(&catalog).map(|f| (f.order, f.order_histogram.clone())).collect();
    let ungraded = ungraded_second_maximal(&l);
    let ss = predicate_suite(&l).supersolvable;
    (
        found == catalog && ungraded.is_empty() && !ss,
        format!(
            "{} types vs {} in catalog, extra {extra:?}; ungraded second-maximal orders {:?}; supersolvable {ss}",
            found.len(),
            catalog.len(),
            ungraded.iter().map(|&x| l.order(x)).collect::<Vec<_>>()
        ),
    )
}

fn c10() -> Outcome {
    let (l, took) = lattice("PSL2(17)");
    let ungraded = ungraded_second_maximal(&l);
    (
        l.len() == 2420 && ungraded.is_empty() && took < Duration::from_secs(15 * 60),
        format!("{} subgroups in {took:.2?}, {} ungraded second-maximal", l.len(), ungraded.len()),
    )
}

fn c11() -> Outcome {
    let mut violations = Vec::new();
    let mut groups = 0;
    for spec in corpus_specs(false) {
        let (l, _) = lattice(&spec);
        let n = l.group().order();
        if n > 120 {
            continue;
        }
        groups += 1;
        let t = l.table();
        let sets = length_sets(&l);
        let p = predicate_suite(&l);
        if !((!p.abelian || p.nilpotent) && (!p.nilpotent || p.supersolvable) && (!p.supersolvable || p.solvable)) {
            violations.push(format!("{spec}: predicate chain {p:?}"));
        }
        for x in 0..l.len() {
            let bits = l.node(x).bits();
            if n % l.order(x) != 0 {
                violations.push(format!("{spec}: Lagrange at {x}"));
            }
            if !t.is_subgroup(bits) {
                violations.push(format!("{spec}: {x} not closed"));
            }
            for &y in l.covers(x) {
                let strict = bits.is_subset(l.node(y).bits()) && l.order(x) < l.order(y);
                let between = (0..l.len()).any(|z| z != x && z != y && l.is_below(x, z) && l.is_below(z, y));
                if !strict || between {
                    violations.push(format!("{spec}: cover {x}->{y}"));
                }
            }
            for g in 0..n {
                if l.node_of(&t.conjugate(bits, g)).is_none() {
                    violations.push(format!("{spec}: conjugate of {x} by {g}"));
                }
            }
        }
        for k in 0..l.len() {
            let interval = interval_length_sets(&l, k);
            for h in (0..=k).filter(|&h| l.is_below(h, k) && sets[h].len() == 1) {
                if interval[h].len() != 1 || sets[k].len() != 1 {
                    violations.push(format!("{spec}: pair ({h}, {k})"));
                }
            }
        }
    }
    (violations.is_empty(), format!("{groups} groups, violations {violations:?}"))
}

fn main() {
    let slow = std::env::var("MAXCHAIN_SLOW").is_ok_and(|v| v == "1");
    let criteria: [Criterion; 11] = [
        (1, "delta(A5) = 16", Some(c1)),
        (2, "identity graded iff supersolvable iff prime-index maximals", Some(c2)),
        (3, "chain length fixtures", Some(c3)),
        (4, "chain length sets match exhaustive enumeration", Some(c4)),
        (5, "graded minimal subgroups of order 2, 3 imply solvable", Some(c5)),
        (6, "Fitting decomposition verifier", Some(c6)),
        (7, "delta(S5), delta(A5 x Zp) > 16", Some(c7)),
        (8, "PSL2(7) involution orbit of size 21", Some(c8)),
        (9, "GL2(3) subgroup catalog and graded second-maximals", Some(c9)),
        (10, "PSL2(17) second-maximals graded", slow.then_some(c10 as fn() -> Outcome)),
        (11, "property suites up to order 120", Some(c11)),
    ];
    let mut unexpected = 0;
    for (id, claim, check) in criteria {
        let Some(check) = check else {
            println!("SKIP {id:>2}  {claim}  (set MAXCHAIN_SLOW=1)");
            continue;
        };
        let (passed, detail) = check();
        let known_red = KNOWN_RED.contains(&id);
        let tag = match (passed, known_red) {
            (true, false) => "PASS",
            (false, true) => "FAIL",
            (false, false) => {
                unexpected += 1;
                "FAIL"
            }
            (true, true) => {
                unexpected += 1;
                "PASS (listed as known red; update KNOWN_RED)"
            }
        };
        println!("{tag} {id:>2}  {claim}  [{detail}]");
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criteria did not match their expected outcome");
        std::process::exit(1);
    }
}
