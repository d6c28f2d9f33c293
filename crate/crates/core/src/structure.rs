//! Group predicates, distinguished subgroups, isomorphism fingerprints, and
//! the verifiers tying chain gradedness to group structure.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bits::Bits;
use crate::chains::length_sets;
use crate::constructors::quotient_group;
use crate::group::{CayleyTable, PermGroup};
use crate::lattice::{Lattice, NodeId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predicates {
    pub abelian: bool,
    pub nilpotent: bool,
    pub supersolvable: bool,
    pub solvable: bool,
}

pub fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut primes = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            primes.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}

pub fn p_part(mut n: usize, p: usize) -> usize {
    let mut part = 1;
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

fn is_prime(n: usize) -> bool {
    n >= 2 && prime_factors(n) == [n]
}

/// Supersolvability by recursion through quotients: `G` is supersolvable
/// iff it is trivial, or it has a normal subgroup `N` of prime order with
/// `G/N` supersolvable.
pub fn is_supersolvable(group: &PermGroup) -> bool {
    if group.order() == 1 {
        return true;
    }
    let t = group.table();
    let gens = group.generator_indices();
    let mut tried = Bits::new(group.order());
    for x in 1..group.order() {
        if tried.contains(x) || !is_prime(t.element_order(x)) {
            continue;
        }
        let cyclic = t.cyclic(x);
        tried.union_with(&cyclic);
        let normal = gens.iter().all(|&g| cyclic.contains(t.conj(x, g)));
        if normal {
            // any normal subgroup of prime order will do: quotients of
            // supersolvable groups are supersolvable
            let quotient = quotient_group(group, &cyclic).expect("normal subgroup");
            return is_supersolvable(&quotient);
        }
    }
    false
}

pub fn predicate_suite(lattice: &Lattice) -> Predicates {
    let t = lattice.table();
    let whole = t.whole();
    let group = lattice.group();
    let gens = group.generator_indices();
    Predicates {
        abelian: gens
            .iter()
            .all(|&a| gens.iter().all(|&b| t.mul(a, b) == t.mul(b, a))),
        nilpotent: t.is_nilpotent(&whole),
        supersolvable: is_supersolvable(group),
        solvable: t.is_solvable(&whole),
    }
}

/// `(graded identity interval, every maximal subgroup of prime index)`.
pub fn supersolvable_oracle(lattice: &Lattice) -> (bool, bool) {
    let sets = length_sets(lattice);
    let iwasawa = sets[lattice.trivial()].len() == 1;
    let n = lattice.group().order();
    let prime_index = lattice
        .coatoms()
        .iter()
        .all(|&m| is_prime(n / lattice.order(m)));
    (iwasawa, prime_index)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeRef {
    pub node: NodeId,
    pub order: usize,
}

impl NodeRef {
    fn new(lattice: &Lattice, node: NodeId) -> Self {
        Self {
            node,
            order: lattice.order(node),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub order: usize,
    pub center: NodeRef,
    pub derived: NodeRef,
    pub frattini: NodeRef,
    pub fitting: NodeRef,
    pub minimal_normals: Vec<NodeRef>,
    pub sylow: BTreeMap<usize, NodeRef>,
    pub predicates: Predicates,
}

fn node(lattice: &Lattice, bits: &Bits) -> NodeId {
    lattice
        .node_of(bits)
        .expect("every subgroup is a lattice node")
}

pub fn center(lattice: &Lattice) -> NodeId {
    let t = lattice.table();
    node(lattice, &t.center(&t.whole()))
}

pub fn derived_subgroup(lattice: &Lattice) -> NodeId {
    let t = lattice.table();
    let whole = t.whole();
    node(lattice, &t.commutator_subgroup(&whole, &whole))
}

/// Intersection of all maximal subgroups (the whole group when trivial).
pub fn frattini(lattice: &Lattice) -> NodeId {
    let mut bits = lattice.table().whole();
    for m in lattice.coatoms() {
        bits.intersect_with(lattice.node(m).bits());
    }
    node(lattice, &bits)
}

pub fn normal_nodes(lattice: &Lattice) -> Vec<NodeId> {
    (0..lattice.len()).filter(|&x| lattice.is_normal(x)).collect()
}

pub fn is_nilpotent_node(lattice: &Lattice, x: NodeId) -> bool {
    lattice.table().is_nilpotent(lattice.node(x).bits())
}

/// The largest normal nilpotent node.
pub fn fitting(lattice: &Lattice) -> NodeId {
    normal_nodes(lattice)
        .into_iter()
        .filter(|&x| is_nilpotent_node(lattice, x))
        .max_by_key(|&x| lattice.order(x))
        .expect("the trivial subgroup is normal and nilpotent")
}

/// The Fitting subgroup assembled as the product of the `p`-cores, each the
/// intersection of all Sylow `p`-subgroups.
pub fn fitting_from_p_cores(lattice: &Lattice) -> NodeId {
    let n = lattice.group().order();
    let mut gens = Vec::new();
    for p in prime_factors(n) {
        let size = p_part(n, p);
        let mut core = lattice.table().whole();
        for s in lattice.nodes_of_order(size) {
            core.intersect_with(lattice.node(s).bits());
        }
        gens.extend(core.iter());
    }
    lattice.generated_by(&gens)
}

pub fn minimal_normals(lattice: &Lattice) -> Vec<NodeId> {
    let normals: Vec<NodeId> = normal_nodes(lattice)
        .into_iter()
        .filter(|&x| x != lattice.trivial())
        .collect();
    normals
        .iter()
        .copied()
        .filter(|&x| !normals.iter().any(|&y| y != x && lattice.is_below(y, x)))
        .collect()
}

pub fn sylow_representatives(lattice: &Lattice) -> BTreeMap<usize, NodeId> {
    let n = lattice.group().order();
    prime_factors(n)
        .into_iter()
        .map(|p| {
            let rep = lattice
                .nodes_of_order(p_part(n, p))
                .first()
                .copied()
                .expect("Sylow subgroups exist; a missing one is an enumeration bug");
            (p, rep)
        })
        .collect()
}

pub fn structure_report(lattice: &Lattice) -> StructureReport {
    StructureReport {
        order: lattice.group().order(),
        center: NodeRef::new(lattice, center(lattice)),
        derived: NodeRef::new(lattice, derived_subgroup(lattice)),
        frattini: NodeRef::new(lattice, frattini(lattice)),
        fitting: NodeRef::new(lattice, fitting(lattice)),
        minimal_normals: minimal_normals(lattice)
            .into_iter()
            .map(|x| NodeRef::new(lattice, x))
            .collect(),
        sylow: sylow_representatives(lattice)
            .into_iter()
            .map(|(p, x)| (p, NodeRef::new(lattice, x)))
            .collect(),
        predicates: predicate_suite(lattice),
    }
}

/// Isomorphism invariants of a subgroup viewed as a group in its own right.
/// Equal fingerprints are necessary, not sufficient, for isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IsoFingerprint {
    pub order: usize,
    pub abelian: bool,
    pub exponent: usize,
    pub order_histogram: BTreeMap<usize, usize>,
    pub center_order: usize,
    pub derived_order: usize,
    /// `None` when not solvable.
    pub derived_length: Option<usize>,
    /// `None` when not nilpotent.
    pub nilpotency_class: Option<usize>,
}

pub fn fingerprint_of(table: &CayleyTable, h: &Bits) -> IsoFingerprint {
    let mut hist = BTreeMap::new();
    let mut exponent = 1;
    for x in h.iter() {
        let o = table.element_order(x);
        *hist.entry(o).or_insert(0) += 1;
        exponent = crate::perm::lcm(exponent as u64, o as u64) as usize;
    }
    let derived = table.derived_series(h);
    let lower = table.lower_central_series(h);
    IsoFingerprint {
        order: h.count(),
        abelian: table.is_abelian(h),
        exponent,
        order_histogram: hist,
        center_order: table.center(h).count(),
        derived_order: derived.get(1).map_or(h.count(), Bits::count),
        derived_length: (derived.last().unwrap().count() == 1).then(|| derived.len() - 1),
        nilpotency_class: (lower.last().unwrap().count() == 1).then(|| lower.len() - 1),
    }
}

pub fn fingerprint(lattice: &Lattice, x: NodeId) -> IsoFingerprint {
    fingerprint_of(lattice.table(), lattice.node(x).bits())
}

pub fn group_fingerprint(group: &PermGroup) -> IsoFingerprint {
    let t = group.table();
    fingerprint_of(&t, &t.whole())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub witnesses: Vec<NodeId>,
}

impl Clause {
    fn new(name: &str, holds: bool, witnesses: Vec<NodeId>) -> Self {
        Self {
            name: name.to_string(),
            holds,
            witnesses,
        }
    }
}

/// Outcome of checking the minimal-subgroup chain theorems on one group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    /// Every minimal subgroup of order 2 or 3 is graded.
    pub hypothesis_23: bool,
    /// Every minimal subgroup is graded.
    pub hypothesis_all: bool,
    pub solvable: bool,
    pub supersolvable: bool,
    /// `hypothesis_23 => solvable`.
    pub solvability_implication: bool,
    /// The decomposition clauses were evaluated (the hypothesis holds and
    /// the group is not supersolvable).
    pub decomposition_tested: bool,
    pub clauses: Vec<Clause>,
    pub fitting: NodeRef,
    /// A maximal subgroup `M` with `F(G) M = G` and `F(G) ∩ M = 1`, if any.
    pub complement: Option<NodeRef>,
    /// `(p, n)` with `|F(G)| = p^n`, when `F(G)` has prime-power order.
    pub fitting_prime_power: Option<(usize, u32)>,
}

impl TheoremVerdict {
    /// No tested statement was falsified.
    pub fn consistent(&self) -> bool {
        self.solvability_implication && self.clauses.iter().all(|c| c.holds)
    }
}

fn prime_power_decomposition(n: usize) -> Option<(usize, u32)> {
    match prime_factors(n).as_slice() {
        [p] => {
            let mut k = 0;
            let mut m = n;
            while m > 1 {
                m /= p;
                k += 1;
            }
            Some((*p, k))
        }
        _ => None,
    }
}

pub fn verify_minimal_chain_theorems(lattice: &Lattice) -> TheoremVerdict {
    let sets = length_sets(lattice);
    let atoms = lattice.atoms();
    let graded = |x: NodeId| sets[x].len() == 1;
    let hypothesis_23 = atoms
        .iter()
        .filter(|&&a| matches!(lattice.order(a), 2 | 3))
        .all(|&a| graded(a));
    let hypothesis_all = atoms.iter().all(|&a| graded(a));
    let predicates = predicate_suite(lattice);
    let t = lattice.table();
    let n = lattice.group().order();

    let fit = fitting(lattice);
    let fit_bits = lattice.node(fit).bits();
    let complement = lattice.coatoms().into_iter().find(|&m| {
        lattice.meet(fit, m) == lattice.trivial() && lattice.order(fit) * lattice.order(m) == n
    });

    let decomposition_tested = hypothesis_all && !predicates.supersolvable;
    let mut clauses = Vec::new();
    let structural = |clauses: &mut Vec<Clause>| {
        let phi = frattini(lattice);
        clauses.push(Clause::new("frattini_trivial", phi == lattice.trivial(), vec![phi]));
        let z = center(lattice);
        clauses.push(Clause::new("center_trivial", z == lattice.trivial(), vec![z]));
        let mins = minimal_normals(lattice);
        clauses.push(Clause::new(
            "fitting_unique_minimal_normal",
            mins == [fit],
            mins.clone(),
        ));
        let pp = prime_power_decomposition(lattice.order(fit));
        clauses.push(Clause::new(
            "fitting_order_prime_power_n_ge_2",
            matches!(pp, Some((_, k)) if k >= 2),
            vec![fit],
        ));
        clauses.push(Clause::new(
            "maximal_complement_exists",
            complement.is_some(),
            complement.into_iter().collect(),
        ));
        let cent = node(lattice, &t.centralizer(&t.whole(), fit_bits));
        clauses.push(Clause::new("action_faithful", cent == fit, vec![cent]));
        let m_super = complement.is_some_and(|m| {
            is_supersolvable(&lattice.group().subgroup_as_group(lattice.node(m).bits()))
        });
        clauses.push(Clause::new(
            "complement_supersolvable",
            m_super,
            complement.into_iter().collect(),
        ));
    };

    if decomposition_tested {
        structural(&mut clauses);
        let derived = derived_subgroup(lattice);
        let sylow_in_derived = match prime_power_decomposition(lattice.order(fit)) {
            Some((p, _)) => {
                lattice.is_below(fit, derived)
                    && lattice.order(fit) == p_part(lattice.order(derived), p)
            }
            None => false,
        };
        clauses.push(Clause::new(
            "fitting_sylow_in_derived",
            sylow_in_derived,
            vec![fit, derived],
        ));
        let derived_center = t.center(lattice.node(derived).bits()).count();
        clauses.push(Clause::new(
            "derived_center_nontrivial_implies_fitting_is_derived",
            derived_center == 1 || fit == derived,
            vec![derived],
        ));
    } else if hypothesis_all && predicates.supersolvable {
        // the equivalence also rules the decomposition out for supersolvable groups
        let mut probe = Vec::new();
        structural(&mut probe);
        clauses.push(Clause::new(
            "supersolvable_excludes_decomposition",
            !probe.iter().all(|c| c.holds),
            Vec::new(),
        ));
    }

    TheoremVerdict {
        hypothesis_23,
        hypothesis_all,
        solvable: predicates.solvable,
        supersolvable: predicates.supersolvable,
        solvability_implication: !hypothesis_23 || predicates.solvable,
        decomposition_tested,
        clauses,
        fitting: NodeRef::new(lattice, fit),
        complement: complement.map(|m| NodeRef::new(lattice, m)),
        fitting_prime_power: prime_power_decomposition(lattice.order(fit)),
    }
}
