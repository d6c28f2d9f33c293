//! The subgroup lattice of a permutation group.
//!
//! Subgroups are found by seeding every cyclic subgroup and then repeatedly
//! joining each known subgroup with each cyclic subgroup of prime-power order
//! until no new subgroup appears. Every subgroup is generated by elements of
//! prime-power order, so the fixpoint contains all of them.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::group::{CayleyTable, PermGroup, DEFAULT_CAP};

pub type NodeId = usize;

/// A subgroup of the ambient group, stored as a set of element ordinals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubgroupSet {
    bits: Bits,
    order: usize,
}

impl SubgroupSet {
    /// Checks closure under products (which, for a finite set, gives inverses).
    pub fn new(table: &CayleyTable, bits: Bits) -> Result<Self> {
        if bits.len() != table.order() {
            return Err(Error::NotASubgroup("bitset length differs from group order".into()));
        }
        if !table.is_subgroup(&bits) {
            return Err(Error::NotASubgroup("element set is not closed".into()));
        }
        Ok(Self::trusted(bits))
    }

    pub(crate) fn trusted(bits: Bits) -> Self {
        let order = bits.count();
        Self { bits, order }
    }

    pub fn bits(&self) -> &Bits {
        &self.bits
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn contains(&self, element: usize) -> bool {
        self.bits.contains(element)
    }

    pub fn is_subset(&self, other: &SubgroupSet) -> bool {
        self.order <= other.order && self.bits.is_subset(&other.bits)
    }
}

#[derive(Clone, Debug, Default)]
pub struct LatticeOptions {
    pub cap: Option<usize>,
    /// Log the size of every closure round.
    pub progress: bool,
}

pub struct Lattice {
    group: Arc<PermGroup>,
    table: Arc<CayleyTable>,
    nodes: Vec<SubgroupSet>,
    index: HashMap<Bits, NodeId>,
    up: Vec<Vec<NodeId>>,
    down: Vec<Vec<NodeId>>,
    above: Vec<Bits>,
}

/// Normalizer, centralizer and conjugacy data for one node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupInfo {
    pub normalizer: NodeId,
    pub centralizer: NodeId,
    pub is_normal: bool,
    pub orbit: Vec<NodeId>,
}

impl std::fmt::Debug for Lattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Lattice")
            .field("group", &self.group.label())
            .field("nodes", &self.nodes.len())
            .field("edges", &self.edge_count())
            .finish()
    }
}

impl Lattice {
    pub fn enumerate(group: Arc<PermGroup>) -> Result<Self> {
        Self::enumerate_with(group, &LatticeOptions::default())
    }

    pub fn enumerate_with(group: Arc<PermGroup>, options: &LatticeOptions) -> Result<Self> {
        let cap = options.cap.unwrap_or(DEFAULT_CAP);
        if group.order() > cap {
            return Err(Error::CapExceeded {
                cap,
                reached: group.order(),
            });
        }
        let started = Instant::now();
        let table = group.table();
        let subgroups = enumerate_subgroups(&table, options.progress);
        if options.progress {
            log::info!(
                "{}: {} subgroups in {:.2?}",
                group.label(),
                subgroups.len(),
                started.elapsed()
            );
        }
        Ok(Self::from_subgroups(group, table, subgroups))
    }

    /// Rebuilds a lattice from a complete list of subgroups, validating each.
    pub fn from_node_bits(group: Arc<PermGroup>, nodes: Vec<Bits>) -> Result<Self> {
        let table = group.table();
        let mut seen = HashSet::new();
        let mut subgroups = Vec::with_capacity(nodes.len());
        for bits in nodes {
            let s = SubgroupSet::new(&table, bits)?;
            if !seen.insert(s.bits.clone()) {
                return Err(Error::NotASubgroup("duplicate node".into()));
            }
            subgroups.push(s);
        }
        let lattice = Self::from_subgroups(group, table, subgroups);
        if lattice.nodes.first().map(SubgroupSet::order) != Some(1)
            || lattice.nodes.last().map(SubgroupSet::order) != Some(lattice.group.order())
        {
            return Err(Error::NotASubgroup(
                "node list must contain the trivial and the whole group".into(),
            ));
        }
        Ok(lattice)
    }

    fn from_subgroups(
        group: Arc<PermGroup>,
        table: Arc<CayleyTable>,
        mut nodes: Vec<SubgroupSet>,
    ) -> Self {
        nodes.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.bits.cmp_members(&b.bits)));
        let n = nodes.len();
        let index = nodes
            .iter()
            .enumerate()
            .map(|(i, s)| (s.bits.clone(), i))
            .collect();

        // reflexive containment, nodes sorted by order so supersets come later
        let above: Vec<Bits> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut row = Bits::new(n);
                row.insert(i);
                for j in i + 1..n {
                    if nodes[j].order > nodes[i].order
                        && nodes[j].order.is_multiple_of(nodes[i].order)
                        && nodes[i].bits.is_subset(&nodes[j].bits)
                    {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();

        // covers: minimal elements of the strict up-set
        let up: Vec<Vec<NodeId>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut strict = above[i].clone();
                strict.remove(i);
                let mut covers = strict.clone();
                for j in strict.iter() {
                    let mut over = above[j].clone();
                    over.remove(j);
                    covers.difference_with(&over);
                }
                covers.iter().collect()
            })
            .collect();
        let mut down = vec![Vec::new(); n];
        for (i, ups) in up.iter().enumerate() {
            for &j in ups {
                down[j].push(i);
            }
        }

        Self {
            group,
            table,
            nodes,
            index,
            up,
            down,
            above,
        }
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn table(&self) -> &Arc<CayleyTable> {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[SubgroupSet] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> &SubgroupSet {
        &self.nodes[id]
    }

    pub fn order(&self, id: NodeId) -> usize {
        self.nodes[id].order
    }

    pub fn trivial(&self) -> NodeId {
        0
    }

    pub fn top(&self) -> NodeId {
        self.nodes.len() - 1
    }

    pub fn node_of(&self, bits: &Bits) -> Option<NodeId> {
        self.index.get(bits).copied()
    }

    pub fn node_of_set(&self, set: &SubgroupSet) -> Result<NodeId> {
        self.node_of(&set.bits).ok_or(Error::NotANode)
    }

    /// Nodes covering `id` (maximal containments).
    pub fn covers(&self, id: NodeId) -> &[NodeId] {
        &self.up[id]
    }

    /// Nodes covered by `id`.
    pub fn covered_by(&self, id: NodeId) -> &[NodeId] {
        &self.down[id]
    }

    /// Reflexive containment as a bitset over node ids.
    pub fn above(&self, id: NodeId) -> &Bits {
        &self.above[id]
    }

    pub fn is_below(&self, lower: NodeId, upper: NodeId) -> bool {
        self.above[lower].contains(upper)
    }

    pub fn hasse_edges(&self) -> Vec<(NodeId, NodeId)> {
        self.up
            .iter()
            .enumerate()
            .flat_map(|(i, ups)| ups.iter().map(move |&j| (i, j)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.up.iter().map(Vec::len).sum()
    }

    /// Nodes of order `order`, in canonical order.
    pub fn nodes_of_order(&self, order: usize) -> Vec<NodeId> {
        (0..self.len()).filter(|&i| self.nodes[i].order == order).collect()
    }

    /// Minimal subgroups: the covers of the trivial node.
    pub fn atoms(&self) -> Vec<NodeId> {
        if self.len() == 1 {
            return Vec::new();
        }
        self.up[self.trivial()].clone()
    }

    /// Maximal subgroups: the nodes covered by the whole group.
    pub fn coatoms(&self) -> Vec<NodeId> {
        self.down[self.top()].clone()
    }

    /// Nodes maximal in at least one maximal subgroup.
    pub fn second_maximal(&self) -> Vec<NodeId> {
        let mut set: Vec<NodeId> = self
            .coatoms()
            .iter()
            .flat_map(|&m| self.down[m].iter().copied())
            .collect();
        set.sort_unstable();
        set.dedup();
        set
    }

    /// Nodes maximal in every maximal subgroup that contains them (and
    /// contained in at least one, without being maximal themselves).
    pub fn second_maximal_universal(&self) -> Vec<NodeId> {
        let coatoms = self.coatoms();
        (0..self.len())
            .filter(|&x| {
                let containing: Vec<NodeId> = coatoms
                    .iter()
                    .copied()
                    .filter(|&m| m != x && self.is_below(x, m))
                    .collect();
                !containing.is_empty()
                    && !coatoms.contains(&x)
                    && containing.iter().all(|m| self.down[*m].contains(&x))
            })
            .collect()
    }

    pub fn conjugate(&self, id: NodeId, g: usize) -> NodeId {
        let bits = self.table.conjugate(&self.nodes[id].bits, g);
        self.index[&bits]
    }

    pub fn subgroup_query(&self, id: NodeId) -> SubgroupInfo {
        let whole = self.table.whole();
        let h = &self.nodes[id].bits;
        let normalizer = self.index[&self.table.normalizer(&whole, h)];
        let centralizer = self.index[&self.table.centralizer(&whole, h)];
        let mut orbit: Vec<NodeId> = (0..self.table.order())
            .map(|g| self.conjugate(id, g))
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        orbit.sort_unstable();
        SubgroupInfo {
            normalizer,
            centralizer,
            is_normal: normalizer == self.top(),
            orbit,
        }
    }

    pub fn is_normal(&self, id: NodeId) -> bool {
        self.table.is_normal_in(&self.nodes[id].bits, &self.table.whole())
    }

    /// Conjugacy classes of nodes, each sorted, ordered by least member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<NodeId>> {
        let gens = self.group.generator_indices();
        let mut class_of = vec![usize::MAX; self.len()];
        let mut classes = Vec::new();
        for start in 0..self.len() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let mut members = vec![start];
            class_of[start] = c;
            let mut k = 0;
            while k < members.len() {
                let x = members[k];
                k += 1;
                for &g in &gens {
                    let y = self.conjugate(x, g);
                    if class_of[y] == usize::MAX {
                        class_of[y] = c;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes
    }

    /// Intersection of two nodes.
    pub fn meet(&self, a: NodeId, b: NodeId) -> NodeId {
        self.index[&self.nodes[a].bits.intersection(&self.nodes[b].bits)]
    }

    /// Smallest node containing both.
    pub fn join(&self, a: NodeId, b: NodeId) -> NodeId {
        let mut common = self.above[a].clone();
        common.intersect_with(&self.above[b]);
        common.first().expect("the whole group contains every node")
    }

    pub fn bounds(&self, a: NodeId, b: NodeId) -> (NodeId, NodeId) {
        (self.meet(a, b), self.join(a, b))
    }

    /// The node generated by the given elements.
    pub fn generated_by(&self, elements: &[usize]) -> NodeId {
        self.index[&self.table.closure(elements)]
    }

    /// Graphviz rendering of the Hasse diagram.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph lattice {\n  rankdir=BT;\n");
        for (i, node) in self.nodes.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{i}: |{}|\"];\n", node.order));
        }
        for (a, b) in self.hasse_edges() {
            out.push_str(&format!("  n{a} -> n{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

struct Found {
    bits: Bits,
    gens: Vec<usize>,
}

fn enumerate_subgroups(table: &CayleyTable, progress: bool) -> Vec<SubgroupSet> {
    let n = table.order();
    let mut found: Vec<Found> = Vec::new();
    let mut index: HashMap<Bits, usize> = HashMap::new();
    fn insert(
        found: &mut Vec<Found>,
        index: &mut HashMap<Bits, usize>,
        bits: Bits,
        gens: Vec<usize>,
    ) -> bool {
        if index.contains_key(&bits) {
            return false;
        }
        index.insert(bits.clone(), found.len());
        found.push(Found { bits, gens });
        true
    }

    insert(&mut found, &mut index, table.trivial(), Vec::new());
    let mut seeds = Vec::new();
    for g in 1..n {
        let cyclic = table.cyclic(g);
        let ord = cyclic.count();
        if insert(&mut found, &mut index, cyclic, vec![g]) && is_prime_power(ord) {
            seeds.push(g);
        }
    }

    let half = n / 2;
    let mut frontier: Vec<usize> = (0..found.len()).collect();
    let mut round = 0;
    while !frontier.is_empty() {
        round += 1;
        let known = &index;
        let fresh: Vec<Vec<Found>> = frontier
            .par_iter()
            .map(|&id| {
                let node = &found[id];
                let mut local: HashSet<Bits> = HashSet::new();
                let mut out = Vec::new();
                for &g in &seeds {
                    if node.bits.contains(g) {
                        continue;
                    }
                    let bits = table
                        .extend_bounded(&node.bits, &node.gens, &[g], half)
                        .unwrap_or_else(|| table.whole());
                    if known.contains_key(&bits) || !local.insert(bits.clone()) {
                        continue;
                    }
                    let mut gens = node.gens.clone();
                    gens.push(g);
                    out.push(Found { bits, gens });
                }
                out
            })
            .collect();
        let mut next = Vec::new();
        for f in fresh.into_iter().flatten() {
            if insert(&mut found, &mut index, f.bits, f.gens) {
                next.push(found.len() - 1);
            }
        }
        if progress {
            log::info!(
                "closure round {round}: {} new, {} total",
                next.len(),
                found.len()
            );
        }
        frontier = next;
    }
    // the whole group, in case no join reached it (e.g. trivial or cyclic G)
    let whole = table.whole();
    if !index.contains_key(&whole) {
        found.push(Found {
            bits: whole,
            gens: Vec::new(),
        });
    }
    found
        .into_iter()
        .map(|f| SubgroupSet::trusted(f.bits))
        .collect()
}

pub(crate) fn is_prime_power(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d)).unwrap();
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{named_group, NamedKind};

    fn lattice(kind: NamedKind, n: usize) -> Lattice {
        let g = named_group(kind, n, DEFAULT_CAP).unwrap();
        Lattice::enumerate(Arc::new(g)).unwrap()
    }

    #[test]
    fn trivial_group_has_one_node() {
        let l = lattice(NamedKind::Cyclic, 1);
        assert_eq!(l.len(), 1);
        assert_eq!(l.trivial(), l.top());
        assert!(l.atoms().is_empty());
        assert!(l.coatoms().is_empty());
    }

    #[test]
    fn prime_cyclic_is_a_two_element_chain() {
        let l = lattice(NamedKind::Cyclic, 5);
        assert_eq!(l.len(), 2);
        assert_eq!(l.atoms(), vec![l.top()]);
        assert_eq!(l.coatoms(), vec![l.trivial()]);
    }

    #[test]
    fn a4_counts() {
        let l = lattice(NamedKind::Alternating, 4);
        assert_eq!(l.len(), 10);
        let orders: Vec<usize> = l.nodes().iter().map(SubgroupSet::order).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 3, 3, 3, 4, 12]);
        let atoms: Vec<usize> = l.atoms().iter().map(|&a| l.order(a)).collect();
        assert_eq!(atoms, vec![2, 2, 2, 3, 3, 3, 3]);
        let coatoms: Vec<usize> = l.coatoms().iter().map(|&a| l.order(a)).collect();
        assert_eq!(coatoms, vec![3, 3, 3, 3, 4]);
    }

    #[test]
    fn s4_has_30_subgroups_and_8_maximal() {
        let l = lattice(NamedKind::Symmetric, 4);
        assert_eq!(l.len(), 30);
        assert_eq!(l.coatoms().len(), 8);
    }

    #[test]
    fn a5_has_59_subgroups() {
        let l = lattice(NamedKind::Alternating, 5);
        assert_eq!(l.len(), 59);
        let involutions = l.atoms().iter().filter(|&&a| l.order(a) == 2).count();
        assert_eq!(involutions, 15);
    }

    #[test]
    fn bounds_in_a4() {
        let l = lattice(NamedKind::Alternating, 4);
        let twos = l.nodes_of_order(2);
        assert_eq!(l.order(l.join(twos[0], twos[1])), 4);
        assert_eq!(l.meet(twos[0], twos[1]), l.trivial());
        for x in 0..l.len() {
            assert_eq!(l.bounds(x, x), (x, x));
            assert_eq!(l.meet(x, l.trivial()), l.trivial());
        }
    }

    #[test]
    fn normal_subgroups_have_singleton_orbits() {
        let l = lattice(NamedKind::Symmetric, 4);
        for x in 0..l.len() {
            let info = l.subgroup_query(x);
            assert_eq!(info.is_normal, info.orbit.len() == 1);
            assert_eq!(info.is_normal, l.is_normal(x));
            assert_eq!(info.orbit.len() * l.order(info.normalizer), 24);
        }
    }

    #[test]
    fn rejects_non_subgroup_nodes() {
        let g = Arc::new(named_group(NamedKind::Symmetric, 3, DEFAULT_CAP).unwrap());
        let bad = vec![Bits::from_indices(6, [0]), Bits::from_indices(6, [0, 1, 2])];
        assert!(Lattice::from_node_bits(g, bad).is_err());
    }

    #[test]
    fn prime_powers() {
        let pp: Vec<usize> = (1..30).filter(|&n| is_prime_power(n)).collect();
        assert_eq!(pp, vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]);
    }
}
