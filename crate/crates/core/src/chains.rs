//! Lengths of maximal chains `H = H0 < H1 < ... < Hr = G` (each term maximal
//! in the next), gradedness of intervals, and the count of ungraded
//! subgroups.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Lattice, NodeId};

/// Default limit for the exhaustive chain enumerator.
pub const DEFAULT_CHAIN_CAP: usize = 1_000_000;

/// A set of chain lengths, bit `r` standing for length `r`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct LengthSet(u64);

impl LengthSet {
    pub const EMPTY: LengthSet = LengthSet(0);

    pub fn single(r: usize) -> Self {
        LengthSet(1 << r)
    }

    pub fn from_lengths(lengths: impl IntoIterator<Item = usize>) -> Self {
        LengthSet(lengths.into_iter().fold(0, |m, r| m | 1 << r))
    }

    pub fn contains(self, r: usize) -> bool {
        r < 64 && self.0 >> r & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn min(self) -> Option<usize> {
        (!self.is_empty()).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (!self.is_empty()).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// All members, ascending.
    pub fn to_vec(self) -> Vec<usize> {
        (0..64).filter(|&r| self.contains(r)).collect()
    }

    fn shifted(self) -> Self {
        LengthSet(self.0 << 1)
    }

    fn union(self, other: Self) -> Self {
        LengthSet(self.0 | other.0)
    }
}

/// For every node, the lengths of its maximal chains to the whole group.
pub fn length_sets(lattice: &Lattice) -> Vec<LengthSet> {
    interval_length_sets(lattice, lattice.top())
}

/// For every node below `upper`, the lengths of its maximal chains to
/// `upper`; nodes not below `upper` get the empty set.
pub fn interval_length_sets(lattice: &Lattice, upper: NodeId) -> Vec<LengthSet> {
    let mut sets = vec![LengthSet::EMPTY; lattice.len()];
    sets[upper] = LengthSet::single(0);
    // node ids are sorted by order, so every cover of x has a larger id
    for x in (0..upper).rev() {
        if !lattice.is_below(x, upper) {
            continue;
        }
        sets[x] = lattice
            .covers(x)
            .iter()
            .filter(|&&y| lattice.is_below(y, upper))
            .fold(LengthSet::EMPTY, |acc, &y| acc.union(sets[y].shifted()));
    }
    sets
}

/// All maximal chains from `lower` to `upper` have the same length.
pub fn is_graded_interval(lattice: &Lattice, lower: NodeId, upper: NodeId) -> bool {
    lattice.is_below(lower, upper) && interval_length_sets(lattice, upper)[lower].len() == 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    pub subject: NodeId,
    pub subject_order: usize,
    pub lengths: Vec<usize>,
    pub graded: bool,
    pub witness_short: Vec<NodeId>,
    pub witness_long: Vec<NodeId>,
}

/// Length set of maximal chains from `subject` to the whole group, with
/// witness chains of minimal and maximal length.
pub fn chain_length_set(lattice: &Lattice, subject: NodeId) -> Result<ChainReport> {
    if subject >= lattice.len() {
        return Err(Error::NotANode);
    }
    let sets = length_sets(lattice);
    Ok(report_from_sets(lattice, &sets, subject))
}

fn report_from_sets(lattice: &Lattice, sets: &[LengthSet], subject: NodeId) -> ChainReport {
    let lengths = sets[subject];
    let (min, max) = (lengths.min().unwrap(), lengths.max().unwrap());
    ChainReport {
        subject,
        subject_order: lattice.order(subject),
        lengths: lengths.to_vec(),
        graded: min == max,
        witness_short: witness(lattice, sets, subject, min),
        witness_long: witness(lattice, sets, subject, max),
    }
}

/// Backtracks a chain of exactly `length` covers, taking the least node id
/// that can still finish the chain at each step.
fn witness(lattice: &Lattice, sets: &[LengthSet], start: NodeId, length: usize) -> Vec<NodeId> {
    let mut chain = vec![start];
    let mut current = start;
    for remaining in (0..length).rev() {
        current = lattice
            .covers(current)
            .iter()
            .copied()
            .filter(|&y| sets[y].contains(remaining))
            .min()
            .expect("length set promises a continuation");
        chain.push(current);
    }
    chain
}

/// Every maximal chain from `subject` to the whole group, by depth-first
/// search. Fails once more than `cap` chains have been produced.
pub fn enumerate_chains(lattice: &Lattice, subject: NodeId, cap: usize) -> Result<Vec<Vec<NodeId>>> {
    if subject >= lattice.len() {
        return Err(Error::NotANode);
    }
    let mut chains = Vec::new();
    let mut path = vec![subject];
    dfs(lattice, &mut path, &mut chains, cap)?;
    Ok(chains)
}

fn dfs(
    lattice: &Lattice,
    path: &mut Vec<NodeId>,
    out: &mut Vec<Vec<NodeId>>,
    cap: usize,
) -> Result<()> {
    let last = *path.last().unwrap();
    if last == lattice.top() {
        if out.len() == cap {
            return Err(Error::ChainCapExceeded { cap });
        }
        out.push(path.clone());
        return Ok(());
    }
    for &y in lattice.covers(last) {
        path.push(y);
        dfs(lattice, path, out, cap)?;
        path.pop();
    }
    Ok(())
}

/// Distinct chain lengths seen by the exhaustive enumerator.
pub fn enumerated_lengths(lattice: &Lattice, subject: NodeId, cap: usize) -> Result<LengthSet> {
    Ok(LengthSet::from_lengths(
        enumerate_chains(lattice, subject, cap)?
            .iter()
            .map(|c| c.len() - 1),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaReport {
    pub value: usize,
    pub offenders: Vec<NodeId>,
}

impl DeltaReport {
    /// Offender counts keyed by subgroup order.
    pub fn by_order(&self, lattice: &Lattice) -> std::collections::BTreeMap<usize, usize> {
        let mut hist = std::collections::BTreeMap::new();
        for &x in &self.offenders {
            *hist.entry(lattice.order(x)).or_insert(0) += 1;
        }
        hist
    }
}

/// The number of subgroups whose maximal chains to the whole group do not
/// all have the same length.
pub fn delta(lattice: &Lattice) -> DeltaReport {
    let sets = length_sets(lattice);
    let offenders: Vec<NodeId> = (0..lattice.len()).filter(|&x| sets[x].len() > 1).collect();
    DeltaReport {
        value: offenders.len(),
        offenders,
    }
}

/// Chain reports for every node.
pub fn all_reports(lattice: &Lattice) -> Vec<ChainReport> {
    let sets = length_sets(lattice);
    (0..lattice.len())
        .map(|x| report_from_sets(lattice, &sets, x))
        .collect()
}

/// Is every maximal chain of every listed node to the whole group of equal length?
pub fn all_graded(lattice: &Lattice, nodes: &[NodeId]) -> bool {
    let sets = length_sets(lattice);
    nodes.iter().all(|&x| sets[x].len() == 1)
}
