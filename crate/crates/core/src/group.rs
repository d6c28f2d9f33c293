//! Permutation groups stored as full, canonically sorted element tables.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default maximum group order admitted by constructors and the lattice.
pub const DEFAULT_CAP: usize = 5000;

pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    label: String,
    table: OnceLock<Arc<CayleyTable>>,
}

impl PermGroup {
    /// Closes `gens` under composition. The empty generator list gives the
    /// trivial group.
    pub fn generate(degree: usize, gens: Vec<Permutation>, cap: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidParameter("degree must be positive".into()));
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let identity = Permutation::identity(degree);
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        seen.insert(identity.clone(), ());
        let mut found = vec![identity];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let next = found[i].then(g);
                if !seen.contains_key(&next) {
                    seen.insert(next.clone(), ());
                    found.push(next);
                    if found.len() > cap {
                        return Err(Error::CapExceeded {
                            cap,
                            reached: found.len(),
                        });
                    }
                    queue.push_back(found.len() - 1);
                }
            }
        }
        Ok(Self::from_elements(degree, gens, found))
    }

    fn from_elements(degree: usize, generators: Vec<Permutation>, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Self {
            degree,
            generators,
            elements,
            index,
            label: String::new(),
            table: OnceLock::new(),
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    /// Ordinals of the generators in the element table.
    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators
            .iter()
            .map(|g| self.index[g])
            .collect()
    }

    /// The multiplication table, built on first use.
    pub fn table(&self) -> Arc<CayleyTable> {
        self.table
            .get_or_init(|| Arc::new(CayleyTable::build(self)))
            .clone()
    }

    /// The subgroup generated by `gens`, as a set of element ordinals.
    pub fn subgroup_of(&self, gens: &[Permutation]) -> Result<Bits> {
        let mut idx = Vec::with_capacity(gens.len());
        for g in gens {
            idx.push(self.index_of(g).ok_or_else(|| {
                Error::NotASubgroup(format!("{g} is not an element of the group"))
            })?);
        }
        Ok(self.table().closure(&idx))
    }

    /// The subgroup on `bits` as a standalone group with the same degree.
    pub fn subgroup_as_group(&self, bits: &Bits) -> PermGroup {
        let elements: Vec<Permutation> = bits.iter().map(|i| self.elements[i].clone()).collect();
        let table = self.table();
        let gens = table
            .generating_set(bits)
            .into_iter()
            .map(|i| self.elements[i].clone())
            .collect();
        PermGroup::from_elements(self.degree, gens, elements)
    }

    /// SHA-256 over the degree and the sorted element image arrays.
    pub fn digest(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut hasher = Sha256::new();
        hasher.update((self.degree as u64).to_le_bytes());
        for e in &self.elements {
            for &x in e.images() {
                hasher.update(x.to_le_bytes());
            }
        }
        hex::encode(hasher.finalize())
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("label", &self.label)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        Self {
            degree: self.degree,
            generators: self.generators.clone(),
            elements: self.elements.clone(),
            index: self.index.clone(),
            label: self.label.clone(),
            table: self.table.clone(),
        }
    }
}

/// Multiplication table over element ordinals. The identity is ordinal 0
/// because it is the lexicographically least image array.
pub struct CayleyTable {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl CayleyTable {
    fn build(group: &PermGroup) -> Self {
        let n = group.order();
        let gens = group.generator_indices();
        // right multiplication by each generator
        let right: Vec<Vec<u32>> = group
            .elements
            .iter()
            .map(|x| {
                group
                    .generators
                    .iter()
                    .map(|g| group.index[&x.then(g)] as u32)
                    .collect()
            })
            .collect();
        // spanning tree: every element b is parent[b] * gens[via[b]]
        let mut parent = vec![u32::MAX; n];
        let mut via = vec![0usize; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([0usize]);
        parent[0] = 0;
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for k in 0..gens.len() {
                let y = right[x][k] as usize;
                if parent[y] == u32::MAX {
                    parent[y] = x as u32;
                    via[y] = k;
                    queue.push_back(y);
                }
            }
        }
        debug_assert_eq!(order.len(), n);
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            let row = &mut mul[a * n..(a + 1) * n];
            row[0] = a as u32;
            for &b in &order[1..] {
                let prev = row[parent[b] as usize] as usize;
                row[b] = right[prev][via[b]];
            }
        }
        let mut inv = vec![0u32; n];
        for a in 0..n {
            let row = &mul[a * n..(a + 1) * n];
            let b = row.iter().position(|&x| x == 0).unwrap();
            inv[a] = b as u32;
        }
        Self { n, mul, inv }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub const IDENTITY: usize = 0;

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g^-1 x g`
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `a^-1 b^-1 a b`
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != Self::IDENTITY {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        let mut x = Self::IDENTITY;
        for _ in 0..e {
            x = self.mul(x, a);
        }
        x
    }

    pub fn cyclic(&self, a: usize) -> Bits {
        let mut bits = Bits::new(self.n);
        let mut x = a;
        bits.insert(Self::IDENTITY);
        while bits.insert(x) {
            x = self.mul(x, a);
        }
        bits
    }

    pub fn trivial(&self) -> Bits {
        Bits::from_indices(self.n, [Self::IDENTITY])
    }

    pub fn whole(&self) -> Bits {
        Bits::full(self.n)
    }

    /// Subgroup generated by the given element ordinals.
    pub fn closure(&self, gens: &[usize]) -> Bits {
        self.extend(&self.trivial(), &[], gens)
    }

    /// `<H, extra>` where `H` is the subgroup `base` generated by
    /// `base_gens`. Elements are added a whole right coset of `H` at a time.
    pub fn extend(&self, base: &Bits, base_gens: &[usize], extra: &[usize]) -> Bits {
        self.extend_bounded(base, base_gens, extra, usize::MAX)
            .unwrap_or_else(|| self.whole())
    }

    /// Like [`extend`](Self::extend) but gives up (returning `None`) once the
    /// partial closure is larger than `limit`.
    pub fn extend_bounded(
        &self,
        base: &Bits,
        base_gens: &[usize],
        extra: &[usize],
        limit: usize,
    ) -> Option<Bits> {
        let base_elems: Vec<usize> = base.iter().collect();
        let gens: Vec<usize> = base_gens.iter().chain(extra).copied().collect();
        let mut bits = base.clone();
        let mut count = base_elems.len();
        let mut reps = vec![Self::IDENTITY];
        let mut i = 0;
        while i < reps.len() {
            let r = reps[i];
            i += 1;
            for &s in &gens {
                let y = self.mul(r, s);
                if bits.contains(y) {
                    continue;
                }
                for &h in &base_elems {
                    bits.insert(self.mul(h, y));
                }
                count += base_elems.len();
                if count > limit {
                    return None;
                }
                reps.push(y);
            }
        }
        Some(bits)
    }

    pub fn is_subgroup(&self, bits: &Bits) -> bool {
        if !bits.contains(Self::IDENTITY) {
            return false;
        }
        let members: Vec<usize> = bits.iter().collect();
        members
            .iter()
            .all(|&a| members.iter().all(|&b| bits.contains(self.mul(a, b))))
    }

    /// A small generating set, picked greedily in ordinal order.
    pub fn generating_set(&self, bits: &Bits) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.trivial();
        let target = bits.count();
        // prefer elements of large order so few generators are needed
        let mut members: Vec<usize> = bits.iter().collect();
        members.sort_by_key(|&x| std::cmp::Reverse(self.element_order(x)));
        for x in members {
            if span.count() == target {
                break;
            }
            if !span.contains(x) {
                span = self.extend(&span, &gens, &[x]);
                gens.push(x);
            }
        }
        gens
    }

    pub fn conjugate(&self, bits: &Bits, g: usize) -> Bits {
        Bits::from_indices(self.n, bits.iter().map(|x| self.conj(x, g)))
    }

    /// Elements of `within` normalizing `h`.
    pub fn normalizer(&self, within: &Bits, h: &Bits) -> Bits {
        let gens = self.generating_set(h);
        Bits::from_indices(
            self.n,
            within
                .iter()
                .filter(|&g| gens.iter().all(|&x| h.contains(self.conj(x, g)))),
        )
    }

    /// Elements of `within` commuting with every element of `h`.
    pub fn centralizer(&self, within: &Bits, h: &Bits) -> Bits {
        let gens = self.generating_set(h);
        Bits::from_indices(
            self.n,
            within
                .iter()
                .filter(|&g| gens.iter().all(|&x| self.mul(x, g) == self.mul(g, x))),
        )
    }

    /// Is `h` normal in `k`? Assumes `h` is a subgroup of `k`.
    pub fn is_normal_in(&self, h: &Bits, k: &Bits) -> bool {
        let hg = self.generating_set(h);
        let kg = self.generating_set(k);
        kg.iter()
            .all(|&g| hg.iter().all(|&x| h.contains(self.conj(x, g))))
    }

    /// `[A, B]`, generated by all commutators `[a, b]`.
    pub fn commutator_subgroup(&self, a: &Bits, b: &Bits) -> Bits {
        let mut gens = Vec::new();
        let mut span = self.trivial();
        for x in a.iter() {
            for y in b.iter() {
                let c = self.commutator(x, y);
                if !span.contains(c) {
                    span = self.extend(&span, &gens, &[c]);
                    gens.push(c);
                }
            }
        }
        span
    }

    pub fn center(&self, h: &Bits) -> Bits {
        self.centralizer(h, h)
    }

    pub fn is_abelian(&self, h: &Bits) -> bool {
        let gens = self.generating_set(h);
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Derived series `H >= H' >= H'' ...` down to its terminal member.
    pub fn derived_series(&self, h: &Bits) -> Vec<Bits> {
        let mut series = vec![h.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.commutator_subgroup(last, last);
            if &next == last {
                break;
            }
            series.push(next);
        }
        series
    }

    /// Lower central series `H >= [H,H] >= [[H,H],H] ...` to its terminal member.
    pub fn lower_central_series(&self, h: &Bits) -> Vec<Bits> {
        let mut series = vec![h.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.commutator_subgroup(last, h);
            if &next == last {
                break;
            }
            series.push(next);
        }
        series
    }

    pub fn is_solvable(&self, h: &Bits) -> bool {
        self.derived_series(h).last().unwrap().count() == 1
    }

    pub fn is_nilpotent(&self, h: &Bits) -> bool {
        self.lower_central_series(h).last().unwrap().count() == 1
    }
}
