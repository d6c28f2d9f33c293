use std::cmp::Ordering;

/// Fixed-length bitset over element ordinals.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Bits {
    len: usize,
    words: Vec<u64>,
}

impl Bits {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut bits = Self::new(len);
        for i in 0..len {
            bits.insert(i);
        }
        bits
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = Self::new(len);
        for i in indices {
            bits.insert(i);
        }
        bits
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    /// Returns true if the bit was newly set.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let w = &mut self.words[i >> 6];
        let mask = 1u64 << (i & 63);
        let fresh = *w & mask == 0;
        *w |= mask;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i >> 6] &= !(1u64 << (i & 63));
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn union_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + tz)
            })
        })
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Little-endian hex of the backing words, 16 digits per word.
    pub fn to_hex(&self) -> String {
        let mut bytes = Vec::with_capacity(self.words.len() * 8);
        for w in &self.words {
            bytes.extend_from_slice(&w.to_le_bytes());
        }
        hex::encode(bytes)
    }

    pub fn from_hex(len: usize, text: &str) -> Option<Self> {
        let bytes = hex::decode(text).ok()?;
        let nwords = len.div_ceil(64);
        if bytes.len() != nwords * 8 {
            return None;
        }
        let words: Vec<u64> = bytes
            .chunks_exact(8)
            .map(|c| u64::from_le_bytes(c.try_into().unwrap()))
            .collect();
        let bits = Self { len, words };
        if bits.iter().any(|i| i >= len) {
            return None;
        }
        Some(bits)
    }

    /// Lexicographic comparison of the ascending member lists; exact for sets
    /// of equal size, which is the only case node ordering relies on.
    pub fn cmp_members(&self, other: &Self) -> Ordering {
        for (a, b) in self.words.iter().zip(&other.words) {
            if a != b {
                let diff = a ^ b;
                let low = diff & diff.wrapping_neg();
                // the set owning the first differing ordinal lists it earlier
                return if a & low != 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut b = Bits::new(130);
        assert!(b.insert(0));
        assert!(b.insert(129));
        assert!(!b.insert(129));
        assert_eq!(b.count(), 2);
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![0, 129]);
        b.remove(0);
        assert_eq!(b.first(), Some(129));
        let full = Bits::full(130);
        assert!(b.is_subset(&full));
        assert!(!full.is_subset(&b));
        assert_eq!(full.intersection(&b), b);
    }

    #[test]
    fn hex_roundtrip() {
        let b = Bits::from_indices(70, [1, 5, 64, 69]);
        assert_eq!(Bits::from_hex(70, &b.to_hex()), Some(b));
        assert_eq!(Bits::from_hex(70, "zz"), None);
        // bit beyond len
        let wide = Bits::from_indices(128, [100]);
        assert_eq!(Bits::from_hex(70, &wide.to_hex()), None);
    }

    #[test]
    fn member_order() {
        let a = Bits::from_indices(10, [0, 1, 5]);
        let b = Bits::from_indices(10, [0, 2, 3]);
        assert_eq!(a.cmp_members(&b), Ordering::Less);
        assert_eq!(b.cmp_members(&a), Ordering::Greater);
        assert_eq!(a.cmp_members(&a), Ordering::Equal);
    }
}
