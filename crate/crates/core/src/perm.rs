//! Permutations on the points `0..degree`.
//!
//! Points are 0-based in memory and 1-based in every textual form. Products
//! read left to right: `a.compose(&b)` applies `a` first, then `b`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image array, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &img in &images {
            let img = img as usize;
            if img >= degree || seen[img] {
                return Err(Error::NotABijection { degree });
            }
            seen[img] = true;
        }
        Ok(Self {
            images: images.into_boxed_slice(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Self {
            images: images.into_boxed_slice(),
        }
    }

    /// Parses cycle notation such as `(1 2 3)(4 5)`, `(1,2)`, `()` or `id`.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        parse_cycles(text, degree)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    /// Apply `self`, then `other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Same as [`compose`](Self::compose) for operands known to share a degree.
    pub fn then(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Self {
            images: self
                .images
                .iter()
                .map(|&p| other.images[p as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.degree()];
        for (i, &p) in self.images.iter().enumerate() {
            inv[p as usize] = i as u32;
        }
        Self {
            images: inv.into_boxed_slice(),
        }
    }

    pub fn pow(&self, exp: u64) -> Self {
        let mut result = Self::identity(self.degree());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        result
    }

    /// Disjoint cycles of length at least two, each starting at its smallest
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.image(start);
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.image(next);
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }

    /// Least `k >= 1` with `self^k` the identity: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Canonical 1-based cycle string; the identity prints as `()`.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut out = String::new();
        for cycle in cycles {
            out.push('(');
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    out.push(' ');
                }
                out.push_str(&(p + 1).to_string());
            }
            out.push(')');
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.to_cycle_string(), self.degree())
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Parses `perm := "id" | "()" | cycle+`, `cycle := "(" int (sep int)+ ")"`,
/// `sep := "," | whitespace`, with 1-based point labels.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    let trimmed = text.trim();
    if trimmed == "id" || trimmed == "()" {
        return Ok(Permutation::identity(degree));
    }
    let offset = text.len() - text.trim_start().len();
    let bytes = trimmed.as_bytes();
    let err = |pos: usize, message: &str| Error::CycleSyntax {
        column: offset + pos + 1,
        message: message.to_string(),
    };

    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut used = vec![false; degree];
    let mut pos = 0;
    let mut cycles = 0;
    while pos < bytes.len() {
        if bytes[pos].is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        if bytes[pos] != b'(' {
            return Err(err(pos, "expected `(`"));
        }
        pos += 1;
        let mut cycle: Vec<usize> = Vec::new();
        loop {
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            if pos >= bytes.len() {
                return Err(err(pos, "unterminated cycle"));
            }
            if bytes[pos] == b')' {
                pos += 1;
                break;
            }
            if !cycle.is_empty() && bytes[pos] == b',' {
                pos += 1;
                while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                    pos += 1;
                }
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(err(pos, "expected a point label"));
            }
            let label: usize = trimmed[start..pos]
                .parse()
                .map_err(|_| err(start, "point label too large"))?;
            if label == 0 {
                return Err(err(start, "point labels are 1-based"));
            }
            if label > degree {
                return Err(Error::PointOutOfRange {
                    point: label,
                    degree,
                });
            }
            let point = label - 1;
            if used[point] {
                return Err(Error::RepeatedPoint { point: label });
            }
            used[point] = true;
            cycle.push(point);
            if pos < bytes.len() && !matches!(bytes[pos], b')' | b',') && !bytes[pos].is_ascii_whitespace() {
                return Err(err(pos, "unexpected character"));
            }
        }
        if cycle.len() < 2 {
            return Err(err(pos - 1, "a cycle needs at least two points"));
        }
        for (k, &p) in cycle.iter().enumerate() {
            images[p] = cycle[(k + 1) % cycle.len()] as u32;
        }
        cycles += 1;
    }
    if cycles == 0 {
        return Err(err(0, "empty permutation text"));
    }
    Ok(Permutation::from_images_unchecked(images))
}
