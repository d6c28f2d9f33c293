//! Explicit permutation realizations of the groups used throughout the crate:
//! the standard families, 2x2 linear groups, direct and semidirect products,
//! and quotients by normal subgroups.

use std::collections::VecDeque;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::group::{CayleyTable, PermGroup};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedKind {
    Symmetric,
    Alternating,
    Cyclic,
    Dihedral,
    KleinFour,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LinearKind {
    GL2,
    SL2,
    PSL2,
}

impl LinearKind {
    pub fn order(self, p: u64) -> u64 {
        match self {
            LinearKind::GL2 => (p * p - 1) * (p * p - p),
            LinearKind::SL2 => p * (p * p - 1),
            LinearKind::PSL2 if p == 2 => 6,
            LinearKind::PSL2 => p * (p * p - 1) / 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LinearKind::GL2 => "GL2",
            LinearKind::SL2 => "SL2",
            LinearKind::PSL2 => "PSL2",
        }
    }
}

fn cycle(points: impl IntoIterator<Item = usize>, degree: usize) -> Permutation {
    let pts: Vec<usize> = points.into_iter().collect();
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for (k, &p) in pts.iter().enumerate() {
        images[p] = pts[(k + 1) % pts.len()] as u32;
    }
    Permutation::from_images_unchecked(images)
}

fn factorial_capped(n: usize, cap: usize) -> Option<usize> {
    (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k).filter(|&v| v <= cap.saturating_mul(2)))
}

fn check_cap(order: u64, cap: usize) -> Result<()> {
    if order > cap as u64 {
        Err(Error::CapExceeded {
            cap,
            reached: usize::try_from(order).unwrap_or(usize::MAX),
        })
    } else {
        Ok(())
    }
}

/// Standard generators: symmetric `(1 2)`, `(1 2 ... n)`; alternating the
/// 3-cycles `(1 2 k)`; cyclic `(1 2 ... n)`; dihedral (order `2n`, `n >= 3`)
/// the rotation and the reflection `i -> n+1-i`. `n` is ignored for the
/// Klein four-group.
pub fn named_group(kind: NamedKind, n: usize, cap: usize) -> Result<PermGroup> {
    if n == 0 && kind != NamedKind::KleinFour {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let (degree, gens, order, label) = match kind {
        NamedKind::Symmetric => {
            let order = factorial_capped(n, cap).unwrap_or(usize::MAX);
            let gens = if n >= 2 {
                vec![cycle([0, 1], n), cycle(0..n, n)]
            } else {
                vec![]
            };
            (n, gens, order as u64, format!("S({n})"))
        }
        NamedKind::Alternating => {
            let order = if n < 2 {
                1
            } else {
                factorial_capped(n, cap).map_or(usize::MAX, |f| f / 2)
            };
            let gens = (2..n).map(|k| cycle([0, 1, k], n)).collect();
            (n, gens, order as u64, format!("A({n})"))
        }
        NamedKind::Cyclic => {
            let gens = if n >= 2 { vec![cycle(0..n, n)] } else { vec![] };
            (n, gens, n as u64, format!("C({n})"))
        }
        NamedKind::Dihedral => {
            if n < 3 {
                return Err(Error::InvalidParameter(
                    "dihedral groups need at least 3 points".into(),
                ));
            }
            let reflection = Permutation::from_images_unchecked(
                (0..n).map(|i| (n - 1 - i) as u32).collect(),
            );
            (n, vec![cycle(0..n, n), reflection], 2 * n as u64, format!("D({n})"))
        }
        NamedKind::KleinFour => (
            4,
            vec![
                Permutation::parse("(1 2)(3 4)", 4)?,
                Permutation::parse("(1 3)(2 4)", 4)?,
            ],
            4,
            "K4".to_string(),
        ),
    };
    check_cap(order, cap)?;
    Ok(PermGroup::generate(degree, gens, cap)?.with_label(label))
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn primitive_root(p: u64) -> u64 {
    (2..p)
        .find(|&g| {
            let mut x = 1;
            (1..p - 1).all(|_| {
                x = x * g % p;
                x != 1
            })
        })
        .unwrap_or(1)
}

/// `GL2(p)` and `SL2(p)` act on the `p^2 - 1` nonzero row vectors of the
/// plane; `PSL2(p)` acts on the `p + 1` points of the projective line.
pub fn linear_group(kind: LinearKind, p: u64, cap: usize) -> Result<PermGroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    check_cap(kind.order(p), cap)?;
    let label = format!("{}({p})", kind.name());
    let group = match kind {
        LinearKind::GL2 | LinearKind::SL2 => {
            let mut mats = vec![[1, 1, 0, 1], [1, 0, 1, 1]];
            if kind == LinearKind::GL2 {
                mats.push([primitive_root(p), 0, 0, 1]);
            }
            let degree = (p * p - 1) as usize;
            let gens = mats.iter().map(|m| matrix_action(m, p)).collect();
            PermGroup::generate(degree, gens, cap)?
        }
        LinearKind::PSL2 => {
            let inf = p;
            let translate: Vec<u32> = (0..=p)
                .map(|z| if z == inf { inf } else { (z + 1) % p } as u32)
                .collect();
            // z -> -1/z
            let invert: Vec<u32> = (0..=p)
                .map(|z| {
                    if z == inf {
                        0
                    } else if z == 0 {
                        inf
                    } else {
                        (p - mod_inverse(z, p)) % p
                    }
                } as u32)
                .collect();
            let gens = vec![
                Permutation::from_images(translate)?,
                Permutation::from_images(invert)?,
            ];
            PermGroup::generate(p as usize + 1, gens, cap)?
        }
    };
    Ok(group.with_label(label))
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    (1..p).find(|&x| a * x % p == 1).expect("nonzero residue")
}

/// Right action `v -> vM` of `M = [[a, b], [c, d]]` on nonzero vectors
/// `(x, y)`, indexed as `x + p*y - 1`.
fn matrix_action(m: &[u64; 4], p: u64) -> Permutation {
    let [a, b, c, d] = *m;
    let degree = (p * p - 1) as usize;
    let images = (1..p * p)
        .map(|v| {
            let (x, y) = (v % p, v / p);
            let nx = (x * a + y * c) % p;
            let ny = (x * b + y * d) % p;
            (nx + p * ny - 1) as u32
        })
        .collect::<Vec<_>>();
    debug_assert_eq!(images.len(), degree);
    Permutation::from_images_unchecked(images)
}

fn shifted(p: &Permutation, offset: usize, degree: usize) -> Permutation {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for (i, &img) in p.images().iter().enumerate() {
        images[i + offset] = img + offset as u32;
    }
    Permutation::from_images_unchecked(images)
}

/// `G x H` acting on the disjoint union of the two point sets.
pub fn direct_product(g: &PermGroup, h: &PermGroup, cap: usize) -> Result<PermGroup> {
    check_cap(g.order() as u64 * h.order() as u64, cap)?;
    let degree = g.degree() + h.degree();
    let gens = g
        .generators()
        .iter()
        .map(|x| shifted(x, 0, degree))
        .chain(h.generators().iter().map(|x| shifted(x, g.degree(), degree)))
        .collect();
    Ok(PermGroup::generate(degree, gens, cap)?
        .with_label(format!("prod({}, {})", g.label(), h.label())))
}

/// How each generator of the acting group `H` moves the generators of `N`:
/// `images[k][j]` is the image of `N`'s `j`-th generator under conjugation by
/// `H`'s `k`-th generator, `n -> h^-1 n h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionSpec {
    pub images: Vec<Vec<Permutation>>,
}

impl ActionSpec {
    /// The action fixing every generator of `N`.
    pub fn trivial(n: &PermGroup, h: &PermGroup) -> Self {
        Self {
            images: vec![n.generators().to_vec(); h.generators().len()],
        }
    }

    /// Parses `perm, perm, ... | perm, ...`: one `|`-separated block per
    /// generator of `H`, one comma-separated image per generator of `N`.
    /// Commas inside parentheses belong to the cycle notation.
    pub fn parse(text: &str, n_degree: usize) -> Result<Self> {
        let mut images = Vec::new();
        for block in text.split('|') {
            let mut row = Vec::new();
            for item in split_top_level(block, ',') {
                row.push(Permutation::parse(item, n_degree)?);
            }
            images.push(row);
        }
        Ok(Self { images })
    }

    pub fn to_text(&self) -> String {
        self.images
            .iter()
            .map(|row| {
                row.iter()
                    .map(Permutation::to_cycle_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .collect::<Vec<_>>()
            .join(" | ")
    }
}

/// Splits on `sep` outside parentheses, trimming each piece.
pub(crate) fn split_top_level(text: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(text[start..].trim());
    parts
}

/// Extends generator images to a map on all element ordinals, failing if the
/// assignment is not a well-defined homomorphism.
fn extend_to_homomorphism(
    table: &CayleyTable,
    gens: &[usize],
    images: &[usize],
    target: &CayleyTable,
) -> Option<Vec<usize>> {
    let n = table.order();
    let mut map = vec![usize::MAX; n];
    map[CayleyTable::IDENTITY] = CayleyTable::IDENTITY;
    let mut queue = VecDeque::from([CayleyTable::IDENTITY]);
    while let Some(x) = queue.pop_front() {
        for (&g, &img) in gens.iter().zip(images) {
            let y = table.mul(x, g);
            let val = target.mul(map[x], img);
            if map[y] == usize::MAX {
                map[y] = val;
                queue.push_back(y);
            } else if map[y] != val {
                return None;
            }
        }
    }
    Some(map)
}

/// `N x| H` in its right regular representation on `|N| * |H|` points.
/// The returned group's generators are those of `N`, then those of `H`.
pub fn semidirect_product(
    n: &PermGroup,
    h: &PermGroup,
    action: &ActionSpec,
    cap: usize,
) -> Result<PermGroup> {
    let (nn, hn) = (n.order(), h.order());
    check_cap(nn as u64 * hn as u64, cap)?;
    if action.images.len() != h.generators().len() {
        return Err(Error::InvalidAction(format!(
            "expected {} generator blocks, found {}",
            h.generators().len(),
            action.images.len()
        )));
    }
    let nt = n.table();
    let ht = h.table();
    let n_gens = n.generator_indices();

    // automorphism of N for each generator of H
    let mut gen_autos = Vec::with_capacity(action.images.len());
    for (k, row) in action.images.iter().enumerate() {
        if row.len() != n_gens.len() {
            return Err(Error::InvalidAction(format!(
                "block {} lists {} images for {} generators",
                k + 1,
                row.len(),
                n_gens.len()
            )));
        }
        let mut imgs = Vec::with_capacity(row.len());
        for p in row {
            imgs.push(n.index_of(p).ok_or_else(|| {
                Error::InvalidAction(format!("{p} is not an element of the normal factor"))
            })?);
        }
        let map = extend_to_homomorphism(&nt, &n_gens, &imgs, &nt).ok_or_else(|| {
            Error::InvalidAction(format!("block {} does not define a homomorphism", k + 1))
        })?;
        let mut hit = vec![false; nn];
        for &v in &map {
            if std::mem::replace(&mut hit[v], true) {
                return Err(Error::InvalidAction(format!(
                    "block {} is not bijective",
                    k + 1
                )));
            }
        }
        gen_autos.push(map);
    }

    // h -> automorphism, composed as a right action: auto(h c) = auto(h) then auto(c)
    let h_gens = h.generator_indices();
    let mut autos: Vec<Option<Vec<usize>>> = vec![None; hn];
    autos[CayleyTable::IDENTITY] = Some((0..nn).collect());
    let mut queue = VecDeque::from([CayleyTable::IDENTITY]);
    while let Some(x) = queue.pop_front() {
        for (k, &c) in h_gens.iter().enumerate() {
            let y = ht.mul(x, c);
            let composed: Vec<usize> = autos[x]
                .as_ref()
                .unwrap()
                .iter()
                .map(|&v| gen_autos[k][v])
                .collect();
            match &autos[y] {
                None => {
                    autos[y] = Some(composed);
                    queue.push_back(y);
                }
                Some(existing) if *existing != composed => {
                    return Err(Error::InvalidAction(
                        "the assignment is not compatible with the acting group's relations".into(),
                    ));
                }
                Some(_) => {}
            }
        }
    }
    let autos: Vec<Vec<usize>> = autos.into_iter().map(Option::unwrap).collect();

    // (n1, h1)(n2, h2) = (n1 * auto(h1^-1)(n2), h1 h2); point = n * |H| + h
    let degree = nn * hn;
    let right_mult = |gn: usize, gh: usize| -> Permutation {
        let mut images = vec![0u32; degree];
        for n1 in 0..nn {
            for h1 in 0..hn {
                let n2 = nt.mul(n1, autos[ht.inv(h1)][gn]);
                let h2 = ht.mul(h1, gh);
                images[n1 * hn + h1] = (n2 * hn + h2) as u32;
            }
        }
        Permutation::from_images_unchecked(images)
    };
    let gens = n_gens
        .iter()
        .map(|&g| right_mult(g, CayleyTable::IDENTITY))
        .chain(h_gens.iter().map(|&c| right_mult(CayleyTable::IDENTITY, c)))
        .collect();
    Ok(PermGroup::generate(degree.max(1), gens, cap)?
        .with_label(format!("sdp({}, {})", n.label(), h.label())))
}

/// The regular action of `G/N` on the cosets of `N`. Cosets are numbered in
/// increasing order of their least element ordinal.
pub fn quotient_group(g: &PermGroup, normal: &Bits) -> Result<PermGroup> {
    let t = g.table();
    if normal.len() != g.order() || !t.is_subgroup(normal) {
        return Err(Error::NotASubgroup(
            "selector does not name a subgroup of the group".into(),
        ));
    }
    if !t.is_normal_in(normal, &t.whole()) {
        return Err(Error::NotNormal);
    }
    let (label, reps) = coset_labels(&t, normal);
    let degree = reps.len();
    let gens = g
        .generator_indices()
        .into_iter()
        .map(|s| {
            let images = reps
                .iter()
                .map(|&r| label[t.mul(r, s)] as u32)
                .collect();
            Permutation::from_images_unchecked(images)
        })
        .collect();
    Ok(PermGroup::generate(degree, gens, g.order())?
        .with_label(format!("quot({})", g.label())))
}

/// Coset number of every element and the least element of every coset.
pub(crate) fn coset_labels(t: &CayleyTable, normal: &Bits) -> (Vec<usize>, Vec<usize>) {
    let n = t.order();
    let members: Vec<usize> = normal.iter().collect();
    let mut label = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if label[x] != usize::MAX {
            continue;
        }
        for &m in &members {
            label[t.mul(m, x)] = reps.len();
        }
        reps.push(x);
    }
    (label, reps)
}

/// The quaternion group in its regular representation on 8 points
/// (`1, i, -1, -i, j, k, -j, -k`).
pub fn quaternion8() -> PermGroup {
    let gens = vec![
        Permutation::parse("(1 2 3 4)(5 8 7 6)", 8).unwrap(),
        Permutation::parse("(1 5 3 7)(2 6 4 8)", 8).unwrap(),
    ];
    PermGroup::generate(8, gens, 8).unwrap().with_label("Q8")
}

/// `<a, b | a^8 = b^2 = 1, b^-1 a b = a^3>` acting on `Z/8` by `x -> x+1`
/// and `x -> 3x`.
pub fn semidihedral16() -> PermGroup {
    let gens = vec![
        Permutation::parse("(1 2 3 4 5 6 7 8)", 8).unwrap(),
        Permutation::parse("(2 4)(3 7)(6 8)", 8).unwrap(),
    ];
    PermGroup::generate(8, gens, 16).unwrap().with_label("SD16")
}

/// Generators of the order-75 group `<a, b, c | a^5 = b^5 = c^3 = 1,
/// [a, b] = 1, c^-1 a c = (ab)^-1, c^-1 b c = a>` as cycle strings for the
/// normal factor `Z5 x Z5` on points 1..10.
pub const ORDER75_ACTION: &str = "(1 5 4 3 2)(6 10 9 8 7), (1 2 3 4 5)";

/// The order-75 group above, realized as `(Z5 x Z5) x| Z3`. Its generators
/// are `a`, `b`, `c` in that order.
pub fn order75_group(cap: usize) -> Result<PermGroup> {
    let c5 = named_group(NamedKind::Cyclic, 5, cap)?;
    let normal = direct_product(&c5, &c5, cap)?;
    let acting = named_group(NamedKind::Cyclic, 3, cap)?;
    let action = ActionSpec::parse(ORDER75_ACTION, normal.degree())?;
    Ok(semidirect_product(&normal, &acting, &action, cap)?.with_label("@order75"))
}
