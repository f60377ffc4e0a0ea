//! Irreducible reduced root systems of types A, B, C, D and G2.
//!
//! Roots live in simple-root coordinates with Bourbaki numbering:
//!
//! | type | simple roots (orthonormal ε basis) |
//! |------|-------------------------------------|
//! | A_r  | α_i = ε_i − ε_{i+1}, i = 1..r |
//! | B_r  | α_i = ε_i − ε_{i+1} (i < r), α_r = ε_r (short) |
//! | C_r  | α_i = ε_i − ε_{i+1} (i < r), α_r = 2ε_r (long) |
//! | D_r  | α_i = ε_i − ε_{i+1} (i < r), α_r = ε_{r−1} + ε_r |
//! | G_2  | α_1 short, α_2 long, (α_1,α_1) = 2, (α_2,α_2) = 6 |
//!
//! The Cartan matrix is `A[i][j] = <α_i, α_j^∨> = 2(α_i,α_j)/(α_j,α_j)`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Field, FieldDescriptor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootType {
    A,
    B,
    C,
    D,
    G,
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            RootType::A => "A",
            RootType::B => "B",
            RootType::C => "C",
            RootType::D => "D",
            RootType::G => "G",
        };
        f.write_str(c)
    }
}

impl FromStr for RootType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(RootType::A),
            "B" => Ok(RootType::B),
            "C" => Ok(RootType::C),
            "D" => Ok(RootType::D),
            "G" => Ok(RootType::G),
            other => Err(Error::UnsupportedType(other.to_string())),
        }
    }
}

/// Parses a label such as `A2`, `B2` or `G2` into type and rank.
pub fn parse_label(label: &str) -> Result<(RootType, usize)> {
    let label = label.trim();
    let mut chars = label.chars();
    let t: RootType = chars.next().map(|c| c.to_string()).unwrap_or_default().parse()?;
    let rank = chars
        .as_str()
        .parse::<usize>()
        .map_err(|_| Error::UnsupportedType(label.to_string()))?;
    Ok((t, rank))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub coords: Vec<i32>,
}

impl Root {
    pub fn new(coords: Vec<i32>) -> Self {
        Root { coords }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i] = 1;
        Root { coords }
    }

    pub fn height(&self) -> i32 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.height() > 0
    }

    pub fn neg(&self) -> Root {
        Root { coords: self.coords.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &Root) -> Root {
        Root { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect() }
    }

    pub fn scaled(&self, k: i32) -> Root {
        Root { coords: self.coords.iter().map(|c| k * c).collect() }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HeightOrder {
    Less,
    Greater,
    Incomparable,
    Equal,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    kind: RootType,
    rank: usize,
    /// positive roots first, then their negatives in the same order
    roots: Vec<Root>,
    index: HashMap<Vec<i32>, usize>,
    gram: Vec<Vec<i64>>,
    cartan: Vec<Vec<i32>>,
    weyl: Vec<Vec<usize>>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.rank == other.rank
    }
}

impl Eq for RootSystem {}

fn supported(kind: RootType, rank: usize) -> bool {
    match kind {
        RootType::A => (1..=8).contains(&rank),
        RootType::B | RootType::C => (2..=4).contains(&rank),
        RootType::D => (3..=4).contains(&rank),
        RootType::G => rank == 2,
    }
}

/// Gram matrix of the simple roots.
fn gram_matrix(kind: RootType, r: usize) -> Vec<Vec<i64>> {
    if kind == RootType::G {
        return vec![vec![2, -3], vec![-3, 6]];
    }
    let dim = if kind == RootType::A { r + 1 } else { r };
    let mut simple: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            let mut v = vec![0i64; dim];
            if i + 1 < dim {
                v[i] = 1;
                v[i + 1] = -1;
            }
            v
        })
        .collect();
    match kind {
        RootType::B => {
            simple[r - 1] = vec![0; dim];
            simple[r - 1][r - 1] = 1;
        }
        RootType::C => {
            simple[r - 1] = vec![0; dim];
            simple[r - 1][r - 1] = 2;
        }
        RootType::D => {
            simple[r - 1] = vec![0; dim];
            simple[r - 1][r - 2] = 1;
            simple[r - 1][r - 1] = 1;
        }
        _ => {}
    }
    let dot = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>();
    (0..r).map(|i| (0..r).map(|j| dot(&simple[i], &simple[j])).collect()).collect()
}

/// Builds a root system. Type C_r (including A1 = C1 and B2 = C2) is
/// rejected over fields of characteristic 2.
pub fn build_root_system(kind: RootType, rank: usize, field_hint: &FieldDescriptor) -> Result<RootSystem> {
    if !supported(kind, rank) {
        return Err(Error::UnsupportedType(format!("{kind}{rank}")));
    }
    if field_hint.characteristic() == 2 {
        let c_type = matches!((kind, rank), (RootType::A, 1) | (RootType::B, 2) | (RootType::C, _));
        if c_type {
            return Err(Error::ExcludedInChar2(format!("{kind}{rank}")));
        }
    }
    Ok(RootSystem::new(kind, rank))
}

impl RootSystem {
    fn new(kind: RootType, r: usize) -> Self {
        let gram = gram_matrix(kind, r);
        let cartan: Vec<Vec<i32>> =
            (0..r).map(|i| (0..r).map(|j| (2 * gram[i][j] / gram[j][j]) as i32).collect()).collect();

        let pairing = |b: &[i32], j: usize| -> i32 { (0..r).map(|k| b[k] * cartan[k][j]).sum() };
        let mut known: BTreeSet<Vec<i32>> = BTreeSet::new();
        let mut layer: Vec<Vec<i32>> = (0..r).map(|i| Root::simple(r, i).coords).collect();
        let mut positive: Vec<Vec<i32>> = Vec::new();
        while !layer.is_empty() {
            layer.sort_by(|a, b| b.cmp(a));
            layer.dedup();
            for b in &layer {
                known.insert(b.clone());
            }
            let mut next = Vec::new();
            for b in &layer {
                for i in 0..r {
                    let mut p = 0;
                    let mut down = b.clone();
                    loop {
                        down[i] -= 1;
                        if known.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let q = p - pairing(b, i);
                    if q > 0 {
                        let mut up = b.clone();
                        up[i] += 1;
                        next.push(up);
                    }
                }
            }
            positive.extend(layer);
            layer = next;
        }

        let mut roots: Vec<Root> = positive.iter().cloned().map(Root::new).collect();
        roots.extend(positive.iter().map(|c| Root::new(c.clone()).neg()));
        let index: HashMap<Vec<i32>, usize> = roots.iter().enumerate().map(|(i, b)| (b.coords.clone(), i)).collect();

        let weyl = (0..r)
            .map(|i| {
                roots
                    .iter()
                    .map(|b| {
                        let k = pairing(&b.coords, i);
                        let mut img = b.coords.clone();
                        img[i] -= k;
                        index[&img]
                    })
                    .collect()
            })
            .collect();

        RootSystem { kind, rank: r, roots, index, gram, cartan, weyl }
    }

    pub fn kind(&self) -> RootType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }

    /// All roots: positive ones in (height, descending lex) order, then negatives.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.num_positive()]
    }

    pub fn index_of(&self, b: &Root) -> Option<usize> {
        self.index.get(&b.coords).copied()
    }

    pub fn index_of_coords(&self, c: &[i32]) -> Option<usize> {
        self.index.get(c).copied()
    }

    pub fn contains(&self, b: &Root) -> bool {
        self.index.contains_key(&b.coords)
    }

    /// Index of −β given the index of β.
    pub fn neg_index(&self, i: usize) -> usize {
        let n = self.num_positive();
        if i < n {
            i + n
        } else {
            i - n
        }
    }

    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn gram_matrix(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// Simple reflections as permutations of root indices.
    pub fn weyl_generators(&self) -> &[Vec<usize>] {
        &self.weyl
    }

    pub fn inner(&self, a: &Root, b: &Root) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if a.coords[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += a.coords[i] as i64 * b.coords[j] as i64 * self.gram[i][j];
            }
        }
        s
    }

    pub fn norm2(&self, a: &Root) -> i64 {
        self.inner(a, a)
    }

    /// `<β, α_j^∨>`
    pub fn pairing_simple(&self, b: &Root, j: usize) -> i32 {
        (0..self.rank).map(|k| b.coords[k] * self.cartan[k][j]).sum()
    }

    /// `<β, γ^∨> = 2(β,γ)/(γ,γ)`
    pub fn pairing(&self, b: &Root, g: &Root) -> i32 {
        (2 * self.inner(b, g) / self.norm2(g)) as i32
    }

    /// Coordinates of the coroot `h_β` over `h_{α_1}..h_{α_r}`.
    pub fn coroot_coords(&self, b: &Root) -> Vec<i32> {
        let nb = self.norm2(b);
        (0..self.rank)
            .map(|k| {
                let num = b.coords[k] as i64 * self.gram[k][k];
                debug_assert_eq!(num % nb, 0);
                (num / nb) as i32
            })
            .collect()
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u64 {
        let fact = |n: usize| (1..=n as u64).product::<u64>();
        let r = self.rank;
        match self.kind {
            RootType::A => fact(r + 1),
            RootType::B | RootType::C => (1u64 << r) * fact(r),
            RootType::D => (1u64 << (r - 1)) * fact(r),
            RootType::G => 12,
        }
    }

    /// Largest `k` with `(ad e_β)^k ≠ 0`: 2 for simply and doubly laced types, 3 for G2.
    pub fn nilpotency_index(&self) -> u32 {
        if self.kind == RootType::G {
            3
        } else {
            2
        }
    }

    fn check(&self, b: &Root) -> Result<()> {
        if b.coords.len() != self.rank || !self.contains(b) {
            return Err(Error::NotARoot(b.coords.clone()));
        }
        Ok(())
    }

    pub fn height_compare(&self, a: &Root, b: &Root) -> Result<HeightOrder> {
        self.check(a)?;
        self.check(b)?;
        let d = b.sub(a);
        Ok(if d.coords.iter().all(|&c| c == 0) {
            HeightOrder::Equal
        } else if d.coords.iter().all(|&c| c >= 0) {
            HeightOrder::Less
        } else if d.coords.iter().all(|&c| c <= 0) {
            HeightOrder::Greater
        } else {
            HeightOrder::Incomparable
        })
    }

    /// Largest `p ≥ 0` with `β − pα ∈ R`.
    pub fn chain_down_length(&self, a: &Root, b: &Root) -> Result<u32> {
        self.check(a)?;
        self.check(b)?;
        if a == b || *a == b.neg() {
            return Err(Error::ProportionalRoots);
        }
        let mut p = 0;
        let mut cur = b.sub(a);
        while self.contains(&cur) {
            p += 1;
            cur = cur.sub(a);
        }
        Ok(p)
    }

    /// Largest `q ≥ 0` with `β + qα ∈ R`.
    pub fn chain_up_length(&self, a: &Root, b: &Root) -> Result<u32> {
        self.chain_down_length(&a.neg(), b)
    }

    /// `α_i(h)` for `h` in coroot coordinates.
    pub fn simple_value<F: Field>(&self, field: &F, i: usize, h: &[F::Elem]) -> F::Elem {
        let mut acc = field.zero();
        for (j, c) in h.iter().enumerate() {
            let a = self.cartan[i][j];
            if a != 0 && !field.is_zero(c) {
                acc = field.add(&acc, &field.mul(c, &field.from_i64(a as i64)));
            }
        }
        acc
    }

    /// `β(h)` for `h` in coroot coordinates.
    pub fn root_value<F: Field>(&self, field: &F, b: &Root, h: &[F::Elem]) -> F::Elem {
        let mut acc = field.zero();
        for j in 0..self.rank {
            let w = self.pairing_simple(b, j);
            if w != 0 && !field.is_zero(&h[j]) {
                acc = field.add(&acc, &field.mul(&h[j], &field.from_i64(w as i64)));
            }
        }
        acc
    }

    /// Simple reflection `s_i` acting on `h` in coroot coordinates.
    pub fn reflect_coroot<F: Field>(&self, field: &F, i: usize, h: &[F::Elem]) -> Vec<F::Elem> {
        let v = self.simple_value(field, i, h);
        let mut out = h.to_vec();
        out[i] = field.sub(&out[i], &v);
        out
    }

    /// Orbit of `h` (coroot coordinates) under the Weyl group.
    pub fn weyl_orbit<F: Field>(&self, field: &F, h: &[F::Elem]) -> Result<BTreeSet<Vec<F::Elem>>> {
        if h.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: h.len() });
        }
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(h.to_vec());
        queue.push_back(h.to_vec());
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank {
                let w = self.reflect_coroot(field, i, &v);
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        Ok(seen)
    }
}

/// Total order on positive roots used for bases: height, then coordinates
/// lexicographically descending.
pub fn basis_order(a: &Root, b: &Root) -> Ordering {
    a.height().cmp(&b.height()).then_with(|| b.coords.cmp(&a.coords))
}
