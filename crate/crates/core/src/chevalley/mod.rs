//! Chevalley algebras `L(R, K)` with a fully tabulated bracket.
//!
//! Basis order: `h_1..h_r`, then `e_β` for positive `β` in the root-system
//! order, then `e_{−β}` in the same order. Elements are plain coefficient
//! vectors in that basis.

mod automorphism;
mod constants;

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{kernel, Matrix};
use crate::rootsystem::{Root, RootSystem, RootType};
use crate::scalar::Field;

pub use automorphism::{AutomorphismProduct, ConjugateOptions, Conjugation, RootAutomorphism};
pub use constants::extraspecial_pair;

/// Coefficient vector in the Chevalley basis.
pub type AlgElement<E> = Vec<E>;

/// A basis element: `h_k` or `e_β` (by root index).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisElement {
    H(usize),
    E(usize),
}

#[derive(Clone)]
pub struct ChevalleyAlgebra<F: Field> {
    rs: RootSystem,
    field: F,
    n: HashMap<(usize, usize), i32>,
    int_table: Vec<Vec<(usize, i64)>>,
    table: Vec<Vec<(usize, F::Elem)>>,
}

impl<F: Field> fmt::Debug for ChevalleyAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChevalleyAlgebra({} over {})", self.rs.label(), self.field.descriptor())
    }
}

fn is_c_type(rs: &RootSystem) -> bool {
    matches!((rs.kind(), rs.rank()), (RootType::A, 1) | (RootType::B, 2) | (RootType::C, _))
}

pub fn build_chevalley<F: Field>(rs: RootSystem, field: F) -> Result<ChevalleyAlgebra<F>> {
    if field.characteristic() == 2 && is_c_type(&rs) {
        return Err(Error::ExcludedInChar2(rs.label()));
    }
    let n = constants::structure_constants(&rs);
    let r = rs.rank();
    let nroots = rs.num_roots();
    let dim = r + nroots;
    let mut int_table = vec![Vec::new(); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            let entry = &mut int_table[i * dim + j];
            match (i < r, j < r) {
                (true, true) => {}
                (true, false) => {
                    let g = rs.root(j - r);
                    let q = rs.pairing_simple(g, i);
                    if q != 0 {
                        entry.push((j, q as i64));
                    }
                }
                (false, true) => {
                    let g = rs.root(i - r);
                    let q = rs.pairing_simple(g, j);
                    if q != 0 {
                        entry.push((i, -q as i64));
                    }
                }
                (false, false) => {
                    let (a, b) = (i - r, j - r);
                    if rs.neg_index(a) == b {
                        for (k, c) in rs.coroot_coords(rs.root(a)).into_iter().enumerate() {
                            if c != 0 {
                                entry.push((k, c as i64));
                            }
                        }
                    } else if let Some(&v) = n.get(&(a, b)) {
                        let s = rs.index_of(&rs.root(a).add(rs.root(b))).unwrap();
                        entry.push((r + s, v as i64));
                    }
                }
            }
        }
    }
    let table = int_table
        .iter()
        .map(|e| {
            e.iter()
                .filter_map(|&(k, c)| {
                    let v = field.from_i64(c);
                    (!field.is_zero(&v)).then_some((k, v))
                })
                .collect()
        })
        .collect();
    let alg = ChevalleyAlgebra { rs, field, n, int_table, table };
    if alg.rank() <= 4 {
        if let Some((i, j, k)) = alg.first_integer_jacobi_failure() {
            return Err(Error::Internal(format!("Jacobi fails on basis triple ({i},{j},{k})")));
        }
    }
    Ok(alg)
}

impl<F: Field> ChevalleyAlgebra<F> {
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn dim(&self) -> usize {
        self.rs.rank() + self.rs.num_roots()
    }

    pub fn label(&self) -> String {
        format!("{}/{}", self.rs.label(), self.field.descriptor())
    }

    pub fn basis_element(&self, i: usize) -> BasisElement {
        if i < self.rank() {
            BasisElement::H(i)
        } else {
            BasisElement::E(i - self.rank())
        }
    }

    /// Human-readable basis label such as `h1` or `e(1,1)`.
    pub fn basis_label(&self, i: usize) -> String {
        match self.basis_element(i) {
            BasisElement::H(k) => format!("h{}", k + 1),
            BasisElement::E(b) => format!("e{}", self.rs.root(b)),
        }
    }

    /// Basis index of `e_β` for the root with index `b`.
    pub fn e_index(&self, b: usize) -> usize {
        self.rank() + b
    }

    pub fn zero(&self) -> AlgElement<F::Elem> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn unit(&self, i: usize) -> AlgElement<F::Elem> {
        let mut v = self.zero();
        v[i] = self.field.one();
        v
    }

    pub fn h(&self, k: usize) -> AlgElement<F::Elem> {
        self.unit(k)
    }

    pub fn e(&self, root: &Root) -> Result<AlgElement<F::Elem>> {
        let b = self.rs.index_of(root).ok_or_else(|| Error::NotARoot(root.coords.clone()))?;
        Ok(self.unit(self.e_index(b)))
    }

    /// Element of `H` with the given coroot coordinates.
    pub fn from_h_coords(&self, h: &[F::Elem]) -> AlgElement<F::Elem> {
        let mut v = self.zero();
        v[..self.rank()].clone_from_slice(h);
        v
    }

    pub fn h_part<'a>(&self, x: &'a [F::Elem]) -> &'a [F::Elem] {
        &x[..self.rank()]
    }

    pub fn u_plus_part<'a>(&self, x: &'a [F::Elem]) -> &'a [F::Elem] {
        let r = self.rank();
        &x[r..r + self.rs.num_positive()]
    }

    pub fn u_minus_part<'a>(&self, x: &'a [F::Elem]) -> &'a [F::Elem] {
        &x[self.rank() + self.rs.num_positive()..]
    }

    pub fn is_zero(&self, x: &[F::Elem]) -> bool {
        x.iter().all(|c| self.field.is_zero(c))
    }

    pub fn add(&self, x: &[F::Elem], y: &[F::Elem]) -> AlgElement<F::Elem> {
        x.iter().zip(y).map(|(a, b)| self.field.add(a, b)).collect()
    }

    pub fn sub(&self, x: &[F::Elem], y: &[F::Elem]) -> AlgElement<F::Elem> {
        x.iter().zip(y).map(|(a, b)| self.field.sub(a, b)).collect()
    }

    pub fn scale(&self, c: &F::Elem, x: &[F::Elem]) -> AlgElement<F::Elem> {
        x.iter().map(|a| self.field.mul(c, a)).collect()
    }

    pub fn check_shape(&self, x: &[F::Elem]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: x.len() });
        }
        Ok(())
    }

    /// `[b_i, b_j]` as sparse (index, coefficient) pairs.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        &self.table[i * self.dim() + j]
    }

    /// Integer structure constants of `[b_i, b_j]`.
    pub fn structure(&self, i: usize, j: usize) -> &[(usize, i64)] {
        &self.int_table[i * self.dim() + j]
    }

    pub fn bracket(&self, x: &[F::Elem], y: &[F::Elem]) -> AlgElement<F::Elem> {
        let f = &self.field;
        let mut out = self.zero();
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                let entry = self.bracket_basis(i, j);
                if entry.is_empty() {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (k, v) in entry {
                    out[*k] = f.add(&out[*k], &f.mul(&c, v));
                }
            }
        }
        out
    }

    /// Checked bracket for externally supplied elements.
    pub fn try_bracket(&self, x: &[F::Elem], y: &[F::Elem]) -> Result<AlgElement<F::Elem>> {
        self.check_shape(x)?;
        self.check_shape(y)?;
        Ok(self.bracket(x, y))
    }

    /// Matrix of `y ↦ [x, y]`.
    pub fn ad_matrix(&self, x: &[F::Elem]) -> Matrix<F::Elem> {
        let d = self.dim();
        let mut m = Matrix::zeros(&self.field, d, d);
        for j in 0..d {
            let col = self.bracket(x, &self.unit(j));
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// Matrix of `y ↦ [y, x]`.
    pub fn right_ad_matrix(&self, x: &[F::Elem]) -> Matrix<F::Elem> {
        let d = self.dim();
        let mut m = Matrix::zeros(&self.field, d, d);
        for j in 0..d {
            let col = self.bracket(&self.unit(j), x);
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn is_central(&self, x: &[F::Elem]) -> bool {
        (0..self.dim()).all(|j| self.is_zero(&self.bracket(x, &self.unit(j))))
    }

    /// Basis of the center.
    pub fn center(&self) -> Vec<AlgElement<F::Elem>> {
        let d = self.dim();
        let f = &self.field;
        let mut m = Matrix::zeros(f, d * d, d);
        for i in 0..d {
            for j in 0..d {
                for (k, v) in self.bracket_basis(i, j) {
                    m.set(j * d + k, i, v.clone());
                }
            }
        }
        kernel(f, &m)
    }

    /// `q_{β,γ}` with `[h_β, e_γ] = q_{β,γ} e_γ`, indexed by root indices.
    pub fn q(&self, b: usize, g: usize) -> i32 {
        self.rs.pairing(self.rs.root(g), self.rs.root(b))
    }

    pub fn q_table(&self) -> Vec<Vec<i32>> {
        let n = self.rs.num_roots();
        (0..n).map(|b| (0..n).map(|g| self.q(b, g)).collect()).collect()
    }

    /// `N_{α,β}` for root indices, zero when `α + β` is not a root.
    pub fn n(&self, a: usize, b: usize) -> i32 {
        self.n.get(&(a, b)).copied().unwrap_or(0)
    }

    pub fn n_table(&self) -> Vec<Vec<i32>> {
        let n = self.rs.num_roots();
        (0..n).map(|a| (0..n).map(|b| self.n(a, b)).collect()).collect()
    }

    fn first_integer_jacobi_failure(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        let br = |i: usize, v: &[(usize, i64)]| -> HashMap<usize, i64> {
            let mut out: HashMap<usize, i64> = HashMap::new();
            for &(k, c) in v {
                for &(l, c2) in self.structure(k, i) {
                    *out.entry(l).or_default() += c * c2;
                }
            }
            out
        };
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let mut total: HashMap<usize, i64> = HashMap::new();
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (l, v) in br(c, self.structure(a, b)) {
                            *total.entry(l).or_default() += v;
                        }
                    }
                    if total.values().any(|&v| v != 0) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    fn dense(&self, terms: &[(usize, F::Elem)]) -> AlgElement<F::Elem> {
        let mut v = self.zero();
        for (k, c) in terms {
            v[*k] = self.field.add(&v[*k], c);
        }
        v
    }

    /// Accumulates `[[b_i, b_j], b_k]` into `acc`.
    fn add_double_bracket(&self, acc: &mut [F::Elem], i: usize, j: usize, k: usize) {
        let f = &self.field;
        for (l, c) in self.bracket_basis(i, j) {
            for (m, c2) in self.bracket_basis(*l, k) {
                acc[*m] = f.add(&acc[*m], &f.mul(c, c2));
            }
        }
    }

    /// Basis triples violating the Jacobi identity over the ground field.
    pub fn jacobi_violations(&self) -> Vec<(usize, usize, usize)> {
        let d = self.dim();
        let mut bad = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let mut acc = self.zero();
                    self.add_double_bracket(&mut acc, i, j, k);
                    self.add_double_bracket(&mut acc, j, k, i);
                    self.add_double_bracket(&mut acc, k, i, j);
                    if !self.is_zero(&acc) {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        bad
    }

    pub fn antisymmetry_violations(&self) -> Vec<(usize, usize)> {
        let d = self.dim();
        let mut bad = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let s = self.add(&self.dense(self.bracket_basis(i, j)), &self.dense(self.bracket_basis(j, i)));
                if !self.is_zero(&s) {
                    bad.push((i, j));
                }
            }
        }
        bad
    }

    /// `β(h)` for every root, in root order.
    pub fn root_values(&self, h: &[F::Elem]) -> Vec<F::Elem> {
        let hc = &h[..self.rank()];
        self.rs.roots().iter().map(|b| self.rs.root_value(&self.field, b, hc)).collect()
    }

    /// Deterministic search for `h ∈ H` with `β(h) ∉ avoid` for every root.
    /// Candidates are enumerated shell by shell over the field's element order.
    pub fn find_regular(&self, avoid: &[F::Elem]) -> Result<AlgElement<F::Elem>> {
        let f = &self.field;
        let mut avoid: Vec<F::Elem> = avoid.to_vec();
        avoid.sort();
        avoid.dedup();
        let r = self.rank();
        let npos = self.rs.num_positive() as u64;
        let bound_holds = match f.size() {
            None => true,
            Some(q) => {
                if avoid.iter().all(|a| f.is_zero(a)) {
                    q > npos
                } else {
                    q > avoid.len() as u64 * 2 * npos
                }
            }
        };
        let good = |h: &[F::Elem]| {
            self.rs.positive_roots().iter().all(|b| {
                let v = self.rs.root_value(f, b, h);
                let w = f.neg(&v);
                avoid.binary_search(&v).is_err() && avoid.binary_search(&w).is_err()
            })
        };
        let max_shell = f.size().unwrap_or(64);
        let mut visited: u64 = 0;
        const VISIT_CAP: u64 = 20_000_000;
        for n in 0..max_shell {
            let mut idx = vec![0u64; r];
            loop {
                if idx.contains(&n) {
                    visited += 1;
                    let h: Vec<F::Elem> = idx.iter().map(|&i| f.element(i)).collect();
                    if good(&h) {
                        return Ok(self.from_h_coords(&h));
                    }
                    if visited > VISIT_CAP {
                        return Err(Error::BudgetExhausted(format!("find_regular visited {visited} points")));
                    }
                }
                let mut pos = 0;
                loop {
                    if pos == r {
                        break;
                    }
                    idx[pos] += 1;
                    if idx[pos] <= n {
                        break;
                    }
                    idx[pos] = 0;
                    pos += 1;
                }
                if pos == r {
                    break;
                }
            }
        }
        if bound_holds {
            Err(Error::Internal(format!(
                "no element of H avoids {} values although the field is large enough",
                avoid.len()
            )))
        } else {
            Err(Error::FieldTooSmall(format!(
                "{} has no h with all root values outside the avoid set",
                self.label()
            )))
        }
    }
}

#[cfg(test)]
mod tests;
