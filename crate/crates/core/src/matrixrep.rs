//! Matrix realizations `sl(n)` and `so(5)`, characteristic-polynomial
//! invariants and the projective θ separator.
//!
//! `so(5)` is taken with respect to `J = 1 ⊕ [[0, I₂], [I₂, 0]]`, i.e. the
//! matrices
//!
//! ```text
//! [ 0    b    c  ]
//! [ -cᵗ  m    n  ]      n, p skew-symmetric 2×2
//! [ -bᵗ  p  -mᵗ  ]
//! ```

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::chevalley::{extraspecial_pair, AlgElement, ChevalleyAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{char_poly, determinant, inverse, rank, solve, Matrix, MatrixOps};
use crate::rootsystem::{Root, RootType};
use crate::scalar::Field;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RealizationKind {
    Sl(usize),
    So5,
}

impl RealizationKind {
    pub fn size(&self) -> usize {
        match self {
            RealizationKind::Sl(n) => *n,
            RealizationKind::So5 => 5,
        }
    }
}

impl fmt::Display for RealizationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealizationKind::Sl(n) => write!(f, "sl{n}"),
            RealizationKind::So5 => write!(f, "so5"),
        }
    }
}

impl FromStr for RealizationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        if t == "so5" {
            return Ok(RealizationKind::So5);
        }
        if let Some(n) = t.strip_prefix("sl").and_then(|n| n.parse::<usize>().ok()) {
            if n >= 2 {
                return Ok(RealizationKind::Sl(n));
            }
        }
        Err(Error::UnsupportedRealization(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MatrixElement<E> {
    pub realization: RealizationKind,
    pub matrix: Matrix<E>,
}

pub(crate) fn so5_j<F: Field>(field: &F) -> Matrix<F::Elem> {
    elementary(field, 5, &[(0, 0, 1), (1, 3, 1), (3, 1, 1), (2, 4, 1), (4, 2, 1)])
}

fn validate<F: Field>(field: &F, kind: RealizationKind, m: &Matrix<F::Elem>) -> Result<()> {
    let n = kind.size();
    if m.rows() != n || m.cols() != n {
        return Err(Error::NotInRealization {
            realization: kind.to_string(),
            reason: format!("expected {n}x{n}, got {}x{}", m.rows(), m.cols()),
        });
    }
    match kind {
        RealizationKind::Sl(_) => {
            if !field.is_zero(&m.trace(field)) {
                return Err(Error::NotInRealization { realization: kind.to_string(), reason: "trace is not zero".into() });
            }
        }
        RealizationKind::So5 => {
            let jx = so5_j(field).mul(field, m);
            for i in 0..5 {
                for j in 0..5 {
                    if !field.is_zero(&field.add(jx.get(i, j), jx.get(j, i))) {
                        return Err(Error::NotInRealization {
                            realization: kind.to_string(),
                            reason: format!("block shape violated at entry ({i},{j})"),
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

impl<E: Clone + PartialEq> MatrixElement<E> {
    /// Validates membership (trace zero, or the so5 block shape).
    pub fn new<F: Field<Elem = E>>(field: &F, realization: RealizationKind, matrix: Matrix<E>) -> Result<Self> {
        validate(field, realization, &matrix)?;
        Ok(MatrixElement { realization, matrix })
    }

    pub fn from_ints<F: Field<Elem = E>>(field: &F, realization: RealizationKind, rows: &[Vec<i64>]) -> Result<Self> {
        let m = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect())?;
        Self::new(field, realization, m)
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.matrix.is_zero(field)
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        MatrixElement { realization: self.realization, matrix: self.matrix.scale(field, c) }
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self> {
        self.same_kind(other)?;
        Ok(MatrixElement { realization: self.realization, matrix: self.matrix.add(field, &other.matrix) })
    }

    fn same_kind(&self, other: &Self) -> Result<()> {
        if self.realization != other.realization {
            return Err(Error::Invalid(format!("realization mismatch: {} vs {}", self.realization, other.realization)));
        }
        Ok(())
    }
}

pub fn commutator<F: Field>(
    field: &F,
    x: &MatrixElement<F::Elem>,
    y: &MatrixElement<F::Elem>,
) -> Result<MatrixElement<F::Elem>> {
    x.same_kind(y)?;
    Ok(MatrixElement { realization: x.realization, matrix: x.matrix.commutator(field, &y.matrix) })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantPair<E> {
    pub f1: E,
    pub f2: E,
    pub deg_f1: u32,
    pub deg_f2: u32,
}

impl<E: Clone> InvariantPair<E> {
    /// `(f1^{deg f2} : f2^{deg f1})`
    pub fn theta<F: Field<Elem = E>>(&self, field: &F) -> (E, E) {
        (field.pow(&self.f1, self.deg_f2), field.pow(&self.f2, self.deg_f1))
    }
}

pub fn char_invariants<F: Field>(field: &F, x: &MatrixElement<F::Elem>) -> Result<InvariantPair<F::Elem>> {
    validate(field, x.realization, &x.matrix)?;
    let c = char_poly(field, &x.matrix);
    match x.realization {
        RealizationKind::Sl(3) => {
            if !field.is_zero(&c[1]) {
                return Err(Error::Internal("t^2 coefficient of a trace-zero matrix".into()));
            }
            Ok(InvariantPair { f1: c[2].clone(), f2: c[3].clone(), deg_f1: 2, deg_f2: 3 })
        }
        RealizationKind::So5 => {
            for k in [1, 3, 5] {
                if !field.is_zero(&c[k]) {
                    return Err(Error::Internal(format!("odd coefficient c{k} of an so5 matrix is nonzero")));
                }
            }
            Ok(InvariantPair { f1: c[2].clone(), f2: c[4].clone(), deg_f1: 2, deg_f2: 4 })
        }
        other => Err(Error::UnsupportedRealization(format!("char_invariants on {other}"))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThetaVerdict {
    Separated,
    Equal,
    Undefined,
}

/// Compares two projective θ pairs by cross-multiplication.
pub fn compare_theta<F: Field>(field: &F, a: &(F::Elem, F::Elem), b: &(F::Elem, F::Elem)) -> ThetaVerdict {
    let zero_pair = |p: &(F::Elem, F::Elem)| field.is_zero(&p.0) && field.is_zero(&p.1);
    if zero_pair(a) || zero_pair(b) {
        return ThetaVerdict::Undefined;
    }
    if field.mul(&a.0, &b.1) == field.mul(&b.0, &a.1) {
        ThetaVerdict::Equal
    } else {
        ThetaVerdict::Separated
    }
}

pub fn theta_separates<F: Field>(
    field: &F,
    d1: &MatrixElement<F::Elem>,
    d2: &MatrixElement<F::Elem>,
) -> Result<ThetaVerdict> {
    d1.same_kind(d2)?;
    if d1.is_zero(field) || d2.is_zero(field) {
        return Err(Error::ZeroMatrix);
    }
    let t1 = char_invariants(field, d1)?.theta(field);
    let t2 = char_invariants(field, d2)?.theta(field);
    Ok(compare_theta(field, &t1, &t2))
}

fn elementary<F: Field>(field: &F, n: usize, entries: &[(usize, usize, i64)]) -> Matrix<F::Elem> {
    let mut m = Matrix::zeros(field, n, n);
    for &(i, j, c) in entries {
        m.set(i, j, field.from_i64(c));
    }
    m
}

/// Linear isomorphism between a Chevalley algebra of type `A_{n−1}` or `B2`
/// and its matrix realization, with every bracket checked at construction.
#[derive(Debug, Clone)]
pub struct Realization<F: Field> {
    field: F,
    kind: RealizationKind,
    images: Vec<Matrix<F::Elem>>,
    span: Matrix<F::Elem>,
    entry_root: HashMap<(usize, usize), (usize, i8)>,
}

pub fn realize_chevalley<F: Field>(alg: &ChevalleyAlgebra<F>) -> Result<Realization<F>> {
    Realization::new(alg)
}

impl<F: Field> Realization<F> {
    pub fn new(alg: &ChevalleyAlgebra<F>) -> Result<Self> {
        let f = alg.field();
        let rs = alg.root_system();
        let r = rs.rank();
        let (kind, pos_gen, neg_gen): (RealizationKind, Vec<Matrix<F::Elem>>, Vec<Matrix<F::Elem>>) =
            match (rs.kind(), r) {
                (RootType::A, _) => {
                    let n = r + 1;
                    (
                        RealizationKind::Sl(n),
                        (0..r).map(|k| elementary(f, n, &[(k, k + 1, 1)])).collect(),
                        (0..r).map(|k| elementary(f, n, &[(k + 1, k, 1)])).collect(),
                    )
                }
                (RootType::B, 2) => {
                    if f.characteristic() == 2 {
                        return Err(Error::BadCharacteristic { char: 2, reason: "so5 realization".into() });
                    }
                    (
                        RealizationKind::So5,
                        vec![elementary(f, 5, &[(1, 2, 1), (4, 3, -1)]), elementary(f, 5, &[(0, 4, 1), (2, 0, -1)])],
                        vec![elementary(f, 5, &[(2, 1, 1), (3, 4, -1)]), elementary(f, 5, &[(0, 2, 1), (4, 0, -1)])],
                    )
                }
                _ => return Err(Error::UnsupportedRealization(rs.label())),
            };
        let n = kind.size();
        let dim = alg.dim();
        let mut images: Vec<Option<Matrix<F::Elem>>> = vec![None; dim];
        for k in 0..r {
            let e = pos_gen[k].clone();
            let mut fm = neg_gen[k].clone();
            let h = e.commutator(f, &fm);
            // rescale f so that [[e, f], e] = 2e
            let he = h.commutator(f, &e);
            let (pi, pj) = (0..n * n).map(|x| (x / n, x % n)).find(|&(i, j)| !f.is_zero(e.get(i, j))).unwrap();
            let lambda = f.div(he.get(pi, pj), e.get(pi, pj))?;
            let s = f.div(&f.from_i64(2), &lambda)?;
            fm = fm.scale(f, &s);
            let pos = rs.index_of(&Root::simple(r, k)).unwrap();
            images[k] = Some(e.commutator(f, &fm));
            images[alg.e_index(pos)] = Some(e);
            images[alg.e_index(rs.neg_index(pos))] = Some(fm);
        }
        for xi in 0..rs.num_positive() {
            if images[alg.e_index(xi)].is_some() {
                continue;
            }
            let (a, b) = extraspecial_pair(rs, rs.root(xi)).unwrap();
            for (x, y, target) in [(a, b, xi), (rs.neg_index(a), rs.neg_index(b), rs.neg_index(xi))] {
                let ex = images[alg.e_index(x)].as_ref().unwrap();
                let ey = images[alg.e_index(y)].as_ref().unwrap();
                let nv = f.from_i64(alg.n(x, y) as i64);
                let inv = f.inv(&nv)?;
                images[alg.e_index(target)] = Some(ex.commutator(f, ey).scale(f, &inv));
            }
        }
        let images: Vec<Matrix<F::Elem>> = images.into_iter().map(Option::unwrap).collect();
        let span = Matrix::from_fn(n * n, dim, |i, j| images[j].get(i / n, i % n).clone());

        let real = Realization { field: f.clone(), kind, images, span, entry_root: HashMap::new() };
        real.check_brackets(alg)?;
        let mut entry_root = HashMap::new();
        for b in 0..rs.num_roots() {
            let m = &real.images[alg.e_index(b)];
            let nz: Vec<(usize, usize)> =
                (0..n * n).map(|x| (x / n, x % n)).filter(|&(i, j)| !f.is_zero(m.get(i, j))).collect();
            if let [(i, j)] = nz[..] {
                let v = m.get(i, j);
                let sigma = if *v == f.one() {
                    1
                } else if *v == f.neg(&f.one()) {
                    -1
                } else {
                    continue;
                };
                entry_root.insert((i, j), (b, sigma));
            }
        }
        Ok(Realization { entry_root, ..real })
    }

    fn check_brackets(&self, alg: &ChevalleyAlgebra<F>) -> Result<()> {
        let f = &self.field;
        let d = alg.dim();
        for i in 0..d {
            for j in 0..d {
                let lhs = self.images[i].commutator(f, &self.images[j]);
                let rhs = self.to_matrix(&alg.bracket(&alg.unit(i), &alg.unit(j)));
                if lhs != rhs {
                    return Err(Error::Internal(format!(
                        "realization bracket mismatch on ({}, {})",
                        alg.basis_label(i),
                        alg.basis_label(j)
                    )));
                }
            }
        }
        let n = self.kind.size();
        if rank(f, &self.span) != d || self.images.iter().any(|m| validate(f, self.kind, m).is_err()) || n == 0 {
            return Err(Error::Internal("realization is not a bijection onto the matrix algebra".into()));
        }
        Ok(())
    }

    pub fn kind(&self) -> RealizationKind {
        self.kind
    }

    pub fn image(&self, i: usize) -> &Matrix<F::Elem> {
        &self.images[i]
    }

    pub fn to_matrix(&self, x: &[F::Elem]) -> Matrix<F::Elem> {
        let f = &self.field;
        let n = self.kind.size();
        let mut m = Matrix::zeros(f, n, n);
        for (c, img) in x.iter().zip(&self.images) {
            if !f.is_zero(c) {
                m = m.add(f, &img.scale(f, c));
            }
        }
        m
    }

    pub fn to_element(&self, x: &[F::Elem]) -> MatrixElement<F::Elem> {
        MatrixElement { realization: self.kind, matrix: self.to_matrix(x) }
    }

    pub fn from_matrix(&self, m: &Matrix<F::Elem>) -> Result<AlgElement<F::Elem>> {
        validate(&self.field, self.kind, m)?;
        let n = self.kind.size();
        let rhs: Vec<F::Elem> = (0..n * n).map(|i| m.get(i / n, i % n).clone()).collect();
        solve(&self.field, &self.span, &rhs).ok_or_else(|| Error::NotInRealization {
            realization: self.kind.to_string(),
            reason: "matrix is outside the span of the realization".into(),
        })
    }

    /// Root vector realized as `±E_ab`: returns its root index and sign.
    pub fn root_for_entry(&self, a: usize, b: usize) -> Option<(usize, i8)> {
        self.entry_root.get(&(a, b)).copied()
    }
}

fn conj_by<F: Field>(field: &F, q: &Matrix<F::Elem>, s: &Matrix<F::Elem>) -> Result<Matrix<F::Elem>> {
    Ok(inverse(field, q)?.mul(field, s).mul(field, q))
}

fn nonzero_scalar<F: Field>(field: &F, m: &Matrix<F::Elem>) -> bool {
    let n = m.rows();
    if n == 0 || field.is_zero(m.get(0, 0)) {
        return false;
    }
    (0..n).all(|i| (0..n).all(|j| if i == j { m.get(i, j) == m.get(0, 0) } else { field.is_zero(m.get(i, j)) }))
}

fn trailing<E: Clone>(m: &Matrix<E>, k: usize) -> Matrix<E> {
    let n = m.rows() - k;
    Matrix::from_fn(n, n, |i, j| m.get(i + k, j + k).clone())
}

/// Basis `(v, Bv, …)` in which `B` gets a zero `(0,0)` entry and a trailing
/// block that is not a nonzero scalar.
fn zero_corner_basis<F: Field>(field: &F, b: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    let m = b.rows();
    let digits = field.size().unwrap_or(3).min(3);
    let total = digits.checked_pow(m as u32).unwrap_or(u64::MAX).min(200_000);
    for code in 1..total {
        let mut c = code;
        let v: Vec<F::Elem> = (0..m)
            .map(|_| {
                let d = c % digits;
                c /= digits;
                field.element(d)
            })
            .collect();
        let u = b.mul_vec(field, &v);
        let pair = Matrix::from_fn(m, 2, |i, j| if j == 0 { v[i].clone() } else { u[i].clone() });
        if rank(field, &pair) < 2 {
            continue;
        }
        for start in 0..m {
            let mut cols = vec![v.clone(), u.clone()];
            for s in 0..m {
                if cols.len() == m {
                    break;
                }
                let e: Vec<F::Elem> = (0..m).map(|i| if i == (start + s) % m { field.one() } else { field.zero() }).collect();
                cols.push(e);
                let cand = Matrix::from_fn(m, cols.len(), |i, j| cols[j][i].clone());
                if rank(field, &cand) < cols.len() {
                    cols.pop();
                }
            }
            let q = Matrix::from_fn(m, m, |i, j| cols[j][i].clone());
            let Ok(conj) = conj_by(field, &q, b) else { continue };
            if !nonzero_scalar(field, &trailing(&conj, 1)) {
                return Some(q);
            }
        }
    }
    None
}

/// Row-operation factorization of a determinant-one matrix: returns
/// `(a, b, c)` meaning "row a += c·row b", applied in order, reducing `t` to `I`.
fn reduce_to_identity<F: Field>(field: &F, t: &Matrix<F::Elem>) -> Result<Vec<(usize, usize, F::Elem)>> {
    let n = t.rows();
    let mut a = t.clone();
    let mut ops = Vec::new();
    let row_add = |a: &mut Matrix<F::Elem>, ops: &mut Vec<(usize, usize, F::Elem)>, dst: usize, src: usize, c: F::Elem| {
        if field.is_zero(&c) {
            return;
        }
        for j in 0..n {
            let v = field.add(a.get(dst, j), &field.mul(&c, a.get(src, j)));
            a.set(dst, j, v);
        }
        ops.push((dst, src, c));
    };
    for c in 0..n {
        if c + 1 < n && *a.get(c, c) != field.one() {
            let r = match (c + 1..n).find(|&r| !field.is_zero(a.get(r, c))) {
                Some(r) => r,
                None => {
                    row_add(&mut a, &mut ops, c + 1, c, field.one());
                    c + 1
                }
            };
            let coef = field.div(&field.sub(&field.one(), a.get(c, c)), a.get(r, c))?;
            row_add(&mut a, &mut ops, c, r, coef);
        }
        for r in 0..n {
            if r != c && !field.is_zero(a.get(r, c)) {
                let coef = field.neg(&field.div(a.get(r, c), a.get(c, c))?);
                row_add(&mut a, &mut ops, r, c, coef);
            }
        }
    }
    if a != Matrix::identity(field, n) {
        return Err(Error::Internal("transvection factorization did not reach the identity".into()));
    }
    Ok(ops)
}

/// Transvections `I + s·E_ab`, in the order they act by conjugation, that
/// bring a non-scalar trace-zero matrix to zero diagonal.
pub fn zero_diagonal_transvections<F: Field>(field: &F, s: &Matrix<F::Elem>) -> Result<Vec<(usize, usize, F::Elem)>> {
    let n = s.rows();
    if !field.is_zero(&s.trace(field)) {
        return Err(Error::Invalid("matrix has nonzero trace".into()));
    }
    if nonzero_scalar(field, s) || s.is_zero(field) {
        return Err(Error::CentralElement);
    }
    let mut cur = s.clone();
    let mut g = Matrix::identity(field, n);
    for k in 0..n {
        if field.is_zero(cur.get(k, k)) && !nonzero_scalar(field, &trailing(&cur, k + 1)) {
            continue;
        }
        let q = zero_corner_basis(field, &trailing(&cur, k))
            .ok_or_else(|| Error::Internal("no zero-corner basis for a non-scalar block".into()))?;
        let qt = Matrix::from_fn(n, n, |i, j| {
            if i >= k && j >= k {
                q.get(i - k, j - k).clone()
            } else if i == j {
                field.one()
            } else {
                field.zero()
            }
        });
        cur = conj_by(field, &qt, &cur)?;
        g = g.mul(field, &qt);
    }
    // cur = g⁻¹ s g. Scale away the determinant so the conjugator lies in SL_n.
    let mut p = inverse(field, &g)?;
    let det_inv = field.inv(&determinant(field, &p))?;
    for j in 0..n {
        let v = field.mul(p.get(n - 1, j), &det_inv);
        p.set(n - 1, j, v);
    }
    let ops = reduce_to_identity(field, &p)?;
    Ok(ops.into_iter().rev().map(|(a, b, c)| (a, b, field.neg(&c))).collect())
}

#[cfg(test)]
mod tests;
