//! Dense matrices over an exact [`Field`]: products, row reduction,
//! kernels, inverses and division-free characteristic polynomials.

use crate::error::{Error, Result};
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch { expected: c, got: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: r, cols: c, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }

    pub fn map<G: Clone>(&self, f: impl Fn(&E) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<E: Clone> Matrix<E> {
    pub fn zeros<F: Field<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| field.zero())
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { field.one() } else { field.zero() })
    }
}

/// Field-aware matrix operations.
pub trait MatrixOps<F: Field> {
    fn add(&self, field: &F, other: &Self) -> Self;
    fn sub(&self, field: &F, other: &Self) -> Self;
    fn scale(&self, field: &F, c: &F::Elem) -> Self;
    fn mul(&self, field: &F, other: &Self) -> Self;
    fn mul_vec(&self, field: &F, v: &[F::Elem]) -> Vec<F::Elem>;
    fn is_zero(&self, field: &F) -> bool;
    fn trace(&self, field: &F) -> F::Elem;
    fn commutator(&self, field: &F, other: &Self) -> Self;
}

impl<F: Field> MatrixOps<F> for Matrix<F::Elem> {
    fn add(&self, field: &F, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| field.add(a, b)).collect(),
        }
    }

    fn sub(&self, field: &F, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| field.sub(a, b)).collect(),
        }
    }

    fn scale(&self, field: &F, c: &F::Elem) -> Self {
        self.map(|a| field.mul(a, c))
    }

    fn mul(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if field.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if field.is_zero(b) {
                        continue;
                    }
                    let v = field.add(out.get(i, j), &field.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    fn mul_vec(&self, field: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !field.is_zero(a) && !field.is_zero(b) {
                        acc = field.add(&acc, &field.mul(a, b));
                    }
                }
                acc
            })
            .collect()
    }

    fn is_zero(&self, field: &F) -> bool {
        self.data.iter().all(|a| field.is_zero(a))
    }

    fn trace(&self, field: &F) -> F::Elem {
        (0..self.rows.min(self.cols)).fold(field.zero(), |acc, i| field.add(&acc, self.get(i, i)))
    }

    fn commutator(&self, field: &F, other: &Self) -> Self {
        self.mul(field, other).sub(field, &other.mul(field, self))
    }
}

/// Reduced row echelon form. Returns the reduced matrix and pivot columns.
pub fn rref<F: Field>(field: &F, m: &Matrix<F::Elem>) -> (Matrix<F::Elem>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !field.is_zero(a.get(i, c))) else {
            continue;
        };
        if p != r {
            for j in 0..a.cols {
                a.data.swap(p * a.cols + j, r * a.cols + j);
            }
        }
        let inv = field.inv(a.get(r, c)).expect("pivot is nonzero");
        for j in c..a.cols {
            let v = field.mul(a.get(r, j), &inv);
            a.set(r, j, v);
        }
        for i in 0..a.rows {
            if i == r {
                continue;
            }
            let f = a.get(i, c).clone();
            if field.is_zero(&f) {
                continue;
            }
            for j in c..a.cols {
                let v = field.sub(a.get(i, j), &field.mul(&f, a.get(r, j)));
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    rref(field, m).1.len()
}

/// Basis of `{v : m v = 0}`.
pub fn kernel<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let (r, pivots) = rref(field, m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![field.zero(); m.cols];
            v[fc] = field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(r.get(row, fc));
            }
            v
        })
        .collect()
}

/// One solution of `m x = b`, or `None` when inconsistent.
pub fn solve<F: Field>(field: &F, m: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    assert_eq!(m.rows, b.len());
    let aug = Matrix::from_fn(m.rows, m.cols + 1, |i, j| {
        if j < m.cols {
            m.get(i, j).clone()
        } else {
            b[i].clone()
        }
    });
    let (r, pivots) = rref(field, &aug);
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = vec![field.zero(); m.cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = r.get(row, m.cols).clone();
    }
    Some(x)
}

pub fn inverse<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Result<Matrix<F::Elem>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch { expected: m.rows, got: m.cols });
    }
    let n = m.rows;
    let aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m.get(i, j).clone()
        } else if j - n == i {
            field.one()
        } else {
            field.zero()
        }
    });
    let (r, pivots) = rref(field, &aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::Invalid("matrix is singular".into()));
    }
    Ok(Matrix::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
}

pub fn determinant<F: Field>(field: &F, m: &Matrix<F::Elem>) -> F::Elem {
    assert!(m.is_square());
    let n = m.rows;
    let mut a = m.clone();
    let mut det = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !field.is_zero(a.get(i, c))) else {
            return field.zero();
        };
        if p != c {
            for j in 0..n {
                a.data.swap(p * n + j, c * n + j);
            }
            det = field.neg(&det);
        }
        let piv = a.get(c, c).clone();
        det = field.mul(&det, &piv);
        let inv = field.inv(&piv).expect("nonzero pivot");
        for i in c + 1..n {
            let f = field.mul(a.get(i, c), &inv);
            if field.is_zero(&f) {
                continue;
            }
            for j in c..n {
                let v = field.sub(a.get(i, j), &field.mul(&f, a.get(c, j)));
                a.set(i, j, v);
            }
        }
    }
    det
}

/// Coefficients `[1, c1, ..., cn]` of `det(tI - m) = t^n + c1 t^(n-1) + ... + cn`,
/// by Berkowitz's algorithm (no divisions, valid in every characteristic).
pub fn char_poly<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<F::Elem> {
    assert!(m.is_square());
    let n = m.rows;
    let mut coeffs = vec![field.one()];
    for r in 0..n {
        // leading r x r block A, row R = m[r][0..r], column S = m[0..r][r], a = m[r][r]
        let a = m.get(r, r).clone();
        let mut q = Vec::with_capacity(r + 2);
        q.push(field.one());
        q.push(field.neg(&a));
        // powers A^k S for k = 0..r-1
        let mut v: Vec<F::Elem> = (0..r).map(|i| m.get(i, r).clone()).collect();
        for _ in 0..r {
            let rs = (0..r).fold(field.zero(), |acc, j| field.add(&acc, &field.mul(m.get(r, j), &v[j])));
            q.push(field.neg(&rs));
            v = (0..r)
                .map(|i| (0..r).fold(field.zero(), |acc, j| field.add(&acc, &field.mul(m.get(i, j), &v[j]))))
                .collect();
        }
        // lower-triangular Toeplitz (r+2) x (r+1) times coeffs
        let next: Vec<F::Elem> = (0..r + 2)
            .map(|i| {
                (0..=r.min(i)).fold(field.zero(), |acc, j| {
                    if j < coeffs.len() {
                        field.add(&acc, &field.mul(&q[i - j], &coeffs[j]))
                    } else {
                        acc
                    }
                })
            })
            .collect();
        coeffs = next;
    }
    coeffs
}
