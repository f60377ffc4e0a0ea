//! Sparse multivariate polynomials over a field, and `sl(2)` with
//! polynomial coordinates for symbolic identity checks.

use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::freelie::LieAlgebra;
use crate::scalar::Field;

/// Exponent vector ↦ nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly<E> {
    pub terms: BTreeMap<Vec<u8>, E>,
}

impl<E: Clone> MPoly<E> {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn var<F: Field<Elem = E>>(field: &F, nvars: usize, i: usize) -> Self {
        let mut e = vec![0u8; nvars];
        e[i] = 1;
        MPoly { terms: BTreeMap::from([(e, field.one())]) }
    }

    pub fn total_degree(&self) -> usize {
        self.terms.keys().map(|e| e.iter().map(|&k| k as usize).sum()).max().unwrap_or(0)
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(field, e.clone(), c.clone());
        }
        out
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        if field.is_zero(c) {
            return Self::zero();
        }
        MPoly { terms: self.terms.iter().map(|(e, d)| (e.clone(), field.mul(c, d))).collect() }
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e: Vec<u8> = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(field, e, field.mul(x, y));
            }
        }
        out
    }

    pub fn eval<F: Field<Elem = E>>(&self, field: &F, point: &[E]) -> E {
        let mut acc = field.zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = field.mul(&t, &field.pow(x, k as u32));
                }
            }
            acc = field.add(&acc, &t);
        }
        acc
    }

    fn add_term<F: Field<Elem = E>>(&mut self, field: &F, e: Vec<u8>, c: E) {
        let s = match self.terms.get(&e) {
            Some(d) => field.add(d, &c),
            None => c,
        };
        if field.is_zero(&s) {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, s);
        }
    }
}

/// `sl(2)` over `F[t_1..t_n]` in the basis `(h, e, f)`.
#[derive(Debug, Clone)]
pub struct SymbolicSl2<F: Field> {
    pub field: F,
    pub nvars: usize,
}

pub type Sl2Poly<E> = [MPoly<E>; 3];

impl<F: Field> SymbolicSl2<F> {
    /// `t_{3i} h + t_{3i+1} e + t_{3i+2} f`
    pub fn generic_element(&self, i: usize) -> Sl2Poly<F::Elem> {
        [0, 1, 2].map(|k| MPoly::var(&self.field, self.nvars, 3 * i + k))
    }
}

impl<F: Field> LieAlgebra for SymbolicSl2<F> {
    type Elem = Sl2Poly<F::Elem>;

    fn zero(&self) -> Self::Elem {
        [MPoly::zero(), MPoly::zero(), MPoly::zero()]
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        [0, 1, 2].map(|k| a[k].add(&self.field, &b[k]))
    }

    fn scale(&self, c: &BigRational, a: &Self::Elem) -> Result<Self::Elem> {
        let c = self.field.from_rational(c)?;
        Ok([0, 1, 2].map(|k| a[k].scale(&self.field, &c)))
    }

    // [h,e] = 2e, [h,f] = -2f, [e,f] = h
    fn bracket(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let f = &self.field;
        let two = f.from_i64(2);
        let minus_two = f.from_i64(-2);
        let minus_one = f.from_i64(-1);
        let cross = |i: usize, j: usize| x[i].mul(f, &y[j]).add(f, &x[j].mul(f, &y[i]).scale(f, &minus_one));
        [cross(1, 2), cross(0, 1).scale(f, &two), cross(0, 2).scale(f, &minus_two)]
    }

    fn check(&self, a: &Self::Elem) -> Result<()> {
        for p in a {
            if p.terms.keys().any(|e| e.len() != self.nvars) {
                return Err(Error::DimensionMismatch { expected: self.nvars, got: 0 });
            }
        }
        Ok(())
    }
}
