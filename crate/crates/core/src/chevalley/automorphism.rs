//! Root automorphisms `x_β(t) = exp(t·ad e_β)` and conjugation into `U`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{AlgElement, ChevalleyAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, MatrixOps};
use crate::matrixrep::{zero_diagonal_transvections, Realization};
use crate::rootsystem::RootType;
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq)]
pub struct RootAutomorphism<E> {
    /// root index
    pub root: usize,
    pub t: E,
    pub matrix: Matrix<E>,
}

/// Composite `g = g_n ∘ … ∘ g_1`; `factors[0]` acts first.
#[derive(Debug, Clone, PartialEq)]
pub struct AutomorphismProduct<E> {
    pub factors: Vec<(usize, E)>,
    pub matrix: Matrix<E>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConjugateOptions {
    pub seed: u64,
    /// restarts allowed on the randomized path
    pub budget: u64,
}

impl Default for ConjugateOptions {
    fn default() -> Self {
        ConjugateOptions { seed: 0, budget: 2000 }
    }
}

/// A conjugator `g` and the image `g(l)`.
pub type Conjugation<E> = (AutomorphismProduct<E>, AlgElement<E>);

impl<F: Field> ChevalleyAlgebra<F> {
    /// `(ad e_β)^k / k!` over the integers, for `k = 0..=K`.
    fn exp_terms(&self, b: usize) -> Vec<Vec<i64>> {
        let d = self.dim();
        let e = self.e_index(b);
        let mut ad = vec![0i64; d * d];
        for j in 0..d {
            for &(i, c) in self.structure(e, j) {
                ad[i * d + j] += c;
            }
        }
        let mut terms = Vec::new();
        let mut cur = vec![0i64; d * d];
        for i in 0..d {
            cur[i * d + i] = 1;
        }
        let mut k = 0i64;
        loop {
            terms.push(cur.clone());
            k += 1;
            let mut next = vec![0i64; d * d];
            for i in 0..d {
                for l in 0..d {
                    let a = ad[i * d + l];
                    if a == 0 {
                        continue;
                    }
                    for j in 0..d {
                        next[i * d + j] += a * cur[l * d + j];
                    }
                }
            }
            if next.iter().all(|&x| x == 0) {
                break;
            }
            for x in next.iter_mut() {
                debug_assert_eq!(*x % k, 0);
                *x /= k;
            }
            cur = next;
        }
        terms
    }

    fn check_automorphism_char(&self) -> Result<()> {
        let p = self.field().characteristic();
        let k = self.root_system().nilpotency_index() as u64;
        if p != 0 && p <= k {
            return Err(Error::BadCharacteristic {
                char: p,
                reason: format!("exp(t ad e) needs 1/{k}! in type {}", self.root_system().kind()),
            });
        }
        Ok(())
    }

    pub fn root_automorphism(&self, b: usize, t: &F::Elem) -> Result<RootAutomorphism<F::Elem>> {
        self.check_automorphism_char()?;
        if b >= self.root_system().num_roots() {
            return Err(Error::Invalid(format!("root index {b} out of range")));
        }
        let f = self.field();
        let d = self.dim();
        let terms = self.exp_terms(b);
        let mut matrix = Matrix::zeros(f, d, d);
        let mut tk = f.one();
        for term in &terms {
            for i in 0..d {
                for j in 0..d {
                    let c = term[i * d + j];
                    if c != 0 {
                        let v = f.add(matrix.get(i, j), &f.mul(&tk, &f.from_i64(c)));
                        matrix.set(i, j, v);
                    }
                }
            }
            tk = f.mul(&tk, t);
        }
        Ok(RootAutomorphism { root: b, t: t.clone(), matrix })
    }

    pub fn identity_automorphism(&self) -> AutomorphismProduct<F::Elem> {
        AutomorphismProduct { factors: Vec::new(), matrix: Matrix::identity(self.field(), self.dim()) }
    }

    pub fn compose(&self, g: &mut AutomorphismProduct<F::Elem>, x: RootAutomorphism<F::Elem>) {
        g.matrix = x.matrix.mul(self.field(), &g.matrix);
        g.factors.push((x.root, x.t));
    }

    pub fn apply_automorphism(&self, g: &AutomorphismProduct<F::Elem>, x: &[F::Elem]) -> Result<AlgElement<F::Elem>> {
        self.check_shape(x)?;
        Ok(g.matrix.mul_vec(self.field(), x))
    }

    pub fn inverse_automorphism(&self, g: &AutomorphismProduct<F::Elem>) -> Result<AutomorphismProduct<F::Elem>> {
        let f = self.field();
        let mut inv = self.identity_automorphism();
        for (b, t) in g.factors.iter().rev() {
            self.compose(&mut inv, self.root_automorphism(*b, &f.neg(t))?);
        }
        Ok(inv)
    }

    /// Finds `g` in the Chevalley group with `g(l) ∈ U`. Type A uses a
    /// deterministic zero-diagonal reduction in `sl(n)`; other types use
    /// simple-root moves with seeded random restarts.
    pub fn conjugate_into_u(&self, l: &[F::Elem]) -> Result<Conjugation<F::Elem>> {
        self.conjugate_into_u_with(l, ConjugateOptions::default())
    }

    pub fn conjugate_into_u_with(
        &self,
        l: &[F::Elem],
        opts: ConjugateOptions,
    ) -> Result<Conjugation<F::Elem>> {
        self.check_shape(l)?;
        if self.is_central(l) {
            return Err(Error::CentralElement);
        }
        if self.h_part(l).iter().all(|c| self.field().is_zero(c)) {
            return Ok((self.identity_automorphism(), l.to_vec()));
        }
        self.check_automorphism_char()?;
        let (g, u) = if self.root_system().kind() == RootType::A {
            self.conjugate_type_a(l)?
        } else {
            self.conjugate_randomized(l, opts)?
        };
        if u != g.matrix.mul_vec(self.field(), l) || !self.h_part(&u).iter().all(|c| self.field().is_zero(c)) {
            return Err(Error::Internal("conjugation certificate failed".into()));
        }
        Ok((g, u))
    }

    fn conjugate_type_a(&self, l: &[F::Elem]) -> Result<Conjugation<F::Elem>> {
        let f = self.field();
        let real = Realization::new(self)?;
        let s = real.to_matrix(l);
        let moves = zero_diagonal_transvections(f, &s)?;
        let mut g = self.identity_automorphism();
        for (a, b, s) in moves {
            let (root, sigma) = real
                .root_for_entry(a, b)
                .ok_or_else(|| Error::Internal(format!("no root vector at entry ({a},{b})")))?;
            let t = if sigma > 0 { s } else { f.neg(&s) };
            self.compose(&mut g, self.root_automorphism(root, &t)?);
        }
        let u = g.matrix.mul_vec(f, l);
        Ok((g, u))
    }

    fn conjugate_randomized(
        &self,
        l: &[F::Elem],
        opts: ConjugateOptions,
    ) -> Result<Conjugation<F::Elem>> {
        let f = self.field();
        let rs = self.root_system();
        let r = self.rank();
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let sample_range = f.size().unwrap_or(11).min(11);
        for attempt in 0..=opts.budget {
            let mut g = self.identity_automorphism();
            if attempt > 0 {
                for _ in 0..r + 1 {
                    let b = rng.gen_range(0..rs.num_roots());
                    let t = f.element(rng.gen_range(1..sample_range));
                    self.compose(&mut g, self.root_automorphism(b, &t)?);
                }
            }
            let mut x = g.matrix.mul_vec(f, l);
            let mut stuck = false;
            for i in 0..r {
                let c = x[i].clone();
                if f.is_zero(&c) {
                    continue;
                }
                // x_{α_i}(t) adds t·x_{−α_i}·h_i, x_{−α_i}(t) adds −t·x_{α_i}·h_i
                let pos = rs.index_of(&crate::rootsystem::Root::simple(r, i)).unwrap();
                let neg = rs.neg_index(pos);
                let lneg = x[self.e_index(neg)].clone();
                let lpos = x[self.e_index(pos)].clone();
                let aut = if !f.is_zero(&lneg) {
                    self.root_automorphism(pos, &f.neg(&f.div(&c, &lneg)?))?
                } else if !f.is_zero(&lpos) {
                    self.root_automorphism(neg, &f.div(&c, &lpos)?)?
                } else {
                    stuck = true;
                    break;
                };
                x = aut.matrix.mul_vec(f, &x);
                self.compose(&mut g, aut);
            }
            if !stuck {
                return Ok((g, x));
            }
        }
        Err(Error::BudgetExhausted(format!("conjugate_into_U after {} restarts", opts.budget)))
    }
}
