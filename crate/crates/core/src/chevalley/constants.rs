//! Structure constants `N_{α,β}` from extraspecial pairs.
//!
//! A pair `(α, β)` of positive roots is special when `α ≺ β` in the basis
//! order and `α + β` is a root; it is extraspecial when `α` is the smallest
//! root for which `(α, α+β−α)` is special. Extraspecial constants are fixed
//! to `+(p+1)`, everything else follows from the standard relations:
//!
//! 1. `N_{α,β} = −N_{β,α}`
//! 2. `N_{α,β}/(γ,γ) = N_{β,γ}/(α,α) = N_{γ,α}/(β,β)` when `α+β+γ = 0`
//! 3. `N_{α,β} N_{−α,−β} = −(p+1)²`
//! 4. the four-root relation for `α+β+γ+δ = 0`

use std::collections::HashMap;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::rootsystem::{Root, RootSystem};

struct Solver<'a> {
    rs: &'a RootSystem,
    cache: HashMap<(usize, usize), Rational64>,
}

impl Solver<'_> {
    fn norm(&self, i: usize) -> Rational64 {
        Rational64::from_integer(self.rs.norm2(self.rs.root(i)))
    }

    fn sum_index(&self, a: usize, b: usize) -> Option<usize> {
        self.rs.index_of(&self.rs.root(a).add(self.rs.root(b)))
    }

    fn p(&self, a: usize, b: usize) -> i64 {
        self.rs.chain_down_length(self.rs.root(a), self.rs.root(b)).expect("non-proportional") as i64
    }

    /// `N_{a,b}`, or zero when `a + b` is not a root.
    fn n_or_zero(&mut self, a: usize, b: usize) -> Rational64 {
        if self.sum_index(a, b).is_some() {
            self.n(a, b)
        } else {
            Rational64::zero()
        }
    }

    fn n(&mut self, a: usize, b: usize) -> Rational64 {
        if let Some(v) = self.cache.get(&(a, b)) {
            return *v;
        }
        let rs = self.rs;
        let npos = rs.num_positive();
        let (pa, pb) = (a < npos, b < npos);
        let v = if pa && pb {
            if a > b {
                -self.n(b, a)
            } else {
                let xi = rs.root(a).add(rs.root(b));
                let ap = (0..npos)
                    .find(|&i| rs.index_of(&xi.sub(rs.root(i))).is_some_and(|j| j < npos))
                    .expect("non-simple root has a decomposition");
                let bp = rs.index_of(&xi.sub(rs.root(ap))).unwrap();
                let ext = Rational64::from_integer(self.p(ap, bp) + 1);
                if a == ap {
                    ext
                } else {
                    // N_{-a',-b'} = -(p+1)^2 / N_{a',b'} = -(p+1)
                    let n_neg = -ext;
                    let (nap, nbp) = (rs.neg_index(ap), rs.neg_index(bp));
                    let mut s = Rational64::zero();
                    let b_minus = rs.index_of(&rs.root(b).sub(rs.root(ap)));
                    if let Some(x) = b_minus {
                        s += self.n(b, nap) * self.n_or_zero(a, nbp) / self.norm(x);
                    }
                    let a_minus = rs.index_of(&rs.root(a).sub(rs.root(ap)));
                    if let Some(x) = a_minus {
                        s += self.n(nap, a) * self.n_or_zero(b, nbp) / self.norm(x);
                    }
                    -Rational64::from_integer(rs.norm2(&xi)) * s / n_neg
                }
            }
        } else if !pa && !pb {
            let p1 = self.p(a, b) + 1;
            Rational64::from_integer(-p1 * p1) / self.n(rs.neg_index(a), rs.neg_index(b))
        } else {
            let g = rs
                .index_of(&rs.root(a).add(rs.root(b)).neg())
                .expect("caller checked that a + b is a root");
            if pb == (g < npos) {
                self.n(b, g) * self.norm(g) / self.norm(a)
            } else {
                self.n(g, a) * self.norm(g) / self.norm(b)
            }
        };
        self.cache.insert((a, b), v);
        v
    }
}

/// All nonzero `N_{a,b}` keyed by root indices.
pub(crate) fn structure_constants(rs: &RootSystem) -> HashMap<(usize, usize), i32> {
    let mut solver = Solver { rs, cache: HashMap::new() };
    let mut out = HashMap::new();
    let n = rs.num_roots();
    for a in 0..n {
        for b in 0..n {
            if solver.sum_index(a, b).is_none() {
                continue;
            }
            let v = solver.n(a, b);
            assert!(v.denom().is_one(), "non-integral structure constant {v}");
            out.insert((a, b), *v.numer() as i32);
        }
    }
    out
}

/// Extraspecial pair of a non-simple positive root.
pub fn extraspecial_pair(rs: &RootSystem, xi: &Root) -> Option<(usize, usize)> {
    let npos = rs.num_positive();
    let ap = (0..npos).find(|&i| rs.index_of(&xi.sub(rs.root(i))).is_some_and(|j| j < npos))?;
    let bp = rs.index_of(&xi.sub(rs.root(ap)))?;
    Some((ap, bp))
}
