use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::LieExpr;

type Assoc = BTreeMap<Vec<u8>, BigRational>;

/// Coordinates of a free Lie polynomial in the Lyndon basis `P_w`.
///
/// Words are over the letters `1, 2, …` (variable indices) ordered
/// numerically.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LyndonForm {
    terms: BTreeMap<Vec<u8>, BigRational>,
}

impl LyndonForm {
    pub fn of(expr: &LieExpr) -> Self {
        let mut assoc = expand(expr);
        let mut cache = HashMap::new();
        let mut terms = BTreeMap::new();
        // the (length, lex)-least word of a Lie element is Lyndon and occurs in
        // P_w with coefficient 1, accompanied only by larger words
        while let Some(w) = assoc.keys().min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b))).cloned() {
            let c = assoc[&w].clone();
            debug_assert!(is_lyndon(&w));
            for (u, d) in bracket_expansion(&w, &mut cache).iter() {
                add_to(&mut assoc, u.clone(), -(c.clone() * d));
            }
            terms.insert(w, c);
        }
        LyndonForm { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, word: &[u8]) -> Option<&BigRational> {
        self.terms.get(word)
    }

    /// Terms sorted by degree, then lexicographically.
    pub fn terms(&self) -> Vec<(&[u8], &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(w, c)| (w.as_slice(), c)).collect();
        v.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(b.0)));
        v
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).max()
    }

    /// The normal form written back as a bracket expression.
    pub fn to_expr(&self) -> LieExpr {
        LieExpr::Sum(self.terms().into_iter().map(|(w, c)| (c.clone(), lyndon_bracket(w))).collect())
    }
}

impl fmt::Display for LyndonForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        self.to_expr().fmt(f)
    }
}

pub fn is_lyndon(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// `w = uv` with `v` the longest proper Lyndon suffix of `w`.
pub fn standard_factorization(w: &[u8]) -> Option<(&[u8], &[u8])> {
    if w.len() < 2 {
        return None;
    }
    let i = (1..w.len()).find(|&i| is_lyndon(&w[i..]))?;
    Some((&w[..i], &w[i..]))
}

fn lyndon_bracket(w: &[u8]) -> LieExpr {
    match standard_factorization(w) {
        None => LieExpr::Var(w[0] as usize),
        Some((u, v)) => LieExpr::bracket(lyndon_bracket(u), lyndon_bracket(v)),
    }
}

fn add_to(m: &mut Assoc, w: Vec<u8>, c: BigRational) {
    if c.is_zero() {
        return;
    }
    match m.get_mut(&w) {
        Some(e) => {
            *e += c;
            if e.is_zero() {
                m.remove(&w);
            }
        }
        None => {
            m.insert(w, c);
        }
    }
}

fn commutator(a: &Assoc, b: &Assoc) -> Assoc {
    let mut out = Assoc::new();
    for (u, x) in a {
        for (v, y) in b {
            let c = x * y;
            let mut uv = u.clone();
            uv.extend_from_slice(v);
            add_to(&mut out, uv, c.clone());
            let mut vu = v.clone();
            vu.extend_from_slice(u);
            add_to(&mut out, vu, -c);
        }
    }
    out
}

/// Image in the free associative algebra.
fn expand(e: &LieExpr) -> Assoc {
    match e {
        LieExpr::Var(i) => Assoc::from([(vec![*i as u8], BigRational::one())]),
        LieExpr::Bracket(a, b) => commutator(&expand(a), &expand(b)),
        LieExpr::Sum(terms) => {
            let mut out = Assoc::new();
            for (c, t) in terms {
                if c.is_zero() {
                    continue;
                }
                for (w, d) in expand(t) {
                    add_to(&mut out, w, c * d);
                }
            }
            out
        }
    }
}

fn bracket_expansion<'c>(w: &[u8], cache: &'c mut HashMap<Vec<u8>, Assoc>) -> &'c Assoc {
    if !cache.contains_key(w) {
        let v = match standard_factorization(w) {
            None => Assoc::from([(w.to_vec(), BigRational::one())]),
            Some((u, v)) => {
                let a = bracket_expansion(u, cache).clone();
                let b = bracket_expansion(v, cache).clone();
                commutator(&a, &b)
            }
        };
        cache.insert(w.to_vec(), v);
    }
    &cache[w]
}
