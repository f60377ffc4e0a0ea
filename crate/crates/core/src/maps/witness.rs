use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::freelie::{LiePoly, MatrixLie};
use crate::linalg::{Matrix, MatrixOps};
use crate::matrixrep::{char_invariants, compare_theta, so5_j, InvariantPair, MatrixElement, RealizationKind, ThetaVerdict};
use crate::scalar::Field;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessResult {
    Confirmed,
    NotSeparated,
    Undefined,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WitnessCheck<E> {
    pub result: WitnessResult,
    pub values: [MatrixElement<E>; 2],
    pub invariants: [InvariantPair<E>; 2],
    pub theta: [(E, E); 2],
    pub zero_value: [bool; 2],
}

fn check_triple<E>(p: &LiePoly, t: &[MatrixElement<E>], kind: RealizationKind) -> Result<()> {
    if t.len() != p.arity {
        return Err(Error::ArityMismatch { expected: p.arity, got: t.len() });
    }
    if let Some(m) = t.iter().find(|m| m.realization != kind) {
        return Err(Error::Invalid(format!("realization mismatch: {} vs {}", m.realization, kind)));
    }
    Ok(())
}

fn supported(kind: RealizationKind) -> Result<()> {
    match kind {
        RealizationKind::Sl(3) | RealizationKind::So5 => Ok(()),
        other => Err(Error::UnsupportedRealization(other.to_string())),
    }
}

fn eval_matrix<F: Field>(field: &F, p: &LiePoly, kind: RealizationKind, t: &[MatrixElement<F::Elem>]) -> Result<MatrixElement<F::Elem>> {
    let alg = MatrixLie { field: field.clone(), n: kind.size() };
    let xs: Vec<Matrix<F::Elem>> = t.iter().map(|m| m.matrix.clone()).collect();
    MatrixElement::new(field, kind, p.evaluate(&alg, &xs)?)
}

/// Compare the θ pairs of `P(triple₁)` and `P(triple₂)`.
pub fn dominance_witness_check<F: Field>(
    field: &F,
    p: &LiePoly,
    triple1: &[MatrixElement<F::Elem>],
    triple2: &[MatrixElement<F::Elem>],
) -> Result<WitnessCheck<F::Elem>> {
    let kind = triple1.first().map(|m| m.realization).ok_or(Error::ArityMismatch { expected: p.arity, got: 0 })?;
    supported(kind)?;
    check_triple(p, triple1, kind)?;
    check_triple(p, triple2, kind)?;
    let d1 = eval_matrix(field, p, kind, triple1)?;
    let d2 = eval_matrix(field, p, kind, triple2)?;
    let i1 = char_invariants(field, &d1)?;
    let i2 = char_invariants(field, &d2)?;
    let t1 = i1.theta(field);
    let t2 = i2.theta(field);
    let zero_value = [d1.is_zero(field), d2.is_zero(field)];
    let result = if zero_value[0] || zero_value[1] {
        WitnessResult::Undefined
    } else {
        match compare_theta(field, &t1, &t2) {
            ThetaVerdict::Separated => WitnessResult::Confirmed,
            ThetaVerdict::Equal => WitnessResult::NotSeparated,
            ThetaVerdict::Undefined => WitnessResult::Undefined,
        }
    };
    Ok(WitnessCheck { result, values: [d1, d2], invariants: [i1, i2], theta: [t1, t2], zero_value })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchResult {
    Confirmed,
    /// inconclusive, not a disproof
    Exhausted,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WitnessSearch<E> {
    pub result: SearchResult,
    pub attempts: u64,
    pub triples: Option<[Vec<MatrixElement<E>>; 2]>,
    pub check: Option<WitnessCheck<E>>,
}

/// Random element with integer entries in `[-r, r]`.
pub fn random_element<F: Field, R: Rng>(field: &F, kind: RealizationKind, r: i64, rng: &mut R) -> Result<MatrixElement<F::Elem>> {
    match kind {
        RealizationKind::Sl(n) => {
            let mut m = Matrix::from_fn(n, n, |_, _| field.from_i64(rng.gen_range(-r..=r)));
            let mut tr = field.zero();
            for i in 0..n - 1 {
                tr = field.add(&tr, m.get(i, i));
            }
            m.set(n - 1, n - 1, field.neg(&tr));
            MatrixElement::new(field, kind, m)
        }
        RealizationKind::So5 => {
            let mut s = Matrix::zeros(field, 5, 5);
            for i in 0..5 {
                for j in i + 1..5 {
                    let v = field.from_i64(rng.gen_range(-r..=r));
                    s.set(j, i, field.neg(&v));
                    s.set(i, j, v);
                }
            }
            MatrixElement::new(field, kind, so5_j(field).mul(field, &s))
        }
    }
}

/// Sample triples until one separates from a reference value.
///
/// Entries start in `[-10, 10]` and widen to `[-100, 100]` for the second
/// half of the budget.
pub fn dominance_witness_search<F: Field>(
    field: &F,
    p: &LiePoly,
    kind: RealizationKind,
    budget: u64,
    seed: u64,
) -> Result<WitnessSearch<F::Elem>> {
    supported(kind)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reference: Option<(Vec<MatrixElement<F::Elem>>, (F::Elem, F::Elem))> = None;
    for attempt in 1..=budget {
        let r = if attempt * 2 <= budget { 10 } else { 100 };
        let t: Vec<_> = (0..p.arity).map(|_| random_element(field, kind, r, &mut rng)).collect::<Result<_>>()?;
        let v = eval_matrix(field, p, kind, &t)?;
        if v.is_zero(field) {
            continue;
        }
        let theta = char_invariants(field, &v)?.theta(field);
        if field.is_zero(&theta.0) && field.is_zero(&theta.1) {
            continue;
        }
        match &reference {
            None => reference = Some((t, theta)),
            Some((t0, th0)) => {
                if compare_theta(field, th0, &theta) == ThetaVerdict::Separated {
                    let check = dominance_witness_check(field, p, t0, &t)?;
                    if check.result != WitnessResult::Confirmed {
                        return Err(Error::Internal("witness search and check disagree".into()));
                    }
                    return Ok(WitnessSearch {
                        result: SearchResult::Confirmed,
                        attempts: attempt,
                        triples: Some([t0.clone(), t]),
                        check: Some(check),
                    });
                }
            }
        }
    }
    Ok(WitnessSearch { result: SearchResult::Exhausted, attempts: budget, triples: None, check: None })
}
