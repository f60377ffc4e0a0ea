use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::sl2;
use crate::chevalley::ChevalleyAlgebra;
use crate::error::{Error, Result};
use crate::freelie::{LieAlgebra, LiePoly};
use crate::mpoly::SymbolicSl2;
use crate::scalar::Field;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityResult {
    Identity,
    NotIdentity,
    ProbablyIdentity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityMode {
    ExactSymbolic,
    /// `trials` independent points with coordinates drawn from a grid of `grid` values
    Randomized { trials: u32, grid: u64 },
}

impl IdentityMode {
    pub fn name(&self) -> &'static str {
        match self {
            IdentityMode::ExactSymbolic => "exact_symbolic",
            IdentityMode::Randomized { .. } => "randomized",
        }
    }
}

/// How the verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityReason {
    ZeroNormalForm,
    LowDegreeMonomial,
    Symbolic,
    VanishesOnField,
    Sampling,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityVerdict<E> {
    pub result: IdentityResult,
    pub mode: IdentityMode,
    pub reason: IdentityReason,
    /// sl(2) coordinates `(h, e, f)` of each variable
    pub witness: Option<Vec<Vec<E>>>,
    pub value: Option<Vec<E>>,
    pub failure_bound: Option<BigRational>,
    pub degree: usize,
}

const MAX_EXACT_VARS: usize = 4;
const MAX_EXACT_DEGREE: usize = 12;
const SHORTCUT_TRIES: u32 = 10_000;
const FULL_ENUMERATION: u64 = 1_000_000;

/// Decide whether `p` vanishes identically on `sl(2)` over `field`.
pub fn is_identity_sl2<F: Field>(p: &LiePoly, field: &F, mode: IdentityMode, seed: u64) -> Result<IdentityVerdict<F::Elem>> {
    if field.characteristic() == 2 {
        return Err(Error::BadCharacteristic { char: 2, reason: "sl(2) is nilpotent in characteristic 2".into() });
    }
    let alg = sl2(field)?;
    let nf = p.normal_form();
    let verdict = |result, reason, witness: Option<(Vec<Vec<F::Elem>>, Vec<F::Elem>)>, bound, degree| {
        let (witness, value) = witness.map_or((None, None), |(w, v)| (Some(w), Some(v)));
        IdentityVerdict { result, mode, reason, witness, value, failure_bound: bound, degree }
    };
    let Some(degree) = nf.max_degree() else {
        return Ok(verdict(IdentityResult::Identity, IdentityReason::ZeroNormalForm, None, None, 0));
    };
    let d = p.arity;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    if field.size().is_none() && nf.min_degree().is_some_and(|m| m < 5) {
        if let Some(w) = basis_witness(&alg, p)? {
            return Ok(verdict(IdentityResult::NotIdentity, IdentityReason::LowDegreeMonomial, Some(w), None, degree));
        }
        for _ in 0..SHORTCUT_TRIES {
            if let Some(w) = try_point(&alg, p, |_| field.from_i64(rng.gen_range(-8..=8)))? {
                return Ok(verdict(IdentityResult::NotIdentity, IdentityReason::LowDegreeMonomial, Some(w), None, degree));
            }
        }
    }

    match mode {
        IdentityMode::ExactSymbolic => {
            if d > MAX_EXACT_VARS || degree > MAX_EXACT_DEGREE {
                return Err(Error::CostGuard(format!(
                    "exact mode allows at most {MAX_EXACT_VARS} variables and degree {MAX_EXACT_DEGREE}; got {d} and {degree}"
                )));
            }
            let sym = SymbolicSl2 { field: field.clone(), nvars: 3 * d };
            let xs: Vec<_> = (0..d).map(|i| sym.generic_element(i)).collect();
            let value = p.evaluate(&sym, &xs)?;
            if value.iter().all(|c| c.is_zero()) {
                return Ok(verdict(IdentityResult::Identity, IdentityReason::Symbolic, None, None, degree));
            }
            if let Some(w) = basis_witness(&alg, p)? {
                return Ok(verdict(IdentityResult::NotIdentity, IdentityReason::Symbolic, Some(w), None, degree));
            }
            let q = field.size().unwrap_or(u64::MAX);
            for _ in 0..SHORTCUT_TRIES {
                let pt: Vec<F::Elem> = (0..3 * d).map(|_| field.element(rng.gen_range(0..q.min(1 << 20)))).collect();
                if value.iter().any(|c| !field.is_zero(&c.eval(field, &pt))) {
                    let w = try_point(&alg, p, |k| pt[k].clone())?.ok_or_else(|| Error::Internal("symbolic and direct evaluation disagree".into()))?;
                    return Ok(verdict(IdentityResult::NotIdentity, IdentityReason::Symbolic, Some(w), None, degree));
                }
            }
            if let Some(total) = q.checked_pow(3 * d as u32).filter(|&t| q != u64::MAX && t <= FULL_ENUMERATION) {
                let mut pt: Vec<F::Elem> = vec![field.zero(); 3 * d];
                for n in 0..total {
                    let mut r = n;
                    for c in pt.iter_mut() {
                        *c = field.element(r % q);
                        r /= q;
                    }
                    if let Some(w) = try_point(&alg, p, |k| pt[k].clone())? {
                        return Ok(verdict(IdentityResult::NotIdentity, IdentityReason::Symbolic, Some(w), None, degree));
                    }
                }
                // nonzero polynomials that vanish at every point of a finite field
                return Ok(verdict(IdentityResult::Identity, IdentityReason::VanishesOnField, None, None, degree));
            }
            Err(Error::BudgetExhausted("coordinate polynomials are nonzero but no witness point was found".into()))
        }
        IdentityMode::Randomized { trials, grid } => {
            let s = field.size().map_or(grid, |q| grid.min(q)).max(1);
            for _ in 0..trials {
                if let Some(w) = try_point(&alg, p, |_| field.element(rng.gen_range(0..s)))? {
                    return Ok(verdict(IdentityResult::NotIdentity, IdentityReason::Sampling, Some(w), None, degree));
                }
            }
            let per_trial = BigRational::new(BigInt::from(degree), BigInt::from(s));
            let bound = if per_trial >= BigRational::one() { BigRational::one() } else { Pow::pow(per_trial, trials) };
            Ok(verdict(IdentityResult::ProbablyIdentity, IdentityReason::Sampling, None, Some(bound), degree))
        }
    }
}

type Witness<E> = (Vec<Vec<E>>, Vec<E>);

fn try_point<F: Field>(
    alg: &ChevalleyAlgebra<F>,
    p: &LiePoly,
    mut coord: impl FnMut(usize) -> F::Elem,
) -> Result<Option<Witness<F::Elem>>> {
    let xs: Vec<Vec<F::Elem>> = (0..p.arity).map(|i| (0..3).map(|k| coord(3 * i + k)).collect()).collect();
    let v = p.evaluate(alg, &xs)?;
    Ok(if LieAlgebra::zero(alg) == v { None } else { Some((xs, v)) })
}

/// Every assignment of basis vectors `h, e, f`, in lexicographic order.
fn basis_witness<F: Field>(alg: &ChevalleyAlgebra<F>, p: &LiePoly) -> Result<Option<Witness<F::Elem>>> {
    let d = p.arity;
    if d > 6 {
        return Ok(None);
    }
    let mut choice = vec![0usize; d];
    loop {
        let xs: Vec<Vec<F::Elem>> = choice.iter().rev().map(|&c| alg.unit(c)).collect();
        let v = p.evaluate(alg, &xs)?;
        if !alg.is_zero(&v) {
            return Ok(Some((xs, v)));
        }
        let mut k = 0;
        while k < d && choice[k] == 2 {
            choice[k] = 0;
            k += 1;
        }
        if k == d {
            return Ok(None);
        }
        choice[k] += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freelie::{named_polynomial, parse};
    use crate::scalar::{rat, PrimeField, Rationals};

    fn named(n: &str) -> LiePoly {
        parse(named_polynomial(n).unwrap()).unwrap()
    }

    #[test]
    fn named_identities() {
        for n in ["filippov", "razmyslov"] {
            let v = is_identity_sl2(&named(n), &Rationals, IdentityMode::ExactSymbolic, 0).unwrap();
            assert_eq!(v.result, IdentityResult::Identity, "{n}");
            assert_eq!(v.reason, IdentityReason::Symbolic);
        }
    }

    #[test]
    fn engel_is_not_an_identity() {
        let e2 = parse("[[X,Y],Y]").unwrap();
        let v = is_identity_sl2(&e2, &Rationals, IdentityMode::ExactSymbolic, 0).unwrap();
        assert_eq!(v.result, IdentityResult::NotIdentity);
        assert_eq!(v.reason, IdentityReason::LowDegreeMonomial);
        let alg = sl2(&Rationals).unwrap();
        assert_eq!(e2.evaluate(&alg, v.witness.as_ref().unwrap()).unwrap(), v.value.clone().unwrap());
        // (e, h) is the first basis witness in this order
        assert_eq!(v.witness.unwrap(), vec![alg.unit(1), alg.unit(0)]);
        assert_eq!(v.value.unwrap(), vec![rat(0, 1), rat(4, 1), rat(0, 1)]);
    }

    #[test]
    fn finite_fields_and_guards() {
        let f7 = PrimeField::new(7).unwrap();
        let v = is_identity_sl2(&parse("[[[X,Y],Y],Y]").unwrap(), &f7, IdentityMode::ExactSymbolic, 0).unwrap();
        assert_eq!(v.result, IdentityResult::NotIdentity);
        assert_eq!(v.reason, IdentityReason::Symbolic);
        let f2 = PrimeField::new(2).unwrap();
        assert!(matches!(is_identity_sl2(&named("filippov"), &f2, IdentityMode::ExactSymbolic, 0), Err(Error::BadCharacteristic { .. })));
        let big = parse("[[[X1,X2],[X3,X4]],X5]").unwrap();
        assert!(matches!(is_identity_sl2(&big, &f7, IdentityMode::ExactSymbolic, 0), Err(Error::CostGuard(_))));
        let v = is_identity_sl2(&parse("[X1,X1]").unwrap(), &f7, IdentityMode::ExactSymbolic, 0).unwrap();
        assert_eq!(v.reason, IdentityReason::ZeroNormalForm);
    }

    #[test]
    fn randomized_mode() {
        let mode = IdentityMode::Randomized { trials: 4, grid: 1 << 20 };
        let v = is_identity_sl2(&named("filippov"), &Rationals, mode, 7).unwrap();
        assert_eq!(v.result, IdentityResult::ProbablyIdentity);
        assert_eq!(v.failure_bound.unwrap(), Pow::pow(rat(5, 1 << 20), 4u32));
        let v = is_identity_sl2(&parse("[[[[X,Y],Y],Y],Y]").unwrap(), &Rationals, mode, 7).unwrap();
        assert_eq!(v.result, IdentityResult::NotIdentity);
        assert_eq!(v.reason, IdentityReason::Sampling);
        let v = is_identity_sl2(&named("filippov"), &PrimeField::new(3).unwrap(), IdentityMode::Randomized { trials: 3, grid: 100 }, 0).unwrap();
        assert_eq!(v.failure_bound.unwrap(), rat(1, 1));
    }
}
