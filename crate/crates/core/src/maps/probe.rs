use std::collections::BTreeMap;

use num_traits::One;
use rayon::prelude::*;

use super::scan::{central_elements, Codec};
use super::with_workers;
use crate::chevalley::{AlgElement, ChevalleyAlgebra};
use crate::error::{Error, Result};
use crate::freelie::{make_engel, LiePoly};
use crate::linalg::{solve, MatrixOps};
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq)]
pub struct CentralHit<E> {
    pub value: AlgElement<E>,
    pub x: AlgElement<E>,
    pub y: AlgElement<E>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbeRow<E> {
    pub m: usize,
    pub central_hits: Vec<CentralHit<E>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbeReport<E> {
    pub algebra: String,
    pub center_dim: usize,
    pub m_from: usize,
    pub m_to: usize,
    /// number of `Y` values enumerated
    pub y_count: u64,
    pub rows: Vec<ProbeRow<E>>,
    /// least `m` in range from which no row has central hits
    pub m0: Option<usize>,
}

pub fn engel(m: usize) -> LiePoly {
    let mut c = vec![num_rational::BigRational::default(); m];
    c[m - 1] = num_rational::BigRational::one();
    make_engel(&c).expect("nonzero").0
}

/// Which nonzero central elements `E_m(X, Y)` attains, for each `m` in range.
///
/// For fixed `Y` the values `E_m(X, Y)` over all `X` form the column space of
/// `R_Y^m` with `R_Y = [·, Y]`, so enumerating `Y` and solving one linear
/// system per central element covers every pair `(X, Y)`.
pub fn central_image_probe<F: Field>(
    alg: &ChevalleyAlgebra<F>,
    m_from: usize,
    m_to: usize,
    budget: u64,
    workers: usize,
) -> Result<ProbeReport<F::Elem>> {
    let f = alg.field();
    let q = f.size().ok_or_else(|| Error::Invalid("the central probe needs a finite field".into()))?;
    let center = alg.center();
    if center.is_empty() {
        return Err(Error::TrivialCenter);
    }
    let dim = alg.dim();
    let m_from = m_from.max(1);
    let mut report = ProbeReport {
        algebra: alg.label(),
        center_dim: center.len(),
        m_from,
        m_to,
        y_count: 0,
        rows: Vec::new(),
        m0: None,
    };
    if m_from > m_to {
        return Ok(report);
    }
    let y_count = q.checked_pow(dim as u32).filter(|&n| n <= budget).ok_or_else(|| Error::BudgetExceeded { size: format!("{q}^{dim}"), budget })?;
    report.y_count = y_count;
    let codec = Codec { field: f, q, dim };
    let targets: Vec<AlgElement<F::Elem>> = central_elements(alg).into_iter().filter(|z| !alg.is_zero(z)).collect();

    // (m, target) -> (least y index, x)
    type Found<E> = BTreeMap<(usize, usize), (u64, AlgElement<E>)>;
    let per_y = |yi: u64| -> Found<F::Elem> {
        let mut found = Found::new();
        let y = codec.decode(yi);
        let r = alg.right_ad_matrix(&y);
        let mut pow = r.clone();
        for m in 1..=m_to {
            if m > 1 {
                pow = pow.mul(f, &r);
            }
            if pow.is_zero(f) {
                break;
            }
            if m < m_from {
                continue;
            }
            for (t, z) in targets.iter().enumerate() {
                if let Some(x) = solve(f, &pow, z) {
                    found.insert((m, t), (yi, x));
                }
            }
        }
        found
    };
    let merge = |mut a: Found<F::Elem>, b: Found<F::Elem>| {
        for (k, v) in b {
            match a.get(&k) {
                Some(old) if old.0 <= v.0 => {}
                _ => {
                    a.insert(k, v);
                }
            }
        }
        a
    };
    let found = with_workers(workers, || (0..y_count).into_par_iter().map(per_y).reduce(Found::new, merge))?;

    for m in m_from..=m_to {
        let p = engel(m);
        let mut hits = Vec::new();
        for (t, z) in targets.iter().enumerate() {
            if let Some((yi, x)) = found.get(&(m, t)) {
                let y = codec.decode(*yi);
                if &p.evaluate(alg, &[x.clone(), y.clone()])? != z {
                    return Err(Error::Internal(format!("central hit for m = {m} does not re-evaluate")));
                }
                hits.push(CentralHit { value: z.clone(), x: x.clone(), y });
            }
        }
        report.rows.push(ProbeRow { m, central_hits: hits });
    }
    report.m0 = report.rows.iter().rposition(|r| !r.central_hits.is_empty()).map_or(Some(m_from), |i| {
        let m = report.rows[i].m + 1;
        (m <= m_to).then_some(m)
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::build_chevalley;
    use crate::rootsystem::{build_root_system, RootType};
    use crate::scalar::PrimeField;

    fn alg(kind: RootType, r: usize, p: u64) -> ChevalleyAlgebra<PrimeField> {
        let f = PrimeField::new(p).unwrap();
        build_chevalley(build_root_system(kind, r, &f.descriptor()).unwrap(), f).unwrap()
    }

    #[test]
    fn trivial_center_and_empty_range() {
        assert_eq!(central_image_probe(&alg(RootType::A, 1, 5), 1, 3, 1 << 20, 1), Err(Error::TrivialCenter));
        let r = central_image_probe(&alg(RootType::A, 2, 3), 5, 4, 1 << 20, 1).unwrap();
        assert!(r.rows.is_empty());
        assert_eq!(r.m0, None);
    }

    #[test]
    fn agrees_with_brute_force_for_fixed_y() {
        // for a handful of Y, enumerate every X and compare central attainment
        let a = alg(RootType::A, 2, 3);
        let f = a.field();
        let codec = Codec { field: f, q: 3, dim: 8 };
        let targets: Vec<_> = central_elements(&a).into_iter().filter(|z| !a.is_zero(z)).collect();
        for yi in [1u64, 100, 2024, 4000, 6560] {
            let y = codec.decode(yi);
            let r = a.right_ad_matrix(&y);
            let mut pow = r.clone();
            for m in 1..=3 {
                if m > 1 {
                    pow = pow.mul(f, &r);
                }
                let p = engel(m);
                let mut brute = vec![false; targets.len()];
                for xi in 0..6561 {
                    let v = p.evaluate(&a, &[codec.decode(xi), y.clone()]).unwrap();
                    if let Some(t) = targets.iter().position(|z| z == &v) {
                        brute[t] = true;
                    }
                }
                let lin: Vec<bool> = targets.iter().map(|z| solve(f, &pow, z).is_some()).collect();
                assert_eq!(brute, lin, "y = {yi}, m = {m}");
            }
        }
    }

    #[test]
    fn workers_do_not_change_the_table() {
        let a = alg(RootType::A, 2, 3);
        let r1 = central_image_probe(&a, 1, 3, 1 << 20, 1).unwrap();
        let r2 = central_image_probe(&a, 1, 3, 1 << 20, 4).unwrap();
        assert_eq!(r1, r2);
        assert!(!r1.rows[0].central_hits.is_empty());
    }
}
