use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::with_workers;
use crate::chevalley::{AlgElement, ChevalleyAlgebra};
use crate::error::{Error, Result};
use crate::freelie::LiePoly;
use crate::scalar::Field;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    Exhaustive,
    Sampled { count: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Hit<E> {
    pub element: AlgElement<E>,
    /// number of assignments mapping here
    pub count: u64,
    /// the assignment with the least index (or sample number) reaching this element
    pub preimage: Vec<AlgElement<E>>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClassCounts {
    pub zero: u64,
    pub central_nonzero: u64,
    pub noncentral: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ImageReport<E> {
    pub algebra: String,
    pub polynomial: String,
    pub mode: ScanMode,
    pub domain_size: u128,
    pub evaluated: u64,
    pub elements_total: u64,
    pub central_total: u64,
    /// assignments landing in each class
    pub hit_counts: ClassCounts,
    /// distinct elements attained in each class
    pub attained: ClassCounts,
    pub contains_all_noncentral: bool,
    pub hits: Vec<Hit<E>>,
    pub central_hits: Vec<Hit<E>>,
    /// up to [`MISSED_SAMPLE`] unattained noncentral elements, least index first
    pub missed: Vec<AlgElement<E>>,
}

pub const MISSED_SAMPLE: usize = 16;
const CHUNK: u64 = 4096;
const MAX_ELEMENTS: u64 = 1 << 40;

/// Element indices in base `q`, coordinate `0` least significant.
pub(crate) struct Codec<'a, F: Field> {
    pub field: &'a F,
    pub q: u64,
    pub dim: usize,
}

impl<F: Field> Codec<'_, F> {
    pub fn encode(&self, x: &[F::Elem]) -> u64 {
        x.iter().rev().fold(0u64, |acc, c| acc * self.q + self.field.index_of(c))
    }

    pub fn decode(&self, mut n: u64) -> AlgElement<F::Elem> {
        (0..self.dim)
            .map(|_| {
                let c = self.field.element(n % self.q);
                n /= self.q;
                c
            })
            .collect()
    }
}

pub(crate) fn central_elements<F: Field>(alg: &ChevalleyAlgebra<F>) -> Vec<AlgElement<F::Elem>> {
    let f = alg.field();
    let basis = alg.center();
    let q = f.size().expect("finite field");
    let mut out = Vec::new();
    let total = q.pow(basis.len() as u32);
    for n in 0..total {
        let mut x = alg.zero();
        let mut r = n;
        for b in &basis {
            let c = f.element(r % q);
            r /= q;
            x = alg.add(&x, &alg.scale(&c, b));
        }
        out.push(x);
    }
    out
}

type Local = BTreeMap<u64, (u128, u64, Vec<u32>)>;

fn merge(mut a: Local, b: Local) -> Local {
    for (k, (key, count, digits)) in b {
        match a.get_mut(&k) {
            Some(e) => {
                e.1 += count;
                if key < e.0 {
                    e.0 = key;
                    e.2 = digits;
                }
            }
            None => {
                a.insert(k, (key, count, digits));
            }
        }
    }
    a
}

/// Image of the polynomial map `p` on a finite Chevalley algebra.
pub fn image_scan<F: Field>(alg: &ChevalleyAlgebra<F>, p: &LiePoly, mode: ScanMode, budget: u64, workers: usize) -> Result<ImageReport<F::Elem>> {
    let f = alg.field();
    let q = f.size().ok_or_else(|| Error::Invalid("image scans need a finite field".into()))?;
    let dim = alg.dim();
    let elements_total = q.checked_pow(dim as u32).filter(|&n| n <= MAX_ELEMENTS).ok_or_else(|| Error::BudgetExceeded {
        size: format!("{q}^{dim}"),
        budget: MAX_ELEMENTS,
    })?;
    let codec = Codec { field: f, q, dim };
    let coords = p.arity * dim;
    let domain_size = (q as u128).checked_pow(coords as u32).unwrap_or(u128::MAX);
    let samples = match mode {
        ScanMode::Exhaustive => {
            if domain_size > budget as u128 {
                return Err(Error::BudgetExceeded { size: format!("{q}^{coords}"), budget });
            }
            domain_size as u64
        }
        ScanMode::Sampled { count, .. } => count,
    };

    let eval_digits = |digits: &[u32]| -> Result<AlgElement<F::Elem>> {
        let xs: Vec<AlgElement<F::Elem>> = digits.chunks(dim).map(|c| c.iter().map(|&i| f.element(i as u64)).collect()).collect();
        p.evaluate(alg, &xs)
    };
    let chunks = samples.div_ceil(CHUNK);
    let run_chunk = |c: u64| -> Result<Local> {
        let mut local = Local::new();
        let start = c * CHUNK;
        let end = (start + CHUNK).min(samples);
        let mut rng = ChaCha8Rng::seed_from_u64(match mode {
            ScanMode::Sampled { seed, .. } => seed,
            ScanMode::Exhaustive => 0,
        });
        rng.set_stream(c);
        let mut digits = vec![0u32; coords];
        if mode == ScanMode::Exhaustive {
            let mut r = start;
            for d in digits.iter_mut() {
                *d = (r % q) as u32;
                r /= q;
            }
        }
        for n in start..end {
            if let ScanMode::Sampled { .. } = mode {
                for d in digits.iter_mut() {
                    *d = rng.gen_range(0..q) as u32;
                }
            }
            let v = eval_digits(&digits)?;
            let k = codec.encode(&v);
            let e = local.entry(k).or_insert_with(|| (n as u128, 0, digits.clone()));
            e.1 += 1;
            if mode == ScanMode::Exhaustive {
                for d in digits.iter_mut() {
                    *d += 1;
                    if (*d as u64) < q {
                        break;
                    }
                    *d = 0;
                }
            }
        }
        Ok(local)
    };
    let merged = with_workers(workers, || {
        (0..chunks).into_par_iter().map(run_chunk).try_reduce(Local::new, |a, b| Ok(merge(a, b)))
    })??;

    let central: BTreeSet<u64> = central_elements(alg).iter().map(|z| codec.encode(z)).collect();
    let mut hit_counts = ClassCounts::default();
    let mut attained = ClassCounts::default();
    let mut hits = Vec::new();
    let mut central_hits = Vec::new();
    for (&k, (_, count, digits)) in &merged {
        let hit = Hit {
            element: codec.decode(k),
            count: *count,
            preimage: digits.chunks(dim).map(|c| c.iter().map(|&i| f.element(i as u64)).collect()).collect(),
        };
        if k == 0 {
            hit_counts.zero += count;
            attained.zero += 1;
        } else if central.contains(&k) {
            hit_counts.central_nonzero += count;
            attained.central_nonzero += 1;
            central_hits.push(hit.clone());
        } else {
            hit_counts.noncentral += count;
            attained.noncentral += 1;
        }
        hits.push(hit);
    }
    let central_total = central.len() as u64;
    let noncentral_total = elements_total - central_total;
    let mut missed = Vec::new();
    if attained.noncentral < noncentral_total {
        for k in 0..elements_total {
            if missed.len() == MISSED_SAMPLE {
                break;
            }
            if !central.contains(&k) && !merged.contains_key(&k) {
                missed.push(codec.decode(k));
            }
        }
    }
    Ok(ImageReport {
        algebra: alg.label(),
        polynomial: p.print(),
        mode,
        domain_size,
        evaluated: samples,
        elements_total,
        central_total,
        hit_counts,
        attained,
        contains_all_noncentral: attained.noncentral == noncentral_total,
        hits,
        central_hits,
        missed,
    })
}
