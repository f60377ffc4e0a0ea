use super::sl2;
use crate::chevalley::AlgElement;
use crate::error::{Error, Result};
use crate::freelie::{named_polynomial, parse, LiePoly};
use crate::scalar::Field;

pub fn example48_polynomial() -> LiePoly {
    parse(named_polynomial("example48").expect("bundled")).expect("bundled polynomial parses")
}

fn char_check<F: Field>(field: &F) -> Result<()> {
    if field.characteristic() == 2 {
        return Err(Error::BadCharacteristic { char: 2, reason: "the closed form needs 2 invertible".into() });
    }
    Ok(())
}

/// `4a²cs·h + 8a²ds·e + 8abds·f` with `s = 4bd² − ac²`, in the basis `(h, e, f)`.
pub fn example48_closed_form<F: Field>(field: &F, a: &F::Elem, b: &F::Elem, c: &F::Elem, d: &F::Elem) -> Result<AlgElement<F::Elem>> {
    closed_form(field, a, b, c, d, 8)
}

/// The same expression with the `e` coefficient negated, which is what
/// direct evaluation produces.
pub fn example48_corrected<F: Field>(field: &F, a: &F::Elem, b: &F::Elem, c: &F::Elem, d: &F::Elem) -> Result<AlgElement<F::Elem>> {
    closed_form(field, a, b, c, d, -8)
}

fn closed_form<F: Field>(field: &F, a: &F::Elem, b: &F::Elem, c: &F::Elem, d: &F::Elem, e_coeff: i64) -> Result<AlgElement<F::Elem>> {
    char_check(field)?;
    let m = |x: &F::Elem, y: &F::Elem| field.mul(x, y);
    let k = |n: i64| field.from_i64(n);
    let s = field.sub(&m(&k(4), &m(b, &m(d, d))), &m(a, &m(c, c)));
    let a2s = m(&m(a, a), &s);
    Ok(vec![m(&k(4), &m(&a2s, c)), m(&k(e_coeff), &m(&a2s, d)), m(&k(8), &m(&m(a, b), &m(d, &s)))])
}

/// `P(ae + bf, cf + dh)` by direct bracket evaluation.
pub fn example48_direct<F: Field>(field: &F, a: &F::Elem, b: &F::Elem, c: &F::Elem, d: &F::Elem) -> Result<AlgElement<F::Elem>> {
    char_check(field)?;
    let alg = sl2(field)?;
    let z = field.zero();
    let x = vec![z.clone(), a.clone(), b.clone()];
    let y = vec![d.clone(), z, c.clone()];
    example48_polynomial().evaluate(&alg, &[x, y])
}

#[derive(Debug, Clone, PartialEq)]
pub struct Example48Check<E> {
    pub tuples: u64,
    pub printed_mismatches: u64,
    pub corrected_mismatches: u64,
    /// first `(a, b, c, d)` where the printed formula disagrees, with both values
    pub first_mismatch: Option<([E; 4], AlgElement<E>, AlgElement<E>)>,
}

/// Compare both closed forms with direct evaluation on every `(a, b, c, d)`.
pub fn example48_check<F: Field>(field: &F) -> Result<Example48Check<F::Elem>> {
    let elems = field.elements().ok_or_else(|| Error::Invalid("exhaustive check needs a finite field".into()))?;
    let mut out = Example48Check { tuples: 0, printed_mismatches: 0, corrected_mismatches: 0, first_mismatch: None };
    for a in &elems {
        for b in &elems {
            for c in &elems {
                for d in &elems {
                    out.tuples += 1;
                    let direct = example48_direct(field, a, b, c, d)?;
                    let printed = example48_closed_form(field, a, b, c, d)?;
                    if printed != direct {
                        out.printed_mismatches += 1;
                        if out.first_mismatch.is_none() {
                            out.first_mismatch = Some(([a.clone(), b.clone(), c.clone(), d.clone()], printed, direct.clone()));
                        }
                    }
                    if example48_corrected(field, a, b, c, d)? != direct {
                        out.corrected_mismatches += 1;
                    }
                }
            }
        }
    }
    Ok(out)
}
