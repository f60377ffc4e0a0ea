use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{LieExpr, LiePoly};
use crate::error::{Error, Result};
use crate::scalar::Field;

/// Coefficients `a_1..a_m` of `Σ a_i E_i(X, Y)`, with `a_m ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngelSpec {
    pub coeffs: Vec<BigRational>,
}

impl EngelSpec {
    pub fn m(&self) -> usize {
        self.coeffs.len()
    }

    /// Degree of the polynomial in `X, Y`.
    pub fn degree(&self) -> usize {
        self.m() + 1
    }

    pub fn is_plain(&self) -> bool {
        self.coeffs[..self.m() - 1].iter().all(Zero::is_zero) && self.coeffs[self.m() - 1].is_one()
    }

    /// `f(t) = Σ (-1)^i a_i t^i`, as coefficients of `t^0..t^m`.
    pub fn f_coeffs(&self) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero()];
        for (k, a) in self.coeffs.iter().enumerate() {
            v.push(if (k + 1) % 2 == 1 { -a.clone() } else { a.clone() });
        }
        v
    }

    pub fn f_in<F: Field>(&self, field: &F) -> Result<Vec<F::Elem>> {
        self.f_coeffs().iter().map(|c| field.from_rational(c)).collect()
    }

    pub fn eval_f<F: Field>(&self, field: &F, t: &F::Elem) -> Result<F::Elem> {
        let f = self.f_in(field)?;
        Ok(horner(field, &f, t))
    }

    /// Distinct roots of `f` in the field.
    pub fn roots<F: Field>(&self, field: &F) -> Result<Vec<F::Elem>> {
        let f = self.f_in(field)?;
        if let Some(all) = field.elements() {
            return Ok(all.into_iter().filter(|t| field.is_zero(&horner(field, &f, t))).collect());
        }
        let mut out: Vec<F::Elem> = Vec::new();
        for r in rational_root_candidates(&self.f_coeffs())? {
            let t = field.from_rational(&r)?;
            if field.is_zero(&horner(field, &f, &t)) && !out.contains(&t) {
                out.push(t);
            }
        }
        Ok(out)
    }
}

fn horner<F: Field>(field: &F, f: &[F::Elem], t: &F::Elem) -> F::Elem {
    f.iter().rev().fold(field.zero(), |acc, c| field.add(&field.mul(&acc, t), c))
}

const DIVISOR_LIMIT: u64 = 1_000_000_000_000;

fn divisors(n: &BigInt) -> Result<Vec<u64>> {
    let n = n.abs().to_u64().filter(|&v| v <= DIVISOR_LIMIT).ok_or_else(|| Error::Invalid("coefficient too large for rational root search".into()))?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// `0` together with every `±p/q` allowed by the rational root theorem.
fn rational_root_candidates(f: &[BigRational]) -> Result<Vec<BigRational>> {
    let lcm = f.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = f.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let mut out = vec![BigRational::zero()];
    let Some(low) = ints.iter().position(|c| !c.is_zero()) else {
        return Ok(out);
    };
    let high = ints.iter().rposition(|c| !c.is_zero()).expect("nonzero");
    if low == high {
        return Ok(out);
    }
    for p in divisors(&ints[low])? {
        for q in divisors(&ints[high])? {
            let r = BigRational::new(p.into(), q.into());
            for s in [r.clone(), -r] {
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
    }
    Ok(out)
}

/// Build `Σ a_i E_i(X1, X2)` with `E_1 = [X1,X2]`, `E_k = [E_{k-1}, X2]`.
///
/// Trailing zero coefficients are dropped.
pub fn make_engel(coeffs: &[BigRational]) -> Result<(LiePoly, EngelSpec)> {
    let m = coeffs.iter().rposition(|c| !c.is_zero()).ok_or_else(|| Error::BadEngel("coefficients are empty or all zero".into()))? + 1;
    let coeffs = coeffs[..m].to_vec();
    let mut e = LieExpr::bracket(LieExpr::Var(1), LieExpr::Var(2));
    let mut terms = Vec::new();
    for (k, a) in coeffs.iter().enumerate() {
        if k > 0 {
            e = LieExpr::bracket(e, LieExpr::Var(2));
        }
        if !a.is_zero() {
            terms.push((a.clone(), e.clone()));
        }
    }
    let expr = if terms.len() == 1 && terms[0].0.is_one() { terms.pop().expect("one term").1 } else { LieExpr::Sum(terms) };
    Ok((LiePoly::with_arity(expr, 2), EngelSpec { coeffs }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freelie::parse;
    use crate::scalar::{rat, PrimeField, Rationals};

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn examples() {
        let (p, s) = make_engel(&ints(&[1])).unwrap();
        assert_eq!(p, parse("[X,Y]").unwrap());
        assert!(s.is_plain());
        let (p, s) = make_engel(&ints(&[0, 1])).unwrap();
        assert_eq!(p, parse("[[X,Y],Y]").unwrap());
        assert_eq!(s.degree(), 3);
        let (p, s) = make_engel(&ints(&[1, 1])).unwrap();
        assert_eq!(p.print(), "[X1,X2] + [[X1,X2],X2]");
        assert_eq!(s.f_coeffs(), ints(&[0, -1, 1]));
        assert!(!s.is_plain());
        let (_, s) = make_engel(&ints(&[2, 0, 0])).unwrap();
        assert_eq!(s.m(), 1);
        assert!(matches!(make_engel(&[]), Err(Error::BadEngel(_))));
        assert!(matches!(make_engel(&ints(&[0, 0])), Err(Error::BadEngel(_))));
    }

    #[test]
    fn engel_has_no_linear_part() {
        let (p, _) = make_engel(&ints(&[3, -1, 2])).unwrap();
        assert!(p.linear_part().iter().all(Zero::is_zero));
        assert_eq!(p.min_monomial_degree().unwrap(), 2);
        let (e3, _) = make_engel(&ints(&[0, 0, 1])).unwrap();
        assert_eq!(e3.min_monomial_degree().unwrap(), 4);
    }

    #[test]
    fn roots_of_f() {
        // f = -t + t^2 = t(t-1)
        let (_, s) = make_engel(&ints(&[1, 1])).unwrap();
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(s.roots(&f7).unwrap(), vec![0, 1]);
        let mut r = s.roots(&Rationals).unwrap();
        r.sort();
        assert_eq!(r, ints(&[0, 1]));
        // f = -6t - 4t^3 has only the root 0 over Q
        let (_, s) = make_engel(&ints(&[6, 0, 4])).unwrap();
        assert_eq!(s.roots(&Rationals).unwrap(), ints(&[0]));
        // f = -t + 3/2 t^2 -> roots 0, 2/3
        let (_, s) = make_engel(&[rat(1, 1), rat(3, 2)]).unwrap();
        let mut r = s.roots(&Rationals).unwrap();
        r.sort();
        assert_eq!(r, vec![rat(0, 1), rat(2, 3)]);
        // plain Engel: f = ±t^m
        let (_, s) = make_engel(&ints(&[0, 0, 1])).unwrap();
        assert_eq!(s.roots(&f7).unwrap(), vec![0]);
        assert_eq!(s.roots(&Rationals).unwrap(), ints(&[0]));
    }
}
