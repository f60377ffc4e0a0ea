use serde_json::json;
use sha2::{Digest, Sha256};

use crate::chevalley::{AlgElement, ChevalleyAlgebra};
use crate::error::{Error, Result};
use crate::freelie::{make_engel, EngelSpec, LiePoly};
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq)]
pub struct EngelSolution<E> {
    pub x: AlgElement<E>,
    pub y: AlgElement<E>,
    pub target: AlgElement<E>,
    /// roots of `f` that `β(h)` had to avoid
    pub avoid: Vec<E>,
    pub h: AlgElement<E>,
    /// `(root index, t)` factors of the conjugator, first factor acting first
    pub conjugator: Vec<(usize, E)>,
    pub u: AlgElement<E>,
    /// sha256 of the canonical JSON of algebra, polynomial, `x`, `y` and the value
    pub certificate: String,
}

fn hex_elem<F: Field>(field: &F, x: &[F::Elem]) -> Vec<String> {
    x.iter().map(|c| field.format(c)).collect()
}

pub fn certificate_hash<F: Field>(alg: &ChevalleyAlgebra<F>, p: &LiePoly, x: &[F::Elem], y: &[F::Elem], value: &[F::Elem]) -> String {
    let f = alg.field();
    let doc = json!({
        "algebra": alg.label(),
        "poly": p.print(),
        "x": hex_elem(f, x),
        "y": hex_elem(f, y),
        "value": hex_elem(f, value),
    });
    hex::encode(Sha256::digest(doc.to_string().as_bytes()))
}

/// Find `(X, Y)` with `P(X, Y) = target` for the Engel-type polynomial given by `spec`.
pub fn engel_solve<F: Field>(alg: &ChevalleyAlgebra<F>, spec: &EngelSpec, target: &[F::Elem]) -> Result<EngelSolution<F::Elem>> {
    alg.check_shape(target)?;
    let f = alg.field();
    let (p, _) = make_engel(&spec.coeffs)?;
    let finish = |x: AlgElement<F::Elem>, y: AlgElement<F::Elem>, avoid, h, conjugator, u| {
        let value = p.evaluate(alg, &[x.clone(), y.clone()])?;
        if value != target {
            return Err(Error::Internal("Engel solution does not re-evaluate to the target".into()));
        }
        let certificate = certificate_hash(alg, &p, &x, &y, &value);
        Ok(EngelSolution { x, y, target: target.to_vec(), avoid, h, conjugator, u, certificate })
    };
    if alg.is_zero(target) {
        return finish(alg.zero(), alg.zero(), Vec::new(), alg.zero(), Vec::new(), alg.zero());
    }
    if alg.is_central(target) {
        return Err(Error::CentralElement);
    }
    let avoid = if spec.is_plain() { vec![f.zero()] } else { spec.roots(f)? };
    let h = alg.find_regular(&avoid)?;
    let (g, u) = alg.conjugate_into_u(target)?;
    let vals = alg.root_values(&h);
    let mut x = alg.zero();
    for (b, v) in vals.iter().enumerate() {
        let i = alg.e_index(b);
        if f.is_zero(&u[i]) {
            continue;
        }
        let fv = spec.eval_f(f, v)?;
        x[i] = f.div(&u[i], &fv)?;
    }
    let ginv = alg.inverse_automorphism(&g)?;
    let xs = alg.apply_automorphism(&ginv, &x)?;
    let ys = alg.apply_automorphism(&ginv, &h)?;
    finish(xs, ys, avoid, h, g.factors, u)
}
