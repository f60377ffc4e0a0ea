//! Free Lie polynomials: syntax trees, a parser and printer, Lyndon normal
//! forms, Engel polynomials and evaluation in any Lie algebra.
//!
//! Variables are `X1, X2, …`; the bare letters `X, Y, Z, T` stand for
//! `X1..X4`.

mod engel;
mod lyndon;
mod parse;

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::chevalley::ChevalleyAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, MatrixOps};
use crate::scalar::{format_rational, Field};

pub use engel::{make_engel, EngelSpec};
pub use lyndon::{is_lyndon, standard_factorization, LyndonForm};
pub use parse::parse;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LieExpr {
    /// 1-based variable index
    Var(usize),
    Bracket(Box<LieExpr>, Box<LieExpr>),
    Sum(Vec<(BigRational, LieExpr)>),
}

impl LieExpr {
    pub fn var(i: usize) -> Self {
        LieExpr::Var(i)
    }

    pub fn bracket(a: LieExpr, b: LieExpr) -> Self {
        LieExpr::Bracket(Box::new(a), Box::new(b))
    }

    /// Largest variable index.
    pub fn arity(&self) -> usize {
        match self {
            LieExpr::Var(i) => *i,
            LieExpr::Bracket(a, b) => a.arity().max(b.arity()),
            LieExpr::Sum(t) => t.iter().map(|(_, e)| e.arity()).max().unwrap_or(0),
        }
    }

    /// Upper bound on the total degree of any monomial.
    pub fn degree_bound(&self) -> usize {
        match self {
            LieExpr::Var(_) => 1,
            LieExpr::Bracket(a, b) => a.degree_bound() + b.degree_bound(),
            LieExpr::Sum(t) => t.iter().map(|(_, e)| e.degree_bound()).max().unwrap_or(0),
        }
    }

    /// Left-normed bracket `[[x_1, x_2], …, x_k]`.
    pub fn left_normed(vars: &[usize]) -> Self {
        let mut it = vars.iter();
        let first = LieExpr::Var(*it.next().expect("nonempty"));
        it.fold(first, |acc, &v| LieExpr::bracket(acc, LieExpr::Var(v)))
    }
}

fn write_expr(e: &LieExpr, out: &mut String) {
    match e {
        LieExpr::Var(i) => out.push_str(&format!("X{i}")),
        LieExpr::Bracket(a, b) => {
            out.push('[');
            write_expr(a, out);
            out.push(',');
            write_expr(b, out);
            out.push(']');
        }
        LieExpr::Sum(terms) => {
            if terms.is_empty() {
                out.push('0');
                return;
            }
            let single = terms.len() == 1;
            for (k, (c, t)) in terms.iter().enumerate() {
                let neg = c < &BigRational::zero();
                let mag = if neg { -c } else { c.clone() };
                if k == 0 {
                    if neg {
                        out.push('-');
                    }
                } else {
                    out.push_str(if neg { " - " } else { " + " });
                }
                if !mag.is_one() || (single && !neg) {
                    out.push_str(&format_rational(&mag));
                    out.push('*');
                }
                if matches!(t, LieExpr::Sum(_)) {
                    out.push('(');
                    write_expr(t, out);
                    out.push(')');
                } else {
                    write_expr(t, out);
                }
            }
        }
    }
}

impl fmt::Display for LieExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_expr(self, &mut s);
        f.write_str(&s)
    }
}

/// A free Lie polynomial with its declared number of variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiePoly {
    pub expr: LieExpr,
    pub arity: usize,
}

impl LiePoly {
    pub fn new(expr: LieExpr) -> Self {
        let arity = expr.arity();
        LiePoly { expr, arity }
    }

    pub fn with_arity(expr: LieExpr, arity: usize) -> Self {
        let arity = arity.max(expr.arity());
        LiePoly { expr, arity }
    }

    pub fn print(&self) -> String {
        self.expr.to_string()
    }

    pub fn normal_form(&self) -> LyndonForm {
        LyndonForm::of(&self.expr)
    }

    /// Coefficients `a_1..a_d` of the degree-one monomials.
    pub fn linear_part(&self) -> Vec<BigRational> {
        let nf = self.normal_form();
        (1..=self.arity).map(|i| nf.coeff(&[i as u8]).cloned().unwrap_or_else(BigRational::zero)).collect()
    }

    pub fn min_monomial_degree(&self) -> Result<usize> {
        self.normal_form().min_degree().ok_or(Error::ZeroPolynomial)
    }

    pub fn evaluate<L: LieAlgebra>(&self, alg: &L, assignment: &[L::Elem]) -> Result<L::Elem> {
        if assignment.len() < self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, got: assignment.len() });
        }
        for a in assignment {
            alg.check(a)?;
        }
        eval(&self.expr, alg, assignment)
    }
}

impl fmt::Display for LiePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.expr.fmt(f)
    }
}

/// The operations evaluation needs from a target algebra.
pub trait LieAlgebra {
    type Elem: Clone;

    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, c: &BigRational, a: &Self::Elem) -> Result<Self::Elem>;
    fn bracket(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn check(&self, _a: &Self::Elem) -> Result<()> {
        Ok(())
    }
}

fn eval<L: LieAlgebra>(e: &LieExpr, alg: &L, xs: &[L::Elem]) -> Result<L::Elem> {
    match e {
        LieExpr::Var(i) => Ok(xs[i - 1].clone()),
        LieExpr::Bracket(a, b) => Ok(alg.bracket(&eval(a, alg, xs)?, &eval(b, alg, xs)?)),
        LieExpr::Sum(terms) => {
            let mut acc = alg.zero();
            for (c, t) in terms {
                if c.is_zero() {
                    continue;
                }
                let v = eval(t, alg, xs)?;
                acc = alg.add(&acc, &alg.scale(c, &v)?);
            }
            Ok(acc)
        }
    }
}

impl<F: Field> LieAlgebra for ChevalleyAlgebra<F> {
    type Elem = Vec<F::Elem>;

    fn zero(&self) -> Self::Elem {
        ChevalleyAlgebra::zero(self)
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        ChevalleyAlgebra::add(self, a, b)
    }

    fn scale(&self, c: &BigRational, a: &Self::Elem) -> Result<Self::Elem> {
        let c = self.field().from_rational(c)?;
        Ok(ChevalleyAlgebra::scale(self, &c, a))
    }

    fn bracket(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        ChevalleyAlgebra::bracket(self, a, b)
    }

    fn check(&self, a: &Self::Elem) -> Result<()> {
        self.check_shape(a)
    }
}

/// `n×n` matrices over a field with the commutator bracket.
#[derive(Debug, Clone)]
pub struct MatrixLie<F: Field> {
    pub field: F,
    pub n: usize,
}

impl<F: Field> LieAlgebra for MatrixLie<F> {
    type Elem = Matrix<F::Elem>;

    fn zero(&self) -> Self::Elem {
        Matrix::zeros(&self.field, self.n, self.n)
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(&self.field, b)
    }

    fn scale(&self, c: &BigRational, a: &Self::Elem) -> Result<Self::Elem> {
        let c = self.field.from_rational(c)?;
        Ok(a.scale(&self.field, &c))
    }

    fn bracket(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.commutator(&self.field, b)
    }

    fn check(&self, a: &Self::Elem) -> Result<()> {
        if a.rows() != self.n || a.cols() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: a.rows() });
        }
        Ok(())
    }
}

/// Bundled polynomials, in the alias notation.
pub fn named_polynomial(name: &str) -> Option<&'static str> {
    let text = match name {
        "filippov" => include_str!("../../fixtures/filippov.lie"),
        "razmyslov" => include_str!("../../fixtures/razmyslov.lie"),
        "deg10" => include_str!("../../fixtures/deg10.lie"),
        "example48" => include_str!("../../fixtures/example48.lie"),
        _ => return None,
    };
    Some(text.trim())
}

pub const NAMED_POLYNOMIALS: [&str; 4] = ["filippov", "razmyslov", "deg10", "example48"];

#[cfg(test)]
mod tests;
