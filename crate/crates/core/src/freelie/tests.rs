use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::chevalley::build_chevalley;
use crate::rootsystem::{build_root_system, RootType};
use crate::scalar::{rat, FieldDescriptor, PrimeField, Rationals};

fn named(name: &str) -> LiePoly {
    parse(named_polynomial(name).unwrap()).unwrap()
}

fn sl2_q() -> ChevalleyAlgebra<Rationals> {
    build_chevalley(build_root_system(RootType::A, 1, &FieldDescriptor::Rationals).unwrap(), Rationals).unwrap()
}

#[test]
fn printer() {
    for s in ["[X1,X2]", "X1 + [X1,X2]", "2*X2 - [X1,X2]", "-[X3,X1]", "1*X1", "-2/3*[[X1,X2],X2] + 5*X4", "[X1 + X2,X3]", "3*(X1 - X2)"] {
        let p = parse(s).unwrap();
        assert_eq!(p.print(), s);
        assert_eq!(parse(&p.print()).unwrap(), p);
    }
    assert_eq!(parse("[[[Y,Z],[T,X]],X]").unwrap().print(), "[[[X2,X3],[X4,X1]],X1]");
}

#[test]
fn linear_parts() {
    assert_eq!(parse("X1 + [X1,X2]").unwrap().linear_part(), vec![rat(1, 1), rat(0, 1)]);
    assert_eq!(parse("2*X2 - [X1,X2]").unwrap().linear_part(), vec![rat(0, 1), rat(2, 1)]);
    assert!(named("filippov").linear_part().iter().all(|c| c == &rat(0, 1)));
}

#[test]
fn minimal_degrees() {
    assert_eq!(named("filippov").min_monomial_degree().unwrap(), 5);
    assert_eq!(named("razmyslov").min_monomial_degree().unwrap(), 5);
    assert_eq!(named("deg10").min_monomial_degree().unwrap(), 10);
    assert_eq!(named("example48").min_monomial_degree().unwrap(), 6);
    assert_eq!(parse("[X1,X1] + [X2,X2]").unwrap().min_monomial_degree(), Err(Error::ZeroPolynomial));
}

#[test]
fn filippov_is_not_zero_in_free_algebra() {
    let nf = named("filippov").normal_form();
    assert!(!nf.is_zero());
    assert!(nf.terms().iter().all(|(w, _)| w.len() == 5));
    assert!(!named("deg10").normal_form().is_zero());
}

#[test]
fn evaluate_in_sl2() {
    let a = sl2_q();
    let (h, e, f) = (a.unit(0), a.unit(1), a.unit(2));
    let e1 = parse("[X,Y]").unwrap();
    assert_eq!(e1.evaluate(&a, &[e.clone(), f]).unwrap(), h.clone());
    let e2 = parse("[[X,Y],Y]").unwrap();
    assert_eq!(e2.evaluate(&a, &[e.clone(), h]).unwrap(), ChevalleyAlgebra::scale(&a, &rat(4, 1), &e));
    let z = a.zero();
    assert_eq!(named("deg10").evaluate(&a, &[z.clone(), z.clone(), z.clone()]).unwrap(), z);
    assert_eq!(e1.evaluate(&a, std::slice::from_ref(&e)), Err(Error::ArityMismatch { expected: 2, got: 1 }));
    assert!(e1.evaluate(&a, &[e, vec![rat(0, 1); 2]]).is_err());
}

#[test]
fn named_identities_vanish_on_sl2() {
    let f = PrimeField::new(7).unwrap();
    let a = build_chevalley(build_root_system(RootType::A, 1, &f.descriptor()).unwrap(), f).unwrap();
    let filippov = named("filippov");
    let razmyslov = named("razmyslov");
    let mut seed = 1u32;
    let mut next = || {
        seed = seed.wrapping_mul(1_103_515_245).wrapping_add(12345);
        (seed >> 16) % 7
    };
    for _ in 0..50 {
        let xs: Vec<Vec<u32>> = (0..4).map(|_| (0..3).map(|_| next()).collect()).collect();
        assert!(a.is_zero(&filippov.evaluate(&a, &xs).unwrap()));
        assert!(a.is_zero(&razmyslov.evaluate(&a, &xs[..3]).unwrap()));
    }
}

fn arb_expr(vars: usize) -> impl Strategy<Value = LieExpr> {
    let leaf = (1..=vars).prop_map(LieExpr::Var);
    leaf.prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| LieExpr::bracket(a, b)),
            proptest::collection::vec((-4i64..5, 1i64..4, inner), 1..3)
                .prop_map(|v| LieExpr::Sum(v.into_iter().map(|(n, d, e)| (rat(n, d), e)).collect())),
        ]
    })
}

fn random_matrix(f: &PrimeField, xs: &[u32]) -> Matrix<u32> {
    let mut m = Matrix::from_fn(3, 3, |i, j| xs[i * 3 + j]);
    let t = f.add(m.get(0, 0), m.get(1, 1));
    m.set(2, 2, f.neg(&t));
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn print_parse_round_trip(e in arb_expr(3), xs in proptest::collection::vec(0u32..7, 27)) {
        let f = PrimeField::new(7).unwrap();
        let alg = MatrixLie { field: f, n: 3 };
        let p = LiePoly::new(e);
        let q = parse(&p.print()).unwrap();
        let args: Vec<_> = (0..3).map(|k| random_matrix(&f, &xs[k * 9..k * 9 + 9])).collect();
        prop_assert_eq!(p.evaluate(&alg, &args).unwrap(), q.evaluate(&alg, &args).unwrap());
        prop_assert_eq!(parse(&q.print()).unwrap(), q);
    }

    #[test]
    fn normal_form_is_sound_on_sl3_f7(e in arb_expr(3), xs in proptest::collection::vec(0u32..7, 27)) {
        let f = PrimeField::new(7).unwrap();
        let alg = MatrixLie { field: f, n: 3 };
        let p = LiePoly::new(e);
        let nf = LiePoly::with_arity(p.normal_form().to_expr(), p.arity);
        let args: Vec<_> = (0..3).map(|k| random_matrix(&f, &xs[k * 9..k * 9 + 9])).collect();
        prop_assert_eq!(p.evaluate(&alg, &args).unwrap(), nf.evaluate(&alg, &args).unwrap());
    }

    #[test]
    fn normal_form_is_canonical(e in arb_expr(3)) {
        let nf = LyndonForm::of(&e);
        prop_assert_eq!(LyndonForm::of(&nf.to_expr()), nf.clone());
        let neg = LieExpr::Sum(vec![(rat(1, 1), e.clone()), (rat(-1, 1), nf.to_expr())]);
        prop_assert!(LyndonForm::of(&neg).is_zero());
    }

    #[test]
    fn monomials_are_multihomogeneous(word in proptest::collection::vec(1usize..4, 2..6), lam in proptest::collection::vec(1u32..7, 3), xs in proptest::collection::vec(0u32..7, 27)) {
        let f = PrimeField::new(7).unwrap();
        let alg = MatrixLie { field: f, n: 3 };
        let p = LiePoly::with_arity(LieExpr::left_normed(&word), 3);
        let args: Vec<_> = (0..3).map(|k| random_matrix(&f, &xs[k * 9..k * 9 + 9])).collect();
        let scaled: Vec<_> = args.iter().zip(&lam).map(|(m, l)| m.scale(&f, l)).collect();
        let factor = word.iter().fold(1u32, |acc, &v| f.mul(&acc, &lam[v - 1]));
        prop_assert_eq!(p.evaluate(&alg, &scaled).unwrap(), p.evaluate(&alg, &args).unwrap().scale(&f, &factor));
    }

    #[test]
    fn chevalley_and_matrix_evaluation_agree(e in arb_expr(2), c in proptest::collection::vec(-3i64..4, 16)) {
        let q = Rationals;
        let a = build_chevalley(build_root_system(RootType::A, 2, &FieldDescriptor::Rationals).unwrap(), q).unwrap();
        let real = crate::matrixrep::realize_chevalley(&a).unwrap();
        let x: Vec<BigRational> = c[..8].iter().map(|&v| rat(v, 1)).collect();
        let y: Vec<BigRational> = c[8..].iter().map(|&v| rat(v, 1)).collect();
        let p = LiePoly::with_arity(e, 2);
        let lhs = real.to_matrix(&p.evaluate(&a, &[x.clone(), y.clone()]).unwrap());
        let ml = MatrixLie { field: q, n: 3 };
        prop_assert_eq!(lhs, p.evaluate(&ml, &[real.to_matrix(&x), real.to_matrix(&y)]).unwrap());
    }
}
