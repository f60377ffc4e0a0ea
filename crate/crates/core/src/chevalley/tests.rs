use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::linalg::MatrixOps;
use crate::rootsystem::build_root_system;
use crate::scalar::{rat, FieldDescriptor, PrimeField, Rationals};

fn alg_q(kind: RootType, r: usize) -> ChevalleyAlgebra<Rationals> {
    let rs = build_root_system(kind, r, &FieldDescriptor::Rationals).unwrap();
    build_chevalley(rs, Rationals).unwrap()
}

fn alg_p(kind: RootType, r: usize, p: u64) -> ChevalleyAlgebra<PrimeField> {
    let f = PrimeField::new(p).unwrap();
    let rs = build_root_system(kind, r, &f.descriptor()).unwrap();
    build_chevalley(rs, f).unwrap()
}

fn q(n: i64) -> BigRational {
    rat(n, 1)
}

#[test]
fn sl2_relations() {
    let a = alg_q(RootType::A, 1);
    assert_eq!(a.dim(), 3);
    let (h, e, f) = (a.unit(0), a.unit(1), a.unit(2));
    assert_eq!(a.bracket(&e, &f), h);
    assert_eq!(a.bracket(&h, &e), a.scale(&q(2), &e));
    assert_eq!(a.bracket(&h, &f), a.scale(&q(-2), &f));
}

#[test]
fn a2_over_f5_q_values() {
    let a = alg_p(RootType::A, 2, 5);
    assert_eq!(a.dim(), 8);
    assert!(a.q_table().iter().flatten().all(|v| (-2..=2).contains(v)));
}

#[test]
fn g2_has_constants_of_size_three() {
    let a = alg_q(RootType::G, 2);
    assert_eq!(a.dim(), 14);
    let rs = a.root_system();
    let mut seen3 = false;
    for x in 0..rs.num_roots() {
        for y in 0..rs.num_roots() {
            let n = a.n(x, y);
            if rs.contains(&rs.root(x).add(rs.root(y))) {
                let p = rs.chain_down_length(rs.root(x), rs.root(y)).unwrap() as i32;
                assert_eq!(n.abs(), p + 1);
                seen3 |= n.abs() == 3;
            } else {
                assert_eq!(n, 0);
            }
        }
    }
    assert!(seen3);
}

#[test]
fn bracket_relations() {
    let a = alg_q(RootType::B, 3);
    let rs = a.root_system().clone();
    let r = a.rank();
    for i in 0..r {
        let pos = rs.index_of(&Root::simple(r, i)).unwrap();
        let lhs = a.bracket(&a.unit(a.e_index(pos)), &a.unit(a.e_index(rs.neg_index(pos))));
        assert_eq!(lhs, a.h(i));
        for k in 0..r {
            assert!(a.is_zero(&a.bracket(&a.h(i), &a.h(k))));
        }
    }
    for x in 0..rs.num_roots() {
        for y in 0..rs.num_roots() {
            let s = rs.root(x).add(rs.root(y));
            if !rs.contains(&s) && rs.neg_index(x) != y {
                assert!(a.is_zero(&a.bracket(&a.unit(a.e_index(x)), &a.unit(a.e_index(y)))));
            }
        }
    }
}

#[test]
fn extraspecial_constants_are_positive() {
    for (kind, r) in [(RootType::A, 3), (RootType::B, 3), (RootType::C, 3), (RootType::D, 4), (RootType::G, 2)] {
        let a = alg_q(kind, r);
        let rs = a.root_system();
        for xi in rs.positive_roots() {
            if let Some((x, y)) = extraspecial_pair(rs, xi) {
                assert!(a.n(x, y) > 0);
            }
        }
    }
}

#[test]
fn jacobi_and_antisymmetry_small() {
    for (kind, r) in [(RootType::A, 2), (RootType::B, 2), (RootType::C, 3), (RootType::G, 2)] {
        let a = alg_q(kind, r);
        assert!(a.jacobi_violations().is_empty(), "{}", a.label());
        assert!(a.antisymmetry_violations().is_empty());
        let b = alg_p(kind, r, 7);
        assert!(b.jacobi_violations().is_empty(), "{}", b.label());
    }
}

#[test]
fn ad_matrix_examples() {
    let a = alg_q(RootType::A, 2);
    assert!(a.ad_matrix(&a.zero()).is_zero(&Rationals));
    let h = a.from_h_coords(&[q(2), q(-1)]);
    let m = a.ad_matrix(&h);
    let vals = a.root_values(&h);
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let expect = if i != j || i < a.rank() { q(0) } else { vals[i - a.rank()].clone() };
            assert_eq!(m.get(i, j), &expect);
        }
    }
    let g2 = alg_q(RootType::G, 2);
    for b in 0..g2.root_system().num_roots() {
        let m = g2.ad_matrix(&g2.unit(g2.e_index(b)));
        let mut p = m.clone();
        let mut vanished = false;
        for _ in 1..5 {
            p = p.mul(&Rationals, &m);
            if p.is_zero(&Rationals) {
                vanished = true;
                break;
            }
        }
        assert!(vanished);
    }
}

#[test]
fn centers() {
    assert!(alg_p(RootType::A, 1, 5).center().is_empty());
    let c = alg_p(RootType::A, 2, 3).center();
    assert_eq!(c.len(), 1);
    // diag(1,1,1) = h1 + 2 h2 in coroot coordinates (mod 3)
    let a = alg_p(RootType::A, 2, 3);
    assert!(a.is_central(&a.from_h_coords(&[1, 2])));
    assert!(alg_q(RootType::A, 2).center().is_empty());
}

#[test]
fn find_regular_examples() {
    let a = alg_q(RootType::A, 2);
    let h = a.find_regular(&[q(0)]).unwrap();
    assert!(a.root_values(&h).iter().all(|v| v != &q(0)));
    let a5 = alg_p(RootType::A, 2, 5);
    let h = a5.find_regular(&[0]).unwrap();
    assert!(a5.root_values(&h).iter().all(|&v| v != 0));
    let a2 = alg_p(RootType::A, 2, 2);
    assert!(matches!(a2.find_regular(&[0]), Err(Error::FieldTooSmall(_))));
    // below the guarantee threshold but a witness still exists
    let a7 = alg_p(RootType::A, 2, 7);
    let avoid = [0, 1];
    let h = a7.find_regular(&avoid).unwrap();
    assert!(a7.root_values(&h).iter().all(|v| !avoid.contains(v)));
}

#[test]
fn root_automorphism_examples() {
    let a = alg_p(RootType::A, 2, 7);
    let id = a.root_automorphism(0, &0).unwrap();
    assert_eq!(id.matrix, Matrix::identity(a.field(), a.dim()));
    let f = *a.field();
    let h = a.from_h_coords(&[3, 5]);
    let vals = a.root_values(&h);
    for b in 0..a.root_system().num_roots() {
        let t = 4;
        let g = a.root_automorphism(b, &t).unwrap();
        let img = g.matrix.mul_vec(&f, &h);
        let mut expect = h.clone();
        let e = a.e_index(b);
        expect[e] = f.sub(&expect[e], &f.mul(&t, &vals[b]));
        assert_eq!(img, expect);
    }
    assert!(matches!(alg_p(RootType::G, 2, 3).root_automorphism(0, &1), Err(Error::BadCharacteristic { .. })));
    assert!(alg_p(RootType::A, 2, 3).root_automorphism(0, &1).is_ok());
}

#[test]
fn automorphisms_preserve_center() {
    let a = alg_p(RootType::A, 2, 3);
    let z = a.center();
    for b in 0..a.root_system().num_roots() {
        for t in 1..3 {
            let g = a.root_automorphism(b, &t).unwrap();
            for v in &z {
                assert!(a.is_central(&g.matrix.mul_vec(a.field(), v)));
            }
        }
    }
}

#[test]
fn conjugate_examples() {
    let a = alg_q(RootType::A, 2);
    let e = a.unit(a.e_index(2));
    let (g, u) = a.conjugate_into_u(&e).unwrap();
    assert!(g.factors.is_empty());
    assert_eq!(u, e);
    let l = a.h(0);
    let (g, u) = a.conjugate_into_u(&l).unwrap();
    assert!(a.h_part(&u).iter().all(|c| c == &q(0)));
    assert_eq!(a.apply_automorphism(&g, &l).unwrap(), u);
    let a3 = alg_p(RootType::A, 2, 3);
    assert_eq!(a3.conjugate_into_u(&a3.from_h_coords(&[1, 2])), Err(Error::CentralElement));
}

fn arb_elem(dim: usize, p: u32) -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(0..p, dim)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn automorphisms_preserve_brackets(x in arb_elem(8, 7), y in arb_elem(8, 7), b in 0usize..6, t in 1u32..7) {
        let a = alg_p(RootType::A, 2, 7);
        let mut g = a.identity_automorphism();
        a.compose(&mut g, a.root_automorphism(b, &t).unwrap());
        a.compose(&mut g, a.root_automorphism((b + 1) % 6, &(t * 3 % 7)).unwrap());
        let lhs = a.apply_automorphism(&g, &a.bracket(&x, &y)).unwrap();
        let rhs = a.bracket(&a.apply_automorphism(&g, &x).unwrap(), &a.apply_automorphism(&g, &y).unwrap());
        prop_assert_eq!(lhs, rhs);
        let inv = a.inverse_automorphism(&g).unwrap();
        prop_assert_eq!(a.apply_automorphism(&inv, &a.apply_automorphism(&g, &x).unwrap()).unwrap(), x);
    }

    #[test]
    fn conjugation_type_a(x in arb_elem(15, 3)) {
        let a = alg_p(RootType::A, 3, 3);
        prop_assume!(!a.is_central(&x));
        let (g, u) = a.conjugate_into_u(&x).unwrap();
        prop_assert!(a.h_part(&u).iter().all(|&c| c == 0));
        prop_assert_eq!(a.apply_automorphism(&g, &x).unwrap(), u);
    }

    #[test]
    fn conjugation_sl3_f3(x in arb_elem(8, 3)) {
        let a = alg_p(RootType::A, 2, 3);
        prop_assume!(!a.is_central(&x));
        let (_, u) = a.conjugate_into_u(&x).unwrap();
        prop_assert!(a.h_part(&u).iter().all(|&c| c == 0));
    }

    #[test]
    fn conjugation_other_types(x in arb_elem(10, 5), y in arb_elem(14, 7)) {
        let b2 = alg_p(RootType::B, 2, 5);
        prop_assume!(!b2.is_central(&x));
        let (g, u) = b2.conjugate_into_u(&x).unwrap();
        prop_assert!(b2.h_part(&u).iter().all(|&c| c == 0));
        prop_assert_eq!(b2.apply_automorphism(&g, &x).unwrap(), u);
        let g2 = alg_p(RootType::G, 2, 7);
        if !g2.is_central(&y) {
            let (_, u) = g2.conjugate_into_u(&y).unwrap();
            prop_assert!(g2.h_part(&u).iter().all(|&c| c == 0));
        }
    }

    #[test]
    fn conjugation_over_q(c in proptest::collection::vec(-3i64..4, 8)) {
        let a = alg_q(RootType::A, 2);
        let x: Vec<BigRational> = c.iter().map(|&v| q(v)).collect();
        prop_assume!(!a.is_zero(&x));
        let (g, u) = a.conjugate_into_u(&x).unwrap();
        prop_assert!(a.h_part(&u).iter().all(|v| v == &q(0)));
        prop_assert_eq!(a.apply_automorphism(&g, &x).unwrap(), u);
    }
}
