use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::chevalley::build_chevalley;
use crate::linalg::kernel;
use crate::rootsystem::build_root_system;
use crate::scalar::{rat, FieldDescriptor, PrimeField, Rationals};

fn sl3(rows: &[Vec<i64>]) -> MatrixElement<BigRational> {
    MatrixElement::from_ints(&Rationals, RealizationKind::Sl(3), rows).unwrap()
}

#[test]
fn sl3_invariants() {
    let q = Rationals;
    let d = sl3(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, -2]]);
    let inv = char_invariants(&q, &d).unwrap();
    assert_eq!((inv.f1.clone(), inv.f2.clone()), (rat(-3, 1), rat(2, 1)));
    assert_eq!(inv.theta(&q), (rat(-27, 1), rat(4, 1)));
    let d2 = sl3(&[vec![1, 0, 0], vec![0, -1, 0], vec![0, 0, 0]]);
    let inv2 = char_invariants(&q, &d2).unwrap();
    assert_eq!((inv2.f1, inv2.f2), (rat(-1, 1), rat(0, 1)));
    let nil = sl3(&[vec![0, 1, 2], vec![0, 0, 3], vec![0, 0, 0]]);
    let inv3 = char_invariants(&q, &nil).unwrap();
    assert_eq!((inv3.f1, inv3.f2), (rat(0, 1), rat(0, 1)));

    assert_eq!(theta_separates(&q, &d, &d2).unwrap(), ThetaVerdict::Separated);
    assert_eq!(theta_separates(&q, &d, &d.scale(&q, &rat(-5, 7))).unwrap(), ThetaVerdict::Equal);
    assert_eq!(theta_separates(&q, &nil, &d).unwrap(), ThetaVerdict::Undefined);
    let zero = sl3(&[vec![0; 3], vec![0; 3], vec![0; 3]]);
    assert_eq!(theta_separates(&q, &zero, &d), Err(Error::ZeroMatrix));
}

#[test]
fn membership_is_strict() {
    let q = Rationals;
    assert!(MatrixElement::from_ints(&q, RealizationKind::Sl(3), &[vec![1, 0, 0], vec![0, 0, 0], vec![0, 0, 0]]).is_err());
    let good = vec![
        vec![0, 1, 2, 3, 4],
        vec![-3, 5, 6, 0, 9],
        vec![-4, 7, 8, -9, 0],
        vec![-1, 0, 10, -5, -7],
        vec![-2, -10, 0, -6, -8],
    ];
    assert!(MatrixElement::from_ints(&q, RealizationKind::So5, &good).is_ok());
    let mut bad = good.clone();
    bad[3][4] = 7;
    assert!(MatrixElement::from_ints(&q, RealizationKind::So5, &bad).is_err());
    assert!(char_invariants(&q, &MatrixElement::from_ints(&q, RealizationKind::Sl(2), &[vec![1, 0], vec![0, -1]]).unwrap()).is_err());
}

#[test]
fn commutator_sl2() {
    let q = Rationals;
    let e = MatrixElement::from_ints(&q, RealizationKind::Sl(2), &[vec![0, 1], vec![0, 0]]).unwrap();
    let f = MatrixElement::from_ints(&q, RealizationKind::Sl(2), &[vec![0, 0], vec![1, 0]]).unwrap();
    let h = commutator(&q, &e, &f).unwrap();
    assert_eq!(h.matrix.to_rows(), vec![vec![rat(1, 1), rat(0, 1)], vec![rat(0, 1), rat(-1, 1)]]);
    assert!(commutator(&q, &e, &e).unwrap().is_zero(&q));
}

#[test]
fn so5_shape_is_ten_dimensional() {
    // linear conditions J X + (J X)^t = 0 on the 25 entries
    let q = Rationals;
    let j = so5_j(&q);
    let mut cond = Matrix::zeros(&q, 25, 25);
    for v in 0..25 {
        let x = Matrix::from_fn(5, 5, |a, b| if a * 5 + b == v { rat(1, 1) } else { rat(0, 1) });
        let jx = j.mul(&q, &x);
        for a in 0..5 {
            for b in 0..5 {
                cond.set(a * 5 + b, v, jx.get(a, b) + jx.get(b, a));
            }
        }
    }
    assert_eq!(kernel(&q, &cond).len(), 10);
}

#[test]
fn realizations_match_brackets() {
    let q = Rationals;
    let a1 = build_chevalley(build_root_system(RootType::A, 1, &FieldDescriptor::Rationals).unwrap(), q).unwrap();
    let r = realize_chevalley(&a1).unwrap();
    assert_eq!(r.image(0).to_rows(), vec![vec![rat(1, 1), rat(0, 1)], vec![rat(0, 1), rat(-1, 1)]]);
    assert_eq!(r.image(1).to_rows(), vec![vec![rat(0, 1), rat(1, 1)], vec![rat(0, 1), rat(0, 1)]]);
    assert_eq!(r.image(2).to_rows(), vec![vec![rat(0, 1), rat(0, 1)], vec![rat(1, 1), rat(0, 1)]]);
    for r in 2..=5 {
        let a = build_chevalley(build_root_system(RootType::A, r, &FieldDescriptor::Rationals).unwrap(), q).unwrap();
        let real = realize_chevalley(&a).unwrap();
        assert_eq!(real.kind(), RealizationKind::Sl(r + 1));
    }
    let b2 = build_chevalley(build_root_system(RootType::B, 2, &FieldDescriptor::Rationals).unwrap(), q).unwrap();
    let real = realize_chevalley(&b2).unwrap();
    assert_eq!(real.kind(), RealizationKind::So5);
    let x: Vec<BigRational> = (0..10).map(|i| rat(i * 3 - 7, 1)).collect();
    assert_eq!(real.from_matrix(&real.to_matrix(&x)).unwrap(), x);
    let f5 = PrimeField::new(5).unwrap();
    let b2p = build_chevalley(build_root_system(RootType::B, 2, &f5.descriptor()).unwrap(), f5).unwrap();
    assert!(realize_chevalley(&b2p).is_ok());
    let g2 = build_chevalley(build_root_system(RootType::G, 2, &FieldDescriptor::Rationals).unwrap(), q).unwrap();
    assert!(matches!(realize_chevalley(&g2), Err(Error::UnsupportedRealization(_))));
}

fn conj(field: &PrimeField, g: &Matrix<u32>, x: &Matrix<u32>) -> Matrix<u32> {
    g.mul(field, x).mul(field, &inverse(field, g).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn invariants_are_conjugation_invariant(x in proptest::collection::vec(0u32..11, 8), g in proptest::collection::vec(0u32..11, 9)) {
        let f = PrimeField::new(11).unwrap();
        let mut m = Matrix::from_fn(3, 3, |i, j| x[(i * 3 + j).min(7)]);
        let tr = f.add(m.get(0, 0), m.get(1, 1));
        m.set(2, 2, f.neg(&tr));
        let gm = Matrix::from_fn(3, 3, |i, j| g[i * 3 + j]);
        prop_assume!(determinant(&f, &gm) != 0);
        let a = MatrixElement::new(&f, RealizationKind::Sl(3), m.clone()).unwrap();
        let b = MatrixElement::new(&f, RealizationKind::Sl(3), conj(&f, &gm, &m)).unwrap();
        prop_assert_eq!(char_invariants(&f, &a).unwrap(), char_invariants(&f, &b).unwrap());
    }

    #[test]
    fn so5_commutator_closure(x in proptest::collection::vec(-5i64..6, 10), y in proptest::collection::vec(-5i64..6, 10)) {
        let q = Rationals;
        let b2 = build_chevalley(build_root_system(RootType::B, 2, &FieldDescriptor::Rationals).unwrap(), q).unwrap();
        let real = realize_chevalley(&b2).unwrap();
        let xe: Vec<BigRational> = x.iter().map(|&v| rat(v, 1)).collect();
        let ye: Vec<BigRational> = y.iter().map(|&v| rat(v, 1)).collect();
        let c = commutator(&q, &real.to_element(&xe), &real.to_element(&ye)).unwrap();
        prop_assert!(MatrixElement::new(&q, RealizationKind::So5, c.matrix).is_ok());
    }

    #[test]
    fn homogeneity(x in proptest::collection::vec(-6i64..7, 10), lam in 1i64..9) {
        let q = Rationals;
        let b2 = build_chevalley(build_root_system(RootType::B, 2, &FieldDescriptor::Rationals).unwrap(), q).unwrap();
        let real = realize_chevalley(&b2).unwrap();
        let xe: Vec<BigRational> = x.iter().map(|&v| rat(v, 1)).collect();
        let m = real.to_element(&xe);
        let l = rat(lam, 3);
        let i1 = char_invariants(&q, &m).unwrap();
        let i2 = char_invariants(&q, &m.scale(&q, &l)).unwrap();
        prop_assert_eq!(i2.f1, i1.f1 * q.pow(&l, 2));
        prop_assert_eq!(i2.f2, i1.f2 * q.pow(&l, 4));
    }

    #[test]
    fn zero_diagonal_reduction(x in proptest::collection::vec(0u32..3, 16)) {
        let f = PrimeField::new(3).unwrap();
        let mut m = Matrix::from_fn(4, 4, |i, j| x[i * 4 + j]);
        let t = f.add(&f.add(m.get(0, 0), m.get(1, 1)), m.get(2, 2));
        m.set(3, 3, f.neg(&t));
        let scalar = (0..4).all(|i| (0..4).all(|j| if i == j { m.get(i, i) == m.get(0, 0) } else { *m.get(i, j) == 0 }));
        prop_assume!(!scalar);
        let ops = zero_diagonal_transvections(&f, &m).unwrap();
        let mut cur = m.clone();
        for (a, b, s) in ops {
            let mut t = Matrix::identity(&f, 4);
            t.set(a, b, s);
            cur = conj(&f, &t, &cur);
        }
        prop_assert!((0..4).all(|i| *cur.get(i, i) == 0));
    }
}
