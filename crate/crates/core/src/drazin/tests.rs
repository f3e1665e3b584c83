use proptest::prelude::*;

use super::*;
use crate::arith::Rational;
use crate::ring::RingSpec;

fn q() -> RingSpec {
    RingSpec::rationals()
}

fn m2(rows: [[i64; 2]; 2]) -> SquareMatrix {
    SquareMatrix::from_ints(q(), rows)
}

#[test]
fn index_examples() {
    assert_eq!(index_of(&SquareMatrix::identity(q(), 3)).unwrap(), 0);
    assert_eq!(index_of(&m2([[0, 1], [0, 0]])).unwrap(), 2);
    assert_eq!(index_of(&m2([[1, 1], [0, 0]])).unwrap(), 1);
    assert_eq!(index_of(&SquareMatrix::zero(q(), 2)).unwrap(), 1);
    assert!(index_of(&SquareMatrix::identity(RingSpec::integers(), 2)).is_err());
}

#[test]
fn drazin_inverse_examples() {
    let id = SquareMatrix::identity(q(), 3);
    let cert = drazin_inverse(&id).unwrap();
    assert_eq!((cert.inverse.clone(), cert.index), (id, Some(0)));
    assert!(cert.valid);

    let nil = drazin_inverse(&m2([[0, 1], [0, 0]])).unwrap();
    assert!(nil.inverse.is_zero());
    assert_eq!(nil.index, Some(2));

    let e = m2([[1, 1], [0, 0]]);
    assert_eq!(drazin_inverse(&e).unwrap().inverse, e);

    // [[2,1],[0,0]]: group inverse is a / 4
    let a = m2([[2, 1], [0, 0]]);
    let quarter = a.scalar_mul(&Rational::new(1, 4).unwrap()).unwrap();
    assert_eq!(group_inverse(&a).unwrap().inverse, quarter);
}

#[test]
fn group_inverse_needs_index_at_most_one() {
    assert!(matches!(
        group_inverse(&m2([[0, 2], [0, 0]])),
        Err(Error::NoGroupInverse { index: 2 })
    ));
    let g = group_inverse(&SquareMatrix::zero(q(), 2)).unwrap();
    assert!(g.inverse.is_zero() && g.valid);
    let gf2 = RingSpec::prime_field(2).unwrap();
    let a = SquareMatrix::from_ints(gf2, [[1, 1], [0, 0]]);
    assert_eq!(group_inverse(&a).unwrap().inverse, a);
    assert!(drazin_inverse(&SquareMatrix::identity(RingSpec::residue(4).unwrap(), 2)).is_err());
}

#[test]
fn verification_records_failures() {
    let a = m2([[0, 1], [0, 0]]);
    let t = verify_axioms(&a, &SquareMatrix::identity(q(), 2), InverseFlavor::Drazin).unwrap();
    assert!(!t.passed());
    assert!(!t.get(CheckKind::Reflexive).unwrap().pass);
    let x = m2([[0, 0], [1, 0]]);
    let t = verify_axioms(&a, &x, InverseFlavor::Drazin).unwrap();
    assert!(!t.get(CheckKind::Commutes).unwrap().pass);
    assert!(t.get(CheckKind::Commutes).unwrap().witness.is_some());
}

#[test]
fn radical_index_in_residue_ring() {
    let z4 = RingSpec::residue(4).unwrap();
    let two = SquareMatrix::from_ints(z4, [[2]]);
    let zero = SquareMatrix::zero(z4, 1);
    let p = verify_axioms(&two, &zero, InverseFlavor::PDrazin).unwrap();
    assert!(p.passed());
    assert_eq!(p.index, Some(1));
    let d = verify_axioms(&two, &zero, InverseFlavor::Drazin).unwrap();
    assert!(d.passed());
    assert_eq!(d.index, Some(2));
    let g = verify_axioms(&two, &zero, InverseFlavor::GDrazin).unwrap();
    assert!(g.passed());
}

#[test]
fn group_flavor_rejects_index_two() {
    let a = m2([[0, 1], [0, 0]]);
    let t = verify_axioms(&a, &SquareMatrix::zero(q(), 2), InverseFlavor::Group).unwrap();
    assert!(t.get(CheckKind::CoreNilpotent).unwrap().pass);
    assert!(!t.get(CheckKind::IndexAtMostOne).unwrap().pass);
}

#[test]
fn certificate_serializes_with_transcript() {
    let cert = drazin_inverse(&m2([[1, 1], [0, 0]])).unwrap();
    let v = serde_json::to_value(&cert).unwrap();
    assert_eq!(v["flavor"], "drazin");
    assert_eq!(v["index"], 1);
    assert_eq!(v["transcript"][0]["check"], "commutes");
    assert_eq!(v["transcript"][0]["pass"], true);
    let back: DrazinCertificate = serde_json::from_value(v).unwrap();
    assert_eq!(back, cert);
}

#[test]
fn quadruple_relations() {
    let a = m2([[0, 1], [0, 0]]);
    let b = m2([[1, 0], [0, 0]]);
    let c = m2([[1, 0], [1, 1]]);
    let d = m2([[1, 1], [0, 0]]);
    let report = check_relations(&a, &b, &c, &d).unwrap();
    assert!(!report.first_holds);
    assert_eq!(report.bdb, m2([[1, 0], [0, 0]]));
    assert_eq!(report.bac, m2([[1, 1], [0, 0]]));
    assert!(matches!(verify_intertwining(&a, &b, &c, &d), Err(Error::RelationViolation(_))));
    let gf2 = SquareMatrix::identity(RingSpec::prime_field(2).unwrap(), 2);
    assert!(matches!(check_relations(&a, &gf2, &c, &d), Err(Error::RingMismatch { .. })));
}

#[test]
fn scaling_preserves_relations() {
    let a = m2([[0, 1], [0, 1]]);
    let b = m2([[1, 1], [0, 0]]);
    let c = m2([[1, -1], [0, 0]]);
    let quad = Quadruple::new(a.clone(), b, c, a).unwrap();
    let s = quad.scaled(&Rational::new(-5, 7).unwrap()).unwrap();
    let [a, b, c, d] = s.parts();
    verify_intertwining(a, b, c, d).unwrap();
    assert!(matches!(quad.scaled(&Rational::zero()), Err(Error::ZeroLambda)));
}

#[test]
fn cline_examples() {
    // ac idempotent, bd nilpotent: e = b (ac)^2 d = 0 and index(bd) = 2
    let quad = Quadruple::new(
        m2([[0, 1], [0, 0]]),
        m2([[0, 0], [0, 1]]),
        m2([[1, 0], [1, 1]]),
        m2([[1, 0], [-1, 0]]),
    )
    .unwrap();
    let r = cline_generalized(&quad, InverseFlavor::Drazin).unwrap();
    assert!(r.holds());
    assert!(r.formula_inverse().is_zero());
    assert_eq!((r.ac.index, r.bd.index), (Some(1), Some(2)));

    let a = m2([[0, 1], [0, 1]]);
    let quad = Quadruple::new(a.clone(), m2([[1, 1], [0, 0]]), m2([[1, -1], [0, 0]]), a).unwrap();
    let r = cline_generalized(&quad, InverseFlavor::Group).unwrap();
    assert!(r.holds());
    assert_eq!(r.classification, Some(GroupCase::IndexTwo));

    let cert = cline_classical(&m2([[0, 1], [0, 0]]), &m2([[0, 0], [1, 0]])).unwrap();
    assert_eq!(cert.element, m2([[0, 0], [0, 1]]));
    assert_eq!(cert.inverse, m2([[0, 0], [0, 1]]));
}

#[test]
fn cline_over_finite_ring_with_supplied_inverse() {
    let z4 = RingSpec::residue(4).unwrap();
    let two = SquareMatrix::from_ints(z4, [[2]]);
    let one = SquareMatrix::identity(z4, 1);
    let quad = Quadruple::classical(two.clone(), one).unwrap();
    let r = cline_with_inverse(&quad, &SquareMatrix::zero(z4, 1), InverseFlavor::PDrazin).unwrap();
    assert!(r.holds());
    assert_eq!(r.ac.index, Some(1));
    assert!(cline_generalized(&quad, InverseFlavor::Drazin).is_err());
}

#[test]
fn jacobson_examples() {
    let quad = Quadruple::classical(m2([[0, 1], [0, 0]]), m2([[0, 0], [2, 0]])).unwrap();
    assert_eq!(jacobson_inverse(&quad).unwrap(), m2([[1, 0], [0, -1]]));

    let z = SquareMatrix::zero(q(), 2);
    let quad = Quadruple::new(m2([[3, 1], [4, 1]]), z.clone(), m2([[1, 0], [7, 2]]), z).unwrap();
    assert!(jacobson_inverse(&quad).unwrap().is_identity());

    let quad = Quadruple::new(
        m2([[0, 1], [0, 0]]),
        m2([[0, 0], [0, 1]]),
        m2([[1, 0], [1, 1]]),
        m2([[1, 0], [-1, 0]]),
    )
    .unwrap();
    assert!(matches!(jacobson_inverse(&quad), Err(Error::NotInvertible(_))));
}

#[test]
fn flavor_names() {
    for f in [InverseFlavor::Drazin, InverseFlavor::PDrazin, InverseFlavor::GDrazin, InverseFlavor::Group] {
        assert_eq!(f.to_string().parse::<InverseFlavor>().unwrap(), f);
    }
    assert!("moore-penrose".parse::<InverseFlavor>().is_err());
}

fn matrix(n: usize) -> impl Strategy<Value = SquareMatrix> {
    prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -2i64..=2], n * n).prop_map(move |v| {
        let rows = v.chunks(n).map(|r| r.iter().map(|&x| Rational::from(x)).collect()).collect();
        SquareMatrix::from_rows(q(), rows).unwrap()
    })
}

fn any_matrix() -> impl Strategy<Value = SquareMatrix> {
    (1usize..=4).prop_flat_map(matrix)
}

fn pair() -> impl Strategy<Value = (SquareMatrix, SquareMatrix)> {
    (1usize..=4).prop_flat_map(|n| (matrix(n), matrix(n)))
}

proptest! {
    #[test]
    fn constructed_inverse_satisfies_axioms(a in any_matrix()) {
        let cert = drazin_inverse(&a).unwrap();
        prop_assert!(cert.valid);
        let x = &cert.inverse;
        let k = cert.index.unwrap();
        prop_assert_eq!(&a * x, x * &a);
        prop_assert_eq!(&(x * &a) * x, x.clone());
        prop_assert_eq!(&a.pow(k + 1) * x, a.pow(k));
    }

    #[test]
    fn index_zero_iff_invertible(a in any_matrix()) {
        let cert = drazin_inverse(&a).unwrap();
        prop_assert_eq!(cert.index == Some(0), a.is_invertible());
        if a.is_invertible() {
            prop_assert_eq!(cert.inverse, a.inverse().unwrap());
        }
    }

    #[test]
    fn inverse_is_unique_among_polynomials(a in any_matrix()) {
        // x' = x + (I - ax) y (I - ax) for y commuting with a fails the axioms
        // unless it coincides with x
        let x = drazin_inverse(&a).unwrap().inverse;
        let id = SquareMatrix::identity(q(), a.dim());
        let p = &id - &(&a * &x);
        let other = &x + &(&p * &a);
        let t = verify_axioms(&a, &other, InverseFlavor::Drazin).unwrap();
        prop_assert_eq!(t.passed(), other == x);
    }

    #[test]
    fn classical_transfer((a, b) in pair()) {
        let cert = cline_classical(&a, &b).unwrap();
        prop_assert!(cert.valid);
        prop_assert_eq!(&cert.inverse, &drazin_inverse(&(&b * &a)).unwrap().inverse);
        let i_ab = index_of(&(&a * &b)).unwrap();
        let i_ba = index_of(&(&b * &a)).unwrap();
        prop_assert!(i_ba <= i_ab + 1 && i_ab <= i_ba + 1);
    }

    #[test]
    fn jacobson_on_classical((a, b) in pair()) {
        let quad = Quadruple::classical(a.clone(), b.clone()).unwrap();
        let id = SquareMatrix::identity(q(), a.dim());
        let ab_side = (&id - &(&a * &b)).is_invertible();
        let ba_side = (&id - &(&b * &a)).is_invertible();
        prop_assert_eq!(ab_side, ba_side);
        if ab_side {
            let inv = jacobson_inverse(&quad).unwrap();
            prop_assert_eq!(&(&id - &(&b * &a)) * &inv, id);
        }
    }
}
