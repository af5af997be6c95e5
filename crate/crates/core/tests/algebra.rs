use pga::{pga2d, pga3d, Multivector, Signature};
use proptest::prelude::*;

fn multivector(sig: Signature) -> impl Strategy<Value = Multivector> {
    prop::collection::vec(-3.0..3.0f64, sig.blade_count()).prop_map(move |c| Multivector::from_coeffs(sig, c).unwrap())
}

fn vector(sig: Signature) -> impl Strategy<Value = Multivector> {
    multivector(sig).prop_map(|x| x.grade_part(1))
}

fn any_sig() -> impl Strategy<Value = Signature> {
    prop_oneof![Just(Signature::PLANE), Just(Signature::SPACE), Just(Signature::SPHERE)]
}

fn triple() -> impl Strategy<Value = (Multivector, Multivector, Multivector)> {
    any_sig().prop_flat_map(|s| (multivector(s), multivector(s), multivector(s)))
}

proptest! {
    #[test]
    fn geometric_product_is_associative((a, b, c) in triple()) {
        let lhs = &(&a * &b) * &c;
        let rhs = &a * &(&b * &c);
        prop_assert!(lhs.approx_eq(&rhs, 1e-9), "{lhs} vs {rhs}");
    }

    #[test]
    fn product_distributes_over_sums((a, b, c) in triple()) {
        let lhs = &a * &(&b + &c);
        let rhs = &(&a * &b) + &(&a * &c);
        prop_assert!(lhs.approx_eq(&rhs, 1e-9));
    }

    #[test]
    fn vector_product_splits_into_inner_and_outer((a, b) in any_sig().prop_flat_map(|s| (vector(s), vector(s)))) {
        let split = &(&a | &b) + &(&a ^ &b);
        prop_assert!((&a * &b).approx_eq(&split, 1e-12));
        prop_assert!((&a ^ &a).is_zero());
    }

    #[test]
    fn reverse_is_an_anti_automorphism((a, b, _) in triple()) {
        let lhs = (&a * &b).reverse();
        let rhs = &b.reverse() * &a.reverse();
        prop_assert!(lhs.approx_eq(&rhs, 1e-9));
    }

    #[test]
    fn wedge_is_associative((a, b, c) in triple()) {
        prop_assert!((&(&a ^ &b) ^ &c).approx_eq(&(&a ^ &(&b ^ &c)), 1e-9));
    }

    #[test]
    fn join_is_dual_to_meet((a, b) in (multivector(Signature::SPACE), multivector(Signature::SPACE))) {
        let join = &a & &b;
        let via_dual = (&a.poincare_dual() ^ &b.poincare_dual()).poincare_undual();
        prop_assert!(join.approx_eq(&via_dual, 1e-12));
        prop_assert_eq!(a.poincare_dual().poincare_undual(), a);
    }
}

#[test]
fn incidence_in_the_plane() {
    let (p, q) = (pga2d::point(1.0, 2.0), pga2d::point(-3.0, 0.5));
    let line = &p & &q;
    assert!((&line ^ &p).is_zero() && (&line ^ &q).is_zero());
    let x = &line ^ &pga2d::line(1.0, 0.0, 0.0);
    let [_, y] = pga2d::point_coords(&x).unwrap();
    assert!((y - (2.0 - 1.5 / 4.0)).abs() < 1e-12);
}

#[test]
fn incidence_in_space() {
    let pts = [pga3d::point(1.0, 0.0, 0.0), pga3d::point(0.0, 1.0, 0.0), pga3d::point(0.0, 0.0, 1.0)];
    let plane = &(&pts[0] & &pts[1]) & &pts[2];
    let [a, b, c, d] = pga3d::plane_coeffs(&plane);
    assert!((a - b).abs() < 1e-12 && (b - c).abs() < 1e-12 && (a + d).abs() < 1e-12);
    assert!(pts.iter().all(|p| (&plane ^ p).is_zero()));
}
