use std::f64::consts::PI;

use pga::motors::{self, Motor};
use pga::{norms, pga3d, Multivector};
use proptest::prelude::*;

fn v3() -> impl Strategy<Value = [f64; 3]> {
    prop::array::uniform3(-3.0..3.0f64)
}

fn unit_line() -> impl Strategy<Value = Multivector> {
    (v3(), v3())
        .prop_filter("direction", |(_, d)| d.iter().map(|x| x * x).sum::<f64>() > 0.01)
        .prop_map(|(p, d)| norms::normalize(&pga3d::line_through(p, d)).unwrap())
}

/// `u Ω + v Ω I` with angle `u` kept away from the branch points.
fn bivector() -> impl Strategy<Value = Multivector> {
    (unit_line(), 0.01..PI - 0.01, -3.0..3.0f64).prop_map(|(l, u, v)| &(&l * u) + &(&(&l * &pga3d::pseudoscalar()) * v))
}

fn motor() -> impl Strategy<Value = Multivector> {
    bivector().prop_map(|b| motors::exp_bivector(&b).unwrap())
}

fn dist(p: &Multivector, q: &Multivector) -> f64 {
    let (a, b) = (pga3d::point_coords(p).unwrap(), pga3d::point_coords(q).unwrap());
    (0..3).map(|i| (a[i] - b[i]).powi(2)).sum::<f64>().sqrt()
}

proptest! {
    #[test]
    fn exponential_is_a_unit_motor(b in bivector()) {
        let m = motors::exp_bivector(&b).unwrap();
        prop_assert!((&m * &m.reverse()).approx_eq(&Multivector::scalar(pga3d::SIG, 1.0), 1e-12));
        prop_assert!(motors::log_motor(&m).unwrap().approx_eq(&b, 1e-9));
    }

    #[test]
    fn motors_are_isometries(m in motor(), p in v3(), q in v3()) {
        let (p, q) = (pga3d::point(p[0], p[1], p[2]), pga3d::point(q[0], q[1], q[2]));
        let (mp, mq) = (motors::sandwich(&m, &p).unwrap(), motors::sandwich(&m, &q).unwrap());
        prop_assert!((dist(&mp, &mq) - dist(&p, &q)).abs() < 1e-9);
    }

    #[test]
    fn sandwich_preserves_incidence(m in motor(), p in v3(), q in v3()) {
        let (p, q) = (pga3d::point(p[0], p[1], p[2]), pga3d::point(q[0], q[1], q[2]));
        let line = &p & &q;
        let moved = motors::sandwich(&m, &line).unwrap();
        let joined = &motors::sandwich(&m, &p).unwrap() & &motors::sandwich(&m, &q).unwrap();
        prop_assert!(moved.approx_eq(&joined, 1e-9));
    }

    #[test]
    fn square_root_squares_back(m in motor()) {
        let r = motors::sqrt_motor(&m).unwrap();
        prop_assert!((&r * &r).approx_eq(&m, 1e-9));
    }

    #[test]
    fn motor_between_lines_carries_one_onto_the_other(a in unit_line(), b in unit_line()) {
        let g = motors::motor_between(&a, &b).unwrap();
        prop_assert!(motors::sandwich(&g, &a).unwrap().approx_eq(&b, 1e-8));
    }

    #[test]
    fn composition_matches_products(a in motor(), b in motor(), p in v3()) {
        let (ma, mb) = (Motor::new(a).unwrap(), Motor::new(b).unwrap());
        let p = pga3d::point(p[0], p[1], p[2]);
        let twice = mb.apply(&ma.apply(&p));
        prop_assert!(mb.after(&ma).apply(&p).approx_eq(&twice, 1e-9));
    }
}

#[test]
fn reflections_in_perpendicular_planes_compose_to_a_half_turn() {
    let (x, y) = (pga3d::plane(1.0, 0.0, 0.0, 0.0), pga3d::plane(0.0, 1.0, 0.0, 0.0));
    let p = pga3d::point(1.0, 2.0, 3.0);
    let twice = motors::reflect(&y, &motors::reflect(&x, &p));
    let c = pga3d::point_coords(&twice).unwrap();
    assert!((c[0] + 1.0).abs() < 1e-12 && (c[1] + 2.0).abs() < 1e-12 && (c[2] - 3.0).abs() < 1e-12);
}
