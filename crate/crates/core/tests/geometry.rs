use std::f64::consts::{PI, TAU};

use hypsurf_core::{
    euclidean_diameter, hyp_distance, translation_along, DiskPoint, Geodesic, HalfPlane,
    IdealPoint, IsometryClass, MobiusIsometry, Point, Side,
};
use num_complex::Complex64;
use proptest::prelude::*;

fn disk_point(max_r: f64) -> impl Strategy<Value = DiskPoint> {
    (0.0..max_r, 0.0..TAU).prop_map(|(r, t)| DiskPoint::from_parts(r * t.cos(), r * t.sin()).unwrap())
}

fn isometry() -> impl Strategy<Value = MobiusIsometry> {
    (0.0..TAU, 0.0..3.0, 0.0..TAU, any::<bool>()).prop_map(|(r1, t, r2, rev)| {
        let m = MobiusIsometry::rotation(r1)
            * MobiusIsometry::real_translation(t)
            * MobiusIsometry::rotation(r2);
        if rev {
            m * MobiusIsometry::conjugation()
        } else {
            m
        }
    })
}

fn hyperbolic(min_len: f64) -> impl Strategy<Value = MobiusIsometry> {
    (0.0..TAU, min_len..4.0, disk_point(0.8)).prop_map(|(r, t, p)| {
        let g = MobiusIsometry::moving_to_origin(p).inverse() * MobiusIsometry::rotation(r);
        MobiusIsometry::real_translation(t).conjugate_by(&g)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn isometries_preserve_distance(m in isometry(), p in disk_point(0.95), q in disk_point(0.95)) {
        let d = hyp_distance(p, q);
        let d2 = hyp_distance(m.apply(p).unwrap(), m.apply(q).unwrap());
        prop_assert!((d - d2).abs() < 1e-9, "{} vs {}", d, d2);
    }

    #[test]
    fn composition_is_action_of_product(m in isometry(), n in isometry(), p in disk_point(0.9)) {
        let lhs = (m * n).apply(p).unwrap();
        let rhs = m.apply(n.apply(p).unwrap()).unwrap();
        prop_assert!((lhs.z() - rhs.z()).norm() < 1e-9);
        prop_assert!((m * m.inverse()).is_identity());
    }

    #[test]
    fn conjugation_preserves_class(g in isometry(), t in 0.0..3.0f64, r in 0.0..TAU) {
        let g = if g.reverses_orientation() { g * MobiusIsometry::conjugation() } else { g };
        for m in [
            MobiusIsometry::real_translation(t + 0.01),
            MobiusIsometry::rotation(r + 0.01),
            MobiusIsometry::IDENTITY,
        ] {
            prop_assert_eq!(m.classify().unwrap(), m.conjugate_by(&g).classify().unwrap());
        }
    }

    #[test]
    fn iteration_converges_to_attracting_point(m in hyperbolic(0.1), p in disk_point(0.9)) {
        let (att, _) = m.hyperbolic_fixed_points().unwrap();
        let mut z = p;
        for _ in 0..200 {
            match m.apply(z) {
                Ok(next) if next.modulus() < 1.0 - 1e-13 => z = next,
                _ => break,
            }
        }
        let angle = IdealPoint::from_direction(z.z()).unwrap();
        prop_assert!(angle.angular_distance(att) < 1e-6);
    }

    #[test]
    fn half_plane_side_is_invariant(p in disk_point(0.95), s in 0.0..TAU, e in 0.1..(TAU - 0.1), t in -3.0..3.0f64) {
        let g = Geodesic::new(IdealPoint::new(s).unwrap(), IdealPoint::new(s + e).unwrap()).unwrap();
        let h = HalfPlane::new(g, Side::Left);
        let m = if t > 0.0 {
            translation_along(&g, t).unwrap()
        } else if t < 0.0 {
            translation_along(&g.reversed(), -t).unwrap()
        } else {
            MobiusIsometry::IDENTITY
        };
        let side = h.side_of(Point::Interior(p), 1e-9).unwrap();
        let image = h.side_of(Point::Interior(m.apply(p).unwrap()), 1e-9).unwrap();
        if let (Some(a), Some(b)) = (side, image) {
            prop_assert_eq!(a, b);
            prop_assert_eq!(h.contains(Point::Interior(p)).unwrap(), a == Side::Left);
        }
    }

    #[test]
    fn geodesic_through_matches_orthogonal_circle(p in disk_point(0.9), q in disk_point(0.9)) {
        // circle orthogonal to the unit circle through p and q: centre c with
        // 2⟨p, c⟩ = |p|² + 1 and 2⟨q, c⟩ = |q|² + 1
        let det = p.re() * q.im() - p.im() * q.re();
        prop_assume!(det.abs() > 1e-3 && (p.z() - q.z()).norm() > 1e-3);
        let (rp, rq) = ((p.z().norm_sqr() + 1.0) / 2.0, (q.z().norm_sqr() + 1.0) / 2.0);
        let c = Complex64::new((rp * q.im() - rq * p.im()) / det, (p.re() * rq - q.re() * rp) / det);
        let r = (c.norm_sqr() - 1.0).sqrt();
        let g = Geodesic::through(Point::Interior(p), Point::Interior(q)).unwrap();
        for end in [g.start(), g.end()] {
            prop_assert!(((end.to_complex() - c).norm() - r).abs() < 1e-9);
        }
        prop_assert!(((p.z() - c).norm() - r).abs() < 1e-10);
        prop_assert!(g.contains(p.z(), 1e-10) && g.contains(q.z(), 1e-10));
        // oriented from p to q
        let s = g.start().to_complex();
        prop_assert!((s - p.z()).norm() < (s - q.z()).norm());
    }

    #[test]
    fn diameter_matches_brute_force(pts in prop::collection::vec(disk_point(0.99), 1..100), ideal in prop::collection::vec(0.0..TAU, 0..5)) {
        let mut all: Vec<Point> = pts.into_iter().map(Point::Interior).collect();
        all.extend(ideal.into_iter().map(|t| Point::Ideal(IdealPoint::new(t).unwrap())));
        let mut brute: f64 = 0.0;
        for x in &all {
            for y in &all {
                brute = brute.max((x.complex() - y.complex()).norm());
            }
        }
        prop_assert!((euclidean_diameter(&all).unwrap() - brute).abs() < 1e-12);
    }

    #[test]
    fn translation_along_has_requested_axis_and_length(s in 0.0..TAU, e in 0.1..(TAU - 0.1), t in 0.05..5.0f64) {
        let g = Geodesic::new(IdealPoint::new(s).unwrap(), IdealPoint::new(s + e).unwrap()).unwrap();
        let m = translation_along(&g, t).unwrap();
        prop_assert_eq!(m.classify().unwrap(), IsometryClass::Hyperbolic);
        prop_assert!(m.axis().unwrap().same_as(&g, 1e-9));
        prop_assert!((m.translation_length().unwrap() - t).abs() < 1e-9);
        prop_assert!(((m * m).translation_length().unwrap() - 2.0 * t).abs() < 1e-9);
        // the canonical matrix conjugated into place
        let frame = g.standard_frame().unwrap();
        prop_assert!(m.distance_to(&MobiusIsometry::real_translation(t).conjugate_by(&frame)) < 1e-9);
    }
}

#[test]
fn translation_matrix_moves_origin_to_tanh() {
    for t in [0.1, 1.0, 3.0] {
        let p = MobiusIsometry::real_translation(t).apply(DiskPoint::ORIGIN).unwrap();
        assert!((p.re() - (t / 2.0).tanh()).abs() < 1e-15);
        assert!(p.im().abs() < 1e-15);
    }
}

#[test]
fn ideal_points_are_acted_on_the_circle() {
    let m = MobiusIsometry::rotation(0.3) * MobiusIsometry::real_translation(2.0);
    for k in 0..16 {
        let x = IdealPoint::new(k as f64 * PI / 8.0).unwrap();
        let y = m.apply(x).unwrap();
        // direct evaluation of the fractional linear map
        let z = x.to_complex();
        let w = (m.a() * z + m.b()) / (m.b().conj() * z + m.a().conj());
        assert!((w.norm() - 1.0).abs() < 1e-12);
        assert!(y.angular_distance(IdealPoint::from_direction(w).unwrap()) < 1e-12);
    }
}
