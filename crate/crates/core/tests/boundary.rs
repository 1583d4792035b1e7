use hypsurf_core::boundary::{image_pair, BoundaryError};
use hypsurf_core::{
    continuity_profile, induced_boundary_sample, is_boundary_identity, octagon_group,
    order_check, punctured_torus_group, schottky_rank2, FreeAutomorphism, GroupWord,
    OrderVerdict,
};
use proptest::prelude::*;

#[derive(Debug, Clone, Copy)]
enum Move {
    Transvection { i: usize, inverse: bool, left: bool },
    Invert(usize),
    Swap,
}

impl Move {
    fn automorphism(self) -> FreeAutomorphism {
        match self {
            Move::Transvection { i, inverse, left } => {
                FreeAutomorphism::transvection(2, i, 1 - i, inverse, left).unwrap()
            }
            Move::Invert(i) => FreeAutomorphism::invert_generator(2, i).unwrap(),
            Move::Swap => FreeAutomorphism::swap(2, 0, 1).unwrap(),
        }
    }
}

fn transvection() -> impl Strategy<Value = Move> {
    (0..2usize, any::<bool>(), any::<bool>())
        .prop_map(|(i, inverse, left)| Move::Transvection { i, inverse, left })
}

fn any_move() -> impl Strategy<Value = Move> {
    prop_oneof![
        3 => transvection(),
        1 => (0..2usize).prop_map(Move::Invert),
        1 => Just(Move::Swap),
    ]
}

fn product(moves: &[Move]) -> FreeAutomorphism {
    moves
        .iter()
        .fold(FreeAutomorphism::identity(2), |acc, m| acc.compose(&m.automorphism()).unwrap())
}

/// Sign of the determinant of the abelianization, computed from exponent sums.
fn abelian_det_sign(phi: &FreeAutomorphism) -> i64 {
    let column = |w: &GroupWord| {
        let mut e = [0i64; 2];
        for l in w.letters() {
            e[l.generator()] += if l.is_inverse() { -1 } else { 1 };
        }
        e
    };
    let (x, y) = (column(&phi.images()[0]), column(&phi.images()[1]));
    let det = x[0] * y[1] - x[1] * y[0];
    assert_eq!(det.abs(), 1);
    det
}

fn verdict_sign(v: OrderVerdict) -> i64 {
    match v {
        OrderVerdict::Preserving => 1,
        OrderVerdict::Reversing => -1,
        OrderVerdict::Violation(v) => panic!("order violation {v:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn transvection_products_preserve_order(moves in prop::collection::vec(transvection(), 1..=5)) {
        let rep = punctured_torus_group();
        let s = induced_boundary_sample(&rep, &product(&moves), 6).unwrap();
        prop_assert_eq!(order_check(&s).unwrap(), OrderVerdict::Preserving);
        let r = continuity_profile(&s).unwrap();
        let (sum_in, sum_out) = r.gaps.iter().fold((0.0, 0.0), |acc, g| (acc.0 + g.0, acc.1 + g.1));
        prop_assert!((sum_in - std::f64::consts::TAU).abs() < 1e-9);
        prop_assert!((sum_out - std::f64::consts::TAU).abs() < 1e-9);
        prop_assert!(r.gaps.iter().all(|g| g.0 > 0.0 && g.1 > 0.0));
    }

    #[test]
    fn orientation_is_multiplicative(a in prop::collection::vec(any_move(), 1..=4), b in prop::collection::vec(any_move(), 1..=4)) {
        let rep = punctured_torus_group();
        let (phi, psi) = (product(&a), product(&b));
        let sign = |f: &FreeAutomorphism| verdict_sign(order_check(&induced_boundary_sample(&rep, f, 5).unwrap()).unwrap());
        let (sp, sq, spq) = (sign(&phi), sign(&psi), sign(&phi.compose(&psi).unwrap()));
        prop_assert_eq!(spq, sp * sq);
        // independent oracle: orientation is the sign of the abelianized determinant
        prop_assert_eq!(sp, abelian_det_sign(&phi));
        prop_assert_eq!(sq, abelian_det_sign(&psi));
    }

    #[test]
    fn sample_is_functorial(a in prop::collection::vec(any_move(), 1..=3), b in prop::collection::vec(any_move(), 1..=3)) {
        let rep = punctured_torus_group();
        let (phi, psi) = (product(&a), product(&b));
        let n = 5;
        let composed = induced_boundary_sample(&rep, &phi.compose(&psi).unwrap(), n).unwrap();
        let first = induced_boundary_sample(&rep, &psi, n).unwrap();
        // where ψ(w) is itself a sampled word, φ's own sample agrees
        let second = induced_boundary_sample(&rep, &phi, n).unwrap();
        for p in composed.pairs() {
            let Some(q) = first.lookup(&p.word) else { continue };
            // follow q's output through φ, at the word ψ(w) whose fixed point it is
            let (x, y) = image_pair(&rep, &phi, &psi.apply(&p.word).unwrap()).unwrap().unwrap();
            prop_assert!(x.angular_distance(q.theta_out) < 1e-6);
            prop_assert!(y.angular_distance(p.theta_out) < 1e-6);
            if let Some(r) = second.lookup(&psi.apply(&p.word).unwrap()) {
                prop_assert!(r.theta_in.angular_distance(q.theta_out) < 1e-6);
                prop_assert!(r.theta_out.angular_distance(p.theta_out) < 1e-6);
            }
        }
    }

    #[test]
    fn inverse_reverses_pairs(a in prop::collection::vec(any_move(), 1..=5)) {
        let rep = punctured_torus_group();
        let phi = product(&a);
        let inv = phi.inverse();
        let forward = induced_boundary_sample(&rep, &phi, 5).unwrap();
        let backward = induced_boundary_sample(&rep, &inv, 5).unwrap();
        for p in forward.pairs() {
            let (x, y) = image_pair(&rep, &inv, &phi.apply(&p.word).unwrap()).unwrap().unwrap();
            prop_assert!(x.angular_distance(p.theta_out) < 1e-6);
            prop_assert!(y.angular_distance(p.theta_in) < 1e-6);
            if let Some(q) = backward.lookup(&phi.apply(&p.word).unwrap()) {
                prop_assert!(q.theta_in.angular_distance(p.theta_out) < 1e-6);
                prop_assert!(q.theta_out.angular_distance(p.theta_in) < 1e-6);
            }
        }
    }
}

#[test]
fn inner_residual_vanishes_at_sufficient_depth() {
    let rep = octagon_group();
    for g in ["B", "Ac", "dA"] {
        let g = GroupWord::parse(g).unwrap();
        let phi = FreeAutomorphism::inner(4, &g).unwrap();
        for m in g.len()..=3 {
            let r = is_boundary_identity(&rep, &phi, 3, m, 1e-3).unwrap();
            assert!(r.identity);
            assert!(r.residual < 1e-6);
            assert_eq!(r.best_inner, g.inverse());
        }
    }
}

#[test]
fn inner_sample_is_mobius_and_derivative_bounded() {
    let rep = octagon_group();
    let g = GroupWord::parse("Ab").unwrap();
    let m = rep.evaluate(&g).unwrap();
    let s = induced_boundary_sample(&rep, &FreeAutomorphism::inner(4, &g).unwrap(), 4).unwrap();
    assert!(s.len() >= 100);
    for p in s.pairs() {
        assert!(m.apply(p.theta_in).unwrap().angular_distance(p.theta_out) < 1e-6);
    }
    let r = continuity_profile(&s).unwrap();
    let (lo, hi) = m.boundary_derivative_bounds();
    for (gap_in, gap_out) in &r.gaps {
        assert!(*gap_out <= hi * gap_in * (1.0 + 1e-9));
        assert!(*gap_out >= lo * gap_in * (1.0 - 1e-9));
    }
    assert!(r.max_image_gap <= hi * r.max_gap_in * (1.0 + 1e-9));
}

#[test]
fn twist_has_a_deviation_floor() {
    let rep = punctured_torus_group();
    let twist = FreeAutomorphism::from_images(vec![
        GroupWord::parse("AB").unwrap(),
        GroupWord::parse("B").unwrap(),
    ])
    .unwrap();
    let r = is_boundary_identity(&rep, &twist, 5, 3, 0.01).unwrap();
    assert!(!r.identity);
    assert!(r.residual > 0.05);
    assert!(r.near_minimizers.contains(&r.best_inner));
}

#[test]
fn free_automorphism_on_schottky_group_is_sampled() {
    // the limit set is a Cantor set; the identity still samples exactly
    let rep = schottky_rank2(4.0).unwrap();
    let s = induced_boundary_sample(&rep, &FreeAutomorphism::identity(2), 5).unwrap();
    assert_eq!(s.skipped(), 0);
    assert!(s.max_deviation() < 1e-10);
}

#[test]
fn order_violations_are_surfaced() {
    // a non-inner automorphism of the free group does not descend to the
    // octagon surface group; the sampled map is not monotone
    let rep = octagon_group();
    let phi = FreeAutomorphism::transvection(4, 0, 2, false, false).unwrap();
    assert!(matches!(
        induced_boundary_sample(&rep, &phi, 3),
        Err(BoundaryError::OrderViolation(_))
    ));
}
