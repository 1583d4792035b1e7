//! Concrete groups used throughout: a closed genus-2 surface group, a
//! Schottky group and a once-punctured torus group.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, FRAC_PI_4, SQRT_2};

use num_complex::Complex64;

use super::{GroupError, GroupRep, GroupWord};
use crate::poincare::MobiusIsometry;

/// Side pairings of the regular octagon with interior angles `π/4`.
///
/// Generator `k` translates along the diameter at angle `kπ/4` by twice the
/// inradius `ρ`, where `cosh ρ = cot(π/8) = 1 + √2`. The single relator is
/// `A b C d a B c D`.
pub fn octagon_group() -> GroupRep {
    let cosh_rho = 1.0 + SQRT_2;
    let sinh_rho = libm::sqrt(cosh_rho * cosh_rho - 1.0);
    let generators: Vec<MobiusIsometry> = (0..4)
        .map(|k| {
            let phase = k as f64 * FRAC_PI_4;
            MobiusIsometry::normalized(
                Complex64::new(cosh_rho, 0.0),
                Complex64::new(libm::cos(phase), libm::sin(phase)) * sinh_rho,
                false,
            )
            .expect("octagon generators are unimodular")
        })
        .collect();
    let relator = GroupWord::parse("AbCdaBcD").expect("valid word");
    GroupRep::new("octagon", generators, vec![relator]).expect("octagon relator holds")
}

/// Center and radius of the isometric circle `|b̄ z + ā| = 1`.
pub fn isometric_circle(m: &MobiusIsometry) -> Option<(Complex64, f64)> {
    let b = m.b();
    if b.norm() == 0.0 {
        return None;
    }
    Some((-m.a().conj() / b.conj(), 1.0 / b.norm()))
}

/// Rank-2 Schottky group generated by translations of length `separation`
/// along the real and imaginary diameters.
///
/// The four isometric circles of `A, A⁻¹, B, B⁻¹` must be pairwise disjoint,
/// which holds exactly when `cosh(separation/2) > √2`.
pub fn schottky_rank2(separation: f64) -> Result<GroupRep, GroupError> {
    if separation <= 0.0 || !separation.is_finite() {
        return Err(GroupError::CirclesOverlap);
    }
    let a = MobiusIsometry::real_translation(separation);
    let b = a.conjugate_by(&MobiusIsometry::rotation(FRAC_PI_2));
    let circles: Vec<(Complex64, f64)> = [a, a.inverse(), b, b.inverse()]
        .iter()
        .map(|m| isometric_circle(m).ok_or(GroupError::CirclesOverlap))
        .collect::<Result<_, _>>()?;
    for (i, (ci, ri)) in circles.iter().enumerate() {
        for (cj, rj) in &circles[i + 1..] {
            if (ci - cj).norm() <= ri + rj {
                return Err(GroupError::CirclesOverlap);
            }
        }
    }
    GroupRep::new("schottky", vec![a, b], Vec::new())
}

/// A once-punctured torus group: free on two hyperbolic generators whose
/// commutator is parabolic.
///
/// These are the Cayley transforms of `[[1, 1], [1, 2]]` and
/// `[[1, −1], [−1, 2]]` (traces 3, 3, 3), written directly in disk form.
pub fn punctured_torus_group() -> GroupRep {
    let a = MobiusIsometry::new(Complex64::new(1.5, 0.0), Complex64::new(-0.5, -1.0), false)
        .expect("unimodular");
    let b = MobiusIsometry::new(Complex64::new(1.5, 0.0), Complex64::new(-0.5, 1.0), false)
        .expect("unimodular");
    GroupRep::new("punctured-torus", vec![a, b], Vec::new()).expect("no relators")
}
