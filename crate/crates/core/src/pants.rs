//! Generalized pairs of pants and pants decompositions.
//!
//! A pair of pants with cuff lengths `x₁, x₂, x₃` is two copies of a
//! right-angled hexagon with alternate sides `xᵢ/2`, glued along the three
//! seams. The seam `dᵢⱼ` between cuffs `i` and `j` satisfies
//!
//! ```text
//! cosh dᵢⱼ = (cosh(xᵢ/2) cosh(xⱼ/2) + cosh(xₖ/2)) / (sinh(xᵢ/2) sinh(xⱼ/2))
//! ```
//!
//! A cuff of length zero is a cusp; both seams touching it are infinite.
//! Every pair of pants has area `2π`.

use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::TAU;
use core::fmt;

use thiserror::Error;

use crate::surface::Signature;

/// Length of the horocycle that cuts off a cusp, for any later development
/// of cusped pants. Nothing computes with it yet.
pub const HOROCYCLE_LENGTH: f64 = 2.0;

/// Default length and twist of curves glued inside a decomposition.
pub const DEFAULT_GLUING_LENGTH: f64 = 1.0;
pub const DEFAULT_TWIST: f64 = 0.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PantsError {
    #[error("cuff length {0} is negative or not finite")]
    NegativeLength(f64),
    #[error("boundary length {0} must be positive")]
    NonpositiveBoundaryLength(f64),
    #[error("signature has chi = {chi} >= 0 and carries no hyperbolic pants decomposition")]
    NotHyperbolizable { chi: i64 },
    #[error("expected {expected} boundary lengths, got {got}")]
    LengthCountMismatch { expected: usize, got: usize },
    #[error("glued lengths disagree in gluings {gluings:?}")]
    LengthMismatch { gluings: Vec<usize> },
    #[error("cuff slot bookkeeping broken: {0}")]
    SlotAccounting(String),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CuffLengths([f64; 3]);

impl CuffLengths {
    pub fn new(x1: f64, x2: f64, x3: f64) -> Result<Self, PantsError> {
        for x in [x1, x2, x3] {
            if x < 0.0 || !x.is_finite() {
                return Err(PantsError::NegativeLength(x));
            }
        }
        Ok(Self([x1, x2, x3]))
    }

    pub fn as_array(&self) -> [f64; 3] {
        self.0
    }

    pub fn get(&self, i: usize) -> f64 {
        self.0[i]
    }
}

/// A seam length, or the marker for a seam running out a cusp.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Seam {
    Finite(f64),
    Infinite,
}

impl Seam {
    pub fn value(&self) -> Option<f64> {
        match self {
            Seam::Finite(x) => Some(*x),
            Seam::Infinite => None,
        }
    }
}

impl fmt::Display for Seam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Seam::Finite(x) => write!(f, "{x}"),
            Seam::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PantsGeometry {
    pub cuffs: CuffLengths,
    /// `[d₁₂, d₂₃, d₃₁]`.
    pub seams: [Seam; 3],
    pub area: f64,
}

/// Cuff pairs for the seams `d₁₂, d₂₃, d₃₁`, with the opposite cuff.
const SEAM_CUFFS: [(usize, usize, usize); 3] = [(0, 1, 2), (1, 2, 0), (2, 0, 1)];

impl PantsGeometry {
    /// The seam between cuffs `i` and `j` (0-based, `i ≠ j`).
    pub fn seam_between(&self, i: usize, j: usize) -> Seam {
        let idx = SEAM_CUFFS
            .iter()
            .position(|&(p, q, _)| (p, q) == (i, j) || (p, q) == (j, i))
            .expect("i and j must be distinct cuffs");
        self.seams[idx]
    }

    /// Largest relative residual of the right-angled hexagon identity
    /// `cosh d · sinh(xᵢ/2) sinh(xⱼ/2) = cosh(xᵢ/2) cosh(xⱼ/2) + cosh(xₖ/2)`
    /// over the finite seams. `None` when no seam is finite.
    pub fn hexagon_residual(&self) -> Option<f64> {
        let half = self.cuffs.0.map(|x| x / 2.0);
        SEAM_CUFFS
            .iter()
            .zip(self.seams.iter())
            .filter_map(|(&(i, j, k), seam)| {
                let d = seam.value()?;
                let lhs = libm::cosh(d) * libm::sinh(half[i]) * libm::sinh(half[j]);
                let rhs = libm::cosh(half[i]) * libm::cosh(half[j]) + libm::cosh(half[k]);
                Some((lhs - rhs).abs() / rhs)
            })
            .reduce(f64::max)
    }
}

pub fn build_pants(x: CuffLengths) -> PantsGeometry {
    let half = x.0.map(|v| v / 2.0);
    let seams = SEAM_CUFFS.map(|(i, j, k)| {
        if x.0[i] == 0.0 || x.0[j] == 0.0 {
            Seam::Infinite
        } else {
            let num = libm::cosh(half[i]) * libm::cosh(half[j]) + libm::cosh(half[k]);
            let den = libm::sinh(half[i]) * libm::sinh(half[j]);
            Seam::Finite(libm::acosh(num / den))
        }
    });
    PantsGeometry {
        cuffs: x,
        seams,
        area: TAU,
    }
}

/// Cuff `cuff ∈ {0, 1, 2}` of pants number `pants`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CuffSlot {
    pub pants: usize,
    pub cuff: usize,
}

impl CuffSlot {
    pub const fn new(pants: usize, cuff: usize) -> Self {
        Self { pants, cuff }
    }
}

impl fmt::Display for CuffSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}.{}", self.pants, self.cuff)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gluing {
    pub from: CuffSlot,
    pub to: CuffSlot,
    pub length: f64,
    pub twist: f64,
}

/// A cuff glued to itself by the antipodal map, closing off a crosscap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrosscapGluing {
    pub slot: CuffSlot,
    pub length: f64,
}

/// An external geodesic boundary curve `γ_index` of the surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundarySlot {
    pub slot: CuffSlot,
    pub index: usize,
    pub length: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PantsDecompositionPlan {
    /// Cuff lengths of each pair of pants, by pants id.
    pub pants: Vec<CuffLengths>,
    pub gluings: Vec<Gluing>,
    pub crosscaps: Vec<CrosscapGluing>,
    pub boundary: Vec<BoundarySlot>,
    pub cusps: Vec<CuffSlot>,
}

#[derive(Debug, Clone, Copy)]
enum Hole {
    Boundary(usize, f64),
    Cusp,
    Handle(usize),
    Crosscap,
}

/// Pants decomposition of the surface with signature `s`, with the `b`
/// boundary curves of the given lengths and every annular end a cusp.
///
/// Cutting each handle and crosscap open leaves a sphere with
/// `N = 2g + c + b + a` holes, decomposed as a chain of `N − 2` pants. Glued
/// curves get length 1 and twist 0.
pub fn plan_decomposition(
    s: Signature,
    boundary_lengths: &[f64],
) -> Result<PantsDecompositionPlan, PantsError> {
    let chi = s.chi();
    if chi >= 0 {
        return Err(PantsError::NotHyperbolizable { chi });
    }
    if boundary_lengths.len() != s.b as usize {
        return Err(PantsError::LengthCountMismatch {
            expected: s.b as usize,
            got: boundary_lengths.len(),
        });
    }
    if let Some(&x) = boundary_lengths
        .iter()
        .find(|x| **x <= 0.0 || !x.is_finite())
    {
        return Err(PantsError::NonpositiveBoundaryLength(x));
    }

    let mut holes: Vec<Hole> = Vec::with_capacity(s.complexity() as usize);
    holes.extend(boundary_lengths.iter().enumerate().map(|(i, x)| Hole::Boundary(i, *x)));
    holes.extend((0..s.a).map(|_| Hole::Cusp));
    for h in 0..s.g as usize {
        holes.push(Hole::Handle(h));
        holes.push(Hole::Handle(h));
    }
    holes.extend((0..s.c).map(|_| Hole::Crosscap));

    let n = holes.len();
    let count = n - 2;
    let mut hole_slots: Vec<CuffSlot> = Vec::with_capacity(n);
    let mut gluings = Vec::new();
    if count == 1 {
        hole_slots.extend((0..3).map(|c| CuffSlot::new(0, c)));
    } else {
        hole_slots.push(CuffSlot::new(0, 0));
        hole_slots.push(CuffSlot::new(0, 1));
        for p in 1..count - 1 {
            hole_slots.push(CuffSlot::new(p, 1));
        }
        hole_slots.push(CuffSlot::new(count - 1, 1));
        hole_slots.push(CuffSlot::new(count - 1, 2));
        for p in 0..count - 1 {
            gluings.push(Gluing {
                from: CuffSlot::new(p, 2),
                to: CuffSlot::new(p + 1, 0),
                length: DEFAULT_GLUING_LENGTH,
                twist: DEFAULT_TWIST,
            });
        }
    }

    let mut lengths = alloc::vec![[DEFAULT_GLUING_LENGTH; 3]; count];
    let mut crosscaps = Vec::new();
    let mut boundary = Vec::new();
    let mut cusps = Vec::new();
    let mut handle_first: Vec<Option<CuffSlot>> = alloc::vec![None; s.g as usize];
    for (hole, slot) in holes.iter().zip(hole_slots.iter().copied()) {
        match *hole {
            Hole::Boundary(index, length) => {
                lengths[slot.pants][slot.cuff] = length;
                boundary.push(BoundarySlot { slot, index, length });
            }
            Hole::Cusp => {
                lengths[slot.pants][slot.cuff] = 0.0;
                cusps.push(slot);
            }
            Hole::Handle(h) => match handle_first[h].take() {
                None => handle_first[h] = Some(slot),
                Some(first) => gluings.push(Gluing {
                    from: first,
                    to: slot,
                    length: DEFAULT_GLUING_LENGTH,
                    twist: DEFAULT_TWIST,
                }),
            },
            Hole::Crosscap => crosscaps.push(CrosscapGluing {
                slot,
                length: DEFAULT_GLUING_LENGTH,
            }),
        }
    }
    gluings.sort_by_key(|g| g.from);
    let pants = lengths
        .into_iter()
        .map(|[x1, x2, x3]| CuffLengths::new(x1, x2, x3))
        .collect::<Result<Vec<_>, _>>()?;
    let plan = PantsDecompositionPlan {
        pants,
        gluings,
        crosscaps,
        boundary,
        cusps,
    };
    plan.check_slots()?;
    Ok(plan)
}

impl PantsDecompositionPlan {
    pub fn pants_count(&self) -> usize {
        self.pants.len()
    }

    /// `χ` of the glued surface, `−(number of pants)`.
    pub fn chi(&self) -> i64 {
        -(self.pants.len() as i64)
    }

    fn cuff_length(&self, slot: CuffSlot) -> Option<f64> {
        self.pants.get(slot.pants).map(|p| p.get(slot.cuff))
    }

    /// Overrides the length and twist of one gluing, updating both cuffs.
    pub fn set_gluing(&mut self, index: usize, length: f64, twist: f64) -> Result<(), PantsError> {
        if length <= 0.0 || !length.is_finite() {
            return Err(PantsError::NonpositiveBoundaryLength(length));
        }
        let g = self
            .gluings
            .get_mut(index)
            .ok_or_else(|| PantsError::SlotAccounting(alloc::format!("no gluing {index}")))?;
        g.length = length;
        g.twist = twist;
        let (from, to) = (g.from, g.to);
        for slot in [from, to] {
            let mut x = self.pants[slot.pants].as_array();
            x[slot.cuff] = length;
            self.pants[slot.pants] = CuffLengths(x);
        }
        Ok(())
    }

    /// Every cuff slot is used exactly once across gluings, crosscaps,
    /// boundary and cusps.
    pub fn check_slots(&self) -> Result<(), PantsError> {
        let mut uses = alloc::vec![0u8; 3 * self.pants.len()];
        let mut mark = |slot: CuffSlot| -> Result<(), PantsError> {
            if slot.pants >= self.pants.len() || slot.cuff >= 3 {
                return Err(PantsError::SlotAccounting(alloc::format!("slot {slot} out of range")));
            }
            uses[3 * slot.pants + slot.cuff] += 1;
            Ok(())
        };
        for g in &self.gluings {
            mark(g.from)?;
            mark(g.to)?;
        }
        for c in &self.crosscaps {
            mark(c.slot)?;
        }
        for b in &self.boundary {
            mark(b.slot)?;
        }
        for c in &self.cusps {
            mark(*c)?;
        }
        match uses.iter().position(|&u| u != 1) {
            None => Ok(()),
            Some(i) => Err(PantsError::SlotAccounting(alloc::format!(
                "slot {} used {} times",
                CuffSlot::new(i / 3, i % 3),
                uses[i]
            ))),
        }
    }
}

/// Result of fitting the pants metrics of a plan together.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricSummary {
    pub total_area: f64,
    pub pants: Vec<PantsGeometry>,
    pub valid: bool,
}

/// Builds every pair of pants of the plan and checks that glued cuffs match.
pub fn realize(plan: &PantsDecompositionPlan) -> Result<MetricSummary, PantsError> {
    plan.check_slots()?;
    let bad: Vec<usize> = plan
        .gluings
        .iter()
        .enumerate()
        .filter(|(_, g)| {
            let ok = |slot| plan.cuff_length(slot) == Some(g.length);
            !(g.length > 0.0 && ok(g.from) && ok(g.to))
        })
        .map(|(i, _)| i)
        .collect();
    if !bad.is_empty() {
        return Err(PantsError::LengthMismatch { gluings: bad });
    }
    for c in &plan.crosscaps {
        if c.length.is_nan() || c.length <= 0.0 || plan.cuff_length(c.slot) != Some(c.length) {
            return Err(PantsError::SlotAccounting(alloc::format!("crosscap at {}", c.slot)));
        }
    }
    for b in &plan.boundary {
        if b.length.is_nan() || b.length <= 0.0 || plan.cuff_length(b.slot) != Some(b.length) {
            return Err(PantsError::SlotAccounting(alloc::format!("boundary at {}", b.slot)));
        }
    }
    for c in &plan.cusps {
        if plan.cuff_length(*c) != Some(0.0) {
            return Err(PantsError::SlotAccounting(alloc::format!("cusp at {c}")));
        }
    }
    let pants: Vec<PantsGeometry> = plan.pants.iter().map(|x| build_pants(*x)).collect();
    Ok(MetricSummary {
        total_area: TAU * pants.len() as f64,
        pants,
        valid: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    #[test]
    fn ideal_pants() {
        let p = build_pants(CuffLengths::new(0.0, 0.0, 0.0).unwrap());
        assert_eq!(p.seams, [Seam::Infinite; 3]);
        assert_eq!(p.area, 2.0 * PI);
        assert_eq!(p.hexagon_residual(), None);
    }

    #[test]
    fn one_cusp_leaves_opposite_seam_finite() {
        let p = build_pants(CuffLengths::new(1.0, 2.0, 0.0).unwrap());
        assert!(matches!(p.seams[0], Seam::Finite(_)));
        assert_eq!(p.seams[1], Seam::Infinite);
        assert_eq!(p.seams[2], Seam::Infinite);
    }

    #[test]
    fn permuting_cuffs_permutes_seams() {
        let p = build_pants(CuffLengths::new(0.7, 1.9, 3.1).unwrap());
        let q = build_pants(CuffLengths::new(1.9, 0.7, 3.1).unwrap());
        assert_eq!(p.seam_between(0, 1), q.seam_between(1, 0));
        assert_eq!(p.seam_between(1, 2), q.seam_between(0, 2));
        assert_eq!(p.seam_between(2, 0), q.seam_between(2, 1));
    }

    #[test]
    fn negative_cuff_rejected() {
        assert_eq!(CuffLengths::new(1.0, -0.1, 1.0), Err(PantsError::NegativeLength(-0.1)));
        assert!(CuffLengths::new(f64::NAN, 1.0, 1.0).is_err());
    }

    #[test]
    fn plan_examples() {
        let pants = plan_decomposition(Signature::new(0, 0, 3, 0), &[1.0, 2.0, 3.0]).unwrap();
        assert_eq!(pants.pants_count(), 1);
        assert!(pants.gluings.is_empty());
        assert_eq!(pants.boundary.len(), 3);
        assert_eq!(pants.pants[0].as_array(), [1.0, 2.0, 3.0]);

        let genus2 = plan_decomposition(Signature::new(2, 0, 0, 0), &[]).unwrap();
        assert_eq!(genus2.pants_count(), 2);
        assert_eq!(genus2.gluings.len(), 3);
        assert!(genus2.boundary.is_empty());

        let torus = plan_decomposition(Signature::new(1, 0, 0, 1), &[]).unwrap();
        assert_eq!(torus.pants_count(), 1);
        assert_eq!(torus.gluings.len(), 1);
        assert_eq!(torus.gluings[0].from.pants, torus.gluings[0].to.pants);
        assert_eq!(torus.cusps.len(), 1);

        let cc = plan_decomposition(Signature::new(0, 3, 0, 0), &[]).unwrap();
        assert_eq!(cc.pants_count(), 1);
        assert_eq!(cc.crosscaps.len(), 3);
    }

    #[test]
    fn plan_errors() {
        assert_eq!(
            plan_decomposition(Signature::new(1, 0, 0, 0), &[]),
            Err(PantsError::NotHyperbolizable { chi: 0 })
        );
        assert_eq!(
            plan_decomposition(Signature::new(0, 0, 3, 0), &[1.0]),
            Err(PantsError::LengthCountMismatch { expected: 3, got: 1 })
        );
        assert_eq!(
            plan_decomposition(Signature::new(0, 0, 3, 0), &[1.0, 0.0, 1.0]),
            Err(PantsError::NonpositiveBoundaryLength(0.0))
        );
    }

    #[test]
    fn realize_examples() {
        let genus2 = plan_decomposition(Signature::new(2, 0, 0, 0), &[]).unwrap();
        let summary = realize(&genus2).unwrap();
        assert!((summary.total_area - 4.0 * PI).abs() < 1e-12);
        assert!(summary.valid);

        let ideal = plan_decomposition(Signature::new(0, 0, 0, 3), &[]).unwrap();
        assert!((realize(&ideal).unwrap().total_area - 2.0 * PI).abs() < 1e-12);

        let mut broken = genus2.clone();
        broken.pants[0] = CuffLengths::new(1.0, 1.0, 2.5).unwrap();
        assert!(matches!(realize(&broken), Err(PantsError::LengthMismatch { .. })));
    }

    #[test]
    fn gluing_override_keeps_plan_valid() {
        let mut plan = plan_decomposition(Signature::new(2, 0, 1, 0), &[0.5]).unwrap();
        plan.set_gluing(0, 2.5, 0.3).unwrap();
        let s = realize(&plan).unwrap();
        assert!(s.valid);
        assert_eq!(plan.gluings[0].twist, 0.3);
    }
}
