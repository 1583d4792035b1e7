use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::TAU;

use super::{BoundaryError, FreeAutomorphism};
use crate::group::{enumerate_words_capped, GroupRep, GroupWord, DEFAULT_WORD_CAP};
use crate::poincare::{IdealPoint, IsometryClass, MobiusIsometry};
use crate::tol::TOL_ANGLE;

/// Default angular tolerance for [`is_boundary_identity`].
pub const DEFAULT_IDENTITY_TOL: f64 = 1e-3;
/// Default longest inner-correction word for [`is_boundary_identity`].
pub const DEFAULT_INNER_DEPTH: usize = 3;

#[derive(Debug, Clone, PartialEq)]
pub struct CircleMapPair {
    pub theta_in: IdealPoint,
    pub theta_out: IdealPoint,
    pub word: GroupWord,
}

/// A boundary map known on finitely many points, sorted by `theta_in`.
#[derive(Debug, Clone, PartialEq)]
pub struct CircleMapSample {
    pairs: Vec<CircleMapPair>,
    considered: usize,
    skipped: usize,
    merged: usize,
}

impl CircleMapSample {
    /// Sorts the pairs by input angle and merges inputs closer than
    /// [`crate::tol::TOL_ANGLE`], keeping the shortlex-first word.
    pub fn from_pairs(mut pairs: Vec<CircleMapPair>) -> Self {
        pairs.sort_by(|x, y| {
            x.theta_in
                .theta()
                .partial_cmp(&y.theta_in.theta())
                .unwrap_or(Ordering::Equal)
                .then_with(|| x.word.shortlex_cmp(&y.word))
        });
        let mut kept: Vec<CircleMapPair> = Vec::with_capacity(pairs.len());
        let mut last = f64::NEG_INFINITY;
        for p in pairs {
            let theta = p.theta_in.theta();
            match kept.last_mut() {
                Some(prev) if theta - last <= TOL_ANGLE => {
                    if p.word.shortlex_cmp(&prev.word) == Ordering::Less {
                        *prev = p;
                    }
                }
                _ => kept.push(p),
            }
            last = theta;
        }
        while kept.len() > 1 {
            let first = kept[0].theta_in.theta();
            let last = kept[kept.len() - 1].theta_in.theta();
            if first + TAU - last > TOL_ANGLE {
                break;
            }
            if let Some(p) = kept.pop() {
                if p.word.shortlex_cmp(&kept[0].word) == Ordering::Less {
                    kept[0] = p;
                }
            }
        }
        let considered = kept.len();
        Self {
            pairs: kept,
            considered,
            skipped: 0,
            merged: 0,
        }
    }

    // Merges input-adjacent pairs whose outputs are closer than TOL_ANGLE,
    // keeping the shortlex-first word. A strongly contracting map squeezes
    // distinct sampled points below the angular resolution.
    fn merge_coincident_outputs(&mut self) {
        let mut kept: Vec<CircleMapPair> = Vec::with_capacity(self.pairs.len());
        for p in self.pairs.drain(..) {
            match kept.last_mut() {
                Some(prev) if prev.theta_out.angular_distance(p.theta_out) <= TOL_ANGLE => {
                    if p.word.shortlex_cmp(&prev.word) == Ordering::Less {
                        *prev = p;
                    }
                    self.merged += 1;
                }
                _ => kept.push(p),
            }
        }
        while kept.len() > 1 && kept[0].theta_out.angular_distance(kept[kept.len() - 1].theta_out) <= TOL_ANGLE {
            if let Some(p) = kept.pop() {
                if p.word.shortlex_cmp(&kept[0].word) == Ordering::Less {
                    kept[0] = p;
                }
            }
            self.merged += 1;
        }
        self.pairs = kept;
    }

    pub fn pairs(&self) -> &[CircleMapPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Words examined while building the sample.
    pub fn considered(&self) -> usize {
        self.considered
    }

    /// Words dropped because a side was not hyperbolic.
    pub fn skipped(&self) -> usize {
        self.skipped
    }

    /// Pairs dropped because their output coincided with a neighbour's.
    pub fn merged(&self) -> usize {
        self.merged
    }

    /// The pair whose provenance word is `w`, if sampled.
    pub fn lookup(&self, w: &GroupWord) -> Option<&CircleMapPair> {
        self.pairs.iter().find(|p| p.word == *w)
    }

    /// Post-composes every output with `f`.
    pub fn map_outputs<F>(&self, mut f: F) -> Result<Self, BoundaryError>
    where
        F: FnMut(IdealPoint) -> Result<IdealPoint, BoundaryError>,
    {
        let pairs = self
            .pairs
            .iter()
            .map(|p| {
                Ok(CircleMapPair {
                    theta_in: p.theta_in,
                    theta_out: f(p.theta_out)?,
                    word: p.word.clone(),
                })
            })
            .collect::<Result<Vec<_>, BoundaryError>>()?;
        Ok(Self { pairs, ..*self })
    }

    /// Replaces the outputs by their reflections `θ ↦ −θ`.
    pub fn reflected(&self) -> Self {
        let pairs = self
            .pairs
            .iter()
            .map(|p| CircleMapPair {
                theta_out: p.theta_out.conj(),
                ..p.clone()
            })
            .collect();
        Self { pairs, ..*self }
    }

    /// Largest angular distance between input and output.
    pub fn max_deviation(&self) -> f64 {
        self.pairs
            .iter()
            .map(|p| p.theta_in.angular_distance(p.theta_out))
            .fold(0.0, f64::max)
    }
}

/// Sampling parameters for [`induced_boundary_sample`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundarySampler {
    /// Largest tolerated fraction of words with a non-hyperbolic side.
    pub max_skip_fraction: f64,
    pub word_cap: u64,
}

impl Default for BoundarySampler {
    fn default() -> Self {
        Self {
            max_skip_fraction: 0.5,
            word_cap: DEFAULT_WORD_CAP,
        }
    }
}

/// Attracting fixed points of `evaluate(w)` and `evaluate(φ(w))`, or `None`
/// when either is not hyperbolic.
pub fn image_pair(
    rep: &GroupRep,
    phi: &FreeAutomorphism,
    w: &GroupWord,
) -> Result<Option<(IdealPoint, IdealPoint)>, BoundaryError> {
    let attracting = |m: MobiusIsometry| -> Result<Option<IdealPoint>, BoundaryError> {
        match m.classify() {
            Ok(IsometryClass::Hyperbolic) => Ok(Some(m.hyperbolic_fixed_points()?.0)),
            _ => Ok(None),
        }
    };
    let source = attracting(rep.evaluate(w)?)?;
    let image = attracting(rep.evaluate(&phi.apply(w)?)?)?;
    Ok(source.zip(image))
}

impl BoundarySampler {
    pub fn sample(
        &self,
        rep: &GroupRep,
        phi: &FreeAutomorphism,
        n: usize,
    ) -> Result<CircleMapSample, BoundaryError> {
        if phi.rank() != rep.rank() {
            return Err(BoundaryError::RankMismatch {
                expected: rep.rank(),
                got: phi.rank(),
            });
        }
        let mut considered = 0;
        let mut skipped = 0;
        let mut raw = Vec::new();
        for w in enumerate_words_capped(rep.rank(), n, self.word_cap)? {
            if w.is_empty() || !w.is_conjugacy_representative() {
                continue;
            }
            considered += 1;
            match image_pair(rep, phi, &w)? {
                Some((theta_in, theta_out)) => raw.push(CircleMapPair {
                    theta_in,
                    theta_out,
                    word: w,
                }),
                None => skipped += 1,
            }
        }
        if raw.is_empty() {
            return Err(BoundaryError::EmptySample);
        }
        if skipped as f64 > self.max_skip_fraction * considered as f64 {
            return Err(BoundaryError::TooManySkipped {
                skipped,
                considered,
            });
        }
        let mut sample = CircleMapSample::from_pairs(raw);
        sample.considered = considered;
        sample.skipped = skipped;
        sample.merge_coincident_outputs();
        if sample.len() >= 3 {
            if let OrderVerdict::Violation(v) = order_check(&sample)? {
                return Err(BoundaryError::OrderViolation(v));
            }
        }
        Ok(sample)
    }
}

/// Boundary map of `φ` on the attracting fixed points of one cyclically
/// reduced word per conjugacy class, up to length `n`.
pub fn induced_boundary_sample(
    rep: &GroupRep,
    phi: &FreeAutomorphism,
    n: usize,
) -> Result<CircleMapSample, BoundaryError> {
    BoundarySampler::default().sample(rep, phi, n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    /// Two cyclically adjacent outputs coincide.
    Degenerate,
    /// A consecutive triple turns the other way from the first one.
    Inconsistent,
    /// Every triple agrees but the outputs wind around the circle this many times.
    Winding(i64),
}

/// Where the cyclic order broke: sample indices of the offending triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrderViolation {
    pub indices: [usize; 3],
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderVerdict {
    Preserving,
    Reversing,
    Violation(OrderViolation),
}

// +1 when a → b → c is counterclockwise, -1 when clockwise, 0 on a repeat.
fn turn(a: IdealPoint, b: IdealPoint, c: IdealPoint) -> i8 {
    let ab = a.ccw_to(b);
    let ac = a.ccw_to(c);
    if ab <= TOL_ANGLE || ac <= TOL_ANGLE || b.ccw_to(c) <= TOL_ANGLE {
        0
    } else if ab < ac {
        1
    } else {
        -1
    }
}

/// Scans all cyclically consecutive output triples, then checks that the
/// outputs go around the circle exactly once.
pub fn order_check(s: &CircleMapSample) -> Result<OrderVerdict, BoundaryError> {
    let n = s.len();
    if n < 3 {
        return Err(BoundaryError::TooFewPoints { needed: 3, got: n });
    }
    let out = |i: usize| s.pairs[i % n].theta_out;
    let mut sign = 0i8;
    for i in 0..n {
        let indices = [i, (i + 1) % n, (i + 2) % n];
        let t = turn(out(i), out(i + 1), out(i + 2));
        let kind = if t == 0 {
            Some(ViolationKind::Degenerate)
        } else if sign != 0 && t != sign {
            Some(ViolationKind::Inconsistent)
        } else {
            None
        };
        if let Some(kind) = kind {
            return Ok(OrderVerdict::Violation(OrderViolation { indices, kind }));
        }
        sign = t;
    }
    let total: f64 = (0..n)
        .map(|i| {
            if sign > 0 {
                out(i).ccw_to(out(i + 1))
            } else {
                out(i + 1).ccw_to(out(i))
            }
        })
        .sum();
    let winding = libm::round(total / TAU) as i64;
    if winding != 1 {
        return Ok(OrderVerdict::Violation(OrderViolation {
            indices: [0, 1 % n, 2 % n],
            kind: ViolationKind::Winding(winding),
        }));
    }
    Ok(if sign > 0 {
        OrderVerdict::Preserving
    } else {
        OrderVerdict::Reversing
    })
}

/// Gaps between cyclically consecutive inputs and the matching output gaps,
/// measured in the direction the map travels.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtensionReport {
    pub orientation: OrderVerdict,
    /// `(input gap, image gap)` from pair `i` to pair `i + 1`.
    pub gaps: Vec<(f64, f64)>,
    pub max_gap_in: f64,
    pub max_image_gap: f64,
}

pub fn continuity_profile(s: &CircleMapSample) -> Result<ExtensionReport, BoundaryError> {
    let n = s.len();
    if n < 4 {
        return Err(BoundaryError::TooFewPoints { needed: 4, got: n });
    }
    let orientation = order_check(s)?;
    if let OrderVerdict::Violation(v) = orientation {
        return Err(BoundaryError::OrderViolation(v));
    }
    let gaps: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let (p, q) = (&s.pairs[i], &s.pairs[(i + 1) % n]);
            let image = match orientation {
                OrderVerdict::Reversing => q.theta_out.ccw_to(p.theta_out),
                _ => p.theta_out.ccw_to(q.theta_out),
            };
            (p.theta_in.ccw_to(q.theta_in), image)
        })
        .collect();
    let max_gap_in = gaps.iter().map(|g| g.0).fold(0.0, f64::max);
    let max_image_gap = gaps.iter().map(|g| g.1).fold(0.0, f64::max);
    Ok(ExtensionReport {
        orientation,
        gaps,
        max_gap_in,
        max_image_gap,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub identity: bool,
    /// Word `w` minimising the deviation of `evaluate(w) ∘ (sampled map)`
    /// from the identity; shortlex-first among equal minima.
    pub best_inner: GroupWord,
    pub residual: f64,
    /// Every candidate whose deviation is within twice the residual.
    pub near_minimizers: Vec<GroupWord>,
    pub sample_size: usize,
}

/// Searches inner corrections by words of length `≤ m` for one that brings
/// the sampled boundary map within `tol` of the identity.
pub fn is_boundary_identity(
    rep: &GroupRep,
    phi: &FreeAutomorphism,
    n: usize,
    m: usize,
    tol: f64,
) -> Result<IdentityReport, BoundaryError> {
    let s = induced_boundary_sample(rep, phi, n)?;
    let candidates = enumerate_words_capped(rep.rank(), m, DEFAULT_WORD_CAP)?;
    let mut deviations = Vec::with_capacity(candidates.len());
    for w in &candidates {
        let g = rep.evaluate(w)?;
        let mut dev: f64 = 0.0;
        for p in s.pairs() {
            dev = dev.max(g.apply(p.theta_out)?.angular_distance(p.theta_in));
        }
        deviations.push(dev);
    }
    // candidates are in shortlex order, so the first strict minimum wins ties
    let mut best = 0;
    for (i, d) in deviations.iter().enumerate() {
        if *d < deviations[best] {
            best = i;
        }
    }
    let residual = deviations[best];
    let near_minimizers = candidates
        .iter()
        .zip(&deviations)
        .filter(|(_, d)| **d <= 2.0 * residual)
        .map(|(w, _)| w.clone())
        .collect();
    Ok(IdentityReport {
        identity: residual < tol,
        best_inner: candidates[best].clone(),
        residual,
        near_minimizers,
        sample_size: s.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{octagon_group, punctured_torus_group, schottky_rank2};

    fn w(s: &str) -> GroupWord {
        GroupWord::parse(s).unwrap()
    }

    fn sample_of(pairs: &[(f64, f64)]) -> CircleMapSample {
        CircleMapSample::from_pairs(
            pairs
                .iter()
                .enumerate()
                .map(|(i, (a, b))| CircleMapPair {
                    theta_in: IdealPoint::new(*a).unwrap(),
                    theta_out: IdealPoint::new(*b).unwrap(),
                    word: GroupWord::generator(i as u16),
                })
                .collect(),
        )
    }

    #[test]
    fn identity_sample_is_exact() {
        let rep = octagon_group();
        let s = induced_boundary_sample(&rep, &FreeAutomorphism::identity(4), 3).unwrap();
        assert!(s.len() > 50);
        assert!(s.max_deviation() < 1e-10);
        assert_eq!(order_check(&s).unwrap(), OrderVerdict::Preserving);
        assert_eq!(order_check(&s.reflected()).unwrap(), OrderVerdict::Reversing);
        let r = continuity_profile(&s).unwrap();
        for (a, b) in &r.gaps {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn inner_automorphism_matches_mobius_action() {
        let rep = octagon_group();
        let g = w("Ab");
        let phi = FreeAutomorphism::inner(4, &g).unwrap();
        let s = induced_boundary_sample(&rep, &phi, 3).unwrap();
        let m = rep.evaluate(&g).unwrap();
        for p in s.pairs() {
            assert!(m.apply(p.theta_in).unwrap().angular_distance(p.theta_out) < 1e-6);
        }
        let r = is_boundary_identity(&rep, &FreeAutomorphism::inner(4, &w("A")).unwrap(), 3, 1, 1e-3)
            .unwrap();
        assert!(r.identity);
        assert_eq!(r.best_inner, w("a"));
        assert!(r.residual < 1e-6);
    }

    #[test]
    fn twist_is_not_boundary_identity() {
        let rep = punctured_torus_group();
        let twist = FreeAutomorphism::from_images(alloc::vec![w("AB"), w("B")]).unwrap();
        let s = induced_boundary_sample(&rep, &twist, 4).unwrap();
        assert!(s.skipped() > 0);
        let r = is_boundary_identity(&rep, &twist, 4, 3, 0.01).unwrap();
        assert!(!r.identity);
        assert!(r.residual > 0.05, "residual {}", r.residual);
    }

    #[test]
    fn identity_search_prefers_empty_word() {
        let rep = schottky_rank2(3.0).unwrap();
        let r = is_boundary_identity(&rep, &FreeAutomorphism::identity(2), 4, 2, 1e-3).unwrap();
        assert!(r.identity);
        assert_eq!(r.best_inner, GroupWord::identity());
        assert!(r.residual < 1e-10);
        assert_eq!(r.near_minimizers, alloc::vec![GroupWord::identity()]);
    }

    #[test]
    fn swapped_outputs_are_a_violation() {
        let s = sample_of(&[(0.0, 0.0), (1.0, 2.0), (2.0, 1.0), (3.0, 3.0), (4.0, 4.0)]);
        assert!(matches!(
            order_check(&s).unwrap(),
            OrderVerdict::Violation(OrderViolation {
                kind: ViolationKind::Inconsistent,
                ..
            })
        ));
        let twice = sample_of(&[(0.0, 0.0), (1.0, 2.0), (2.0, 4.0), (3.0, 6.0), (4.0, 1.5), (5.0, 3.5)]);
        assert!(matches!(
            order_check(&twice).unwrap(),
            OrderVerdict::Violation(OrderViolation {
                kind: ViolationKind::Winding(2),
                ..
            })
        ));
        assert_eq!(
            order_check(&sample_of(&[(0.0, 0.0), (1.0, 1.0)])),
            Err(BoundaryError::TooFewPoints { needed: 3, got: 2 })
        );
        assert!(matches!(
            continuity_profile(&sample_of(&[(0.0, 0.0), (1.0, 1.0), (2.0, 2.0)])),
            Err(BoundaryError::TooFewPoints { needed: 4, got: 3 })
        ));
    }

    #[test]
    fn rank_mismatch_is_reported() {
        let rep = octagon_group();
        assert!(matches!(
            induced_boundary_sample(&rep, &FreeAutomorphism::identity(2), 2),
            Err(BoundaryError::RankMismatch { .. })
        ));
    }
}
