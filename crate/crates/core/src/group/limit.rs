use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::TAU;

use super::rep::{check_budget, DEFAULT_WORD_CAP};
use super::{GroupError, GroupRep, GroupWord};
use crate::poincare::{DiskPoint, IdealPoint, IsometryClass};
use crate::tol::TOL_ANGLE;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SampleMode {
    /// Radial projection of orbit points that come within `δ` of the circle.
    OrbitProjection,
    /// Fixed points of hyperbolic elements given by cyclically reduced words.
    AxisEndpoints,
}

/// Finite sample of the circle at infinity, sorted by angle with
/// near-duplicates (closer than [`TOL_ANGLE`]) merged. Each angle remembers
/// the word it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct EndpointSample {
    mode: SampleMode,
    words: Vec<GroupWord>,
    // (angle, index into words), strictly increasing in angle
    entries: Vec<(IdealPoint, u32)>,
}

impl EndpointSample {
    /// Sorts and deduplicates raw `(angle, word)` pairs.
    pub fn from_pairs(mode: SampleMode, pairs: Vec<(IdealPoint, GroupWord)>) -> Self {
        let mut words = Vec::with_capacity(pairs.len());
        let mut raw = Vec::with_capacity(pairs.len());
        for (angle, w) in pairs {
            raw.push((angle, words.len() as u32));
            words.push(w);
        }
        Self::build(mode, words, raw)
    }

    fn build(mode: SampleMode, words: Vec<GroupWord>, mut raw: Vec<(IdealPoint, u32)>) -> Self {
        raw.sort_by(|x, y| {
            x.0.theta()
                .partial_cmp(&y.0.theta())
                .unwrap_or(Ordering::Equal)
                .then_with(|| words[x.1 as usize].shortlex_cmp(&words[y.1 as usize]))
        });
        // Cluster angles closer than TOL_ANGLE to the previous one; keep the
        // member with the shortlex-smallest word.
        let mut clusters: Vec<(IdealPoint, u32)> = Vec::with_capacity(raw.len());
        let mut last_theta = f64::NEG_INFINITY;
        for (angle, idx) in raw {
            let theta = angle.theta();
            match clusters.last_mut() {
                Some(best) if theta - last_theta <= TOL_ANGLE => {
                    if words[idx as usize].shortlex_cmp(&words[best.1 as usize]) == Ordering::Less {
                        *best = (angle, idx);
                    }
                }
                _ => clusters.push((angle, idx)),
            }
            last_theta = theta;
        }
        // merge across 0 ≡ 2π
        while clusters.len() > 1 {
            let first = clusters[0];
            let last = clusters[clusters.len() - 1];
            if first.0.theta() + TAU - last.0.theta() > TOL_ANGLE {
                break;
            }
            clusters.pop();
            if words[last.1 as usize].shortlex_cmp(&words[first.1 as usize]) == Ordering::Less {
                clusters[0].1 = last.1;
            }
        }
        // drop words nobody references
        let mut remap: Vec<u32> = alloc::vec![u32::MAX; words.len()];
        let mut kept = Vec::with_capacity(clusters.len());
        let mut words: Vec<Option<GroupWord>> = words.into_iter().map(Some).collect();
        for entry in &mut clusters {
            let i = entry.1 as usize;
            if remap[i] == u32::MAX {
                remap[i] = kept.len() as u32;
                kept.push(words[i].take().unwrap_or_default());
            }
            entry.1 = remap[i];
        }
        Self {
            mode,
            words: kept,
            entries: clusters,
        }
    }

    pub fn mode(&self) -> SampleMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn angles(&self) -> impl Iterator<Item = IdealPoint> + '_ {
        self.entries.iter().map(|e| e.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (IdealPoint, &GroupWord)> + '_ {
        self.entries
            .iter()
            .map(move |(a, i)| (*a, &self.words[*i as usize]))
    }
}

/// Limit-set sampling parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitSampler {
    /// Orbit points with `|z| > 1 − delta` are projected to the circle.
    pub delta: f64,
    pub word_cap: u64,
}

impl Default for LimitSampler {
    fn default() -> Self {
        Self {
            delta: 0.2,
            word_cap: DEFAULT_WORD_CAP,
        }
    }
}

impl LimitSampler {
    pub fn sample(
        &self,
        rep: &GroupRep,
        base: DiskPoint,
        n: usize,
        mode: SampleMode,
    ) -> Result<EndpointSample, GroupError> {
        check_budget(rep.rank(), n, self.word_cap)?;
        let mut words = Vec::new();
        let mut raw = Vec::new();
        match mode {
            SampleMode::AxisEndpoints => rep.walk_words(n, |letters, m| {
                let cyclic = match (letters.first(), letters.last()) {
                    (Some(f), Some(l)) => letters.len() == 1 || *f != l.inverse(),
                    _ => false,
                };
                if cyclic && matches!(m.classify(), Ok(IsometryClass::Hyperbolic)) {
                    let (att, rep_pt) = m.hyperbolic_fixed_points()?;
                    let idx = words.len() as u32;
                    words.push(GroupWord::from_letters(letters.iter().copied()));
                    raw.push((att, idx));
                    raw.push((rep_pt, idx));
                }
                Ok(())
            })?,
            SampleMode::OrbitProjection => {
                let threshold = 1.0 - self.delta;
                rep.walk_words(n, |letters, m| {
                    let p = m.apply(base)?;
                    if p.modulus() > threshold {
                        let idx = words.len() as u32;
                        words.push(GroupWord::from_letters(letters.iter().copied()));
                        raw.push((IdealPoint::from_direction(p.z())?, idx));
                    }
                    Ok(())
                })?
            }
        }
        if raw.is_empty() {
            return Err(GroupError::EmptySample);
        }
        Ok(EndpointSample::build(mode, words, raw))
    }
}

/// [`LimitSampler::sample`] with the default `δ = 0.2` and word cap.
pub fn limit_sample(
    rep: &GroupRep,
    base: DiskPoint,
    n: usize,
    mode: SampleMode,
) -> Result<EndpointSample, GroupError> {
    LimitSampler::default().sample(rep, base, n, mode)
}

/// Gaps between cyclically consecutive angles of a sorted list.
pub fn circular_gaps(sorted: &[f64]) -> Vec<f64> {
    match sorted.len() {
        0 => Vec::new(),
        1 => alloc::vec![TAU],
        n => {
            let mut gaps: Vec<f64> = sorted.windows(2).map(|w| w[1] - w[0]).collect();
            gaps.push(sorted[0] + TAU - sorted[n - 1]);
            gaps
        }
    }
}

/// Largest circular gap in the sample; `2π` for a single point.
pub fn max_angular_gap(s: &EndpointSample) -> Result<f64, GroupError> {
    gap_profile(s).map(|g| g[0])
}

/// All circular gaps of the sample, largest first.
pub fn gap_profile(s: &EndpointSample) -> Result<Vec<f64>, GroupError> {
    if s.is_empty() {
        return Err(GroupError::EmptySample);
    }
    let sorted: Vec<f64> = s.angles().map(|a| a.theta()).collect();
    let mut gaps = circular_gaps(&sorted);
    gaps.sort_by(|x, y| y.partial_cmp(x).unwrap_or(Ordering::Equal));
    Ok(gaps)
}
