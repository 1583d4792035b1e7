use alloc::string::String;
use alloc::vec::Vec;

use super::{GroupError, GroupWord, Letter};
use crate::poincare::{DiskPoint, MobiusIsometry};
use crate::tol::TOL_RELATOR;

/// Default cap on the number of words any enumeration may produce.
pub const DEFAULT_WORD_CAP: u64 = 5_000_000;

/// A finitely generated group of disk isometries.
///
/// Discreteness is taken on trust; the relators are only checked to
/// evaluate to `±I`.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupRep {
    label: String,
    generators: Vec<MobiusIsometry>,
    relators: Vec<GroupWord>,
    // indexed by Letter::code
    letter_maps: Vec<MobiusIsometry>,
}

impl GroupRep {
    pub fn new(
        label: impl Into<String>,
        generators: Vec<MobiusIsometry>,
        relators: Vec<GroupWord>,
    ) -> Result<Self, GroupError> {
        if generators.is_empty() {
            return Err(GroupError::NoGenerators);
        }
        if generators.len() > usize::from(u16::MAX) {
            return Err(GroupError::TooManyGenerators);
        }
        let letter_maps = generators
            .iter()
            .flat_map(|g| [*g, g.inverse()])
            .collect();
        let rep = Self {
            label: label.into(),
            generators,
            relators,
            letter_maps,
        };
        for r in &rep.relators {
            let residual = rep.evaluate(r)?.distance_to(&MobiusIsometry::IDENTITY);
            if residual.is_nan() || residual > TOL_RELATOR {
                return Err(GroupError::RelatorFails {
                    relator: r.to_string_compact(),
                    residual,
                });
            }
        }
        Ok(rep)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[MobiusIsometry] {
        &self.generators
    }

    pub fn relators(&self) -> &[GroupWord] {
        &self.relators
    }

    pub fn letter_map(&self, l: Letter) -> Result<MobiusIsometry, GroupError> {
        self.letter_maps
            .get(l.code())
            .copied()
            .ok_or(GroupError::IndexOutOfRange {
                index: l.generator(),
                rank: self.rank(),
            })
    }

    /// The isometry `g_{l₁} ∘ g_{l₂} ∘ … ∘ g_{lₙ}` of a word `l₁ l₂ … lₙ`.
    pub fn evaluate(&self, w: &GroupWord) -> Result<MobiusIsometry, GroupError> {
        w.letters()
            .iter()
            .try_fold(MobiusIsometry::IDENTITY, |acc, l| {
                Ok(acc.compose(&self.letter_map(*l)?))
            })
    }

    /// The representation `x ↦ g x g⁻¹` of the same abstract group.
    pub fn conjugated(&self, g: &MobiusIsometry) -> Result<GroupRep, GroupError> {
        GroupRep::new(
            self.label.clone(),
            self.generators.iter().map(|m| m.conjugate_by(g)).collect(),
            self.relators.clone(),
        )
    }

    /// Walks every reduced word of length `≤ n` depth-first in lexicographic
    /// order, handing each word with its evaluation to `visit`. Shared
    /// prefixes are evaluated once.
    pub(crate) fn walk_words<F>(&self, n: usize, mut visit: F) -> Result<(), GroupError>
    where
        F: FnMut(&[Letter], &MobiusIsometry) -> Result<(), GroupError>,
    {
        let letters = 2 * self.rank();
        let mut word: Vec<Letter> = Vec::with_capacity(n);
        let mut maps: Vec<MobiusIsometry> = Vec::with_capacity(n + 1);
        maps.push(MobiusIsometry::IDENTITY);
        visit(&word, &maps[0])?;
        if n == 0 {
            return Ok(());
        }
        // next[d] is the next letter code to try at depth d
        let mut next: Vec<usize> = alloc::vec![0; n + 1];
        let mut depth = 0;
        loop {
            if next[depth] == letters {
                if depth == 0 {
                    return Ok(());
                }
                depth -= 1;
                word.pop();
                maps.pop();
                continue;
            }
            let l = Letter::from_code(next[depth]);
            next[depth] += 1;
            if word.last() == Some(&l.inverse()) {
                continue;
            }
            let m = maps[depth].compose(&self.letter_maps[l.code()]);
            word.push(l);
            maps.push(m);
            visit(&word, &m)?;
            if depth + 1 < n {
                depth += 1;
                next[depth] = 0;
            } else {
                word.pop();
                maps.pop();
            }
        }
    }
}

/// Number of reduced words of length `≤ n` in a free group of the given
/// rank, or `None` on overflow.
pub fn count_reduced_words(rank: usize, n: usize) -> Option<u64> {
    if rank == 0 {
        return Some(1);
    }
    let k = 2 * rank as u64;
    let mut total: u64 = 1;
    let mut level: u64 = k;
    for i in 1..=n {
        if i > 1 {
            level = level.checked_mul(k - 1)?;
        }
        total = total.checked_add(level)?;
    }
    Some(total)
}

pub(crate) fn check_budget(rank: usize, n: usize, cap: u64) -> Result<u64, GroupError> {
    match count_reduced_words(rank, n) {
        Some(c) if c <= cap => Ok(c),
        _ => Err(GroupError::BudgetExceeded { n, cap }),
    }
}

/// Reduced words of length `≤ n` in shortlex order, using the default cap.
pub fn enumerate_words(rep: &GroupRep, n: usize) -> Result<Vec<GroupWord>, GroupError> {
    enumerate_words_capped(rep.rank(), n, DEFAULT_WORD_CAP)
}

pub fn enumerate_words_capped(rank: usize, n: usize, cap: u64) -> Result<Vec<GroupWord>, GroupError> {
    let total = check_budget(rank, n, cap)?;
    let mut out = Vec::with_capacity(total as usize);
    out.push(GroupWord::identity());
    let mut level_start = 0;
    for _ in 0..n {
        let level_end = out.len();
        for i in level_start..level_end {
            for code in 0..2 * rank {
                let l = Letter::from_code(code);
                let w = &out[i];
                if w.letters().last() == Some(&l.inverse()) {
                    continue;
                }
                let ext = GroupWord::from_letters(w.letters().iter().copied().chain([l]));
                out.push(ext);
            }
        }
        level_start = level_end;
    }
    Ok(out)
}

/// Orbit of a basepoint under all reduced words of length `≤ n`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitSample {
    pub basepoint: DiskPoint,
    pub max_word_length: usize,
    /// One entry per reduced word, in shortlex order.
    pub points: Vec<(GroupWord, DiskPoint)>,
}

pub fn orbit(rep: &GroupRep, base: DiskPoint, n: usize) -> Result<OrbitSample, GroupError> {
    orbit_capped(rep, base, n, DEFAULT_WORD_CAP)
}

pub fn orbit_capped(
    rep: &GroupRep,
    base: DiskPoint,
    n: usize,
    cap: u64,
) -> Result<OrbitSample, GroupError> {
    let words = enumerate_words_capped(rep.rank(), n, cap)?;
    let points = words
        .into_iter()
        .map(|w| {
            let p = rep.evaluate(&w)?.apply(base)?;
            Ok((w, p))
        })
        .collect::<Result<Vec<_>, GroupError>>()?;
    Ok(OrbitSample {
        basepoint: base,
        max_word_length: n,
        points,
    })
}
