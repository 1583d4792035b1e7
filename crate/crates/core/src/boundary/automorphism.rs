use alloc::vec::Vec;

use super::BoundaryError;
use crate::group::{GroupWord, Letter};

/// An automorphism of the free group on `rank` generators, stored as the
/// images of the generators together with the images under its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeAutomorphism {
    images: Vec<GroupWord>,
    inverse_images: Vec<GroupWord>,
}

/// An elementary Nielsen move `uᵢ ← uᵢ uⱼ^±` (right) or `uᵢ ← uⱼ^± uᵢ` (left).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Move {
    i: usize,
    j: usize,
    inverse: bool,
    left: bool,
}

impl Move {
    fn all(rank: usize) -> impl Iterator<Item = Move> {
        (0..rank).flat_map(move |i| {
            (0..rank).filter(move |&j| j != i).flat_map(move |j| {
                [(false, false), (true, false), (false, true), (true, true)]
                    .into_iter()
                    .map(move |(inverse, left)| Move { i, j, inverse, left })
            })
        })
    }

    fn apply_to(&self, u: &mut [GroupWord]) {
        let other = if self.inverse {
            u[self.j].inverse()
        } else {
            u[self.j].clone()
        };
        u[self.i] = if self.left {
            other.concat(&u[self.i])
        } else {
            u[self.i].concat(&other)
        };
    }

    fn new_length(&self, u: &[GroupWord]) -> usize {
        let mut probe = u.to_vec();
        self.apply_to(&mut probe);
        probe[self.i].len()
    }
}

fn total_length(u: &[GroupWord]) -> usize {
    u.iter().map(GroupWord::len).sum()
}

// The first move with the largest strict length drop, if any.
fn best_reducing_move(u: &[GroupWord]) -> Option<Move> {
    let mut best: Option<(usize, Move)> = None;
    for mv in Move::all(u.len()) {
        let before = u[mv.i].len();
        let after = mv.new_length(u);
        if after < before && best.is_none_or(|(drop, _)| before - after > drop) {
            best = Some((before - after, mv));
        }
    }
    best.map(|(_, mv)| mv)
}

/// Inverts a tuple of images by Nielsen reduction: apply length-reducing
/// moves to the images, mirroring them on a tuple that starts at the
/// generators, until the images are a signed permutation of the letters.
fn nielsen_inverse(images: &[GroupWord]) -> Option<Vec<GroupWord>> {
    let rank = images.len();
    let mut u = images.to_vec();
    let mut t: Vec<GroupWord> = (0..rank as u16).map(GroupWord::generator).collect();
    loop {
        if u.iter().any(GroupWord::is_empty) {
            return None;
        }
        if u.iter().all(|w| w.len() == 1) {
            break;
        }
        if let Some(mv) = best_reducing_move(&u) {
            mv.apply_to(&mut u);
            mv.apply_to(&mut t);
            continue;
        }
        // No single move shortens the tuple; allow one length-preserving
        // move in front of a shortening one.
        let total = total_length(&u);
        let mut advanced = false;
        for first in Move::all(rank) {
            let mut u2 = u.clone();
            first.apply_to(&mut u2);
            if total_length(&u2) != total {
                continue;
            }
            if let Some(second) = best_reducing_move(&u2) {
                second.apply_to(&mut u2);
                let mut t2 = t.clone();
                first.apply_to(&mut t2);
                second.apply_to(&mut t2);
                u = u2;
                t = t2;
                advanced = true;
                break;
            }
        }
        if !advanced {
            return None;
        }
    }
    // images ∘ t = σ with σ(xᵢ) = x_{π(i)}^{εᵢ}; so images⁻¹(x_{π(i)}) = t(xᵢ)^{εᵢ}
    let mut inverse: Vec<Option<GroupWord>> = alloc::vec![None; rank];
    for (i, w) in u.iter().enumerate() {
        let l = w.letters()[0];
        let slot = inverse.get_mut(l.generator())?;
        if slot.is_some() {
            return None;
        }
        *slot = Some(if l.is_inverse() { t[i].inverse() } else { t[i].clone() });
    }
    inverse.into_iter().collect()
}

impl FreeAutomorphism {
    /// Checks that the two tuples are mutually inverse.
    pub fn new(images: Vec<GroupWord>, inverse_images: Vec<GroupWord>) -> Result<Self, BoundaryError> {
        let rank = images.len();
        if rank == 0 || inverse_images.len() != rank {
            return Err(BoundaryError::RankMismatch {
                expected: rank,
                got: inverse_images.len(),
            });
        }
        let aut = Self {
            images,
            inverse_images,
        };
        for w in aut.images.iter().chain(aut.inverse_images.iter()) {
            if w.max_generator().is_some_and(|g| g >= rank) {
                return Err(BoundaryError::GeneratorOutOfRange { rank });
            }
        }
        for i in 0..rank as u16 {
            let x = GroupWord::generator(i);
            let forward = aut.apply(&aut.apply_inverse(&x)?)?;
            let backward = aut.apply_inverse(&aut.apply(&x)?)?;
            if forward != x || backward != x {
                return Err(BoundaryError::NotAnAutomorphism);
            }
        }
        Ok(aut)
    }

    /// Builds the automorphism from generator images alone, computing the
    /// inverse by Nielsen reduction.
    pub fn from_images(images: Vec<GroupWord>) -> Result<Self, BoundaryError> {
        let rank = images.len();
        if images.iter().any(|w| w.max_generator().is_some_and(|g| g >= rank)) {
            return Err(BoundaryError::GeneratorOutOfRange { rank });
        }
        let inverse = nielsen_inverse(&images).ok_or(BoundaryError::NotAnAutomorphism)?;
        Self::new(images, inverse)
    }

    pub fn identity(rank: usize) -> Self {
        let gens: Vec<GroupWord> = (0..rank as u16).map(GroupWord::generator).collect();
        Self {
            images: gens.clone(),
            inverse_images: gens,
        }
    }

    /// `x ↦ g x g⁻¹`.
    pub fn inner(rank: usize, g: &GroupWord) -> Result<Self, BoundaryError> {
        let gi = g.inverse();
        let images = (0..rank as u16)
            .map(|i| GroupWord::generator(i).conjugate_by(g))
            .collect();
        let inverse = (0..rank as u16)
            .map(|i| GroupWord::generator(i).conjugate_by(&gi))
            .collect();
        Self::new(images, inverse)
    }

    /// `xᵢ ↦ xᵢ xⱼ^±` (or `xⱼ^± xᵢ` when `left`), other generators fixed.
    pub fn transvection(
        rank: usize,
        i: usize,
        j: usize,
        inverse: bool,
        left: bool,
    ) -> Result<Self, BoundaryError> {
        if i >= rank || j >= rank || i == j {
            return Err(BoundaryError::GeneratorOutOfRange { rank });
        }
        let mv = Move { i, j, inverse, left };
        let undo = Move {
            inverse: !inverse,
            ..mv
        };
        let mut images: Vec<GroupWord> = (0..rank as u16).map(GroupWord::generator).collect();
        let mut inverse_images = images.clone();
        mv.apply_to(&mut images);
        undo.apply_to(&mut inverse_images);
        Self::new(images, inverse_images)
    }

    /// `xᵢ ↦ xᵢ⁻¹`.
    pub fn invert_generator(rank: usize, i: usize) -> Result<Self, BoundaryError> {
        if i >= rank {
            return Err(BoundaryError::GeneratorOutOfRange { rank });
        }
        let mut images: Vec<GroupWord> = (0..rank as u16).map(GroupWord::generator).collect();
        images[i] = images[i].inverse();
        Self::new(images.clone(), images)
    }

    /// Swaps generators `i` and `j`.
    pub fn swap(rank: usize, i: usize, j: usize) -> Result<Self, BoundaryError> {
        if i >= rank || j >= rank {
            return Err(BoundaryError::GeneratorOutOfRange { rank });
        }
        let mut images: Vec<GroupWord> = (0..rank as u16).map(GroupWord::generator).collect();
        images.swap(i, j);
        Self::new(images.clone(), images)
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[GroupWord] {
        &self.images
    }

    pub fn inverse_images(&self) -> &[GroupWord] {
        &self.inverse_images
    }

    fn substitute(table: &[GroupWord], w: &GroupWord) -> Result<GroupWord, BoundaryError> {
        let mut out: Vec<Letter> = Vec::new();
        for l in w.letters() {
            let img = table
                .get(l.generator())
                .ok_or(BoundaryError::GeneratorOutOfRange { rank: table.len() })?;
            if l.is_inverse() {
                out.extend(img.letters().iter().rev().map(Letter::inverse));
            } else {
                out.extend_from_slice(img.letters());
            }
        }
        Ok(GroupWord::from_letters(out))
    }

    pub fn apply(&self, w: &GroupWord) -> Result<GroupWord, BoundaryError> {
        Self::substitute(&self.images, w)
    }

    pub fn apply_inverse(&self, w: &GroupWord) -> Result<GroupWord, BoundaryError> {
        Self::substitute(&self.inverse_images, w)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &FreeAutomorphism) -> Result<Self, BoundaryError> {
        if self.rank() != other.rank() {
            return Err(BoundaryError::RankMismatch {
                expected: self.rank(),
                got: other.rank(),
            });
        }
        let images = other
            .images
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<Vec<_>, _>>()?;
        let inverse_images = self
            .inverse_images
            .iter()
            .map(|w| other.apply_inverse(w))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            images,
            inverse_images,
        })
    }

    pub fn inverse(&self) -> Self {
        Self {
            images: self.inverse_images.clone(),
            inverse_images: self.images.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> GroupWord {
        GroupWord::parse(s).unwrap()
    }

    #[test]
    fn twist_inverse_by_nielsen_reduction() {
        let twist = FreeAutomorphism::from_images(alloc::vec![w("AB"), w("B")]).unwrap();
        assert_eq!(twist.inverse_images(), &[w("Ab"), w("B")]);
        assert_eq!(twist.apply(&w("ABab")).unwrap(), w("ABab"));
    }

    #[test]
    fn longer_basis_is_inverted() {
        // a product of several transvections and a swap
        let images = alloc::vec![w("BAB"), w("BABAB")];
        let phi = FreeAutomorphism::from_images(images).unwrap();
        for i in 0..2 {
            let x = GroupWord::generator(i);
            assert_eq!(phi.apply(&phi.apply_inverse(&x).unwrap()).unwrap(), x);
        }
    }

    #[test]
    fn non_bases_are_rejected() {
        assert_eq!(
            FreeAutomorphism::from_images(alloc::vec![w("A"), w("A")]),
            Err(BoundaryError::NotAnAutomorphism)
        );
        assert_eq!(
            FreeAutomorphism::from_images(alloc::vec![w("AA"), w("B")]),
            Err(BoundaryError::NotAnAutomorphism)
        );
        assert_eq!(
            FreeAutomorphism::new(alloc::vec![w("AB"), w("B")], alloc::vec![w("AB"), w("B")]),
            Err(BoundaryError::NotAnAutomorphism)
        );
        assert_eq!(
            FreeAutomorphism::from_images(alloc::vec![w("C"), w("B")]),
            Err(BoundaryError::GeneratorOutOfRange { rank: 2 })
        );
    }

    #[test]
    fn composition_and_inner() {
        let inner = FreeAutomorphism::inner(2, &w("A")).unwrap();
        assert_eq!(inner.apply(&w("B")).unwrap(), w("ABa"));
        let t = FreeAutomorphism::transvection(2, 0, 1, false, false).unwrap();
        let s = FreeAutomorphism::swap(2, 0, 1).unwrap();
        let ts = t.compose(&s).unwrap();
        // (t ∘ s)(A) = t(B) = B, (t ∘ s)(B) = t(A) = AB
        assert_eq!(ts.images(), &[w("B"), w("AB")]);
        let id = ts.compose(&ts.inverse()).unwrap();
        assert_eq!(id, FreeAutomorphism::identity(2));
        assert!(FreeAutomorphism::new(ts.images().to_vec(), ts.inverse_images().to_vec()).is_ok());
    }
}
