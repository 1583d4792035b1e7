//! The circle-at-infinity shadow of surface automorphisms.
//!
//! A surface homeomorphism is represented by the automorphism it induces on
//! the free group of a [`GroupRep`]. Its lift acts on the circle at infinity,
//! and on fixed points of group elements that action is computable: the
//! attracting fixed point of `w` goes to the attracting fixed point of `φ(w)`.
//! [`induced_boundary_sample`] records that map on finitely many points,
//! [`order_check`] and [`continuity_profile`] test it, and
//! [`is_boundary_identity`] asks whether some choice of lift (a composition
//! with a deck transformation) makes it the identity.

mod automorphism;
mod sample;

pub use automorphism::FreeAutomorphism;
pub use sample::{
    continuity_profile, image_pair, induced_boundary_sample, is_boundary_identity, order_check,
    BoundarySampler, CircleMapPair, CircleMapSample, ExtensionReport, IdentityReport,
    OrderVerdict, OrderViolation, ViolationKind, DEFAULT_IDENTITY_TOL, DEFAULT_INNER_DEPTH,
};

use thiserror::Error;

use crate::group::GroupError;
use crate::poincare::GeometryError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundaryError {
    #[error("no sampled word has hyperbolic image")]
    EmptySample,
    #[error("sample is not cyclically monotone: {0:?}")]
    OrderViolation(OrderViolation),
    #[error("need at least {needed} sample pairs, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("{skipped} of {considered} words had non-hyperbolic images")]
    TooManySkipped { skipped: usize, considered: usize },
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("word uses a generator outside rank {rank}")]
    GeneratorOutOfRange { rank: usize },
    #[error("images do not form a basis of the free group")]
    NotAnAutomorphism,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}
