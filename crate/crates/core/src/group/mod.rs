//! Finitely generated groups of disk isometries and finite samples of their
//! limit sets.

mod catalog;
mod limit;
mod rep;
mod word;

pub use catalog::{isometric_circle, octagon_group, punctured_torus_group, schottky_rank2};
pub use limit::{
    circular_gaps, gap_profile, limit_sample, max_angular_gap, EndpointSample, LimitSampler,
    SampleMode,
};
pub use rep::{
    count_reduced_words, enumerate_words, enumerate_words_capped, orbit, orbit_capped, GroupRep,
    OrbitSample, DEFAULT_WORD_CAP,
};
pub use word::{GroupWord, Letter};

use alloc::string::String;
use thiserror::Error;

use crate::poincare::GeometryError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GroupError {
    #[error("a group needs at least one generator")]
    NoGenerators,
    #[error("too many generators")]
    TooManyGenerators,
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("relator {relator} has residual {residual}")]
    RelatorFails { relator: String, residual: f64 },
    #[error("word enumeration up to length {n} exceeds the cap of {cap} words")]
    BudgetExceeded { n: usize, cap: u64 },
    #[error("no word produced a sample point")]
    EmptySample,
    #[error("isometric circles overlap; the ping-pong condition fails")]
    CirclesOverlap,
    #[error("invalid letter {0:?} in word")]
    BadWord(char),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}
