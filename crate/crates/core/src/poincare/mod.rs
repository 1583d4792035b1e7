//! The Poincaré disk: the open unit disk with the metric `2|dz| / (1 − |z|²)`
//! together with its circle at infinity.
//!
//! Interior points are [`DiskPoint`]s, points at infinity are [`IdealPoint`]s
//! stored as angles in `[0, 2π)`. Isometries are [`MobiusIsometry`] values in
//! SU(1,1) form, optionally followed by complex conjugation for the
//! orientation-reversing ones.

mod geodesic;
mod mobius;
mod point;

pub use geodesic::{euclidean_diameter, translation_along, Geodesic, GeodesicShape, HalfPlane, Side};
pub use mobius::{Actable, IsometryClass, MobiusIsometry};
pub use point::{hyp_distance, DiskPoint, IdealPoint, Point};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("point ({re}, {im}) is not inside the open unit disk")]
    OutsideDisk { re: f64, im: f64 },
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("matrix entries violate |a|^2 - |b|^2 = 1 (got {det})")]
    NotUnimodular { det: f64 },
    #[error("numeric failure: {0}")]
    NumericFailure(&'static str),
    #[error("|Re a| = {trace_half} lies in the parabolic band but the map is too close to the identity to classify")]
    AmbiguousClass { trace_half: f64 },
    #[error("the identity has no isolated fixed points")]
    IdentityInput,
    #[error("operation needs an orientation-preserving isometry")]
    OrientationReversing,
    #[error("isometry is not hyperbolic")]
    NotHyperbolic,
    #[error("the two points coincide")]
    CoincidentPoints,
    #[error("geodesic endpoints coincide")]
    DegenerateGeodesic,
    #[error("translation length must be positive (got {0})")]
    NonpositiveLength(f64),
    #[error("empty point set")]
    EmptySet,
}
