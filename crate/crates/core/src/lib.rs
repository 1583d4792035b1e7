//! Computational hyperbolic surface geometry.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * [`poincare`]: points, geodesics, half planes and isometries of the
//!   Poincaré disk, with the elliptic/parabolic/hyperbolic trichotomy.
//! * [`group`]: finitely generated groups of disk isometries, reduced words,
//!   orbits and finite samples of limit sets.
//! * [`surface`]: Euler characteristic, crosscap normal form, doubling and the
//!   standard/nonstandard classifier for surfaces.
//! * [`pants`]: generalized pairs of pants and pants-decomposition plans.
//! * [`boundary`]: free-group automorphisms and the circle maps they induce at
//!   infinity, with an isotopy-to-identity detector.
//!
//! All values are immutable once built and every operation is a pure
//! function, so everything here is safe to share across threads.

#![no_std]

extern crate alloc;

pub mod boundary;
pub mod group;
pub mod pants;
pub mod poincare;
pub mod surface;
pub mod tol;

pub use boundary::{
    continuity_profile, induced_boundary_sample, is_boundary_identity, order_check,
    BoundaryError, CircleMapPair, CircleMapSample, ExtensionReport, FreeAutomorphism,
    IdentityReport, OrderVerdict, OrderViolation,
};
pub use group::{
    enumerate_words, gap_profile, limit_sample, max_angular_gap, octagon_group, orbit,
    punctured_torus_group, schottky_rank2, EndpointSample, GroupError, GroupRep, GroupWord,
    Letter, OrbitSample, SampleMode,
};
pub use pants::{
    build_pants, plan_decomposition, realize, CuffLengths, CuffSlot, Gluing, MetricSummary,
    PantsDecompositionPlan, PantsError, PantsGeometry, Seam,
};
pub use poincare::{
    euclidean_diameter, hyp_distance, translation_along, DiskPoint, Geodesic, GeometryError,
    HalfPlane, IdealPoint, IsometryClass, MobiusIsometry, Point, Side,
};
pub use surface::{
    canonicalize, double, euler_characteristic, is_standard, thirteen_list, Chi,
    NonstandardSurface, Signature, StandardReason, StandardnessVerdict, SurfaceDescription,
    SurfaceError,
};
